#include "gradedbloc/kappa.hpp"

#include <stdexcept>

namespace gradedbloc {

KappaFn make_kappa(const FinSubgroup& T, const std::vector<std::pair<Elt, std::int64_t>>& entries) {
  KappaFn k;
  for (const auto& [x, m] : entries) {
    if (m < 0) throw std::invalid_argument("kappa: negative multiplicity");
    if (!T.ambient().contains(x)) throw std::invalid_argument("kappa: coset representative outside the group");
    if (m > 0) k[T.coset_rep(x)] += m;
  }
  return k;
}

std::int64_t kappa_size(const KappaFn& k) {
  std::int64_t s = 0;
  for (const auto& [x, m] : k) s += m;
  return s;
}

std::int64_t kappa_at(const KappaFn& k, const FinSubgroup& T, const Elt& x) {
  auto it = k.find(T.coset_rep(x));
  return it == k.end() ? 0 : it->second;
}

KappaFn kappa_translate(const KappaFn& k, const Elt& g, const FinSubgroup& T) {
  KappaFn out;
  for (const auto& [x, m] : k) out[T.coset_rep(T.ambient().add(x, g))] += m;
  return out;
}

KappaFn kappa_bar(const KappaFn& k, const FinSubgroup& T) {
  KappaFn out;
  for (const auto& [x, m] : k) out[T.coset_rep(T.ambient().neg(x))] += m;
  return out;
}

}  // namespace gradedbloc
