#include <stdexcept>

#include "gradedbloc/classify.hpp"

namespace gradedbloc {

namespace {

bool kappas_match(const std::vector<KappaFn>& lhs, const std::vector<KappaFn>& rhs) { return lhs == rhs; }

std::vector<KappaFn> translate_all(const std::vector<KappaFn>& ks, const Elt& g, const FinSubgroup& T) {
  std::vector<KappaFn> out;
  for (const auto& k : ks) out.push_back(kappa_translate(k, g, T));
  return out;
}

// (g * bar(kappa_{s-i+1}))_i
std::vector<KappaFn> reflect_all(const std::vector<KappaFn>& ks, const Elt& g, const FinSubgroup& T) {
  std::vector<KappaFn> out;
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) out.push_back(kappa_translate(kappa_bar(*it, T), g, T));
  return out;
}

}  // namespace

IsoVerdict iso_decide(const GradingParams& p1, const GradingParams& p2, const BlockProfile& profile,
                      AlgebraKind kind) {
  const int s = profile.s();
  if (static_cast<int>(p1.kappas().size()) != s || static_cast<int>(p2.kappas().size()) != s)
    throw std::invalid_argument("iso_decide: profile mismatch");
  if (!(p1.group == p2.group)) throw std::invalid_argument("iso_decide: the parameters use different groups");
  const AbGroup& G = p1.group;
  IsoVerdict v;
  if (p1.is_type2() != p2.is_type2()) {
    v.reason = "Type I and Type II gradings are never isomorphic";
    return v;
  }
  if (!(p1.T() == p2.T())) {
    v.reason = "the supports T differ";
    return v;
  }
  const FinSubgroup& T = p1.T();
  const auto& k1 = p1.kappas();
  const auto& k2 = p2.kappas();
  if (k2.front().empty() || k1.front().empty()) throw std::invalid_argument("iso_decide: empty kappa_1");
  const Elt& anchor = k2.front().begin()->first;

  const bool beta_equal = p1.beta() == p2.beta();
  if (p1.is_type2()) {
    if (!beta_equal) {
      v.reason = "the bicharacters differ";
      return v;
    }
    const Elt& g0 = std::get<TypeIIParams>(p1.data).g0;
    const Elt& g0p = std::get<TypeIIParams>(p2.data).g0;
    for (const auto& [x, m] : k1.front()) {
      const Elt g = G.sub(anchor, x);
      if (G.sub(g0, G.scale(2, g)) == g0p && kappas_match(translate_all(k1, g, T), k2)) {
        v.isomorphic = true;
        v.g = g;
        v.branch = "type2";
        return v;
      }
    }
    v.reason = "no translation matches g0 and the multiplicity functions";
    return v;
  }

  if (beta_equal)
    for (const auto& [x, m] : k1.front()) {
      const Elt g = G.sub(anchor, x);
      if (kappas_match(translate_all(k1, g, T), k2)) {
        v.isomorphic = true;
        v.g = g;
        v.branch = "translate";
        return v;
      }
    }
  if (kind != AlgebraKind::assoc && profile.n() > 2 && p2.beta() == p1.beta().inverse())
    for (const auto& [x, m] : k1.back()) {
      const Elt g = G.add(anchor, x);
      if (kappas_match(reflect_all(k1, g, T), k2)) {
        v.isomorphic = true;
        v.g = g;
        v.branch = "inverse";
        return v;
      }
    }
  v.reason = beta_equal ? "no translation matches the multiplicity functions"
                        : "the bicharacters differ and no reflected match exists";
  return v;
}

bool iso_utminus(const UTminusParams& p1, const UTminusParams& p2, const BlockProfile& profile) {
  if (p1.deg_identity != p2.deg_identity) return false;
  return iso_decide(p1.lie_params, p2.lie_params, profile, AlgebraKind::lie).isomorphic;
}

}  // namespace gradedbloc
