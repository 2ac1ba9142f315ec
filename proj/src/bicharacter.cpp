#include "gradedbloc/bicharacter.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gradedbloc {

Bicharacter::Bicharacter(FinSubgroup domain, std::vector<std::vector<QmodZ>> gen_table)
    : domain_(std::move(domain)), gen_table_(std::move(gen_table)) {
  const std::size_t r = domain_.generators().size();
  if (gen_table_.size() != r) throw std::invalid_argument("Bicharacter: table must be r x r");
  for (const auto& row : gen_table_)
    if (row.size() != r) throw std::invalid_argument("Bicharacter: table must be r x r");

  const std::size_t n = domain_.size();
  table_.assign(n * n, QmodZ());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& wi = domain_.word(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& wj = domain_.word(j);
      QmodZ acc;
      for (std::size_t p = 0; p < r; ++p) {
        if (!wi[p]) continue;
        for (std::size_t q = 0; q < r; ++q)
          if (wj[q]) acc += gen_table_[p][q] * (wi[p] * wj[q]);
      }
      table_[i * n + j] = acc;
    }
  }

  // the words are one choice of representation; bimultiplicativity over all
  // triples shows the value does not depend on that choice
  const auto& els = domain_.elements();
  const auto& g = domain_.ambient();
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q)
      if ((*this)(domain_.generators()[p], domain_.generators()[q]) != gen_table_[p][q])
        throw std::invalid_argument("Bicharacter: generator table is inconsistent with relations");
  for (std::size_t i = 0; i < n; ++i) {
    if (!at(i, i).is_zero()) throw std::invalid_argument("Bicharacter: not alternating");
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ij = *domain_.index_of(g.add(els[i], els[j]));
      for (std::size_t k = 0; k < n; ++k)
        if (at(ij, k) != at(i, k) + at(j, k))
          throw std::invalid_argument("Bicharacter: generator table is not bimultiplicative");
    }
  }
}

Bicharacter Bicharacter::zero(const FinSubgroup& domain) {
  const std::size_t r = domain.generators().size();
  return {domain, std::vector<std::vector<QmodZ>>(r, std::vector<QmodZ>(r))};
}

QmodZ Bicharacter::operator()(const Elt& u, const Elt& v) const {
  auto i = domain_.index_of(u);
  auto j = domain_.index_of(v);
  if (!i || !j) throw std::domain_error("bicharacter evaluated outside its domain");
  return at(*i, *j);
}

Bicharacter Bicharacter::inverse() const {
  auto t = gen_table_;
  for (auto& row : t)
    for (auto& x : row) x = -x;
  return {domain_, t};
}

Bicharacter Bicharacter::push_forward(const GroupHom& h) const {
  FinSubgroup img = domain_.image(h);
  return {img, gen_table_};
}

FinSubgroup Bicharacter::radical() const {
  std::vector<Elt> gens;
  const std::size_t n = domain_.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool all = true;
    for (std::size_t j = 0; j < n && all; ++j) all = at(i, j).is_zero();
    if (all) gens.push_back(domain_.elements()[i]);
  }
  return {domain_.ambient(), gens};
}

std::vector<SymplecticPair> symplectic_basis(const Bicharacter& beta) {
  if (!beta.is_nondegenerate()) throw std::invalid_argument("degenerate bicharacter");
  const auto& g = beta.domain().ambient();
  // generators first, so that a standard presentation yields its own pairs
  std::vector<Elt> rest;
  for (const auto& x : beta.domain().generators())
    if (std::find(rest.begin(), rest.end(), x) == rest.end()) rest.push_back(x);
  for (const auto& x : beta.domain().elements())
    if (std::find(rest.begin(), rest.end(), x) == rest.end()) rest.push_back(x);
  std::vector<SymplecticPair> out;
  while (rest.size() > 1) {
    Elt u = rest.front();
    for (const auto& x : rest)
      if (g.order(x) > g.order(u)) u = x;
    const std::int64_t ell = g.order(u);
    std::optional<Elt> v;
    for (const auto& x : rest) {
      QmodZ b = beta(u, x);
      if (b.order() == ell) {
        // rescale so that beta(u, v) = 1/ell exactly
        std::int64_t k = b.num(), inv = 1;
        for (; inv < ell; ++inv)
          if (floor_mod(k * inv, ell) == 1) break;
        v = g.scale(inv, x);
        break;
      }
    }
    if (!v) throw std::invalid_argument("degenerate bicharacter");
    out.push_back({u, *v, ell});
    std::vector<Elt> next;
    for (const auto& x : rest)
      if (beta(u, x).is_zero() && beta(*v, x).is_zero()) next.push_back(x);
    if (next.size() * static_cast<std::size_t>(ell * ell) != rest.size())
      throw std::logic_error("symplectic_basis: orthogonal complement has the wrong size");
    rest = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------

QuadraticForm::QuadraticForm(FinSubgroup domain, std::vector<QmodZ> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (!domain_.is_2_elementary()) throw std::invalid_argument("QuadraticForm: domain is not 2-elementary");
  if (values_.size() != domain_.size()) throw std::invalid_argument("QuadraticForm: one value per element");
  for (const auto& v : values_)
    if (!(v * 2).is_zero()) throw std::invalid_argument("QuadraticForm: values must lie in {0, 1/2}");
}

QmodZ QuadraticForm::operator()(const Elt& t) const {
  auto i = domain_.index_of(t);
  if (!i) throw std::domain_error("quadratic form evaluated outside its domain");
  return values_[*i];
}

bool QuadraticForm::polarizes_to(const Bicharacter& beta) const {
  const auto& els = domain_.elements();
  const auto& g = domain_.ambient();
  for (const auto& u : els)
    for (const auto& v : els)
      if ((*this)(g.add(u, v)) != beta(u, v) + (*this)(u) + (*this)(v)) return false;
  return true;
}

QuadraticForm quadratic_from_char(const FinSubgroup& T, const Character& chi,
                                  const QuadraticForm& eta_bar, const GroupHom& pi) {
  if (!T.is_2_elementary()) throw std::invalid_argument("quadratic_from_char: T is not 2-elementary");
  std::vector<QmodZ> vals;
  for (const auto& t : T.elements()) vals.push_back(chi(t) + eta_bar(pi(t)));
  return {T, vals};
}

}  // namespace gradedbloc
