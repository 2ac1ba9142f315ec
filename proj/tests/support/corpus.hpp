#pragma once

// Random parameter sets for property tests, with the transformations that
// must not change the isomorphism class.

#include <random>
#include <vector>

#include "gradedbloc/classify.hpp"

namespace corpus {

using namespace gradedbloc;

struct Case {
  GradingParams params;
  BlockProfile profile;
  AlgebraKind kind;
};

inline std::int64_t isqrt(std::int64_t v) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

/// (T, beta) pairs usable for a Type I grading with block sizes all divisible by ell.
inline std::vector<std::pair<FinSubgroup, Bicharacter>> typeI_divisions(const AbGroup& g, const BlockProfile& p) {
  std::vector<std::pair<FinSubgroup, Bicharacter>> out;
  for (const auto& T : all_subgroups(g)) {
    const auto ell = isqrt(static_cast<std::int64_t>(T.size()));
    if (ell * ell != static_cast<std::int64_t>(T.size())) continue;
    bool fits = true;
    for (int n : p.sizes()) fits = fits && n % ell == 0;
    if (!fits) continue;
    for (const auto& b : all_bicharacters(T))
      if (b.is_nondegenerate()) out.emplace_back(T, b);
  }
  return out;
}

/// (T, beta) pairs whose radical has order 2 with a non-degenerate quotient.
inline std::vector<std::pair<FinSubgroup, Bicharacter>> typeII_divisions(const AbGroup& g, const BlockProfile& p) {
  std::vector<std::pair<FinSubgroup, Bicharacter>> out;
  for (const auto& T : all_subgroups(g)) {
    if (T.size() % 2) continue;
    const auto half = static_cast<std::int64_t>(T.size() / 2);
    const auto ell = isqrt(half);
    if (ell * ell != half) continue;
    bool fits = true;
    for (int n : p.sizes()) fits = fits && n % ell == 0;
    if (!fits) continue;
    for (const auto& b : all_bicharacters(T)) {
      const FinSubgroup rad = b.radical();
      if (rad.size() == 2) out.emplace_back(T, b);
    }
  }
  return out;
}

inline Elt random_elt(std::mt19937& rng, const AbGroup& g) {
  const auto els = g.elements();
  return els[rng() % els.size()];
}

inline KappaFn random_kappa(std::mt19937& rng, const FinSubgroup& T, std::int64_t size) {
  std::vector<std::pair<Elt, std::int64_t>> entries;
  for (std::int64_t i = 0; i < size; ++i) entries.emplace_back(random_elt(rng, T.ambient()), 1);
  return make_kappa(T, entries);
}

inline std::optional<GradingParams> random_typeI(std::mt19937& rng, const AbGroup& g, const BlockProfile& p) {
  const auto divs = typeI_divisions(g, p);
  if (divs.empty()) return std::nullopt;
  const auto& [T, b] = divs[rng() % divs.size()];
  const auto ell = isqrt(static_cast<std::int64_t>(T.size()));
  std::vector<KappaFn> kappas;
  for (int n : p.sizes()) kappas.push_back(random_kappa(rng, T, n / ell));
  return GradingParams{g, TypeIParams{T, b, kappas}, std::nullopt};
}

/// Random Type II parameters; the middle multiplicity function is built from
/// pairs {x, g0^-1 x^-1} and kept only if it passes validation.
inline std::optional<GradingParams> random_typeII(std::mt19937& rng, const AbGroup& g, const BlockProfile& p,
                                                  AlgebraKind kind) {
  if (!p.symmetric()) return std::nullopt;
  const auto divs = typeII_divisions(g, p);
  if (divs.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 50; ++attempt) {
    const auto& [T, b] = divs[rng() % divs.size()];
    const auto ell = isqrt(static_cast<std::int64_t>(T.size() / 2));
    const Elt g0 = random_elt(rng, g);
    const int s = p.s();
    std::vector<KappaFn> kappas(s);
    for (int i = 0; i < s / 2; ++i) {
      kappas[i] = random_kappa(rng, T, p.sizes()[i] / ell);
      kappas[s - 1 - i] = kappa_translate(kappa_bar(kappas[i], T), g.neg(g0), T);
    }
    if (s % 2) {
      const std::int64_t size = p.sizes()[s / 2] / ell;
      std::vector<std::pair<Elt, std::int64_t>> entries;
      std::int64_t have = 0;
      for (int draw = 0; have < size && draw < 100; ++draw) {
        const Elt x = random_elt(rng, g);
        const Elt y = g.sub(g.neg(g0), x);
        if (T.coset_rep(x) == T.coset_rep(y)) {
          const std::int64_t m = (size - have >= 2 && rng() % 2) ? 2 : 1;
          entries.emplace_back(x, m);
          have += m;
        } else if (size - have >= 2) {
          entries.emplace_back(x, 1);
          entries.emplace_back(y, 1);
          have += 2;
        }
      }
      if (have < size) continue;
      kappas[s / 2] = make_kappa(T, entries);
    }
    GradingParams out{g, TypeIIParams{T, b, g0, kappas}, std::nullopt};
    if (validate(out, p, kind).ok) return out;
  }
  return std::nullopt;
}

/// Every kappa translated by h (and g0 moved to g0 h^-2 for Type II).
inline GradingParams translate(const GradingParams& p, const Elt& h) {
  GradingParams out = p;
  const auto& g = p.group;
  if (p.is_type2()) {
    auto& d = std::get<TypeIIParams>(out.data);
    for (auto& k : d.kappas) k = kappa_translate(k, h, d.T);
    d.g0 = g.sub(d.g0, g.scale(2, h));
  } else {
    auto& d = std::get<TypeIParams>(out.data);
    for (auto& k : d.kappas) k = kappa_translate(k, h, d.T);
  }
  return out;
}

/// (T, beta^-1, (bar kappa_s, ..., bar kappa_1)) for Type I parameters.
inline GradingParams mirror(const GradingParams& p) {
  GradingParams out = p;
  auto& d = std::get<TypeIParams>(out.data);
  d.beta = d.beta.inverse();
  const auto& src = std::get<TypeIParams>(p.data).kappas;
  const std::size_t s = src.size();
  for (std::size_t i = 0; i < s; ++i) d.kappas[i] = kappa_bar(src[s - 1 - i], d.T);
  return out;
}

inline std::optional<GradingParams> random_params(std::mt19937& rng, const AbGroup& g, const BlockProfile& p,
                                                  AlgebraKind kind) {
  if (kind != AlgebraKind::assoc && p.symmetric() && rng() % 3 == 0)
    if (auto q = random_typeII(rng, g, p, kind)) return q;
  return random_typeI(rng, g, p);
}

}  // namespace corpus
