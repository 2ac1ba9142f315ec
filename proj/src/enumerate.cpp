#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gradedbloc/classify.hpp"

namespace gradedbloc {

std::vector<FinSubgroup> all_subgroups(const AbGroup& g) {
  if (!g.is_finite()) throw std::invalid_argument("all_subgroups: group is infinite");
  const auto elements = g.elements();
  std::vector<FinSubgroup> out{FinSubgroup::trivial(g)};
  std::set<std::vector<Elt>> seen{out.front().elements()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& x : elements) {
      if (out[i].contains(x)) continue;
      auto gens = out[i].generators();
      gens.push_back(x);
      FinSubgroup h(g, gens);
      if (seen.insert(h.elements()).second) out.push_back(std::move(h));
    }
  std::stable_sort(out.begin(), out.end(), [](const FinSubgroup& a, const FinSubgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<Bicharacter> all_bicharacters(const FinSubgroup& T) {
  const AbGroup& g = T.ambient();
  const auto& gens = T.generators();
  const std::size_t r = gens.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::int64_t> radix;
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = p + 1; q < r; ++q) {
      slots.emplace_back(p, q);
      radix.push_back(std::gcd(g.order(gens[p]), g.order(gens[q])));
    }
  std::vector<Bicharacter> out;
  std::vector<std::int64_t> digits(slots.size(), 0);
  while (true) {
    std::vector<std::vector<QmodZ>> table(r, std::vector<QmodZ>(r));
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const QmodZ v(digits[i], radix[i]);
      table[slots[i].first][slots[i].second] = v;
      table[slots[i].second][slots[i].first] = -v;
    }
    try {
      Bicharacter b(T, table);
      if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(std::move(b));
    } catch (const std::invalid_argument&) {
      // table not compatible with the relations of T
    }
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == radix[pos]) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return out;
}

namespace {

// All multiplicity functions of total size k over the given cosets.
void multisets(const std::vector<Elt>& cosets, std::int64_t k, std::size_t from, KappaFn& cur,
               std::vector<KappaFn>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t c = from; c < cosets.size(); ++c) {
    ++cur[cosets[c]];
    multisets(cosets, k - 1, c, cur, out);
    if (--cur[cosets[c]] == 0) cur.erase(cosets[c]);
  }
}

std::vector<KappaFn> multisets(const std::vector<Elt>& cosets, std::int64_t k) {
  std::vector<KappaFn> out;
  KappaFn cur;
  multisets(cosets, k, 0, cur, out);
  return out;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  if (r * r != v) return std::nullopt;
  return r;
}

std::vector<std::int64_t> sort_key(const GradingParams& p) {
  std::vector<std::int64_t> key{p.is_type2() ? 1 : 0, static_cast<std::int64_t>(p.T().size())};
  for (const auto& t : p.T().elements()) key.insert(key.end(), t.coords.begin(), t.coords.end());
  const std::size_t n = p.T().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      key.push_back(p.beta().at(i, j).num());
      key.push_back(p.beta().at(i, j).den());
    }
  if (p.is_type2()) {
    const auto& g0 = std::get<TypeIIParams>(p.data).g0;
    key.insert(key.end(), g0.coords.begin(), g0.coords.end());
  }
  for (const auto& k : p.kappas()) {
    key.push_back(static_cast<std::int64_t>(k.size()));
    for (const auto& [x, m] : k) {
      key.insert(key.end(), x.coords.begin(), x.coords.end());
      key.push_back(m);
    }
  }
  return key;
}

}  // namespace

std::vector<GradingParams> enumerate_classes(const AbGroup& g, const BlockProfile& profile, AlgebraKind kind,
                                             std::int64_t budget) {
  if (!g.is_finite()) throw std::invalid_argument("enumerate_classes: group must be finite");
  const int s = profile.s();
  std::vector<GradingParams> candidates;
  std::int64_t work = 0;
  auto charge = [&](std::int64_t amount) {
    work += amount;
    if (work > budget) throw BudgetExceeded("enumeration budget exceeded");
  };
  const bool type2_possible = kind == AlgebraKind::jordan || (kind == AlgebraKind::lie && profile.n() > 2);

  for (const auto& T : all_subgroups(g)) {
    std::vector<Elt> cosets;
    for (const auto& x : g.elements())
      if (T.coset_rep(x) == x) cosets.push_back(x);
    const auto size = static_cast<std::int64_t>(T.size());
    for (const auto& beta : all_bicharacters(T)) {
      charge(1);
      if (beta.is_nondegenerate()) {
        auto ell = exact_sqrt(size);
        if (!ell) continue;
        bool fits = true;
        std::vector<std::vector<KappaFn>> choices;
        for (int i = 0; i < s && fits; ++i) {
          if (profile.sizes()[i] % *ell != 0) {
            fits = false;
            break;
          }
          choices.push_back(multisets(cosets, profile.sizes()[i] / *ell));
        }
        if (!fits) continue;
        std::vector<std::size_t> idx(s, 0);
        while (true) {
          charge(1);
          TypeIParams p{T, beta, {}};
          for (int i = 0; i < s; ++i) p.kappas.push_back(choices[i][idx[i]]);
          candidates.push_back({g, p, std::nullopt});
          int pos = 0;
          while (pos < s && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
          if (pos == s) break;
        }
        continue;
      }
      if (!type2_possible || !profile.symmetric() || !T.is_2_elementary() || beta.radical().size() != 2) continue;
      auto ell = exact_sqrt(size / 2);
      if (!ell) continue;
      bool fits = true;
      for (int q : profile.sizes()) fits = fits && q % *ell == 0;
      if (!fits) continue;
      const int half = (s + 1) / 2;
      std::vector<std::vector<KappaFn>> choices;
      for (int i = 0; i < half; ++i) choices.push_back(multisets(cosets, profile.sizes()[i] / *ell));
      for (const auto& g0 : g.elements()) {
        std::vector<std::size_t> idx(half, 0);
        while (true) {
          charge(1);
          TypeIIParams p{T, beta, g0, std::vector<KappaFn>(s)};
          for (int i = 0; i < half; ++i) {
            p.kappas[i] = choices[i][idx[i]];
            if (s - 1 - i != i) p.kappas[s - 1 - i] = kappa_translate(kappa_bar(p.kappas[i], T), g.neg(g0), T);
          }
          GradingParams gp{g, p, std::nullopt};
          if (validate(gp, profile, kind).ok) candidates.push_back(std::move(gp));
          int pos = 0;
          while (pos < half && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
          if (pos == half) break;
        }
      }
    }
  }

  std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> order;
  for (std::size_t i = 0; i < candidates.size(); ++i) order.emplace_back(sort_key(candidates[i]), i);
  std::sort(order.begin(), order.end());
  std::vector<GradingParams> reps;
  for (const auto& [key, i] : order) {
    bool fresh = true;
    for (const auto& r : reps) {
      charge(1);
      if (iso_decide(r, candidates[i], profile, kind).isomorphic) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(candidates[i]);
  }
  return reps;
}

}  // namespace gradedbloc
