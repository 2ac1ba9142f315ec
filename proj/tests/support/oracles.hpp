#pragma once

// Test-side oracles. They recompute results along routes that share no code
// with the library: floating-point complex embeddings, dense matrices and
// brute-force closures.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "gradedbloc/graded.hpp"

namespace oracle {

using cplx = std::complex<long double>;
using Dense = std::vector<std::vector<cplx>>;

inline constexpr long double kTol = 1e-9L;

inline cplx zeta(std::int64_t num, std::int64_t den) {
  const long double a = 2.0L * 3.141592653589793238462643383279502884L * static_cast<long double>(num) /
                        static_cast<long double>(den);
  return {std::cos(a), std::sin(a)};
}

/// Image of a cyclotomic number under zeta_N -> exp(2 pi i / N).
inline cplx eval(const gradedbloc::CycloNum& c) {
  cplx acc = 0;
  const auto& co = c.coeffs();
  for (std::size_t i = 0; i < co.size(); ++i)
    acc += static_cast<long double>(co[i].get_d()) * zeta(static_cast<std::int64_t>(i), c.order());
  return acc;
}

inline bool close(cplx a, cplx b, long double tol = kTol) { return std::abs(a - b) < tol; }

inline Dense dense(const gradedbloc::Mat& m) {
  Dense d(m.n(), std::vector<cplx>(m.n()));
  for (const auto& [k, v] : m.entries()) d[k.first][k.second] = eval(v);
  return d;
}

inline Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<cplx>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != cplx(0))
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense sub(const Dense& a, const Dense& b) {
  Dense c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] -= b[i][j];
  return c;
}

inline Dense add(const Dense& a, const Dense& b) {
  Dense c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += b[i][j];
  return c;
}

inline Dense product(gradedbloc::AlgebraKind kind, const Dense& x, const Dense& y) {
  switch (kind) {
    case gradedbloc::AlgebraKind::assoc:
      return mul(x, y);
    case gradedbloc::AlgebraKind::lie:
      return sub(mul(x, y), mul(y, x));
    case gradedbloc::AlgebraKind::jordan:
      return add(mul(x, y), mul(y, x));
  }
  return {};
}

inline std::vector<cplx> flatten(const Dense& d) {
  std::vector<cplx> v;
  for (const auto& row : d) v.insert(v.end(), row.begin(), row.end());
  return v;
}

/// Numerical rank by Gaussian elimination with partial pivoting.
inline std::size_t rank(std::vector<std::vector<cplx>> rows, long double tol = 1e-7L) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    for (std::size_t i = r; i < rows.size(); ++i)
      if (std::abs(rows[i][c]) > std::abs(rows[piv][c])) piv = i;
    if (std::abs(rows[piv][c]) < tol) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const cplx f = rows[i][c] / rows[r][c];
      if (f == cplx(0)) continue;
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// Floating-point check of the grading axioms: independence of all basis
/// elements and closure of every pairwise product.
inline bool numeric_grading_ok(const gradedbloc::GradedAlgebra& a) {
  const auto& G = a.group;
  std::map<gradedbloc::Elt, std::vector<Dense>> comp;
  std::vector<std::vector<cplx>> all;
  for (const auto& [g, basis] : a.components)
    for (const auto& m : basis) {
      comp[g].push_back(dense(m));
      all.push_back(flatten(comp[g].back()));
    }
  if (rank(all) != all.size()) return false;
  for (const auto& [g, bg] : comp)
    for (const auto& [h, bh] : comp) {
      const gradedbloc::Elt gh = G.add(g, h);
      std::vector<std::vector<cplx>> target;
      if (comp.count(gh))
        for (const auto& m : comp.at(gh)) target.push_back(flatten(m));
      const std::size_t base = rank(target);
      for (const auto& x : bg)
        for (const auto& y : bh) {
          auto t = target;
          t.push_back(flatten(product(a.kind, x, y)));
          if (rank(t) != base) return false;
        }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Groups, by brute force on raw coordinates.

struct Group {
  int free_rank;
  std::vector<std::int64_t> torsion;

  std::vector<std::int64_t> add(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] += b[i];
      if (static_cast<int>(i) >= free_rank) {
        const std::int64_t m = torsion[i - free_rank];
        a[i] = ((a[i] % m) + m) % m;
      }
    }
    return a;
  }
};

/// Closure of a set of generators under addition.
inline std::set<std::vector<std::int64_t>> closure(const Group& g, const std::vector<std::vector<std::int64_t>>& gens,
                                                   std::size_t dim) {
  std::set<std::vector<std::int64_t>> seen{std::vector<std::int64_t>(dim, 0)};
  std::vector<std::vector<std::int64_t>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        auto y = g.add(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// A rational modulo 1 as (num, den), reduced.
struct Frac {
  std::int64_t num = 0, den = 1;
  static Frac make(std::int64_t n, std::int64_t d) {
    n = ((n % d) + d) % d;
    const std::int64_t g = std::gcd(n, d);
    return {n / g, d / g};
  }
  Frac operator+(const Frac& o) const { return make(num * o.den + o.num * den, den * o.den); }
  bool operator==(const Frac&) const = default;
};

/// Bicharacter values on all of T, expanded from a generator table along
/// breadth-first words: b(x + s_i, y) = b(x, y) + b(s_i, y), built up in both slots.
inline std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, Frac> expand_bicharacter(
    const Group& g, const std::vector<std::vector<std::int64_t>>& gens, const std::vector<std::vector<Frac>>& table,
    std::size_t dim) {
  // word of each element as generator counts
  std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> word;
  word[std::vector<std::int64_t>(dim, 0)] = std::vector<std::int64_t>(gens.size(), 0);
  std::vector<std::vector<std::int64_t>> frontier{std::vector<std::int64_t>(dim, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& x : frontier)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto y = g.add(x, gens[i]);
        if (word.count(y)) continue;
        auto w = word[x];
        ++w[i];
        word[y] = w;
        next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, Frac> out;
  for (const auto& [x, wx] : word)
    for (const auto& [y, wy] : word) {
      Frac acc;
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
          for (std::int64_t r = 0; r < wx[i] * wy[j]; ++r) acc = acc + table[i][j];
      out[{x, y}] = acc;
    }
  return out;
}

}  // namespace oracle
