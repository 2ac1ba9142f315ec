#include "gradedbloc/oracle.hpp"

#include <stdexcept>

#include "gradedbloc/linalg.hpp"

namespace gradedbloc {

GradedInvariants graded_invariants(const GradedAlgebra& a) {
  GradedInvariants inv;
  const std::vector<Mat> everything = carrier_basis(a.carrier);
  const BlockProfile& prof = a.carrier.profile;
  const std::int64_t nn = static_cast<std::int64_t>(a.n()) * a.n();
  const Elt e = a.group.identity();
  for (const auto& [g, basis] : a.components) {
    if (basis.empty()) continue;
    inv.support.insert(g);
    inv.dims[g] = basis.size();
    if (g == e) inv.identity_component_dim = basis.size();

    std::vector<SparseVec> cols;
    for (const auto& b : basis) {
      SparseVec col;
      for (std::size_t k = 0; k < everything.size(); ++k)
        for (const auto& [pos, v] : to_vec(b * everything[k] - everything[k] * b))
          col.emplace(static_cast<std::int64_t>(k) * nn + pos, v);
      cols.push_back(std::move(col));
    }
    if (!kernel(cols).empty()) inv.center_degrees.insert(g);

    auto& filt = inv.radical_filtration[g];
    for (int m = 0; m < prof.s(); ++m) {
      std::vector<SparseVec> low;
      for (const auto& b : basis) {
        SparseVec v;
        for (const auto& [ij, x] : b.entries())
          if (prof.block_of(ij.second) - prof.block_of(ij.first) < m)
            v.emplace(static_cast<std::int64_t>(ij.first) * a.n() + ij.second, x);
        low.push_back(std::move(v));
      }
      filt.push_back(basis.size() - rank_of(low));
    }
  }
  return inv;
}

bool apply_witness(const GradedAlgebra& a, const GradedAlgebra& b, const Witness& w) {
  if (a.n() != b.n() || w.x.n() != a.n() || !(a.group == b.group)) return false;
  const Mat x_inv = inverse(w.x);
  if (a.total_dim() != b.total_dim()) return false;
  for (const auto& [g, basis] : a.components) {
    auto it = b.components.find(a.group.add(g, w.relabel));
    if (it == b.components.end() || it->second.size() != basis.size()) return false;
    EchelonBasis target;
    for (const auto& m : it->second) target.add(to_vec(m));
    EchelonBasis image;
    for (const auto& y : basis) {
      const Mat src = w.minus_tau ? -tau_flip(y) : y;
      const SparseVec v = to_vec(w.x * src * x_inv);
      if (!target.contains(v)) return false;
      image.add(v);
    }
    if (image.rank() != target.rank()) return false;
  }
  return true;
}

namespace {

// For each position a of gamma1, a position of gamma2 in the same block with
// gamma2[b] - gamma1[a] - g in T. Only positions admitted by `allowed` are paired.
std::optional<std::vector<int>> match_positions(const AbGroup& G, const FinSubgroup& T, const std::vector<Elt>& gamma1,
                                                const std::vector<int>& block1, const std::vector<Elt>& gamma2,
                                                const std::vector<int>& block2, const Elt& g) {
  const std::size_t k = gamma1.size();
  if (gamma2.size() != k) return std::nullopt;
  std::vector<int> pi(k, -1);
  std::vector<bool> used(k, false);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (used[b] || block1[a] != block2[b]) continue;
      if (!T.contains(G.sub(G.sub(gamma2[b], gamma1[a]), g))) continue;
      pi[a] = static_cast<int>(b);
      used[b] = true;
      break;
    }
    if (pi[a] < 0) return std::nullopt;
  }
  return pi;
}

// x = sum_a E_{pi(a), a} tensor X_{t_a}^{-1}, t_a = gamma2[pi a] - gamma1[a] - g.
Mat permutation_witness(const AbGroup& G, const DivisionGrading& d, const std::vector<Elt>& gamma1,
                        const std::vector<Elt>& gamma2, const std::vector<int>& pi, const Elt& g) {
  const int k = static_cast<int>(gamma1.size());
  Mat x(k * d.ell);
  for (int a = 0; a < k; ++a) {
    const Elt t = G.sub(G.sub(gamma2[pi[a]], gamma1[a]), g);
    x = x + kron(Mat::unit(k, pi[a], a), inverse(d.at(t)));
  }
  return x;
}

// y with y tau(X1_t) y^{-1} proportional to X2_t for every t in T.
std::optional<Mat> tau_intertwiner(const DivisionGrading& d1, const DivisionGrading& d2) {
  const int ell = d1.ell;
  const auto& gens = d1.T.generators();
  const AbGroup& G = d1.T.ambient();
  // candidate scalars per generator: lambda^m = a / b
  std::vector<std::vector<CycloNum>> options;
  for (const auto& t : gens) {
    const std::int64_t m = G.order(t);
    Mat p1 = Mat::identity(ell), p2 = Mat::identity(ell);
    const Mat x1 = tau_flip(d1.at(t));
    for (std::int64_t i = 0; i < m; ++i) {
      p1 = p1 * x1;
      p2 = p2 * d2.at(t);
    }
    const auto q = (p1.get(0, 0) / p2.get(0, 0)).as_root_of_unity();
    if (!q) return std::nullopt;
    std::vector<CycloNum> opts;
    for (std::int64_t j = 0; j < m; ++j) opts.push_back(CycloNum::root_of_unity(QmodZ(q->num() + j * q->den(), q->den() * m)));
    options.push_back(std::move(opts));
  }
  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    // unknown y as a vector of ell^2 entries; equations y A - lambda B y = 0
    std::vector<SparseVec> cols(static_cast<std::size_t>(ell) * ell);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Mat a = tau_flip(d1.at(gens[gi]));
      const Mat b = d2.at(gens[gi]).scaled(options[gi][idx[gi]]);
      const std::int64_t off = static_cast<std::int64_t>(gi) * ell * ell;
      for (int r = 0; r < ell; ++r)
        for (int c = 0; c < ell; ++c) {
          const Mat unit = Mat::unit(ell, r, c);
          for (const auto& [pos, v] : to_vec(unit * a - b * unit)) axpy(cols[r * ell + c], v, SparseVec{{off + pos, CycloNum(1)}});
        }
    }
    for (const auto& sol : kernel(cols)) {
      Mat y(ell);
      for (const auto& [j, v] : sol) y.set(static_cast<int>(j / ell), static_cast<int>(j % ell), v);
      try {
        (void)inverse(y);
        return y;
      } catch (const std::domain_error&) {
      }
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == options[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return std::nullopt;
}

std::optional<Witness> typeI_witness(const GradingParams& p1, const GradingParams& p2, const BlockProfile& profile,
                                     const IsoVerdict& verdict) {
  const AbGroup& G = p1.group;
  const auto& a = std::get<TypeIParams>(p1.data);
  const auto& b = std::get<TypeIParams>(p2.data);
  std::vector<Elt> g1, g2;
  std::vector<int> b1, b2;
  typeI_gamma(a, g1, b1);
  typeI_gamma(b, g2, b2);
  const DivisionGrading d2 = build_division(b.T, b.beta);
  Witness w;
  w.relabel = G.identity();
  if (verdict.branch == "translate") {
    auto pi = match_positions(G, a.T, g1, b1, g2, b2, *verdict.g);
    if (!pi) return std::nullopt;
    w.x = permutation_witness(G, d2, g1, g2, *pi, *verdict.g);
    return w;
  }
  // inverse branch: -tau carries the grading to the tuple (-gamma1 reversed) over tau(D1)
  const DivisionGrading d1 = build_division(a.T, a.beta);
  const int k = static_cast<int>(g1.size());
  const int s = profile.s();
  std::vector<Elt> gt(k);
  std::vector<int> bt(k);
  for (int c = 0; c < k; ++c) {
    gt[c] = G.neg(g1[k - 1 - c]);
    bt[c] = s - 1 - b1[k - 1 - c];
  }
  auto y = tau_intertwiner(d1, d2);
  if (!y) return std::nullopt;
  auto pi = match_positions(G, a.T, gt, bt, g2, b2, *verdict.g);
  if (!pi) return std::nullopt;
  w.x = permutation_witness(G, d2, gt, g2, *pi, *verdict.g) * kron(Mat::identity(k), *y);
  w.minus_tau = true;
  return w;
}

std::optional<Witness> typeII_witness(const GradingParams& p1, const GradingParams& p2, const BlockProfile& profile,
                                      const IsoVerdict& verdict) {
  const AbGroup& G = p1.group;
  const auto& a = std::get<TypeIIParams>(p1.data);
  const auto& b = std::get<TypeIIParams>(p2.data);
  const Elt& g = *verdict.g;
  const TypeIIContext ctx = type2_context(G, a.T, a.beta);
  const GammaFill f1 = fill_gamma(a, G, profile, ctx);
  const GammaFill f2 = fill_gamma(b, G, profile, ctx);
  if (f1.p != f2.p || f1.q != f2.q) return std::nullopt;
  const int k = static_cast<int>(f1.gamma.size());
  const int p = f1.p, q = f1.q;
  auto r = [k](int c) { return k - 1 - c; };
  // segment class: 0 outer, 1 plus/minus, 2 middle
  auto seg = [&](int c) { return (c < p || c >= k - p) ? 0 : (c < p + q || c >= k - p - q) ? 1 : 2; };

  std::vector<int> pi(k, -1);
  std::vector<bool> used(k, false);
  auto fits = [&](int from, int to) {
    return !used[to] && f1.block[from] == f2.block[to] && seg(from) == seg(to) &&
           (seg(from) != 1 || (2 * from < k) == (2 * to < k)) &&
           a.T.contains(G.sub(G.sub(f2.gamma[to], f1.gamma[from]), g));
  };
  for (int c = 0; c < k; ++c) {
    if (pi[c] >= 0) continue;
    const bool paired = seg(c) != 2;
    for (int d = 0; d < k; ++d) {
      if (!fits(c, d)) continue;
      if (paired && !fits(r(c), r(d))) continue;
      pi[c] = d;
      used[d] = true;
      if (paired) {
        pi[r(c)] = r(d);
        used[r(d)] = true;
      }
      break;
    }
    if (pi[c] < 0) return std::nullopt;
  }

  const auto y1 = phi_blocks(f1, a.g0, G, ctx);
  const auto y2 = phi_blocks(f2, b.g0, G, ctx);
  const DivisionGrading& d = ctx.D_bar;
  std::vector<Mat> z(k);
  for (int c = 0; c < k; ++c) {
    const Elt t = G.sub(G.sub(f2.gamma[pi[c]], f1.gamma[c]), g);
    z[c] = inverse(d.at(ctx.bar.projection(t)));
  }
  // tau(Z_c) Y2_{r pi c} Z_{b(c)} = mu_c Y1_{r c}, with b(c) the column block of row r(c) in Phi1
  std::vector<CycloNum> mu(k);
  std::vector<int> partner(k);
  for (int c = 0; c < k; ++c) {
    partner[c] = y1[r(c)].first;
    const Mat lhs = tau_flip(z[c]) * y2[r(pi[c])].second * z[partner[c]];
    const Mat& rhs = y1[r(c)].second;
    const auto& [pos, v] = *rhs.entries().begin();
    const CycloNum ratio = lhs.get(pos.first, pos.second) / v;
    if (lhs != rhs.scaled(ratio)) return std::nullopt;
    mu[c] = ratio;
  }
  std::vector<std::optional<CycloNum>> lambda(k);
  for (int c = 0; c < k; ++c) {
    if (lambda[c]) continue;
    if (partner[c] == c) {
      auto root = mu[c].inv().as_root_of_unity();
      if (!root) return std::nullopt;
      lambda[c] = CycloNum::root_of_unity(QmodZ(root->num(), 2 * root->den()));
    } else {
      if (partner[partner[c]] != c || mu[partner[c]] != mu[c]) return std::nullopt;
      lambda[c] = CycloNum(1);
      lambda[partner[c]] = mu[c].inv();
    }
  }
  Witness w;
  w.relabel = G.identity();
  w.x = Mat(k * d.ell);
  for (int c = 0; c < k; ++c) w.x = w.x + kron(Mat::unit(k, pi[c], c), z[c].scaled(*lambda[c]));
  return w;
}

}  // namespace

std::optional<Witness> construct_witness(const GradingParams& p1, const GradingParams& p2,
                                         const BlockProfile& profile, AlgebraKind /*kind*/, const IsoVerdict& verdict) {
  if (!verdict.isomorphic || !verdict.g) return std::nullopt;
  if (p1.is_type2()) return typeII_witness(p1, p2, profile, verdict);
  return typeI_witness(p1, p2, profile, verdict);
}

Evidence refute_or_confirm(const GradingParams& p1, const GradingParams& p2, const BlockProfile& profile,
                           AlgebraKind kind) {
  Evidence ev;
  const IsoVerdict verdict = iso_decide(p1, p2, profile, kind);
  ev.isomorphic = verdict.isomorphic;
  const GradedAlgebra a = build_grading(p1, profile, kind);
  const GradedAlgebra b = build_grading(p2, profile, kind);
  if (verdict.isomorphic) {
    ev.witness = construct_witness(p1, p2, profile, kind, verdict);
    ev.verdict_agrees = ev.witness && apply_witness(a, b, *ev.witness);
    ev.status = ev.verdict_agrees ? "witness" : "witness_failed";
    return ev;
  }
  const GradedInvariants ia = graded_invariants(a);
  const GradedInvariants ib = graded_invariants(b);
  ev.verdict_agrees = true;
  if (ia.dims != ib.dims) {
    ev.status = "obstruction";
    ev.obstruction = "dim_multiset";
  } else if (ia.center_degrees != ib.center_degrees) {
    ev.status = "obstruction";
    ev.obstruction = "center_degrees";
  } else if (ia.radical_filtration != ib.radical_filtration) {
    ev.status = "obstruction";
    ev.obstruction = "radical_filtration";
  } else {
    ev.status = "incomplete";
  }
  return ev;
}

}  // namespace gradedbloc
