#include <stdexcept>

#include "gradedbloc/classify.hpp"
#include "gradedbloc/linalg.hpp"

namespace gradedbloc {

TypeIIContext type2_context(const AbGroup& g, const FinSubgroup& T, const Bicharacter& beta) {
  if (!T.is_2_elementary()) throw std::invalid_argument("Type II: T is not 2-elementary");
  FinSubgroup rad = beta.radical();
  if (rad.size() != 2) throw std::invalid_argument("Type II: the radical of beta does not have order 2");
  const Elt f = rad.elements()[1];
  Quotient bar = quotient(g, {f});
  FinSubgroup t_bar = T.image(bar.projection);
  Bicharacter beta_bar = beta.push_forward(bar.projection);
  DivisionGrading d_bar = build_division(t_bar, beta_bar);
  Character chi = Character::canonical_for(g, f);
  QuadraticForm eta_bar = eta_bar_from_division(d_bar);
  QuadraticForm eta = quadratic_from_char(T, chi, eta_bar, bar.projection);
  if (!eta.polarizes_to(beta)) throw std::logic_error("Type II: eta does not polarize to beta");
  std::map<Elt, Elt> lift;
  for (const auto& t : T.elements()) lift.emplace(bar.projection(t), t);
  return {f, std::move(bar), std::move(t_bar), std::move(beta_bar), std::move(d_bar), std::move(chi),
          std::move(eta_bar), std::move(eta), std::move(lift)};
}

GammaFill fill_gamma(const TypeIIParams& params, const AbGroup& g, const BlockProfile& profile,
                     const TypeIIContext& ctx) {
  const int s = profile.s();
  const auto& kappas = params.kappas;
  const Elt& g0 = params.g0;
  std::vector<std::vector<Elt>> blocks(s);
  for (int i = 0; i < s; ++i) blocks[i].resize(kappa_size(kappas[i]));

  GammaFill out;
  for (int i = 0; i < s / 2; ++i) {
    const int mirror = s - 1 - i;
    if (blocks[i].size() != blocks[mirror].size()) throw std::invalid_argument("fill_gamma: unbalanced kappa");
    std::size_t left = 0;
    std::size_t right = blocks[mirror].size();
    for (const auto& [x, m] : kappas[i])
      for (std::int64_t c = 0; c < m; ++c) {
        blocks[i][left++] = x;
        blocks[mirror][--right] = g.sub(g.neg(g0), x);
      }
    out.p += static_cast<int>(blocks[i].size());
  }

  if (s % 2 == 1) {
    const int mid = s / 2;
    std::vector<Elt> lt, plus, zero, minus_rev, rt_rev;
    for (const auto& [x, m] : kappas[mid]) {
      const Elt h = g.add(g0, g.scale(2, x));
      if (!params.T.contains(h)) {
        // the partner coset -g0 - x is handled together with x
        if (params.T.coset_rep(g.sub(g.neg(g0), x)) < x) continue;
        for (std::int64_t c = 0; c < m; ++c) {
          lt.push_back(x);
          rt_rev.push_back(g.sub(g.neg(g0), x));
        }
      } else if (!ctx.eta(h).is_zero()) {
        if (m % 2 != 0) throw std::invalid_argument("fill_gamma: odd multiplicity where eta(g0 g^2) = -1");
        for (std::int64_t c = 0; c < m / 2; ++c) {
          plus.push_back(x);
          minus_rev.push_back(x);
        }
      } else {
        for (std::int64_t c = 0; c < m; ++c) zero.push_back(x);
      }
    }
    std::vector<Elt> middle;
    middle.insert(middle.end(), lt.begin(), lt.end());
    middle.insert(middle.end(), plus.begin(), plus.end());
    middle.insert(middle.end(), zero.begin(), zero.end());
    middle.insert(middle.end(), minus_rev.rbegin(), minus_rev.rend());
    middle.insert(middle.end(), rt_rev.rbegin(), rt_rev.rend());
    if (middle.size() != blocks[mid].size()) throw std::invalid_argument("fill_gamma: unbalanced middle kappa");
    blocks[mid] = std::move(middle);
    out.p += static_cast<int>(lt.size());
    out.q = static_cast<int>(plus.size());
  }

  for (int i = 0; i < s; ++i)
    for (auto& x : blocks[i]) {
      out.gamma.push_back(std::move(x));
      out.block.push_back(i);
    }
  return out;
}

std::vector<std::pair<int, Mat>> phi_blocks(const GammaFill& fill, const Elt& g0, const AbGroup& g,
                                            const TypeIIContext& ctx) {
  const int k = static_cast<int>(fill.gamma.size());
  const int p = fill.p;
  const int q = fill.q;
  const int m = k - 2 * p - 2 * q;
  if (m < 0) throw std::invalid_argument("build_Phi: segment lengths exceed k");
  const Mat id = Mat::identity(ctx.D_bar.ell);
  auto x_of = [&](int a) -> const Mat& {
    const Elt h = g.add(g0, g.scale(2, fill.gamma[a]));
    return ctx.D_bar.at(ctx.bar.projection(h));
  };
  auto chi_inv = [&](int a) { return CycloNum::root_of_unity(-ctx.chi(fill.gamma[a])); };

  std::vector<std::pair<int, Mat>> out(k);
  for (int a = 0; a < p; ++a) out[a] = {a, id.scaled(chi_inv(a))};
  for (int a = p; a < p + q; ++a) out[a] = {a, x_of(a)};
  for (int j = 0; j < m; ++j) out[p + q + m - 1 - j] = {p + q + j, x_of(p + q + j)};
  for (int a = k - p - q; a < k - p; ++a) out[a] = {a, -x_of(a)};
  for (int a = k - p; a < k; ++a) out[a] = {a, id.scaled(chi_inv(a))};
  return out;
}

Mat build_Phi(const GammaFill& fill, const Elt& g0, const AbGroup& g, const TypeIIContext& ctx) {
  const auto blocks = phi_blocks(fill, g0, g, ctx);
  const int k = static_cast<int>(blocks.size());
  Mat out(k * ctx.D_bar.ell);
  for (int c = 0; c < k; ++c) out = out + kron(Mat::unit(k, c, blocks[c].first), blocks[c].second);
  return out;
}

GradedAlgebra build_typeII_sharp(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind) {
  if (kind == AlgebraKind::assoc) throw std::invalid_argument("Type II gradings do not exist in the associative case");
  const auto& p2 = std::get<TypeIIParams>(params.data);
  const AbGroup& g = params.group;
  const TypeIIContext ctx = type2_context(g, p2.T, p2.beta);
  const GammaFill fill = fill_gamma(p2, g, profile, ctx);
  const Mat phi = build_Phi(fill, p2.g0, g, ctx);
  const Mat phi_inv = inverse(phi);

  const AbGroup gs = g.with_z();
  const Elt fs = gs.lift_z(0, ctx.f);
  const int k = static_cast<int>(fill.gamma.size());
  const int n = k * ctx.D_bar.ell;
  if (n != profile.n()) throw std::logic_error("build_typeII: size mismatch");

  // coarse components keyed by the smaller of the two lifts h, h + f
  std::map<Elt, std::vector<Mat>> coarse;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (const auto& [tb, x] : ctx.D_bar.X) {
        const Elt gdeg = g.add(g.sub(fill.gamma[a], fill.gamma[b]), ctx.lift.at(tb));
        const Elt deg = gs.lift_z(fill.block[b] - fill.block[a], gdeg);
        const Elt alt = gs.add(deg, fs);
        coarse[std::min(deg, alt)].push_back(kron(Mat::unit(k, a, b), x));
      }

  GradedAlgebra out;
  out.group = gs;
  out.kind = kind;
  out.carrier = {CarrierKind::mn, profile};
  out.distinguished = fs;
  for (const auto& [h, basis] : coarse) {
    EchelonBasis eb;
    for (const auto& b : basis) eb.add(to_vec(b));
    const std::size_t d = basis.size();
    std::vector<SparseVec> cols;
    for (const auto& b : basis) {
      auto c = eb.coordinates(to_vec(phi_inv * tau_flip(b) * phi));
      if (!c) throw std::logic_error("build_typeII: the twisted involution does not preserve a coarse component");
      cols.push_back(std::move(*c));
    }
    const CycloNum lambda = CycloNum::root_of_unity(ctx.chi(gs.drop_z(h)));
    // Lie: phi = -chi(g) on R_g; Jordan: phi = chi(g) on R_g; chi(h + f) = -chi(h)
    const CycloNum on_h = kind == AlgebraKind::lie ? -lambda : lambda;
    std::size_t total = 0;
    for (const auto& [deg, eig] : {std::pair{h, on_h}, std::pair{gs.add(h, fs), -on_h}}) {
      std::vector<SparseVec> shifted = cols;
      for (std::size_t j = 0; j < d; ++j) axpy(shifted[j], -eig, SparseVec{{static_cast<std::int64_t>(j), CycloNum(1)}});
      for (const auto& v : kernel(shifted)) {
        Mat x(n);
        for (const auto& [j, c] : v) x = x + basis[j].scaled(c);
        out.components[deg].push_back(std::move(x));
        ++total;
      }
    }
    if (total != d) throw std::logic_error("build_typeII: eigenspace split does not exhaust a coarse component");
  }
  return out;
}

GradedAlgebra jordan_lie_bridge(const GradedAlgebra& jordan) {
  if (jordan.kind != AlgebraKind::jordan) throw std::invalid_argument("jordan_lie_bridge: input is not a Jordan grading");
  if (jordan.n() <= 2) throw std::invalid_argument("jordan_lie_bridge: unsupported for n <= 2");
  GradedAlgebra shifted = jordan;
  if (jordan.distinguished) {
    shifted.components.clear();
    for (const auto& [g, basis] : jordan.components)
      shifted.components[jordan.group.add(g, *jordan.distinguished)] = basis;
  }
  GradedAlgebra out = trace_zero_restriction(shifted);
  out.kind = AlgebraKind::lie;
  return out;
}

}  // namespace gradedbloc
