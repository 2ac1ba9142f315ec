#include "gradedbloc/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace gradedbloc {

const FinSubgroup& GradingParams::T() const {
  return std::visit([](const auto& d) -> const FinSubgroup& { return d.T; }, data);
}

const Bicharacter& GradingParams::beta() const {
  return std::visit([](const auto& d) -> const Bicharacter& { return d.beta; }, data);
}

const std::vector<KappaFn>& GradingParams::kappas() const {
  return std::visit([](const auto& d) -> const std::vector<KappaFn>& { return d.kappas; }, data);
}

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  if (r * r != v) return std::nullopt;
  return r;
}

}  // namespace

CarrierKind carrier_for(AlgebraKind kind) { return kind == AlgebraKind::lie ? CarrierKind::ut0 : CarrierKind::ut; }

ValidationReport validate(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const AbGroup& G = params.group;
  const FinSubgroup& T = params.T();
  const auto& kappas = params.kappas();
  const int s = profile.s();

  if (!(T.ambient() == G)) {
    fail("T is not a subgroup of the grading group");
    return rep;
  }
  if (!(params.beta().domain() == T)) {
    fail("the bicharacter is not defined on T");
    return rep;
  }
  if (static_cast<int>(kappas.size()) != s)
    fail("expected " + std::to_string(s) + " multiplicity functions, got " + std::to_string(kappas.size()));
  for (std::size_t i = 0; i < kappas.size(); ++i)
    for (const auto& [x, m] : kappas[i]) {
      if (!G.contains(x) || T.coset_rep(x) != x)
        fail("kappa_" + std::to_string(i + 1) + " has a non-canonical coset representative");
      if (m <= 0) fail("kappa_" + std::to_string(i + 1) + " has a non-positive multiplicity");
    }
  if (params.deg_identity && !G.contains(*params.deg_identity)) fail("deg_identity is not an element of the group");
  if (params.deg_identity && kind != AlgebraKind::lie) fail("deg_identity is only meaningful in the Lie case");
  if (!rep.ok) return rep;

  const auto size = static_cast<std::int64_t>(T.size());
  if (!params.is_type2()) {
    if (!params.beta().is_nondegenerate()) fail("beta is degenerate");
    auto ell = exact_sqrt(size);
    if (!ell) {
      fail("|T| is not a perfect square");
      return rep;
    }
    for (int i = 0; i < s; ++i)
      if (kappa_size(kappas[i]) * *ell != profile.sizes()[i])
        fail("|kappa_" + std::to_string(i + 1) + "| * sqrt(|T|) differs from n_" + std::to_string(i + 1));
    return rep;
  }

  const auto& p2 = std::get<TypeIIParams>(params.data);
  if (kind == AlgebraKind::assoc) fail("Type II gradings do not exist in the associative case");
  if (kind == AlgebraKind::lie && profile.n() <= 2) fail("Type II Lie gradings require n > 2");
  if (!G.contains(p2.g0)) fail("g0 is not an element of the group");
  if (!T.is_2_elementary()) fail("T is not 2-elementary");
  if (params.beta().radical().size() != 2) fail("the radical of beta does not have order 2");
  if (!profile.symmetric()) fail("the block profile is not symmetric");
  if (!rep.ok) return rep;
  auto ell = exact_sqrt(size / 2);
  if (!ell) {
    fail("|T|/2 is not a perfect square");
    return rep;
  }
  for (int i = 0; i < s; ++i)
    if (kappa_size(kappas[i]) * *ell != profile.sizes()[i])
      fail("|kappa_" + std::to_string(i + 1) + "| * sqrt(|T|/2) differs from n_" + std::to_string(i + 1));
  for (int i = 0; i < s; ++i)
    for (const auto& [x, m] : kappas[i]) {
      const Elt y = G.sub(G.neg(p2.g0), x);
      if (kappa_at(kappas[s - 1 - i], T, y) != m)
        fail("balance condition fails: kappa_" + std::to_string(i + 1) + "(x) != kappa_" + std::to_string(s - i) +
             "(g0^-1 x^-1)");
    }
  if (!rep.ok || s % 2 == 0) return rep;
  const TypeIIContext ctx = type2_context(G, T, params.beta());
  for (const auto& [x, m] : kappas[s / 2]) {
    const Elt h = G.add(p2.g0, G.scale(2, x));
    if (T.contains(h) && !ctx.eta(h).is_zero() && m % 2 != 0)
      fail("parity condition fails: the middle multiplicity is odd on a coset with eta(g0 g^2) = -1");
  }
  return rep;
}

std::vector<Elt> sharp_tuple(const AbGroup& g, const std::vector<Elt>& gamma, const std::vector<int>& block) {
  std::vector<Elt> out;
  for (std::size_t i = 0; i < gamma.size(); ++i) out.push_back(g.lift_z(-(block[i] + 1), gamma[i]));
  return out;
}

void typeI_gamma(const TypeIParams& params, std::vector<Elt>& gamma, std::vector<int>& block) {
  gamma.clear();
  block.clear();
  for (std::size_t i = 0; i < params.kappas.size(); ++i)
    for (const auto& [x, m] : params.kappas[i])
      for (std::int64_t c = 0; c < m; ++c) {
        gamma.push_back(x);
        block.push_back(static_cast<int>(i));
      }
}

GradedAlgebra build_typeI_sharp_from_gamma(const AbGroup& g, const FinSubgroup& T, const Bicharacter& beta,
                                           const std::vector<Elt>& gamma, const std::vector<int>& block,
                                           AlgebraKind kind) {
  const AbGroup gs = g.with_z();
  std::vector<Elt> tgens;
  for (const auto& t : T.generators()) tgens.push_back(gs.lift_z(0, t));
  FinSubgroup ts(gs, tgens);
  Bicharacter bs(ts, beta.gen_table());
  DivisionGrading d = build_division(ts, bs);

  GradedAlgebra elem = build_elementary(gs, sharp_tuple(g, gamma, block));
  std::vector<int> counts;
  for (int b : block) {
    if (b >= static_cast<int>(counts.size())) counts.resize(b + 1, 0);
    ++counts[b];
  }
  elem.carrier.profile = BlockProfile(counts);
  GradedAlgebra out = kronecker_grading(elem, d);
  out.kind = kind;
  return out;
}

GradedAlgebra build_sharp(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind) {
  ValidationReport rep = validate(params, profile, kind);
  if (!rep.ok) throw std::invalid_argument("invalid parameters: " + rep.violations.front());
  if (params.is_type2()) return build_typeII_sharp(params, profile, kind);
  const auto& p = std::get<TypeIParams>(params.data);
  std::vector<Elt> gamma;
  std::vector<int> block;
  typeI_gamma(p, gamma, block);
  GradedAlgebra out = build_typeI_sharp_from_gamma(params.group, p.T, p.beta, gamma, block, kind);
  if (!(out.carrier.profile == profile)) throw std::logic_error("build_sharp: profile mismatch");
  return out;
}

GradedAlgebra build_typeI(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind) {
  if (params.is_type2()) throw std::invalid_argument("build_typeI: parameters are of Type II");
  return restrict_grading(build_sharp(params, profile, kind), carrier_for(kind));
}

GradedAlgebra build_typeII(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind) {
  if (!params.is_type2()) throw std::invalid_argument("build_typeII: parameters are of Type I");
  return restrict_grading(build_sharp(params, profile, kind), carrier_for(kind));
}

GradedAlgebra build_grading(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind) {
  return params.is_type2() ? build_typeII(params, profile, kind) : build_typeI(params, profile, kind);
}

GradedAlgebra build_utminus(const UTminusParams& params, const BlockProfile& profile) {
  GradingParams lie = params.lie_params;
  lie.deg_identity.reset();
  GradedAlgebra a = build_grading(lie, profile, AlgebraKind::lie);
  if (!lie.group.contains(params.deg_identity)) throw std::invalid_argument("deg_identity is not an element of the group");
  a.carrier.kind = CarrierKind::ut;
  a.components[params.deg_identity].push_back(Mat::identity(profile.n()));
  return a;
}

}  // namespace gradedbloc
