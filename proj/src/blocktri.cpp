#include "gradedbloc/blocktri.hpp"

#include <cmath>
#include <stdexcept>

namespace gradedbloc {

std::set<std::pair<int, int>> jm_indices(const BlockProfile& profile, int m) {
  std::set<std::pair<int, int>> out;
  if (std::abs(m) >= profile.s()) return out;
  for (int i = 0; i < profile.n(); ++i)
    for (int j = 0; j < profile.n(); ++j)
      if (profile.block_of(j) - profile.block_of(i) == m) out.emplace(i, j);
  return out;
}

std::vector<std::int64_t> natural_Z_tuple(const BlockProfile& profile) {
  std::vector<std::int64_t> out;
  for (int q = 0; q < profile.s(); ++q)
    for (int i = 0; i < profile.sizes()[q]; ++i) out.push_back(-(q + 1));
  return out;
}

std::optional<int> single_block_diagonal(const BlockProfile& profile, const Mat& x) {
  std::optional<int> m;
  for (const auto& [k, v] : x.entries()) {
    const int d = profile.block_of(k.second) - profile.block_of(k.first);
    if (m && *m != d) return std::nullopt;
    m = d;
  }
  return m;
}

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  if (r * r != v) return std::nullopt;
  return r;
}

}  // namespace

std::optional<AdmissibleSlices> is_admissible_params(const FinSubgroup& T, const std::vector<KappaZEntry>& kappa,
                                                     const BlockProfile& profile, bool type2) {
  const auto size = static_cast<std::int64_t>(T.size());
  if (type2 && size % 2 != 0) return std::nullopt;
  auto ell = exact_sqrt(type2 ? size / 2 : size);
  if (!ell) return std::nullopt;

  std::optional<std::int64_t> zmax;
  for (const auto& e : kappa) {
    if (e.mult < 0) return std::nullopt;
    if (e.mult > 0 && (!zmax || e.z > *zmax)) zmax = e.z;
  }
  if (!zmax) return std::nullopt;
  AdmissibleSlices out;
  out.a = *zmax + 1;
  const int s = profile.s();
  std::vector<std::vector<std::pair<Elt, std::int64_t>>> raw(s);
  for (const auto& e : kappa) {
    if (e.mult == 0) continue;
    const std::int64_t i = out.a - e.z;
    if (i < 1 || i > s) return std::nullopt;
    raw[i - 1].emplace_back(e.coset_rep, e.mult);
  }
  for (int i = 0; i < s; ++i) {
    KappaFn k = make_kappa(T, raw[i]);
    if (kappa_size(k) * *ell != profile.sizes()[i]) return std::nullopt;
    out.kappas.push_back(std::move(k));
  }
  return out;
}

GradedAlgebra restrict_grading_sharp(const GradedAlgebra& a, CarrierKind target) {
  if (a.group.free_rank() < 1) throw std::invalid_argument("restrict_grading: the grading group has no Z factor");
  if (a.carrier.kind != CarrierKind::mn && a.carrier.kind != CarrierKind::sln)
    throw std::invalid_argument("restrict_grading: source must be a grading on M_n or sl_n");
  if (a.carrier.kind == CarrierKind::sln && (target == CarrierKind::mn || target == CarrierKind::ut))
    throw std::invalid_argument("restrict_grading: cannot restrict sl_n to a carrier containing the identity");
  const BlockProfile& prof = a.carrier.profile;
  const bool upper = target == CarrierKind::ut || target == CarrierKind::ut0;

  GradedAlgebra out;
  out.group = a.group;
  out.kind = a.kind;
  out.carrier = {target == CarrierKind::ut0 ? CarrierKind::ut : target == CarrierKind::sln ? CarrierKind::mn : target,
                 prof};
  out.distinguished = a.distinguished;
  for (const auto& [g, basis] : a.components) {
    const std::int64_t m = g.coords[0];
    for (const auto& x : basis) {
      auto d = single_block_diagonal(prof, x);
      if (!d || *d != m)
        throw std::domain_error("grading is not admissible: the component of Z-degree " + std::to_string(m) +
                                " is not contained in J_" + std::to_string(m));
    }
    if (upper && m < 0) continue;
    out.components[g] = basis;
  }
  if (target == CarrierKind::ut0 || target == CarrierKind::sln) {
    if (a.carrier.kind == CarrierKind::sln)
      out.carrier.kind = target;
    else
      out = trace_zero_restriction(out);
  }
  return out;
}

GradedAlgebra restrict_grading(const GradedAlgebra& a, CarrierKind target) {
  GradedAlgebra sharp = restrict_grading_sharp(a, target);
  const GroupHom drop = GroupHom::drop_z(sharp.group);
  GradedAlgebra out = coarsen(sharp, drop);
  if (sharp.distinguished) out.distinguished = drop(*sharp.distinguished);
  return out;
}

GradedAlgebra trace_zero_restriction(const GradedAlgebra& a) {
  GradedAlgebra out = a;
  out.kind = AlgebraKind::lie;
  if (a.carrier.kind == CarrierKind::ut)
    out.carrier.kind = CarrierKind::ut0;
  else if (a.carrier.kind == CarrierKind::mn)
    out.carrier.kind = CarrierKind::sln;
  else
    throw std::invalid_argument("trace_zero_restriction: carrier is already trace-zero");

  std::optional<Elt> where;
  for (const auto& [g, basis] : a.components)
    for (const auto& x : basis)
      if (!trace(x).is_zero()) {
        if (where && *where != g) throw std::domain_error("trace is nonzero on more than one homogeneous component");
        where = g;
      }
  if (!where) throw std::logic_error("trace_zero_restriction: no basis element has nonzero trace");

  std::vector<Mat> kept, weighted;
  for (const auto& x : a.components.at(*where)) (trace(x).is_zero() ? kept : weighted).push_back(x);
  for (std::size_t i = 0; i + 1 < weighted.size(); ++i)
    kept.push_back(weighted[i] - weighted[i + 1].scaled(trace(weighted[i]) / trace(weighted[i + 1])));
  if (kept.empty())
    out.components.erase(*where);
  else
    out.components[*where] = std::move(kept);
  return out;
}

bool is_canonical_form(const GradedAlgebra& b) {
  for (const auto& [g, basis] : b.components)
    for (const auto& x : basis)
      if (!single_block_diagonal(b.carrier.profile, x)) return false;
  return true;
}

}  // namespace gradedbloc
