#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gradedbloc/classify.hpp"
#include "gradedbloc/graded.hpp"

namespace gradedbloc {

/// Isomorphism invariants of a grading, computed by brute force.
struct GradedInvariants {
  std::set<Elt> support;
  std::map<Elt, std::size_t> dims;
  std::size_t identity_component_dim = 0;
  /// Degrees whose component contains a nonzero element commuting with the whole carrier.
  std::set<Elt> center_degrees;
  /// dims_in_radical_power[g][m] = dim(A_g intersected with the span of J_m, J_{m+1}, ...).
  std::map<Elt, std::vector<std::size_t>> radical_filtration;

  bool operator==(const GradedInvariants&) const = default;
};

GradedInvariants graded_invariants(const GradedAlgebra& a);

/// y -> x y x^{-1}, optionally applied to -tau(y), with degrees shifted by relabel.
struct Witness {
  Mat x;
  bool minus_tau = false;
  Elt relabel;
};

/// True iff the witness maps every component of a onto the relabelled component of b.
/// Throws std::domain_error when x is singular.
bool apply_witness(const GradedAlgebra& a, const GradedAlgebra& b, const Witness& w);

/// Explicit witness for two parameter sets that iso_decide declares isomorphic.
std::optional<Witness> construct_witness(const GradingParams& p1, const GradingParams& p2,
                                         const BlockProfile& profile, AlgebraKind kind, const IsoVerdict& verdict);

struct Evidence {
  bool isomorphic = false;       // the iso_decide verdict
  bool verdict_agrees = false;   // confirmed by a witness or by differing invariants, or abstained
  std::string status;            // "witness", "obstruction", "incomplete", "witness_failed"
  std::optional<Witness> witness;
  std::string obstruction;
};

Evidence refute_or_confirm(const GradingParams& p1, const GradingParams& p2, const BlockProfile& profile,
                           AlgebraKind kind);

}  // namespace gradedbloc
