#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gradedbloc/block_profile.hpp"
#include "gradedbloc/graded.hpp"
#include "gradedbloc/kappa.hpp"

namespace gradedbloc {

/// 0-based index pairs (i, j) of the m-th block diagonal J_m.
std::set<std::pair<int, int>> jm_indices(const BlockProfile& profile, int m);

/// (-1 x n_1, -2 x n_2, ..., -s x n_s).
std::vector<std::int64_t> natural_Z_tuple(const BlockProfile& profile);

/// Block diagonal index m of a matrix supported in a single J_m.
std::optional<int> single_block_diagonal(const BlockProfile& profile, const Mat& x);

/// One entry of a multiplicity function on Z x G/T.
struct KappaZEntry {
  std::int64_t z = 0;
  Elt coset_rep;
  std::int64_t mult = 0;
};

struct AdmissibleSlices {
  std::int64_t a = 0;
  std::vector<KappaFn> kappas;  // kappas[i - 1](x) = kappa(a - i, x)
};

/// Splits kappa into the slices (kappa_1, ..., kappa_s) when its Z-support is
/// {a - s, ..., a - 1} and every slice has the size forced by the profile.
/// The size rule uses sqrt(|T|) (Type I) or sqrt(|T| / 2) (Type II).
std::optional<AdmissibleSlices> is_admissible_params(const FinSubgroup& T, const std::vector<KappaZEntry>& kappa,
                                                     const BlockProfile& profile, bool type2);

/// Restricts an admissible grading on M_n by Z x G to the carrier, keeping the
/// Z x G degrees. Throws std::domain_error naming the offending J_m when some
/// basis element of degree (m, g) is not supported in J_m.
GradedAlgebra restrict_grading_sharp(const GradedAlgebra& a, CarrierKind target);

/// restrict_grading_sharp followed by the coarsening Z x G -> G.
GradedAlgebra restrict_grading(const GradedAlgebra& a, CarrierKind target);

/// Intersects every component with the trace-zero matrices (UT -> UT0, M_n -> sl_n); the result is a Lie grading.
/// Throws std::domain_error when the trace is nonzero on more than one component.
GradedAlgebra trace_zero_restriction(const GradedAlgebra& a);

/// True iff every basis element of every component lies in a single J_m.
bool is_canonical_form(const GradedAlgebra& b);

}  // namespace gradedbloc
