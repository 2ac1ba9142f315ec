#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedbloc/abgroup.hpp"
#include "gradedbloc/bicharacter.hpp"
#include "gradedbloc/block_profile.hpp"
#include "gradedbloc/mat.hpp"

namespace gradedbloc {

enum class AlgebraKind { assoc, lie, jordan };
enum class CarrierKind { mn, ut, ut0, sln };

std::string to_string(AlgebraKind k);
std::string to_string(CarrierKind k);
AlgebraKind parse_algebra_kind(const std::string& s);
CarrierKind parse_carrier_kind(const std::string& s);

/// The subspace of M_n carrying a grading. For M_n and sl_n the profile only
/// records the block structure used by admissibility checks.
struct Carrier {
  CarrierKind kind = CarrierKind::mn;
  BlockProfile profile;

  int n() const { return profile.n(); }
  /// Dimension of the carrier subspace.
  int dim() const;
  /// Exact membership test.
  bool contains(const Mat& x) const;
  bool operator==(const Carrier&) const = default;
};

Mat product(AlgebraKind kind, const Mat& x, const Mat& y);

struct GradedAlgebra {
  AbGroup group;
  AlgebraKind kind = AlgebraKind::assoc;
  Carrier carrier;
  /// Degree -> basis of the homogeneous component. Empty components are not stored.
  std::map<Elt, std::vector<Mat>> components;
  /// Order-2 distinguished element of a Type II grading.
  std::optional<Elt> distinguished;

  int n() const { return carrier.n(); }
  std::size_t total_dim() const;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;
};

VerifyReport verify_grading(const GradedAlgebra& a);

/// Elementary grading on M_n: E_ij has degree gamma_i - gamma_j.
GradedAlgebra build_elementary(const AbGroup& g, const std::vector<Elt>& gamma);

struct DivisionGrading {
  FinSubgroup T;
  Bicharacter beta;
  int ell = 1;
  /// Distinguished basis element X_t for every t in T.
  std::map<Elt, Mat> X;
  GradedAlgebra algebra;

  const Mat& at(const Elt& t) const;
};

/// Division grading on M_ell from generalized clock and shift matrices.
DivisionGrading build_division(const FinSubgroup& T, const Bicharacter& beta);

/// Grading on M_k tensor M_ell with E tensor X_t of degree deg(E) + t.
GradedAlgebra kronecker_grading(const GradedAlgebra& elem, const DivisionGrading& d);

/// Coarsening along a homomorphism from the grading group.
GradedAlgebra coarsen(const GradedAlgebra& a, const GroupHom& alpha);

/// Reads off tau(X_t) = eta_bar(t) X_t on a 2-elementary support.
QuadraticForm eta_bar_from_division(const DivisionGrading& d);

/// Basis of the subspace for the carrier.
std::vector<Mat> carrier_basis(const Carrier& c);

/// True when both gradings have the same support and equal spans degree by degree.
bool same_components(const GradedAlgebra& a, const GradedAlgebra& b);

}  // namespace gradedbloc
