#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gradedbloc/blocktri.hpp"
#include "gradedbloc/graded.hpp"
#include "gradedbloc/kappa.hpp"

namespace gradedbloc {

struct TypeIParams {
  FinSubgroup T;
  Bicharacter beta;
  std::vector<KappaFn> kappas;
};

struct TypeIIParams {
  FinSubgroup T;
  Bicharacter beta;
  Elt g0;
  std::vector<KappaFn> kappas;
};

/// Parameters of a grading on a block-triangular algebra over the group `group`.
struct GradingParams {
  AbGroup group;
  std::variant<TypeIParams, TypeIIParams> data;
  /// Degree of the identity matrix (Lie algebra UT^(-) only).
  std::optional<Elt> deg_identity;

  bool is_type2() const { return std::holds_alternative<TypeIIParams>(data); }
  const FinSubgroup& T() const;
  const Bicharacter& beta() const;
  const std::vector<KappaFn>& kappas() const;
};

/// A Lie grading on UT0 together with the degree of the identity matrix.
struct UTminusParams {
  GradingParams lie_params;
  Elt deg_identity;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind);

/// Derived data of Type II parameters: the distinguished element f, the
/// quotient by <f>, the induced division grading, chi, eta_bar and eta.
struct TypeIIContext {
  Elt f;
  Quotient bar;
  FinSubgroup T_bar;
  Bicharacter beta_bar;
  DivisionGrading D_bar;
  Character chi;
  QuadraticForm eta_bar;
  QuadraticForm eta;
  /// Lift in T of each element of T_bar (the lexicographically smallest preimage).
  std::map<Elt, Elt> lift;
};

TypeIIContext type2_context(const AbGroup& g, const FinSubgroup& T, const Bicharacter& beta);

/// The tuple gamma of a Type II grading with its 0-based block indices.
struct GammaFill {
  std::vector<Elt> gamma;
  std::vector<int> block;
  int p = 0;
  int q = 0;
};

GammaFill fill_gamma(const TypeIIParams& params, const AbGroup& g, const BlockProfile& profile,
                     const TypeIIContext& ctx);

/// Block form of Phi: entry c is (column block of row block c, ell x ell block).
std::vector<std::pair<int, Mat>> phi_blocks(const GammaFill& fill, const Elt& g0, const AbGroup& g,
                                            const TypeIIContext& ctx);

/// The matrix Phi in M_k tensor D_bar.
Mat build_Phi(const GammaFill& fill, const Elt& g0, const AbGroup& g, const TypeIIContext& ctx);

/// Lifts a tuple of G elements with block indices to Z x G: (-(block + 1), g).
std::vector<Elt> sharp_tuple(const AbGroup& g, const std::vector<Elt>& gamma, const std::vector<int>& block);

/// Canonical tuple of a Type I parameter set: cosets in canonical order,
/// repetitions adjacent, block by block.
void typeI_gamma(const TypeIParams& params, std::vector<Elt>& gamma, std::vector<int>& block);

/// Admissible grading on M_n by Z x G built from an explicit tuple over G and T, beta.
GradedAlgebra build_typeI_sharp_from_gamma(const AbGroup& g, const FinSubgroup& T, const Bicharacter& beta,
                                           const std::vector<Elt>& gamma, const std::vector<int>& block,
                                           AlgebraKind kind);

/// Eigenspace split of the Type II construction on M_n, graded by Z x G.
/// Expects validated parameters.
GradedAlgebra build_typeII_sharp(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind);

/// Admissible grading on M_n by Z x G for the parameters (Type I or Type II).
GradedAlgebra build_sharp(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind);

/// Carrier used for a case: UT for assoc/jordan, UT0 for lie.
CarrierKind carrier_for(AlgebraKind kind);

GradedAlgebra build_typeI(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind);
GradedAlgebra build_typeII(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind);
/// Dispatches on the parameter type; validates first and throws std::invalid_argument on failure.
GradedAlgebra build_grading(const GradingParams& params, const BlockProfile& profile, AlgebraKind kind);
/// Lie grading on UT^(-): the UT0 grading plus the identity in deg_identity.
GradedAlgebra build_utminus(const UTminusParams& params, const BlockProfile& profile);

/// Jordan grading on UT^(+) to the corresponding Lie grading on UT0 (n > 2).
GradedAlgebra jordan_lie_bridge(const GradedAlgebra& jordan);

struct IsoVerdict {
  bool isomorphic = false;
  /// Translation element g of the matching branch.
  std::optional<Elt> g;
  /// "translate", "inverse" or "type2" when isomorphic.
  std::string branch;
  std::string reason;
};

IsoVerdict iso_decide(const GradingParams& p1, const GradingParams& p2, const BlockProfile& profile,
                      AlgebraKind kind);
bool iso_utminus(const UTminusParams& p1, const UTminusParams& p2, const BlockProfile& profile);

/// Thrown when enumeration exceeds its work budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One representative per isomorphism class, for a finite group.
std::vector<GradingParams> enumerate_classes(const AbGroup& g, const BlockProfile& profile, AlgebraKind kind,
                                             std::int64_t budget = 1000000);

/// All subgroups of a finite group, in a deterministic order.
std::vector<FinSubgroup> all_subgroups(const AbGroup& g);
/// All alternating bicharacters on T.
std::vector<Bicharacter> all_bicharacters(const FinSubgroup& T);

}  // namespace gradedbloc
