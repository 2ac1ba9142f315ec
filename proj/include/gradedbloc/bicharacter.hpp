#pragma once

#include <cstdint>
#include <vector>

#include "gradedbloc/abgroup.hpp"

namespace gradedbloc {

/// Alternating bicharacter on a finite subgroup T, valued in Q/Z.
///
/// Given by its values on pairs of generators of T; construction checks that the
/// table extends to a well-defined bimultiplicative alternating map on all of T.
class Bicharacter {
 public:
  Bicharacter() = default;
  Bicharacter(FinSubgroup domain, std::vector<std::vector<QmodZ>> gen_table);

  static Bicharacter zero(const FinSubgroup& domain);

  const FinSubgroup& domain() const { return domain_; }
  const std::vector<std::vector<QmodZ>>& gen_table() const { return gen_table_; }

  /// beta(u, v); throws std::domain_error when u or v lies outside T.
  QmodZ operator()(const Elt& u, const Elt& v) const;
  QmodZ at(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }

  /// beta^{-1}, i.e. the negated table.
  Bicharacter inverse() const;
  /// Induced bicharacter on the image of T; requires the kernel part to lie in the radical.
  Bicharacter push_forward(const GroupHom& h) const;

  FinSubgroup radical() const;
  bool is_nondegenerate() const { return radical().size() == 1; }

  bool operator==(const Bicharacter& o) const {
    return domain_ == o.domain_ && table_ == o.table_;
  }

 private:
  std::size_t size() const { return domain_.size(); }

  FinSubgroup domain_;
  std::vector<std::vector<QmodZ>> gen_table_;
  std::vector<QmodZ> table_;  // |T| x |T|, indexed by element positions
};

struct SymplecticPair {
  Elt u;
  Elt v;
  std::int64_t ell;  // ord(u) = ord(v) = ell, beta(u, v) = 1/ell
};

/// Decomposes a non-degenerate (T, beta) into hyperbolic cyclic pairs.
/// Throws std::invalid_argument("degenerate bicharacter") otherwise.
std::vector<SymplecticPair> symplectic_basis(const Bicharacter& beta);

/// Quadratic form on a 2-elementary subgroup, values in {0, 1/2}.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  QuadraticForm(FinSubgroup domain, std::vector<QmodZ> values);

  const FinSubgroup& domain() const { return domain_; }
  const std::vector<QmodZ>& values() const { return values_; }
  QmodZ operator()(const Elt& t) const;

  /// eta(u + v) = beta(u, v) + eta(u) + eta(v) for all u, v.
  bool polarizes_to(const Bicharacter& beta) const;

 private:
  FinSubgroup domain_;
  std::vector<QmodZ> values_;
};

/// eta(t) = chi(t) + eta_bar(pi(t)) on T, where pi maps T onto the domain of eta_bar.
QuadraticForm quadratic_from_char(const FinSubgroup& T, const Character& chi,
                                  const QuadraticForm& eta_bar, const GroupHom& pi);

}  // namespace gradedbloc
