#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradedbloc/qmodz.hpp"

namespace gradedbloc {

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<std::int64_t>;

/// The N-th cyclotomic polynomial. Throws for N = 0.
IntPoly cyclotomic_poly(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Element of Q(zeta_N), stored as its residue modulo Phi_N.
///
/// Values of different orders interoperate: binary operations first lift both
/// operands into Q(zeta_lcm).
class CycloNum {
 public:
  CycloNum() : order_(1), coeffs_(1) {}
  CycloNum(long v) : order_(1), coeffs_{mpq_class(v)} {}  // NOLINT: implicit from integers is intended
  explicit CycloNum(const mpq_class& v) : order_(1), coeffs_{v} {}
  /// Reduces an arbitrary-length coefficient vector modulo Phi_N.
  CycloNum(std::int64_t order, std::vector<mpq_class> coeffs);

  static CycloNum root_of_unity(const QmodZ& q);

  std::int64_t order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<mpq_class> as_rational() const;
  /// q with this == root_of_unity(q), if this is a root of unity.
  std::optional<QmodZ> as_root_of_unity() const;

  /// Same field element in Q(zeta_M); requires N | M.
  CycloNum lift(std::int64_t m) const;

  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator/(const CycloNum& o) const { return *this * o.inv(); }
  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  CycloNum inv() const;

  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::int64_t order_;
  std::vector<mpq_class> coeffs_;  // length phi(order_)
};

}  // namespace gradedbloc
