#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gradedbloc {

/// A rational number modulo 1, stored in lowest terms with representative in [0, 1).
///
/// Used as the additive model of roots of unity: the value q stands for exp(2*pi*i*q).
class QmodZ {
 public:
  QmodZ() = default;
  QmodZ(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Multiplicative order of the root of unity this value represents.
  std::int64_t order() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  QmodZ operator+(const QmodZ& o) const;
  QmodZ operator-(const QmodZ& o) const;
  QmodZ operator-() const;
  QmodZ operator*(std::int64_t k) const;
  QmodZ& operator+=(const QmodZ& o) { return *this = *this + o; }

  auto operator<=>(const QmodZ&) const = default;

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::int64_t floor_mod(std::int64_t a, std::int64_t m);

}  // namespace gradedbloc
