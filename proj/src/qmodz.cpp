#include "gradedbloc/qmodz.hpp"

#include <numeric>
#include <stdexcept>

namespace gradedbloc {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

QmodZ::QmodZ(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("QmodZ: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = floor_mod(num, den);
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = den;
  num_ = num / g;
  den_ = den / g;
}

QmodZ QmodZ::operator+(const QmodZ& o) const {
  std::int64_t l = std::lcm(den_, o.den_);
  return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
}

QmodZ QmodZ::operator-(const QmodZ& o) const { return *this + (-o); }

QmodZ QmodZ::operator-() const { return {-num_, den_}; }

QmodZ QmodZ::operator*(std::int64_t k) const {
  return {floor_mod(num_ * floor_mod(k, den_), den_), den_};
}

std::string QmodZ::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace gradedbloc
