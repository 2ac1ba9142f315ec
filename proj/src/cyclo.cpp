#include "gradedbloc/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gradedbloc {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly exact_div(IntPoly num, const IntPoly& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic_poly: inexact division");
  return q;
}

const IntPoly& cached_cyclotomic(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = exact_div(p, cached_cyclotomic(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

// Reduces p modulo the monic polynomial phi in place, leaving deg(phi) coefficients.
void reduce_mod(QPoly& p, const IntPoly& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    mpq_class c = p[i];
    for (std::size_t j = 0; j <= d; ++j)
      if (phi[j]) p[i - d + j] -= c * phi[j];
  }
  p.resize(d);
}

// Polynomial division over Q: a = q*b + r.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  const mpq_class lead = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    mpq_class c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

IntPoly cyclotomic_poly(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic_poly: order must be positive");
  return cached_cyclotomic(n);
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

CycloNum::CycloNum(std::int64_t order, std::vector<mpq_class> coeffs) : order_(order) {
  if (order <= 0) throw std::invalid_argument("CycloNum: order must be positive");
  const IntPoly& phi = cached_cyclotomic(order);
  const std::size_t d = phi.size() - 1;
  if (coeffs.size() < d) coeffs.resize(d, 0);
  reduce_mod(coeffs, phi);
  coeffs_ = std::move(coeffs);
}

CycloNum CycloNum::root_of_unity(const QmodZ& q) {
  std::vector<mpq_class> c(q.num() + 1, 0);
  c[q.num()] = 1;
  return {q.den(), std::move(c)};
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<mpq_class> CycloNum::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

std::optional<QmodZ> CycloNum::as_root_of_unity() const {
  const std::int64_t l = std::lcm<std::int64_t>(2, order_);
  for (std::int64_t j = 0; j < l; ++j) {
    QmodZ q(j, l);
    if (*this == root_of_unity(q)) return q;
  }
  return std::nullopt;
}

CycloNum CycloNum::lift(std::int64_t m) const {
  if (m % order_ != 0) throw std::invalid_argument("CycloNum::lift: target order must be a multiple");
  if (m == order_) return *this;
  const std::int64_t k = m / order_;
  std::vector<mpq_class> c((coeffs_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * k] = coeffs_[i];
  return {m, std::move(c)};
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  if (order_ != o.order_) {
    auto l = std::lcm(order_, o.order_);
    return lift(l) + o.lift(l);
  }
  CycloNum r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
  if (order_ != o.order_) {
    auto l = std::lcm(order_, o.order_);
    return lift(l) - o.lift(l);
  }
  CycloNum r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  if (auto a = as_rational()) {
    CycloNum r = o;
    for (auto& c : r.coeffs_) c *= *a;
    return r;
  }
  if (auto b = o.as_rational()) {
    CycloNum r = *this;
    for (auto& c : r.coeffs_) c *= *b;
    return r;
  }
  if (order_ != o.order_) {
    auto l = std::lcm(order_, o.order_);
    return lift(l) * o.lift(l);
  }
  return {order_, poly_mul(coeffs_, o.coeffs_)};
}

CycloNum CycloNum::inv() const {
  if (is_zero()) throw std::domain_error("CycloNum: division by zero");
  if (auto a = as_rational()) return CycloNum(mpq_class(1 / *a));
  // extended Euclid: s*a + t*phi = g (a nonzero constant, as Phi_N is irreducible)
  const IntPoly& phi_int = cached_cyclotomic(order_);
  QPoly phi(phi_int.begin(), phi_int.end());
  QPoly r0 = phi, r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{1};
  while (!r1.empty() && r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw std::logic_error("CycloNum::inv: non-invertible residue");
  for (auto& c : s1) c /= r1[0];
  return {order_, std::move(s1)};
}

bool CycloNum::operator==(const CycloNum& o) const {
  if (order_ != o.order_) {
    // cheap path for rationals in different presentations
    auto a = as_rational();
    auto b = o.as_rational();
    if (a && b) return *a == *b;
    auto l = std::lcm(order_, o.order_);
    return lift(l) == o.lift(l);
  }
  return coeffs_ == o.coeffs_;
}

std::string CycloNum::to_string() const {
  if (auto a = as_rational()) return a->get_str();
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].get_str() + ")";
    if (i > 0) s += "*z" + std::to_string(order_) + "^" + std::to_string(i);
  }
  return s;
}

}  // namespace gradedbloc
