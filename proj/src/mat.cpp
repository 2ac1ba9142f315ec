#include "gradedbloc/mat.hpp"

#include <stdexcept>
#include <vector>

namespace gradedbloc {

Mat::Mat(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Mat: negative dimension");
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.entries_.emplace(std::make_pair(i, i), CycloNum(1));
  return m;
}

Mat Mat::unit(int n, int i, int j) {
  Mat m(n);
  m.set(i, j, CycloNum(1));
  return m;
}

void Mat::check_index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("Mat: index out of range");
}

void Mat::check_same(const Mat& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Mat: dimension mismatch");
}

CycloNum Mat::get(int i, int j) const {
  check_index(i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? CycloNum() : it->second;
}

void Mat::set(int i, int j, const CycloNum& v) {
  check_index(i, j);
  if (v.is_zero())
    entries_.erase({i, j});
  else
    entries_[{i, j}] = v;
}

void Mat::add_to(int i, int j, const CycloNum& v) {
  check_index(i, j);
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, v);
  if (inserted) return;
  it->second += v;
  if (it->second.is_zero()) entries_.erase(it);
}

Mat Mat::operator+(const Mat& o) const {
  check_same(o);
  Mat r = *this;
  for (const auto& [k, v] : o.entries_) r.add_to(k.first, k.second, v);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_same(o);
  Mat r = *this;
  for (const auto& [k, v] : o.entries_) r.add_to(k.first, k.second, -v);
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& [k, v] : r.entries_) v = -v;
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  check_same(o);
  Mat r(n_);
  for (const auto& [ik, a] : entries_) {
    const int k = ik.second;
    for (auto it = o.entries_.lower_bound({k, 0}); it != o.entries_.end() && it->first.first == k; ++it)
      r.add_to(ik.first, it->first.second, a * it->second);
  }
  return r;
}

Mat Mat::scaled(const CycloNum& c) const {
  Mat r(n_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : entries_) r.entries_.emplace(k, v * c);
  return r;
}

std::string Mat::to_string() const {
  std::string s = "[n=" + std::to_string(n_);
  for (const auto& [k, v] : entries_)
    s += " (" + std::to_string(k.first + 1) + "," + std::to_string(k.second + 1) + "):" + v.to_string();
  return s + "]";
}

Mat lie_bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

Mat jordan_circ(const Mat& x, const Mat& y) { return x * y + y * x; }

Mat tau_flip(const Mat& x) {
  const int n = x.n();
  Mat r(n);
  for (const auto& [k, v] : x.entries()) r.set(n - 1 - k.second, n - 1 - k.first, v);
  return r;
}

Mat transpose(const Mat& x) {
  Mat r(x.n());
  for (const auto& [k, v] : x.entries()) r.set(k.second, k.first, v);
  return r;
}

CycloNum trace(const Mat& x) {
  CycloNum t;
  for (const auto& [k, v] : x.entries())
    if (k.first == k.second) t += v;
  return t;
}

Mat kron(const Mat& a, const Mat& b) {
  const int m = b.n();
  Mat r(a.n() * m);
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries())
      r.set(ka.first * m + kb.first, ka.second * m + kb.second, va * vb);
  return r;
}

Mat inverse(const Mat& x) {
  const int n = x.n();
  std::vector<std::vector<CycloNum>> a(n, std::vector<CycloNum>(2 * n));
  for (const auto& [k, v] : x.entries()) a[k.first][k.second] = v;
  for (int i = 0; i < n; ++i) a[i][n + i] = CycloNum(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("inverse: singular matrix");
    std::swap(a[piv], a[col]);
    const CycloNum inv = a[col][col].inv();
    for (auto& e : a[col]) e *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const CycloNum c = a[r][col];
      for (int j = col; j < 2 * n; ++j)
        if (!a[col][j].is_zero()) a[r][j] -= c * a[col][j];
    }
  }
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set(i, j, a[i][n + j]);
  return r;
}

}  // namespace gradedbloc
