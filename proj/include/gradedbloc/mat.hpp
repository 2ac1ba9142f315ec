#pragma once

#include <map>
#include <string>
#include <utility>

#include "gradedbloc/cyclo.hpp"

namespace gradedbloc {

/// Sparse square matrix over cyclotomic numbers. Indices are 0-based; zero
/// entries are never stored.
class Mat {
 public:
  using Entries = std::map<std::pair<int, int>, CycloNum>;

  Mat() = default;
  explicit Mat(int n);

  static Mat identity(int n);
  static Mat unit(int n, int i, int j);

  int n() const { return n_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  CycloNum get(int i, int j) const;
  void set(int i, int j, const CycloNum& v);
  void add_to(int i, int j, const CycloNum& v);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const CycloNum& c) const;

  bool operator==(const Mat& o) const { return n_ == o.n_ && entries_ == o.entries_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_index(int i, int j) const;
  void check_same(const Mat& o) const;

  int n_ = 0;
  Entries entries_;
};

Mat lie_bracket(const Mat& x, const Mat& y);
Mat jordan_circ(const Mat& x, const Mat& y);
/// Flip along the secondary diagonal: E_ij -> E_{n-1-j, n-1-i}.
Mat tau_flip(const Mat& x);
Mat transpose(const Mat& x);
CycloNum trace(const Mat& x);
/// Kronecker product; rows of a index the outer blocks.
Mat kron(const Mat& a, const Mat& b);
/// Inverse by exact Gauss-Jordan elimination; throws std::domain_error when singular.
Mat inverse(const Mat& x);

}  // namespace gradedbloc
