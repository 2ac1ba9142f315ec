#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gradedbloc/cyclo.hpp"
#include "gradedbloc/mat.hpp"

namespace gradedbloc {

/// Sparse vector keyed by coordinate index.
using SparseVec = std::map<std::int64_t, CycloNum>;

/// Flattens a matrix to a vector keyed by i * n + j.
SparseVec to_vec(const Mat& m);
Mat from_vec(const SparseVec& v, int n);

/// Incrementally built row-echelon basis of a subspace.
///
/// Every inserted vector receives an index (0, 1, ...). Linear dependencies
/// among inserted vectors are recorded as relations over those indices, and
/// coordinates of a vector in the span are reported over the same indices.
class EchelonBasis {
 public:
  /// Inserts v; returns true when v was independent of the earlier vectors.
  bool add(const SparseVec& v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Remainder of v after elimination against the basis.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  /// Coefficients c with v = sum c_i * (inserted vector i), if v lies in the span.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

  /// Each relation r satisfies sum r_i * (inserted vector i) = 0; together they
  /// form a basis of all such relations.
  const std::vector<SparseVec>& relations() const { return relations_; }

 private:
  struct Row {
    SparseVec vec;    // leading coefficient 1 at the pivot
    SparseVec combo;  // vec as a combination of inserted vectors
  };

  SparseVec reduce_tracked(SparseVec v, SparseVec* combo) const;

  std::vector<Row> rows_;
  std::map<std::int64_t, std::size_t> pivots_;  // pivot coordinate -> row
  std::vector<SparseVec> relations_;
  std::size_t inserted_ = 0;
};

/// Adds c * w into v, dropping cancelled entries.
void axpy(SparseVec& v, const CycloNum& c, const SparseVec& w);

/// Basis of the solution space of sum_j c_j * cols[j] = 0.
std::vector<SparseVec> kernel(const std::vector<SparseVec>& cols);

/// Rank of a family of vectors.
std::size_t rank_of(const std::vector<SparseVec>& vecs);

}  // namespace gradedbloc
