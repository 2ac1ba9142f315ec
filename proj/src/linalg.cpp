#include "gradedbloc/linalg.hpp"

namespace gradedbloc {

SparseVec to_vec(const Mat& m) {
  SparseVec v;
  const std::int64_t n = m.n();
  for (const auto& [k, x] : m.entries()) v.emplace(k.first * n + k.second, x);
  return v;
}

Mat from_vec(const SparseVec& v, int n) {
  Mat m(n);
  for (const auto& [k, x] : v) m.set(static_cast<int>(k / n), static_cast<int>(k % n), x);
  return m;
}

void axpy(SparseVec& v, const CycloNum& c, const SparseVec& w) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : w) {
    auto [it, inserted] = v.try_emplace(k, c * x);
    if (inserted) continue;
    it->second += c * x;
    if (it->second.is_zero()) v.erase(it);
  }
}

SparseVec EchelonBasis::reduce_tracked(SparseVec v, SparseVec* combo) const {
  // Subtracting a row only touches keys at or after its pivot, so a single
  // ascending sweep suffices.
  auto it = v.begin();
  while (it != v.end()) {
    const std::int64_t key = it->first;
    auto p = pivots_.find(key);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const Row& row = rows_[p->second];
    const CycloNum c = -it->second;
    axpy(v, c, row.vec);
    if (combo) axpy(*combo, c, row.combo);
    it = v.upper_bound(key);
  }
  return v;
}

SparseVec EchelonBasis::reduce(const SparseVec& v) const { return reduce_tracked(v, nullptr); }

bool EchelonBasis::add(const SparseVec& v) {
  SparseVec combo{{static_cast<std::int64_t>(inserted_), CycloNum(1)}};
  ++inserted_;
  SparseVec r = reduce_tracked(v, &combo);
  if (r.empty()) {
    relations_.push_back(std::move(combo));
    return false;
  }
  const CycloNum inv = r.begin()->second.inv();
  for (auto& [k, x] : r) x *= inv;
  for (auto& [k, x] : combo) x *= inv;
  pivots_.emplace(r.begin()->first, rows_.size());
  rows_.push_back({std::move(r), std::move(combo)});
  return true;
}

std::optional<SparseVec> EchelonBasis::coordinates(const SparseVec& v) const {
  SparseVec combo;
  SparseVec r = reduce_tracked(v, &combo);
  if (!r.empty()) return std::nullopt;
  // reduce_tracked subtracted the rows, so v = -combo
  for (auto& [k, x] : combo) x = -x;
  return combo;
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& cols) {
  EchelonBasis b;
  for (const auto& c : cols) b.add(c);
  return b.relations();
}

std::size_t rank_of(const std::vector<SparseVec>& vecs) {
  EchelonBasis b;
  for (const auto& v : vecs) b.add(v);
  return b.rank();
}

}  // namespace gradedbloc
