#pragma once

#include <vector>

namespace gradedbloc {

/// Block sizes (n_1, ..., n_s) of an upper block-triangular algebra.
class BlockProfile {
 public:
  BlockProfile() = default;
  explicit BlockProfile(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int s() const { return static_cast<int>(sizes_.size()); }
  int n() const { return n_; }
  bool symmetric() const;
  /// 0-based block containing 0-based row/column index i.
  int block_of(int i) const { return block_of_[i]; }
  /// First 0-based index of block q.
  int start(int q) const { return starts_[q]; }

  bool operator==(const BlockProfile& o) const { return sizes_ == o.sizes_; }

 private:
  std::vector<int> sizes_;
  std::vector<int> starts_;
  std::vector<int> block_of_;
  int n_ = 0;
};

}  // namespace gradedbloc
