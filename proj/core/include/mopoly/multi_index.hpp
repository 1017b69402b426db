#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mopoly {

// Point on the lattice N^r indexing a multiple orthogonal polynomial.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<long> entries);
  static MultiIndex zeros(int r);

  int r() const { return static_cast<int>(entries_.size()); }
  long length() const;  // |n| = sum of entries
  long operator[](int j) const;

  MultiIndex plus(int k) const;
  // One step down in direction j, or nullopt when that leaves the lattice.
  std::optional<MultiIndex> minus(int j) const;

  bool operator==(const MultiIndex& rhs) const { return entries_ == rhs.entries_; }
  bool operator!=(const MultiIndex& rhs) const { return !(*this == rhs); }
  bool operator<(const MultiIndex& rhs) const { return entries_ < rhs.entries_; }

  const std::vector<long>& entries() const { return entries_; }

 private:
  std::vector<long> entries_;
};

std::string to_string(const MultiIndex& n);

// All indices with r components and |n| <= max_len, graded lexicographic order.
std::vector<MultiIndex> lattice_below(int r, long max_len);

}  // namespace mopoly
