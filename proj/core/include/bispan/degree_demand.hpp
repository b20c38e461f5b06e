#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bispan {

/// Lower bounds f(v) >= 2 on the tree degree of each A-vertex.
class DegreeDemand {
 public:
  /// Throws InputError if any entry is below 2 or the vector is empty.
  explicit DegreeDemand(std::vector<int> values);

  static DegreeDemand uniform(std::size_t m, int k);

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t a) const { return values_[a]; }
  std::span<const int> values() const noexcept { return values_; }

  /// Sum of f(v) over all of A.
  long total() const noexcept;

  friend bool operator==(const DegreeDemand&, const DegreeDemand&) = default;

 private:
  std::vector<int> values_;
};

}  // namespace bispan
