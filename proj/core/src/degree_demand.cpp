#include "bispan/degree_demand.hpp"

#include <numeric>
#include <string>

#include "bispan/errors.hpp"

namespace bispan {

DegreeDemand::DegreeDemand(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("degree demand must cover at least one vertex");
  for (std::size_t a = 0; a < values_.size(); ++a) {
    if (values_[a] < 2) {
      throw InputError("degree demand for vertex " + std::to_string(a) + " is " +
                       std::to_string(values_[a]) + ", expected >= 2");
    }
  }
}

DegreeDemand DegreeDemand::uniform(std::size_t m, int k) {
  return DegreeDemand(std::vector<int>(m, k));
}

long DegreeDemand::total() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0L);
}

}  // namespace bispan
