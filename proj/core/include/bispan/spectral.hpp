#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "bispan/bipartite_graph.hpp"

namespace bispan {

/// Dense symmetric real matrix, row-major. Writes through set() keep it
/// symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * order_ + j] = v;
    data_[j * order_ + i] = v;
  }
  void add_to_diagonal(std::size_t i, double v) { data_[i * order_ + i] += v; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * order_, order_};
  }
  std::span<const double> data() const noexcept { return data_; }

  /// y = M x
  void multiply(std::span<const double> x, std::span<double> y) const;

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

/// Aligned text, one row per line. Integral entries print without decimals.
void print_matrix(std::ostream& out, const SymMatrix& mtx);

/// Q(G) = D(G) + A(G) on the combined numbering (A first, then B).
SymMatrix signless_laplacian(const BipartiteGraph& g);

enum class EigenMethod { power_iteration, jacobi };

std::string_view to_string(EigenMethod method);

/// Largest eigenvalue with the residual ||Mx - value x|| of the returned
/// unit vector.
struct SpectralEstimate {
  double value = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  EigenMethod method = EigenMethod::power_iteration;
};

inline constexpr double kDefaultSpectralTolerance = 1e-10;
inline constexpr std::size_t kDenseOrderCap = 4096;
inline constexpr std::size_t kJacobiOrderCap = 512;

/// Largest eigenvalue of a symmetric nonnegative matrix.
///
/// Power iteration from the all-ones vector with a Rayleigh quotient readout,
/// capped at 100 * order iterations. Converged means
/// residual <= tol * max(1, value). If that cap is hit and the order is at
/// most kJacobiOrderCap, falls back to cyclic Jacobi diagonalization;
/// otherwise throws NumericalError carrying the last estimate.
///
/// Orders above kDenseOrderCap throw CapacityError.
SpectralEstimate spectral_radius(const SymMatrix& mtx, double tol = kDefaultSpectralTolerance);

/// q(G), the signless Laplacian spectral radius.
SpectralEstimate signless_spectral_radius(const BipartiteGraph& g,
                                          double tol = kDefaultSpectralTolerance);

/// All eigenvalues (ascending) by cyclic Jacobi rotations. Order <= kJacobiOrderCap.
std::vector<double> jacobi_eigenvalues(const SymMatrix& mtx);

/// Quotient of Q(G) under a vertex partition: entry (i, j) is the average,
/// over rows in part i, of the row sums of block (i, j).
///
/// Entries are kept exactly as block_total(i, j) / block_size(i).
class QuotientMatrix {
 public:
  QuotientMatrix(std::vector<std::size_t> block_sizes, std::vector<std::int64_t> block_totals,
                 bool equitable);

  std::size_t order() const noexcept { return sizes_.size(); }
  std::span<const std::size_t> block_sizes() const noexcept { return sizes_; }

  std::int64_t block_total(std::size_t i, std::size_t j) const { return totals_[i * order() + j]; }
  double entry(std::size_t i, std::size_t j) const;

  /// True iff every block of the source matrix had constant row sums.
  bool equitable() const noexcept { return equitable_; }
  bool integral() const;
  /// Throws InputError if the entry is not an integer.
  std::int64_t integer_entry(std::size_t i, std::size_t j) const;

  /// Row-major dense copy of the entries.
  std::vector<double> dense() const;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::int64_t> totals_;
  bool equitable_ = false;
};

void print_matrix(std::ostream& out, const QuotientMatrix& mtx);

/// Vertices use the combined numbering (A first). The parts must be
/// nonempty, disjoint and cover all m + n vertices, else InputError.
QuotientMatrix quotient_matrix(const BipartiteGraph& g,
                               std::span<const std::vector<std::size_t>> partition);

}  // namespace bispan
