#include "bispan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "bispan/errors.hpp"

namespace bispan {

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double residual_norm(const SymMatrix& mtx, std::span<const double> x, double lambda) {
  std::vector<double> y(x.size());
  mtx.multiply(x, y);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= lambda * x[i];
  return norm2(y);
}

bool converged(double residual, double value, double tol) {
  return residual <= tol * std::max(1.0, std::abs(value));
}

// Cyclic Jacobi. Returns eigenvalues on the diagonal of `a` and the
// eigenvectors as columns of `v` (both row-major, order t).
void jacobi_diagonalize(std::vector<double>& a, std::vector<double>& v, std::size_t t) {
  v.assign(t * t, 0.0);
  for (std::size_t i = 0; i < t; ++i) v[i * t + i] = 1.0;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * t + j]; };

  double frob = 0.0;
  for (double x : a) frob += x * x;
  const double target = 1e-30 * std::max(frob, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j) off += at(i, j) * at(i, j);
    if (off <= target) return;

    for (std::size_t p = 0; p + 1 < t; ++p) {
      for (std::size_t q = p + 1; q < t; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double tan = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(tan * tan + 1.0);
        const double s = tan * c;
        for (std::size_t k = 0; k < t; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < t; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < t; ++k) {
          const double vkp = v[k * t + p];
          const double vkq = v[k * t + q];
          v[k * t + p] = c * vkp - s * vkq;
          v[k * t + q] = s * vkp + c * vkq;
        }
      }
    }
  }
}

SpectralEstimate jacobi_radius(const SymMatrix& mtx, std::size_t iterations_so_far) {
  const auto t = mtx.order();
  std::vector<double> a(mtx.data().begin(), mtx.data().end());
  std::vector<double> v;
  jacobi_diagonalize(a, v, t);
  std::size_t best = 0;
  for (std::size_t i = 1; i < t; ++i)
    if (a[i * t + i] > a[best * t + best]) best = i;
  std::vector<double> x(t);
  for (std::size_t k = 0; k < t; ++k) x[k] = v[k * t + best];
  const double nx = norm2(x);
  for (auto& xi : x) xi /= nx;
  // Rayleigh quotient on the original matrix is the better readout.
  std::vector<double> y(t);
  mtx.multiply(x, y);
  const double value = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
  return {value, residual_norm(mtx, x, value), iterations_so_far, EigenMethod::jacobi};
}

std::string format_entry(double v) {
  std::ostringstream os;
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    os << static_cast<long long>(v);
  } else {
    os << std::fixed << std::setprecision(6) << v;
  }
  return os.str();
}

void print_dense(std::ostream& out, std::size_t order, const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  std::size_t width = 1;
  for (double v : values) {
    cells.push_back(format_entry(v));
    width = std::max(width, cells.back().size());
  }
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      if (j > 0) out << ' ';
      out << std::setw(static_cast<int>(width)) << cells[i * order + j];
    }
    out << '\n';
  }
}

}  // namespace

void SymMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < order_; ++i) {
    const double* r = data_.data() + i * order_;
    double s = 0.0;
    for (std::size_t j = 0; j < order_; ++j) s += r[j] * x[j];
    y[i] = s;
  }
}

void print_matrix(std::ostream& out, const SymMatrix& mtx) {
  print_dense(out, mtx.order(), {mtx.data().begin(), mtx.data().end()});
}

SymMatrix signless_laplacian(const BipartiteGraph& g) {
  const auto m = g.left_size();
  SymMatrix q(g.vertex_count());
  for (std::size_t a = 0; a < m; ++a) {
    q.add_to_diagonal(a, static_cast<double>(g.left_degree(a)));
    g.left_neighbors(a).for_each([&](std::size_t b) { q.set(a, m + b, 1.0); });
  }
  for (std::size_t b = 0; b < g.right_size(); ++b)
    q.add_to_diagonal(m + b, static_cast<double>(g.right_degree(b)));
  return q;
}

std::string_view to_string(EigenMethod method) {
  switch (method) {
    case EigenMethod::power_iteration:
      return "power_iteration";
    case EigenMethod::jacobi:
      return "jacobi";
  }
  return "unknown";
}

SpectralEstimate spectral_radius(const SymMatrix& mtx, double tol) {
  const auto t = mtx.order();
  if (t > kDenseOrderCap)
    throw CapacityError("dense spectral radius limited to order " + std::to_string(kDenseOrderCap));
  if (t == 0) return {};

  std::vector<double> x(t, 1.0 / std::sqrt(static_cast<double>(t)));
  std::vector<double> y(t);
  const std::size_t cap = 100 * t;
  double value = 0.0;
  double residual = 0.0;
  for (std::size_t it = 1; it <= cap; ++it) {
    mtx.multiply(x, y);
    value = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double r2 = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
      const double d = y[i] - value * x[i];
      r2 += d * d;
    }
    residual = std::sqrt(r2);
    if (converged(residual, value, tol)) return {value, residual, it, EigenMethod::power_iteration};
    const double ny = norm2(y);
    if (ny == 0.0) return {0.0, 0.0, it, EigenMethod::power_iteration};
    for (std::size_t i = 0; i < t; ++i) x[i] = y[i] / ny;
  }

  if (t <= kJacobiOrderCap) {
    auto est = jacobi_radius(mtx, cap);
    if (converged(est.residual, est.value, tol)) return est;
    throw NumericalError("jacobi fallback missed tolerance: residual " +
                             std::to_string(est.residual),
                         est.value);
  }
  throw NumericalError("power iteration did not converge in " + std::to_string(cap) +
                           " iterations (residual " + std::to_string(residual) + ")",
                       value);
}

SpectralEstimate signless_spectral_radius(const BipartiteGraph& g, double tol) {
  return spectral_radius(signless_laplacian(g), tol);
}

std::vector<double> jacobi_eigenvalues(const SymMatrix& mtx) {
  const auto t = mtx.order();
  if (t > kJacobiOrderCap)
    throw CapacityError("jacobi limited to order " + std::to_string(kJacobiOrderCap));
  std::vector<double> a(mtx.data().begin(), mtx.data().end());
  std::vector<double> v;
  jacobi_diagonalize(a, v, t);
  std::vector<double> out(t);
  for (std::size_t i = 0; i < t; ++i) out[i] = a[i * t + i];
  std::sort(out.begin(), out.end());
  return out;
}

QuotientMatrix::QuotientMatrix(std::vector<std::size_t> block_sizes,
                               std::vector<std::int64_t> block_totals, bool equitable)
    : sizes_(std::move(block_sizes)), totals_(std::move(block_totals)), equitable_(equitable) {
  if (totals_.size() != sizes_.size() * sizes_.size())
    throw InputError("quotient matrix totals do not match block count");
  for (auto s : sizes_)
    if (s == 0) throw InputError("quotient matrix block of size zero");
}

double QuotientMatrix::entry(std::size_t i, std::size_t j) const {
  return static_cast<double>(block_total(i, j)) / static_cast<double>(sizes_[i]);
}

bool QuotientMatrix::integral() const {
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j)
      if (block_total(i, j) % static_cast<std::int64_t>(sizes_[i]) != 0) return false;
  return true;
}

std::int64_t QuotientMatrix::integer_entry(std::size_t i, std::size_t j) const {
  const auto size = static_cast<std::int64_t>(sizes_[i]);
  if (block_total(i, j) % size != 0)
    throw InputError("quotient entry (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") is not an integer");
  return block_total(i, j) / size;
}

std::vector<double> QuotientMatrix::dense() const {
  std::vector<double> out(order() * order());
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j) out[i * order() + j] = entry(i, j);
  return out;
}

void print_matrix(std::ostream& out, const QuotientMatrix& mtx) {
  print_dense(out, mtx.order(), mtx.dense());
}

QuotientMatrix quotient_matrix(const BipartiteGraph& g,
                               std::span<const std::vector<std::size_t>> partition) {
  const auto m = g.left_size();
  const auto total = g.vertex_count();
  const auto p = partition.size();
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);

  std::vector<std::size_t> block_of(total, kUnassigned);
  std::vector<std::size_t> sizes(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (partition[i].empty()) throw InputError("partition part " + std::to_string(i) + " is empty");
    sizes[i] = partition[i].size();
    for (auto v : partition[i]) {
      if (v >= total) throw InputError("partition vertex " + std::to_string(v) + " out of range");
      if (block_of[v] != kUnassigned)
        throw InputError("vertex " + std::to_string(v) + " appears in two parts");
      block_of[v] = i;
    }
  }
  for (std::size_t v = 0; v < total; ++v)
    if (block_of[v] == kUnassigned)
      throw InputError("vertex " + std::to_string(v) + " is not covered by the partition");

  // Row sum of vertex v restricted to block j: its degree when v sits in j
  // (the diagonal term), plus its neighbors inside j.
  std::vector<std::int64_t> totals(p * p, 0);
  std::vector<std::int64_t> first_row(p * p, -1);
  bool equitable = true;
  std::vector<std::int64_t> row(p);
  for (std::size_t v = 0; v < total; ++v) {
    std::fill(row.begin(), row.end(), 0);
    const bool left = v < m;
    const auto degree = left ? g.left_degree(v) : g.right_degree(v - m);
    row[block_of[v]] += static_cast<std::int64_t>(degree);
    if (left) {
      g.left_neighbors(v).for_each([&](std::size_t b) { ++row[block_of[m + b]]; });
    } else {
      g.right_neighbors(v - m).for_each([&](std::size_t a) { ++row[block_of[a]]; });
    }
    const auto i = block_of[v];
    for (std::size_t j = 0; j < p; ++j) {
      totals[i * p + j] += row[j];
      auto& seen = first_row[i * p + j];
      if (seen < 0) {
        seen = row[j];
      } else if (seen != row[j]) {
        equitable = false;
      }
    }
  }
  return QuotientMatrix(std::move(sizes), std::move(totals), equitable);
}

}  // namespace bispan
