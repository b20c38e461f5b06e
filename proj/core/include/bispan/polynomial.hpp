#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bispan/spectral.hpp"

namespace bispan {

/// Polynomial with int64 coefficients stored lowest degree first. Trailing
/// zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> ascending);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^i, zero past the degree.
  std::int64_t coefficient(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }

  /// Horner in long double.
  double evaluate(double x) const;
  /// Exact; throws CapacityError if an intermediate leaves 100 bits.
  std::int64_t evaluate_exact(std::int64_t x) const;

  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// "x^4 - 14x^3 + 49x^2 - 40x"
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& out, const Polynomial& p);

/// Square integer matrix, row-major.
struct IntMatrix {
  std::size_t order = 0;
  std::vector<std::int64_t> entries;

  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries[i * order + j]; }
};

inline constexpr std::size_t kCharPolyOrderCap = 8;

/// det(xI - M) by the Faddeev-LeVerrier trace recursion in 128-bit
/// integers. Every division in the recursion is exact for integer input.
/// Order must not exceed kCharPolyOrderCap.
Polynomial char_poly(const IntMatrix& mtx);
/// Requires integer entries (InputError otherwise).
Polynomial char_poly(const QuotientMatrix& mtx);
/// Requires integer entries (InputError otherwise).
Polynomial char_poly(const SymMatrix& mtx);

/// Largest real root of p in [lo, hi] that is either a sign change or an
/// exact zero of p. An even-multiplicity root is found only when it lands
/// exactly on a critical point or an end of the bracket.
///
/// Roots are isolated recursively: the real roots of p' split the bracket
/// into pieces on which p is monotone, and the highest piece with a sign
/// change is refined by bisection with safeguarded secant steps. Throws
/// NumericalError if no such root exists in the bracket.
double largest_real_root(const Polynomial& p, double lo, double hi);

/// All real roots in [lo, hi] found the same way, ascending.
std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi);

}  // namespace bispan
