#include "bispan/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "bispan/errors.hpp"

namespace bispan {

namespace {

using Wide = __int128;

constexpr Wide kWideGuard = Wide{1} << 100;

void guard(Wide v, const char* where) {
  if (v > kWideGuard || v < -kWideGuard)
    throw CapacityError(std::string(where) + ": intermediate exceeds 100 bits");
}

std::int64_t narrow(Wide v, const char* where) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw CapacityError(std::string(where) + ": result does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

int sign_of(long double v) { return (v > 0) - (v < 0); }

long double eval_ld(const Polynomial& p, long double x) {
  long double acc = 0.0L;
  const auto c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + static_cast<long double>(c[i]);
  return acc;
}

// Root of p inside [a, b] given opposite nonzero signs at the ends.
double refine_root(const Polynomial& p, double a, double b) {
  long double fa = eval_ld(p, a);
  long double fb = eval_ld(p, b);
  for (int it = 0; it < 400; ++it) {
    const double width = b - a;
    if (width <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(b))) break;
    // Secant candidate, accepted only if it lands well inside the bracket.
    double x = static_cast<double>(b - fb * (static_cast<long double>(b) - a) / (fb - fa));
    const double margin = 0.05 * width;
    if (!(x > a + margin && x < b - margin) || it % 3 == 2) x = 0.5 * (a + b);
    const long double fx = eval_ld(p, x);
    if (fx == 0.0L) return x;
    if (sign_of(fx) == sign_of(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

Polynomial::Polynomial(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

double Polynomial::evaluate(double x) const {
  return static_cast<double>(eval_ld(*this, x));
}

std::int64_t Polynomial::evaluate_exact(std::int64_t x) const {
  Wide acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
    guard(acc, "polynomial evaluation");
  }
  return narrow(acc, "polynomial evaluation");
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<std::int64_t> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = narrow(static_cast<Wide>(coeffs_[i]) * static_cast<Wide>(i), "derivative");
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<std::int64_t> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = narrow(static_cast<Wide>(lhs.coefficient(i)) + rhs.coefficient(i), "addition");
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<std::int64_t> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = narrow(static_cast<Wide>(lhs.coefficient(i)) - rhs.coefficient(i), "subtraction");
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Wide> acc(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      acc[i + j] += static_cast<Wide>(lhs.coeffs_[i]) * rhs.coeffs_[j];
      guard(acc[i + j], "multiplication");
    }
  std::vector<std::int64_t> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = narrow(acc[i], "multiplication");
  return Polynomial(std::move(out));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const auto c = p.coefficient(static_cast<std::size_t>(d));
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || d == 0) os << mag;
    if (d >= 1) os << 'x';
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& out, const Polynomial& p) { return out << to_string(p); }

Polynomial char_poly(const IntMatrix& mtx) {
  const auto t = mtx.order;
  if (t > kCharPolyOrderCap)
    throw CapacityError("char_poly limited to order " + std::to_string(kCharPolyOrderCap));
  if (mtx.entries.size() != t * t) throw InputError("matrix entry count does not match order");

  // c[t] = 1; N_1 = I; c[t-k] = -tr(A N_k) / k; N_{k+1} = A N_k + c[t-k] I.
  std::vector<Wide> c(t + 1, 0);
  c[t] = 1;
  std::vector<Wide> n(t * t, 0);
  for (std::size_t i = 0; i < t; ++i) n[i * t + i] = 1;
  std::vector<Wide> an(t * t);
  for (std::size_t k = 1; k <= t; ++k) {
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        Wide s = 0;
        for (std::size_t l = 0; l < t; ++l) s += static_cast<Wide>(mtx(i, l)) * n[l * t + j];
        guard(s, "char_poly");
        an[i * t + j] = s;
      }
    Wide trace = 0;
    for (std::size_t i = 0; i < t; ++i) trace += an[i * t + i];
    const auto kk = static_cast<Wide>(k);
    if (trace % kk != 0) throw InternalError("char_poly: inexact trace division");
    c[t - k] = -trace / kk;
    n = an;
    for (std::size_t i = 0; i < t; ++i) n[i * t + i] += c[t - k];
  }
  std::vector<std::int64_t> out(t + 1);
  for (std::size_t i = 0; i <= t; ++i) out[i] = narrow(c[i], "char_poly");
  return Polynomial(std::move(out));
}

Polynomial char_poly(const QuotientMatrix& mtx) {
  IntMatrix im{mtx.order(), std::vector<std::int64_t>(mtx.order() * mtx.order())};
  for (std::size_t i = 0; i < mtx.order(); ++i)
    for (std::size_t j = 0; j < mtx.order(); ++j) im.entries[i * im.order + j] = mtx.integer_entry(i, j);
  return char_poly(im);
}

Polynomial char_poly(const SymMatrix& mtx) {
  IntMatrix im{mtx.order(), std::vector<std::int64_t>(mtx.order() * mtx.order())};
  for (std::size_t i = 0; i < mtx.order(); ++i)
    for (std::size_t j = 0; j < mtx.order(); ++j) {
      const double v = mtx(i, j);
      if (v != std::round(v)) throw InputError("char_poly needs an integer matrix");
      im.entries[i * im.order + j] = static_cast<std::int64_t>(std::llround(v));
    }
  return char_poly(im);
}

std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi) {
  std::vector<double> roots;
  if (p.degree() <= 0 || !(lo <= hi)) return roots;

  std::vector<double> breaks{lo};
  for (double c : real_roots_in(p.derivative(), lo, hi))
    if (c > breaks.back()) breaks.push_back(c);
  if (hi > breaks.back()) breaks.push_back(hi);

  auto push = [&](double r) {
    if (roots.empty() || r > roots.back()) roots.push_back(r);
  };
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    const int sa = sign_of(eval_ld(p, a));
    const int sb = sign_of(eval_ld(p, b));
    if (sa == 0) push(a);
    if (sa != 0 && sb != 0 && sa != sb) push(refine_root(p, a, b));
    if (sb == 0 && i + 2 == breaks.size()) push(b);
  }
  return roots;
}

double largest_real_root(const Polynomial& p, double lo, double hi) {
  const auto roots = real_roots_in(p, lo, hi);
  if (roots.empty()) {
    throw NumericalError("no sign change of " + to_string(p) + " in [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]",
                         std::numeric_limits<double>::quiet_NaN());
  }
  return roots.back();
}

}  // namespace bispan
