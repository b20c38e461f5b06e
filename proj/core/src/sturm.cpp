#include "sturm.hpp"

#include <utility>

namespace bispan::detail {

namespace {

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

RationalPoly derivative(const RationalPoly& p) {
  RationalPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  trim(d);
  return d;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

RationalPoly to_rational(const Polynomial& p) {
  RationalPoly out;
  for (auto c : p.coefficients()) out.emplace_back(c);
  trim(out);
  return out;
}

RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  trim(a);
  const auto db = b.size() - 1;
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const auto shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rational evaluate(const RationalPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int roots_above(const RationalPoly& p, const Rational& c) {
  if (p.empty()) return -1;
  if (p.size() == 1) return 0;
  if (evaluate(p, c) == 0) return -1;

  std::vector<RationalPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    auto r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& coef : r) coef = -coef;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_c;
  std::vector<int> at_inf;
  for (const auto& q : chain) {
    at_c.push_back(sign(evaluate(q, c)));
    at_inf.push_back(sign(q.back()));
  }
  return sign_changes(at_c) - sign_changes(at_inf);
}

}  // namespace bispan::detail
