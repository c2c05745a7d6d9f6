#include "cantor/thickness_bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantor {

namespace {

const Rational kOne(1);

// Refines the widest bracket among `bs` once; false if all are exact.
template <typename... B>
bool refine_widest(B&... bs) {
  Bracket* widest = nullptr;
  auto pick = [&](Bracket& b) {
    if (!b.exact() && (widest == nullptr || b.width() > widest->width())) widest = &b;
  };
  (pick(bs), ...);
  if (widest == nullptr) return false;
  *widest = refine(*widest);
  return true;
}

void require_hypothesis(std::size_t nj, std::size_t ell) {
  if (nj <= ell) throw std::invalid_argument("bound needs n_j > l");
}

// lo = (m-1)^∞ and hi = (m-1)^N 0^∞ for the same x. Subtracting the two
// defining equations gives hi - lo = (1 - lo) hi^{N+1} exactly, an equality no
// bracket refinement can certify; any larger exponent only shrinks the right side.
bool is_all_max_pair(const Bracket& lo, const Bracket& hi, std::size_t exponent) {
  if (lo.x() != hi.x()) return false;
  const Code a = lo.code().canonical();
  const Code b = hi.code().canonical();
  if (a.tail() != Tail::Max || !a.prefix().empty() || b.tail() != Tail::Zero || b.prefix().empty()) return false;
  const auto top = static_cast<Digit>(b.base() - 1);
  return std::all_of(b.prefix().begin(), b.prefix().end(), [top](Digit d) { return d == top; }) &&
         b.prefix().size() + 1 <= exponent;
}

}  // namespace

bool holds_length_bound(const Bracket& lo, const Bracket& hi, std::size_t exponent, std::size_t max_steps) {
  if (is_all_max_pair(lo, hi, exponent)) return true;
  Bracket a = lo;
  Bracket b = hi;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    const Rational lhs = b.lo() - a.hi();
    const Rational rhs = (kOne - a.lo()) * pow(b.hi(), exponent);
    if (lhs >= rhs) return true;
    if (!refine_widest(a, b)) return false;
  }
  return false;
}

bool holds_gap_bound(const Bracket& lambda2, const Bracket& lambda3, int m, std::size_t nj, std::size_t ell,
                     std::size_t n, std::size_t max_steps) {
  require_hypothesis(nj, ell);
  Bracket l2 = lambda2;
  Bracket l3 = lambda3;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    const Rational lhs = l3.hi() - l2.lo();
    const Rational rhs =
        Rational(m) * pow(l3.lo(), nj - ell) / (kOne - l3.lo()) * pow(l2.lo(), nj - ell + n + 1);
    if (lhs <= rhs) return true;
    if (!refine_widest(l2, l3)) return false;
  }
  return false;
}

bool holds_hull_gap_bound(const Bracket& qk, const Bracket& pk1, int m, std::size_t nj, std::size_t e,
                          std::size_t ell, std::size_t max_steps) {
  require_hypothesis(nj, ell);
  require_hypothesis(e, ell);
  Bracket q = qk;
  Bracket p = pk1;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    const Rational lhs = p.hi() - q.lo();
    const Rational rhs = pow(q.lo(), nj - ell + 1) * Rational(m) / (kOne - p.lo()) * pow(p.lo(), e - ell);
    if (lhs <= rhs) return true;
    if (!refine_widest(q, p)) return false;
  }
  return false;
}

Rational lip_upper_constant(const Rational& x, int m, const Rational& q) {
  return (kOne - Rational(m) * q) * x / (Rational(m - 1) * q);
}

bool holds_lip_upper(const Bracket& a, const Bracket& b, const Rational& q, std::size_t max_steps) {
  if (a.x() != b.x() || a.base() != b.base()) throw std::invalid_argument("brackets for different points");
  const int m = a.base();
  const Rational c = lip_upper_constant(a.x(), m, q);
  const Rational lhs = abs(eval_pi(a.code(), q) - eval_pi(b.code(), q));
  Bracket u = a;
  Bracket v = b;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    const Rational dist = max(u.hi() - v.lo(), v.hi() - u.lo());
    if (lhs > c * dist) return true;
    if (!refine_widest(u, v)) return false;
  }
  return false;
}

Rational pair_ratio_bound(const Bracket& lambda1, const Bracket& lambda2, const Bracket& lambda3,
                          const Bracket& lambda4, int m, std::size_t nj, std::size_t ell) {
  require_hypothesis(nj, ell);
  // Decreasing in λ1 and λ3, increasing in λ2 and λ4.
  const Rational denom = Rational(m) * pow(lambda3.hi(), nj - ell);
  const Rational one_minus_3 = kOne - lambda3.hi();
  const Rational left = (kOne - lambda1.hi()) * one_minus_3 * pow(lambda2.lo(), ell) / denom;
  const Rational right = one_minus_3 * one_minus_3 * pow(lambda4.lo(), ell) / denom;
  return min(left, right);
}

Rational hull_ratio_bound(const Bracket& p, const Bracket& q, int m, std::size_t nj, std::size_t ell) {
  require_hypothesis(nj, ell);
  const Rational one_minus_q = kOne - q.hi();
  return one_minus_q * one_minus_q * pow(p.lo(), ell) / (Rational(m) * pow(q.hi(), nj - ell));
}

Rational interval_growth_bound(int m, std::size_t ell) {
  return pow(Rational(2 * m), ell + 1) / Rational(m - 1);
}

}  // namespace cantor
