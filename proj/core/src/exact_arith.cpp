#include "cantor/exact_arith.hpp"

#include <string>
#include <utility>

#include "cantor/errors.hpp"

namespace cantor {

namespace detail {

struct BracketBuilder {
  static Bracket make(Rational lo, Rational hi, const Code& code, const Rational& x) {
    return Bracket(std::move(lo), std::move(hi), code, x);
  }
};

int residual_sign(const Code& code, const Rational& x, const Rational& lambda) {
  const Integer& a = lambda.value().get_num();
  const Integer& b = lambda.value().get_den();
  const Integer& p = x.value().get_num();
  const Integer& q = x.value().get_den();

  // S = Σ d_i a^i b^{n-i}, so π_λ(prefix) = S / b^n.
  Integer s = 0;
  Integer a_pow = 1;
  Integer b_pow = 1;
  for (Digit d : code.prefix()) {
    s *= b;
    a_pow *= a;
    b_pow *= b;
    if (d != 0) s += a_pow * static_cast<unsigned long>(d);
  }
  Integer lhs;
  Integer rhs;
  if (code.tail() == Tail::Max) {
    // Multiply through by b^n (b - a) > 0.
    const Integer gap = b - a;
    lhs = q * (s * gap + a_pow * a * static_cast<unsigned long>(code.base() - 1));
    rhs = p * b_pow * gap;
  } else {
    lhs = q * s;
    rhs = p * b_pow;
  }
  return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

}  // namespace detail

namespace {

using detail::BracketBuilder;
using detail::residual_sign;

Rational one_over(int m) { return Rational(1, m); }

void check_lambda(const Rational& lambda, int m) {
  if (lambda.sign() <= 0 || lambda > one_over(m)) {
    throw DomainError("lambda = " + lambda.str() + " outside (0, 1/" + std::to_string(m) + "]");
  }
}

void check_point(const Rational& x) {
  if (x.sign() <= 0 || x >= Rational(1)) {
    throw DomainError("x = " + x.str() + " outside (0, 1)");
  }
}

Rational half_sum(const Rational& lo, const Rational& hi) {
  mpq_class mid = lo.value() + hi.value();
  mpq_div_2exp(mid.get_mpq_t(), mid.get_mpq_t(), 1);
  return Rational(std::move(mid));
}

// Bisects [lo, hi] with sign(lo) < 0 < sign(hi) until width <= tol and lo > 0.
Bracket bisect(const Rational& x, const Code& code, Rational lo, Rational hi, const Rational& tol) {
  while (lo.sign() == 0 || hi - lo > tol) {
    Rational mid = half_sum(lo, hi);
    const int s = residual_sign(code, x, mid);
    if (s == 0) return BracketBuilder::make(mid, mid, code, x);
    if (s < 0) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return BracketBuilder::make(std::move(lo), std::move(hi), code, x);
}

// Plain bisection from [0, top] ends in an aligned cell of width top / 2^T,
// the first such width <= tol.
Rational grid_cell(const Rational& top, const Rational& tol) {
  mpq_class cell = top.value();
  while (cell > tol.value()) mpq_div_2exp(cell.get_mpq_t(), cell.get_mpq_t(), 1);
  return Rational(std::move(cell));
}

// Given lo <= root <= hi with hi - lo <= cell, returns exactly what plain
// bisection from [0, top] would, so hinted solves stay hint-independent.
Bracket snap_to_grid(const Rational& x, const Code& code, const Rational& lo, const Rational& hi,
                     const Rational& cell, const Rational& tol) {
  const Integer index = floor(lo / cell);
  Rational c0 = cell * Rational(index, Integer(1));
  Rational c1 = c0 + cell;
  if (hi > c1) {
    const int s = residual_sign(code, x, c1);
    if (s == 0) return BracketBuilder::make(c1, c1, code, x);
    if (s < 0) {
      c0 = c1;
      c1 += cell;
    }
  }
  if (c0.sign() > 0 && residual_sign(code, x, c0) == 0) return BracketBuilder::make(c0, c0, code, x);
  if (residual_sign(code, x, c1) == 0) return BracketBuilder::make(c1, c1, code, x);
  return bisect(x, code, std::move(c0), std::move(c1), tol);
}

bool same_stream(const Bracket& a, const Bracket& b) {
  return a.x() == b.x() && a.code().explicit_tail() && b.code().explicit_tail() &&
         a.code().canonical() == b.code().canonical();
}

}  // namespace

const Rational& default_tolerance() {
  static const Rational tol = Rational::pow2(-64);
  return tol;
}

Rational eval_pi(const Code& code, const Rational& lambda) {
  check_lambda(lambda, code.base());
  if (!code.explicit_tail()) {
    throw DomainError("cannot evaluate truncated code " + code.str());
  }
  Rational sum;
  const auto prefix = code.prefix();
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    sum += Rational(*it);
    sum *= lambda;
  }
  if (code.tail() == Tail::Max) {
    sum += Rational(code.base() - 1) * pow(lambda, prefix.size() + 1) / (Rational(1) - lambda);
  }
  return sum;
}

Bracket::Bracket(Rational lo, Rational hi, Code code, Rational x)
    : lo_(std::move(lo)), hi_(std::move(hi)), code_(std::move(code)), x_(std::move(x)) {}

Rational Bracket::midpoint() const { return half_sum(lo_, hi_); }

Bracket Bracket::parameter_max(const Rational& x, int m, Word known_prefix) {
  const Rational top = one_over(m);
  return Bracket(top, top, Code(m, std::move(known_prefix), Tail::Truncated), x);
}

Bracket solve_lambda(const Rational& x, const Code& code, const Rational& tol) {
  check_point(x);
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
  if (!code.explicit_tail()) throw DomainError("cannot solve for truncated code " + code.str());
  if (code.is_zero()) throw NoRoot("code " + code.str() + " is identically zero");

  const Rational top = one_over(code.base());
  const int s_top = residual_sign(code, x, top);
  if (s_top < 0) {
    throw NoRoot("code " + code.str() + " does not reach x = " + x.str() + " for any lambda <= 1/" +
                 std::to_string(code.base()));
  }
  if (s_top == 0) return BracketBuilder::make(top, top, code, x);
  return bisect(x, code, Rational(0), top, tol);
}

Bracket solve_lambda(const Rational& x, const Code& code, const Rational& tol, const SolveHint& hint) {
  const Rational top = one_over(code.base());
  const bool usable = hint.lo.sign() > 0 && hint.lo < hint.hi && hint.hi <= top &&
                      code.explicit_tail() && !code.is_zero() && tol.sign() > 0;
  if (!usable) return solve_lambda(x, code, tol);
  check_point(x);

  const int s_lo = residual_sign(code, x, hint.lo);
  const int s_hi = residual_sign(code, x, hint.hi);
  if (s_lo > 0 || s_hi < 0) return solve_lambda(x, code, tol);
  if (hint.hi == top && s_hi == 0) return BracketBuilder::make(top, top, code, x);

  const Rational cell = grid_cell(top, tol);
  if (s_lo == 0) return snap_to_grid(x, code, hint.lo, hint.lo, cell, tol);
  if (s_hi == 0) return snap_to_grid(x, code, hint.hi, hint.hi, cell, tol);
  const Bracket narrow = bisect(x, code, hint.lo, hint.hi, cell);
  return snap_to_grid(x, code, narrow.lo(), narrow.hi(), cell, tol);
}

Bracket refine(const Bracket& bracket) {
  if (bracket.exact()) return bracket;
  Rational mid = bracket.midpoint();
  const int s = residual_sign(bracket.code(), bracket.x(), mid);
  if (s == 0) return BracketBuilder::make(mid, mid, bracket.code(), bracket.x());
  if (s < 0) return BracketBuilder::make(std::move(mid), bracket.hi(), bracket.code(), bracket.x());
  return BracketBuilder::make(bracket.lo(), std::move(mid), bracket.code(), bracket.x());
}

Bracket refine_to(const Bracket& bracket, const Rational& tol) {
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
  Bracket out = bracket;
  while (!out.exact() && out.width() > tol) out = refine(out);
  return out;
}

std::strong_ordering compare_brackets(const Bracket& a, const Bracket& b, std::size_t max_steps) {
  if (same_stream(a, b)) return std::strong_ordering::equal;
  Bracket left = a;
  Bracket right = b;
  for (std::size_t step = 0;; ++step) {
    if (left.hi() < right.lo()) return std::strong_ordering::less;
    if (left.lo() > right.hi()) return std::strong_ordering::greater;
    if (left.exact() && right.exact()) return left.lo() <=> right.lo();
    if (left.exact()) return 0 <=> compare_to(right, left.lo(), max_steps - step);
    if (right.exact()) return compare_to(left, right.lo(), max_steps - step);
    if (step >= max_steps) break;
    const auto wl = left.width();
    const auto wr = right.width();
    if (wl >= wr) left = refine(left);
    if (wr >= wl) right = refine(right);
  }
  throw PrecisionExhausted("brackets for " + a.code().str() + " and " + b.code().str() +
                           " did not separate after " + std::to_string(max_steps) + " refinements");
}

std::strong_ordering compare_to(const Bracket& bracket, const Rational& value, std::size_t max_steps) {
  if (value < bracket.lo()) return std::strong_ordering::greater;
  if (value > bracket.hi()) return std::strong_ordering::less;
  if (bracket.exact()) return bracket.lo() <=> value;
  // value lies strictly inside a non-exact bracket, hence inside (0, 1/m):
  // one exact evaluation decides, since π_λ(code) is increasing in λ.
  (void)max_steps;
  const int s = residual_sign(bracket.code(), bracket.x(), value);
  if (s == 0) return std::strong_ordering::equal;
  return s < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

void separate(Bracket& left, Bracket& right, std::size_t max_steps) {
  for (std::size_t step = 0; step <= max_steps; ++step) {
    if (left.hi() < right.lo()) return;
    if (left.exact() && right.exact()) break;
    const auto wl = left.width();
    const auto wr = right.width();
    if (wl >= wr) left = refine(left);
    if (wr >= wl) right = refine(right);
  }
  throw PrecisionExhausted("could not separate " + left.code().str() + " from " + right.code().str() +
                           " within " + std::to_string(max_steps) + " refinements");
}

}  // namespace cantor
