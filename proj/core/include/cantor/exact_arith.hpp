#pragma once

#include <compare>
#include <cstddef>

#include "cantor/code.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Width bracketed by default: 2^-64.
[[nodiscard]] const Rational& default_tolerance();

/// Default cap on bracket refinements before PrecisionExhausted.
inline constexpr std::size_t kDefaultRefinementCap = 4096;

/// π_λ(code) = Σ d_i λ^i, with the closed form (m-1)λ^{n+1}/(1-λ) for a max tail.
/// Throws DomainError unless 0 < λ <= 1/m and the tail is explicit.
[[nodiscard]] Rational eval_pi(const Code& code, const Rational& lambda);

namespace detail {
struct BracketBuilder;
}

/// Exact rational enclosure [lo, hi] of the unique λ in (0, 1/m] with
/// π_λ(code) = x.
///
/// Either lo < hi with π_lo(code) < x < π_hi(code), or lo == hi when the root
/// is a known rational (the bracket is then "exact"). Brackets at the right end
/// 1/m of Λ(x) may carry a truncated code; they are always exact.
class Bracket {
 public:
  [[nodiscard]] const Rational& lo() const { return lo_; }
  [[nodiscard]] const Rational& hi() const { return hi_; }
  [[nodiscard]] const Code& code() const { return code_; }
  [[nodiscard]] const Rational& x() const { return x_; }
  [[nodiscard]] int base() const { return code_.base(); }
  [[nodiscard]] bool exact() const { return lo_ == hi_; }
  [[nodiscard]] Rational midpoint() const;
  [[nodiscard]] Rational width() const { return hi_ - lo_; }

  /// The parameter 1/m, whose coding of x is the greedy m-adic expansion.
  /// `known_prefix` records the leading digits of that expansion, if any.
  [[nodiscard]] static Bracket parameter_max(const Rational& x, int m, Word known_prefix = {});

  friend bool operator==(const Bracket&, const Bracket&) = default;

 private:
  friend struct detail::BracketBuilder;
  Bracket(Rational lo, Rational hi, Code code, Rational x);

  Rational lo_;
  Rational hi_;
  Code code_;
  Rational x_;
};

/// Optional starting enclosure for `solve_lambda`; ignored unless it certifies
/// a sign change. A hint only saves work: the result is identical to the
/// unhinted solve.
struct SolveHint {
  Rational lo;
  Rational hi;
};

/// Certified bisection for π_λ(code) = x on exact rationals.
///
/// Requires 0 < x < 1 and an explicit tail. Throws NoRoot when the code is
/// identically zero or π_{1/m}(code) < x. The result has width <= tol unless
/// it is exact, and is a deterministic function of the arguments.
[[nodiscard]] Bracket solve_lambda(const Rational& x, const Code& code,
                                   const Rational& tol = default_tolerance());
[[nodiscard]] Bracket solve_lambda(const Rational& x, const Code& code, const Rational& tol,
                                   const SolveHint& hint);

/// One bisection step; exact brackets are returned unchanged.
[[nodiscard]] Bracket refine(const Bracket& bracket);
/// Bisects until width <= tol.
[[nodiscard]] Bracket refine_to(const Bracket& bracket, const Rational& tol);

/// Orders the roots enclosed by two brackets.
///
/// Identical streams for the same x compare equal without arithmetic.
/// Otherwise copies are refined until disjoint; distinct roots always
/// separate, and PrecisionExhausted is thrown after `max_steps` refinements.
[[nodiscard]] std::strong_ordering compare_brackets(const Bracket& a, const Bracket& b,
                                                    std::size_t max_steps = kDefaultRefinementCap);

/// Orders the enclosed root against a rational value.
[[nodiscard]] std::strong_ordering compare_to(const Bracket& bracket, const Rational& value,
                                              std::size_t max_steps = kDefaultRefinementCap);

/// Refines copies of `left` and `right` until left.hi < right.lo, so that
/// right.lo - left.hi is a certified positive lower bound on their distance.
/// Throws PrecisionExhausted if the roots do not separate in `max_steps`.
void separate(Bracket& left, Bracket& right, std::size_t max_steps = kDefaultRefinementCap);

namespace detail {
/// Sign of π_λ(code) - x evaluated exactly in integer arithmetic. λ in (0, 1).
[[nodiscard]] int residual_sign(const Code& code, const Rational& x, const Rational& lambda);
}  // namespace detail

}  // namespace cantor
