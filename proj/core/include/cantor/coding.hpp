#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <variant>

#include "cantor/code.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Greedy m-adic expansion Φ_x(1/m) of a rational x in (0, 1), extended lazily.
///
/// Positions are 1-based to match the usual indexing of digit sequences.
/// Copies share one digit cache; extension is serialized by a mutex, so
/// concurrent readers observe identical digits.
class GreedyExpansion {
 public:
  GreedyExpansion(const Rational& x, int m);

  [[nodiscard]] const Rational& x() const;
  [[nodiscard]] int base() const;

  [[nodiscard]] Digit digit(std::size_t position) const;
  /// First `n` digits x_1 ... x_n.
  [[nodiscard]] Word prefix(std::size_t n) const;
  /// True when the expansion continues as 0^∞ after position n.
  [[nodiscard]] bool zero_after(std::size_t n) const;

  /// Smallest position with digit < m-1.
  [[nodiscard]] std::size_t first_defect() const;
  /// Smallest position with digit > 0.
  [[nodiscard]] std::size_t first_nonzero() const;
  /// j-th position (j >= 1) carrying a digit < m-1.
  [[nodiscard]] std::size_t defect_index(std::size_t j) const;

  [[nodiscard]] std::size_t materialized() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Greedy expansion with the first n digits already materialized.
[[nodiscard]] GreedyExpansion greedy_expansion(const Rational& x, int m, std::size_t n);

/// Digits of the unique coding of x in K_λ, up to the first step with no
/// admissible digit.
struct CodingResult {
  Word digits;
  /// 1-based step at which the remainder fell into a gap.
  std::optional<std::size_t> not_member_step;
};

/// Extracts up to n digits of Φ_x(λ) for 0 < λ < 1/m.
/// Throws HullViolation when x lies outside [0, (m-1)λ/(1-λ)].
[[nodiscard]] CodingResult unique_coding(const Rational& x, const Rational& lambda, int m, std::size_t n);

struct Member {
  Word preperiod;
  /// Repeating block; empty when the cycle was not found within the limits
  /// (only possible at λ = 1/m).
  Word period;
};

struct NotMember {
  std::size_t step;
};

struct Undetermined {
  std::size_t depth;
};

using Verdict = std::variant<Member, NotMember, Undetermined>;

struct MembershipResult {
  Verdict verdict;
  Word extracted_digits;
};

struct MembershipOptions {
  std::size_t max_steps = 1000;
  /// Cap on remembered remainders for cycle detection.
  std::size_t state_cap = 100000;
};

/// Decides x ∈ K_λ for rational x and λ in (0, 1/m].
///
/// A repeated exact remainder certifies membership with an eventually
/// periodic coding; a remainder in a gap certifies non-membership.
[[nodiscard]] MembershipResult membership(const Rational& x, const Rational& lambda, int m,
                                          const MembershipOptions& options = {});

/// Exact value of preperiod · period^∞ at λ.
[[nodiscard]] Rational periodic_value(const Word& preperiod, const Word& period, const Rational& lambda);

/// Lexicographic order of the induced infinite streams. A truncated code is
/// compared through both completions; disagreement yields unordered.
[[nodiscard]] std::partial_ordering lex_compare(const Code& a, const Code& b);

}  // namespace cantor
