#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cantor/code.hpp"
#include "cantor/coding.hpp"
#include "cantor/exact_arith.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// J_w = [p_w, q_w]: the parameters whose coding of x starts with w.
struct BasicInterval {
  Word word;
  Bracket left;   ///< p_w, code w(m-1)^∞
  Bracket right;  ///< q_w, code w0^∞; exactly 1/m when `reaches_max`
  /// Set for the word x_1...x_n when the greedy expansion continues with
  /// nonzero digits: the interval is then clipped at 1/m.
  bool reaches_max = false;

  /// Certified enclosure of the length q_w - p_w.
  [[nodiscard]] Rational length_lower() const { return right.lo() - left.hi(); }
  [[nodiscard]] Rational length_upper() const { return right.hi() - left.lo(); }
};

/// Open interval between two neighbouring basic intervals.
struct Gap {
  Bracket left;
  Bracket right;
};

struct SolveOptions {
  Rational tol = default_tolerance();
  /// Worker threads; 0 means hardware concurrency. Results never depend on it.
  unsigned threads = 0;
};

/// The basic intervals of one tree depth, sorted by increasing λ.
struct CoverLevel {
  Rational x;
  int m = 2;
  std::size_t depth = 0;
  std::vector<BasicInterval> intervals;
  std::vector<Gap> gaps;
  Rational hull_lo;
  Rational hull_hi;
  std::vector<std::string> warnings;
};

/// [x/(m-1+x), 1/m], the convex hull of Λ(x).
[[nodiscard]] std::pair<Rational, Rational> lambda_hull(const Rational& x, int m);

/// True when w is admissible for the greedy expansion: |w| is at least the
/// first position with digit < m-1 and (x_i) ≼ w0^∞.
[[nodiscard]] bool is_admissible(const GreedyExpansion& greedy, std::span<const Digit> word);

/// A_n(x), sorted lexicographically descending (that is, by increasing λ).
[[nodiscard]] std::vector<Word> admissible_words(const Rational& x, int m, std::size_t n);

/// Throws NotAdmissible unless w is admissible for x.
[[nodiscard]] BasicInterval basic_interval(const Rational& x, int m, const Word& w,
                                           const Rational& tol = default_tolerance());

/// Depth-n cover of Λ(x). Requires depth >= first position with digit < m-1.
[[nodiscard]] CoverLevel cover(const Rational& x, int m, std::size_t depth, const SolveOptions& options = {});

/// Covers for every depth from the first admissible one up to `depth`,
/// sharing endpoint solves between levels.
[[nodiscard]] std::vector<CoverLevel> cover_levels(const Rational& x, int m, std::size_t depth,
                                                   const SolveOptions& options = {});

}  // namespace cantor
