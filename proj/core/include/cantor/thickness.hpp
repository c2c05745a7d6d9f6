#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cantor/code.hpp"
#include "cantor/exact_arith.hpp"
#include "cantor/lambda_set.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Certified enclosure [lo, hi] of a positive ratio.
struct RatioInterval {
  Rational lo;
  Rational hi;

  [[nodiscard]] double estimate() const { return ((lo + hi) / Rational(2)).to_double(); }
};

/// |[a, b]| / |(c, d)| style quotient of two certified positive lengths.
[[nodiscard]] RatioInterval ratio_of(const Rational& num_lo, const Rational& num_hi, const Rational& den_lo,
                                     const Rational& den_hi);

/// The hull I_k = I_{j,b} of the k-th thick Cantor subset E_k(x).
struct EkSystem {
  Rational x;
  int m = 2;
  std::size_t k = 0;
  std::size_t j = 0;
  std::size_t defect_position = 0;  ///< n_j
  Digit b = 0;
  Word base_word;  ///< x_1 ... x_{n_j-1} b
  BasicInterval hull;
};

/// The first `count` hulls, renamed in increasing order. Consecutive hulls are
/// checked to be disjoint and increasing by bracket comparison.
[[nodiscard]] std::vector<EkSystem> ek_hulls(const Rational& x, int m, std::size_t count,
                                             const SolveOptions& options = {});

/// I_k(w): codes base_word w (m-1)^∞ and base_word w 0^∞.
[[nodiscard]] BasicInterval ek_basic_interval(const EkSystem& system, const Word& w,
                                              const Rational& tol = default_tolerance());
[[nodiscard]] BasicInterval ek_basic_interval(const Rational& x, int m, std::size_t k, const Word& w,
                                              const Rational& tol = default_tolerance());

/// Neighbouring basic intervals I_k(w⁺) = [λ1, λ2] and I_k(w) = [λ3, λ4] with
/// the gap G_k(w) = (λ2, λ3) between them.
struct AdjacentPair {
  std::size_t level = 0;
  Word word;  ///< w; w⁺ increments its last digit
  Bracket lambda1;
  Bracket lambda2;
  Bracket lambda3;
  Bracket lambda4;
  RatioInterval left_ratio;   ///< |I_k(w⁺)| / |G_k(w)|
  RatioInterval right_ratio;  ///< |I_k(w)| / |G_k(w)|
  /// Closed-form lower bound on both ratios; present when n_j > ℓ.
  std::optional<Rational> analytic_lower;
};

struct LevelMinimum {
  std::size_t level = 0;
  RatioInterval ratio;  ///< encloses the minimum ratio at this level
};

struct ThicknessReport {
  Rational x;
  int m = 2;
  std::size_t k = 0;
  std::size_t j = 0;
  std::size_t defect_position = 0;
  std::size_t first_nonzero = 0;  ///< ℓ
  std::size_t depth = 0;
  std::vector<LevelMinimum> per_level_min;
  /// Minimum over the computed levels; estimates the infimum from above.
  RatioInterval tau_empirical;
  /// Smallest closed-form pair bound over the computed levels.
  std::optional<Rational> tau_analytic_lower;
  /// Hull-uniform closed-form bound, valid at every level; by the construction
  /// order it also bounds the Newhouse thickness from below.
  std::optional<Rational> newhouse_lower;
  /// log 2 / log(2 + 1/τ) at the lower end of tau_empirical.
  double dim_lower = 0.0;
  /// Same formula at newhouse_lower.
  std::optional<double> dim_lower_certified;
  std::vector<AdjacentPair> pairs;
};

/// Pairs of levels 1..depth of E_k(x). Throws PrecisionExhausted when an
/// interval and a gap cannot be separated.
[[nodiscard]] ThicknessReport tau_estimate(const EkSystem& system, std::size_t depth,
                                           const SolveOptions& options = {});

/// log 2 / log(2 + 1/τ).
[[nodiscard]] double dim_from_thickness(double tau);

struct ThetaEntry {
  std::size_t k = 0;
  RatioInterval left;    ///< |I_k| / |G_k|
  RatioInterval right;   ///< |I_{k+1}| / |G_k|
  RatioInterval theta;   ///< min of the two
  RatioInterval growth;  ///< |I_{k+1}| / |I_k|
};

/// θ_1 ... θ_count from the hulls I_1 ... I_{count+1}.
[[nodiscard]] std::vector<ThetaEntry> theta_sequence(const Rational& x, int m, std::size_t count,
                                                     const SolveOptions& options = {});

/// Smallest N such that every computed entry with k >= N has certified growth
/// below `bound`; empty if the last entry already fails.
[[nodiscard]] std::optional<std::size_t> observed_growth_threshold(const std::vector<ThetaEntry>& entries,
                                                                   const Rational& bound);

/// Witnesses that E_i(x) and E_j(y) are interleaved: an endpoint of a basic
/// interval of each set lying in the convex hull of the other.
struct InterleavePair {
  std::size_t i = 0;
  std::size_t j = 0;
  Bracket witness_x;  ///< point of E_i(x) inside conv(E_j(y))
  Bracket witness_y;  ///< point of E_j(y) inside conv(E_i(x))
  std::size_t witness_x_level = 0;
  std::size_t witness_y_level = 0;
  bool diagonal = false;
  /// Certified lower thickness bound of both sets (hull-uniform), if available.
  std::optional<Rational> tau_min;
  /// Minimum of the two finite-depth estimates.
  double tau_empirical_min = 0.0;
  bool meets_threshold = false;
};

struct InterleaveOptions {
  std::size_t depth = 6;
  Rational tol = default_tolerance();
  unsigned threads = 0;
  /// Depth of the empirical thickness estimate attached to each pair.
  std::size_t tau_depth = 3;
};

/// All certified pairs (i, j) in [1, kmax]^2, sorted by (i, j).
[[nodiscard]] std::vector<InterleavePair> find_interleaved_pairs(const Rational& x, const Rational& y, int m,
                                                                 std::size_t kmax,
                                                                 const InterleaveOptions& options = {});

/// Checks that `point` lies in the closed hull [lo, hi] by bracket comparison.
[[nodiscard]] bool certified_inside(const Bracket& point, const Bracket& lo, const Bracket& hi);

/// τ > 1 + √2, decided exactly.
[[nodiscard]] bool exceeds_intersection_threshold(const Rational& tau);
[[nodiscard]] bool exceeds_intersection_threshold(double tau);

struct IntersectionReport {
  std::optional<Rational> tau_min;
  bool threshold_met = false;
  /// log 2 / log(2 + 1/√τ); an order-of estimate, not a certified bound.
  std::optional<double> dim_lower;
  std::string qualifier;
};

[[nodiscard]] IntersectionReport intersection_report(const InterleavePair& pair);
[[nodiscard]] IntersectionReport intersection_report(double tau_min);

}  // namespace cantor
