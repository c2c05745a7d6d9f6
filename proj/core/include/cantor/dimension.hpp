#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cantor/exact_arith.hpp"
#include "cantor/lambda_set.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Occupied dyadic boxes of size 2^-t.
struct GridLevel {
  std::size_t t = 0;
  std::uint64_t count = 0;
};

struct DimensionEstimate {
  Rational window_lo;
  Rational window_hi;
  std::vector<GridLevel> levels;
  /// Least-squares slope of log count against t log 2 over the deepest
  /// ceil(grid_depth / 2) levels, clamped to [0, 1].
  double slope = 0.0;
  bool clamped = false;
  std::optional<double> theoretical;
};

inline constexpr std::size_t kMaxGridDepth = 62;

/// Box counting on the deepest cover level restricted to the closed window
/// [a, b]. Boxes are [i 2^-t, (i+1) 2^-t), anchored at 0; each basic interval
/// is taken with its outer bracket bounds. Throws EmptyWindow if no interval
/// meets the window.
[[nodiscard]] DimensionEstimate box_dimension(std::span<const CoverLevel> levels, const Rational& a,
                                              const Rational& b, std::size_t grid_depth);

/// log m / (-log λ).
[[nodiscard]] double theoretical_dimension(int m, double lambda);

struct ScanEntry {
  Rational delta;
  DimensionEstimate estimate;
  double theoretical = 0.0;
};

/// Box dimension of Λ(x) ∩ [c - δ, c + δ] for each δ, with c the midpoint of
/// `center`, from a single depth-`depth` cover.
[[nodiscard]] std::vector<ScanEntry> local_dimension_scan(const Rational& x, int m, const Bracket& center,
                                                          std::span<const Rational> deltas, std::size_t depth,
                                                          std::size_t grid_depth, const SolveOptions& options = {});

struct SftCount {
  Integer count;
  /// (count(n) / count(n - r))^(1/r) with r = max(1, n/2).
  double growth_rate = 0.0;
};

/// Number of words of length n over {0..m-1} without the block 0^k.
[[nodiscard]] SftCount sft_count(int m, std::size_t k, std::size_t n);

/// γ_j, defined by the code x_1 ... x_{n_j-1} (x_{n_j} + 1) (m-1)^∞.
[[nodiscard]] Bracket gamma_j(const Rational& x, int m, std::size_t j, const Rational& tol = default_tolerance());

/// ((k-1) log m + log(m-1)) / (-k log γ).
[[nodiscard]] double dim_lower_formula(std::size_t k, int m, double gamma);
/// The formula is increasing in γ; returns its values at the bracket ends.
[[nodiscard]] std::pair<double, double> dim_lower_formula(std::size_t k, int m, const Bracket& gamma);

}  // namespace cantor
