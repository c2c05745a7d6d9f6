#include "cantor/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cantor/coding.hpp"
#include "cantor/errors.hpp"

namespace cantor {

namespace {

std::uint64_t box_index(const Rational& value, std::size_t t) {
  return floor(value * Rational::pow2(static_cast<long>(t))).get_ui();
}

double fit_slope(std::span<const GridLevel> levels) {
  const double n = static_cast<double>(levels.size());
  if (levels.size() < 2) return 0.0;
  double sx = 0;
  double sy = 0;
  double sxx = 0;
  double sxy = 0;
  for (const auto& lv : levels) {
    const double xv = static_cast<double>(lv.t) * std::log(2.0);
    const double yv = std::log(static_cast<double>(lv.count));
    sx += xv;
    sy += yv;
    sxx += xv * xv;
    sxy += xv * yv;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

DimensionEstimate box_dimension(std::span<const CoverLevel> levels, const Rational& a, const Rational& b,
                                std::size_t grid_depth) {
  if (levels.empty()) throw DomainError("no cover levels given");
  if (b < a) throw DomainError("window [" + a.str() + ", " + b.str() + "] is empty");
  if (grid_depth == 0 || grid_depth > kMaxGridDepth) throw DomainError("grid depth out of range");
  const CoverLevel& deepest =
      *std::max_element(levels.begin(), levels.end(), [](const auto& l, const auto& r) { return l.depth < r.depth; });

  // Outer bounds of each basic interval clipped to the window, in order.
  std::vector<std::pair<Rational, Rational>> pieces;
  for (const auto& iv : deepest.intervals) {
    const Rational lo = max(iv.left.lo(), a);
    const Rational hi = min(iv.right.hi(), b);
    if (lo <= hi) pieces.emplace_back(lo, hi);
  }
  if (pieces.empty()) {
    throw EmptyWindow("no basic interval meets [" + a.str() + ", " + b.str() + "]");
  }

  DimensionEstimate est;
  est.window_lo = a;
  est.window_hi = b;
  for (std::size_t t = 1; t <= grid_depth; ++t) {
    std::uint64_t count = 0;
    std::optional<std::uint64_t> last;
    for (const auto& [lo, hi] : pieces) {
      const std::uint64_t s = box_index(lo, t);
      const std::uint64_t e = box_index(hi, t);
      if (!last || s > *last) {
        count += e - s + 1;
      } else if (e > *last) {
        count += e - *last;
      }
      last = last ? std::max(*last, e) : e;
    }
    est.levels.push_back({t, count});
  }
  const std::size_t fit = (grid_depth + 1) / 2;
  const double raw = fit_slope(std::span(est.levels).last(fit));
  est.slope = std::clamp(raw, 0.0, 1.0);
  est.clamped = est.slope != raw;
  return est;
}

double theoretical_dimension(int m, double lambda) { return std::log(static_cast<double>(m)) / -std::log(lambda); }

std::vector<ScanEntry> local_dimension_scan(const Rational& x, int m, const Bracket& center,
                                            std::span<const Rational> deltas, std::size_t depth,
                                            std::size_t grid_depth, const SolveOptions& options) {
  const auto [hull_lo, hull_hi] = lambda_hull(x, m);
  if (compare_to(center, hull_lo) < 0 || compare_to(center, hull_hi) > 0) {
    throw DomainError("scan centre lies outside the hull of Lambda(x)");
  }
  const CoverLevel level = cover(x, m, depth, options);
  const Rational c = center.midpoint();
  const double theory = theoretical_dimension(m, c.to_double());
  std::vector<ScanEntry> out;
  out.reserve(deltas.size());
  for (const auto& delta : deltas) {
    if (delta.sign() <= 0) throw DomainError("scan radius must be positive");
    auto est = box_dimension(std::span(&level, 1), c - delta, c + delta, grid_depth);
    est.theoretical = theory;
    out.push_back({delta, std::move(est), theory});
  }
  return out;
}

SftCount sft_count(int m, std::size_t k, std::size_t n) {
  if (m < 2 || k == 0 || n == 0) throw DomainError("sft_count needs m >= 2, k >= 1, n >= 1");
  // state[r] = words whose trailing zero run has length r < k.
  std::vector<Integer> state(k, 0);
  state[0] = 1;
  std::vector<Integer> totals{1};
  const Integer nonzero = m - 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> next(k, 0);
    Integer total = std::accumulate(state.begin(), state.end(), Integer(0));
    next[0] = total * nonzero;
    for (std::size_t r = 0; r + 1 < k; ++r) next[r + 1] = state[r];
    state = std::move(next);
    totals.push_back(std::accumulate(state.begin(), state.end(), Integer(0)));
  }
  SftCount out;
  out.count = totals[n];
  const std::size_t r = std::max<std::size_t>(1, n / 2);
  if (out.count == 0 || totals[n - r] == 0) {
    out.growth_rate = 0.0;
  } else {
    out.growth_rate = std::exp((Rational(out.count, Integer(1)).log() - Rational(totals[n - r], Integer(1)).log()) /
                               static_cast<double>(r));
  }
  return out;
}

Bracket gamma_j(const Rational& x, int m, std::size_t j, const Rational& tol) {
  if (j == 0) throw DomainError("defect indices start at 1");
  const GreedyExpansion greedy(x, m);
  const std::size_t nj = greedy.defect_index(j);
  Word w = greedy.prefix(nj);
  ++w.back();
  return solve_lambda(x, Code(m, std::move(w), Tail::Max), tol);
}

double dim_lower_formula(std::size_t k, int m, double gamma) {
  if (k == 0) throw DomainError("block length must be at least 1");
  const double kk = static_cast<double>(k);
  return ((kk - 1.0) * std::log(static_cast<double>(m)) + std::log(static_cast<double>(m - 1))) /
         (-kk * std::log(gamma));
}

std::pair<double, double> dim_lower_formula(std::size_t k, int m, const Bracket& gamma) {
  return {dim_lower_formula(k, m, gamma.lo().to_double()), dim_lower_formula(k, m, gamma.hi().to_double())};
}

}  // namespace cantor
