#include "cantor/thickness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "cantor/coding.hpp"
#include "cantor/errors.hpp"
#include "cantor/thickness_bounds.hpp"
#include "endpoint_solver.hpp"

namespace cantor {

namespace {

void check_x(const Rational& x) {
  if (x.sign() <= 0 || x >= Rational(1)) throw DomainError("x must lie in (0,1), got " + x.str());
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// All words of length n in increasing lexicographic order; index = value in base m.
std::vector<Word> all_words(int m, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<std::size_t>(m));
    for (const auto& w : out) {
      for (int d = 0; d < m; ++d) {
        next.push_back(w);
        next.back().push_back(static_cast<Digit>(d));
      }
    }
    out = std::move(next);
  }
  return out;
}

RatioInterval min_of(const RatioInterval& a, const RatioInterval& b) { return {min(a.lo, b.lo), min(a.hi, b.hi)}; }

// Basic intervals I_k(w) for the given words, endpoints hinted by `parents`.
std::vector<BasicInterval> solve_level(detail::EndpointSolver& solver, const EkSystem& sys,
                                       const std::vector<Word>& words,
                                       const std::map<Word, const BasicInterval*>& parents, unsigned threads) {
  std::vector<detail::EndpointSolver::Request> requests;
  requests.reserve(2 * words.size());
  for (const auto& w : words) {
    std::optional<SolveHint> hint;
    if (!w.empty()) {
      if (auto it = parents.find(Word(w.begin(), w.end() - 1)); it != parents.end()) {
        hint = SolveHint{it->second->left.lo(), it->second->right.hi()};
      }
    }
    const Word full = concat(sys.base_word, w);
    requests.push_back({Code(sys.m, full, Tail::Max), hint});
    requests.push_back({Code(sys.m, full, Tail::Zero), hint});
  }
  const auto brackets = solver.solve_all(requests, threads);
  std::vector<BasicInterval> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back({words[i], brackets[2 * i], brackets[2 * i + 1], false});
  }
  return out;
}

}  // namespace

RatioInterval ratio_of(const Rational& num_lo, const Rational& num_hi, const Rational& den_lo,
                       const Rational& den_hi) {
  if (num_lo.sign() <= 0 || den_lo.sign() <= 0) throw DomainError("ratio of lengths needs positive bounds");
  return {num_lo / den_hi, num_hi / den_lo};
}

std::vector<EkSystem> ek_hulls(const Rational& x, int m, std::size_t count, const SolveOptions& options) {
  check_x(x);
  const GreedyExpansion greedy(x, m);
  struct Spec {
    std::size_t j;
    std::size_t nj;
    Digit b;
    Word word;
  };
  std::vector<Spec> specs;
  specs.reserve(count);
  for (std::size_t j = 1; specs.size() < count; ++j) {
    const std::size_t nj = greedy.defect_index(j);
    const int xnj = greedy.digit(nj);
    for (int b = m - 1; b > xnj && specs.size() < count; --b) {
      Word w = greedy.prefix(nj - 1);
      w.push_back(static_cast<Digit>(b));
      specs.push_back({j, nj, static_cast<Digit>(b), std::move(w)});
    }
  }

  detail::EndpointSolver solver(x, options.tol);
  std::vector<detail::EndpointSolver::Request> requests;
  for (const auto& spec : specs) {
    requests.push_back({Code(m, spec.word, Tail::Max), std::nullopt});
    requests.push_back({Code(m, spec.word, Tail::Zero), std::nullopt});
  }
  const auto brackets = solver.solve_all(requests, options.threads);
  std::vector<EkSystem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    out.push_back({x, m, i + 1, spec.j, spec.nj, spec.b, spec.word,
                   BasicInterval{spec.word, brackets[2 * i], brackets[2 * i + 1], false}});
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    if (compare_brackets(out[i].hull.left, out[i].hull.right) >= 0) {
      throw Error("hull I_" + std::to_string(i + 1) + " is degenerate");
    }
    if (i + 1 < out.size() && compare_brackets(out[i].hull.right, out[i + 1].hull.left) >= 0) {
      throw Error("hulls I_" + std::to_string(i + 1) + " and I_" + std::to_string(i + 2) + " are out of order");
    }
  }
  return out;
}

BasicInterval ek_basic_interval(const EkSystem& system, const Word& w, const Rational& tol) {
  const Word full = concat(system.base_word, w);
  const SolveHint hint{system.hull.left.lo(), system.hull.right.hi()};
  return {w, solve_lambda(system.x, Code(system.m, full, Tail::Max), tol, hint),
          solve_lambda(system.x, Code(system.m, full, Tail::Zero), tol, hint), false};
}

BasicInterval ek_basic_interval(const Rational& x, int m, std::size_t k, const Word& w, const Rational& tol) {
  if (k == 0) throw DomainError("hull indices start at 1");
  const auto hulls = ek_hulls(x, m, k, {tol, 1});
  return ek_basic_interval(hulls.back(), w, tol);
}

double dim_from_thickness(double tau) {
  if (!(tau > 0.0)) return 0.0;
  if (std::isinf(tau)) return 1.0;
  return std::log(2.0) / std::log(2.0 + 1.0 / tau);
}

ThicknessReport tau_estimate(const EkSystem& sys, std::size_t depth, const SolveOptions& options) {
  if (depth == 0) throw DomainError("thickness depth must be at least 1");
  const GreedyExpansion greedy(sys.x, sys.m);
  const std::size_t ell = greedy.first_nonzero();
  const bool bounds_apply = sys.defect_position > ell;

  ThicknessReport report;
  report.x = sys.x;
  report.m = sys.m;
  report.k = sys.k;
  report.j = sys.j;
  report.defect_position = sys.defect_position;
  report.first_nonzero = ell;
  report.depth = depth;

  detail::EndpointSolver solver(sys.x, options.tol);
  std::vector<BasicInterval> previous{sys.hull};
  previous.front().word.clear();
  std::optional<RatioInterval> overall;

  for (std::size_t n = 1; n <= depth; ++n) {
    std::map<Word, const BasicInterval*> parents;
    for (const auto& iv : previous) parents.emplace(iv.word, &iv);
    std::vector<BasicInterval> level = solve_level(solver, sys, all_words(sys.m, n), parents, options.threads);

    std::optional<RatioInterval> level_min;
    const auto m = static_cast<std::size_t>(sys.m);
    for (std::size_t base = 0; base < level.size(); base += m) {
      for (std::size_t d = 0; d + 1 < m; ++d) {
        const BasicInterval& w = level[base + d];
        const BasicInterval& wp = level[base + d + 1];
        AdjacentPair pair{n, w.word, wp.left, wp.right, w.left, w.right, {}, {}, std::nullopt};
        try {
          separate(pair.lambda1, pair.lambda2);
          separate(pair.lambda2, pair.lambda3);
          separate(pair.lambda3, pair.lambda4);
        } catch (const PrecisionExhausted& e) {
          throw PrecisionExhausted("k=" + std::to_string(sys.k) + " level=" + std::to_string(n) + ": " + e.what());
        }
        const Rational gap_lo = pair.lambda3.lo() - pair.lambda2.hi();
        const Rational gap_hi = pair.lambda3.hi() - pair.lambda2.lo();
        pair.left_ratio = ratio_of(pair.lambda2.lo() - pair.lambda1.hi(), pair.lambda2.hi() - pair.lambda1.lo(),
                                   gap_lo, gap_hi);
        pair.right_ratio = ratio_of(pair.lambda4.lo() - pair.lambda3.hi(), pair.lambda4.hi() - pair.lambda3.lo(),
                                    gap_lo, gap_hi);
        if (bounds_apply) {
          pair.analytic_lower = pair_ratio_bound(pair.lambda1, pair.lambda2, pair.lambda3, pair.lambda4, sys.m,
                                                 sys.defect_position, ell);
          report.tau_analytic_lower = report.tau_analytic_lower
                                          ? min(*report.tau_analytic_lower, *pair.analytic_lower)
                                          : *pair.analytic_lower;
        }
        const RatioInterval both = min_of(pair.left_ratio, pair.right_ratio);
        level_min = level_min ? min_of(*level_min, both) : both;
        report.pairs.push_back(std::move(pair));
      }
    }
    report.per_level_min.push_back({n, *level_min});
    overall = overall ? min_of(*overall, *level_min) : *level_min;
    previous = std::move(level);
  }

  report.tau_empirical = *overall;
  report.dim_lower = dim_from_thickness(report.tau_empirical.lo.to_double());
  if (bounds_apply) {
    report.newhouse_lower = hull_ratio_bound(sys.hull.left, sys.hull.right, sys.m, sys.defect_position, ell);
    report.dim_lower_certified = dim_from_thickness(report.newhouse_lower->to_double());
  }
  return report;
}

std::vector<ThetaEntry> theta_sequence(const Rational& x, int m, std::size_t count, const SolveOptions& options) {
  const auto hulls = ek_hulls(x, m, count + 1, options);
  std::vector<ThetaEntry> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Bracket p = hulls[k].hull.left;
    Bracket q = hulls[k].hull.right;
    Bracket p1 = hulls[k + 1].hull.left;
    Bracket q1 = hulls[k + 1].hull.right;
    separate(p, q);
    separate(q, p1);
    separate(p1, q1);
    const Rational gap_lo = p1.lo() - q.hi();
    const Rational gap_hi = p1.hi() - q.lo();
    ThetaEntry entry;
    entry.k = k + 1;
    entry.left = ratio_of(q.lo() - p.hi(), q.hi() - p.lo(), gap_lo, gap_hi);
    entry.right = ratio_of(q1.lo() - p1.hi(), q1.hi() - p1.lo(), gap_lo, gap_hi);
    entry.theta = min_of(entry.left, entry.right);
    entry.growth = ratio_of(q1.lo() - p1.hi(), q1.hi() - p1.lo(), q.lo() - p.hi(), q.hi() - p.lo());
    out.push_back(std::move(entry));
  }
  return out;
}

std::optional<std::size_t> observed_growth_threshold(const std::vector<ThetaEntry>& entries, const Rational& bound) {
  std::optional<std::size_t> n;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (!(it->growth.hi < bound)) break;
    n = it->k;
  }
  return n;
}

bool certified_inside(const Bracket& point, const Bracket& lo, const Bracket& hi) {
  return compare_brackets(lo, point) <= 0 && compare_brackets(point, hi) <= 0;
}

namespace {

struct Witness {
  Bracket point;
  std::size_t level;
};

bool certainly_disjoint(const BasicInterval& a, const BasicInterval& target) {
  try {
    return compare_brackets(a.right, target.left) < 0 || compare_brackets(target.right, a.left) < 0;
  } catch (const PrecisionExhausted&) {
    return false;
  }
}

bool inside_or_skip(const Bracket& point, const BasicInterval& target) {
  try {
    return certified_inside(point, target.left, target.right);
  } catch (const PrecisionExhausted&) {
    return false;
  }
}

// Breadth-first search over the basic intervals of `sys` meeting `target`.
std::optional<Witness> find_witness(detail::EndpointSolver& solver, const EkSystem& sys,
                                    const BasicInterval& target, std::size_t depth, unsigned threads) {
  std::vector<BasicInterval> frontier{sys.hull};
  frontier.front().word.clear();
  for (std::size_t n = 0;; ++n) {
    for (const auto& iv : frontier) {
      if (inside_or_skip(iv.left, target)) return Witness{iv.left, n};
      if (inside_or_skip(iv.right, target)) return Witness{iv.right, n};
    }
    if (n == depth) return std::nullopt;
    std::vector<Word> words;
    std::map<Word, const BasicInterval*> parents;
    for (const auto& iv : frontier) {
      if (certainly_disjoint(iv, target)) continue;
      parents.emplace(iv.word, &iv);
      for (int d = 0; d < sys.m; ++d) {
        words.push_back(iv.word);
        words.back().push_back(static_cast<Digit>(d));
      }
    }
    if (words.empty()) return std::nullopt;
    frontier = solve_level(solver, sys, words, parents, threads);
  }
}

}  // namespace

std::vector<InterleavePair> find_interleaved_pairs(const Rational& x, const Rational& y, int m, std::size_t kmax,
                                                   const InterleaveOptions& options) {
  check_x(x);
  check_x(y);
  if (kmax == 0) return {};
  const SolveOptions solve{options.tol, options.threads};
  const auto hx = ek_hulls(x, m, kmax, solve);
  const auto hy = ek_hulls(y, m, kmax, solve);
  detail::EndpointSolver solver_x(x, options.tol);
  detail::EndpointSolver solver_y(y, options.tol);

  std::map<std::pair<bool, std::size_t>, ThicknessReport> reports;
  auto report_for = [&](bool is_x, std::size_t k) -> const ThicknessReport& {
    auto key = std::make_pair(is_x, k);
    auto it = reports.find(key);
    if (it == reports.end()) {
      const auto& sys = is_x ? hx[k - 1] : hy[k - 1];
      it = reports.emplace(key, tau_estimate(sys, options.tau_depth, solve)).first;
    }
    return it->second;
  };

  std::vector<InterleavePair> out;
  for (std::size_t i = 1; i <= kmax; ++i) {
    for (std::size_t j = 1; j <= kmax; ++j) {
      const auto& sx = hx[i - 1];
      const auto& sy = hy[j - 1];
      if (certainly_disjoint(sx.hull, sy.hull)) continue;
      auto wx = find_witness(solver_x, sx, sy.hull, options.depth, options.threads);
      if (!wx) continue;
      auto wy = find_witness(solver_y, sy, sx.hull, options.depth, options.threads);
      if (!wy) continue;

      InterleavePair pair{i, j, wx->point, wy->point, wx->level, wy->level, x == y && i == j, std::nullopt, 0.0,
                          false};
      const auto& rx = report_for(true, i);
      const auto& ry = report_for(false, j);
      if (rx.newhouse_lower && ry.newhouse_lower) pair.tau_min = min(*rx.newhouse_lower, *ry.newhouse_lower);
      pair.tau_empirical_min = std::min(rx.tau_empirical.lo.to_double(), ry.tau_empirical.lo.to_double());
      pair.meets_threshold = pair.tau_min && exceeds_intersection_threshold(*pair.tau_min);
      out.push_back(std::move(pair));
    }
  }
  return out;
}

bool exceeds_intersection_threshold(const Rational& tau) {
  if (tau <= Rational(1)) return false;
  const Rational shifted = tau - Rational(1);
  return shifted * shifted > Rational(2);
}

bool exceeds_intersection_threshold(double tau) { return tau > 1.0 + std::numbers::sqrt2; }

namespace {

IntersectionReport report_from(std::optional<Rational> exact, double tau, bool met) {
  IntersectionReport r;
  r.tau_min = std::move(exact);
  r.threshold_met = met;
  if (met) {
    r.dim_lower = std::log(2.0) / std::log(2.0 + 1.0 / std::sqrt(tau));
    r.qualifier = "order-of";
  } else {
    r.qualifier = "threshold_not_met";
  }
  return r;
}

}  // namespace

IntersectionReport intersection_report(const InterleavePair& pair) {
  if (!pair.tau_min) return report_from(std::nullopt, 0.0, false);
  return report_from(pair.tau_min, pair.tau_min->to_double(), exceeds_intersection_threshold(*pair.tau_min));
}

IntersectionReport intersection_report(double tau_min) {
  return report_from(std::nullopt, tau_min, exceeds_intersection_threshold(tau_min));
}

}  // namespace cantor
