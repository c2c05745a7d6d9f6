#include "cantor/lambda_set.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "cantor/errors.hpp"
#include "endpoint_solver.hpp"

namespace cantor {

std::pair<Rational, Rational> lambda_hull(const Rational& x, int m) {
  return {x / (Rational(m - 1) + x), Rational(1, m)};
}

bool is_admissible(const GreedyExpansion& greedy, std::span<const Digit> word) {
  const std::size_t n = word.size();
  if (n < greedy.first_defect()) return false;
  const Word t = greedy.prefix(n);
  const auto order = std::lexicographical_compare_three_way(word.begin(), word.end(), t.begin(), t.end());
  if (order > 0) return true;
  return order == 0 && greedy.zero_after(n);
}

namespace {

// Words of length n that are >= t, in descending order.
void words_at_least(const Word& t, int m, std::vector<Word>& out) {
  const std::size_t n = t.size();
  Word w(n);
  auto rec = [&](auto&& self, std::size_t i, bool tight) -> void {
    if (i == n) {
      out.push_back(w);
      return;
    }
    const int lowest = tight ? t[i] : 0;
    for (int d = m - 1; d >= lowest; --d) {
      w[i] = static_cast<Digit>(d);
      self(self, i + 1, tight && d == lowest);
    }
  };
  rec(rec, 0, true);
}

struct Candidate {
  Word word;
  bool boundary;
};

// Cover words at depth n, by increasing λ. The final word is x_1...x_n; it
// is either admissible or the clipped boundary word.
std::vector<Candidate> cover_words(const GreedyExpansion& greedy, std::size_t n) {
  if (n < greedy.first_defect()) return {};
  std::vector<Word> words;
  words_at_least(greedy.prefix(n), greedy.base(), words);
  std::vector<Candidate> out;
  out.reserve(words.size());
  for (auto& w : words) out.push_back({std::move(w), false});
  out.back().boundary = !greedy.zero_after(n);
  return out;
}

void check_x(const Rational& x) {
  if (x.sign() <= 0 || x >= Rational(1)) throw DomainError("x must lie in (0,1), got " + x.str());
}

CoverLevel build_level(detail::EndpointSolver& solver, const GreedyExpansion& greedy, std::size_t n,
                       const CoverLevel* parent, unsigned threads) {
  const Rational& x = greedy.x();
  const int m = greedy.base();
  CoverLevel level;
  level.x = x;
  level.m = m;
  level.depth = n;
  std::tie(level.hull_lo, level.hull_hi) = lambda_hull(x, m);

  const auto words = cover_words(greedy, n);

  std::map<Word, const BasicInterval*> parents;
  if (parent != nullptr) {
    for (const auto& iv : parent->intervals) parents.emplace(iv.word, &iv);
  }

  std::vector<detail::EndpointSolver::Request> requests;
  requests.reserve(2 * words.size());
  for (const auto& [w, boundary] : words) {
    std::optional<SolveHint> hint;
    if (!parents.empty()) {
      const Word up(w.begin(), w.end() - 1);
      if (auto it = parents.find(up); it != parents.end()) {
        hint = SolveHint{it->second->left.lo(), it->second->right.hi()};
      }
    }
    requests.push_back({Code(m, w, Tail::Max), hint});
    if (!boundary) requests.push_back({Code(m, w, Tail::Zero), hint});
  }
  const auto brackets = solver.solve_all(requests, threads);

  std::size_t next = 0;
  level.intervals.reserve(words.size());
  for (const auto& [w, boundary] : words) {
    Bracket left = brackets[next++];
    Bracket right = boundary ? Bracket::parameter_max(x, m, w) : brackets[next++];
    level.intervals.push_back({w, std::move(left), std::move(right), boundary});
  }

  for (std::size_t i = 0; i + 1 < level.intervals.size(); ++i) {
    const auto& a = level.intervals[i];
    const auto& b = level.intervals[i + 1];
    if (compare_brackets(a.right, b.left) >= 0) {
      throw Error("basic intervals " + word_to_string(a.word, m) + " and " + word_to_string(b.word, m) +
                  " are not disjoint");
    }
    level.gaps.push_back({a.right, b.left});
  }
  return level;
}

}  // namespace

std::vector<Word> admissible_words(const Rational& x, int m, std::size_t n) {
  check_x(x);
  if (n == 0) throw DomainError("word length must be at least 1");
  const GreedyExpansion greedy(x, m);
  std::vector<Word> out;
  for (auto& c : cover_words(greedy, n)) {
    if (!c.boundary) out.push_back(std::move(c.word));
  }
  return out;
}

BasicInterval basic_interval(const Rational& x, int m, const Word& w, const Rational& tol) {
  check_x(x);
  const GreedyExpansion greedy(x, m);
  const Code right_code(m, w, Tail::Zero);  // validates digits
  if (!is_admissible(greedy, w)) {
    throw NotAdmissible("word " + word_to_string(w, m) + " is not admissible for x = " + x.str());
  }
  return {w, solve_lambda(x, Code(m, w, Tail::Max), tol), solve_lambda(x, right_code, tol), false};
}

CoverLevel cover(const Rational& x, int m, std::size_t depth, const SolveOptions& options) {
  check_x(x);
  const GreedyExpansion greedy(x, m);
  if (depth < greedy.first_defect()) {
    throw DomainError("depth " + std::to_string(depth) + " is below the first admissible depth " +
                      std::to_string(greedy.first_defect()));
  }
  detail::EndpointSolver solver(x, options.tol);
  return build_level(solver, greedy, depth, nullptr, options.threads);
}

std::vector<CoverLevel> cover_levels(const Rational& x, int m, std::size_t depth, const SolveOptions& options) {
  check_x(x);
  const GreedyExpansion greedy(x, m);
  const std::size_t first = greedy.first_defect();
  if (depth < first) {
    throw DomainError("depth " + std::to_string(depth) + " is below the first admissible depth " +
                      std::to_string(first));
  }
  detail::EndpointSolver solver(x, options.tol);
  std::vector<CoverLevel> levels;
  levels.reserve(depth - first + 1);
  for (std::size_t n = first; n <= depth; ++n) {
    levels.push_back(build_level(solver, greedy, n, levels.empty() ? nullptr : &levels.back(), options.threads));
    if (levels.size() < 2) continue;
    // Every interval of the previous level should have an offspring.
    const auto& prev = levels[levels.size() - 2];
    auto& cur = levels.back();
    std::map<Word, std::size_t> children;
    for (const auto& iv : cur.intervals) ++children[Word(iv.word.begin(), iv.word.end() - 1)];
    for (const auto& iv : prev.intervals) {
      if (children[iv.word] == 0) {
        cur.warnings.push_back("word " + word_to_string(iv.word, m) + " has no admissible child");
      }
    }
  }
  return levels;
}

}  // namespace cantor
