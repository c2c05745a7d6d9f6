#include "cantor/coding.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cantor/errors.hpp"

namespace cantor {

struct GreedyExpansion::State {
  Rational x;
  int m;
  mutable std::mutex mutex;
  mutable Word digits;
  mutable std::vector<std::size_t> defects;  // 1-based positions
  mutable Rational remainder;                // y_n after digits.size() digits

  State(Rational x_in, int m_in) : x(std::move(x_in)), m(m_in), remainder(x) {}

  // Caller holds the mutex.
  void extend_to(std::size_t n) const {
    const Rational base(m);
    while (digits.size() < n) {
      Rational scaled = remainder * base;
      Integer d = floor(scaled);
      if (d > m - 1) d = m - 1;
      const auto digit = static_cast<Digit>(d.get_ui());
      remainder = scaled - Rational(d, Integer(1));
      digits.push_back(digit);
      if (digit < m - 1) defects.push_back(digits.size());
    }
  }
};

GreedyExpansion::GreedyExpansion(const Rational& x, int m) {
  if (x.sign() <= 0 || x >= Rational(1)) throw DomainError("x = " + x.str() + " outside (0, 1)");
  if (m < 2 || m > kMaxBase) throw std::invalid_argument("alphabet size out of range");
  state_ = std::make_shared<State>(x, m);
}

const Rational& GreedyExpansion::x() const { return state_->x; }
int GreedyExpansion::base() const { return state_->m; }

Digit GreedyExpansion::digit(std::size_t position) const {
  if (position == 0) throw std::out_of_range("digit positions are 1-based");
  std::lock_guard lock(state_->mutex);
  state_->extend_to(position);
  return state_->digits[position - 1];
}

Word GreedyExpansion::prefix(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  state_->extend_to(n);
  return Word(state_->digits.begin(), state_->digits.begin() + static_cast<std::ptrdiff_t>(n));
}

bool GreedyExpansion::zero_after(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  state_->extend_to(n);
  if (state_->digits.size() == n) return state_->remainder.sign() == 0;
  // Remainder is monotone to zero once reached: check the materialized tail.
  return std::all_of(state_->digits.begin() + static_cast<std::ptrdiff_t>(n), state_->digits.end(),
                     [](Digit d) { return d == 0; }) &&
         state_->remainder.sign() == 0;
}

std::size_t GreedyExpansion::first_defect() const { return defect_index(1); }

std::size_t GreedyExpansion::first_nonzero() const {
  std::lock_guard lock(state_->mutex);
  for (std::size_t i = 0;; ++i) {
    state_->extend_to(i + 1);
    if (state_->digits[i] > 0) return i + 1;
  }
}

std::size_t GreedyExpansion::defect_index(std::size_t j) const {
  if (j == 0) throw std::out_of_range("defect indices are 1-based");
  std::lock_guard lock(state_->mutex);
  // x < 1 guarantees infinitely many digits below m-1.
  while (state_->defects.size() < j) state_->extend_to(state_->digits.size() + 1);
  return state_->defects[j - 1];
}

std::size_t GreedyExpansion::materialized() const {
  std::lock_guard lock(state_->mutex);
  return state_->digits.size();
}

GreedyExpansion greedy_expansion(const Rational& x, int m, std::size_t n) {
  if (n == 0) throw std::invalid_argument("need at least one digit");
  GreedyExpansion g(x, m);
  (void)g.prefix(n);
  return g;
}

namespace {

struct DigitStep {
  std::optional<Digit> digit;
  Rational next;
};

// Remainder y = π_λ(rest); finds d with y/λ - d ∈ [0, H].
DigitStep coding_step(const Rational& y, const Rational& lambda, const Rational& hull, int m) {
  const Rational scaled = y / lambda;
  Integer d = floor(scaled);
  if (d > m - 1) d = m - 1;
  if (d < 0) return {std::nullopt, {}};
  Rational next = scaled - Rational(d, Integer(1));
  // For λ < 1/m the digit intervals [d, d+H] are disjoint, so the only
  // candidate is floor(scaled) (clamped); it fits iff next <= H.
  if (next > hull) return {std::nullopt, {}};
  return {static_cast<Digit>(d.get_ui()), std::move(next)};
}

Rational hull_max(const Rational& lambda, int m) {
  return Rational(m - 1) * lambda / (Rational(1) - lambda);
}

void check_in_hull(const Rational& x, const Rational& lambda, int m) {
  if (lambda.sign() <= 0 || lambda > Rational(1, m)) {
    throw DomainError("lambda = " + lambda.str() + " outside (0, 1/" + std::to_string(m) + "]");
  }
  if (x.sign() < 0 || x > hull_max(lambda, m)) {
    throw HullViolation("x = " + x.str() + " outside the convex hull of K_lambda for lambda = " +
                        lambda.str());
  }
}

}  // namespace

CodingResult unique_coding(const Rational& x, const Rational& lambda, int m, std::size_t n) {
  check_in_hull(x, lambda, m);
  if (lambda == Rational(1, m)) {
    throw DomainError("the coding is unique only for lambda < 1/m");
  }
  const Rational hull = hull_max(lambda, m);
  CodingResult out;
  Rational y = x;
  for (std::size_t step = 1; step <= n; ++step) {
    auto next = coding_step(y, lambda, hull, m);
    if (!next.digit) {
      out.not_member_step = step;
      return out;
    }
    out.digits.push_back(*next.digit);
    y = std::move(next.next);
  }
  return out;
}

MembershipResult membership(const Rational& x, const Rational& lambda, int m,
                            const MembershipOptions& options) {
  check_in_hull(x, lambda, m);
  const bool at_max = lambda == Rational(1, m);
  const Rational hull = hull_max(lambda, m);

  MembershipResult out;
  std::unordered_map<Rational, std::size_t> seen;  // remainder -> digits emitted before it
  Rational y = x;
  if (at_max && y == Rational(1)) {
    // Only reachable for x = 1, excluded by callers; 1 = (m-1)^∞ at 1/m.
    out.verdict = Member{{}, {static_cast<Digit>(m - 1)}};
    return out;
  }
  for (std::size_t step = 0;; ++step) {
    if (seen.size() < options.state_cap) {
      auto [it, inserted] = seen.emplace(y, out.extracted_digits.size());
      if (!inserted) {
        const auto start = static_cast<std::ptrdiff_t>(it->second);
        Member member;
        member.preperiod.assign(out.extracted_digits.begin(), out.extracted_digits.begin() + start);
        member.period.assign(out.extracted_digits.begin() + start, out.extracted_digits.end());
        out.verdict = std::move(member);
        return out;
      }
    }
    if (step >= options.max_steps) break;
    if (at_max) {
      // Greedy digit at 1/m: the remainder stays in [0, 1).
      Rational scaled = y * Rational(m);
      Integer d = floor(scaled);
      out.extracted_digits.push_back(static_cast<Digit>(d.get_ui()));
      y = scaled - Rational(d, Integer(1));
      continue;
    }
    auto next = coding_step(y, lambda, hull, m);
    if (!next.digit) {
      out.verdict = NotMember{step + 1};
      return out;
    }
    out.extracted_digits.push_back(*next.digit);
    y = std::move(next.next);
  }
  if (at_max) {
    out.verdict = Member{out.extracted_digits, {}};
  } else {
    out.verdict = Undetermined{out.extracted_digits.size()};
  }
  return out;
}

Rational periodic_value(const Word& preperiod, const Word& period, const Rational& lambda) {
  auto poly = [&](const Word& w) {
    Rational s;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      s += Rational(*it);
      s *= lambda;
    }
    return s;
  };
  Rational value = poly(preperiod);
  if (!period.empty()) {
    const Rational shift = pow(lambda, preperiod.size());
    value += shift * poly(period) / (Rational(1) - pow(lambda, period.size()));
  }
  return value;
}

namespace {

std::strong_ordering compare_explicit(const Code& a, const Code& b) {
  const std::size_t n = std::max(a.prefix().size(), b.prefix().size()) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Digit da = *a.digit(i);
    const Digit db = *b.digit(i);
    if (da != db) return da <=> db;
  }
  // Beyond both prefixes each stream is constant.
  return std::strong_ordering::equal;
}

}  // namespace

std::partial_ordering lex_compare(const Code& a, const Code& b) {
  if (a.base() != b.base()) throw std::invalid_argument("codes over different alphabets");
  if (a.explicit_tail() && b.explicit_tail()) return compare_explicit(a, b);
  auto completions = [](const Code& c) {
    if (c.explicit_tail()) return std::pair{c, c};
    return std::pair{c.with_tail(Tail::Zero), c.with_tail(Tail::Max)};
  };
  const auto [a_low, a_high] = completions(a);
  const auto [b_low, b_high] = completions(b);
  if (compare_explicit(a_high, b_low) < 0) return std::partial_ordering::less;
  if (compare_explicit(a_low, b_high) > 0) return std::partial_ordering::greater;
  return std::partial_ordering::unordered;
}

}  // namespace cantor
