#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "cantor/code.hpp"
#include "cantor/exact_arith.hpp"
#include "cantor/rational.hpp"

namespace cantor::detail {

/// Memoizing solver for the endpoints of one point x. Brackets are keyed by
/// canonical code, so endpoints shared between a parent interval and its
/// extreme children are solved once. Hinted solves equal unhinted ones, so
/// the cache content never depends on call order.
class EndpointSolver {
 public:
  struct Request {
    Code code;
    std::optional<SolveHint> hint;
  };

  EndpointSolver(Rational x, Rational tol);

  [[nodiscard]] const Rational& x() const { return x_; }
  [[nodiscard]] const Rational& tol() const { return tol_; }

  [[nodiscard]] Bracket solve(const Code& code, const std::optional<SolveHint>& hint = std::nullopt);
  [[nodiscard]] std::vector<Bracket> solve_all(std::span<const Request> requests, unsigned threads);

 private:
  Rational x_;
  Rational tol_;
  std::mutex mutex_;
  std::map<Code, Bracket> cache_;
};

}  // namespace cantor::detail
