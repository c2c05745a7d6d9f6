#include "endpoint_solver.hpp"

#include <utility>

#include "cantor/parallel.hpp"

namespace cantor::detail {

EndpointSolver::EndpointSolver(Rational x, Rational tol) : x_(std::move(x)), tol_(std::move(tol)) {}

Bracket EndpointSolver::solve(const Code& code, const std::optional<SolveHint>& hint) {
  Code key = code.canonical();
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Bracket b = hint ? solve_lambda(x_, key, tol_, *hint) : solve_lambda(x_, key, tol_);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(b)).first->second;
}

std::vector<Bracket> EndpointSolver::solve_all(std::span<const Request> requests, unsigned threads) {
  std::vector<std::optional<Bracket>> slots(requests.size());
  parallel_for(requests.size(), threads,
               [&](std::size_t i) { slots[i].emplace(solve(requests[i].code, requests[i].hint)); });
  std::vector<Bracket> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace cantor::detail
