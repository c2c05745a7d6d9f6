#pragma once

#include <cstddef>

#include "cantor/exact_arith.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Certified checks of the explicit inequalities used in the thickness
/// estimates. Each check works on conservative bracket bounds and refines
/// copies of the brackets (at most `max_steps` times) before giving up, so
/// `false` means "not certified", never a numeric near miss.
///
/// Notation: λ1 < λ2 < λ3 < λ4 are the endpoints of two neighbouring basic
/// intervals [λ1, λ2], [λ3, λ4]; n_j is the defect position of the hull, ℓ the
/// first nonzero greedy digit and n the word length.

inline constexpr std::size_t kBoundRefinementCap = 256;

/// hi - lo >= (1 - lo) hi^exponent for the endpoints of one basic interval.
/// exponent = n_j + n + 1 (for a hull, n = 0). The pair (m-1)^∞, (m-1)^N 0^∞
/// meets it with equality at exponent N + 1 and is decided symbolically.
[[nodiscard]] bool holds_length_bound(const Bracket& lo, const Bracket& hi, std::size_t exponent,
                                      std::size_t max_steps = kBoundRefinementCap);

/// λ3 - λ2 <= (m λ3^{n_j-ℓ} / (1 - λ3)) λ2^{n_j-ℓ+n+1}. Needs n_j > ℓ.
[[nodiscard]] bool holds_gap_bound(const Bracket& lambda2, const Bracket& lambda3, int m, std::size_t nj,
                                   std::size_t ell, std::size_t n, std::size_t max_steps = kBoundRefinementCap);

/// Gap between consecutive hulls I_k = [p_k, q_k], I_{k+1} = [p_{k+1}, q_{k+1}]:
/// p_{k+1} - q_k <= q_k^{n_j-ℓ+1} (m / (1 - p_{k+1})) p_{k+1}^{e-ℓ},
/// where n_j belongs to I_k and e to I_{k+1}. Needs n_j > ℓ.
[[nodiscard]] bool holds_hull_gap_bound(const Bracket& qk, const Bracket& pk1, int m, std::size_t nj,
                                        std::size_t e, std::size_t ell,
                                        std::size_t max_steps = kBoundRefinementCap);

/// (1 - mq) x / ((m - 1) q), the Lipschitz-type constant for λ ≤ q.
[[nodiscard]] Rational lip_upper_constant(const Rational& x, int m, const Rational& q);

/// |π_q(code(a)) - π_q(code(b))| > C |a - b| for two parameters of Λ(x) not
/// exceeding q, where code(·) is the bracket's defining code.
[[nodiscard]] bool holds_lip_upper(const Bracket& a, const Bracket& b, const Rational& q,
                                   std::size_t max_steps = kBoundRefinementCap);

/// Lower bound min{(1-λ1)(1-λ3)λ2^ℓ, (1-λ3)^2 λ4^ℓ} / (m λ3^{n_j-ℓ}) on the two
/// thickness ratios of a neighbouring pair, evaluated conservatively.
[[nodiscard]] Rational pair_ratio_bound(const Bracket& lambda1, const Bracket& lambda2, const Bracket& lambda3,
                                        const Bracket& lambda4, int m, std::size_t nj, std::size_t ell);

/// (1 - q)^2 p^ℓ / (m q^{n_j-ℓ}) for a hull [p, q]: bounds `pair_ratio_bound`
/// from below for every pair inside the hull, hence bounds the thickness.
[[nodiscard]] Rational hull_ratio_bound(const Bracket& p, const Bracket& q, int m, std::size_t nj, std::size_t ell);

/// (2m)^{ℓ+1} / (m - 1).
[[nodiscard]] Rational interval_growth_bound(int m, std::size_t ell);

}  // namespace cantor
