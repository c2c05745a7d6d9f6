#pragma once

#include <span>
#include <string>

#include "cantor/lambda_set.hpp"

namespace cantor::cli {

/// Width in SVG units that the hull of Λ(x) is mapped onto.
inline constexpr int kHullWidth = 1000;

/// One bar row for the hull followed by one row per cover level. Bar ends sit
/// at the endpoint values rendered with `digits` decimals, so the drawing is a
/// pure function of the rendered numbers.
[[nodiscard]] std::string render_cover_svg(std::span<const CoverLevel> levels, int digits);

}  // namespace cantor::cli
