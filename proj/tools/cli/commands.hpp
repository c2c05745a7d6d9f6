#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor::cli {

enum class Format { Json, Csv, Svg, Text };

/// Parsed and validated command-line settings.
struct RunConfig {
  int m = 2;
  Rational x;
  std::optional<Rational> y;
  std::size_t depth = 0;
  std::size_t kmax = 0;
  std::size_t grid_depth = 16;
  Rational tol;
  Format format = Format::Text;
  int digits = 6;
  unsigned threads = 0;
  std::string at = "1/m";
  std::vector<Rational> deltas;
  std::optional<Rational> lambda;
  std::size_t max_steps = 1000;
};

/// Thrown for invalid settings; mapped to the validation exit status.
struct ValidationError {
  std::string message;
};

std::string cmd_cover(const RunConfig& config);
std::string cmd_thickness(const RunConfig& config);
std::string cmd_intersect(const RunConfig& config);
std::string cmd_dimension(const RunConfig& config);
std::string cmd_membership(const RunConfig& config);

}  // namespace cantor::cli
