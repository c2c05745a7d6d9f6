#include "svg.hpp"

#include <sstream>

namespace cantor::cli {

namespace {

constexpr int kMargin = 60;
constexpr int kTop = 40;
constexpr int kRowGap = 50;
constexpr int kBarHeight = 6;

struct Mapper {
  Rational lo;
  Rational span;
  int digits;

  // Position of the value as rendered in the labels.
  [[nodiscard]] std::string x(const Rational& value) const {
    const Rational shown = Rational::parse(value.to_decimal(digits));
    return (Rational(kMargin) + Rational(kHullWidth) * (shown - lo) / span).to_decimal(3);
  }
};

void bar(std::ostringstream& os, const Mapper& map, const std::string& label, const Rational& lo,
         const Rational& hi, int y, int digits) {
  const std::string x1 = map.x(lo);
  const std::string x2 = map.x(hi);
  const Rational w = Rational::parse(x2) - Rational::parse(x1);
  os << "  <g>\n";
  os << "    <title>" << label << "</title>\n";
  os << "    <rect x=\"" << x1 << "\" y=\"" << y << "\" width=\"" << w.to_decimal(3) << "\" height=\"" << kBarHeight
     << "\"/>\n";
  os << "    <text x=\"" << x1 << "\" y=\"" << y + kBarHeight + 12 << "\" text-anchor=\"middle\">"
     << lo.to_decimal(digits) << "</text>\n";
  os << "    <text x=\"" << x2 << "\" y=\"" << y + kBarHeight + 24 << "\" text-anchor=\"middle\">"
     << hi.to_decimal(digits) << "</text>\n";
  os << "  </g>\n";
}

}  // namespace

std::string render_cover_svg(std::span<const CoverLevel> levels, int digits) {
  const CoverLevel& first = levels.front();
  const Mapper map{first.hull_lo, first.hull_hi - first.hull_lo, digits};
  const int rows = static_cast<int>(levels.size()) + 1;
  const int width = kHullWidth + 2 * kMargin;
  const int height = kTop + rows * kRowGap + 20;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"monospace\" font-size=\"9\">\n";
  os << "  <!-- Lambda(x) cover: x=" << first.x.str() << " m=" << first.m << " depth=" << levels.back().depth
     << " digits=" << digits << "; hull mapped to " << kHullWidth << " units -->\n";

  int y = kTop;
  os << "  <g id=\"hull\" fill=\"#444\">\n";
  bar(os, map, "hull", first.hull_lo, first.hull_hi, y, digits);
  os << "  </g>\n";
  for (const auto& level : levels) {
    y += kRowGap;
    os << "  <g id=\"depth-" << level.depth << "\" fill=\"#1f4e9c\">\n";
    for (const auto& iv : level.intervals) {
      const Rational lo = iv.left.midpoint();
      const Rational hi = iv.right.midpoint();
      bar(os, map, word_to_string(iv.word, level.m), lo, hi, y, digits);
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cantor::cli
