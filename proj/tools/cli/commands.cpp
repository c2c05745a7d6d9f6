#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "cantor/coding.hpp"
#include "cantor/dimension.hpp"
#include "cantor/errors.hpp"
#include "cantor/lambda_set.hpp"
#include "cantor/thickness.hpp"
#include "cantor/thickness_bounds.hpp"
#include "svg.hpp"

namespace cantor::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fixed(double value, int digits) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string dec(const Rational& r, int digits) { return r.to_decimal(digits); }

SolveOptions solve_options(const RunConfig& c) { return {c.tol, c.threads}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json bracket_json(const Bracket& b) {
  return Json{{"code", b.code().str()}, {"bracket", {b.lo().str(), b.hi().str()}}};
}

Json ratio_json(const RatioInterval& r, int digits) {
  return Json{{"lo", r.lo.str()}, {"hi", r.hi.str()}, {"estimate", fixed(r.estimate(), digits)}};
}

Json optional_rational(const std::optional<Rational>& r, int digits) {
  if (!r) return nullptr;
  return Json{{"exact", r->str()}, {"decimal", fixed(r->to_double(), digits)}};
}

std::string special_cover(const RunConfig& c) {
  const bool zero = c.x.sign() == 0;
  const Rational top(1, c.m);
  const Rational lo = zero ? Rational(0) : top;
  const std::string note = zero ? "Lambda(0) = (0, 1/m]: every parameter works" : "Lambda(1) = {1/m}";
  switch (c.format) {
    case Format::Json: {
      Json j{{"x", c.x.str()},  {"m", c.m},       {"depth", c.depth},           {"special", note},
             {"hull", {lo.str(), top.str()}}, {"intervals", Json::array()}, {"gaps", Json::array()},
             {"digits", c.digits}};
      return dump(j);
    }
    case Format::Csv:
      return "kind,word,lo,hi\nhull,," + dec(lo, c.digits) + "," + dec(top, c.digits) + "\n";
    case Format::Svg:
      throw ValidationError{"svg output needs x in (0,1); " + note};
    case Format::Text:
      break;
  }
  return note + "\n";
}

Bracket resolve_center(const RunConfig& c) {
  if (c.at == "1/m") return Bracket::parameter_max(c.x, c.m);
  Code code = [&] {
    try {
      return Code::parse(c.at, c.m);
    } catch (const std::invalid_argument& e) {
      throw ValidationError{"invalid code '" + c.at + "': " + e.what()};
    }
  }();
  if (!code.explicit_tail()) throw ValidationError{"code '" + c.at + "' needs a zero or max tail"};
  try {
    return solve_lambda(c.x, code, c.tol);
  } catch (const NoRoot&) {
    throw ValidationError{"code '" + c.at + "' is not admissible for x = " + c.x.str()};
  }
}

}  // namespace

// ---- cover ----------------------------------------------------------------

std::string cmd_cover(const RunConfig& c) {
  if (c.x.sign() == 0 || c.x == Rational(1)) return special_cover(c);
  const GreedyExpansion greedy(c.x, c.m);
  if (c.depth < greedy.first_defect()) {
    throw ValidationError{"depth must be at least " + std::to_string(greedy.first_defect()) + " for x = " +
                          c.x.str()};
  }
  const SolveOptions opts = solve_options(c);
  if (c.format == Format::Svg) {
    const auto levels = cover_levels(c.x, c.m, c.depth, opts);
    return render_cover_svg(levels, c.digits);
  }
  const CoverLevel level = cover(c.x, c.m, c.depth, opts);
  const int d = c.digits;
  switch (c.format) {
    case Format::Json: {
      Json intervals = Json::array();
      for (const auto& iv : level.intervals) {
        Json item{{"word", word_to_string(iv.word, c.m)},
                  {"lo", dec(iv.left.midpoint(), d)},
                  {"hi", dec(iv.right.midpoint(), d)},
                  {"left", bracket_json(iv.left)},
                  {"right", bracket_json(iv.right)}};
        if (iv.reaches_max) item["reaches_max"] = true;
        intervals.push_back(std::move(item));
      }
      Json gaps = Json::array();
      for (const auto& g : level.gaps) gaps.push_back({dec(g.left.midpoint(), d), dec(g.right.midpoint(), d)});
      Json j{{"x", c.x.str()},
             {"m", c.m},
             {"depth", c.depth},
             {"hull", {level.hull_lo.str(), level.hull_hi.str()}},
             {"intervals", std::move(intervals)},
             {"gaps", std::move(gaps)},
             {"digits", d},
             {"approximate", true},
             {"warnings", level.warnings}};
      return dump(j);
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "kind,word,lo,hi\n";
      for (const auto& iv : level.intervals) {
        os << "interval," << word_to_string(iv.word, c.m) << ',' << dec(iv.left.midpoint(), d) << ','
           << dec(iv.right.midpoint(), d) << '\n';
      }
      for (const auto& g : level.gaps) {
        os << "gap,," << dec(g.left.midpoint(), d) << ',' << dec(g.right.midpoint(), d) << '\n';
      }
      return os.str();
    }
    default: {
      std::ostringstream os;
      os << "Lambda(" << c.x.str() << "), m = " << c.m << ", depth " << c.depth << ": " << level.intervals.size()
         << " intervals, " << level.gaps.size() << " gaps\n";
      os << "hull [" << level.hull_lo.str() << ", " << level.hull_hi.str() << "]\n";
      for (const auto& iv : level.intervals) {
        os << "  " << word_to_string(iv.word, c.m) << "  [" << dec(iv.left.midpoint(), d) << ", "
           << dec(iv.right.midpoint(), d) << "]" << (iv.reaches_max ? "  (clipped at 1/m)" : "") << '\n';
      }
      for (const auto& g : level.gaps) {
        os << "  gap (" << dec(g.left.midpoint(), d) << ", " << dec(g.right.midpoint(), d) << ")\n";
      }
      return os.str();
    }
  }
}

// ---- thickness ------------------------------------------------------------

std::string cmd_thickness(const RunConfig& c) {
  const int d = c.digits;
  const SolveOptions opts = solve_options(c);
  std::vector<ThicknessReport> reports;
  std::vector<ThetaEntry> thetas;
  std::vector<EkSystem> hulls;
  if (c.kmax > 0) {
    hulls = ek_hulls(c.x, c.m, c.kmax + 1, opts);
    thetas = theta_sequence(c.x, c.m, c.kmax, opts);
    for (std::size_t k = 1; k <= c.kmax; ++k) reports.push_back(tau_estimate(hulls[k - 1], c.depth, opts));
  }
  switch (c.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        Json levels = Json::array();
        for (const auto& lv : r.per_level_min) levels.push_back({{"level", lv.level}, {"min", ratio_json(lv.ratio, d)}});
        arr.push_back({{"x", r.x.str()},
                       {"m", r.m},
                       {"k", r.k},
                       {"j", r.j},
                       {"n_j", r.defect_position},
                       {"b", hulls[i].b},
                       {"ell", r.first_nonzero},
                       {"depth", r.depth},
                       {"hull", {bracket_json(hulls[i].hull.left), bracket_json(hulls[i].hull.right)}},
                       {"per_level_min", std::move(levels)},
                       {"tau_empirical", ratio_json(r.tau_empirical, d)},
                       {"tau_analytic_lower", optional_rational(r.tau_analytic_lower, d)},
                       {"newhouse_lower", optional_rational(r.newhouse_lower, d)},
                       {"dim_lower", fixed(r.dim_lower, d)},
                       {"dim_lower_certified",
                        r.dim_lower_certified ? Json(fixed(*r.dim_lower_certified, d)) : Json(nullptr)},
                       {"theta", ratio_json(thetas[i].theta, d)},
                       {"growth", ratio_json(thetas[i].growth, d)},
                       {"pairs", r.pairs.size()},
                       {"digits", d}});
      }
      return dump(arr);
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "k,j,n_j,tau_empirical,tau_analytic_lower,newhouse_lower,dim_lower,theta\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        os << r.k << ',' << r.j << ',' << r.defect_position << ',' << fixed(r.tau_empirical.lo.to_double(), d) << ','
           << (r.tau_analytic_lower ? fixed(r.tau_analytic_lower->to_double(), d) : "") << ','
           << (r.newhouse_lower ? fixed(r.newhouse_lower->to_double(), d) : "") << ',' << fixed(r.dim_lower, d)
           << ',' << fixed(thetas[i].theta.lo.to_double(), d) << '\n';
      }
      return os.str();
    }
    case Format::Svg:
      throw ValidationError{"thickness supports json, csv and text output"};
    case Format::Text:
      break;
  }
  std::ostringstream os;
  os << "k    tau_empirical    tau_analytic_lower    dim_lower\n";
  for (const auto& r : reports) {
    char line[160];
    std::snprintf(line, sizeof line, "%-4zu %-16s %-21s %s\n", r.k, fixed(r.tau_empirical.lo.to_double(), d).c_str(),
                  r.tau_analytic_lower ? fixed(r.tau_analytic_lower->to_double(), d).c_str() : "n/a",
                  fixed(r.dim_lower, d).c_str());
    os << line;
  }
  os << "(tau_empirical is a finite-depth minimum and overestimates the infimum)\n";
  return os.str();
}

// ---- intersect ------------------------------------------------------------

std::string cmd_intersect(const RunConfig& c) {
  const int d = c.digits;
  InterleaveOptions opts;
  opts.depth = c.depth;
  opts.tol = c.tol;
  opts.threads = c.threads;
  const auto pairs = find_interleaved_pairs(c.x, *c.y, c.m, c.kmax, opts);
  std::optional<double> best;
  for (const auto& p : pairs) {
    const auto rep = intersection_report(p);
    if (rep.dim_lower) best = best ? std::max(*best, *rep.dim_lower) : *rep.dim_lower;
  }
  if (c.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& p : pairs) {
      const auto rep = intersection_report(p);
      arr.push_back({{"i", p.i},
                     {"j", p.j},
                     {"diagonal", p.diagonal},
                     {"certificate",
                      {{"x_point", bracket_json(p.witness_x)},
                       {"x_level", p.witness_x_level},
                       {"y_point", bracket_json(p.witness_y)},
                       {"y_level", p.witness_y_level}}},
                     {"tau_min", optional_rational(p.tau_min, d)},
                     {"tau_empirical_min", fixed(p.tau_empirical_min, d)},
                     {"meets_threshold", p.meets_threshold},
                     {"report",
                      {{"threshold_met", rep.threshold_met},
                       {"dim_lower", rep.dim_lower ? Json(fixed(*rep.dim_lower, d)) : Json(nullptr)},
                       {"qualifier", rep.qualifier}}}});
    }
    Json j{{"x", c.x.str()},
           {"y", c.y->str()},
           {"m", c.m},
           {"kmax", c.kmax},
           {"depth", c.depth},
           {"pairs", std::move(arr)},
           {"best_dim_lower", best ? Json(fixed(*best, d)) : Json(nullptr)},
           {"digits", d}};
    return dump(j);
  }
  if (c.format != Format::Text) throw ValidationError{"intersect supports json and text output"};
  std::ostringstream os;
  os << "interleaved pairs for x = " << c.x.str() << ", y = " << c.y->str() << ", m = " << c.m
     << ", kmax = " << c.kmax << ": " << pairs.size() << "\n";
  for (const auto& p : pairs) {
    const auto rep = intersection_report(p);
    os << "  (" << p.i << ", " << p.j << ")  tau_min "
       << (p.tau_min ? fixed(p.tau_min->to_double(), d) : std::string("n/a")) << "  "
       << (rep.threshold_met ? "dim_lower ~ " + fixed(*rep.dim_lower, d) + " (order-of)" : rep.qualifier) << '\n';
  }
  os << "best dim_lower: " << (best ? fixed(*best, d) + " (order-of)" : std::string("none")) << '\n';
  return os.str();
}

// ---- dimension ------------------------------------------------------------

std::string cmd_dimension(const RunConfig& c) {
  const int d = c.digits;
  const Bracket center = resolve_center(c);
  const auto scan = local_dimension_scan(c.x, c.m, center, c.deltas, c.depth, c.grid_depth, solve_options(c));
  switch (c.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& e : scan) {
        Json levels = Json::array();
        for (const auto& lv : e.estimate.levels) levels.push_back({{"t", lv.t}, {"count", lv.count}});
        arr.push_back({{"delta", e.delta.str()},
                       {"window", {e.estimate.window_lo.str(), e.estimate.window_hi.str()}},
                       {"grid_levels", std::move(levels)},
                       {"slope", fixed(e.estimate.slope, d)},
                       {"clamped", e.estimate.clamped},
                       {"theoretical", fixed(e.theoretical, d)}});
      }
      Json j{{"x", c.x.str()},
             {"m", c.m},
             {"at", c.at},
             {"center", bracket_json(center)},
             {"depth", c.depth},
             {"grid_depth", c.grid_depth},
             {"estimates", std::move(arr)},
             {"digits", d}};
      return dump(j);
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "delta,size,count\n";
      for (const auto& e : scan) {
        for (const auto& lv : e.estimate.levels) os << e.delta.str() << ",2^-" << lv.t << ',' << lv.count << '\n';
      }
      return os.str();
    }
    case Format::Svg:
      throw ValidationError{"dimension supports json, csv and text output"};
    case Format::Text:
      break;
  }
  std::ostringstream os;
  os << "delta      slope      theoretical\n";
  for (const auto& e : scan) {
    char line[128];
    std::snprintf(line, sizeof line, "%-10s %-10s %s%s\n", e.delta.str().c_str(), fixed(e.estimate.slope, d).c_str(),
                  fixed(e.theoretical, d).c_str(), e.estimate.clamped ? "  (clamped)" : "");
    os << line;
  }
  return os.str();
}

// ---- membership -----------------------------------------------------------

std::string cmd_membership(const RunConfig& c) {
  const MembershipResult res = membership(c.x, *c.lambda, c.m, {c.max_steps, 100000});
  std::string verdict;
  Json detail = Json::object();
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Member>) {
          verdict = "member";
          detail["preperiod"] = word_to_string(v.preperiod, c.m);
          detail["period"] = word_to_string(v.period, c.m);
        } else if constexpr (std::is_same_v<V, NotMember>) {
          verdict = "not_member";
          detail["step"] = v.step;
        } else {
          verdict = "undetermined";
          detail["depth"] = v.depth;
        }
      },
      res.verdict);
  if (c.format == Format::Json) {
    Json j{{"x", c.x.str()},          {"lambda", c.lambda->str()}, {"m", c.m},
           {"verdict", verdict},       {"detail", detail},          {"coding", word_to_string(res.extracted_digits, c.m)}};
    return dump(j);
  }
  if (c.format != Format::Text) throw ValidationError{"membership supports json and text output"};
  std::ostringstream os;
  os << verdict;
  if (verdict == "member") {
    os << ": coding " << detail["preperiod"].get<std::string>() << "(" << detail["period"].get<std::string>() << ")^inf";
  } else if (verdict == "not_member") {
    os << ": remainder left the digit intervals at step " << detail["step"].get<std::size_t>();
  } else {
    os << ": no verdict after " << detail["depth"].get<std::size_t>() << " steps";
  }
  os << '\n';
  return os.str();
}

}  // namespace cantor::cli
