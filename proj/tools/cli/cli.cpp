#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cantor/code.hpp"
#include "cantor/errors.hpp"
#include "commands.hpp"

namespace cantor::cli {

namespace {

struct RawOptions {
  int m = 2;
  std::string x;
  std::string y;
  std::optional<std::size_t> depth;
  std::size_t kmax = 12;
  std::size_t grid_depth = 16;
  std::string tol = "2^-64";
  std::string format = "text";
  std::string out;
  int digits = 6;
  std::string at = "1/m";
  std::string deltas = "1/8,1/16,1/32";
  std::string lambda;
  std::size_t max_steps = 1000;
};

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw ValidationError{what + " must be a rational such as 1/2, got '" + text + "'"};
  }
}

Rational parse_point(const std::string& text, const std::string& name, bool allow_ends) {
  const Rational v = parse_rational(text, name);
  const bool ok = allow_ends ? (v.sign() >= 0 && v <= Rational(1)) : (v.sign() > 0 && v < Rational(1));
  if (!ok) throw ValidationError{name + " must lie in (0,1)"};
  return v;
}

unsigned env_threads() {
  const char* value = std::getenv("CANTOR_TOOLKIT_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  try {
    const long n = std::stol(value);
    return n > 0 ? static_cast<unsigned>(n) : 0U;
  } catch (const std::exception&) {
    return 0;
  }
}

RunConfig make_config(const RawOptions& raw, const std::string& command) {
  RunConfig c;
  if (raw.m < 2 || raw.m > kMaxBase) throw ValidationError{"m must lie in [2, " + std::to_string(kMaxBase) + "]"};
  c.m = raw.m;
  if (raw.x.empty()) throw ValidationError{"--x is required"};
  c.x = parse_point(raw.x, "x", command == "cover");
  if (command == "intersect") {
    if (raw.y.empty()) throw ValidationError{"--y is required for intersect"};
    c.y = parse_point(raw.y, "y", false);
  }
  c.tol = parse_rational(raw.tol, "tol");
  if (c.tol.sign() <= 0) throw ValidationError{"tol must be positive"};

  static const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"csv", Format::Csv}, {"svg", Format::Svg}, {"text", Format::Text}};
  auto f = formats.find(raw.format);
  if (f == formats.end()) throw ValidationError{"unknown format '" + raw.format + "'"};
  c.format = f->second;
  if (c.format == Format::Svg && command != "cover") throw ValidationError{"svg output is only available for cover"};

  if (raw.digits < 1 || raw.digits > 60) throw ValidationError{"digits must lie in [1, 60]"};
  c.digits = raw.digits;

  static const std::map<std::string, std::size_t> default_depth{
      {"cover", 4}, {"thickness", 3}, {"intersect", 6}, {"dimension", 12}, {"membership", 0}};
  c.depth = raw.depth.value_or(default_depth.at(command));
  if (command != "membership" && c.depth == 0) throw ValidationError{"depth must be at least 1"};
  if (command == "cover" && c.depth > 24) throw ValidationError{"cover depth above 24 is not supported"};
  if (command == "dimension" && c.depth > 20) throw ValidationError{"dimension depth above 20 is not supported"};
  if ((command == "thickness" || command == "intersect") && c.depth > 12) {
    throw ValidationError{"depth above 12 is not supported for " + command};
  }
  c.kmax = raw.kmax;
  if (raw.grid_depth == 0 || raw.grid_depth > 62) throw ValidationError{"grid-depth must lie in [1, 62]"};
  c.grid_depth = raw.grid_depth;
  c.threads = env_threads();
  c.at = raw.at;
  if (command == "dimension") {
    std::stringstream ss(raw.deltas);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const Rational delta = parse_rational(item, "delta");
      if (delta.sign() <= 0) throw ValidationError{"deltas must be positive"};
      c.deltas.push_back(delta);
    }
    if (c.deltas.empty()) throw ValidationError{"--deltas needs at least one value"};
  }
  if (command == "membership") {
    if (raw.lambda.empty()) throw ValidationError{"--lambda is required for membership"};
    c.lambda = parse_rational(raw.lambda, "lambda");
    if (c.lambda->sign() <= 0 || *c.lambda > Rational(1, c.m)) {
      throw ValidationError{"lambda must lie in (0, 1/m]"};
    }
    if (raw.max_steps == 0) throw ValidationError{"max-steps must be positive"};
    c.max_steps = raw.max_steps;
  }
  return c;
}

void add_common(CLI::App& sub, RawOptions& raw) {
  sub.add_option("--m", raw.m, "alphabet size m >= 2");
  sub.add_option("--x", raw.x, "point x as p/q");
  sub.add_option("--tol", raw.tol, "bracket width, e.g. 2^-64 or 1e-9");
  sub.add_option("--format", raw.format, "json, csv, svg or text");
  sub.add_option("--out", raw.out, "write output to this file");
  sub.add_option("--digits", raw.digits, "decimal places of rendered values");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified computations on the parameter set Lambda(x) of the Cantor sets K_lambda", "cantor"};
  app.require_subcommand(1);
  RawOptions raw;

  auto* cover = app.add_subcommand("cover", "basic-interval cover of Lambda(x) at one depth");
  add_common(*cover, raw);
  cover->add_option("--depth", raw.depth, "tree depth");

  auto* thickness = app.add_subcommand("thickness", "thickness reports of E_k(x) for k = 1..kmax");
  add_common(*thickness, raw);
  thickness->add_option("--depth", raw.depth, "levels per Cantor subset");
  thickness->add_option("--kmax", raw.kmax, "number of subsets");

  auto* intersect = app.add_subcommand("intersect", "interleaved pairs of E_i(x), E_j(y)");
  add_common(*intersect, raw);
  intersect->add_option("--y", raw.y, "second point y as p/q");
  intersect->add_option("--kmax", raw.kmax, "largest subset index");
  intersect->add_option("--depth", raw.depth, "witness search depth");

  auto* dimension = app.add_subcommand("dimension", "local box dimension of Lambda(x) around a parameter");
  add_common(*dimension, raw);
  dimension->add_option("--at", raw.at, "\"1/m\" or a code such as 11:zero");
  dimension->add_option("--deltas", raw.deltas, "comma separated radii");
  dimension->add_option("--depth", raw.depth, "cover depth");
  dimension->add_option("--grid-depth", raw.grid_depth, "finest box size 2^-grid_depth");

  auto* member = app.add_subcommand("membership", "decide x in K_lambda for rational lambda");
  add_common(*member, raw);
  member->add_option("--lambda", raw.lambda, "parameter as p/q");
  member->add_option("--max-steps", raw.max_steps, "digit extraction limit");

  std::vector<std::string> argv_store{"cantor"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidationError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  static const std::map<std::string, std::function<std::string(const RunConfig&)>> commands{
      {"cover", cmd_cover},
      {"thickness", cmd_thickness},
      {"intersect", cmd_intersect},
      {"dimension", cmd_dimension},
      {"membership", cmd_membership}};
  try {
    const RunConfig config = make_config(raw, command);
    const std::string text = commands.at(command)(config);
    if (raw.out.empty()) {
      out << text;
    } else {
      std::ofstream file(raw.out, std::ios::binary);
      if (!file) throw ValidationError{"cannot open '" + raw.out + "' for writing"};
      file << text;
    }
    return kSuccess;
  } catch (const ValidationError& e) {
    err << "error: " << e.message << '\n';
    return kValidationError;
  } catch (const PrecisionExhausted& e) {
    err << "error: precision exhausted: " << e.what() << '\n';
    return kPrecisionExhausted;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const HullViolation& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const NotAdmissible& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const EmptyWindow& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace cantor::cli
