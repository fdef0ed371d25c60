#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <regex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "noneuclid/errors.hpp"
#include "noneuclid/lambert.hpp"
#include "noneuclid/orthoscheme.hpp"
#include "noneuclid/specfun.hpp"
#include "noneuclid/sweep.hpp"
#include "noneuclid/verify.hpp"

namespace noneuclid::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kToDegrees = 180.0 / kPi;
constexpr std::size_t kSweepChunk = 256;

// ---------------------------------------------------------------------------
// Output records

using Value = std::variant<std::monostate, double, long long, bool, std::string>;

struct Field {
  std::string key;
  Value value;
};

using Record = std::vector<Field>;

enum class Format { kPlain, kJson, kCsv };

Value opt(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

std::string number(double v, int digits) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// Text form of a value for plain (10 digits) and CSV (round-trip) output.
std::string text(const Value& v, int digits, const char* null_text) {
  if (std::holds_alternative<std::monostate>(v)) return null_text;
  if (auto d = std::get_if<double>(&v)) return std::isfinite(*d) ? number(*d, digits) : null_text;
  if (auto i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (auto b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

nlohmann::ordered_json to_json(const Value& v) {
  if (auto d = std::get_if<double>(&v)) return std::isfinite(*d) ? nlohmann::ordered_json(*d) : nullptr;
  if (auto i = std::get_if<long long>(&v)) return *i;
  if (auto b = std::get_if<bool>(&v)) return *b;
  if (auto s = std::get_if<std::string>(&v)) return *s;
  return nullptr;
}

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& f : r) j[f.key] = to_json(f.value);
  return j;
}

void write_csv_header(std::ostream& out, const Record& r) {
  for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i].key;
  out << '\n';
}

void write_csv_row(std::ostream& out, const Record& r) {
  for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(text(r[i].value, 17, ""));
  out << '\n';
}

void write_record(std::ostream& out, const Record& r, Format format) {
  switch (format) {
    case Format::kJson:
      out << to_json(r).dump(2) << '\n';
      break;
    case Format::kCsv:
      write_csv_header(out, r);
      write_csv_row(out, r);
      break;
    case Format::kPlain: {
      std::size_t width = 0;
      for (const auto& f : r) width = std::max(width, f.key.size());
      for (const auto& f : r)
        out << f.key << std::string(width - f.key.size() + 2, ' ') << text(f.value, 10, "null") << '\n';
      break;
    }
  }
}

void write_plain_row(std::ostream& out, const Record& r, bool header) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::string cell = header ? r[i].key : text(r[i].value, 10, "null");
    if (cell.size() < 17) cell.insert(0, 17 - cell.size(), ' ');
    out << (i ? " " : "") << cell;
  }
  out << '\n';
}

// ---------------------------------------------------------------------------
// Settings shared by all subcommands

struct Settings {
  std::string format;
  bool degrees = false;
  bool degrees_out = false;
  bool no_timing = false;
  std::optional<double> tol;

  Format resolve_format(Format fallback) const {
    if (format.empty()) return fallback;
    if (format == "json") return Format::kJson;
    if (format == "csv") return Format::kCsv;
    return Format::kPlain;
  }

  double angle_out(double radians) const { return degrees_out ? radians * kToDegrees : radians; }

  double quad_tol() const {
    double t = quadrature::kDefaultAbsTol;
    if (tol) {
      t = *tol;
    } else if (const char* env = std::getenv("NONEUCLID_TOL"); env && *env) {
      char* end = nullptr;
      t = std::strtod(env, &end);
      if (end == env || *end != '\0') throw std::invalid_argument("NONEUCLID_TOL is not a number");
    }
    if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("tolerance must be positive");
    return t;
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add_timing(Record& r, const Settings& s, const Stopwatch& w) {
  if (!s.no_timing) r.push_back({"wall_time", w.seconds()});
}

lambert::Geometry parse_geometry(const std::string& g) {
  if (g == "spherical") return lambert::Geometry::kSpherical;
  if (g == "hyperbolic") return lambert::Geometry::kHyperbolic;
  throw std::invalid_argument("geometry must be spherical or hyperbolic");
}

lambert::CubeAngles cube_from(const std::string& a, const std::string& b, const std::string& g,
                              const std::string& geometry, const Settings& s) {
  const auto cube = lambert::classify(parse_angle(a, s.degrees), parse_angle(b, s.degrees),
                                      parse_angle(g, s.degrees));
  if (geometry != "auto" && cube.geometry != parse_geometry(geometry))
    throw DomainError(std::string("angles describe a ") + lambert::to_string(cube.geometry) +
                      " cube, not a " + geometry + " one");
  return cube;
}

void add_angles(Record& r, const Settings& s, double a, double b, double g) {
  r.push_back({"alpha", s.angle_out(a)});
  r.push_back({"beta", s.angle_out(b)});
  r.push_back({"gamma", s.angle_out(g)});
}

sweep::AxisRange parse_range(const std::string& text, bool degrees) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  for (;;) {
    const auto colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  if (parts.size() == 1) return {parse_angle(parts[0], degrees), parse_angle(parts[0], degrees), 1};
  if (parts.size() != 3) throw std::invalid_argument("range '" + text + "' is not start:stop:count");
  std::size_t used = 0;
  long long n = -1;
  try {
    n = std::stoll(parts[2], &used);
  } catch (const std::exception&) {
  }
  if (n < 1 || used != parts[2].size())
    throw std::invalid_argument("range '" + text + "' needs a positive integer count");
  return {parse_angle(parts[0], degrees), parse_angle(parts[1], degrees), static_cast<std::size_t>(n)};
}

// ---------------------------------------------------------------------------
// Subcommands

struct CubeArgs {
  std::string alpha, beta, gamma;
  std::string geometry = "auto";
};

void add_cube_options(CLI::App* cmd, CubeArgs& c) {
  cmd->add_option("--alpha", c.alpha, "dihedral angle alpha")->required();
  cmd->add_option("--beta", c.beta, "dihedral angle beta")->required();
  cmd->add_option("--gamma", c.gamma, "dihedral angle gamma")->required();
  cmd->add_option("--geometry", c.geometry, "spherical, hyperbolic or auto")
      ->check(CLI::IsMember({"auto", "spherical", "hyperbolic"}));
}

int cmd_volume(const CubeArgs& c, const std::string& route, const Settings& s, std::ostream& out) {
  const double tol = s.quad_tol();
  const Stopwatch w;
  const auto cube = cube_from(c.alpha, c.beta, c.gamma, c.geometry, s);
  const auto pd = lambert::principal(cube);
  Record r{{"geometry", std::string(lambert::to_string(cube.geometry))}};
  add_angles(r, s, cube.alpha, cube.beta, cube.gamma);
  r.push_back({"theta", s.angle_out(pd.theta)});
  r.push_back({"T", pd.T});
  if (cube.geometry == lambert::Geometry::kHyperbolic) {
    if (route != "delta") throw DomainError("--route applies to spherical cubes only");
    r.push_back({"volume", lambert::volume_hyperbolic(cube)});
    r.push_back({"err_estimate", std::monostate{}});
  } else {
    const auto v = route == "delta"
                       ? lambert::volume_spherical_detailed(cube, tol)
                       : lambert::volume_spherical_integral_detailed(
                             cube, tol,
                             route == "integral" ? lambert::IntegralPath::kSubstituted
                                                 : lambert::IntegralPath::kSemiInfinite);
    r.push_back({"volume", v.value});
    r.push_back({"err_estimate", v.err_estimate});
  }
  add_timing(r, s, w);
  write_record(out, r, s.resolve_format(Format::kPlain));
  return kOk;
}

int cmd_edges(const CubeArgs& c, const Settings& s, std::ostream& out) {
  const Stopwatch w;
  const auto cube = cube_from(c.alpha, c.beta, c.gamma, c.geometry, s);
  const auto pd = lambert::principal(cube);
  Record r{{"geometry", std::string(lambert::to_string(cube.geometry))}};
  add_angles(r, s, cube.alpha, cube.beta, cube.gamma);
  r.push_back({"theta", s.angle_out(pd.theta)});
  r.push_back({"T", pd.T});
  if (cube.geometry == lambert::Geometry::kSpherical) {
    const auto l = lambert::edge_lengths_spherical(pd);
    r.push_back({"l_alpha", s.angle_out(l.l_alpha)});
    r.push_back({"l_beta", s.angle_out(l.l_beta)});
    r.push_back({"l_gamma", s.angle_out(l.l_gamma)});
  } else {
    for (const char* k : {"l_alpha", "l_beta", "l_gamma"}) r.push_back({k, std::monostate{}});
  }
  add_timing(r, s, w);
  write_record(out, r, s.resolve_format(Format::kPlain));
  return kOk;
}

int cmd_principal(const CubeArgs& c, const Settings& s, std::ostream& out) {
  const Stopwatch w;
  const auto cube = cube_from(c.alpha, c.beta, c.gamma, c.geometry, s);
  const auto pd = lambert::principal(cube);
  Record r{{"geometry", std::string(lambert::to_string(cube.geometry))}};
  add_angles(r, s, cube.alpha, cube.beta, cube.gamma);
  r.push_back({"L", pd.L});
  r.push_back({"M", pd.M});
  r.push_back({"N", pd.N});
  r.push_back({"p", pd.p});
  r.push_back({"T", pd.T});
  r.push_back({"theta", s.angle_out(pd.theta)});
  r.push_back({"A", opt(pd.abc ? std::optional(pd.abc->A) : std::nullopt)});
  r.push_back({"B", opt(pd.abc ? std::optional(pd.abc->B) : std::nullopt)});
  r.push_back({"C", opt(pd.abc ? std::optional(pd.abc->C) : std::nullopt)});
  r.push_back({"quartic_residual", lambert::quartic_residual(pd)});
  add_timing(r, s, w);
  write_record(out, r, s.resolve_format(Format::kPlain));
  return kOk;
}

int cmd_orthoscheme(const CubeArgs& c, const Settings& s, std::ostream& out) {
  const double tol = s.quad_tol();
  const Stopwatch w;
  const orthoscheme::OrthoschemeAngles ang{parse_angle(c.alpha, s.degrees),
                                           parse_angle(c.beta, s.degrees),
                                           parse_angle(c.gamma, s.degrees)};
  const auto d = orthoscheme::classify_orthoscheme(ang);
  const bool spherical = d.curvature == orthoscheme::Curvature::kSpherical;
  const bool has_volume = d.curvature != orthoscheme::Curvature::kHyperbolic;
  Record r{{"curvature", std::string(orthoscheme::to_string(d.curvature))}};
  add_angles(r, s, ang.alpha, ang.beta, ang.gamma);
  r.push_back({"gap", d.gap});
  r.push_back({"D", opt(d.D)});
  r.push_back({"X", opt(d.X)});
  r.push_back({"T", opt(d.T)});
  r.push_back({"theta", d.theta ? Value(s.angle_out(*d.theta)) : Value()});
  if (spherical) {
    const auto e = orthoscheme::orthoscheme_edges(d, ang);
    r.push_back({"a", s.angle_out(e.a)});
    r.push_back({"b", s.angle_out(e.b)});
    r.push_back({"c", s.angle_out(e.c)});
    r.push_back({"cosine_rule_residual", orthoscheme::cosine_rule_residual(e, ang)});
  } else {
    for (const char* k : {"a", "b", "c", "cosine_rule_residual"}) r.push_back({k, std::monostate{}});
  }
  if (has_volume) {
    r.push_back({"volume", orthoscheme::volume_via_delta(ang, tol)});
    r.push_back({"volume_series", orthoscheme::volume_orthoscheme_schlaefli(ang, tol)});
    r.push_back({"volume_integral", orthoscheme::volume_orthoscheme_integral(ang, tol)});
  } else {
    for (const char* k : {"volume", "volume_series", "volume_integral"}) r.push_back({k, std::monostate{}});
  }
  add_timing(r, s, w);
  write_record(out, r, s.resolve_format(Format::kPlain));
  return kOk;
}

int cmd_delta(const std::string& alpha, const std::string& theta, const Settings& s, std::ostream& out) {
  const double tol = s.quad_tol();
  const Stopwatch w;
  const double a = parse_angle(alpha, s.degrees), t = parse_angle(theta, s.degrees);
  const auto q = specfun::delta_s_quad(a, t, tol);
  Record r{{"alpha", s.angle_out(a)},
           {"theta", s.angle_out(t)},
           {"delta", q.value},
           {"delta_reduced", specfun::delta_s_reduced(a, t, tol)},
           {"err_estimate", q.err_estimate}};
  add_timing(r, s, w);
  write_record(out, r, s.resolve_format(Format::kPlain));
  return kOk;
}

int cmd_lobachevsky(const std::string& x, const Settings& s, std::ostream& out) {
  const Stopwatch w;
  const double v = parse_angle(x, s.degrees);
  Record r{{"x", s.angle_out(v)}, {"lobachevsky", specfun::lobachevsky(v)}};
  add_timing(r, s, w);
  write_record(out, r, s.resolve_format(Format::kPlain));
  return kOk;
}

Record sweep_record(const sweep::VolumeRow& row, const Settings& s) {
  Record r;
  add_angles(r, s, row.alpha, row.beta, row.gamma);
  r.push_back({"theta", s.angle_out(row.theta)});
  r.push_back({"T", row.T});
  r.push_back({"volume", row.volume});
  r.push_back({"err_estimate", opt(row.err_estimate)});
  return r;
}

int cmd_sweep(const std::string& alpha, const std::string& beta, const std::string& gamma,
              const std::string& geometry, bool serial, const Settings& s, std::ostream& out) {
  const double tol = s.quad_tol();
  const sweep::SweepGrid grid{parse_range(alpha, s.degrees), parse_range(beta, s.degrees),
                              parse_range(gamma, s.degrees)};
  const auto geom = parse_geometry(geometry);
  sweep::validate_grid(grid, geom);

  const Format format = s.resolve_format(Format::kCsv);
  const Execution exec = serial ? Execution::kSerial : Execution::kParallel;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  bool first = true;
  for (std::size_t begin = 0; begin < grid.size(); begin += kSweepChunk) {
    for (const auto& row : sweep::evaluate_rows(grid, geom, tol, begin, begin + kSweepChunk, exec)) {
      const Record r = sweep_record(row, s);
      if (format == Format::kJson) {
        rows.push_back(to_json(r));
        continue;
      }
      if (format == Format::kCsv) {
        if (first) write_csv_header(out, r);
        write_csv_row(out, r);
      } else {
        if (first) write_plain_row(out, r, true);
        write_plain_row(out, r, false);
      }
      first = false;
    }
    out.flush();
  }
  if (format == Format::kJson) out << rows.dump(2) << '\n';
  return kOk;
}

Record report_record(const verify::CheckReport& rep) {
  return {{"name", rep.name},
          {"passed", rep.passed},
          {"max_residual", rep.max_residual},
          {"tolerance", rep.tolerance},
          {"sample_count", static_cast<long long>(rep.sample_count)},
          {"failure_count", static_cast<long long>(rep.failures.size())}};
}

int cmd_selfcheck(std::uint64_t seed, bool serial, const Settings& s, std::ostream& out) {
  verify::CheckOptions opts;
  opts.seed = seed;
  opts.quad_tol = s.quad_tol();
  opts.exec = serial ? Execution::kSerial : Execution::kParallel;
  const Stopwatch w;
  const auto reports = verify::run_all(opts);
  const double elapsed = w.seconds();
  bool all = true;
  for (const auto& rep : reports) all = all && rep.passed;

  switch (s.resolve_format(Format::kPlain)) {
    case Format::kJson: {
      nlohmann::ordered_json j;
      j["passed"] = all;
      j["seed"] = seed;
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& rep : reports) {
        auto item = to_json(report_record(rep));
        item["failures"] = nlohmann::ordered_json::array();
        for (const auto& f : rep.failures)
          item["failures"].push_back({{"input", f.input}, {"residual", to_json(Value(f.residual))}});
        j["checks"].push_back(item);
      }
      if (!s.no_timing) j["wall_time"] = elapsed;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const Record r = report_record(reports[i]);
        if (i == 0) write_csv_header(out, r);
        write_csv_row(out, r);
      }
      break;
    case Format::kPlain:
      for (const auto& rep : reports) {
        out << (rep.passed ? "PASS " : "FAIL ") << rep.name << "  max_residual=" << number(rep.max_residual, 3)
            << "  tolerance=" << number(rep.tolerance, 3) << "  samples=" << rep.sample_count << '\n';
        for (const auto& f : rep.failures) out << "    " << f.input << "  residual=" << number(f.residual, 3) << '\n';
      }
      out << (all ? "all checks passed" : "some checks FAILED") << '\n';
      if (!s.no_timing) out << "wall_time  " << number(elapsed, 3) << " s\n";
      break;
  }
  return all ? kOk : kCheckFailed;
}

}  // namespace

double parse_angle(const std::string& text, bool degrees) {
  static const std::regex pi_form(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*)\s*)?$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    double v = kPi;
    if (m[2].matched) v *= std::stod(m[2].str());
    if (m[3].matched) {
      const double den = std::stod(m[3].str());
      if (den == 0.0) throw std::invalid_argument("angle '" + text + "' divides by zero");
      v /= den;
    }
    return m[1].str() == "-" ? -v : v;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used == 0 || used != text.size() || !std::isfinite(v))
    throw std::invalid_argument("cannot parse angle '" + text + "'");
  return degrees ? v / kToDegrees : v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volumes of spherical and hyperbolic Lambert cubes and orthoschemes"};
  app.name(args.empty() ? "noneuclid" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  double tol_value = 0.0;
  app.add_option("--format", s.format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_flag("--degrees", s.degrees, "read plain-number angles as degrees");
  app.add_flag("--degrees-out", s.degrees_out, "print angles and edge lengths in degrees");
  app.add_flag("--no-timing", s.no_timing, "omit the wall_time field");
  auto* tol_opt = app.add_option("--tol", tol_value, "quadrature tolerance (default 1e-10, env NONEUCLID_TOL)");

  CubeArgs cube;
  std::string route = "delta";
  auto* volume = app.add_subcommand("volume", "volume of a Lambert cube");
  add_cube_options(volume, cube);
  volume->add_option("--route", route, "spherical route: delta, integral or semi-infinite")
      ->check(CLI::IsMember({"delta", "integral", "semi-infinite"}));

  auto* edges = app.add_subcommand("edges", "edge lengths of a spherical Lambert cube");
  add_cube_options(edges, cube);
  auto* principal = app.add_subcommand("principal", "principal parameter and the numbers L, M, N, A, B, C");
  add_cube_options(principal, cube);

  CubeArgs ortho;
  auto* orthocmd = app.add_subcommand("orthoscheme", "double-rectangular tetrahedron T(alpha, beta, gamma)");
  orthocmd->add_option("--alpha", ortho.alpha)->required();
  orthocmd->add_option("--beta", ortho.beta)->required();
  orthocmd->add_option("--gamma", ortho.gamma)->required();

  std::string d_alpha, d_theta;
  auto* delta = app.add_subcommand("delta", "the function delta(alpha, theta)");
  delta->add_option("--alpha", d_alpha)->required();
  delta->add_option("--theta", d_theta)->required();

  std::string lob_x;
  auto* lob = app.add_subcommand("lobachevsky", "the Lobachevsky function");
  lob->add_option("--x", lob_x)->required();

  std::string sw_alpha, sw_beta, sw_gamma, sw_geometry = "spherical";
  bool serial = false;
  auto* sweepcmd = app.add_subcommand("sweep", "cube volumes over an angle grid (start:stop:count per axis)");
  sweepcmd->add_option("--alpha", sw_alpha)->required();
  sweepcmd->add_option("--beta", sw_beta)->required();
  sweepcmd->add_option("--gamma", sw_gamma)->required();
  sweepcmd->add_option("--geometry", sw_geometry)->check(CLI::IsMember({"spherical", "hyperbolic"}));
  sweepcmd->add_flag("--serial", serial, "evaluate grid points on one thread");

  std::uint64_t seed = 42;
  auto* selfcheck = app.add_subcommand("selfcheck", "run every identity check");
  selfcheck->add_option("--seed", seed);
  selfcheck->add_flag("--serial", serial, "evaluate samples on one thread");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("noneuclid");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (*tol_opt) s.tol = tol_value;

  try {
    if (*volume) return cmd_volume(cube, route, s, out);
    if (*edges) return cmd_edges(cube, s, out);
    if (*principal) return cmd_principal(cube, s, out);
    if (*orthocmd) return cmd_orthoscheme(ortho, s, out);
    if (*delta) return cmd_delta(d_alpha, d_theta, s, out);
    if (*lob) return cmd_lobachevsky(lob_x, s, out);
    if (*sweepcmd) return cmd_sweep(sw_alpha, sw_beta, sw_gamma, sw_geometry, serial, s, out);
    if (*selfcheck) return cmd_selfcheck(seed, serial, s, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace noneuclid::cli
