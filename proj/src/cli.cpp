#include "csl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "csl/coincidence.hpp"
#include "csl/errors.hpp"
#include "csl/verify.hpp"

namespace csl::cli {
namespace {

using Json = nlohmann::ordered_json;

// One CSV row or JSON object: exact values are strings, angles are doubles.
struct Cell {
  std::string text;
  std::optional<double> number;
};
using Row = std::vector<std::pair<std::string, Cell>>;

Cell exact(const std::string& s) { return {s, std::nullopt}; }
Cell exact(const Rational& r) { return {r.to_string(), std::nullopt}; }
Cell exact(const Integer& z) { return {z.get_str(), std::nullopt}; }
Cell angle(double degrees) {
  const std::string text = format_degrees(degrees);
  return {text, std::stod(text)};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream is(text);
  while (std::getline(is, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

template <class T>
std::string join(const Mat2<T>& m) {
  std::ostringstream os;
  os << m.m11 << "," << m.m12 << "," << m.m21 << "," << m.m22;
  return os.str();
}

std::string join(const Vec2Z& v) { return v.x.get_str() + "," + v.y.get_str(); }

void append_matrix(Row& row, const std::string& prefix, const Mat2Q& m) {
  row.emplace_back(prefix + "11", exact(m.m11));
  row.emplace_back(prefix + "12", exact(m.m12));
  row.emplace_back(prefix + "21", exact(m.m21));
  row.emplace_back(prefix + "22", exact(m.m22));
}

void append_vector(Row& row, const std::string& prefix, const Vec2Z& v) {
  row.emplace_back(prefix + "1", exact(v.x));
  row.emplace_back(prefix + "2", exact(v.y));
}

void append_matrix(Row& row, const std::string& prefix, const Mat2Z& m) {
  append_matrix(row, prefix, to_rational(m));
}

Json to_json(const Cell& c) { return c.number ? Json(*c.number) : Json(c.text); }

void write_csv(std::ostream& out, const std::vector<Row>& rows, const std::vector<std::string>& header) {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const Row& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].second.text;
    out << "\n";
  }
}

std::vector<std::string> header_of(const Row& row) {
  std::vector<std::string> h;
  for (const auto& [key, _] : row) h.push_back(key);
  return h;
}

Integer parse_positive(const std::string& text, const char* flag) {
  const Integer value = parse_integer(text);
  if (value <= 0) throw UsageError(std::string(flag) + " must be a positive integer");
  return value;
}

LatticeVector parse_vector(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("vector must be two comma-separated integers, got '" + text + "'");
  return {parse_integer(parts[0]), parse_integer(parts[1])};
}

// Four fraction tokens "a/b,c/d,e/f,g/h", or eight integer tokens read as
// numerator,denominator pairs; both row-major.
Mat2Q parse_matrix(const std::string& text) {
  const auto parts = split(text, ',');
  std::vector<Rational> entries;
  if (parts.size() == 4) {
    for (const auto& p : parts) entries.push_back(Rational::parse(p));
  } else if (parts.size() == 8) {
    for (std::size_t i = 0; i < 8; i += 2) {
      entries.push_back(Rational::parse(parts[i] + "/" + parts[i + 1]));
    }
  } else {
    throw UsageError("matrix must have 4 fraction tokens or 8 integer tokens, got " + std::to_string(parts.size()));
  }
  return {entries[0], entries[1], entries[2], entries[3]};
}

struct Request {
  std::string subcommand;
  std::string sigma2;
  std::string sigma_cos;
  std::string format = "json";
  std::string p, q;
  std::string c;
  std::string matrix;
  std::string max_sigma;
  std::string coord_bound;
  std::string kind = "rotations";
};

Json inputs_json(const Request& r) {
  Json in;
  in["subcommand"] = r.subcommand;
  if (!r.sigma2.empty()) in["sigma2"] = r.sigma2;
  if (!r.sigma_cos.empty()) in["sigma_cos"] = r.sigma_cos;
  if (!r.p.empty()) in["p"] = r.p;
  if (!r.q.empty()) in["q"] = r.q;
  if (!r.c.empty()) in["c"] = r.c;
  if (!r.matrix.empty()) in["matrix"] = r.matrix;
  if (r.subcommand == "enumerate") in["kind"] = r.kind;
  if (!r.max_sigma.empty()) in["max_sigma"] = r.max_sigma;
  if (!r.coord_bound.empty()) in["coord_bound"] = r.coord_bound;
  in["format"] = r.format;
  return in;
}

LatticeParams parse_lattice(const Request& r) {
  return make_lattice(Rational::parse(r.sigma2), Rational::parse(r.sigma_cos));
}

void emit_single(std::ostream& out, const Request& req, const LatticeParams& lattice, const Row& row,
                 Json result) {
  if (req.format == "csv") {
    write_csv(out, {row}, header_of(row));
    return;
  }
  Json doc;
  doc["inputs"] = inputs_json(req);
  doc["lattice_class"] = std::string(to_string(classify(lattice)));
  doc["result"] = std::move(result);
  doc["status"] = "ok";
  out << doc.dump(2) << "\n";
}

void append_report(Row& row, Json& j, const CoincidenceReport& report) {
  row.emplace_back("denominator", exact(report.denominator));
  row.emplace_back("sigma", exact(report.sigma));
  append_matrix(row, "h", report.csl_basis);
  j["denominator"] = report.denominator.get_str();
  j["sigma"] = report.sigma.get_str();
  j["csl_basis"] = join(report.csl_basis);
}

int do_classify(const Request& req, std::ostream& out) {
  const LatticeParams lattice = parse_lattice(req);
  const Mat2Q g = gram(lattice);
  const DiagonalSublattice diag = diagonal_sublattice(lattice);
  const LatticeParams dual = dual_shape(lattice);
  Row row{{"sigma2", exact(lattice.sigma2())},
          {"sigma_cos", exact(lattice.sigma_cos())},
          {"class", exact(std::string(to_string(classify(lattice))))}};
  append_matrix(row, "g", g);
  row.emplace_back("sigma2_sin2", exact(lattice.sigma2_sin2()));
  append_vector(row, "axis_e2_", axis_e2_vector(lattice));
  row.emplace_back("diagonal_index", exact(diag.index));
  row.emplace_back("dual_sigma2", exact(dual.sigma2()));
  row.emplace_back("dual_sigma_cos", exact(dual.sigma_cos()));
  row.emplace_back("dual_class", exact(std::string(to_string(classify(dual)))));

  Json j;
  j["sigma2"] = lattice.sigma2().to_string();
  j["sigma_cos"] = lattice.sigma_cos().to_string();
  j["gram"] = Json::array({Json::array({g.m11.to_string(), g.m12.to_string()}),
                           Json::array({g.m21.to_string(), g.m22.to_string()})});
  j["sigma2_sin2"] = lattice.sigma2_sin2().to_string();
  j["axis_e2"] = join(axis_e2_vector(lattice));
  j["diagonal"] = {{"d1", join(diag.d1)}, {"d2", join(diag.d2)}, {"index", diag.index.get_str()}};
  j["dual_shape"] = {{"sigma2", dual.sigma2().to_string()},
                     {"sigma_cos", dual.sigma_cos().to_string()},
                     {"class", std::string(to_string(classify(dual)))}};
  emit_single(out, req, lattice, row, std::move(j));
  return ok;
}

void describe_rotation(const LatticeParams& lattice, const Mat2Q& m, const CartanPair& pair, Row& row, Json& j) {
  const double degrees = rotation_degrees(lattice, m);
  append_vector(row, "c", pair.c);
  append_vector(row, "b", pair.b);
  row.emplace_back("theta_degrees", angle(degrees));
  row.emplace_back("cos_theta", exact(rotation_cos(m)));
  append_matrix(row, "m", m);
  j["c"] = join(pair.c);
  j["b"] = join(pair.b);
  j["theta_degrees"] = to_json(angle(degrees));
  j["cos_theta"] = rotation_cos(m).to_string();
  j["matrix"] = join(m);
}

int do_rotation(const Request& req, std::ostream& out) {
  const LatticeParams lattice = parse_lattice(req);
  if (req.p.empty() || req.q.empty()) throw UsageError("rotation needs --p and --q");
  const LatticeVector c{parse_integer(req.p), parse_integer(req.q)};
  if (c.x == 0 && c.y == 0) throw DomainError("rotation: zero vector");
  if (!is_primitive(c)) throw UsageError("rotation: p and q must be coprime");
  const Mat2Q m = rotation_general(lattice, c).m;
  const CoincidenceReport report = csl_basis(lattice, m);

  Row row{{"p", exact(c.x)}, {"q", exact(c.y)}};
  Json j;
  j["p"] = c.x.get_str();
  j["q"] = c.y.get_str();
  describe_rotation(lattice, m, {c, axis_e2_vector(lattice)}, row, j);
  append_report(row, j, report);
  if (c.y != 0) {
    const Rational t2 = half_angle_tan2(lattice, c);
    row.emplace_back("half_angle_tan2", exact(t2));
    j["half_angle_tan2"] = t2.to_string();
  } else {
    row.emplace_back("half_angle_tan2", exact(std::string()));
    j["half_angle_tan2"] = nullptr;
  }
  emit_single(out, req, lattice, row, std::move(j));
  return ok;
}

int do_reflection(const Request& req, std::ostream& out) {
  const LatticeParams lattice = parse_lattice(req);
  if (req.c.empty()) throw UsageError("reflection needs --c a1,a2");
  const LatticeVector c = parse_vector(req.c);
  const Mat2Q m = reflection_matrix(lattice, c).m;
  const CoincidenceReport report = csl_basis(lattice, m);
  const bool condition = is_coincidence_reflection_condition(lattice, c);

  Row row;
  append_vector(row, "c", c);
  append_vector(row, "c_primitive_", primitive(c));
  append_matrix(row, "m", m);
  Json j;
  j["c"] = join(c);
  j["c_primitive"] = join(primitive(c));
  j["matrix"] = join(m);
  append_report(row, j, report);
  row.emplace_back("coincidence_condition", exact(std::string(condition ? "true" : "false")));
  j["coincidence_condition"] = condition;
  emit_single(out, req, lattice, row, std::move(j));
  return ok;
}

int do_decompose(const Request& req, std::ostream& out) {
  const LatticeParams lattice = parse_lattice(req);
  if (req.matrix.empty()) throw UsageError("decompose needs --matrix");
  const Mat2Q m = parse_matrix(req.matrix);
  const CartanPair pair = cartan_decompose(lattice, m);
  const CoincidenceReport report = csl_basis(lattice, m);
  Row row;
  Json j;
  describe_rotation(lattice, m, pair, row, j);
  append_report(row, j, report);
  emit_single(out, req, lattice, row, std::move(j));
  return ok;
}

int do_enumerate(const Request& req, std::ostream& out) {
  const LatticeParams lattice = parse_lattice(req);
  std::vector<Row> rows;
  std::vector<std::string> header;
  Json j;
  if (req.kind == "rotations") {
    if (req.max_sigma.empty()) throw UsageError("enumerate needs --max-sigma");
    const Integer max_sigma = parse_positive(req.max_sigma, "--max-sigma");
    header = {"p", "q", "theta_degrees", "sigma", "m11", "m12", "m21", "m22"};
    for (const auto& e : enumerate_rotations(lattice, max_sigma)) {
      Row row{{"p", exact(e.p)}, {"q", exact(e.q)}, {"theta_degrees", angle(e.theta_degrees)},
              {"sigma", exact(e.sigma)}};
      append_matrix(row, "m", e.matrix);
      rows.push_back(std::move(row));
    }
    j["max_sigma"] = max_sigma.get_str();
  } else if (req.kind == "reflections") {
    if (req.coord_bound.empty()) throw UsageError("enumerate --kind reflections needs --coord-bound");
    const Integer bound = parse_positive(req.coord_bound, "--coord-bound");
    header = {"c1", "c2", "sigma", "m11", "m12", "m21", "m22"};
    for (const auto& e : enumerate_reflections(lattice, bound)) {
      Row row{{"c1", exact(e.c.x)}, {"c2", exact(e.c.y)}, {"sigma", exact(e.sigma)}};
      append_matrix(row, "m", e.matrix);
      rows.push_back(std::move(row));
    }
    j["coord_bound"] = bound.get_str();
  } else {
    throw UsageError("--kind must be 'rotations' or 'reflections'");
  }

  if (req.format == "csv") {
    write_csv(out, rows, header);
    return ok;
  }
  j["count"] = rows.size();
  Json entries = Json::array();
  for (const Row& row : rows) {
    Json e;
    for (const auto& [key, cell] : row) {
      if (key.size() == 3 && key[0] == 'm') continue;
      e[key] = to_json(cell);
    }
    const auto entry = [&](const char* key) {
      return std::find_if(row.begin(), row.end(), [&](const auto& kv) { return kv.first == key; })->second.text;
    };
    e["matrix"] = entry("m11") + "," + entry("m12") + "," + entry("m21") + "," + entry("m22");
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  emit_single(out, req, lattice, {}, std::move(j));
  return ok;
}

std::string sigma_list(const std::set<Integer>& values, const char* sep) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += sep;
    s += v.get_str();
  }
  return s;
}

int do_verify(const Request& req, std::ostream& out, std::ostream& err) {
  const Integer max_sigma = parse_positive(req.max_sigma.empty() ? "50" : req.max_sigma, "--max-sigma");
  const Integer bound = parse_positive(req.coord_bound.empty() ? "6" : req.coord_bound, "--coord-bound");
  if (req.sigma2.empty() != req.sigma_cos.empty()) {
    throw UsageError("verify takes both --sigma2 and --sigma-cos, or neither");
  }
  const std::vector<LatticeParams> grid =
      req.sigma2.empty() ? default_lattice_grid() : std::vector<LatticeParams>{parse_lattice(req)};

  bool all_pass = true;
  std::vector<Row> rows;
  Json lattices = Json::array();
  for (const LatticeParams& lattice : grid) {
    const VerifyReport report = verify_lattice(lattice, max_sigma, bound);
    all_pass = all_pass && report.passed();
    const std::string status = report.passed() ? "PASS" : "FAIL";
    const std::string cls(to_string(classify(lattice)));
    err << status << " sigma2=" << lattice.sigma2() << " sigma_cos=" << lattice.sigma_cos() << " (" << cls
        << "): " << report.rotations << " rotations, " << report.reflections << " reflections, sigma in {"
        << sigma_list(report.sigma_values, ",") << "}\n";
    for (const auto& f : report.failures) err << "  " << f << "\n";

    rows.push_back(Row{{"sigma2", exact(lattice.sigma2())},
                       {"sigma_cos", exact(lattice.sigma_cos())},
                       {"class", exact(cls)},
                       {"rotations", exact(std::to_string(report.rotations))},
                       {"reflections", exact(std::to_string(report.reflections))},
                       {"sigma_values", exact(sigma_list(report.sigma_values, ";"))},
                       {"status", exact(status)}});
    Json l;
    l["sigma2"] = lattice.sigma2().to_string();
    l["sigma_cos"] = lattice.sigma_cos().to_string();
    l["class"] = cls;
    l["rotations"] = report.rotations;
    l["reflections"] = report.reflections;
    Json values = Json::array();
    for (const auto& v : report.sigma_values) values.push_back(v.get_str());
    l["sigma_values"] = std::move(values);
    l["failures"] = report.failures;
    l["status"] = status;
    lattices.push_back(std::move(l));
  }

  if (req.format == "csv") {
    write_csv(out, rows, header_of(rows.front()));
  } else {
    Json doc;
    doc["inputs"] = inputs_json(req);
    doc["lattice_class"] = grid.size() == 1 ? Json(std::string(to_string(classify(grid.front())))) : Json("grid");
    doc["result"] = {{"max_sigma", max_sigma.get_str()}, {"coord_bound", bound.get_str()}, {"lattices", lattices}};
    doc["status"] = all_pass ? "pass" : "fail";
    out << doc.dump(2) << "\n";
  }
  return all_pass ? ok : mismatch;
}

}  // namespace

std::string format_degrees(double degrees) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", degrees);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  if (s == "-180.000000") s = "180.000000";
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Coincidence site lattices of planar lattices, in exact arithmetic", "csl2d"};
  app.require_subcommand(1);

  const auto add_lattice = [&](CLI::App* sub, bool required) {
    auto* s2 = sub->add_option("--sigma2", req.sigma2, "squared length ratio |a2|^2/|a1|^2, as a/b");
    auto* sc = sub->add_option("--sigma-cos", req.sigma_cos, "mixed Gram entry a1.a2/|a1|^2, as a/b");
    if (required) {
      s2->required();
      sc->required();
    }
    sub->add_option("--format", req.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* classify_cmd = app.add_subcommand("classify", "lattice class, Gram matrix and diagonal sublattice");
  add_lattice(classify_cmd, true);

  auto* rotation_cmd = app.add_subcommand("rotation", "coincidence rotation for mirror vector (p, q)");
  add_lattice(rotation_cmd, true);
  rotation_cmd->add_option("--p", req.p, "first coordinate of the mirror vector")->required();
  rotation_cmd->add_option("--q", req.q, "second coordinate of the mirror vector")->required();

  auto* reflection_cmd = app.add_subcommand("reflection", "reflection in the line orthogonal to c");
  add_lattice(reflection_cmd, true);
  reflection_cmd->add_option("--c", req.c, "lattice vector a1,a2")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "split a rotation into two lattice reflections");
  add_lattice(decompose_cmd, true);
  decompose_cmd->add_option("--matrix", req.matrix, "row-major m11,m12,m21,m22 as fractions")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "all coincidence rotations or reflections up to a bound");
  add_lattice(enumerate_cmd, true);
  enumerate_cmd->add_option("--kind", req.kind, "rotations or reflections");
  enumerate_cmd->add_option("--max-sigma", req.max_sigma, "largest coincidence index (rotations)");
  enumerate_cmd->add_option("--coord-bound", req.coord_bound, "largest |coordinate| of c (reflections)");

  auto* verify_cmd = app.add_subcommand("verify", "cross-check structural and brute-force results");
  add_lattice(verify_cmd, false);
  verify_cmd->add_option("--max-sigma", req.max_sigma, "largest coincidence index (default 50)");
  verify_cmd->add_option("--coord-bound", req.coord_bound, "reflection search box (default 6)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  for (auto* sub : app.get_subcommands()) req.subcommand = sub->get_name();
  try {
    if (req.subcommand == "classify") return do_classify(req, out);
    if (req.subcommand == "rotation") return do_rotation(req, out);
    if (req.subcommand == "reflection") return do_reflection(req, out);
    if (req.subcommand == "decompose") return do_decompose(req, out);
    if (req.subcommand == "enumerate") return do_enumerate(req, out);
    if (req.subcommand == "verify") return do_verify(req, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return domain;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return mismatch;
  }
  err << "unknown subcommand\n";
  return usage;
}

}  // namespace csl::cli
