#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "polynorm/abs_sums.hpp"
#include "polynorm/corpus.hpp"
#include "polynorm/gl.hpp"
#include "polynorm/io.hpp"
#include "polynorm/planar.hpp"

using json = nlohmann::json;
using namespace polynorm;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

struct Report {
  bool json_mode = false;
  json j;
  std::vector<std::string> lines;

  void line(const std::string& s) { lines.push_back(s); }
  void print() const {
    if (json_mode) {
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& s : lines) std::cout << s << "\n";
    }
  }
};

SymmetricPolytope load_checked(const std::string& path, int max_dim, Report& report) {
  std::string text = read_file(path);
  auto poly = parse_polytope_string(text);
  if (poly.dim() > max_dim)
    throw InputError(path + ": dimension " + std::to_string(poly.dim()) +
                     " exceeds --max-dim " + std::to_string(max_dim));
  std::string digest = fnv1a_digest(text);
  report.j["inputs"].push_back({{"file", path}, {"digest", digest}});
  report.line("input " + path + " digest " + digest);
  return poly;
}

int run_check_gl(const std::string& file, int max_dim, bool parallel, Report& report) {
  report.j["command"] = "check-gl";
  PolyhedralSpace space(load_checked(file, max_dim, report));
  auto v = is_gl(space, parallel);
  size_t total = v.plump_facets.size() + v.non_plump_facets.size();
  report.j["gl"] = v.is_gl;
  report.j["facets_total"] = total;
  report.j["facets_plump"] = v.plump_facets.size();
  report.line(std::string("GL: ") + (v.is_gl ? "yes" : "no") + "; " +
              std::to_string(v.plump_facets.size()) + "/" + std::to_string(total) +
              " facets plump");
  report.j["witnesses"] = json::array();
  for (const auto& r : v.non_plump_facets) {
    const auto& w = *r.witness;
    report.j["witnesses"].push_back({{"facet", r.facet.functional.str()},
                                     {"vertex", w.vertex.str()},
                                     {"dist", to_string(w.dist)},
                                     {"bound", to_string(w.bound)}});
    report.line("facet " + r.facet.functional.str() + ", vertex " + w.vertex.str() + ": dist " +
                to_string(w.dist) + " != " + to_string(w.bound));
  }
  return v.is_gl ? 0 : 1;
}

int run_classify_2d(const std::string& file, int max_dim, Report& report) {
  report.j["command"] = "classify-2d";
  PolyhedralSpace space(load_checked(file, max_dim, report));
  auto c = classify_2d(space);
  switch (c.tag) {
    case PlanarTag::Parallelogram:
      report.j["class"] = "parallelogram";
      break;
    case PlanarTag::AffineRegularHexagon:
      report.j["class"] = "affine-regular hexagon";
      break;
    case PlanarTag::NotGL:
      report.j["class"] = "not GL";
      break;
  }
  std::string msg = "class: " + report.j["class"].get<std::string>();
  if (c.basis) {
    report.j["basis"] = {c.basis->first.str(), c.basis->second.str()};
    msg += " with basis v1=" + c.basis->first.str() + " v2=" + c.basis->second.str();
  }
  report.line(msg);
  return c.tag == PlanarTag::NotGL ? 1 : 0;
}

void describe_glm(const GlmVerdict& v, Report& report) {
  report.j["results"] = json::array();
  for (const auto& r : v.results) {
    json entry = {{"dual", r.dual.str()},
                  {"prefilter_pass", r.prefilter_pass},
                  {"monotone_plump", r.monotone_plump}};
    if (r.monotone_plump) {
      report.line("dual " + r.dual.str() + ": monotone plump");
    } else if (!r.prefilter_pass) {
      report.line("extreme dual point " + r.dual.str() +
                  " has coordinate outside {0,1} after sign reduction");
    }
    if (r.counterexample) {
      entry["counterexample"] = {{"a", r.counterexample->first.str()},
                                 {"z", r.counterexample->second.str()}};
      report.line("dual " + r.dual.str() + ": no valid b for a=" + r.counterexample->first.str() +
                  " z=" + r.counterexample->second.str());
    }
    report.j["results"].push_back(std::move(entry));
  }
}

int run_check_glm(const std::string& file, int max_dim, bool glr, Report& report) {
  report.j["command"] = glr ? "check-glr" : "check-glm";
  auto e = validate_absolute(load_checked(file, max_dim, report));
  auto v = is_glm(e);
  describe_glm(v, report);
  report.j["glm"] = v.is_glm;
  if (glr) {
    report.j["glr"] = v.is_glm;
    report.line(std::string("GLR: ") + (v.is_glm ? "yes" : "no"));
  } else {
    report.line(std::string("GLM: ") + (v.is_glm ? "yes" : "no"));
  }
  return v.is_glm ? 0 : 1;
}

int run_build_sum(const std::string& outer, const std::vector<std::string>& inner,
                  const std::string& out, Report& report) {
  report.j["command"] = "build-sum";
  auto e = validate_absolute(load_checked(outer, 3, report));
  std::vector<PolyhedralSpace> components;
  for (const auto& path : inner) components.emplace_back(load_checked(path, 2, report));
  auto sum = build_e_sum(e, components);
  report.j["dim"] = sum.space.dim();
  report.j["vertices"] = sum.space.ball().vertices().size();
  report.j["facets"] = sum.space.ball().functionals().size();
  report.line("sum dim " + std::to_string(sum.space.dim()) + ": " +
              std::to_string(sum.space.ball().vertices().size()) + " vertices, " +
              std::to_string(sum.space.ball().functionals().size()) + " facets");
  if (!out.empty()) {
    save_polytope_file(sum.space.ball(), out);
    report.j["out"] = out;
    report.line("wrote " + out);
  } else {
    report.line(emit_polytope(sum.space.ball()));
  }
  return 0;
}

int run_audit(const std::string& file, int max_dim, Report& report) {
  report.j["command"] = "audit";
  auto poly = load_checked(file, max_dim, report);
  PolyhedralSpace space(poly);
  bool ok = true;
  int plump = 0, lower_bound_ok = 0, records = 0, diff_ok = 0;
  for (const auto& facet : space.ball().facets()) {
    auto r = is_plump_facet(space, facet);
    for (const auto& rec : r.records) {
      ++records;
      if (rec.dist >= rec.bound) ++lower_bound_ok;
    }
    if (r.plump) {
      ++plump;
      if (difference_body_check(space, facet))
        ++diff_ok;
      else
        ok = false;
    }
  }
  ok = ok && lower_bound_ok == records;
  report.j["lower_bound"] = {{"checked", records}, {"passed", lower_bound_ok}};
  report.j["difference_body"] = {{"plump_facets", plump}, {"passed", diff_ok}};
  report.line("lower bound: " + std::to_string(lower_bound_ok) + "/" + std::to_string(records));
  report.line("difference body: " + std::to_string(diff_ok) + "/" + std::to_string(plump) +
              " plump facets");
  if (poly.dim() <= 3) {
    auto rs = rogers_shephard_audit(poly.as_general());
    ok = ok && rs.ok;
    report.j["rogers_shephard"] = {
        {"lhs", to_string(rs.lhs)}, {"rhs", to_string(rs.rhs)}, {"ok", rs.ok}};
    report.line("difference-body volume " + to_string(rs.lhs) + " <= " + to_string(rs.rhs) + ": " +
                (rs.ok ? "ok" : "VIOLATED"));
  }
  report.j["ok"] = ok;
  report.line(std::string("audit: ") + (ok ? "pass" : "fail"));
  return ok ? 0 : 1;
}

int run_gen(const std::string& name, const std::string& out, std::uint64_t seed, int pairs,
            long denominator, Report& report) {
  report.j["command"] = "gen";
  SymmetricPolytope poly = [&] {
    if (name == "polygon") return random_symmetric_polygon({seed, pairs, denominator});
    if (name == "poly3") return random_symmetric_polytope_3d({seed, pairs, denominator});
    return fixture(name);
  }();
  std::string text = emit_polytope(poly);
  report.j["dim"] = poly.dim();
  report.j["vertices"] = poly.vertices().size();
  report.j["digest"] = fnv1a_digest(text);
  if (!out.empty()) {
    std::ofstream o(out, std::ios::binary);
    if (!o) throw InputError("cannot write " + out);
    o << text;
    report.j["out"] = out;
    report.line("wrote " + out + " digest " + fnv1a_digest(text));
  } else {
    report.line(text);
  }
  return 0;
}

int run_distance(const std::string& file, int max_dim, const std::string& point_text,
                 int facet_index, Report& report) {
  report.j["command"] = "distance";
  PolyhedralSpace space(load_checked(file, max_dim, report));
  Vec y(space.dim());
  {
    std::string cleaned = point_text;
    for (char& c : cleaned)
      if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::string tok;
    int k = 0;
    while (in >> tok) {
      if (k >= space.dim()) throw InputError("point has too many coordinates");
      y[k++] = parse_rational(tok);
    }
    if (k != space.dim()) throw InputError("point has too few coordinates");
  }
  auto facets = space.ball().facets();
  if (facet_index < 0 || facet_index >= static_cast<int>(facets.size()))
    throw InputError("facet index out of range (0.." + std::to_string(facets.size() - 1) + ")");
  const auto& facet = facets[static_cast<size_t>(facet_index)];
  auto face = GeneralPolytope::from_points(space.dim(), facet.vertices);
  auto [dist, minimizer] = dist_point_to_polytope(space, y, face);
  Rational bound = 1 - dot(facet.functional, y);
  report.j["facet"] = facet.functional.str();
  report.j["dist"] = to_string(dist);
  report.j["bound"] = to_string(bound);
  report.j["identity_holds"] = (dist == bound);
  report.line("facet " + facet.functional.str());
  report.line("dist " + to_string(dist) + ", bound " + to_string(bound) +
              (dist == bound ? " (identity holds)" : " (identity fails)"));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polyhedral-norm analysis"};
  app.require_subcommand(1);

  std::string format = "text";
  bool parallel = false;
  std::uint64_t seed = 0;
  int max_dim = 4;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--parallel", parallel, "Run facet checks in parallel");
  app.add_option("--seed", seed, "Seed for random generation");
  app.add_option("--max-dim", max_dim, "Reject inputs above this dimension");

  std::string file, out, point;
  std::vector<std::string> inner;
  int pairs = 3, facet_index = 0;
  long denominator = 16;

  auto* check_gl = app.add_subcommand("check-gl", "Decide the GL property");
  check_gl->add_option("file", file)->required();
  auto* classify = app.add_subcommand("classify-2d", "Classify a planar unit ball");
  classify->add_option("file", file)->required();
  auto* check_glm = app.add_subcommand("check-glm", "Decide GL-monotonicity of an absolute norm");
  check_glm->add_option("file", file)->required();
  auto* check_glr = app.add_subcommand("check-glr", "Decide the GL-respecting property");
  check_glr->add_option("file", file)->required();
  auto* build_sum = app.add_subcommand("build-sum", "Build the E-sum of component spaces");
  build_sum->add_option("outer", file)->required();
  build_sum->add_option("inner", inner)->required()->expected(-1);
  build_sum->add_option("--out", out, "Output file (stdout when omitted)");
  auto* audit = app.add_subcommand("audit", "Run the lemma audits on a unit ball");
  audit->add_option("file", file)->required();
  auto* gen = app.add_subcommand("gen", "Emit a fixture or seeded random polytope");
  gen->add_option("name", file, "Fixture name, 'polygon' or 'poly3'")->required();
  gen->add_option("--out", out, "Output file (stdout when omitted)");
  gen->add_option("--pairs", pairs, "Antipodal vertex pairs for random shapes");
  gen->add_option("--denominator", denominator, "Denominator bound for random shapes");
  auto* distance = app.add_subcommand("distance", "Distance from a point to a facet");
  distance->add_option("file", file)->required();
  distance->add_option("--point", point, "Comma-separated rational coordinates")->required();
  distance->add_option("--facet", facet_index, "Facet index in canonical order")->required();

  CLI11_PARSE(app, argc, argv);

  Report report;
  report.json_mode = (format == "json");
  try {
    int code = 2;
    if (check_gl->parsed()) code = run_check_gl(file, max_dim, parallel, report);
    if (classify->parsed()) code = run_classify_2d(file, max_dim, report);
    if (check_glm->parsed()) code = run_check_glm(file, max_dim, false, report);
    if (check_glr->parsed()) code = run_check_glm(file, max_dim, true, report);
    if (build_sum->parsed()) code = run_build_sum(file, inner, out, report);
    if (audit->parsed()) code = run_audit(file, max_dim, report);
    if (gen->parsed()) code = run_gen(file, out, seed, pairs, denominator, report);
    if (distance->parsed()) code = run_distance(file, max_dim, point, facet_index, report);
    report.j["exit"] = code;
    report.print();
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
