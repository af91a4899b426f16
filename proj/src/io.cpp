#include "polynorm/io.hpp"

#include <fstream>
#include <sstream>

#include "polynorm/errors.hpp"

namespace polynorm {

namespace {

// Strips comments/whitespace; empty result means the line is skippable.
std::string clean_line(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

SymmetricPolytope parse_polytope(std::istream& in) {
  std::string raw;
  int lineno = 0;
  auto next = [&](bool required) -> std::string {
    while (std::getline(in, raw)) {
      ++lineno;
      std::string s = clean_line(raw);
      if (!s.empty()) return s;
    }
    if (required) throw ParseError(lineno, "unexpected end of input");
    return "";
  };

  if (next(true) != "polytope") throw ParseError(lineno, "expected 'polytope' header");
  std::string dim_line = next(true);
  std::istringstream ds(dim_line);
  std::string kw;
  int dim = 0;
  if (!(ds >> kw >> dim) || kw != "dim" || dim <= 0)
    throw ParseError(lineno, "expected 'dim <n>'");
  std::string rep = next(true);
  if (rep != "vrep" && rep != "hrep") throw ParseError(lineno, "expected 'vrep' or 'hrep'");

  std::vector<Vec> rows;
  for (;;) {
    std::string s = next(true);
    if (s == "end") break;
    std::istringstream rs(s);
    std::vector<Rational> coords;
    std::string tok;
    while (rs >> tok) {
      try {
        coords.push_back(parse_rational(tok));
      } catch (const InputError& e) {
        throw ParseError(lineno, e.what());
      }
    }
    if (static_cast<int>(coords.size()) != dim)
      throw ParseError(lineno, "row has " + std::to_string(coords.size()) + " entries, expected " +
                                   std::to_string(dim));
    rows.emplace_back(std::move(coords));
  }
  if (rows.empty()) throw ParseError(lineno, "no rows before 'end'");
  return rep == "vrep" ? SymmetricPolytope::from_vertices(dim, std::move(rows))
                       : SymmetricPolytope::from_halfspaces(dim, std::move(rows));
}

SymmetricPolytope parse_polytope_string(const std::string& text) {
  std::istringstream in(text);
  return parse_polytope(in);
}

SymmetricPolytope load_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_polytope(in);
}

std::string emit_polytope(const SymmetricPolytope& p) {
  std::ostringstream out;
  out << "polytope\n" << "dim " << p.dim() << "\n" << "vrep\n";
  for (const Vec& v : p.vertices()) {
    for (int i = 0; i < p.dim(); ++i) {
      if (i) out << ' ';
      out << to_string(v[i]);
    }
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

void save_polytope_file(const SymmetricPolytope& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << emit_polytope(p);
}

}  // namespace polynorm
