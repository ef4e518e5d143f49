#include "polyface/polytope_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace polyface::polytope {

using linalg::VecQ;

ParseError::ParseError(std::string message, int line_, int column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                         ": " + std::move(message)),
      line(line_),
      column(column_) {}

namespace {

std::vector<std::pair<std::string, int>> tokenize(const std::string& line) {
  std::vector<std::pair<std::string, int>> tokens;  // token, 1-based column
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
  }
  return tokens;
}

// Rebuild hyperplanes from vertices+facets exactly, then validate.
void finish_parsed(PolytopeModel& p) {
  VecQ centroid(p.dim, Rat(0));
  for (const auto& v : p.vertices)
    for (int j = 0; j < p.dim; ++j) centroid[j] += v[j];
  const Rat inv(1, static_cast<long>(p.vertices.size()));
  for (auto& x : centroid) x *= inv;

  for (auto& f : p.facets) std::sort(f.begin(), f.end());
  std::sort(p.facets.begin(), p.facets.end());
  p.simplicial = std::all_of(p.facets.begin(), p.facets.end(), [&](const auto& f) {
    return static_cast<int>(f.size()) == p.dim;
  });
  p.hyperplanes.clear();
  for (const auto& facet : p.facets) {
    linalg::MatQ m;
    for (int vi : facet) {
      VecQ row = p.vertices[vi];
      row.push_back(Rat(-1));
      m.push_back(std::move(row));
    }
    linalg::MatQ kernel = linalg::kernel_basis(std::move(m));
    if (kernel.size() != 1)
      throw std::runtime_error("polytope file: facet vertex set does not span a hyperplane");
    Hyperplane h;
    h.normal.assign(kernel[0].begin(), kernel[0].end() - 1);
    h.offset = kernel[0].back();
    const Rat side = linalg::dot(h.normal, centroid) - h.offset;
    if (side == 0) throw std::runtime_error("polytope file: degenerate facet hyperplane");
    if (side > 0) {
      for (auto& x : h.normal) x = -x;
      h.offset = -h.offset;
    }
    p.hyperplanes.push_back(std::move(h));
  }
  validate(p);
}

}  // namespace

PolytopeModel read_polytope(std::istream& in) {
  PolytopeModel p;
  bool have_dim = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const auto& [key, kcol] = tokens[0];
    if (key == "dimension") {
      if (tokens.size() != 2) throw ParseError("dimension expects one value", lineno, kcol);
      try {
        p.dim = std::stoi(tokens[1].first);
      } catch (const std::exception&) {
        throw ParseError("bad dimension '" + tokens[1].first + "'", lineno, tokens[1].second);
      }
      if (p.dim < 1) throw ParseError("dimension must be positive", lineno, tokens[1].second);
      have_dim = true;
    } else if (key == "name") {
      std::ostringstream os;
      for (std::size_t i = 1; i < tokens.size(); ++i) os << (i > 1 ? " " : "") << tokens[i].first;
      p.name = os.str();
    } else if (key == "vertex") {
      if (!have_dim) throw ParseError("vertex before dimension", lineno, kcol);
      if (static_cast<int>(tokens.size()) != p.dim + 1)
        throw ParseError("vertex expects " + std::to_string(p.dim) + " coordinates", lineno, kcol);
      VecQ v;
      for (int j = 1; j <= p.dim; ++j) {
        try {
          v.push_back(parse_rational(tokens[j].first));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), lineno, tokens[j].second);
        }
      }
      p.vertices.push_back(std::move(v));
    } else if (key == "facet") {
      if (tokens.size() < 2) throw ParseError("facet expects vertex indices", lineno, kcol);
      std::vector<int> facet;
      for (std::size_t j = 1; j < tokens.size(); ++j) {
        int idx = -1;
        try {
          idx = std::stoi(tokens[j].first);
        } catch (const std::exception&) {
          throw ParseError("bad vertex index '" + tokens[j].first + "'", lineno, tokens[j].second);
        }
        if (idx < 0 || idx >= static_cast<int>(p.vertices.size()))
          throw ParseError("vertex index out of range", lineno, tokens[j].second);
        facet.push_back(idx);
      }
      p.facets.push_back(std::move(facet));
    } else {
      throw ParseError("unknown field '" + key + "'", lineno, kcol);
    }
  }
  if (!have_dim) throw ParseError("missing dimension", std::max(lineno, 1), 1);
  if (p.vertices.empty()) throw ParseError("no vertices", lineno, 1);
  if (p.facets.empty())
    throw ParseError("no facets given; only fixture generators can build facet-free input",
                     lineno, 1);
  finish_parsed(p);
  return p;
}

PolytopeModel read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polytope file: " + path);
  return read_polytope(in);
}

void write_polytope(std::ostream& out, const PolytopeModel& p) {
  out << "dimension " << p.dim << "\n";
  if (!p.name.empty()) out << "name " << p.name << "\n";
  for (const auto& v : p.vertices) {
    out << "vertex";
    for (const auto& x : v) out << " " << to_string(x);
    out << "\n";
  }
  for (const auto& f : p.facets) {
    out << "facet";
    for (int vi : f) out << " " << vi;
    out << "\n";
  }
}

void write_polytope_file(const std::string& path, const PolytopeModel& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_polytope(out, p);
}

}  // namespace polyface::polytope
