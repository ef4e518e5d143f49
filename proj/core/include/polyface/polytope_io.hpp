#pragma once

#include <iosfwd>
#include <string>

#include "polyface/polytope.hpp"

namespace polyface::polytope {

/// Raised on malformed polytope files, with 1-based line and column.
struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(std::string message, int line_, int column_);
};

/// Text format, one field per line ('#' starts a comment):
///
///   dimension 3
///   name cube(3)            (optional)
///   vertex 0 0 0            (coordinates: integers or "p/q")
///   vertex 1/2 0 1
///   ...
///   facet 0 1 2 3           (0-based vertex indices; block optional)
///
/// When facet lines are present, hyperplanes are re-solved exactly and the
/// model is validated. Without facets the model cannot be used (no hull
/// computation is offered) and parsing fails.
PolytopeModel read_polytope(std::istream& in);
PolytopeModel read_polytope_file(const std::string& path);

void write_polytope(std::ostream& out, const PolytopeModel& p);
void write_polytope_file(const std::string& path, const PolytopeModel& p);

}  // namespace polyface::polytope
