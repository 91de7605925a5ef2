#pragma once

#include <iosfwd>
#include <string>

#include "latgrade/complex.hpp"
#include "latgrade/configuration.hpp"
#include "latgrade/grading.hpp"

namespace latgrade {

// Text formats. All indices shown to users are 1-based.
//
//   matrix         "rows cols", then one line of integers per row
//   lattice        basis rows in the matrix format
//   grading        "n", then the relation lattice in the matrix format
//   configuration  optional "labels l_1 .. l_n" line, then a matrix whose columns are the vectors
//   graph          "vertices k", then "i j" per edge
//   polynomials    one term per line, "coefficient e_1 .. e_n"; blank lines separate polynomials
//   complex        "complex f", f lines of non-faces (column indices), "facets k", k lines of vertices
//
// '#' starts a comment everywhere except inside a matrix block.

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& m);

Lattice parse_lattice(const std::string& text, std::size_t ambient_rank);
std::string format_lattice(const Lattice& l);

Grading parse_grading(const std::string& text);
std::string format_grading(const Grading& g);

VectorConfiguration parse_configuration(const std::string& text);
std::string format_configuration(const VectorConfiguration& a);

Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

Rational parse_rational(const std::string& token);
std::vector<Polynomial> parse_polynomials(const std::string& text, std::size_t n);
std::string format_polynomials(const std::vector<Polynomial>& polys);

/// "x14*x23 - x12*x34"-style expressions over the configuration's labels.
Polynomial parse_polynomial_expression(const std::string& expr, const VectorConfiguration& a);
std::string render_polynomial(const Polynomial& p, const VectorConfiguration& a);

SimplicialComplex parse_complex(const std::string& text);
std::string format_complex(const SimplicialComplex& c);

/// "{14,23}" for a set of column indices, via the configuration labels.
std::string render_column_set(const IndexSet& columns, const VectorConfiguration& a);

} // namespace latgrade
