#pragma once

#include <iosfwd>
#include <string>

#include "qti/altspace.hpp"
#include "qti/graph.hpp"
#include "qti/xqpoly.hpp"

namespace qti {

enum class OutputFormat { kText, kJson, kLatex };

// Graph file: first significant line "n m", then m lines "u v" (1-indexed,
// u < v).  Blank lines and lines starting with '#' are ignored.
// Errors: ParseError (with 1-based line numbers); graph_make's validation
// errors pass through.
Graph parse_graph(std::istream& in, const std::string& source);
Graph read_graph_file(const std::string& path);

// AltSpace file: first significant line "n q k", then k blocks of n lines of
// n integers in [0, q) (base-p digit codes), blocks separated by blank
// lines.  '#' comment lines are ignored.
AltSpace parse_space(std::istream& in, const std::string& source);
AltSpace read_space_file(const std::string& path);

// Writes the canonical generator list in the same format (write -> read ->
// write is bit-exact).
void write_space(std::ostream& out, const AltSpace& s);
std::string space_to_string(const AltSpace& s);

// Text rendering: ascending x-degrees joined with " + "/" - ",
// q-falling terms as "xq^d", monomials as "x"/"x^d", polynomial
// coefficients parenthesized with descending q-powers, e.g.
// "1 + (q + 1)*xq^1" or "1 + 2*x + x^2".
std::string render_text(const BivarPoly& p);

// LaTeX rendering: "x_q^{d}" / "x^{d}", no explicit multiplication sign.
std::string render_latex(const BivarPoly& p);

// JSON schema: {"basis": "xq"|"monomial",
//               "terms": {"<x-degree>": ["<c0>", "<c1>", ...]}}
// with coefficients as decimal strings in ascending q-powers.
std::string poly_to_json(const BivarPoly& p);
BivarPoly poly_from_json(const std::string& text, const std::string& source);
BivarPoly read_poly_file(const std::string& path);

std::string render(const BivarPoly& p, OutputFormat format);

}  // namespace qti
