#include "qti/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "qti/errors.hpp"

namespace qti {

namespace {

// Significant line of a file: 1-based number and payload.  Blank lines and
// '#' comment lines are dropped.
struct Line {
  int number;
  std::string text;
};

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (is_blank(raw)) continue;
    const auto first = raw.find_first_not_of(" \t");
    if (raw[first] == '#') continue;
    lines.push_back({number, raw});
  }
  return lines;
}

std::vector<long> parse_ints(const Line& line, const std::string& source,
                             std::size_t expect) {
  std::istringstream in(line.text);
  std::vector<long> values;
  long v;
  while (in >> v) values.push_back(v);
  std::string trailing;
  if (!in.eof() && (in.clear(), in >> trailing)) {
    throw ParseError(source, line.number,
                     "unexpected token '" + trailing + "'");
  }
  if (values.size() != expect) {
    throw ParseError(source, line.number,
                     "expected " + std::to_string(expect) +
                         " integers, found " + std::to_string(values.size()));
  }
  return values;
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& source) {
  const auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(source, "empty graph file");
  const auto header = parse_ints(lines[0], source, 2);
  const long n = header[0], m = header[1];
  if (n < 0 || m < 0) {
    throw ParseError(source, lines[0].number, "negative count in header");
  }
  if (static_cast<long>(lines.size()) - 1 != m) {
    throw ParseError(source, lines[0].number,
                     "header announces " + std::to_string(m) +
                         " edges, file has " +
                         std::to_string(lines.size() - 1) + " edge lines");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long e = 0; e < m; ++e) {
    const auto uv = parse_ints(lines[e + 1], source, 2);
    edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  return graph_make(static_cast<int>(n), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  return parse_graph(in, path);
}

AltSpace parse_space(std::istream& in, const std::string& source) {
  const auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(source, "empty space file");
  const auto header = parse_ints(lines[0], source, 3);
  const long n = header[0], q = header[1], k = header[2];
  if (n < 0 || k < 0) {
    throw ParseError(source, lines[0].number, "negative count in header");
  }
  const Field& field = Field::get(static_cast<int>(q));
  if (static_cast<long>(lines.size()) - 1 != k * n) {
    throw ParseError(source, lines[0].number,
                     "header announces " + std::to_string(k) + " blocks of " +
                         std::to_string(n) + " rows, file has " +
                         std::to_string(lines.size() - 1) + " matrix rows");
  }
  std::vector<FqMatrix> gens;
  gens.reserve(k);
  for (long g = 0; g < k; ++g) {
    FqMatrix m(field, static_cast<int>(n), static_cast<int>(n));
    for (long r = 0; r < n; ++r) {
      const Line& line = lines[1 + g * n + r];
      const auto row = parse_ints(line, source, n);
      for (long c = 0; c < n; ++c) {
        if (row[c] < 0 || row[c] >= q) {
          throw ParseError(source, line.number,
                           "entry " + std::to_string(row[c]) +
                               " outside [0, " + std::to_string(q) + ")");
        }
        m.set(static_cast<int>(r), static_cast<int>(c),
              static_cast<int>(row[c]));
      }
    }
    gens.push_back(std::move(m));
  }
  return altspace_make(static_cast<int>(n), field, gens);
}

AltSpace read_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  return parse_space(in, path);
}

void write_space(std::ostream& out, const AltSpace& s) {
  out << s.n() << " " << s.field().q() << " " << s.dim() << "\n";
  for (int g = 0; g < s.dim(); ++g) {
    out << "\n";
    const FqMatrix& m = s.gens()[g];
    for (int r = 0; r < s.n(); ++r) {
      for (int c = 0; c < s.n(); ++c) {
        if (c) out << " ";
        out << m.at(r, c);
      }
      out << "\n";
    }
  }
}

std::string space_to_string(const AltSpace& s) {
  std::ostringstream out;
  write_space(out, s);
  return out.str();
}

namespace {

std::string x_part(Basis basis, int d, bool latex) {
  if (d == 0) return {};
  if (basis == Basis::kXq) {
    return latex ? "x_q^{" + std::to_string(d) + "}"
                 : "xq^" + std::to_string(d);
  }
  if (d == 1) return "x";
  return latex ? "x^{" + std::to_string(d) + "}" : "x^" + std::to_string(d);
}

std::string render_terms(const BivarPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : p.terms()) {
    const bool constant = c.degree() <= 0;
    bool neg = false;
    std::string body;
    if (constant) {
      const mpz_class& v = c.coeff(0);
      neg = v < 0;
      const mpz_class mag = neg ? mpz_class(-v) : v;
      if (d == 0) {
        body = mag.get_str();
      } else if (mag == 1) {
        body = x_part(p.basis(), d, latex);
      } else {
        body = mag.get_str() + (latex ? "" : "*") + x_part(p.basis(), d, latex);
      }
    } else {
      body = "(" + (latex ? c.latex() : c.str()) + ")";
      if (d != 0) body += (latex ? "" : "*") + x_part(p.basis(), d, latex);
    }
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    out << body;
  }
  return out.str();
}

}  // namespace

std::string render_text(const BivarPoly& p) { return render_terms(p, false); }

std::string render_latex(const BivarPoly& p) { return render_terms(p, true); }

std::string poly_to_json(const BivarPoly& p) {
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [d, c] : p.terms()) {
    terms[std::to_string(d)] = c.coeff_strings();
  }
  nlohmann::json j;
  j["basis"] = p.basis() == Basis::kXq ? "xq" : "monomial";
  j["terms"] = terms;
  return j.dump();
}

BivarPoly poly_from_json(const std::string& text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("basis") || !j.contains("terms")) {
    throw ParseError(source, "expected an object with 'basis' and 'terms'");
  }
  Basis basis;
  const auto& btag = j["basis"];
  if (btag == "xq") {
    basis = Basis::kXq;
  } else if (btag == "monomial") {
    basis = Basis::kMonomial;
  } else {
    throw ParseError(source, "basis must be \"xq\" or \"monomial\"");
  }
  if (!j["terms"].is_object()) {
    throw ParseError(source, "'terms' must be an object");
  }
  BivarPoly p(basis);
  for (const auto& [key, value] : j["terms"].items()) {
    int d = 0;
    try {
      std::size_t pos = 0;
      d = std::stoi(key, &pos);
      if (pos != key.size() || d < 0) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError(source, "term key '" + key +
                                   "' is not a nonnegative x-degree");
    }
    if (!value.is_array()) {
      throw ParseError(source, "coefficients of x-degree " + key +
                                   " must be an array of decimal strings");
    }
    std::vector<std::string> coeffs;
    coeffs.reserve(value.size());
    for (const auto& item : value) {
      if (!item.is_string()) {
        throw ParseError(source, "coefficients of x-degree " + key +
                                     " must be decimal strings");
      }
      coeffs.push_back(item.get<std::string>());
    }
    try {
      p.set_coeff(d, IntPolyQ::from_coeff_strings(coeffs));
    } catch (const ParseError&) {
      throw ParseError(source, "invalid integer literal in x-degree " + key);
    }
  }
  return p;
}

BivarPoly read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return poly_from_json(buffer.str(), path);
}

std::string render(const BivarPoly& p, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return poly_to_json(p);
    case OutputFormat::kLatex:
      return render_latex(p);
    case OutputFormat::kText:
      break;
  }
  return render_text(p);
}

}  // namespace qti
