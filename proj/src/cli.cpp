#include "qti/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qti/altspace.hpp"
#include "qti/errors.hpp"
#include "qti/graph.hpp"
#include "qti/io.hpp"
#include "qti/qindep.hpp"
#include "qti/xqpoly.hpp"

namespace qti {

namespace {

OutputFormat format_of(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "latex") return OutputFormat::kLatex;
  return OutputFormat::kText;
}

// Writes `text` (given with trailing newline already, or without one for
// single-line payloads) to the --out path or the standard stream.
void emit(std::string text, const std::string& out_path, std::ostream& out) {
  if (!text.empty() && text.back() != '\n') text += '\n';
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ParseError(out_path, "cannot open output file");
  f << text;
}

std::string tuple_str(const std::vector<mpz_class>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out << ", ";
    out << values[j].get_str();
  }
  out << ")";
  return out.str();
}

// RunConfig invariant: whenever --q is given it must name a supported field
// order.  Returns the validated value.
int checked_q(int q) {
  Field::get(q);
  return q;
}

// Shared input logic of ti-brute and rank-loci: a space file, or a graph
// file with --graphical and a mandatory --q.
AltSpace load_space(const std::string& path, bool graphical, bool q_given,
                    int q) {
  if (graphical) {
    if (!q_given) throw BadArgs("--q is required with --graphical");
    return graphical_space(read_graph_file(path), Field::get(checked_q(q)));
  }
  AltSpace s = read_space_file(path);
  if (q_given && checked_q(q) != s.field().q()) {
    throw ParseError(path, "--q " + std::to_string(q) +
                               " does not match the file header q = " +
                               std::to_string(s.field().q()));
  }
  return s;
}

int run_verify(const std::string& graph_path, int q, long long guard,
               const std::string& out_path, std::ostream& out) {
  const Graph g = read_graph_file(graph_path);
  const CrossValidateReport report = cross_validate(g, checked_q(q), guard);

  std::ostringstream text;
  text << "q = " << q << "\n";
  if (report.mismatches.empty()) {
    text << "c = " << tuple_str(report.symbolic) << " symbolic == brute\n";
  } else {
    std::vector<mpz_class> brute_trimmed = report.brute;
    while (brute_trimmed.size() > 1 && brute_trimmed.back() == 0) {
      brute_trimmed.pop_back();
    }
    text << "c mismatch: symbolic " << tuple_str(report.symbolic)
         << " vs brute " << tuple_str(brute_trimmed) << "\n";
    for (const std::string& line : report.mismatches) {
      text << "mismatch " << line << "\n";
    }
  }
  std::size_t matched = 0;
  for (const StratumCheck& check : report.strata) matched += check.ok();
  text << "strata: " << report.strata.size() << " checked, " << matched
       << " match\n";

  // Proposition 1.4 product law at the symbolic level: I(G, x, q) factors
  // over the connected components through the Lemma 3.1 product.
  const XqPoly whole = q_independence_polynomial(g);
  XqPoly product = XqPoly::one(Basis::kXq);
  for (const auto& comp : connected_components(g)) {
    product = xq_mul(product, q_independence_polynomial(
                                  induced_subgraph(g, comp).graph));
  }
  const bool product_ok = product == whole;
  text << "product law over components: " << (product_ok ? "pass" : "FAIL")
       << "\n";

  const bool pass = report.pass && product_ok;
  text << (pass ? "PASS" : "FAIL") << "\n";
  emit(text.str(), out_path, out);
  return pass ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Exact q-analogue independence polynomials I(G, x, q) and brute-force "
      "totally-isotropic polynomials TI(B, x) over small finite fields"};
  app.require_subcommand(1);

  std::string input, input2, out_path;
  std::string format = "text";
  int q = 0;
  long long guard = kDefaultGuard;
  bool graphical = false;

  const std::string format_help = "Output format (text, json, latex)";
  auto format_check = CLI::IsMember({"text", "json", "latex"});

  CLI::App* indep = app.add_subcommand(
      "indep", "Independence polynomial I(G, x) of a graph file");
  indep->add_option("graph", input, "Graph file")->required();
  indep->add_option("--format", format, format_help)->check(format_check);
  indep->add_option("--out", out_path, "Write output to a file");

  CLI::App* qindep = app.add_subcommand(
      "qindep",
      "Symbolic q-analogue I(G, x, q) in the q-falling basis; with --q, "
      "its specialization at that prime power");
  qindep->add_option("graph", input, "Graph file")->required();
  qindep->add_option("--q", q, "Specialize the coefficients at this q");
  qindep->add_option("--format", format, format_help)->check(format_check);
  qindep->add_option("--out", out_path, "Write output to a file");

  CLI::App* tibrute = app.add_subcommand(
      "ti-brute",
      "Brute-force totally-isotropic polynomial TI(B, x) of a space file, "
      "or of the graphical space of a graph file with --graphical");
  tibrute->add_option("input", input, "Space file (or graph file with --graphical)")
      ->required();
  tibrute->add_flag("--graphical", graphical,
                    "Treat the input as a graph file and use its graphical space");
  tibrute->add_option("--q", q,
                      "Field order (required with --graphical; must match a "
                      "space file's header otherwise)");
  tibrute->add_option("--guard-limit", guard,
                      "Enumeration guard in canonical matrices");
  tibrute->add_option("--format", format, format_help)->check(format_check);
  tibrute->add_option("--out", out_path, "Write output to a file");

  CLI::App* dsum = app.add_subcommand(
      "direct-sum", "Disjoint direct sum of two space files");
  dsum->add_option("space1", input, "First space file")->required();
  dsum->add_option("space2", input2, "Second space file")->required();
  dsum->add_option("--out", out_path, "Write output to a file");

  CLI::App* verify = app.add_subcommand(
      "verify",
      "Cross-validate the symbolic polynomial against the brute-force "
      "oracle at a prime power (totals, strata, component product law)");
  verify->add_option("graph", input, "Graph file")->required();
  verify->add_option("--q", q, "Prime power to verify at")->required();
  verify->add_option("--guard-limit", guard,
                     "Enumeration guard in canonical matrices");
  verify->add_option("--out", out_path, "Write the report to a file");

  CLI::App* expand = app.add_subcommand(
      "expand",
      "Convert a JSON polynomial file between bases, or specialize q with --q");
  expand->add_option("poly", input, "JSON polynomial file")->required();
  expand->add_option("--q", q, "Specialize at this q instead of converting");
  expand->add_option("--format", format, format_help)->check(format_check);
  expand->add_option("--out", out_path, "Write output to a file");

  CLI::App* rloci = app.add_subcommand(
      "rank-loci",
      "Rank-locus counts |{v : dim span{Bv} = e}| of a space file (or a "
      "graph file with --graphical)");
  rloci->add_option("input", input, "Space file (or graph file with --graphical)")
      ->required();
  rloci->add_flag("--graphical", graphical,
                  "Treat the input as a graph file and use its graphical space");
  rloci->add_option("--q", q,
                    "Field order (required with --graphical; must match a "
                    "space file's header otherwise)");
  rloci->add_option("--guard-limit", guard, "Enumeration guard in vectors");
  rloci->add_option("--format", format, format_help)->check(format_check);
  rloci->add_option("--out", out_path, "Write output to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(indep)) {
      emit(render(independence_polynomial(read_graph_file(input)),
                  format_of(format)),
           out_path, out);
      return 0;
    }
    if (app.got_subcommand(qindep)) {
      XqPoly p = q_independence_polynomial(read_graph_file(input));
      if (qindep->count("--q")) p = p.specialize_q(checked_q(q));
      emit(render(p, format_of(format)), out_path, out);
      return 0;
    }
    if (app.got_subcommand(tibrute)) {
      const AltSpace s =
          load_space(input, graphical, tibrute->count("--q") > 0, q);
      emit(render(ti_polynomial_brute(s, guard), format_of(format)), out_path,
           out);
      return 0;
    }
    if (app.got_subcommand(dsum)) {
      emit(space_to_string(
               direct_sum(read_space_file(input), read_space_file(input2))),
           out_path, out);
      return 0;
    }
    if (app.got_subcommand(verify)) {
      return run_verify(input, q, guard, out_path, out);
    }
    if (app.got_subcommand(expand)) {
      BivarPoly p = read_poly_file(input);
      if (expand->count("--q")) {
        p = p.specialize_q(checked_q(q));
      } else {
        p = p.basis() == Basis::kXq ? to_monomial(p) : from_monomial(p);
      }
      emit(render(p, format_of(format)), out_path, out);
      return 0;
    }
    if (app.got_subcommand(rloci)) {
      const AltSpace s =
          load_space(input, graphical, rloci->count("--q") > 0, q);
      const auto counts = rank_locus_counts(s, guard);
      std::ostringstream text;
      if (format_of(format) == OutputFormat::kJson) {
        text << "{\"counts\":[";
        for (std::size_t e = 0; e < counts.size(); ++e) {
          if (e) text << ",";
          text << "\"" << counts[e].get_str() << "\"";
        }
        text << "]}";
      } else {
        for (std::size_t e = 0; e < counts.size(); ++e) {
          text << "e=" << e << ": " << counts[e].get_str() << "\n";
        }
      }
      emit(text.str(), out_path, out);
      return 0;
    }
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}

}  // namespace qti
