#include "ivq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ivq/analysis.hpp"
#include "ivq/constructions.hpp"
#include "ivq/enumerate.hpp"
#include "ivq/group.hpp"
#include "ivq/knot.hpp"
#include "ivq/report.hpp"

namespace ivq {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

// "7", "1..13" or "1 13"
std::pair<std::size_t, std::size_t> parse_range(const std::vector<std::string>& parts) {
  auto number = [](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad order '" + s + "'");
    return static_cast<std::size_t>(std::stoull(s));
  };
  if (parts.size() == 1) {
    const auto dots = parts[0].find("..");
    if (dots == std::string::npos) return {number(parts[0]), number(parts[0])};
    return {number(parts[0].substr(0, dots)), number(parts[0].substr(dots + 2))};
  }
  if (parts.size() == 2) return {number(parts[0]), number(parts[1])};
  throw UsageError("counts takes <n>, <n..m> or <n> <m>");
}

std::string describe(const Quandle& q) {
  std::string s = "order " + std::to_string(q.size());
  if (auto factors = is_affine(q)) s += "; isomorphic to core(" + abelian_name(*factors) + ")";
  return s;
}

struct Options {
  std::string table_path;
  std::string format = "human";
  std::string subject;
  std::string spec;
  std::string output;
  std::string knot_input;
  std::size_t bound = 0;
  std::size_t order = 0;
  std::string catalog;
  unsigned workers = 1;
  std::vector<std::string> range;
  std::uint64_t seed = 0;
};

int check(const Options& o, std::ostream& out, std::ostream& err) {
  const MagmaTable m = parse_table(read_file(o.table_path));
  if (auto v = first_violation(m)) {
    err << v->message() << "\n";
    return kExitDomain;
  }
  out << "ok: involutory quandle of order " << m.size() << "\n";
  return kExitOk;
}

int analyze_cmd(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.table_path);
  const Quandle q = Quandle::checked(parse_table(text));
  ReportDocument doc;
  doc.subject = o.subject.empty() ? o.table_path : o.subject;
  doc.report = analyze(q, element_limit_from_env());
  doc.input_digest = input_digest(text);
  out << emit_report(doc, o.format == "json" ? ReportFormat::structured : ReportFormat::human);
  return kExitOk;
}

int construct_cmd(const Options& o, std::ostream& out) {
  const Quandle q = construct(o.spec);
  write_output(o.output, format_table(q.table(), o.spec), out);
  return kExitOk;
}

std::size_t completion_bound(const Options& o) {
  return o.bound ? o.bound : element_limit_from_env(kDefaultCompletionLimit);
}

int knot_complete(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.knot_input);
  const Presentation p =
      looks_like_crossings(text) ? crossings_to_presentation(parse_crossings(text)) : parse_presentation(text);
  const Completion c = complete(p, completion_bound(o));
  out << describe(c.quandle) << "\n";
  if (!o.output.empty()) write_output(o.output, format_table(c.quandle.table(), "completed from " + o.knot_input), out);
  return kExitOk;
}

int knot_unknot(const Options& o, std::ostream& out) {
  const UnknotVerdict v = unknot_test(parse_crossings(read_file(o.knot_input)), completion_bound(o));
  out << verdict_name(v.kind);
  if (v.order) out << " (order " << *v.order << ")";
  else if (v.coloring_modulus) out << " (coloring by core(Z" << *v.coloring_modulus << "))";
  out << "\n";
  return kExitOk;
}

int enumerate_cmd(const Options& o, std::ostream& out) {
  const CanonicalCatalog c = enumerate_connected(o.order, o.workers);
  if (!o.catalog.empty()) {
    for (const auto& path : write_catalog(o.catalog, c)) out << path.filename().string() << "\n";
    write_counts(std::filesystem::path(o.catalog) / "counts.tsv", {counts(c)});
    return kExitOk;
  }
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i) out << "\n";
    write_table(out, c.members[i].table(),
                "connected involutory quandle " + std::to_string(i + 1) + " of order " + std::to_string(c.order));
  }
  return kExitOk;
}

int counts_cmd(const Options& o, std::ostream& out) {
  const auto [lo, hi] = parse_range(o.range);
  if (lo < 1 || hi < lo) throw UsageError("empty order range");
  std::vector<CountsRow> rows;
  out << "n\tq\tl\ta\n";
  for (std::size_t n = lo; n <= hi; ++n) {
    const CanonicalCatalog c = enumerate_connected(n, o.workers);
    const CountsRow r = counts(c);
    out << r.n << '\t' << r.q << '\t' << r.l << '\t' << r.a << '\n' << std::flush;
    rows.push_back(r);
    if (!o.catalog.empty()) write_catalog(o.catalog, c);
  }
  if (!o.catalog.empty()) write_counts(std::filesystem::path(o.catalog) / "counts.tsv", rows);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ivq: involutory quandles (kei) toolkit", "ivq"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Accepted for compatibility; all algorithms are deterministic");
  app.fallthrough();

  auto* check_cmd = app.add_subcommand("check", "Validate a Cayley table");
  check_cmd->add_option("table", o.table_path, "Table file")->required();

  auto* analyze_sub = app.add_subcommand("analyze", "Structure report for a Cayley table");
  analyze_sub->add_option("table", o.table_path, "Table file")->required();
  analyze_sub->add_option("--format", o.format, "human or json")->check(CLI::IsMember({"human", "json"}));
  analyze_sub->add_option("--subject", o.subject, "Subject name in the report");

  auto* construct_sub = app.add_subcommand("construct", "Build a quandle from a specifier");
  construct_sub->add_option("spec", o.spec, "e.g. core:Z3xZ3, conj:S4, refl:q=7,dim=2,form=I, sl2:q=3")->required();
  construct_sub->add_option("-o,--output", o.output, "Output file");

  auto* knot = app.add_subcommand("knot", "Knot quandles");
  knot->require_subcommand(1);
  auto* complete_sub = knot->add_subcommand("complete", "Complete a presentation or crossing list");
  complete_sub->add_option("input", o.knot_input, "Presentation or crossing file")->required();
  complete_sub->add_option("--max-elements", o.bound, "Completion bound");
  complete_sub->add_option("-o,--output", o.output, "Write the completed table here");
  auto* unknot_sub = knot->add_subcommand("unknot", "Decide whether a diagram is the unknot");
  unknot_sub->add_option("input", o.knot_input, "Crossing file")->required();
  unknot_sub->add_option("--max-elements", o.bound, "Completion bound");

  auto* enumerate_sub = app.add_subcommand("enumerate", "Connected involutory quandles of order n");
  enumerate_sub->add_option("n", o.order, "Order")->required();
  enumerate_sub->add_option("--catalog", o.catalog, "Write one table file per quandle into this directory");
  enumerate_sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* counts_sub = app.add_subcommand("counts", "Counts q, l, a for a range of orders");
  counts_sub->add_option("range", o.range, "<n>, <n..m> or <n> <m>")->required()->expected(1, 2);
  counts_sub->add_option("--catalog", o.catalog, "Also write the catalogs and counts.tsv here");
  counts_sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));

  std::vector<std::string> storage{"ivq"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return check(o, out, err);
    if (analyze_sub->parsed()) return analyze_cmd(o, out);
    if (construct_sub->parsed()) return construct_cmd(o, out);
    if (complete_sub->parsed()) return knot_complete(o, out);
    if (unknot_sub->parsed()) return knot_unknot(o, out);
    if (enumerate_sub->parsed()) return enumerate_cmd(o, out);
    if (counts_sub->parsed()) return counts_cmd(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedTable& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UndeclaredGenerator& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InconsistentArcs& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace ivq
