#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "alexbq/braid.hpp"
#include "alexbq/catalog.hpp"
#include "alexbq/errors.hpp"
#include "alexbq/ideals.hpp"
#include "alexbq/invariants.hpp"
#include "alexbq/json_io.hpp"

namespace alexbq::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string catalog, file, braid, gauss;
  std::size_t max_k = 1;
  std::string order = "grlex";
  std::string priority = "T,S,Ti,Si";
  std::string format = "text";
  std::optional<std::size_t> budget;
  std::uint64_t minor_warn = 2'000'000;
  unsigned jobs = 0;

  ReportOptions report() const {
    ReportOptions r;
    r.max_k = max_k;
    r.order = TermOrder{parse_order_kind(order), parse_priority(priority)};
    r.order.validate(4);
    if (budget) {
      r.budget.max_pairs = *budget;
    } else if (const char* env = std::getenv("ALEXBQ_BUDGET")) {
      r.budget.max_pairs = std::stoull(env);
    }
    return r;
  }

  std::string single_source() const {
    std::vector<std::string> set;
    if (!catalog.empty()) set.push_back("catalog:" + catalog);
    if (!file.empty()) set.push_back("file:" + file);
    if (!braid.empty()) set.push_back("braid:" + braid);
    if (!gauss.empty()) set.push_back("gauss:" + gauss);
    if (set.size() != 1) throw CLI::ValidationError("exactly one of --catalog, --file, --braid, --gauss is required");
    return set.front();
  }
};

void warn_minors(const Diagram& d, const Options& o, std::ostream& err) {
  const PresentationMatrix m = build_matrix(d);
  for (std::size_t k = 0; k <= o.max_k && k < m.rows(); ++k) {
    const std::size_t r = m.rows() - k;
    if (r > std::min(m.rows(), m.cols())) continue;
    if (std::uint64_t n = minor_count(m, r); n > o.minor_warn) {
      err << "warning: level " << k << " needs " << n << " minors (warning threshold " << o.minor_warn << ")\n";
    }
  }
}

const char* kind_text(IdealKind k) {
  switch (k) {
    case IdealKind::whole_ring: return "whole ring";
    case IdealKind::zero_ideal: return "zero ideal";
    case IdealKind::general: break;
  }
  return "general";
}

void print_text(const InvariantReport& r, std::ostream& out) {
  out << "name: " << r.name << '\n';
  out << "matrix: " << r.rows << " x " << r.cols << (r.degenerate ? " (degenerate: no relations)" : "") << '\n';
  out << "order: " << r.options.order.describe() << '\n';
  for (const auto& l : r.levels) {
    out << "k = " << l.k << " (" << kind_text(l.kind) << ")\n";
    out << "  principal: " << to_string(l.principal) << '\n';
    out << "  groebner basis, " << l.cardinality << " element" << (l.cardinality == 1 ? "" : "s") << ":\n";
    for (const auto& g : l.groebner.elements) out << "    " << to_string(g) << '\n';
    out << "  sum: " << to_string(l.sum) << '\n';
    out << "  max: " << to_string(l.max) << '\n';
  }
}

int compute(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string source = o.single_source();
  const Diagram d = load_source(source);
  warn_minors(d, o, err);
  const InvariantReport r = compute_report(d, o.report(), source);
  if (o.format == "json") {
    out << report_json(r) << '\n';
  } else {
    print_text(r, out);
  }
  return ok;
}

int compare(const Options& o, const std::string& a, const std::string& b, std::ostream& out) {
  const ReportOptions ro = o.report();
  const InvariantReport ra = compute_report(load_source(a), ro, a);
  const InvariantReport rb = compute_report(load_source(b), ro, b);
  std::optional<std::size_t> first;
  nlohmann::json levels = nlohmann::json::array();
  if (o.format != "json") out << "level  principal  groebner\n";
  for (std::size_t k = 0; k <= ro.max_k; ++k) {
    const bool p = ra.levels[k].principal == rb.levels[k].principal;
    const bool g = ideal_equal(ra.levels[k].groebner.elements, rb.levels[k].groebner.elements, ro.order, ro.budget);
    if (!(p && g) && !first) first = k;
    if (o.format == "json") {
      levels.push_back({{"k", k}, {"principal_equal", p}, {"groebner_equal", g}});
    } else {
      out << k << "      " << (p ? "equal    " : "different") << "  " << (g ? "equal" : "different") << '\n';
    }
  }
  std::string verdict = first ? "distinguished at level " + std::to_string(*first)
                              : "indistinguishable at levels <= " + std::to_string(ro.max_k);
  if (o.format == "json") {
    out << nlohmann::json{{"a", a}, {"b", b}, {"levels", levels}, {"verdict", verdict}}.dump() << '\n';
  } else {
    out << verdict << '\n';
  }
  return ok;
}

std::string error_kind(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const BudgetExceeded&) {
    return "budget";
  } catch (const ParseError&) {
    return "parse";
  } catch (const ValidationError&) {
    return "validation";
  } catch (...) {
    return "error";
  }
}

int batch(const Options& o, const std::string& list, std::ostream& out) {
  std::string text;
  if (list == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    text = read_file(list);
  }
  std::vector<std::string> sources;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    sources.push_back(line.substr(b, e - b + 1));
  }
  const ReportOptions ro = o.report();
  std::vector<std::string> lines(sources.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < sources.size();) {
      try {
        lines[i] = report_json(compute_report(load_source(sources[i]), ro, sources[i]));
      } catch (const std::exception& ex) {
        lines[i] = nlohmann::json{{"name", sources[i]},
                                  {"error", {{"kind", error_kind(std::current_exception())}, {"message", ex.what()}}}}
                       .dump();
      }
    }
  };
  unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(sources.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned j = 0; j + 1 < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& l : lines) out << l << '\n';
  return ok;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--max-k", o.max_k, "Highest ideal level to compute")->capture_default_str();
  app->add_option("--order", o.order, "Term order: grlex or lex")->capture_default_str();
  app->add_option("--priority", o.priority, "Variable priority, most significant first")->capture_default_str();
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app->add_option("--budget", o.budget, "Cap on Groebner critical pairs (default: $ALEXBQ_BUDGET or 2000000)");
  app->add_option("--minor-warn", o.minor_warn, "Warn when a level needs more minors than this")->capture_default_str();
}

}  // namespace

Diagram load_source(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view kind = colon == std::string_view::npos ? "catalog" : spec.substr(0, colon);
  std::string_view value = colon == std::string_view::npos ? spec : spec.substr(colon + 1);
  if (kind == "catalog") return catalog(value);
  if (kind == "file") return parse_diagram(read_file(std::string(value)));
  if (kind == "braid") return braid_closure(parse_braid(value));
  if (kind == "gauss") return parse_gauss(value);
  // Names such as "k#1" never contain ':', so anything else is a catalog lookup.
  return catalog(spec);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander biquandle invariants of virtual knots and links", "alexbq"};
  app.require_subcommand(1);
  Options o;

  auto* cmp = app.add_subcommand("compute", "Invariant report for one diagram");
  cmp->add_option("--catalog", o.catalog, "Catalog entry name");
  cmp->add_option("--file", o.file, "Crossing-list file");
  cmp->add_option("--braid", o.braid, "Virtual braid word, e.g. \"width=2 s1 s1 v1\"");
  cmp->add_option("--gauss", o.gauss, "Signed Gauss code, e.g. O1+O2+U1+U2+");
  add_common(cmp, o);

  std::string a, b;
  auto* cpr = app.add_subcommand("compare", "Compare two diagrams level by level");
  cpr->add_option("a", a, "First source (catalog:NAME, file:PATH, braid:WORD, gauss:CODE)")->required();
  cpr->add_option("b", b, "Second source")->required();
  add_common(cpr, o);

  std::string list;
  auto* bat = app.add_subcommand("batch", "One JSON report per source line");
  bat->add_option("list", list, "File with one source per line, or - for stdin")->required();
  bat->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");
  add_common(bat, o);

  app.add_subcommand("list", "Print catalog names");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
    if (cmp->parsed()) return compute(o, out, err);
    if (cpr->parsed()) return compare(o, a, b, out);
    if (bat->parsed()) return batch(o, list, out);
    for (const auto& n : catalog_names()) out << n << '\n';
    return ok;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return budget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return parse;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace alexbq::cli
