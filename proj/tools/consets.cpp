// consets: connected vertex sets of K_m x P_n.
//
//   consets compute  --m M --n N        one cell
//   consets table    --m M --n-max N    cells n = 1..N
//   consets verify   [scope flags]      formula paths vs enumeration / each other
//   consets charpoly --m M              characteristic polynomial of A_m
//   consets ladder   --n N | --n-max N  closed forms for K_2 x P_n
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include "consets/aggregate.hpp"
#include "consets/charpoly_recurrence.hpp"
#include "consets/oracle.hpp"
#include "consets/pell_ladder.hpp"
#include "consets/record.hpp"
#include "consets/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "plain";
  int precision = consets::kDefaultPrecision;
  std::optional<std::size_t> oracle_cap;
  std::optional<std::size_t> m;
  std::optional<std::size_t> n;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> m_max;
  std::string graph;
  bool ladder = false;
  bool charpoly = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

int run_compute(const Options& opt) {
  const auto m = need(opt.m, "--m");
  const auto n = need(opt.n, "--n");
  const auto format = consets::parse_format(opt.format);
  consets::write_records(std::cout, {consets::to_record(consets::compute_product(m, n), opt.precision)},
                         format);
  return kExitOk;
}

int run_table(const Options& opt) {
  const auto m = need(opt.m, "--m");
  const auto n_max = need(opt.n_max, "--n-max");
  const auto format = consets::parse_format(opt.format);
  consets::ProductEngine engine(m, n_max);
  std::vector<consets::OutputRecord> records;
  records.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n)
    records.push_back(consets::to_record(engine.result(n), opt.precision));
  consets::write_records(std::cout, records, format, /*force_array=*/true);
  return kExitOk;
}

int run_ladder(const Options& opt) {
  if (opt.n && opt.n_max) throw UsageError("give either --n or --n-max, not both");
  const std::size_t first = opt.n ? *opt.n : 1;
  const std::size_t last = opt.n ? *opt.n : need(opt.n_max, "--n or --n-max");
  const auto format = consets::parse_format(opt.format);
  std::vector<consets::OutputRecord> records;
  for (std::size_t n = first; n <= last; ++n) {
    const consets::BigInt count = consets::ladder_count(n);
    const consets::BigRational avg = consets::ladder_average(n);
    const consets::BigRational total = avg * consets::BigRational(count);
    if (!total.is_integer()) throw consets::invariant_error("ladder: A * N is not an integer");
    records.push_back({2, n, count, total.num(), avg, consets::ladder_density(n), opt.precision});
  }
  consets::write_records(std::cout, records, format, /*force_array=*/!opt.n.has_value());
  return kExitOk;
}

int run_charpoly(const Options& opt) {
  const auto m = need(opt.m, "--m");
  const auto poly = consets::recurrence_char_poly(m);
  std::cout << poly.str() << '\n';
  if (m < 2) return kExitOk;
  const auto report = consets::validate_coefficients(m);
  for (const auto& c : report.checks)
    std::cout << (c.holds() ? "PASS " : "FAIL ") << c.name << ": claimed " << c.claimed.str()
              << ", observed " << c.observed.str() << '\n';
  return kExitOk;
}

int run_verify(const Options& opt) {
  const std::size_t cap = consets::oracle::resolve_cap(opt.oracle_cap);
  consets::VerifyReport report;
  bool scoped = false;

  if (!opt.graph.empty()) {
    scoped = true;
    std::ifstream in(opt.graph);
    if (!in) throw UsageError("cannot open graph file " + opt.graph);
    const auto g = consets::oracle::read_edge_list(in);
    const auto census = consets::oracle::census(g, cap);
    std::cout << "vertices=" << g.vertex_count() << " edges=" << g.edge_count()
              << " N=" << census.N().str() << " S=" << census.S().str()
              << " A_exact=" << census.A().str()
              << " A_decimal=" << consets::to_decimal(census.A(), opt.precision) << '\n';
    std::cout << "size_counts=";
    for (std::size_t t = 0; t < census.size_counts.size(); ++t)
      std::cout << (t ? "," : "") << census.size_counts[t].str();
    std::cout << '\n';
    std::string detail;
    for (consets::oracle::Mask s = 1; s <= g.all() && detail.empty(); ++s)
      if (consets::oracle::connected_flood_fill(g, s) != consets::oracle::connected_union_find(g, s))
        detail = "subset mask " + std::to_string(s) + " classified differently";
    report.add({"flood fill = union-find connectivity on every subset", opt.graph,
                detail.empty(), detail});
  }
  if (opt.m && !opt.charpoly) {
    scoped = true;
    if (opt.n) {
      report.append(consets::verify_against_oracle(*opt.m, *opt.n, cap));
    } else {
      const auto n_max = need(opt.n_max, "--n or --n-max");
      for (std::size_t n = 1; n <= n_max; ++n)
        report.append(consets::verify_against_oracle(*opt.m, n, cap));
    }
  }
  if (opt.ladder) {
    scoped = true;
    report.append(consets::verify_ladder(opt.n_max.value_or(50)));
  }
  if (opt.charpoly) {
    scoped = true;
    const std::size_t m_max = opt.m_max.value_or(opt.m.value_or(8));
    report.append(consets::verify_charpoly(m_max));
    report.append(consets::verify_recurrence(std::min<std::size_t>(m_max, 6), 200));
  }
  if (!scoped) report = consets::verify_all(cap);

  report.print(std::cout);
  if (report.ok()) {
    std::cout << "verify: all " << report.lines().size() << " checks passed\n";
    return kExitOk;
  }
  for (const auto& l : report.lines())
    if (!l.ok) {
      std::cerr << "verify: first failure at " << l.cell << ": " << l.name << ": " << l.detail
                << '\n';
      break;
    }
  return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected vertex sets of K_m x P_n: counts, total order, average order, density"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format: csv, json or plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}));
  app.add_option("--precision", opt.precision, "Significant digits of decimal renderings")
      ->check(CLI::Range(1, 1000));
  app.add_option("--oracle-cap", opt.oracle_cap,
                 "Largest vertex count enumerated by brute force (default 22, max 26; "
                 "env CONSETS_ORACLE_CAP)")
      ->check(CLI::Range(1, static_cast<int>(consets::oracle::kMaxCap)));

  auto positive = CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max());

  auto* compute = app.add_subcommand("compute", "N, S, A, D for one cell");
  compute->add_option("--m", opt.m, "Layer size (complete graph order)")->check(positive);
  compute->add_option("--n", opt.n, "Number of layers (path order)")->check(positive);

  auto* table = app.add_subcommand("table", "N, S, A, D for n = 1..n-max");
  table->add_option("--m", opt.m, "Layer size")->check(positive);
  table->add_option("--n-max", opt.n_max, "Largest number of layers")->check(positive);

  auto* verify = app.add_subcommand("verify", "Cross-check formulas; no flags runs everything");
  verify->add_option("--m", opt.m, "Check this layer size against enumeration")->check(positive);
  verify->add_option("--n", opt.n, "Single cell with --m")->check(positive);
  verify->add_option("--n-max", opt.n_max, "Range of n for --m or --ladder")->check(positive);
  verify->add_flag("--ladder", opt.ladder, "Ladder closed forms");
  verify->add_flag("--charpoly", opt.charpoly, "Characteristic polynomial identities");
  verify->add_option("--m-max", opt.m_max, "Largest m for --charpoly")->check(positive);
  verify->add_option("--graph", opt.graph, "Census of an edge-list file ('u v' per line)");

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of A_m");
  charpoly->add_option("--m", opt.m, "Layer size")->check(positive);

  auto* ladder = app.add_subcommand("ladder", "Closed forms for K_2 x P_n");
  ladder->add_option("--n", opt.n, "Single n")->check(positive);
  ladder->add_option("--n-max", opt.n_max, "Rows n = 1..n-max")->check(positive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(opt);
    if (*table) return run_table(opt);
    if (*verify) return run_verify(opt);
    if (*charpoly) return run_charpoly(opt);
    if (*ladder) return run_ladder(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  } catch (const consets::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
