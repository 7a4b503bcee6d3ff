#include "qfib/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfib/identities.hpp"
#include "qfib/poly_matrix.hpp"
#include "qfib/qcomb.hpp"
#include "qfib/sequences.hpp"
#include "qfib/sweep.hpp"

namespace qfib {
namespace {

constexpr int kMaxDetTableK = 5;
constexpr int kMaxTriangleRows = 12;
constexpr int kMaxHoggattN = 6;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OverBudget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int to_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + text + "'");
  }
  if (used != text.size()) throw UsageError("expected an integer, got '" + text + "'");
  return value;
}

void expect_args(const std::string& kind, const std::vector<std::string>& args, std::size_t count) {
  if (args.size() != count) {
    throw UsageError(kind + " takes " + std::to_string(count) + " integer argument(s), got " +
                     std::to_string(args.size()));
  }
}

// "x=1,s=1" or "q=1/2".
struct Assignment {
  Var var;
  Rational value;
};

std::vector<Assignment> parse_at(const std::string& text) {
  std::vector<Assignment> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq != 1) throw UsageError("bad --at item '" + item + "'");
    Var v;
    switch (item[0]) {
      case 'x': v = Var::x; break;
      case 's': v = Var::s; break;
      case 'q': v = Var::q; break;
      case 'z': v = Var::z; break;
      default: throw UsageError("unknown variable in --at item '" + item + "'");
    }
    try {
      out.push_back({v, Rational(item.substr(2))});
    } catch (const std::exception&) {
      throw UsageError("bad value in --at item '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty --at");
  return out;
}

bool all_integer(const std::vector<Assignment>& at) {
  return std::all_of(at.begin(), at.end(),
                     [](const Assignment& a) { return denominator(a.value) == 1; });
}

// Integer points substitute (partially if some variables stay free); rational
// points require every variable present to be assigned.
std::string evaluate_text(const PolyFraction& f, const std::optional<std::string>& at_text) {
  if (!at_text) {
    if (f.is_poly()) return to_canonical_string(f.num);
    return "(" + to_canonical_string(f.num) + ") / (" + to_canonical_string(f.den) + ")";
  }
  const auto at = parse_at(*at_text);
  if (all_integer(at)) {
    Poly num = f.num;
    Poly den = f.den;
    for (const auto& a : at) {
      num = substitute(num, a.var, numerator(a.value));
      den = substitute(den, a.var, numerator(a.value));
    }
    if (den.is_zero()) throw std::domain_error("denominator vanishes at the given point");
    if (num.is_constant() && den.is_constant()) {
      const Rational r(num.constant_term(), den.constant_term());
      std::ostringstream os;
      os << r;
      return os.str();
    }
    return evaluate_text(PolyFraction::reduced(std::move(num), std::move(den)), std::nullopt);
  }
  EvalPoint point{};
  std::array<bool, kNumVars> given{};
  for (const auto& a : at) {
    point[static_cast<std::size_t>(a.var)] = a.value;
    given[static_cast<std::size_t>(a.var)] = true;
  }
  for (std::size_t v = 0; v < kNumVars; ++v) {
    if (!given[v] && (f.num.uses(static_cast<Var>(v)) || f.den.uses(static_cast<Var>(v)))) {
      throw UsageError("rational --at values must assign every variable present");
    }
  }
  const Rational den = eval(f.den, point);
  if (den == 0) throw std::domain_error("denominator vanishes at the given point");
  std::ostringstream os;
  os << eval(f.num, point) / den;
  return os.str();
}

void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + *path + "' for writing");
  file << text;
}

// Line-by-line comparison; returns the diff text (empty when identical).
std::string golden_diff(const std::string& actual, const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read golden file '" + path + "'");
  std::stringstream buf;
  buf << file.rdbuf();
  auto lines = [](const std::string& text) {
    std::vector<std::string> v;
    std::stringstream in(text);
    for (std::string line; std::getline(in, line);) v.push_back(line);
    return v;
  };
  const auto want = lines(buf.str());
  const auto got = lines(actual);
  std::ostringstream diff;
  for (std::size_t i = 0; i < std::max(want.size(), got.size()); ++i) {
    const std::string* w = i < want.size() ? &want[i] : nullptr;
    const std::string* g = i < got.size() ? &got[i] : nullptr;
    if (w && g && *w == *g) continue;
    diff << "line " << i + 1 << ":\n";
    if (w) diff << "- " << *w << '\n';
    if (g) diff << "+ " << *g << '\n';
  }
  return diff.str();
}

struct EvalArgs {
  std::string kind;
  std::vector<std::string> args;
  int shift = 0;
  std::optional<std::string> out;
};

std::string run_eval(const EvalArgs& a) {
  Poly p;
  if (a.kind == "fib") {
    expect_args(a.kind, a.args, 1);
    p = fib(to_int(a.args[0]));
  } else if (a.kind == "lucas") {
    expect_args(a.kind, a.args, 1);
    p = lucas(to_int(a.args[0]));
  } else if (a.kind == "qfib") {
    expect_args(a.kind, a.args, 1);
    p = qfib(to_int(a.args[0]), a.shift);
  } else if (a.kind == "qfib-explicit") {
    expect_args(a.kind, a.args, 1);
    p = qfib_explicit(to_int(a.args[0]));
  } else if (a.kind == "qfib-neg-closed") {
    expect_args(a.kind, a.args, 1);
    p = qfib_neg_closed(to_int(a.args[0]));
  } else if (a.kind == "gf") {
    expect_args(a.kind, a.args, 2);
    p = gf_truncated(to_int(a.args[0]), to_int(a.args[1])).to_poly();
  } else {
    throw UsageError("unknown eval kind '" + a.kind + "'");
  }
  return to_canonical_string(p) + "\n";
}

struct CoeffArgs {
  std::string kind;
  std::vector<std::string> args;
  int shift = 0;
  int ell = 1;
  std::optional<std::string> at;
  std::optional<std::string> out;
};

std::string run_coeff(const CoeffArgs& a) {
  PolyFraction f;
  auto two = [&] {
    expect_args(a.kind, a.args, 2);
    return std::pair{to_int(a.args[0]), to_int(a.args[1])};
  };
  if (a.kind == "qbinom") {
    auto [n, k] = two();
    f.num = qbinom(n, k);
  } else if (a.kind == "fibonomial") {
    auto [n, k] = two();
    f.num = fibonomial(n, k);
  } else if (a.kind == "fibonomial-ell") {
    auto [n, k] = two();
    f.num = fibonomial_ell(n, k, a.ell);
  } else if (a.kind == "qfibonomial") {
    auto [n, k] = two();
    f = qfibonomial(n, k);
  } else if (a.kind == "qfibonomial-ell") {
    auto [n, k] = two();
    f = qfibonomial_ell(n, k, a.ell);
  } else if (a.kind == "fac") {
    expect_args(a.kind, a.args, 1);
    f.num = fac(to_int(a.args[0]), a.shift, a.ell);
  } else if (a.kind == "fac-classical") {
    expect_args(a.kind, a.args, 1);
    f.num = fac_classical(to_int(a.args[0]), a.ell);
  } else if (a.kind == "binom-product") {
    expect_args(a.kind, a.args, 1);
    f.num = Poly(binom_product(to_int(a.args[0])));
  } else {
    throw UsageError("unknown coeff kind '" + a.kind + "'");
  }
  return evaluate_text(f, a.at) + "\n";
}

struct VerifyArgs {
  std::vector<std::string> ids;
  std::map<std::string, std::string> ranges;
  std::optional<int> max_k;
  std::optional<int> max_ell;
  bool fit = false;
  bool fit_ok = false;
  int jobs = 1;
  bool timings = false;
  std::string format = "text";
  std::optional<std::string> out;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<const IdentityEntry*> entries;
  for (const auto& id : a.ids) {
    if (id == "all") {
      for (const auto& e : catalog()) entries.push_back(&e);
    } else {
      entries.push_back(&find_entry(id));
    }
  }
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  SweepOptions options;
  for (const auto& [name, text] : a.ranges) {
    IntRange r;
    try {
      r = parse_range(text);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--") + name + ": " + e.what());
    }
    if (r.empty()) throw UsageError(std::string("--") + name + ": empty range");
    options.ranges[name] = r;
  }
  options.max_k = a.max_k;
  options.max_ell = a.max_ell;
  options.fit = a.fit;
  options.workers = a.jobs;
  options.timings = a.timings;

  const VerificationReport report = a.jobs == 1 ? sweep_serial(entries, options) : sweep(entries, options);
  emit(a.format == "json" ? report_to_json(report) : report_to_text(report), a.out, out);
  return report.all_pass(a.fit_ok) ? kExitOk : kExitFailure;
}

struct TablesArgs {
  std::string kind;
  std::vector<std::string> args;
  int max_k = 3;
  int rows = 5;
  std::optional<std::string> at;
  std::optional<std::string> golden;
  std::optional<std::string> out;
};

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

std::string run_tables(const TablesArgs& a) {
  std::ostringstream text;
  if (a.kind == "det-table") {
    if (!a.args.empty()) throw UsageError("det-table takes --max-k only");
    if (a.max_k < 1) throw UsageError("--max-k must be at least 1");
    if (a.max_k > kMaxDetTableK) throw OverBudget("det-table is limited to k <= " + std::to_string(kMaxDetTableK));
    for (const auto& d : det_table(a.max_k)) text << to_canonical_string(d) << '\n';
  } else if (a.kind == "fibonomial-triangle") {
    if (!a.args.empty()) throw UsageError("fibonomial-triangle takes --rows only");
    if (a.rows < 0) throw UsageError("--rows must be nonnegative");
    if (a.rows > kMaxTriangleRows) {
      throw OverBudget("fibonomial-triangle is limited to " + std::to_string(kMaxTriangleRows) + " rows");
    }
    // Space-separated when every entry is a number, comma-separated otherwise.
    std::vector<std::vector<std::string>> rows;
    bool numeric = true;
    for (int n = 0; n <= a.rows; ++n) {
      auto& row = rows.emplace_back();
      for (int k = 0; k <= n; ++k) {
        row.push_back(evaluate_text(PolyFraction{fibonomial(n, k)}, a.at));
        numeric = numeric && row.back().find_first_not_of("-0123456789/") == std::string::npos;
      }
    }
    for (const auto& row : rows) text << join(row, numeric ? " " : ", ") << '\n';
  } else if (a.kind == "hoggatt-charpoly") {
    expect_args(a.kind, a.args, 1);
    const int n = to_int(a.args[0]);
    if (n < 1) throw UsageError("hoggatt-charpoly needs n >= 1");
    if (n > kMaxHoggattN) throw OverBudget("hoggatt-charpoly is limited to n <= " + std::to_string(kMaxHoggattN));
    text << to_canonical_string(charpoly(hoggatt(n))) << '\n';
  } else {
    throw UsageError("unknown table '" + a.kind + "'");
  }
  return text.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with q-Fibonacci polynomials", "qfib"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Print a sequence value");
  eval_cmd->add_option("kind", eval_args.kind, "fib | lucas | qfib | qfib-explicit | qfib-neg-closed | gf")
      ->required();
  eval_cmd->add_option("args", eval_args.args, "n, or ORDER_S ORDER_Q for gf");
  eval_cmd->add_option("--shift", eval_args.shift, "qfib: evaluate at q^shift s");
  eval_cmd->add_option("--out", eval_args.out, "Write output to a file");

  CoeffArgs coeff_args;
  auto* coeff_cmd = app.add_subcommand("coeff", "Print a binomial-type coefficient or product");
  coeff_cmd
      ->add_option("kind", coeff_args.kind,
                   "qbinom | fibonomial | fibonomial-ell | qfibonomial | qfibonomial-ell | fac | fac-classical | "
                   "binom-product")
      ->required();
  coeff_cmd->add_option("args", coeff_args.args, "Integer arguments");
  coeff_cmd->add_option("--shift", coeff_args.shift, "fac: evaluate at q^shift s");
  coeff_cmd->add_option("--ell", coeff_args.ell, "Stride for the -ell kinds and fac");
  coeff_cmd->add_option("--at", coeff_args.at, "Evaluation point, e.g. x=1,s=1");
  coeff_cmd->add_option("--out", coeff_args.out, "Write output to a file");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check catalog identities over parameter grids");
  verify_cmd->add_option("ids", verify_args.ids, "Identity ids, or 'all'")->required();
  const std::vector<std::pair<std::string, std::string>> range_flags = {
      {"--n", "n"}, {"--k", "k"}, {"--ell", "ell"}, {"--m", "m"}, {"--N", "N"},
      {"--order-s", "order_s"}, {"--order-q", "order_q"}};
  std::map<std::string, std::string> range_text;
  for (const auto& [flag, name] : range_flags) {
    verify_cmd->add_option(flag, range_text[name], "Range a..b for " + name);
  }
  verify_cmd->add_option("--max-k", verify_args.max_k, "Upper bound on k");
  verify_cmd->add_option("--max-ell", verify_args.max_ell, "Upper bound on ell");
  verify_cmd->add_flag("--fit", verify_args.fit, "Fit a monomial correction to failing cells");
  verify_cmd->add_flag("--fit-ok", verify_args.fit_ok, "Count fitted cells as passing");
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads");
  verify_cmd->add_flag("--timings", verify_args.timings, "Record per-cell wall time");
  verify_cmd->add_option("--format", verify_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", verify_args.out, "Write the report to a file");

  TablesArgs tables_args;
  auto* tables_cmd = app.add_subcommand("tables", "Print reference tables");
  tables_cmd->add_option("kind", tables_args.kind, "det-table | fibonomial-triangle | hoggatt-charpoly")
      ->required();
  tables_cmd->add_option("args", tables_args.args, "n for hoggatt-charpoly");
  tables_cmd->add_option("--max-k", tables_args.max_k, "det-table: largest k");
  tables_cmd->add_option("--rows", tables_args.rows, "fibonomial-triangle: last row");
  tables_cmd->add_option("--at", tables_args.at, "fibonomial-triangle: evaluation point");
  tables_cmd->add_option("--golden", tables_args.golden, "Compare against a golden file");
  tables_cmd->add_option("--out", tables_args.out, "Write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qfib: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*eval_cmd) {
      emit(run_eval(eval_args), eval_args.out, out);
      return kExitOk;
    }
    if (*coeff_cmd) {
      emit(run_coeff(coeff_args), coeff_args.out, out);
      return kExitOk;
    }
    if (*verify_cmd) {
      for (const auto& [name, text] : range_text) {
        if (!text.empty()) verify_args.ranges[name] = text;
      }
      return run_verify(verify_args, out);
    }
    const std::string table = run_tables(tables_args);
    emit(table, tables_args.out, out);
    if (tables_args.golden) {
      const std::string diff = golden_diff(table, *tables_args.golden);
      if (!diff.empty()) {
        err << "golden mismatch against " << *tables_args.golden << ":\n" << diff;
        return kExitFailure;
      }
    }
    return kExitOk;
  } catch (const OverBudget& e) {
    err << "qfib: over budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    // UsageError, UnknownIdentity, BadParams and ParseError all land here.
    err << "qfib: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qfib: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace qfib
