#include "burnside/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>

#include "burnside/closed_form.hpp"
#include "burnside/marks.hpp"
#include "burnside/ring.hpp"
#include "burnside/verify.hpp"

namespace burnside {

namespace {

using json = nlohmann::ordered_json;

constexpr std::int64_t kMaxGroupOrder = 5000;
constexpr std::int64_t kMaxPowerIndex = 32;

struct Options {
  std::int64_t p{0};
  std::int64_t m{0};
  std::int64_t n{1};
  std::int64_t max_n{6};
  std::string json_path;
};

void add_common_options(CLI::App* cmd, Options& opts, bool with_n, bool with_max_n) {
  cmd->add_option("--p", opts.p, "odd prime p")->required();
  cmd->add_option("--m", opts.m, "exponent m; the group has order p^(m+1)")->required();
  if (with_n)
    cmd->add_option("--n", opts.n, "ideal power index")
        ->check(CLI::Range(std::int64_t{1}, kMaxPowerIndex));
  if (with_max_n)
    cmd->add_option("--max-n", opts.max_n, "largest ideal power index (default 6)")
        ->check(CLI::Range(std::int64_t{1}, kMaxPowerIndex));
  cmd->add_option("--json", opts.json_path, "also write a JSON report to this path");
}

std::int64_t group_order(const Options& opts) {
  std::int64_t order = 1;
  for (std::int64_t i = 0; i <= opts.m; ++i) {
    if (order > kMaxGroupOrder) break;
    order *= opts.p;
  }
  return order;
}

// Validates parameters shared by every subcommand; emits the m = 2 warning.
// Returns nullopt (plus a message on err) when the request must be rejected.
std::optional<GroupParams> checked_params(const Options& opts, bool needs_closed_forms,
                                          std::ostream& err) {
  if (!is_odd_prime(opts.p)) {
    err << "error: p must be an odd prime\n";
    return std::nullopt;
  }
  if (opts.m < 2) {
    err << "error: m must be at least 2\n";
    return std::nullopt;
  }
  if (needs_closed_forms && opts.m < 3) {
    err << "error: this subcommand compares against closed forms and requires m >= 3\n";
    return std::nullopt;
  }
  if (group_order(opts) > kMaxGroupOrder) {
    err << "error: group order p^(m+1) exceeds the supported enumeration range ("
        << kMaxGroupOrder << ")\n";
    return std::nullopt;
  }
  if (!needs_closed_forms && opts.m == 2)
    err << "warning: m = 2 is outside the closed-form theorems; generic pipeline only\n";
  return GroupParams(opts.p, opts.m);
}

json params_json(const GroupParams& params) {
  return json{{"p", params.p}, {"m", params.m}};
}

json checks_json(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const CheckResult& c : checks)
    arr.push_back(json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  return arr;
}

json matrix_json(const MatZ& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json invariants_json(const AbelianInvariants& inv) {
  json divisors = json::array();
  for (const Int& d : inv.divisors) divisors.push_back(d.get_str());
  return json{{"divisors", std::move(divisors)}, {"free_rank", inv.free_rank}};
}

bool write_report(const std::string& path, const json& report, std::ostream& err) {
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot write JSON report to " << path << "\n";
    return false;
  }
  file << report.dump(2) << "\n";
  return true;
}

int finish(const Options& opts, const GroupParams& params, const std::vector<CheckResult>& checks,
           json results, std::optional<std::int64_t> wall_time_ms, std::ostream& err) {
  if (!opts.json_path.empty()) {
    json report{{"params", params_json(params)},
                {"checks", checks_json(checks)},
                {"results", std::move(results)}};
    if (wall_time_ms) report["wall_time_ms"] = *wall_time_ms;
    if (!write_report(opts.json_path, report, err)) return 2;
  }
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  return ok ? 0 : 1;
}

// Class labels for display: closed-form names when available, otherwise a
// generic placeholder.
std::vector<std::string> class_labels(const GroupParams& params, const ConjugacyClassTable& classes) {
  std::vector<std::string> labels;
  if (params.m >= 3) {
    const LabelAlignment alignment = label_alignment(params, classes);
    for (Index c = 0; c < classes.size(); ++c) labels.push_back(alignment.label_of(c).str());
    return labels;
  }
  for (Index c = 0; c < classes.size(); ++c) {
    std::ostringstream os;
    os << "class_" << c;
    labels.push_back(os.str());
  }
  return labels;
}

int cmd_subgroups(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto params = checked_params(opts, false, err);
  if (!params) return 2;
  const FiniteGroup group = FiniteGroup::modular(*params);
  const auto subgroups = enumerate_subgroups(group);
  const auto classes = conjugacy_classes_of_subgroups(group, subgroups);
  const auto labels = class_labels(*params, classes);

  out << "group " << group.name() << ", order " << group.order() << "\n";
  out << subgroups.size() << " subgroups in " << classes.size() << " conjugacy classes\n";
  json class_array = json::array();
  for (Index c = 0; c < classes.size(); ++c) {
    const auto& cls = classes.classes[static_cast<std::size_t>(c)];
    const Subgroup& rep = classes.representatives[static_cast<std::size_t>(c)];
    out << "  " << std::setw(12) << labels[static_cast<std::size_t>(c)] << "  order "
        << std::setw(5) << rep.order() << "  class size " << cls.size() << "  rep {";
    for (std::size_t i = 0; i < rep.elements.size(); ++i) {
      if (i) out << ", ";
      if (i == 6 && rep.elements.size() > 7) {
        out << "...";
        break;
      }
      out << group.format(rep.elements[i]);
    }
    out << "}\n";

    json members = json::array();
    for (const Element e : rep.elements) members.push_back(json::array({e.u, e.v}));
    class_array.push_back(json{{"label", labels[static_cast<std::size_t>(c)]},
                               {"order", rep.order()},
                               {"size", cls.size()},
                               {"representative", std::move(members)}});
  }
  json results{{"subgroup_count", subgroups.size()},
               {"class_count", classes.size()},
               {"classes", std::move(class_array)}};
  return finish(opts, *params, {}, std::move(results), std::nullopt, err);
}

int cmd_marks(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto params = checked_params(opts, false, err);
  if (!params) return 2;
  const FiniteGroup group = FiniteGroup::modular(*params);
  const MarksTable table = table_of_marks(group);
  const auto labels = class_labels(*params, table.classes);

  out << "table of marks of " << group.name() << " (" << table.size() << " classes)\n";
  std::size_t width = 3;
  for (Index i = 0; i < table.size(); ++i)
    for (Index j = 0; j < table.size(); ++j)
      width = std::max(width, table.marks(i, j).get_str().size() + 1);
  for (Index i = 0; i < table.size(); ++i) {
    out << "  " << std::setw(12) << labels[static_cast<std::size_t>(i)] << " |";
    for (Index j = 0; j < table.size(); ++j)
      out << std::setw(static_cast<int>(width)) << table.marks(i, j).get_str();
    out << "\n";
  }
  json results{{"class_labels", labels}, {"marks", matrix_json(table.marks)}};
  return finish(opts, *params, {}, std::move(results), std::nullopt, err);
}

int cmd_delta(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto params = checked_params(opts, false, err);
  if (!params) return 2;
  const FiniteGroup group = FiniteGroup::modular(*params);
  const MarksTable table = table_of_marks(group);
  const IdealLatticeBasis basis = ideal_power(table, opts.n);

  out << "Delta^" << opts.n << "(" << group.name() << "): HNF basis over " << basis.basis.rows()
      << " proper classes\n";
  std::size_t width = 3;
  for (Index i = 0; i < basis.basis.rows(); ++i)
    for (Index j = 0; j < basis.basis.cols(); ++j)
      width = std::max(width, basis.basis(i, j).get_str().size() + 1);
  for (Index i = 0; i < basis.basis.rows(); ++i) {
    out << "  ";
    for (Index j = 0; j < basis.basis.cols(); ++j)
      out << std::setw(static_cast<int>(width)) << basis.basis(i, j).get_str();
    out << "\n";
  }
  json results{{"n", opts.n}, {"basis", matrix_json(basis.basis)}};
  return finish(opts, *params, {}, std::move(results), std::nullopt, err);
}

int cmd_qn(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto params = checked_params(opts, false, err);
  if (!params) return 2;
  const FiniteGroup group = FiniteGroup::modular(*params);
  const MarksTable table = table_of_marks(group);
  const AbelianInvariants inv = quotient_qn(table, opts.n);

  out << "Q_" << opts.n << "(" << group.name() << ") = " << format_abelian(inv) << "\n";
  json results{{"n", opts.n}, {"invariants", invariants_json(inv)}};
  return finish(opts, *params, {}, std::move(results), std::nullopt, err);
}

int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto params = checked_params(opts, true, err);
  if (!params) return 2;
  const VerificationReport report = run_verification(*params, opts.max_n);

  out << "verify H(" << params->p << "," << params->m << "), max-n " << opts.max_n << "\n";
  for (const CheckResult& c : report.checks)
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
  out << (report.all_pass() ? "all checks passed" : "verification FAILED") << " in "
      << report.wall_time.count() << " ms\n";

  json results{{"status", report.all_pass() ? "pass" : "fail"}, {"max_n", opts.max_n}};
  return finish(opts, *params, report.checks, std::move(results), report.wall_time.count(), err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Burnside-ring computations for the modular p-groups H(p,m)"};
  app.require_subcommand(1);

  Options opts;
  CLI::App* subgroups = app.add_subcommand("subgroups", "enumerate subgroups and conjugacy classes");
  add_common_options(subgroups, opts, false, false);
  CLI::App* marks = app.add_subcommand("marks", "print the table of marks");
  add_common_options(marks, opts, false, false);
  CLI::App* delta = app.add_subcommand("delta", "HNF basis of the n-th augmentation ideal power");
  add_common_options(delta, opts, true, false);
  CLI::App* qn = app.add_subcommand("qn", "structure of the quotient Delta^n/Delta^(n+1)");
  add_common_options(qn, opts, true, false);
  CLI::App* verify =
      app.add_subcommand("verify", "compare the generic pipeline with the closed-form results");
  add_common_options(verify, opts, false, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (subgroups->parsed()) return cmd_subgroups(opts, out, err);
    if (marks->parsed()) return cmd_marks(opts, out, err);
    if (delta->parsed()) return cmd_delta(opts, out, err);
    if (qn->parsed()) return cmd_qn(opts, out, err);
    if (verify->parsed()) return cmd_verify(opts, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand given\n";
  return 2;
}

}  // namespace burnside
