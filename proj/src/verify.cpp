#include "burnside/verify.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "burnside/marks.hpp"
#include "burnside/ring.hpp"

namespace burnside {

namespace {

CheckResult fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name, std::string detail) {
  return CheckResult{std::move(name), true, std::move(detail)};
}

void require_closed_form_range(const GroupParams& params) {
  if (params.m < 3) throw UnsupportedParamsError("verification requires m >= 3");
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

CheckResult verify_subgroup_classification(const GroupParams& params) {
  const std::string name = "subgroup_classification";
  require_closed_form_range(params);
  const FiniteGroup group = FiniteGroup::modular(params);

  std::set<Subgroup> expected;
  std::set<Subgroup> normal_expected;
  for (std::int64_t i = 0; i <= params.m; ++i) {
    expected.insert(subgroup_N(params, i));
    normal_expected.insert(subgroup_N(params, i));
  }
  for (std::int64_t k = 1; k <= params.m; ++k)
    for (std::int64_t l = 0; l < params.p; ++l) {
      Subgroup sub = subgroup_M(params, k, l);
      if (k <= params.m - 1) normal_expected.insert(sub);
      expected.insert(std::move(sub));
    }
  const Subgroup full{group.elements()};
  expected.insert(full);
  normal_expected.insert(full);

  const std::int64_t predicted = params.m * params.p + params.m + 2;
  if (static_cast<std::int64_t>(expected.size()) != predicted)
    return fail(name, "closed subgroup list is not free of collisions");

  const auto subgroups = enumerate_subgroups(group);
  const std::set<Subgroup> enumerated(subgroups.begin(), subgroups.end());
  if (enumerated != expected) {
    std::ostringstream os;
    os << "enumeration found " << enumerated.size() << " subgroups, closed classification lists "
       << expected.size() << ", and the sets differ";
    return fail(name, os.str());
  }

  for (const Subgroup& sub : subgroups) {
    const bool want = normal_expected.count(sub) > 0;
    if (is_normal(group, sub) != want) {
      std::ostringstream os;
      os << "normality mismatch on a subgroup of order " << sub.order();
      return fail(name, os.str());
    }
  }

  const auto classes = conjugacy_classes_of_subgroups(group, subgroups);
  std::set<Subgroup> m_class_expected;
  for (std::int64_t l = 0; l < params.p; ++l) m_class_expected.insert(subgroup_M(params, params.m, l));
  for (const auto& cls : classes.classes) {
    const std::set<Subgroup> members(cls.begin(), cls.end());
    if (members == m_class_expected) continue;
    if (cls.size() != 1) {
      std::ostringstream os;
      os << "unexpected conjugacy class of size " << cls.size() << " at order "
         << cls.front().order();
      return fail(name, os.str());
    }
  }
  const Index m_cls = classes.class_of(subgroup_M(params, params.m, 0));
  if (m_cls < 0 ||
      classes.classes[static_cast<std::size_t>(m_cls)].size() != static_cast<std::size_t>(params.p))
    return fail(name, "the M_{m,l} do not form one class of size p");

  std::ostringstream os;
  os << enumerated.size() << " subgroups matched in " << classes.size()
     << " conjugacy classes; normality and class shapes as classified";
  return pass(name, os.str());
}

CheckResult verify_mult_table(const GroupParams& params) {
  return verify_mult_table(params, [](const GroupParams& p, const BasisLabel& x,
                                      const BasisLabel& y) { return closed_mul(p, x, y); });
}

CheckResult verify_mult_table(const GroupParams& params, const ClosedMulFn& closed) {
  const std::string name = "mult_table";
  require_closed_form_range(params);
  const FiniteGroup group = FiniteGroup::modular(params);
  const MarksTable table = table_of_marks(group);
  const LabelAlignment alignment = label_alignment(params, table.classes);
  const auto labels = basis_labels(params);

  for (const BasisLabel& x : labels) {
    for (const BasisLabel& y : labels) {
      const BurnsideElement generic =
          multiply(table, basis_element(table, alignment.class_of(x)),
                   basis_element(table, alignment.class_of(y)));
      const VecZ closed_vec = alignment.vector_of(closed(params, x, y));
      if (!vector_equal(generic.coeffs, closed_vec)) {
        std::ostringstream os;
        os << "product " << x.str() << " * " << y.str() << " disagrees: closed table gives "
           << closed(params, x, y).str() << ", marks pipeline differs";
        return fail(name, os.str());
      }
    }
  }
  std::ostringstream os;
  os << labels.size() << "^2 ordered basis products agree with the closed table";
  return pass(name, os.str());
}

CheckResult verify_delta_powers(const GroupParams& params, std::int64_t max_n) {
  const std::string name = "delta_powers";
  require_closed_form_range(params);
  const FiniteGroup group = FiniteGroup::modular(params);
  const MarksTable table = table_of_marks(group);
  const LabelAlignment alignment = label_alignment(params, table.classes);
  const Index r = table.size() - 1;

  const auto chain = delta_power_chain(table, max_n);
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const auto closed = closed_delta_power_basis(params, n);
    MatZ generators(static_cast<Index>(closed.size()), r);
    for (std::size_t row = 0; row < closed.size(); ++row)
      generators.row(static_cast<Index>(row)) = alignment.ideal_vector_of(closed[row]);
    const MatZ closed_hnf = hnf_basis(generators);
    const MatZ& generic_hnf = chain[static_cast<std::size_t>(n - 1)];
    if (!matrix_equal(closed_hnf, generic_hnf)) {
      std::ostringstream os;
      os << "HNF bases of the ideal power n=" << n << " differ";
      return fail(name, os.str());
    }
  }
  std::ostringstream os;
  os << "ideal-power lattices agree with the closed bases for n=1.." << max_n;
  return pass(name, os.str());
}

CheckResult verify_qn(const GroupParams& params, std::int64_t max_n) {
  const std::string name = "qn";
  require_closed_form_range(params);
  const FiniteGroup group = FiniteGroup::modular(params);
  const MarksTable table = table_of_marks(group);

  const auto chain = delta_power_chain(table, max_n + 1);
  std::vector<AbelianInvariants> generic;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    generic.push_back(quotient_invariants(chain[static_cast<std::size_t>(n - 1)],
                                          chain[static_cast<std::size_t>(n)]));
    const AbelianInvariants closed = closed_qn(params, n);
    if (generic.back() != closed) {
      std::ostringstream os;
      os << "Q_" << n << " = " << format_abelian(generic.back()) << " but closed form gives "
         << format_abelian(closed);
      return fail(name, os.str());
    }
  }
  for (std::int64_t n = 3; n <= max_n; ++n)
    if (generic[static_cast<std::size_t>(n - 1)] != generic[1])
      return fail(name, "quotients are not stable for n >= 2");

  std::ostringstream os;
  os << "Q_n matches the closed form for n=1.." << max_n;
  if (max_n >= 2) os << " and is stable from n=2 on";
  return pass(name, os.str());
}

VerificationReport run_verification(const GroupParams& params, std::int64_t max_n) {
  const auto start = std::chrono::steady_clock::now();
  auto classification =
      std::async(std::launch::async, [&] { return verify_subgroup_classification(params); });
  auto mult = std::async(std::launch::async, [&] { return verify_mult_table(params); });
  auto powers = std::async(std::launch::async, [&] { return verify_delta_powers(params, max_n); });
  auto quotients = std::async(std::launch::async, [&] { return verify_qn(params, max_n); });

  VerificationReport report{params, max_n, {}, {}};
  report.checks.push_back(classification.get());
  report.checks.push_back(mult.get());
  report.checks.push_back(powers.get());
  report.checks.push_back(quotients.get());
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

int report_exit_code(const VerificationReport& report) { return report.all_pass() ? 0 : 1; }

}  // namespace burnside
