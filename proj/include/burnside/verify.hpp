#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "burnside/closed_form.hpp"
#include "burnside/group.hpp"

namespace burnside {

struct CheckResult {
  std::string name;
  bool pass{false};
  std::string detail;
};

struct VerificationReport {
  GroupParams params;
  std::int64_t max_n{};
  std::vector<CheckResult> checks;
  std::chrono::milliseconds wall_time{0};

  bool all_pass() const;
};

/// Brute-force subgroup enumeration against the closed classification:
/// the subgroup set is exactly {N_i} + {M_{k,l}} + {H}, normality and
/// conjugacy-class shapes included.
CheckResult verify_subgroup_classification(const GroupParams& params);

using ClosedMulFn =
    std::function<LabelCombination(const GroupParams&, const BasisLabel&, const BasisLabel&)>;

/// Mark-based ring multiplication against the closed table on every ordered
/// pair of basis labels. The injectable table exists so tests can prove the
/// comparator rejects a corrupted coefficient.
CheckResult verify_mult_table(const GroupParams& params);
CheckResult verify_mult_table(const GroupParams& params, const ClosedMulFn& closed);

/// HNF of the generic ideal-power lattice against the closed basis, n = 1..max_n.
CheckResult verify_delta_powers(const GroupParams& params, std::int64_t max_n);

/// Generic quotients against the closed form, plus stability for n >= 2.
CheckResult verify_qn(const GroupParams& params, std::int64_t max_n);

/// All checks; independent ones run concurrently, results merged by name.
VerificationReport run_verification(const GroupParams& params, std::int64_t max_n);

/// 0 when every check passed, 1 otherwise.
int report_exit_code(const VerificationReport& report);

}  // namespace burnside
