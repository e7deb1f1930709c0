#pragma once

#include "trislice/kernel.hpp"

#include <string>
#include <vector>

namespace trislice {

/* One line of the verification report. detail is empty on a pass; on a
 * failure it holds the first failing location (family, index, coefficient
 * order) or the error that interrupted the check. */
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int order = 20;     // g-truncation used by every series-level check
    int k_max = 8;      // distance range of the table checks
    int y_k_max = 50;   // exact-identity range of the Y-recursion check
    int psi_m_max = 6;  // kernel table grid
    int psi_n_max = 8;
};

/* Runs the full check list in a fixed order:
 *   two-point-gluing, classical-system, kernel-recursion, slice-telescoping,
 *   tutte-quadratic, scaled-quadratic, simple-recursion, r-product,
 *   t-product, y-recursion, bridge-relations, limit-system,
 *   lambda-parametrization, sum-rule, stabilization, three-route-kernel,
 *   closed-vs-recursion.
 * Failures never throw; they are report content. */
std::vector<CheckResult> run_all_checks(const VerifyOptions& opt = {});

// Cellwise agreement of three independently built kernel tables. Exposed so a
// deliberately corrupted table can be fed in; names the first differing cell.
CheckResult three_route_check(const KernelTable& recurrence, const KernelTable& quadratic,
                              const KernelTable& explicit_route);

bool all_pass(const std::vector<CheckResult>& results);

} // namespace trislice
