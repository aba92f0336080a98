#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qzeta {

struct CheckResult {
    std::string name;
    bool pass = false;
    long first_fail_index = -1;  // first differing q-exponent, when meaningful
    std::string detail;
};

struct VerifyOptions {
    std::size_t scalar_order = 30;  // single and double sums
    std::size_t sum_order = 30;     // the heavy T-sum identities
    int oracle_depth = 5;
    /// Name of a check whose expected value is deliberately corrupted, to
    /// exercise failure reporting; empty in normal operation.
    std::string inject_fault;
};

/// Scalar q-zeta relations: bracket/Okounkov identities, Eisenstein series
/// forms, double-sum evaluations, the recognizer round trip.
std::vector<CheckResult> verify_qzeta(const VerifyOptions& opts);

/// The nested-sum identity chain: Theta_2, the sum-family relations, the
/// direct-vs-symbolic reduced series, Chern character assemblies.
std::vector<CheckResult> verify_hilbert(const VerifyOptions& opts);

/// Fock-space cross-checks: commutation relations, comultiplication,
/// partition-series traces, closed-form trace agreement.
std::vector<CheckResult> verify_oracle(const VerifyOptions& opts);

/// Only the commutation-relation identities from the oracle suite.
std::vector<CheckResult> verify_oracle_commutators(const VerifyOptions& opts);

/// All three suites, results sorted by check name.
std::vector<CheckResult> verify_all(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qzeta
