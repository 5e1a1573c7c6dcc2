#pragma once

// Verification suite: every closed form, generating function and integral
// identity checked against enumeration and independent oracles over small
// parameter grids.

#include "youngbook/combinat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace youngbook {

enum class CaseStatus { Pass, Fail, Erratum };

std::string to_string(CaseStatus status);

struct VerifyCase {
    std::string identity;
    std::string check;
    std::string params;
    std::string lhs;
    std::string rhs;
    CaseStatus status = CaseStatus::Pass;
    std::string note;
};

struct VerifyOptions {
    int max_n = 3;
    int max_m = 2;
    int max_rs = 2;
    /// Books up to this many cells are also enumerated by backtracking.
    std::size_t cell_budget = kDefaultCellBudget;
    std::uint64_t state_budget = kDefaultStateBudget;
    /// Largest Selberg alphabet used by the permutation checks.
    int max_alphabet = 10;
};

struct VerifyReport {
    std::vector<VerifyCase> cases;

    std::size_t count(CaseStatus status) const;
    /// True when no case failed; erratum findings count as passing.
    bool passed() const;
};

/// Names accepted by run_verification, in execution order.
const std::vector<std::string>& identity_names();
bool is_identity_name(const std::string& name);

/// Runs one identity, or every identity for "all". Throws ArgumentError for
/// an unknown name.
VerifyReport run_verification(const std::string& name, const VerifyOptions& options);

}  // namespace youngbook
