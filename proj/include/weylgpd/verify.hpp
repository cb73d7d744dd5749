#pragma once

#include "weylgpd/cartan_graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weylgpd {

struct CheckResult {
    std::string suite; // module the invariant belongs to
    std::string name;
    bool passed = false;
    std::string detail; // first counterexample when failed
};

struct VerifyOptions {
    /// Longest word used by the canonical-form faithfulness check; 0 means
    /// the maximal length in the groupoid.
    std::size_t faithfulness_max_length = 0;
    std::uint64_t seed = 20240601;
    std::size_t random_triples = 64;
};

/// Runs every invariant of every module on g. Throws only if g itself has no
/// finite root system (BudgetExceeded).
std::vector<CheckResult> run_verification(const SemiCartanGraph &g, const VerifyOptions &opts = {});

} // namespace weylgpd
