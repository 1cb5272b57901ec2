#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmlines/betweenness.hpp"
#include "qmlines/distance_matrix.hpp"

namespace qmlines {

/// One checked claim: a PASS/FAIL verdict plus the computed evidence.
struct ClaimCheck {
    std::string id;
    std::string claim;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> facts;
};

struct ClaimInputs {
    DistanceMatrix q4;              // the four-point space without DBE
    Betweenness q4_betweenness;     // its expected betweenness, on q4's labels
    int threads = 1;
    std::vector<std::string> only;  // check ids to run; empty runs all
};

/// The embedded fixtures.
ClaimInputs default_claim_inputs();

/// Ids of every check, in run order.
std::vector<std::string> claim_ids();

/// Runs the selected checks in a fixed order. Throws std::invalid_argument
/// for an unknown id in inputs.only.
std::vector<ClaimCheck> verify_claims(const ClaimInputs& inputs);

inline bool all_pass(const std::vector<ClaimCheck>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace qmlines
