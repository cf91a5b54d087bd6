#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace amp {

/// Outcome of one catalog entry over a batch of seeded samples.
/// Normal entries pass when no sample violates the inequality; inverted
/// entries (counterexamples) pass when the recorded violation reproduces
/// with its pinned witness values.
struct CheckReport {
    std::string id;
    std::string description;
    int samples = 0;
    int failures = 0;
    bool inverted = false;
    bool passed = false;
    double max_slack = 0;                 // max of lhs - rhs over samples
    std::vector<std::string> witnesses;   // replayable JSON, one per failure (capped)
    std::string extra;                    // entry-specific JSON (counters, pinned values)

    std::string to_json() const;
};

/// Inequality-catalog ids, in a fixed order:
/// LIP, PNORM, TROP, MAG, H0-AB, QR-SHIFT, HILB-INT, WASS, SHIFT-INT, AXIOMS.
std::vector<std::string> catalog_ids();

CheckReport run_check(const std::string& id, std::uint64_t seed, int samples, int jobs = 1);

std::vector<CheckReport> run_catalog(const std::vector<std::string>& ids, std::uint64_t seed,
                                     int samples, int jobs = 1);

/// RANK-SUB, SIGMA-MONO, CTAU-MONO, MIN-AMP, CTAU-DISC. Each report is
/// inverted: it passes exactly when the recorded violation reproduces.
std::vector<CheckReport> run_counterexamples();

/// Recompute the (lhs, rhs) of a failure witness; feeding a witness back
/// must reproduce the recorded values exactly.
std::pair<double, double> replay_witness(const std::string& id, const std::string& witness_json);

}  // namespace amp
