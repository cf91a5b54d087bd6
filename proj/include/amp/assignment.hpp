#pragma once

#include <vector>

namespace amp {

/// Minimum-cost perfect assignment on a square cost matrix (Hungarian
/// algorithm with potentials, O(n^3)). match[i] = column assigned to row i.
double hungarian(const std::vector<std::vector<double>>& cost, std::vector<int>* match = nullptr);

/// Minimum over perfect matchings of the maximum edge cost, by threshold
/// search over the sorted cost values with augmenting-path feasibility.
double bottleneck_assignment(const std::vector<std::vector<double>>& cost,
                             std::vector<int>* match = nullptr);

}  // namespace amp
