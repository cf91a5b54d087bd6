#include "amp/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace amp {

static constexpr double kInf = std::numeric_limits<double>::infinity();

double hungarian(const std::vector<std::vector<double>>& cost, std::vector<int>* match) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) {
        if (match) match->clear();
        return 0;
    }
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("hungarian: not square");

    // 1-based arrays; p[j] = row matched to column j
    std::vector<double> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    if (match) {
        match->assign(n, -1);
        for (int j = 1; j <= n; ++j) (*match)[p[j] - 1] = j - 1;
    }
    double total = 0;
    for (int j = 1; j <= n; ++j) total += cost[p[j] - 1][j - 1];
    return total;
}

// Kuhn's augmenting paths restricted to edges with cost <= threshold.
static bool try_augment(const std::vector<std::vector<double>>& cost, double threshold, int row,
                        std::vector<int>& col_match, std::vector<bool>& visited) {
    const int n = static_cast<int>(cost.size());
    for (int j = 0; j < n; ++j) {
        if (visited[j] || cost[row][j] > threshold) continue;
        visited[j] = true;
        if (col_match[j] < 0 || try_augment(cost, threshold, col_match[j], col_match, visited)) {
            col_match[j] = row;
            return true;
        }
    }
    return false;
}

static bool feasible(const std::vector<std::vector<double>>& cost, double threshold,
                     std::vector<int>* col_match_out) {
    const int n = static_cast<int>(cost.size());
    std::vector<int> col_match(n, -1);
    for (int i = 0; i < n; ++i) {
        std::vector<bool> visited(n, false);
        if (!try_augment(cost, threshold, i, col_match, visited)) return false;
    }
    if (col_match_out) *col_match_out = std::move(col_match);
    return true;
}

double bottleneck_assignment(const std::vector<std::vector<double>>& cost, std::vector<int>* match) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) {
        if (match) match->clear();
        return 0;
    }
    std::set<double> values;
    for (const auto& row : cost) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("bottleneck_assignment: not square");
        values.insert(row.begin(), row.end());
    }
    std::vector<double> cand(values.begin(), values.end());

    int lo = 0, hi = static_cast<int>(cand.size()) - 1;
    if (!feasible(cost, cand[hi], nullptr))
        throw std::logic_error("bottleneck_assignment: no perfect matching");
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (feasible(cost, cand[mid], nullptr))
            hi = mid;
        else
            lo = mid + 1;
    }

    if (match) {
        std::vector<int> col_match;
        feasible(cost, cand[lo], &col_match);
        match->assign(n, -1);
        for (int j = 0; j < n; ++j)
            if (col_match[j] >= 0) (*match)[col_match[j]] = j;
    }
    return cand[lo];
}

}  // namespace amp
