#include "traceless/lr.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace traceless {

namespace {

// One skew cell (row, column), 1-based, listed in reverse reading order:
// rows top to bottom, columns right to left within a row.
struct Cell {
    int row, col;
};

struct Filling {
    const std::vector<Cell>& cells;
    const Partition& beta;
    std::vector<std::vector<int>> grid;   // grid[row-1][col-1], 0 = no entry
    std::vector<int> count;               // count[v-1] = multiplicity of v so far
    long tableaux = 0;

    Filling(const std::vector<Cell>& cs, const Partition& b, int rows, int cols)
        : cells(cs), beta(b), grid(rows, std::vector<int>(cols, 0)),
          count(static_cast<size_t>(b.length()), 0) {}

    void fill(size_t k) {
        if (k == cells.size()) {
            ++tableaux;
            return;
        }
        const Cell& c = cells[k];
        int rightVal = (c.col < static_cast<int>(grid[c.row - 1].size()))
                           ? grid[c.row - 1][c.col]
                           : 0;
        int aboveVal = (c.row >= 2) ? grid[c.row - 2][c.col - 1] : 0;
        for (int v = 1; v <= beta.length(); ++v) {
            if (count[v - 1] >= beta.part(v)) continue;           // content bound
            if (rightVal != 0 && v > rightVal) continue;          // weak rows
            if (aboveVal != 0 && v <= aboveVal) continue;         // strict columns
            if (v > 1 && count[v - 1] >= count[v - 2]) continue;  // lattice word
            grid[c.row - 1][c.col - 1] = v;
            ++count[v - 1];
            fill(k + 1);
            --count[v - 1];
            grid[c.row - 1][c.col - 1] = 0;
        }
    }
};

long lr_count(const Partition& gamma, const Partition& alpha, const Partition& beta) {
    if (gamma.size() != alpha.size() + beta.size()) return 0;
    if (!contains(gamma, alpha) || !contains(gamma, beta)) return 0;
    if (beta.empty()) return 1;   // gamma == alpha at this point

    std::vector<Cell> cells;
    for (int i = 1; i <= gamma.length(); ++i)
        for (int j = gamma.part(i); j > alpha.part(i); --j) cells.push_back({i, j});

    Filling f(cells, beta, gamma.length(), gamma.part(1));
    f.fill(0);
    return f.tableaux;
}

using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
std::map<Key, long> lr_cache;
std::mutex lr_cache_mutex;

}  // namespace

long lr_coefficient(const Partition& gamma, const Partition& alpha, const Partition& beta) {
    Key key{gamma.parts(), alpha.parts(), beta.parts()};
    {
        std::lock_guard<std::mutex> lock(lr_cache_mutex);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end()) return it->second;
    }
    long value = lr_count(gamma, alpha, beta);
    std::lock_guard<std::mutex> lock(lr_cache_mutex);
    lr_cache.emplace(std::move(key), value);
    return value;
}

std::map<Partition, long> lr_expand(const Partition& alpha, const Partition& beta, int maxLen) {
    if (maxLen < 1) throw std::invalid_argument("lr_expand: maxLen must be positive");
    std::map<Partition, long> out;
    int total = alpha.size() + beta.size();
    for (const Partition& gamma : enumerate_partitions(total, maxLen)) {
        if (!contains(gamma, alpha) || !contains(gamma, beta)) continue;
        if (gamma.part(1) > alpha.part(1) + beta.part(1)) continue;
        long c = lr_coefficient(gamma, alpha, beta);
        if (c != 0) out.emplace(gamma, c);
    }
    return out;
}

long branch_coefficient(const BranchQuery& q) {
    const int N = q.capacity;
    if (N < 1) throw std::invalid_argument("branch_coefficient: N must be positive");
    if (q.rho.length() > N || q.sigma.length() > N)
        throw std::invalid_argument("branch_coefficient: rho or sigma has more than N rows");
    if (q.mu.length() + q.nu.length() > N) return 0;   // outside Lambda(N)

    Partition sigmaBar = bar(q.sigma, N);
    StaircaseClass target = staircase(q.mu, q.nu, N);
    // The unique lambda with [lambda, sigma_1] = [mu + bar(nu), nu_1] restores
    // sigma_1 - t columns of height N on the minimal representative.
    int extra = q.sigma.part(1) - target.t();
    if (extra < 0) return 0;
    std::vector<int> lambdaParts;
    for (int i = 1; i <= N; ++i) {
        int v = target.alpha().part(i) + extra;
        if (v > 0) lambdaParts.push_back(v);
    }
    Partition lambda(std::move(lambdaParts));
    return lr_coefficient(lambda, q.rho, sigmaBar);
}

long branch_upper_bound(const Partition& rho, const Partition& sigma, const Partition& mu,
                        const Partition& nu, int capacity) {
    if (capacity < 1) throw std::invalid_argument("branch_upper_bound: N must be positive");
    int r = rho.size() - mu.size();
    if (r < 0 || r != sigma.size() - nu.size()) return 0;
    Partition cap = intersect(rho, sigma);
    long total = 0;
    for (const Partition& beta : enumerate_partitions(r, std::min(r, capacity))) {
        if (!contains(cap, beta)) continue;
        long left = lr_coefficient(rho, mu, beta);
        if (left == 0) continue;
        total += left * lr_coefficient(sigma, nu, beta);
    }
    return total;
}

}  // namespace traceless
