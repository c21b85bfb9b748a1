#include "traceless/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "traceless/lr.hpp"
#include "traceless/rational.hpp"

namespace traceless {

namespace {

void check_request(const SpectrumRequest& req) {
    if (req.m < 1 || req.n < 1 || req.N < 1)
        throw std::invalid_argument("spectrum request: m, n, N must be positive");
}

// Eigenvalues contributed by one pair (rho, sigma).
void collect_pair(const Partition& rho, const Partition& sigma, int N, std::set<long>& out) {
    Partition sigmaBar = bar(sigma, N);
    for (const auto& [lambda, coeff] : lr_expand(rho, sigmaBar, N)) {
        (void)coeff;
        RationalLabel label = staircase_inverse(StaircaseClass(lambda, sigma.part(1), N));
        int r = rho.size() - label.mu.size();
        long value = static_cast<long>(N) * r + (content(rho) - content(label.mu)) +
                     (content(sigma) - content(label.nu));
        out.insert(value);
    }
}

}  // namespace

std::set<long> spec_a(const SpectrumRequest& req) {
    check_request(req);
    std::set<long> out;
    for (const Partition& rho : enumerate_partitions(req.m, std::min(req.m, req.N)))
        for (const Partition& sigma : enumerate_partitions(req.n, std::min(req.n, req.N)))
            collect_pair(rho, sigma, req.N, out);
    return out;
}

std::set<long> restricted_spec(const Partition& rho, const Partition& sigma,
                               const SpectrumRequest& req) {
    check_request(req);
    if (rho.size() != req.m || sigma.size() != req.n)
        throw std::invalid_argument("restricted_spec: |rho| != m or |sigma| != n");
    if (rho.length() > req.N || sigma.length() > req.N)
        throw std::invalid_argument("restricted_spec: more than N rows");
    std::set<long> out;
    collect_pair(rho, sigma, req.N, out);
    return out;
}

std::set<long> restricted_spec_union(const std::vector<std::pair<Partition, Partition>>& pairs,
                                     const SpectrumRequest& req) {
    std::set<long> out;
    for (const auto& [rho, sigma] : pairs) {
        std::set<long> one = restricted_spec(rho, sigma, req);
        out.insert(one.begin(), one.end());
    }
    return out;
}

std::set<long> spec_a_tilde(const SpectrumRequest& req) {
    check_request(req);
    const int N = req.N;
    std::set<std::pair<int, long>> seen;   // (r, content part) before evaluation
    for (int r = 0; r <= std::min(req.m, req.n); ++r) {
        for (const RationalLabel& label : enumerate_lambda(req.m, req.n, r, N)) {
            for (const Partition& rho : enumerate_partitions(req.m, std::min(req.m, N))) {
                if (!contains(rho, label.mu)) continue;
                for (const Partition& sigma : enumerate_partitions(req.n, std::min(req.n, N))) {
                    if (!contains(sigma, label.nu)) continue;
                    long c = (content(rho) - content(label.mu)) +
                             (content(sigma) - content(label.nu));
                    if (seen.count({r, c})) continue;
                    if (branch_upper_bound(rho, sigma, label.mu, label.nu, N) != 0)
                        seen.insert({r, c});
                }
            }
        }
    }
    std::set<long> out;
    for (const auto& [r, c] : seen) {
        long value = static_cast<long>(N) * r + c;
        if (value >= 0) out.insert(value);
    }
    return out;
}

bool is_saturated(int m, int n, int N) {
    if (m < 1 || n < 1 || N < 1) throw std::invalid_argument("is_saturated: bad arguments");
    if (N >= m + n - 1) return true;
    if (m == 1 && n >= 2 && N <= n - 1) return true;
    if (m >= 2 && n == 1 && N <= m - 1) return true;
    if (m >= 2 && n >= 2 && N == 1) return true;
    return false;
}

std::set<AffineEigenvalue> wb_spec_a(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("wb_spec_a: m, n must be positive");
    std::set<AffineEigenvalue> out;
    for (int r = 0; r <= std::min(m, n); ++r) {
        for (const Partition& mu : enumerate_partitions(m - r, m - r)) {
            for (const Partition& nu : enumerate_partitions(n - r, n - r)) {
                for (const Partition& rho : enumerate_partitions(m, m)) {
                    if (!contains(rho, mu)) continue;
                    for (const Partition& sigma : enumerate_partitions(n, n)) {
                        if (!contains(sigma, nu)) continue;
                        long c = (content(rho) - content(mu)) + (content(sigma) - content(nu));
                        if (out.count({r, c})) continue;
                        // beta runs over all partitions inside rho∩sigma here,
                        // with no row bound.
                        if (branch_upper_bound(rho, sigma, mu, nu, std::max(m, n)) != 0)
                            out.insert({r, c});
                    }
                }
            }
        }
    }
    return out;
}

std::vector<ProjectorFactor> projector_factors(const std::set<long>& spec, bool zeroExcluded) {
    if (!zeroExcluded && spec.count(0))
        throw math_error("projector_factors: spectrum contains 0 and zero is not excluded");
    std::vector<ProjectorFactor> out;
    for (auto it = spec.rbegin(); it != spec.rend(); ++it) {
        if (*it == 0) continue;
        out.push_back({*it, "1 - A/" + std::to_string(*it)});
    }
    return out;
}

}  // namespace traceless
