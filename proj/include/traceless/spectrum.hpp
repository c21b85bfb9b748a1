#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "traceless/partition.hpp"

namespace traceless {

struct SpectrumRequest {
    int m = 1, n = 1, N = 1;
};

/// Eigenvalue r*delta + c of the regular action of A_{m,n} in B_{m,n}(delta).
struct AffineEigenvalue {
    int r = 0;
    long c = 0;
    auto operator<=>(const AffineEigenvalue&) const = default;
};

/// The eigenvalue set of the operator A_{m,n} on V^{m,n}: run over all
/// (rho, sigma), expand s_rho * s_bar(sigma) with at most N rows, pull each
/// lambda back through the staircase bijection and collect
/// N*r + c(rho/mu) + c(sigma/nu).
std::set<long> spec_a(const SpectrumRequest& req);

/// Minimal factor set I(rho, sigma) for tensors of symmetry type (rho, sigma);
/// the loop above restricted to a single pair.
std::set<long> restricted_spec(const Partition& rho, const Partition& sigma,
                               const SpectrumRequest& req);

std::set<long> restricted_spec_union(const std::vector<std::pair<Partition, Partition>>& pairs,
                                     const SpectrumRequest& req);

/// Superset of spec_a built from the Littlewood-Richardson upper bound and
/// truncated to non-negative integers. Coincides with spec_a when
/// is_saturated(m, n, N) holds.
std::set<long> spec_a_tilde(const SpectrumRequest& req);

bool is_saturated(int m, int n, int N);

/// Spectrum of A_{m,n} acting regularly on B_{m,n}(delta) at generic delta,
/// as affine pairs (r, c) meaning r*delta + c. No row bounds anywhere.
std::set<AffineEigenvalue> wb_spec_a(int m, int n);

struct ProjectorFactor {
    long eigenvalue;
    std::string descriptor;   // e.g. "1 - A/5"
};

/// Non-zero eigenvalues in descending order, one factor per value. When
/// zeroExcluded is false a 0 in the set is an error.
std::vector<ProjectorFactor> projector_factors(const std::set<long>& spec, bool zeroExcluded);

}  // namespace traceless
