#pragma once

#include <map>

#include "traceless/partition.hpp"

namespace traceless {

struct LRQuery {
    Partition gamma, alpha, beta;
};

struct BranchQuery {
    Partition rho, sigma;   // polynomial labels, len <= N each
    Partition mu, nu;       // rational label candidate
    int capacity = 1;       // N
};

/// Littlewood-Richardson coefficient c^gamma_{alpha,beta}: the number of
/// semistandard skew tableaux of shape gamma/alpha and content beta whose
/// reverse reading word is a lattice word. 0 when the shapes do not fit.
long lr_coefficient(const Partition& gamma, const Partition& alpha, const Partition& beta);

/// All gamma with at most maxLen rows and c^gamma_{alpha,beta} != 0, with
/// multiplicities. Keys come out in the frozen partition order.
std::map<Partition, long> lr_expand(const Partition& alpha, const Partition& beta, int maxLen);

/// Multiplicity of the rational label (mu,nu) in (rho,0) x (0,sigma) over
/// GL(N): c^lambda_{rho,bar(sigma)} for the unique lambda with at most N rows
/// whose staircase class [lambda, sigma_1] maps back to (mu,nu); 0 when no
/// such lambda occurs (including labels outside Lambda(N)).
long branch_coefficient(const BranchQuery& q);

/// Upper bound sum_{beta in P(N), beta inside rho∩sigma} c^rho_{mu,beta} *
/// c^sigma_{nu,beta}.
long branch_upper_bound(const Partition& rho, const Partition& sigma, const Partition& mu,
                        const Partition& nu, int capacity);

}  // namespace traceless
