#pragma once

#include <optional>
#include <set>
#include <vector>

#include "traceless/tensor.hpp"

namespace traceless {

/// Exact endomorphism matrix in the standard component basis of V^{m,n}.
using OperatorMatrix = DenseMatrix<Rational>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

enum class OperatorKind { A, L, R, C };

inline constexpr std::size_t kDefaultOracleCap = 3000;

/// Matrix of A / L / R / C on V^{m,n}. Refuses dimensions above the cap.
OperatorMatrix build_operator_matrix(OperatorKind kind, int m, int n, int N,
                                     std::size_t cap = kDefaultOracleCap);

/// Matrix of the diagram action b(d) on V^{m,n}.
OperatorMatrix diagram_matrix(const WalledDiagram& d, int N,
                              std::size_t cap = kDefaultOracleCap);

/// Matrix of prod (1 - A/a) over the factor list.
OperatorMatrix projector_matrix(int m, int n, int N, const std::vector<long>& factors,
                                std::size_t cap = kDefaultOracleCap);

/// Quadratic gl_N Casimir acting by derivations through the matrix units:
/// (1/2)(E^i_j E^j_i + N E^i_i), an implementation path fully independent of
/// the tau operators.
OperatorMatrix casimir_derivation_matrix(int m, int n, int N,
                                         std::size_t cap = kDefaultOracleCap);

/// Rank over Q by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
long exact_rank(const OperatorMatrix& mat);

inline long kernel_dimension(const OperatorMatrix& mat) {
    return static_cast<long>(mat.cols()) - exact_rank(mat);
}

/// True iff prod_{a in spec} (M - a*Id) = 0 exactly.
bool annihilation_check(const OperatorMatrix& mat, const std::set<long>& spec);

/// A non-zero exact vector in ker(M - a*Id), obtained by funnelling basis
/// vectors through the complementary factors, or nullopt when a is not an
/// eigenvalue (under the hypothesis that spec annihilates M).
std::optional<RationalVector> kernel_witness(const OperatorMatrix& mat,
                                             const std::set<long>& spec, long a);

/// Rank of the span of {vec(b(d))} over all (m+n)! walled diagrams.
long bmap_rank(int m, int n, int N, std::size_t cap = 1000000);

}  // namespace traceless
