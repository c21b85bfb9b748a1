#pragma once

#include "traceless/tensor.hpp"

namespace traceless {

/// Non-degenerate hermitian metric g on V, with its exact or numeric inverse.
/// Conventions are fixed by the identification e-bar_j = g_{jk} e^k of the
/// conjugate basis with the dual one:
///   - the metric trace over a slot pair contracts with g's first index on
///     the conjugate slot: sum_{p,q} g(q,p) t^{..p..|..q..},
///   - the inserted invariant carries the inverse metric with the
///     contravariant index first: gInv(p,q) at slots (p | q).
/// At g = Id everything collapses to the plain trace and Kronecker delta.
template <class S>
class HermitianMetric {
  public:
    explicit HermitianMetric(DenseMatrix<S> g, double tol = 1e-12) : g_(std::move(g)) {
        if (g_.rows() != g_.cols() || g_.rows() < 1)
            throw std::invalid_argument("hermitian metric: not square");
        for (int i = 0; i < g_.rows(); ++i)
            for (int j = 0; j < g_.cols(); ++j) {
                S diff = g_(i, j) - scalar_traits<S>::conjugate(g_(j, i));
                if (!scalar_traits<S>::is_zero(diff, tol))
                    throw std::invalid_argument("hermitian metric: g != g^dagger");
            }
        inv_ = invert_matrix(g_);   // throws math_error("singular matrix")
    }

    int N() const { return static_cast<int>(g_.rows()); }
    const DenseMatrix<S>& g() const { return g_; }
    const DenseMatrix<S>& inverse() const { return inv_; }

  private:
    DenseMatrix<S> g_;
    DenseMatrix<S> inv_;
};

/// Metric contraction of the a-th contravariant with the b'-th conjugate slot.
template <class S>
DenseTensor<S> hermitian_trace(const DenseTensor<S>& t, const HermitianMetric<S>& gm, int a,
                               int bp) {
    detail::check_trace_slots(t.m(), t.n(), a, bp);
    if (gm.N() != t.N()) throw std::invalid_argument("hermitian_trace: metric size mismatch");
    const int sa = a - 1, sb = t.m() + bp - 1;
    DenseTensor<S> out(t.m() - 1, t.n() - 1, t.N());
    std::vector<int> od, id;
    for (std::size_t f = 0; f < out.dim(); ++f) {
        out.decode(f, od);
        id.assign(od.begin(), od.end());
        id.insert(id.begin() + sa, 0);
        id.insert(id.begin() + sb, 0);
        S sum = scalar_traits<S>::zero();
        for (int p = 0; p < t.N(); ++p)
            for (int q = 0; q < t.N(); ++q) {
                id[sa] = p;
                id[sb] = q;
                sum += gm.g()(q, p) * t[t.encode(id)];
            }
        out[f] = sum;
    }
    return out;
}

template <class S>
DenseTensor<S> hermitian_insert(const DenseTensor<S>& t, const HermitianMetric<S>& gm, int a,
                                int bp, int m, int n) {
    detail::check_trace_slots(m, n, a, bp);
    if (t.m() != m - 1 || t.n() != n - 1)
        throw std::invalid_argument("hermitian_insert: input shape must be (m-1, n-1)");
    const int sa = a - 1, sb = m + bp - 1;
    DenseTensor<S> out(m, n, t.N());
    std::vector<int> od, id;
    for (std::size_t f = 0; f < out.dim(); ++f) {
        out.decode(f, od);
        S coeff = gm.inverse()(od[sa], od[sb]);
        if (scalar_traits<S>::is_zero(coeff, 0.0)) continue;
        id.assign(od.begin(), od.end());
        id.erase(id.begin() + sb);
        id.erase(id.begin() + sa);
        out[f] = coeff * t[t.encode(id)];
    }
    return out;
}

template <class S>
DenseTensor<S> hermitian_tau(const DenseTensor<S>& t, const HermitianMetric<S>& gm, int a,
                             int bp) {
    return hermitian_insert(hermitian_trace(t, gm, a, bp), gm, a, bp, t.m(), t.n());
}

template <class S>
DenseTensor<S> hermitian_operator_a_apply(const DenseTensor<S>& t,
                                          const HermitianMetric<S>& gm) {
    DenseTensor<S> out(t.m(), t.n(), t.N());
    for (int a = 1; a <= t.m(); ++a)
        for (int bp = 1; bp <= t.n(); ++bp) out += hermitian_tau(t, gm, a, bp);
    return out;
}

/// Same factor sequence as apply_projector, with every arc contraction and
/// insertion carried out through the metric.
template <class S>
DenseTensor<S> apply_projector_hermitian(const DenseTensor<S>& t, const HermitianMetric<S>& gm,
                                         const std::vector<long>& factors) {
    DenseTensor<S> cur = t;
    for (long a : factors) {
        if (a == 0) throw math_error("apply_projector_hermitian: zero eigenvalue in factors");
        S inv = scalar_traits<S>::from_rational(Rational(1) / Rational(a));
        cur -= hermitian_operator_a_apply(cur, gm) * inv;
    }
    return cur;
}

template <class S>
DenseTensor<S> apply_projector_hermitian(const DenseTensor<S>& t, const HermitianMetric<S>& gm,
                                         const std::set<long>& spec) {
    return apply_projector_hermitian(t, gm, factor_values(spec));
}

/// Components relative to the dual basis, obtained by lowering every
/// conjugate index through the metric. Standard operations applied to the
/// result mirror the metric ones applied to the original.
template <class S>
DenseTensor<S> to_dual_basis(const DenseTensor<S>& t, const HermitianMetric<S>& gm) {
    // s^{I}_{K} = t^{I|J} g(J, K): contract each conjugate slot with g's
    // first index, i.e. apply g^T on those slots.
    DenseMatrix<S> gt = gm.g().transpose();
    DenseTensor<S> out = t;
    for (int slot = t.m(); slot < t.slots(); ++slot)
        out = apply_matrix_to_slot(out, gt, slot);
    return out;
}

template <class S>
DenseTensor<S> from_dual_basis(const DenseTensor<S>& t, const HermitianMetric<S>& gm) {
    DenseMatrix<S> ginvT = gm.inverse().transpose();
    DenseTensor<S> out = t;
    for (int slot = t.m(); slot < t.slots(); ++slot)
        out = apply_matrix_to_slot(out, ginvT, slot);
    return out;
}

}  // namespace traceless
