#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "traceless/partition.hpp"
#include "traceless/rational.hpp"
#include "traceless/spectrum.hpp"
#include "traceless/walled_diagram.hpp"

namespace Eigen {
// Minimal scalar adapter; the exact complex type is only used entry-wise.
template <>
struct NumTraits<traceless::GaussianRational>
    : GenericNumTraits<traceless::GaussianRational> {
    typedef traceless::GaussianRational Real;
    typedef traceless::GaussianRational NonInteger;
    typedef traceless::GaussianRational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 200
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace traceless {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Component array of an element of V^{m,n}: N^(m+n) entries, row-major over
/// the index tuple (i_1..i_m, j_1..j_n), all indices 0-based internally.
template <class S>
class DenseTensor {
  public:
    DenseTensor(int m, int n, int N)
        : m_(m), n_(n), N_(N), comp_(checked_dim(m, n, N), scalar_traits<S>::zero()) {}

    static DenseTensor basis(int m, int n, int N, std::size_t flat) {
        DenseTensor t(m, n, N);
        t.comp_.at(flat) = scalar_traits<S>::one();
        return t;
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int N() const { return N_; }
    int slots() const { return m_ + n_; }
    std::size_t dim() const { return comp_.size(); }

    const S& operator[](std::size_t i) const { return comp_[i]; }
    S& operator[](std::size_t i) { return comp_[i]; }
    const std::vector<S>& components() const { return comp_; }
    std::vector<S>& components() { return comp_; }

    std::size_t encode(const std::vector<int>& digits) const {
        std::size_t flat = 0;
        for (int d : digits) flat = flat * N_ + static_cast<std::size_t>(d);
        return flat;
    }
    void decode(std::size_t flat, std::vector<int>& digits) const {
        digits.resize(slots());
        for (int s = slots() - 1; s >= 0; --s) {
            digits[s] = static_cast<int>(flat % N_);
            flat /= N_;
        }
    }

    friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) {
        a.check_shape(b);
        for (std::size_t i = 0; i < a.comp_.size(); ++i) a.comp_[i] += b.comp_[i];
        return a;
    }
    friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) {
        a.check_shape(b);
        for (std::size_t i = 0; i < a.comp_.size(); ++i) a.comp_[i] -= b.comp_[i];
        return a;
    }
    DenseTensor& operator+=(const DenseTensor& b) {
        check_shape(b);
        for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += b.comp_[i];
        return *this;
    }
    DenseTensor& operator-=(const DenseTensor& b) {
        check_shape(b);
        for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] -= b.comp_[i];
        return *this;
    }
    friend DenseTensor operator*(DenseTensor a, const S& c) {
        for (auto& v : a.comp_) v = v * c;
        return a;
    }

    bool operator==(const DenseTensor& b) const {
        return m_ == b.m_ && n_ == b.n_ && N_ == b.N_ && comp_ == b.comp_;
    }

    bool is_zero(double tol = 0.0) const {
        for (const auto& v : comp_)
            if (!scalar_traits<S>::is_zero(v, tol)) return false;
        return true;
    }
    double max_magnitude() const {
        double mx = 0.0;
        for (const auto& v : comp_) mx = std::max(mx, scalar_traits<S>::magnitude(v));
        return mx;
    }

    void check_shape(const DenseTensor& o) const {
        if (m_ != o.m_ || n_ != o.n_ || N_ != o.N_)
            throw std::invalid_argument("tensor shape mismatch");
    }

  private:
    static std::size_t checked_dim(int m, int n, int N) {
        if (m < 0 || n < 0 || N < 1) throw std::invalid_argument("bad tensor shape");
        std::size_t d = 1;
        for (int i = 0; i < m + n; ++i) {
            if (d > (static_cast<std::size_t>(1) << 52) / static_cast<std::size_t>(N))
                throw std::invalid_argument("tensor dimension overflow");
            d *= static_cast<std::size_t>(N);
        }
        return d;
    }

    int m_, n_, N_;
    std::vector<S> comp_;
};

namespace detail {
inline void check_trace_slots(int m, int n, int a, int bp) {
    if (m < 1 || n < 1) throw std::invalid_argument("trace: needs m, n >= 1");
    if (a < 1 || a > m || bp < 1 || bp > n)
        throw std::invalid_argument("trace: slot index out of range");
}
}  // namespace detail

/// Contraction of the a-th contravariant with the b'-th covariant slot.
template <class S>
DenseTensor<S> trace(const DenseTensor<S>& t, int a, int bp) {
    detail::check_trace_slots(t.m(), t.n(), a, bp);
    const int sa = a - 1, sb = t.m() + bp - 1;
    DenseTensor<S> out(t.m() - 1, t.n() - 1, t.N());
    std::vector<int> od, id;
    for (std::size_t f = 0; f < out.dim(); ++f) {
        out.decode(f, od);
        id.assign(od.begin(), od.end());
        id.insert(id.begin() + sa, 0);
        id.insert(id.begin() + sb, 0);
        S sum = scalar_traits<S>::zero();
        for (int k = 0; k < t.N(); ++k) {
            id[sa] = k;
            id[sb] = k;
            sum += t[t.encode(id)];
        }
        out[f] = sum;
    }
    return out;
}

/// Insertion at positions (a, b'): multiplies by a Kronecker delta in the new
/// slots. Input has shape (m-1, n-1) relative to the (m, n) result.
template <class S>
DenseTensor<S> insert(const DenseTensor<S>& t, int a, int bp, int m, int n) {
    detail::check_trace_slots(m, n, a, bp);
    if (t.m() != m - 1 || t.n() != n - 1)
        throw std::invalid_argument("insert: input shape must be (m-1, n-1)");
    const int sa = a - 1, sb = m + bp - 1;
    DenseTensor<S> out(m, n, t.N());
    std::vector<int> od, id;
    for (std::size_t f = 0; f < out.dim(); ++f) {
        out.decode(f, od);
        if (od[sa] != od[sb]) continue;
        id.assign(od.begin(), od.end());
        id.erase(id.begin() + sb);
        id.erase(id.begin() + sa);
        out[f] = t[t.encode(id)];
    }
    return out;
}

template <class S>
DenseTensor<S> tau(const DenseTensor<S>& t, int a, int bp) {
    return insert(trace(t, a, bp), a, bp, t.m(), t.n());
}

template <class S>
DenseTensor<S> swap_slots(const DenseTensor<S>& t, int s1, int s2) {
    DenseTensor<S> out(t.m(), t.n(), t.N());
    std::vector<int> d;
    for (std::size_t f = 0; f < t.dim(); ++f) {
        out.decode(f, d);
        std::swap(d[s1], d[s2]);
        out[f] = t[t.encode(d)];
    }
    return out;
}

template <class S>
DenseTensor<S> tau_left(const DenseTensor<S>& t, int a, int b) {
    if (!(1 <= a && a < b && b <= t.m())) throw std::invalid_argument("tau_left: bad slots");
    return swap_slots(t, a - 1, b - 1);
}

template <class S>
DenseTensor<S> tau_right(const DenseTensor<S>& t, int ap, int bp) {
    if (!(1 <= ap && ap < bp && bp <= t.n())) throw std::invalid_argument("tau_right: bad slots");
    return swap_slots(t, t.m() + ap - 1, t.m() + bp - 1);
}

template <class S>
DenseTensor<S> operator_a_apply(const DenseTensor<S>& t) {
    if (t.m() < 1 || t.n() < 1) throw std::invalid_argument("operator A: needs m, n >= 1");
    DenseTensor<S> out(t.m(), t.n(), t.N());
    for (int a = 1; a <= t.m(); ++a)
        for (int bp = 1; bp <= t.n(); ++bp) out += tau(t, a, bp);
    return out;
}

template <class S>
DenseTensor<S> operator_l_apply(const DenseTensor<S>& t) {
    DenseTensor<S> out(t.m(), t.n(), t.N());
    for (int a = 1; a <= t.m(); ++a)
        for (int b = a + 1; b <= t.m(); ++b) out += tau_left(t, a, b);
    return out;
}

template <class S>
DenseTensor<S> operator_r_apply(const DenseTensor<S>& t) {
    DenseTensor<S> out(t.m(), t.n(), t.N());
    for (int a = 1; a <= t.n(); ++a)
        for (int b = a + 1; b <= t.n(); ++b) out += tau_right(t, a, b);
    return out;
}

/// C = L + R - A + N*n.
template <class S>
DenseTensor<S> operator_c_apply(const DenseTensor<S>& t) {
    if (t.m() < 1 || t.n() < 1) throw std::invalid_argument("operator C: needs m, n >= 1");
    DenseTensor<S> out = operator_l_apply(t) + operator_r_apply(t) - operator_a_apply(t);
    S shift = scalar_traits<S>::from_rational(Rational(static_cast<long>(t.N()) * t.n()));
    out += t * shift;
    return out;
}

inline std::vector<long> factor_values(const std::set<long>& spec) {
    std::vector<long> out;
    for (const ProjectorFactor& f : projector_factors(spec, true)) out.push_back(f.eigenvalue);
    return out;
}

/// Applies the factors (1 - A/a) sequentially, one per listed eigenvalue.
/// The factor list must not contain 0.
template <class S>
DenseTensor<S> apply_projector(const DenseTensor<S>& t, const std::vector<long>& factors) {
    DenseTensor<S> cur = t;
    for (long a : factors) {
        if (a == 0) throw math_error("apply_projector: zero eigenvalue in factor list");
        S inv = scalar_traits<S>::from_rational(Rational(1) / Rational(a));
        cur -= operator_a_apply(cur) * inv;
    }
    return cur;
}

template <class S>
DenseTensor<S> apply_projector(const DenseTensor<S>& t, const std::set<long>& spec) {
    return apply_projector(t, factor_values(spec));
}

/// Action of a walled diagram on tensor components.
template <class S>
DenseTensor<S> diagram_action(const WalledDiagram& b, const DenseTensor<S>& t) {
    if (b.m() != t.m() || b.n() != t.n())
        throw std::invalid_argument("diagram_action: strand/slot mismatch");
    const int m = t.m(), n = t.n(), N = t.N(), s = m + n;
    const int r = b.arc_count();

    // For every upper node, where its tensor slot reads from: either a lower
    // node (passing line) or an arc summation index.
    constexpr int kFromArc = -1;
    std::vector<int> source(s, 0), arcId(s, -1);
    for (int e = 0; e < r; ++e) {
        const auto& [a, bp] = b.upper_arcs()[e];
        source[a - 1] = kFromArc;
        arcId[a - 1] = e;
        source[m + bp - 1] = kFromArc;
        arcId[m + bp - 1] = e;
    }
    for (const auto& [u, l] : b.left_lines()) source[u - 1] = l - 1;
    for (const auto& [u, l] : b.right_lines()) source[m + u - 1] = m + l - 1;

    DenseTensor<S> out(m, n, N);
    std::vector<int> od(s), id(s), k(std::max(r, 1), 0);
    for (std::size_t f = 0; f < out.dim(); ++f) {
        out.decode(f, od);
        bool deltas = true;
        for (const auto& [a, bp] : b.lower_arcs())
            if (od[a - 1] != od[m + bp - 1]) {
                deltas = false;
                break;
            }
        if (!deltas) continue;

        S sum = scalar_traits<S>::zero();
        std::fill(k.begin(), k.end(), 0);
        while (true) {
            for (int slot = 0; slot < s; ++slot)
                id[slot] = source[slot] == kFromArc ? k[arcId[slot]] : od[source[slot]];
            sum += t[t.encode(id)];
            int pos = 0;
            for (; pos < r; ++pos) {
                if (++k[pos] < N) break;
                k[pos] = 0;
            }
            if (pos == r) break;
        }
        out[f] = sum;
    }
    return out;
}

/// Diagonal group action: S on every contravariant slot, the inverse
/// transpose on every covariant slot.
template <class S>
DenseTensor<S> apply_matrix_to_slot(const DenseTensor<S>& t, const DenseMatrix<S>& mat,
                                    int slot) {
    DenseTensor<S> out(t.m(), t.n(), t.N());
    std::vector<int> d;
    for (std::size_t f = 0; f < out.dim(); ++f) {
        out.decode(f, d);
        const int i = d[slot];
        S sum = scalar_traits<S>::zero();
        for (int kk = 0; kk < t.N(); ++kk) {
            d[slot] = kk;
            sum += mat(i, kk) * t[t.encode(d)];
        }
        d[slot] = i;
        out[f] = sum;
    }
    return out;
}

template <class S>
DenseMatrix<S> invert_matrix(DenseMatrix<S> a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw std::invalid_argument("invert_matrix: not square");
    DenseMatrix<S> inv = DenseMatrix<S>::Zero(n, n);
    for (int i = 0; i < n; ++i) inv(i, i) = scalar_traits<S>::one();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        if constexpr (scalar_traits<S>::exact) {
            for (int row = col; row < n && pivot < 0; ++row)
                if (!scalar_traits<S>::is_zero(a(row, col))) pivot = row;
        } else {
            double best = 0.0;
            for (int row = col; row < n; ++row) {
                double mag = scalar_traits<S>::magnitude(a(row, col));
                if (mag > best && !scalar_traits<S>::is_zero(a(row, col), 1e-14)) {
                    best = mag;
                    pivot = row;
                }
            }
        }
        if (pivot < 0) throw math_error("singular matrix");
        a.row(col).swap(a.row(pivot));
        inv.row(col).swap(inv.row(pivot));
        S p = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / p;
            inv(col, j) = inv(col, j) / p;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            S factor = a(row, col);
            if (scalar_traits<S>::is_zero(factor, 0.0)) continue;
            for (int j = 0; j < n; ++j) {
                a(row, j) -= factor * a(col, j);
                inv(row, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

template <class S>
DenseTensor<S> group_action(const DenseMatrix<S>& g, const DenseTensor<S>& t) {
    if (g.rows() != t.N() || g.cols() != t.N())
        throw std::invalid_argument("group_action: matrix size mismatch");
    DenseMatrix<S> ginvT = invert_matrix(g).transpose();
    DenseTensor<S> out = t;
    for (int slot = 0; slot < t.m(); ++slot) out = apply_matrix_to_slot(out, g, slot);
    for (int slot = t.m(); slot < t.slots(); ++slot)
        out = apply_matrix_to_slot(out, ginvT, slot);
    return out;
}

template <class S>
DenseTensor<S> symmetrize_pair(const DenseTensor<S>& t, int s1, int s2, bool antisymmetric) {
    DenseTensor<S> swapped = swap_slots(t, s1, s2);
    DenseTensor<S> out = antisymmetric ? t - swapped : t + swapped;
    return out * scalar_traits<S>::from_rational(Rational(1, 2));
}

namespace detail {
template <class S>
bool pair_antisymmetric(const DenseTensor<S>& t, int s1, int s2, double tol) {
    DenseTensor<S> sum = t + swap_slots(t, s1, s2);
    return sum.is_zero(tol);
}
}  // namespace detail

/// Traceless projection of a torsion-type tensor. Accepts (m,n) = (1,2) with
/// the two covariant slots antisymmetric, or the mirror (2,1) with the two
/// contravariant slots antisymmetric. A single factor N-1 suffices.
template <class S>
DenseTensor<S> torsion_project(const DenseTensor<S>& t, double tol = 1e-9) {
    const int N = t.N();
    if (N < 2) throw std::invalid_argument("torsion_project: needs N >= 2");
    std::set<long> spec;
    if (t.m() == 1 && t.n() == 2) {
        if (!detail::pair_antisymmetric(t, 1, 2, tol))
            throw std::invalid_argument("torsion_project: covariant pair not antisymmetric");
        spec = restricted_spec(Partition{1}, Partition{1, 1}, {1, 2, N});
    } else if (t.m() == 2 && t.n() == 1) {
        if (!detail::pair_antisymmetric(t, 0, 1, tol))
            throw std::invalid_argument("torsion_project: contravariant pair not antisymmetric");
        spec = restricted_spec(Partition{1, 1}, Partition{1}, {2, 1, N});
    } else {
        throw std::invalid_argument("torsion_project: shape must be (1,2) or (2,1)");
    }
    return apply_projector(t, factor_values(spec));
}

/// Traceless projection of a curvature-type tensor. Accepts (m,n) = (1,3)
/// antisymmetric in the last two covariant slots, or the mirror (3,1)
/// antisymmetric in the first two contravariant slots. Three factors
/// N+1, N-1, N-2; the N+2 factor never acts on this symmetry type.
template <class S>
DenseTensor<S> riemann_project(const DenseTensor<S>& t, double tol = 1e-9) {
    const int N = t.N();
    if (N < 3) throw std::invalid_argument("riemann_project: needs N >= 3");
    std::set<long> spec;
    if (t.m() == 1 && t.n() == 3) {
        if (!detail::pair_antisymmetric(t, 2, 3, tol))
            throw std::invalid_argument("riemann_project: covariant pair not antisymmetric");
        spec = restricted_spec_union(
            {{Partition{1}, Partition{2, 1}}, {Partition{1}, Partition{1, 1, 1}}}, {1, 3, N});
    } else if (t.m() == 3 && t.n() == 1) {
        if (!detail::pair_antisymmetric(t, 0, 1, tol))
            throw std::invalid_argument("riemann_project: contravariant pair not antisymmetric");
        spec = restricted_spec_union(
            {{Partition{2, 1}, Partition{1}}, {Partition{1, 1, 1}, Partition{1}}}, {3, 1, N});
    } else {
        throw std::invalid_argument("riemann_project: shape must be (1,3) or (3,1)");
    }
    return apply_projector(t, factor_values(spec));
}

}  // namespace traceless
