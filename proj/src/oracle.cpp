#include "traceless/oracle.hpp"

#include <stdexcept>

namespace traceless {

namespace {

std::size_t checked_pow(int N, int exp, std::size_t cap, const char* what) {
    std::size_t d = 1;
    for (int i = 0; i < exp; ++i) {
        d *= static_cast<std::size_t>(N);
        if (d > cap) throw std::invalid_argument(std::string(what) + ": dimension cap exceeded");
    }
    return d;
}

using Tensor = DenseTensor<Rational>;

template <class Apply>
OperatorMatrix matrix_of(int m, int n, int N, std::size_t cap, Apply&& apply) {
    std::size_t dim = checked_pow(N, m + n, cap, "operator matrix");
    OperatorMatrix out(dim, dim);
    out.setZero();
    for (std::size_t col = 0; col < dim; ++col) {
        Tensor image = apply(Tensor::basis(m, n, N, col));
        for (std::size_t row = 0; row < dim; ++row) out(row, col) = image[row];
    }
    return out;
}

// Sparse column view used to keep matrix products at nnz * dim cost.
struct SparseCols {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;

    explicit SparseCols(const OperatorMatrix& mat) : cols(mat.cols()) {
        for (Eigen::Index c = 0; c < mat.cols(); ++c)
            for (Eigen::Index r = 0; r < mat.rows(); ++r)
                if (mat(r, c) != 0) cols[c].push_back({static_cast<std::size_t>(r), mat(r, c)});
    }

    // out = M * x
    void apply(const RationalVector& x, RationalVector& out) const {
        out.setZero();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (x[c] == 0) continue;
            for (const auto& [r, v] : cols[c]) out[r] += v * x[c];
        }
    }

    // out = M * dense
    void apply(const OperatorMatrix& dense, OperatorMatrix& out) const {
        out.setZero();
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [r, v] : cols[c])
                for (Eigen::Index j = 0; j < dense.cols(); ++j) {
                    if (dense(c, j) == 0) continue;
                    out(r, j) += v * dense(c, j);
                }
    }
};

bool all_zero(const OperatorMatrix& mat) {
    for (Eigen::Index c = 0; c < mat.cols(); ++c)
        for (Eigen::Index r = 0; r < mat.rows(); ++r)
            if (mat(r, c) != 0) return false;
    return true;
}

bool all_zero(const RationalVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

}  // namespace

OperatorMatrix build_operator_matrix(OperatorKind kind, int m, int n, int N, std::size_t cap) {
    switch (kind) {
        case OperatorKind::A:
            return matrix_of(m, n, N, cap, [](const Tensor& t) { return operator_a_apply(t); });
        case OperatorKind::L:
            return matrix_of(m, n, N, cap, [](const Tensor& t) { return operator_l_apply(t); });
        case OperatorKind::R:
            return matrix_of(m, n, N, cap, [](const Tensor& t) { return operator_r_apply(t); });
        case OperatorKind::C:
            return matrix_of(m, n, N, cap, [](const Tensor& t) { return operator_c_apply(t); });
    }
    throw std::invalid_argument("build_operator_matrix: unknown operator");
}

OperatorMatrix diagram_matrix(const WalledDiagram& d, int N, std::size_t cap) {
    return matrix_of(d.m(), d.n(), N, cap,
                     [&d](const Tensor& t) { return diagram_action(d, t); });
}

OperatorMatrix projector_matrix(int m, int n, int N, const std::vector<long>& factors,
                                std::size_t cap) {
    return matrix_of(m, n, N, cap,
                     [&factors](const Tensor& t) { return apply_projector(t, factors); });
}

namespace {

// Derivation action of the matrix unit E^i_j on one basis tensor, as a sparse
// list of (flat index, coefficient). Conventions:
//   E^i_j e_k = -delta^i_k e_j   and   E^i_j e^k = delta_j^k e^i.
void matrix_unit_on_basis(int i, int j, int m, int n, int N, std::vector<int>& digits,
                          std::vector<std::pair<std::size_t, Rational>>& out) {
    const int slots = m + n;
    auto encode = [&](const std::vector<int>& d) {
        std::size_t flat = 0;
        for (int v : d) flat = flat * N + static_cast<std::size_t>(v);
        return flat;
    };
    for (int s = 0; s < slots; ++s) {
        int old = digits[s];
        if (s < m) {
            if (old == i) {
                digits[s] = j;
                out.push_back({encode(digits), Rational(-1)});
                digits[s] = old;
            }
        } else {
            if (old == j) {
                digits[s] = i;
                out.push_back({encode(digits), Rational(1)});
                digits[s] = old;
            }
        }
    }
}

}  // namespace

OperatorMatrix casimir_derivation_matrix(int m, int n, int N, std::size_t cap) {
    std::size_t dim = checked_pow(N, m + n, cap, "casimir matrix");
    OperatorMatrix out(dim, dim);
    out.setZero();
    Tensor probe(m, n, N);
    std::vector<int> digits, digits2;
    std::vector<std::pair<std::size_t, Rational>> first, second;
    const Rational half(1, 2);
    for (std::size_t col = 0; col < dim; ++col) {
        probe.decode(col, digits);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                first.clear();
                matrix_unit_on_basis(j, i, m, n, N, digits, first);   // E^j_i
                for (const auto& [mid, c1] : first) {
                    probe.decode(mid, digits2);
                    second.clear();
                    matrix_unit_on_basis(i, j, m, n, N, digits2, second);   // E^i_j
                    for (const auto& [row, c2] : second) out(row, col) += half * c1 * c2;
                }
            }
        // + (N/2) * E^i_i
        for (int i = 0; i < N; ++i) {
            first.clear();
            matrix_unit_on_basis(i, i, m, n, N, digits, first);
            for (const auto& [row, c] : first) out(row, col) += half * N * c;
        }
    }
    return out;
}

long exact_rank(const OperatorMatrix& mat) {
    const long rows = mat.rows(), cols = mat.cols();
    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (long r = 0; r < rows; ++r) {
        Integer lcm_val = 1;
        for (long c = 0; c < cols; ++c) lcm_val = lcm(lcm_val, denominator(mat(r, c)));
        for (long c = 0; c < cols; ++c)
            a[r][c] = numerator(mat(r, c)) * (lcm_val / denominator(mat(r, c)));
    }

    long rank = 0;
    Integer prev(1);
    for (long col = 0; col < cols && rank < rows; ++col) {
        long pivot = -1;
        for (long r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (long r = rank + 1; r < rows; ++r) {
            for (long c = col + 1; c < cols; ++c)
                a[r][c] = (a[r][c] * a[rank][col] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

bool annihilation_check(const OperatorMatrix& mat, const std::set<long>& spec) {
    const Eigen::Index dim = mat.rows();
    if (mat.cols() != dim) throw std::invalid_argument("annihilation_check: not square");
    SparseCols sparse(mat);
    OperatorMatrix acc(dim, dim);
    acc.setZero();
    for (Eigen::Index i = 0; i < dim; ++i) acc(i, i) = 1;
    OperatorMatrix next(dim, dim);
    for (long a : spec) {
        sparse.apply(acc, next);
        for (Eigen::Index j = 0; j < dim; ++j)
            for (Eigen::Index i = 0; i < dim; ++i) next(i, j) -= Rational(a) * acc(i, j);
        acc.swap(next);
    }
    return all_zero(acc);
}

std::optional<RationalVector> kernel_witness(const OperatorMatrix& mat,
                                             const std::set<long>& spec, long a) {
    const Eigen::Index dim = mat.rows();
    SparseCols sparse(mat);
    RationalVector v(dim), w(dim);
    for (Eigen::Index seed = 0; seed < dim; ++seed) {
        v.setZero();
        v[seed] = 1;
        for (long b : spec) {
            if (b == a) continue;
            sparse.apply(v, w);
            for (Eigen::Index i = 0; i < dim; ++i) w[i] -= Rational(b) * v[i];
            v.swap(w);
        }
        if (all_zero(v)) continue;
        // exact membership check: (M - a)v = 0
        sparse.apply(v, w);
        for (Eigen::Index i = 0; i < dim; ++i) w[i] -= Rational(a) * v[i];
        if (all_zero(w)) return v;
        return std::nullopt;   // non-zero image that the remaining factor misses
    }
    return std::nullopt;
}

long bmap_rank(int m, int n, int N, std::size_t cap) {
    std::vector<WalledDiagram> diagrams = enumerate_diagrams(m, n);
    std::size_t dim = 1;
    for (int i = 0; i < m + n; ++i) dim *= static_cast<std::size_t>(N);
    if (diagrams.size() * dim * dim > cap)
        throw std::invalid_argument("bmap_rank: dimension cap exceeded");
    OperatorMatrix rows(diagrams.size(), dim * dim);
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
        OperatorMatrix mk = diagram_matrix(diagrams[k], N, dim);
        for (std::size_t c = 0; c < dim; ++c)
            for (std::size_t r = 0; r < dim; ++r)
                rows(k, c * dim + r) = mk(r, c);
    }
    return exact_rank(rows);
}

}  // namespace traceless
