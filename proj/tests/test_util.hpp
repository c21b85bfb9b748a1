#pragma once

#include <map>
#include <random>
#include <vector>

#include "traceless/partition.hpp"
#include "traceless/rational.hpp"
#include "traceless/tensor.hpp"

namespace testutil {

using traceless::DenseMatrix;
using traceless::DenseTensor;
using traceless::Partition;
using traceless::Rational;

inline std::mt19937& rng() {
    static std::mt19937 gen(20240917u);
    return gen;
}

inline Rational random_rational(int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(num(rng()), den(rng()));
}

inline DenseTensor<Rational> random_tensor(int m, int n, int N, int bound = 9) {
    DenseTensor<Rational> t(m, n, N);
    for (std::size_t i = 0; i < t.dim(); ++i) t[i] = random_rational(bound);
    return t;
}

inline DenseMatrix<Rational> random_invertible(int N, int bound = 5) {
    while (true) {
        DenseMatrix<Rational> s(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) s(i, j) = random_rational(bound);
        try {
            (void)traceless::invert_matrix(s);
            return s;
        } catch (const traceless::math_error&) {
        }
    }
}

// Partition-function values by the classic coin-style recurrence, independent
// of the enumeration code.
inline long partition_count(int s) {
    std::vector<long> ways(static_cast<size_t>(s) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= s; ++part)
        for (int total = part; total <= s; ++total) ways[total] += ways[total - part];
    return ways[s];
}

// Pieri rules: s_alpha * s_(k) adds a horizontal strip, s_alpha * s_(1^k) a
// vertical strip. Used as an independent cross-check on small LR instances.
inline std::map<Partition, long> pieri_row(const Partition& alpha, int k) {
    std::map<Partition, long> out;
    std::vector<int> row(alpha.length() + 1);
    // choose added cells per row, top to bottom
    std::vector<int> added(alpha.length() + 1, 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == static_cast<int>(added.size())) {
            if (remaining == 0) {
                std::vector<int> parts;
                for (int r = 1; r <= alpha.length() + 1; ++r) {
                    int len = alpha.part(r) + added[r - 1];
                    if (len > 0) parts.push_back(len);
                }
                out[Partition(parts)] += 1;
            }
            return;
        }
        // horizontal strip: new row r length in [alpha_r, alpha_{r-1}]
        int low = alpha.part(i + 1);
        int high = i == 0 ? alpha.part(1) + remaining : alpha.part(i);
        for (int len = low; len <= high && len - low <= remaining; ++len) {
            added[i] = len - low;
            self(self, i + 1, remaining - added[i]);
        }
        added[i] = 0;
    };
    rec(rec, 0, k);
    return out;
}

inline std::map<Partition, long> pieri_column(const Partition& alpha, int k) {
    std::map<Partition, long> out;
    const int rows = alpha.length() + k;
    std::vector<int> add(rows, 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == rows) {
            if (remaining != 0) return;
            std::vector<int> parts;
            for (int r = 1; r <= rows; ++r) {
                int len = alpha.part(r) + add[r - 1];
                int next = r < rows ? alpha.part(r + 1) + add[r] : 0;
                if (len < next) return;   // can't check yet; validated below instead
                if (len > 0) parts.push_back(len);
            }
            // validity: weakly decreasing with no hidden gaps
            for (size_t r = 0; r + 1 < parts.size(); ++r)
                if (parts[r] < parts[r + 1]) return;
            out[Partition(parts)] += 1;
            return;
        }
        for (int d = 0; d <= 1 && d <= remaining; ++d) {
            add[i] = d;
            self(self, i + 1, remaining - d);
            add[i] = 0;
        }
    };
    rec(rec, 0, k);
    return out;
}

// Schur polynomial at exact integer points by the bialternant determinant
// ratio; fully independent of tableau enumeration.
inline Rational schur_bialternant(const Partition& alpha, const std::vector<Rational>& x) {
    const int N = static_cast<int>(x.size());
    if (alpha.length() > N) return Rational(0);
    auto det = [N](const DenseMatrix<Rational>& a) {
        DenseMatrix<Rational> u = a;
        Rational result(1);
        for (int col = 0; col < N; ++col) {
            int pivot = -1;
            for (int row = col; row < N && pivot < 0; ++row)
                if (u(row, col) != 0) pivot = row;
            if (pivot < 0) return Rational(0);
            if (pivot != col) {
                u.row(col).swap(u.row(pivot));
                result = -result;
            }
            result *= u(col, col);
            for (int row = col + 1; row < N; ++row) {
                Rational f = u(row, col) / u(col, col);
                for (int c2 = col; c2 < N; ++c2) u(row, c2) -= f * u(col, c2);
            }
        }
        return result;
    };
    auto power = [](const Rational& base, int e) {
        Rational p(1);
        for (int i = 0; i < e; ++i) p *= base;
        return p;
    };
    DenseMatrix<Rational> num(N, N), den(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            num(i, j) = power(x[i], alpha.part(j + 1) + N - (j + 1));
            den(i, j) = power(x[i], N - (j + 1));
        }
    Rational d = det(den);
    if (d == 0) throw std::invalid_argument("bialternant: points must be distinct");
    return det(num) / d;
}

}  // namespace testutil
