#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "traceless/lr.hpp"
#include "traceless/oracle.hpp"
#include "traceless/spectrum.hpp"

using namespace traceless;
using testutil::pieri_column;
using testutil::pieri_row;
using testutil::schur_bialternant;

namespace {

std::vector<Partition> partitions_up_to(int maxSize, int maxLen = 0) {
    std::vector<Partition> out;
    for (int s = 0; s <= maxSize; ++s)
        for (const Partition& p : enumerate_partitions(s, maxLen > 0 ? maxLen : std::max(s, 1)))
            out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("lr_coefficient basics") {
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{2}) == 1);
    CHECK(lr_coefficient(Partition{2, 2}, Partition{1}, Partition{2}) == 0);
    CHECK(lr_coefficient(Partition{3}, Partition{1}, Partition{1}) == 0);   // size mismatch
    CHECK(lr_coefficient(Partition{2, 2}, Partition{3}, Partition{1}) == 0);   // not contained
    // the classic multiplicity-2 instance
    CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
}

TEST_CASE("lr_expand against the Pieri rules") {
    CHECK(lr_expand(Partition{}, Partition{3}, 4) ==
          std::map<Partition, long>{{Partition{3}, 1}});
    CHECK(lr_expand(Partition{1}, Partition{1}, 4) ==
          std::map<Partition, long>{{Partition{2}, 1}, {Partition{1, 1}, 1}});

    for (const Partition& alpha : partitions_up_to(5)) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(lr_expand(alpha, Partition{k}, alpha.size() + k + 1) == pieri_row(alpha, k));
            std::vector<int> col(k, 1);
            CHECK(lr_expand(alpha, Partition(col), alpha.size() + k + 1) ==
                  pieri_column(alpha, k));
        }
    }
}

TEST_CASE("lr_expand with a row bound") {
    // s_(1,1) * s_(1,1,1): only (2,2,1) survives three rows
    CHECK(lr_expand(Partition{1, 1}, Partition{1, 1, 1}, 3) ==
          std::map<Partition, long>{{Partition{2, 2, 1}, 1}});
    // s_(1,1) * s_(1,1): both (2,2) and (2,1,1) fit in three rows
    CHECK(lr_expand(Partition{1, 1}, Partition{1, 1}, 3) ==
          std::map<Partition, long>{{Partition{2, 2}, 1}, {Partition{2, 1, 1}, 1}});
}

TEST_CASE("lr symmetry in the two factors") {
    for (const Partition& gamma : partitions_up_to(8)) {
        for (int a = 0; a <= gamma.size(); ++a)
            for (const Partition& alpha : enumerate_partitions(a, std::max(a, 1))) {
                if (!contains(gamma, alpha)) continue;
                for (const Partition& beta :
                     enumerate_partitions(gamma.size() - a, std::max(gamma.size() - a, 1)))
                    CHECK(lr_coefficient(gamma, alpha, beta) ==
                          lr_coefficient(gamma, beta, alpha));
            }
    }
}

TEST_CASE("character ring check via the bialternant oracle") {
    for (int N = 2; N <= 4; ++N) {
        std::vector<Rational> x;
        for (int i = 0; i < N; ++i) x.push_back(Rational(2 * i + 2 + N));
        for (const Partition& alpha : partitions_up_to(4, N))
            for (const Partition& beta : partitions_up_to(4, N)) {
                if (alpha.length() > N || beta.length() > N) continue;
                Rational lhs = schur_bialternant(alpha, x) * schur_bialternant(beta, x);
                Rational rhs(0);
                for (const auto& [gamma, c] : lr_expand(alpha, beta, N))
                    rhs += Rational(c) * schur_bialternant(gamma, x);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("branch_coefficient examples") {
    // non-saturated instance: coefficient 0 while the bound is 1
    BranchQuery counter{Partition{2, 1}, Partition{1, 1}, Partition{2}, Partition{1}, 2};
    CHECK(branch_coefficient(counter) == 0);
    CHECK(branch_upper_bound(Partition{2, 1}, Partition{1, 1}, Partition{2}, Partition{1}, 2) ==
          1);

    // N = 1 chain
    CHECK(branch_coefficient({Partition{3}, Partition{2}, Partition{1}, Partition{}, 1}) == 1);

    // adjoint-type label in V (x) V*
    for (int N = 2; N <= 4; ++N) {
        CHECK(branch_coefficient({Partition{1}, Partition{1}, Partition{1}, Partition{1}, N}) ==
              1);
        // eigenspace cross-check: the C eigenvalue on that component is N and
        // the component has dimension N^2 - 1
        OperatorMatrix c = build_operator_matrix(OperatorKind::C, 1, 1, N);
        for (int i = 0; i < N * N; ++i) c(i, i) -= Rational(N);
        CHECK(kernel_dimension(c) == static_cast<long>(N) * N - 1);
    }

    // outside Lambda(N): the "otherwise 0" clause
    CHECK(branch_coefficient({Partition{1, 1}, Partition{1, 1}, Partition{1, 1},
                              Partition{1, 1}, 2}) == 0);
    CHECK_THROWS_AS(branch_coefficient({Partition{1, 1, 1}, Partition{1}, Partition{1},
                                        Partition{1}, 2}),
                    std::invalid_argument);
}

TEST_CASE("branch_upper_bound examples") {
    CHECK(branch_upper_bound(Partition{1, 1, 1, 1}, Partition{1, 1, 1, 1}, Partition{1, 1},
                             Partition{1, 1}, 4) > 0);
    CHECK(branch_upper_bound(Partition{2, 1}, Partition{1, 1}, Partition{2, 1},
                             Partition{1, 1}, 3) == 1);   // beta = {} only
    CHECK(branch_upper_bound(Partition{2}, Partition{2}, Partition{1}, Partition{}, 2) == 0);
}

TEST_CASE("branch coefficient profile over a sweep") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int N = 1; N <= 4; ++N)
                for (const Partition& rho : enumerate_partitions(m, std::min(m, N)))
                    for (const Partition& sigma : enumerate_partitions(n, std::min(n, N)))
                        for (int r = 0; r <= std::min(m, n); ++r)
                            for (const RationalLabel& l : enumerate_lambda(m, n, r, N)) {
                                long c = branch_coefficient({rho, sigma, l.mu, l.nu, N});
                                long bound = branch_upper_bound(rho, sigma, l.mu, l.nu, N);
                                CHECK(c <= bound);
                                if (is_saturated(m, n, N)) CHECK(c == bound);
                                if (c != 0) {
                                    CHECK(contains(rho, l.mu));
                                    CHECK(contains(sigma, l.nu));
                                    CHECK(rho.size() - l.mu.size() ==
                                          sigma.size() - l.nu.size());
                                }
                            }
}
