#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "traceless/algebra_element.hpp"
#include "traceless/json_io.hpp"
#include "traceless/walled_diagram.hpp"

using namespace traceless;

namespace {

// The two-arc diagrams of the worked stacking-product figure (m=4, n=3).
WalledDiagram figure_b1() {
    return WalledDiagram(4, 3, {{2, 1}, {4, 2}}, {{1, 3}, {4, 1}}, {{1, 3}, {3, 2}}, {{3, 2}});
}
WalledDiagram figure_b2() {
    return WalledDiagram(4, 3, {{3, 1}, {4, 3}}, {{2, 2}, {4, 1}}, {{1, 1}, {2, 3}}, {{2, 3}});
}

long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

GenericElement as_generic(const WalledDiagram& d) {
    GenericElement e(d.m(), d.n());
    e.add_term(d, PolyDelta(1));
    return e;
}

std::vector<WalledDiagram> permutation_diagrams(int m, int n) {
    std::vector<WalledDiagram> out;
    for (const WalledDiagram& d : enumerate_diagrams(m, n))
        if (d.is_permutation()) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("diagram counts are (m+n)!") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            if (m + n > 5) continue;
            CHECK(static_cast<long>(enumerate_diagrams(m, n).size()) == factorial(m + n));
        }
}

TEST_CASE("diagram invariants are enforced") {
    CHECK_THROWS_AS(WalledDiagram(1, 1, {{1, 1}}, {}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(WalledDiagram(2, 1, {}, {}, {{1, 1}, {1, 2}}, {{1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WalledDiagram(2, 1, {}, {}, {{1, 1}, {2, 5}}, {{1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("stacking product reproduces the worked figure with one loop") {
    auto [prod, loops] = diagram_product(figure_b1(), figure_b2());
    CHECK(loops == 1);
    WalledDiagram expected(4, 3, {{3, 1}, {4, 3}}, {{1, 3}, {4, 1}}, {{1, 3}, {2, 2}},
                           {{2, 2}});
    CHECK(prod == expected);
}

TEST_CASE("stacking product basics") {
    WalledDiagram id = WalledDiagram::identity(2, 1);
    auto [idSq, l0] = diagram_product(id, id);
    CHECK(idSq == id);
    CHECK(l0 == 0);

    // t^2 = delta * t for the one-arc generator
    WalledDiagram t = generator_t(GeneratorKind::Arc, 1, 1, 1, 1);
    auto [tSq, l1] = diagram_product(t, t);
    CHECK(tSq == t);
    CHECK(l1 == 1);
}

TEST_CASE("product associativity at generic delta") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        std::vector<WalledDiagram> all = enumerate_diagrams(m, n);
        std::mt19937 gen(7u + m * 10 + n);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 25; ++trial) {
            GenericElement x = as_generic(all[pick(gen)]);
            GenericElement y = as_generic(all[pick(gen)]);
            GenericElement z = as_generic(all[pick(gen)]);
            CHECK((x * y) * z == x * (y * z));
        }
    }
}

TEST_CASE("generators") {
    WalledDiagram arc = generator_t(GeneratorKind::Arc, 2, 1, 2, 1);
    CHECK(arc.arc_count() == 1);
    CHECK(arc.upper_arcs() == WalledDiagram::Arcs{{2, 1}});
    CHECK(arc.lower_arcs() == WalledDiagram::Arcs{{2, 1}});

    WalledDiagram t12 = generator_t(GeneratorKind::LeftTransposition, 1, 2, 2, 1);
    CHECK(t12.arc_count() == 0);
    CHECK(t12.left_lines() == WalledDiagram::Lines{{1, 2}, {2, 1}});
    CHECK(t12.right_lines() == WalledDiagram::Lines{{1, 1}});

    CHECK_THROWS_AS(generator_t(GeneratorKind::Arc, 3, 1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generator_t(GeneratorKind::LeftTransposition, 2, 1, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(generator_t(GeneratorKind::RightTransposition, 1, 2, 2, 1),
                    std::invalid_argument);
}

TEST_CASE("element A") {
    GenericElement a11 = element_a_generic(1, 1);
    CHECK(a11.terms().size() == 1);
    GenericElement a21 = element_a_generic(2, 1);
    CHECK(a21.terms().size() == 2);

    // invariance under conjugation by every permutation diagram
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        GenericElement a = element_a_generic(m, n);
        for (const WalledDiagram& s : permutation_diagrams(m, n)) {
            GenericElement lhs = as_generic(s) * a * as_generic(s.flipped());
            CHECK(lhs == a);
        }
    }
}

TEST_CASE("flip is an involutive anti-automorphism") {
    WalledDiagram t = generator_t(GeneratorKind::Arc, 1, 2, 2, 3);
    CHECK(t.flipped() == t);

    WalledDiagram b1 = figure_b1();
    WalledDiagram f = b1.flipped();
    CHECK(f.upper_arcs() == b1.lower_arcs());
    CHECK(f.lower_arcs() == b1.upper_arcs());
    CHECK(f.flipped() == b1);

    std::vector<WalledDiagram> all = enumerate_diagrams(2, 1);
    std::mt19937 gen(11u);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        GenericElement x = as_generic(all[pick(gen)]);
        GenericElement y = as_generic(all[pick(gen)]);
        CHECK(flip(x * y) == flip(y) * flip(x));
    }
    CHECK(flip(element_a_generic(2, 2)) == element_a_generic(2, 2));
}

TEST_CASE("is_semisimple") {
    CHECK(is_semisimple(1, 2, Rational(0)));
    CHECK(is_semisimple(3, 1, Rational(0)));
    CHECK(!is_semisimple(2, 2, Rational(0)));
    CHECK(!is_semisimple(2, 2, Rational(2)));
    CHECK(is_semisimple(2, 2, Rational(-3)));
    CHECK(is_semisimple(5, 5, Rational(1, 2)));
    CHECK(is_semisimple(5, 5, std::nullopt));
    CHECK(is_semisimple(1, 1, Rational(1)));
    CHECK(!is_semisimple(1, 1, Rational(0)));
}

TEST_CASE("element P: worked forms") {
    RationalElement p11 = element_p(1, 1, Rational(7));
    RationalElement expected = identity_element(1, 1, Rational(7));
    RationalElement t(1, 1, Rational(7));
    t.add_term(generator_t(GeneratorKind::Arc, 1, 1, 1, 1), Rational(-1, 7));
    expected += t;
    CHECK(p11 == expected);

    // (2,1): equals (1 - A/(d+1)) (1 - A/(d-1)) multiplied out
    Rational d(22, 7);
    RationalElement a = element_a(2, 1, d);
    RationalElement f1 = identity_element(2, 1, d);
    f1 -= a * (Rational(1) / (d + 1));
    RationalElement f2 = identity_element(2, 1, d);
    f2 -= a * (Rational(1) / (d - 1));
    CHECK(element_p(2, 1, d) == f1 * f2);
}

TEST_CASE("element P: idempotent, central, annihilates J") {
    std::vector<Rational> deltas{Rational(5), Rational(7), Rational(22, 7)};
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        for (const Rational& d : deltas) {
            RationalElement p = element_p(m, n, d);
            CHECK(p * p == p);
            CHECK(flip(p) == p);

            RationalElement pMinusOne = p;
            pMinusOne -= identity_element(m, n, d);
            CHECK(in_ideal_j(pMinusOne));

            RationalElement a = element_a(m, n, d);
            CHECK((a * p).is_zero());
            CHECK((p * a).is_zero());

            for (const WalledDiagram& s : permutation_diagrams(m, n)) {
                RationalElement se(m, n, d);
                se.add_term(s, Rational(1));
                CHECK(se * p == p * se);
                // P y - y lands in the arc ideal for every permutation y
                RationalElement py = p * se;
                py -= se;
                CHECK(in_ideal_j(py));
            }
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n; ++j) {
                    RationalElement gen(m, n, d);
                    gen.add_term(generator_t(GeneratorKind::Arc, i, j, m, n), Rational(1));
                    CHECK((gen * p).is_zero());
                    CHECK((p * gen).is_zero());
                }
        }
    }
}

TEST_CASE("element P at a large generic rational") {
    Rational d(1000000, 7);
    RationalElement p = element_p(2, 1, d);
    CHECK(p * p == p);
}

TEST_CASE("element P refusals") {
    CHECK_THROWS_AS(element_p(2, 2, Rational(2)), math_error);
    CHECK_THROWS_AS(element_p(1, 1, Rational(0)), math_error);
    CHECK_THROWS_WITH_AS(element_p(2, 2, Rational(0)), doctest::Contains("not semisimple"),
                         math_error);
}

TEST_CASE("in_ideal_j") {
    GenericElement t(1, 1);
    t.add_term(generator_t(GeneratorKind::Arc, 1, 1, 1, 1), PolyDelta(1));
    CHECK(in_ideal_j(t));
    CHECK(!in_ideal_j(identity_element_generic(1, 1)));
}

TEST_CASE("polynomial coefficients in delta") {
    PolyDelta d = PolyDelta::delta_power(1);
    PolyDelta q = d * d + PolyDelta(Rational(-3)) * d + PolyDelta(Rational(2));
    CHECK(q.evaluate(Rational(1)) == 0);
    CHECK(q.evaluate(Rational(2)) == 0);
    CHECK(q.evaluate(Rational(5)) == 12);
    CHECK((q - q).is_zero());
    CHECK(q.degree() == 2);

    // generic product keeps the loop factor symbolic: t * t = delta * t
    GenericElement t(1, 1);
    t.add_term(generator_t(GeneratorKind::Arc, 1, 1, 1, 1), PolyDelta(1));
    GenericElement sq = t * t;
    REQUIRE(sq.terms().size() == 1);
    CHECK(sq.terms().begin()->second == PolyDelta::delta_power(1));
}

TEST_CASE("element JSON round trip") {
    WalledDiagram b1 = figure_b1();
    CHECK(diagram_from_json(diagram_to_json(b1)) == b1);

    RationalElement p = element_p(2, 1, Rational(5));
    json j = element_to_json(p);
    CHECK(j.is_array());
    CHECK(j.size() == p.terms().size());
    for (const auto& term : j) {
        CHECK(term.contains("diagram"));
        CHECK(term.contains("coeff"));
    }

    GenericElement a = element_a_generic(2, 1);
    json jg = element_to_json(a);
    CHECK(jg[0]["coeff"].contains("poly"));
}
