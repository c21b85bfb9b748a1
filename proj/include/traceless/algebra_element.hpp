#pragma once

#include <map>
#include <optional>
#include <vector>

#include "traceless/rational.hpp"
#include "traceless/walled_diagram.hpp"

namespace traceless {

/// Polynomial in delta with rational coefficients, ascending degree order.
class PolyDelta {
  public:
    PolyDelta() = default;
    PolyDelta(Rational constant) {
        if (constant != 0) coef_.push_back(std::move(constant));
    }
    PolyDelta(int constant) : PolyDelta(Rational(constant)) {}

    static PolyDelta delta_power(int k) {
        PolyDelta p;
        p.coef_.assign(static_cast<size_t>(k) + 1, Rational(0));
        p.coef_.back() = 1;
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coef_; }
    Rational evaluate(const Rational& delta) const;

    PolyDelta& operator+=(const PolyDelta& o);
    PolyDelta& operator-=(const PolyDelta& o);
    friend PolyDelta operator+(PolyDelta a, const PolyDelta& b) { return a += b; }
    friend PolyDelta operator-(PolyDelta a, const PolyDelta& b) { return a -= b; }
    friend PolyDelta operator*(const PolyDelta& a, const PolyDelta& b);
    friend bool operator==(const PolyDelta& a, const PolyDelta& b) { return a.coef_ == b.coef_; }

  private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }
    std::vector<Rational> coef_;
};

/// Linear combination of walled diagrams. Coeff is Rational (specialized mode,
/// which also fixes the numeric delta used for loop factors) or PolyDelta
/// (generic mode, loop factors stay symbolic).
template <class Coeff>
class AlgebraElement {
  public:
    using Terms = std::map<WalledDiagram, Coeff>;

    AlgebraElement(int m, int n) : m_(m), n_(n) {}
    AlgebraElement(int m, int n, Rational delta) : m_(m), n_(n), delta_(std::move(delta)) {}

    int m() const { return m_; }
    int n() const { return n_; }
    const std::optional<Rational>& delta() const { return delta_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const WalledDiagram& d, Coeff c);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Coeff& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Coeff& c) { return a *= c; }

    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_compatible(b);
        AlgebraElement out(a.m_, a.n_);
        out.delta_ = a.delta_;
        for (const auto& [d1, c1] : a.terms_)
            for (const auto& [d2, c2] : b.terms_) {
                DiagramProduct p = diagram_product(d1, d2);
                out.add_term(p.diagram, c1 * c2 * out.loop_factor(p.loops));
            }
        return out;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    void check_compatible(const AlgebraElement& o) const;
    Coeff loop_factor(int loops) const;

    int m_, n_;
    std::optional<Rational> delta_;   // set in specialized mode
    Terms terms_;
};

using RationalElement = AlgebraElement<Rational>;
using GenericElement = AlgebraElement<PolyDelta>;

RationalElement identity_element(int m, int n, Rational delta);
GenericElement identity_element_generic(int m, int n);

/// A_{m,n} = sum over all arcs t_{ab'}.
RationalElement element_a(int m, int n, Rational delta);
GenericElement element_a_generic(int m, int n);

/// True iff B_{m,n}(delta) is semisimple. nullopt stands for a generic
/// non-integer delta.
bool is_semisimple(int m, int n, const std::optional<Rational>& delta);

/// Splitting idempotent P_{m,n} in B_{m,n}(delta): the product of
/// (1 - A/a) over the distinct non-zero values of the spectrum of A at this
/// delta. Refuses non-semisimple delta and delta where a non-trivial affine
/// eigenvalue specializes to zero.
RationalElement element_p(int m, int n, const Rational& delta);

/// True iff every diagram of x carries at least one arc (the ideal J).
template <class Coeff>
bool in_ideal_j(const AlgebraElement<Coeff>& x) {
    for (const auto& [d, c] : x.terms()) {
        (void)c;
        if (d.arc_count() == 0) return false;
    }
    return true;
}

template <class Coeff>
AlgebraElement<Coeff> flip(const AlgebraElement<Coeff>& x) {
    AlgebraElement<Coeff> out = x.delta() ? AlgebraElement<Coeff>(x.m(), x.n(), *x.delta())
                                          : AlgebraElement<Coeff>(x.m(), x.n());
    for (const auto& [d, c] : x.terms()) out.add_term(d.flipped(), c);
    return out;
}

}  // namespace traceless
