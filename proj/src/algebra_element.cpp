#include "traceless/algebra_element.hpp"

#include <stdexcept>

#include "traceless/spectrum.hpp"

namespace traceless {

Rational PolyDelta::evaluate(const Rational& delta) const {
    Rational value(0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) value = value * delta + *it;
    return value;
}

PolyDelta& PolyDelta::operator+=(const PolyDelta& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
    for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
    trim();
    return *this;
}

PolyDelta& PolyDelta::operator-=(const PolyDelta& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
    for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
    trim();
    return *this;
}

PolyDelta operator*(const PolyDelta& a, const PolyDelta& b) {
    PolyDelta out;
    if (a.is_zero() || b.is_zero()) return out;
    out.coef_.assign(a.coef_.size() + b.coef_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coef_.size(); ++i)
        for (size_t j = 0; j < b.coef_.size(); ++j) out.coef_[i + j] += a.coef_[i] * b.coef_[j];
    out.trim();
    return out;
}

namespace {
bool coeff_is_zero(const Rational& c) { return c == 0; }
bool coeff_is_zero(const PolyDelta& c) { return c.is_zero(); }
}  // namespace

template <class Coeff>
void AlgebraElement<Coeff>::add_term(const WalledDiagram& d, Coeff c) {
    if (d.m() != m_ || d.n() != n_)
        throw std::invalid_argument("algebra element: diagram has wrong strand counts");
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, std::move(c));
    } else {
        it->second += c;
        if (coeff_is_zero(it->second)) terms_.erase(it);
    }
}

template <class Coeff>
AlgebraElement<Coeff>& AlgebraElement<Coeff>::operator+=(const AlgebraElement& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

template <class Coeff>
AlgebraElement<Coeff>& AlgebraElement<Coeff>::operator-=(const AlgebraElement& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add_term(d, Coeff(0) - c);
    return *this;
}

template <class Coeff>
AlgebraElement<Coeff>& AlgebraElement<Coeff>::operator*=(const Coeff& c) {
    if (coeff_is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, v] : terms_) v = v * c;
    return *this;
}

template <class Coeff>
void AlgebraElement<Coeff>::check_compatible(const AlgebraElement& o) const {
    if (m_ != o.m_ || n_ != o.n_)
        throw std::invalid_argument("algebra elements live in different algebras");
    if (delta_.has_value() != o.delta_.has_value() ||
        (delta_ && o.delta_ && *delta_ != *o.delta_))
        throw std::invalid_argument("algebra elements specialized at different delta");
}

template <>
Rational AlgebraElement<Rational>::loop_factor(int loops) const {
    if (!delta_) throw std::logic_error("specialized element without delta");
    Rational f(1);
    for (int i = 0; i < loops; ++i) f *= *delta_;
    return f;
}

template <>
PolyDelta AlgebraElement<PolyDelta>::loop_factor(int loops) const {
    return PolyDelta::delta_power(loops);
}

template class AlgebraElement<Rational>;
template class AlgebraElement<PolyDelta>;

RationalElement identity_element(int m, int n, Rational delta) {
    RationalElement e(m, n, std::move(delta));
    e.add_term(WalledDiagram::identity(m, n), Rational(1));
    return e;
}

GenericElement identity_element_generic(int m, int n) {
    GenericElement e(m, n);
    e.add_term(WalledDiagram::identity(m, n), PolyDelta(1));
    return e;
}

RationalElement element_a(int m, int n, Rational delta) {
    RationalElement e(m, n, std::move(delta));
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= n; ++b)
            e.add_term(generator_t(GeneratorKind::Arc, a, b, m, n), Rational(1));
    return e;
}

GenericElement element_a_generic(int m, int n) {
    GenericElement e(m, n);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= n; ++b)
            e.add_term(generator_t(GeneratorKind::Arc, a, b, m, n), PolyDelta(1));
    return e;
}

bool is_semisimple(int m, int n, const std::optional<Rational>& delta) {
    if (m < 1 || n < 1) throw std::invalid_argument("is_semisimple: m, n must be positive");
    if (!delta || !is_integer(*delta)) return true;
    Integer z = numerator(*delta);
    if (abs(z) >= m + n - 1) return true;
    if (z == 0) {
        return (m == 1 && n == 2) || (m == 1 && n == 3) || (m == 2 && n == 1) ||
               (m == 3 && n == 1);
    }
    return false;
}

RationalElement element_p(int m, int n, const Rational& delta) {
    if (!is_semisimple(m, n, delta))
        throw math_error("B_{" + std::to_string(m) + "," + std::to_string(n) + "}(" +
                         to_string(delta) + ") is not semisimple");
    std::set<Rational> values;
    for (const AffineEigenvalue& e : wb_spec_a(m, n)) {
        if (e.r == 0 && e.c == 0) continue;
        Rational v = Rational(e.r) * delta + Rational(e.c);
        if (v == 0)
            throw math_error("zero eigenvalue at delta = " + to_string(delta) + " from " +
                             std::to_string(e.r) + "*delta + " + std::to_string(e.c));
        values.insert(v);
    }
    RationalElement p = identity_element(m, n, delta);
    RationalElement a = element_a(m, n, delta);
    // Factors in descending eigenvalue order, matching the frozen convention.
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
        RationalElement factor = identity_element(m, n, delta);
        factor -= a * (Rational(1) / *it);
        p = p * factor;
    }
    return p;
}

}  // namespace traceless
