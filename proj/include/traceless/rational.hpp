#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace traceless {

// Exact scalars used throughout. Expression templates are switched off so the
// types behave like plain value types inside containers and Eigen matrices.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Thrown when a request is mathematically refused (non-semisimple delta,
// vanishing eigenvalue, singular metric). Maps to CLI exit code 3.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "p", "-p" or "p/q". Rejects q == 0 and malformed input.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer p(s.substr(0, slash));
        Integer q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p) / Rational(q);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

// Exact complex rationals, used by the hermitian-metric code path.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(int v) : re(v) {}
    GaussianRational(long v) : re(v) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw math_error("division by zero GaussianRational");
        return a * GaussianRational{b.re / n, -b.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

// Uniform scalar access for the tensor code, which is templated on the
// component type (Rational, double, complex<double>, GaussianRational).
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
    static Rational conjugate(const Rational& x) { return x; }
    static bool is_zero(const Rational& x, double = 0.0) { return x == 0; }
    static double magnitude(const Rational& x) { return std::abs(x.convert_to<double>()); }
};

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool exact = true;
    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return {Rational(1)}; }
    static GaussianRational from_rational(const Rational& q) { return {q}; }
    static GaussianRational conjugate(const GaussianRational& x) { return conj(x); }
    static bool is_zero(const GaussianRational& x, double = 0.0) { return x.re == 0 && x.im == 0; }
    static double magnitude(const GaussianRational& x) {
        return std::abs(std::complex<double>(x.re.convert_to<double>(), x.im.convert_to<double>()));
    }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rational(const Rational& q) { return q.convert_to<double>(); }
    static double conjugate(double x) { return x; }
    static bool is_zero(double x, double tol = 1e-12) { return std::abs(x) <= tol; }
    static double magnitude(double x) { return std::abs(x); }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> from_rational(const Rational& q) {
        return {q.convert_to<double>(), 0.0};
    }
    static std::complex<double> conjugate(const std::complex<double>& x) { return std::conj(x); }
    static bool is_zero(const std::complex<double>& x, double tol = 1e-12) {
        return std::abs(x) <= tol;
    }
    static double magnitude(const std::complex<double>& x) { return std::abs(x); }
};

}  // namespace traceless
