#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "wallscan/errors.hpp"

namespace wallscan {

// All predicates in this library run on exact rationals. Doubles appear only in
// rendering and report cosmetics, never in a comparison that decides anything.
using Rational = mpq_class;

inline int sign(const Rational& x) { return sgn(x); }

inline bool is_integer(const Rational& x) {
    return mpz_cmp_ui(x.get_den().get_mpz_t(), 1) == 0;
}

inline Rational abs(const Rational& x) { return ::abs(x); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline double to_double(const Rational& x) { return x.get_d(); }

// Accepts "p" or "p/q" with optional sign; rejects everything else.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    for (char ch : s) {
        const bool ok = (ch >= '0' && ch <= '9') || ch == '/' || ch == '-' || ch == '+';
        if (!ok) throw parse_error("bad rational literal: '" + s + "'");
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw parse_error("bad rational literal: '" + s + "'");
    if (sgn(v.get_den()) == 0) throw parse_error("zero denominator in '" + s + "'");
    v.canonicalize();
    return v;
}

// Exact square root when x is a perfect rational square.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
    if (sign(x) < 0) return std::nullopt;
    const mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

// Rationals extended with the two infinities, for slopes and beta values.
struct ExtendedRational {
    enum class Kind { MinusInf, Finite, PlusInf };
    Kind kind = Kind::Finite;
    Rational value;

    static ExtendedRational finite(Rational v) { return {Kind::Finite, std::move(v)}; }
    static ExtendedRational plus_inf() { return {Kind::PlusInf, Rational(0)}; }
    static ExtendedRational minus_inf() { return {Kind::MinusInf, Rational(0)}; }

    bool is_finite() const { return kind == Kind::Finite; }

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.kind != b.kind) return false;
        return a.kind != Kind::Finite || a.value == b.value;
    }
    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.kind == Kind::MinusInf) return b.kind != Kind::MinusInf;
        if (a.kind == Kind::PlusInf) return false;
        if (b.kind == Kind::PlusInf) return true;
        if (b.kind == Kind::MinusInf) return false;
        return a.value < b.value;
    }
    friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
        return a < b || a == b;
    }

    std::string str() const {
        if (kind == Kind::PlusInf) return "+inf";
        if (kind == Kind::MinusInf) return "-inf";
        return value.get_str();
    }
};

// Exact element p + t*sqrt(rad) of a real quadratic extension of Q, rad >= 0.
// Used for asymptote slopes and horizontal-tangent points, which are quadratic
// irrationals whenever q = g/h is not a perfect square. Never used in the
// predicates that drive classification, nesting, or scans.
struct QuadExt {
    Rational p;    // rational part
    Rational t;    // coefficient of sqrt(rad)
    Rational rad;  // radicand

    QuadExt() : p(0), t(0), rad(0) {}
    QuadExt(Rational v) : p(std::move(v)), t(0), rad(0) {}  // rationals embed
    QuadExt(Rational p_, Rational t_, Rational rad_)
        : p(std::move(p_)), t(std::move(t_)), rad(std::move(rad_)) {
        if (sign(rad) < 0) throw precondition_error("negative radicand");
        if (auto r = exact_sqrt(rad)) {  // fold perfect squares into the rational part
            p += t * (*r);
            t = 0;
            rad = 0;
        }
        if (sign(t) == 0) rad = 0;
    }
    static QuadExt pure(Rational v) { return QuadExt(std::move(v), Rational(0), Rational(0)); }

    bool is_rational() const { return sign(t) == 0; }
    bool is_zero() const { return sign(p) == 0 && sign(t) == 0; }

    double approx() const {
        return to_double(p) + to_double(t) * std::sqrt(to_double(rad));
    }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        return QuadExt(a.p + b.p, a.t + b.t, joint_radicand(a, b));
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        return QuadExt(a.p - b.p, a.t - b.t, joint_radicand(a, b));
    }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        const Rational r = joint_radicand(a, b);
        return QuadExt(a.p * b.p + a.t * b.t * r, a.p * b.t + a.t * b.p, r);
    }
    friend QuadExt operator*(const Rational& c, const QuadExt& a) {
        return QuadExt(c * a.p, c * a.t, a.rad);
    }
    // value equality: representations may differ by square factors moved
    // between t and rad, so compare (p, sign t, t^2 rad)
    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.p != b.p || sign(a.t) != sign(b.t)) return false;
        return a.t * a.t * a.rad == b.t * b.t * b.rad;
    }

private:
    static Rational joint_radicand(const QuadExt& a, const QuadExt& b) {
        if (a.is_rational()) return b.rad;
        if (b.is_rational()) return a.rad;
        if (a.rad != b.rad) throw precondition_error("mixed radicands in quadratic extension");
        return a.rad;
    }
};

} // namespace wallscan
