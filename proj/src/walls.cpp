#include "wallscan/walls.hpp"

namespace wallscan {

std::array<Rational, 4> WallConic::canonical_key() const {
    std::array<Rational, 4> k{A, B2, C2, D1};
    for (const auto& x : k) {
        if (sign(x) != 0) {
            const Rational lead = x;
            for (auto& y : k) y /= lead;
            break;
        }
    }
    return k;
}

// clear denominators with one positive integer factor; the raw integer
// coefficients are kept as-is so they stay comparable across bases
static void canonical_scale(Rational& A, Rational& B2, Rational& C2, Rational& D1) {
    std::array<Rational*, 4> v{&A, &B2, &C2, &D1};
    mpz_class den(1);
    for (auto* x : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x->get_den().get_mpz_t());
    if (den != 1)
        for (auto* x : v) *x *= Rational(den);
}

WallConic wall(const ChernCharacter& e, const ChernCharacter& b, const SliceFrame& frame) {
    const SliceCoords se = slice_coords(e, frame);
    const SliceCoords sb = slice_coords(b, frame);
    const Rational re(e.r), rb(b.r);
    const Rational rho_a = re * sb.a - rb * se.a;
    const Rational kappa = e.ch2 * sb.a - b.ch2 * se.a;
    const Rational kappa_r = e.ch2 * rb - b.ch2 * re;
    const Rational beta_a = se.b * sb.a - sb.b * se.a;
    const Rational beta_r = se.b * rb - sb.b * re;
    if (sign(kappa) != 0 || sign(beta_a) != 0)
        throw precondition_error("wall locus misses the origin and is not a slice conic");
    WallConic w;
    w.A = rho_a;
    w.B2 = 2 * beta_r;
    w.C2 = frame.q * rho_a;
    w.D1 = 2 * kappa_r;
    canonical_scale(w.A, w.B2, w.C2, w.D1);
    w.sub = e;
    w.base = b;
    return w;
}

Rational wall_delta(const WallConic& w) {
    return w.B2 * w.B2 - 4 * w.A * w.C2;
}

WallClass classify(const WallConic& w) {
    WallClass c;
    if (w.all_zero()) {
        c.kind = WallKind::Degenerate;
        c.delta_sign = 0;
        c.c_sign = 0;
        c.weakly_destabilizing = false;
        return c;
    }
    const bool quad_zero = sign(w.A) == 0 && sign(w.B2) == 0 && sign(w.C2) == 0;
    c.delta_sign = sign(wall_delta(w));
    c.c_sign = sign(w.D1);
    if (quad_zero) {
        c.kind = WallKind::VerticalLine;
        c.weakly_destabilizing = false;
        return c;
    }
    if (c.delta_sign > 0)
        c.kind = c.c_sign == 0 ? WallKind::Cone
                               : (c.c_sign > 0 ? WallKind::RightHyperbola : WallKind::LeftHyperbola);
    else if (c.delta_sign == 0)
        c.kind = WallKind::Parabola;
    else
        c.kind = WallKind::Ellipse;
    c.weakly_destabilizing = c.delta_sign > 0 || (c.c_sign > 0 && c.delta_sign <= 0);
    return c;
}

const char* wall_kind_name(WallKind k) {
    switch (k) {
        case WallKind::Parabola: return "parabola";
        case WallKind::Ellipse: return "ellipse";
        case WallKind::Cone: return "cone";
        case WallKind::RightHyperbola: return "right-hyperbola";
        case WallKind::LeftHyperbola: return "left-hyperbola";
        case WallKind::VerticalLine: return "vertical-line";
        case WallKind::Degenerate: return "degenerate";
    }
    return "?";
}

SpecialPoints special_points(const WallConic& w) {
    if (sign(w.A) == 0)
        throw precondition_error("special points need a nondegenerate quadratic part");
    const Rational delta = wall_delta(w);
    if (sign(delta) == 0)
        throw precondition_error("special points are undefined for a parabolic wall");
    if (sign(w.D1) == 0)
        throw precondition_error("special points are undefined for a wall through the origin only");
    SpecialPoints sp;
    sp.p_w = {4 * w.C2 * w.D1 / delta, -2 * w.B2 * w.D1 / delta};
    const Rational rad = w.A * w.C2;
    if (sign(rad) < 0)
        throw internal_error("horizontal tangent points are not real");
    if (sign(w.B2) == 0) {
        const Rational s0 = -w.D1 / (2 * w.A);
        const Rational tc = w.D1 / (2 * rad);
        sp.horizontal[0] = {QuadExt(s0), QuadExt(Rational(0), tc, rad)};
        sp.horizontal[1] = {QuadExt(s0), QuadExt(Rational(0), -tc, rad)};
        return sp;
    }
    // roots of -A*delta*s^2 + 4*A*C2*D1*s + C2*D1^2 = 0
    const Rational p = 2 * w.C2 * w.D1 / delta;
    const Rational tc = abs(w.D1 * w.B2) / (w.A * delta);
    for (int i = 0; i < 2; ++i) {
        const QuadExt s(p, i == 0 ? tc : -tc, rad);
        const QuadExt u = Rational(-1) / w.B2 * (2 * w.A * s + QuadExt(w.D1));
        sp.horizontal[i] = {s, u};
    }
    return sp;
}

std::array<AsymptoteDirection, 2> asymptote_directions(const WallConic& w) {
    const Rational delta = wall_delta(w);
    if (sign(delta) <= 0)
        throw precondition_error("asymptotes need a hyperbolic wall");
    std::array<AsymptoteDirection, 2> out;
    if (sign(w.C2) == 0) {
        out[0] = {true, QuadExt(Rational(0))};
        if (sign(w.B2) == 0)
            throw internal_error("hyperbolic wall with B2 = C2 = 0");
        out[1] = {false, QuadExt(-w.A / w.B2)};
        return out;
    }
    for (int i = 0; i < 2; ++i) {
        const Rational t = (i == 0 ? Rational(1) : Rational(-1)) / (2 * w.C2);
        out[i] = {false, QuadExt(-w.B2 / (2 * w.C2), t, delta)};
    }
    return out;
}

CircleSlice pi_u_circle_raw(const WallConic& w, const Rational& u) {
    if (sign(w.A) == 0)
        throw precondition_error("plane slices need a nondegenerate quadratic part");
    CircleSlice c;
    c.center = -(w.B2 * u + w.D1) / (2 * w.A);
    c.radius_sq = c.center * c.center - (w.C2 / w.A) * u * u;
    return c;
}

std::optional<CircleSlice> pi_u_circle(const WallConic& w, const Rational& u) {
    CircleSlice c = pi_u_circle_raw(w, u);
    if (sign(c.radius_sq) <= 0) return std::nullopt;
    return c;
}

const char* nesting_name(Nesting n) {
    switch (n) {
        case Nesting::FirstInsideSecond: return "first-inside-second";
        case Nesting::SecondInsideFirst: return "second-inside-first";
        case Nesting::Equal: return "equal";
        case Nesting::FirstEmpty: return "first-empty";
        case Nesting::SecondEmpty: return "second-empty";
        case Nesting::BothEmpty: return "both-empty";
        case Nesting::ExternallyDisjoint: return "externally-disjoint";
    }
    return "?";
}

Nesting nesting_compare(const WallConic& w1, const WallConic& w2, const Rational& u) {
    const CircleSlice c1 = pi_u_circle_raw(w1, u);
    const CircleSlice c2 = pi_u_circle_raw(w2, u);
    const bool e1 = sign(c1.radius_sq) <= 0;
    const bool e2 = sign(c2.radius_sq) <= 0;
    if (e1 && e2) return Nesting::BothEmpty;
    if (e1) return Nesting::FirstEmpty;
    if (e2) return Nesting::SecondEmpty;
    const Rational d2 = (c1.center - c2.center) * (c1.center - c2.center);
    const Rational S = c1.radius_sq + c2.radius_sq;
    const Rational T = (d2 - S) * (d2 - S);
    const Rational P = 4 * c1.radius_sq * c2.radius_sq;
    if (T < P)
        throw internal_error("plane circles cross transversally");
    if (d2 > S) return Nesting::ExternallyDisjoint;
    if (c1.radius_sq == c2.radius_sq) {
        if (sign(d2) == 0) return Nesting::Equal;
        throw internal_error("equal-radius circles neither equal nor disjoint");
    }
    return c1.radius_sq < c2.radius_sq ? Nesting::FirstInsideSecond
                                       : Nesting::SecondInsideFirst;
}

Coincidence coincidence_u(const WallConic& w1, const WallConic& w2) {
    if (sign(w1.A) == 0 || sign(w2.A) == 0)
        throw precondition_error("coincidence needs nondegenerate quadratic parts");
    if (w1.same_conic(w2))
        throw precondition_error("walls are globally equal");
    const Rational coeff = w1.B2 * w2.A - w2.B2 * w1.A;
    const Rational rhs = w2.D1 * w1.A - w1.D1 * w2.A;
    Coincidence co;
    if (sign(coeff) == 0) {
        if (sign(rhs) == 0)
            throw internal_error("proportional walls escaped the equality test");
        co.u0 = std::nullopt;
        co.at_zero = false;
        return co;
    }
    co.u0 = rhs / coeff;
    co.at_zero = sign(*co.u0) == 0;
    return co;
}

bool crosses_line(const WallConic& w, const Rational& u, const Rational& s_line) {
    const CircleSlice c = pi_u_circle_raw(w, u);
    if (sign(c.radius_sq) <= 0) return false;
    return (s_line - c.center) * (s_line - c.center) < c.radius_sq;
}

WallConic mirror(const WallConic& w) {
    WallConic m = w;
    m.D1 = -w.D1;
    m.sub = ChernCharacter{w.sub.r, -w.sub.c1, w.sub.ch2};
    m.base = ChernCharacter{w.base.r, -w.base.c1, w.base.ch2};
    return m;
}

} // namespace wallscan
