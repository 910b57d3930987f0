#include "wallscan/selfcheck.hpp"

namespace wallscan {

long Rng::integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
}

Rational Rng::rational(long max_num, long max_den) {
    return Rational(integer(-max_num, max_num)) / Rational(integer(1, max_den));
}

Rational Rng::positive_rational(long max_num, long max_den) {
    return Rational(integer(1, max_num)) / Rational(integer(1, max_den));
}

SliceFrame synthetic_frame(const Rational& h, const Rational& g) {
    if (sign(h) <= 0 || sign(g) <= 0)
        throw precondition_error("synthetic frames need h > 0 and g > 0");
    IntersectionLattice lat(2, {{h, Rational(0)}, {Rational(0), -g}});
    return make_frame(lat, DivisorClass({Rational(1), Rational(0)}),
                      DivisorClass({Rational(0), Rational(1)}));
}

WallConic synthetic_wall(const Rational& a, const Rational& b, const Rational& ch2,
                         const Rational& q, const Rational& h) {
    const SliceFrame frame = synthetic_frame(h, q * h);
    // c1 = (a/h, b/g) realizes a = c1.H0, b = -c1.G0 with alpha_sq = 0
    const ChernCharacter e{1, DivisorClass({a / frame.h, b / frame.g}), ch2};
    return wall(e, structure_sheaf(2), frame);
}

namespace {

struct Counter {
    SuiteResult res;
    explicit Counter(std::string name) { res.name = std::move(name); }
    void expect(bool ok, const std::string& note = "") {
        ++res.cases;
        if (!ok) {
            ++res.failures;
            if (res.note.empty() && !note.empty()) res.note = note;
        }
    }
};

// exact wall-equation evaluation at a rational point
Rational conic_at(const WallConic& w, const Rational& s, const Rational& u) {
    return w.A * s * s + w.B2 * s * u + w.C2 * u * u + w.D1 * s;
}

// the same in the quadratic extension
QuadExt conic_at(const WallConic& w, const QuadExt& s, const QuadExt& u) {
    return w.A * (s * s) + w.B2 * (s * u) + w.C2 * (u * u) + w.D1 * s;
}

} // namespace

SuiteResult check_classification_grid() {
    Counter c("classification-grid");
    struct Case {
        Rational a, b, ch2;
        WallKind kind;
        int delta_sign, c_sign;
        bool destab;
    };
    const Rational half(1, 2);
    const std::vector<Case> cases = {
        {-1, 2, -half, WallKind::LeftHyperbola, 1, -1, true},
        {-1, 2, 0, WallKind::Cone, 1, 0, true},
        {-1, 2, half, WallKind::RightHyperbola, 1, 1, true},
        {-1, 1, 1, WallKind::Parabola, 0, 1, true},
        {-1, 1, 0, WallKind::Parabola, 0, 0, false},
        {-1, 1, -1, WallKind::Parabola, 0, -1, false},
        {-2, 1, 1, WallKind::Ellipse, -1, 1, true},
        {-2, 1, 0, WallKind::Ellipse, -1, 0, false},
        {-2, 1, -1, WallKind::Ellipse, -1, -1, false},
    };
    for (const auto& cs : cases) {
        const WallConic w = synthetic_wall(cs.a, cs.b, cs.ch2, Rational(1));
        const WallClass k = classify(w);
        c.expect(k.kind == cs.kind && k.delta_sign == cs.delta_sign && k.c_sign == cs.c_sign &&
                     k.weakly_destabilizing == cs.destab,
                 std::string("sign grid mismatch at kind ") + wall_kind_name(cs.kind));
    }
    // the vertical line s~ = 0 and the identically zero wall
    const SurfacePreset f1 = preset_f1();
    const ChernCharacter o = structure_sheaf(2);
    const WallConic vert =
        wall(ideal_sheaf_twist(f1.lattice, DivisorClass::zero(2), Rational(1)), o, f1.frame);
    const WallClass vk = classify(vert);
    c.expect(vk.kind == WallKind::VerticalLine && !vk.weakly_destabilizing &&
                 sign(vert.D1) < 0 && sign(vert.A) == 0,
             "vertical line classification");
    const WallConic dgn = wall(o, shift(o), f1.frame);
    c.expect(classify(dgn).kind == WallKind::Degenerate && dgn.all_zero(),
             "degenerate classification");
    return c.res;
}

SuiteResult check_tangent_points(std::uint64_t seed, long cases) {
    Counter c("tangent-points");
    Rng rng(seed);
    long done = 0;
    while (done < cases) {
        const Rational a = rng.rational(6, 3);
        const Rational b = rng.rational(6, 3);
        const Rational ch2 = rng.rational(6, 3);
        const Rational q = rng.positive_rational(5, 3);
        if (sign(a) == 0 || sign(ch2) == 0) continue;
        const WallConic w = synthetic_wall(a, b, ch2, q);
        if (sign(wall_delta(w)) == 0) continue;
        ++done;
        const SpecialPoints sp = special_points(w);
        const auto& [ps, pu] = sp.p_w;
        bool ok = sign(conic_at(w, ps, pu)) == 0;
        // the vertical-tangent point has a horizontal gradient component zero:
        // partial_u = B2 s + 2 C2 u
        ok = ok && sign(w.B2 * ps + 2 * w.C2 * pu) == 0;
        ok = ok && !(sign(ps) == 0 && sign(pu) == 0);
        c.expect(ok, "p_w fails its defining equations");
        // horizontal-tangent points: on the wall, with partial_s = 0, on the
        // pullback of u = +-s, i.e. s^2 = (C2/A) u^2
        for (const auto& [hs, hu] : sp.horizontal) {
            const QuadExt eq = conic_at(w, hs, hu);
            const QuadExt grad_s = 2 * w.A * hs + w.B2 * hu + QuadExt(w.D1);
            const QuadExt membership = hs * hs - (w.C2 / w.A) * (hu * hu);
            c.expect(eq.is_zero() && grad_s.is_zero() && membership.is_zero(),
                     "horizontal point fails its defining equations");
        }
        if (sign(wall_delta(w)) > 0) {
            for (const auto& dir : asymptote_directions(w)) {
                if (dir.vertical) {
                    c.expect(sign(w.C2) == 0, "vertical asymptote needs C2 = 0");
                } else {
                    const QuadExt m = dir.slope;
                    const QuadExt lead = QuadExt(w.A) + w.B2 * m + w.C2 * (m * m);
                    c.expect(lead.is_zero(), "asymptote slope misses the leading form");
                }
            }
        }
    }
    return c.res;
}

SuiteResult check_nesting(std::uint64_t seed, long pairs, long probes_per_pair) {
    Counter c("nesting");
    Rng rng(seed);
    long done = 0;
    while (done < pairs) {
        const Rational q = rng.positive_rational(5, 3);
        const Rational a1 = rng.rational(6, 2), a2 = rng.rational(6, 2);
        if (sign(a1) == 0 || sign(a2) == 0) continue;
        const WallConic w1 = synthetic_wall(a1, rng.rational(6, 2), rng.rational(6, 2), q);
        const WallConic w2 = synthetic_wall(a2, rng.rational(6, 2), rng.rational(6, 2), q);
        ++done;
        for (long p = 0; p < probes_per_pair; ++p) {
            const Rational u = rng.rational(8, 4);
            Nesting rel;
            try {
                rel = nesting_compare(w1, w2, u);
            } catch (const internal_error&) {
                c.expect(false, "transversal crossing reported");
                continue;
            }
            const CircleSlice c1 = pi_u_circle_raw(w1, u);
            const CircleSlice c2 = pi_u_circle_raw(w2, u);
            const Rational d2 = (c1.center - c2.center) * (c1.center - c2.center);
            bool ok = true;
            switch (rel) {
                case Nesting::BothEmpty:
                    ok = sign(c1.radius_sq) <= 0 && sign(c2.radius_sq) <= 0;
                    break;
                case Nesting::FirstEmpty:
                    ok = sign(c1.radius_sq) <= 0 && sign(c2.radius_sq) > 0;
                    break;
                case Nesting::SecondEmpty:
                    ok = sign(c2.radius_sq) <= 0 && sign(c1.radius_sq) > 0;
                    break;
                case Nesting::Equal:
                    ok = sign(d2) == 0 && c1.radius_sq == c2.radius_sq &&
                         sign(c1.radius_sq) > 0;
                    break;
                case Nesting::ExternallyDisjoint:
                    // d >= r1 + r2 implies d^2 >= rs1 + rs2
                    ok = d2 >= c1.radius_sq + c2.radius_sq;
                    break;
                case Nesting::FirstInsideSecond:
                    // the topmost point of circle 1 lies weakly inside disk 2
                    ok = d2 + c1.radius_sq <= c2.radius_sq && c1.radius_sq < c2.radius_sq;
                    break;
                case Nesting::SecondInsideFirst:
                    ok = d2 + c2.radius_sq <= c1.radius_sq && c2.radius_sq < c1.radius_sq;
                    break;
            }
            c.expect(ok, std::string("relation inconsistent: ") + nesting_name(rel));
        }
    }
    return c.res;
}

SuiteResult check_coincidence(std::uint64_t seed, long pairs) {
    Counter c("coincidence");
    Rng rng(seed);
    long done = 0;
    while (done < pairs) {
        const Rational q = rng.positive_rational(5, 3);
        const Rational a1 = rng.rational(6, 2), a2 = rng.rational(6, 2);
        if (sign(a1) == 0 || sign(a2) == 0) continue;
        const WallConic w1 = synthetic_wall(a1, rng.rational(6, 2), rng.rational(6, 2), q);
        const WallConic w2 = synthetic_wall(a2, rng.rational(6, 2), rng.rational(6, 2), q);
        if (w1.same_conic(w2)) continue;
        ++done;
        const Coincidence co = coincidence_u(w1, w2);
        std::vector<Rational> probes;
        for (long k = -21; k <= 21; ++k) probes.push_back(Rational(k) / 7);
        for (long k = -22; k <= 22; ++k) probes.push_back(Rational(k) / 11);
        if (co.u0) probes.push_back(*co.u0);
        for (const auto& u : probes) {
            const CircleSlice c1 = pi_u_circle_raw(w1, u);
            const CircleSlice c2 = pi_u_circle_raw(w2, u);
            const bool same_slice = c1.center == c2.center && c1.radius_sq == c2.radius_sq;
            const bool is_u0 = co.u0 && u == *co.u0;
            c.expect(same_slice == is_u0, "slice coincidence off the computed plane");
            if (is_u0) c.expect(co.at_zero == (sign(u) == 0), "at_zero flag wrong");
        }
    }
    return c.res;
}

SuiteResult check_twist_equivariance(std::uint64_t seed, long cases) {
    Counter c("twist-equivariance");
    Rng rng(seed);
    for (long i = 0; i < cases; ++i) {
        const Rational h = rng.positive_rational(4, 2);
        const Rational g = rng.positive_rational(4, 2);
        const SliceFrame frame = synthetic_frame(h, g);
        const ChernCharacter ch{rng.integer(-3, 3),
                                DivisorClass({rng.rational(5, 3), rng.rational(5, 3)}),
                                rng.rational(5, 3)};
        const DivisorClass d({rng.rational(5, 3), rng.rational(5, 3)});
        const StabilityPoint pt(rng.rational(5, 3), rng.rational(5, 3),
                                rng.positive_rational(5, 3));
        // tensoring by O(-d) matches translating by the tilde coordinates of d
        const Rational da = frame.pair(d, frame.h0) / frame.h;
        const Rational db = -frame.pair(d, frame.g0) / frame.g;
        const StabilityPoint shifted(pt.s - da, pt.u - db, pt.t);
        const Charge z1 = central_charge(ch, frame, pt);
        const Charge z2 = central_charge(twist(frame.lattice, ch, -d), frame, shifted);
        c.expect(z1 == z2, "charge not equivariant under twist");
    }
    return c.res;
}

SuiteResult check_s0_exclusion(std::uint64_t seed, long cases) {
    Counter c("s0-exclusion");
    Rng rng(seed);
    const SurfacePreset f1 = preset_f1();
    const SliceFrame& frame = f1.frame;
    for (long i = 0; i < cases; ++i) {
        ChernCharacter ch{rng.integer(0, 3),
                          DivisorClass({rng.rational(4, 2), rng.rational(4, 2)}), rng.rational(4, 2)};
        const bool witness = s0_subobject_witness(ch, frame);
        const Rational a = frame.pair(ch.c1, frame.h0);
        // Im Z on the plane s~ = 0 is t~ a: it vanishes identically iff a = 0,
        // and the witness additionally pins the rank to zero
        const StabilityPoint pt(Rational(0), rng.rational(4, 2), rng.positive_rational(4, 2));
        const Charge z = central_charge(ch, frame, pt);
        c.expect((sign(z.im) == 0) == (sign(a) == 0), "Im Z at s~ = 0 contradicts a");
        c.expect(witness == (ch.r == 0 && sign(a) == 0), "witness predicate mismatch");
    }
    return c.res;
}

SuiteResult check_charge_linearity(std::uint64_t seed, long cases) {
    Counter c("charge-linearity");
    Rng rng(seed);
    for (long i = 0; i < cases; ++i) {
        const Rational h = rng.positive_rational(4, 2);
        const Rational g = rng.positive_rational(4, 2);
        const SliceFrame frame = synthetic_frame(h, g);
        const ChernCharacter ch1{rng.integer(-3, 3),
                                 DivisorClass({rng.rational(5, 3), rng.rational(5, 3)}),
                                 rng.rational(5, 3)};
        const ChernCharacter ch2{rng.integer(-3, 3),
                                 DivisorClass({rng.rational(5, 3), rng.rational(5, 3)}),
                                 rng.rational(5, 3)};
        const StabilityPoint pt(rng.rational(5, 3), rng.rational(5, 3),
                                rng.positive_rational(5, 3));
        const ChernCharacter sum{ch1.r + ch2.r, ch1.c1 + ch2.c1, ch1.ch2 + ch2.ch2};
        const Charge z1 = central_charge(ch1, frame, pt);
        const Charge z2 = central_charge(ch2, frame, pt);
        const Charge zs = central_charge(sum, frame, pt);
        c.expect(zs.re == z1.re + z2.re && zs.im == z1.im + z2.im, "charge not additive");
        const Charge zshift = central_charge(shift(ch1), frame, pt);
        c.expect(zshift.re == -z1.re && zshift.im == -z1.im, "shift does not negate the charge");
        const Rational m = rng.rational(5, 3);
        const Charge zsky = central_charge(
            ChernCharacter{0, DivisorClass::zero(2), m}, frame, pt);
        c.expect(zsky.re == -m && sign(zsky.im) == 0, "skyscraper charge wrong");
    }
    return c.res;
}

SuiteResult check_large_t_bound(std::uint64_t seed, long cases) {
    Counter c("large-t-bound");
    Rng rng(seed);
    long done = 0;
    while (done < cases) {
        const Rational a = rng.rational(6, 3);
        if (sign(a) == 0) continue;
        const WallConic w = synthetic_wall(a, rng.rational(6, 3), rng.rational(6, 3),
                                           rng.positive_rational(5, 3));
        ++done;
        const Rational u = rng.rational(8, 4);
        const CircleSlice cs = pi_u_circle_raw(w, u);
        // radius_sq = center^2 - q u^2 <= center^2: every slice stays inside
        // the cone t~ <= |s~ - 0| + |center|; in particular t~ is bounded by
        // |center| on each plane
        c.expect(cs.radius_sq <= cs.center * cs.center, "slice radius exceeds its center bound");
        if (sign(u) != 0)
            c.expect(cs.radius_sq < cs.center * cs.center,
                     "off-axis slice radius not strictly below the center bound");
    }
    return c.res;
}

std::vector<SuiteResult> run_selfcheck(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    out.push_back(check_classification_grid());
    out.push_back(check_tangent_points(seed, 400));
    out.push_back(check_nesting(seed, 400, 12));
    out.push_back(check_coincidence(seed, 200));
    out.push_back(check_twist_equivariance(seed, 500));
    out.push_back(check_s0_exclusion(seed, 500));
    out.push_back(check_charge_linearity(seed, 500));
    out.push_back(check_large_t_bound(seed, 500));
    return out;
}

} // namespace wallscan
