#include "wallscan/charge.hpp"

namespace wallscan {

StabilityPoint::StabilityPoint(Rational s_, Rational u_, Rational t_)
    : s(std::move(s_)), u(std::move(u_)), t(std::move(t_)) {
    if (sign(t) < 0)
        throw precondition_error("stability points live in the closed upper half space t >= 0");
}

StabilityPoint::Display StabilityPoint::display(const SliceFrame& frame) const {
    // normalized coordinates s = s~*sqrt(h), u = u~*sqrt(g), t = t~*sqrt(h)
    const double sh = std::sqrt(to_double(frame.h));
    const double sg = std::sqrt(to_double(frame.g));
    return Display{to_double(s) * sh, to_double(u) * sg, to_double(t) * sh};
}

Charge central_charge(const ChernCharacter& ch, const SliceFrame& frame,
                      const StabilityPoint& pt) {
    if (sign(pt.t) <= 0)
        throw precondition_error("central charge needs t > 0");
    const SliceCoords sc = slice_coords(ch, frame);
    const Rational& h = frame.h;
    const Rational& g = frame.g;
    Charge z;
    z.re = -ch.ch2 + sc.a * pt.s - sc.b * pt.u
           - Rational(ch.r) / 2 * (h * pt.s * pt.s - g * pt.u * pt.u - h * pt.t * pt.t);
    z.im = pt.t * (sc.a - Rational(ch.r) * h * pt.s);
    return z;
}

ExtendedRational beta(const Charge& z) {
    if (sign(z.im) == 0) {
        const int sr = sign(z.re);
        if (sr < 0) return ExtendedRational::plus_inf();
        if (sr > 0) return ExtendedRational::minus_inf();
        throw precondition_error("slope of the zero charge");
    }
    return ExtendedRational::finite(-z.re / z.im);
}

ExtendedRational factor_slope(const HNFactor& f, const SliceFrame& frame) {
    return mumford_slope(ChernCharacter{f.rank, f.c1, f.ch2}, frame);
}

bool in_heart_semistable(const ChernCharacter& ch, const SliceFrame& frame,
                         const StabilityPoint& pt, bool shifted) {
    if (ch.r < 0) throw precondition_error("heart test needs a sheaf-shaped class");
    const ExtendedRational mu = mumford_slope(ch, frame);
    const ExtendedRational s = ExtendedRational::finite(pt.s);
    // a slope-semistable sheaf sits in the tilt at s below its slope,
    // and its shift sits there at s at or above the slope
    return shifted ? (mu <= s) : (s < mu);
}

SubobjectWindow subobject_window(const HNProfile& profile, const SliceFrame& frame) {
    if (profile.sub_factors.empty())
        throw precondition_error("subobject window needs at least one sub-side factor");
    SubobjectWindow w;
    const HNFactor& last = profile.sub_factors.back();
    const ExtendedRational hi = factor_slope(last, frame);
    if (hi.kind != ExtendedRational::Kind::Finite)
        throw precondition_error("sub-side minimal slope must be finite");
    w.hi = hi.value;
    if (sign(w.hi) >= 0)
        throw precondition_error("subobject window must sit at negative slope");
    w.lo = profile.quotient_factors.empty()
               ? ExtendedRational::minus_inf()
               : factor_slope(profile.quotient_factors.front(), frame);
    if (!(w.lo < ExtendedRational::finite(w.hi)))
        throw precondition_error("subobject window is empty");
    return w;
}

} // namespace wallscan
