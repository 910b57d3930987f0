#pragma once

#include <vector>

#include "wallscan/chern.hpp"

namespace wallscan {

// Point of the divisor slice in tilde coordinates. t >= 0 always; t = 0 points
// are admitted for wall-geometry queries only, never for charge evaluation.
struct StabilityPoint {
    Rational s;
    Rational u;
    Rational t;

    StabilityPoint(Rational s_, Rational u_, Rational t_);

    // normalized coordinates (s, u, t) = (s~ sqrt(h), u~ sqrt(g), t~ sqrt(h)); display only
    struct Display { double s, u, t; };
    Display display(const SliceFrame& frame) const;
};

struct Charge {
    Rational re;
    Rational im;
    bool operator==(const Charge&) const = default;
};

// Central charge in tilde coordinates:
//   Re = -ch2 + a s~ - b u~ - (r/2)(h s~^2 - g u~^2 - h t~^2)
//   Im = t~ (a - r h s~)
// Exact rational in every input. Requires t > 0.
Charge central_charge(const ChernCharacter& ch, const SliceFrame& frame,
                      const StabilityPoint& pt);

// Slope beta = -Re/Im. Im = 0: +inf when Re < 0, -inf when Re > 0; the zero
// charge has no slope and is rejected.
ExtendedRational beta(const Charge& z);

// One Harder-Narasimhan factor. Full character: reductions subtract factor
// classes and Bogomolov is validated per factor, both of which need ch2.
struct HNFactor {
    long rank = 0;
    DivisorClass c1;
    Rational ch2 = 0;
};

// sub_factors: HN factors of the candidate E itself, slopes strictly
// decreasing; quotient_factors: HN factors of H^{-1}(O_S/E), ditto.
struct HNProfile {
    std::vector<HNFactor> sub_factors;
    std::vector<HNFactor> quotient_factors;
};

ExtendedRational factor_slope(const HNFactor& f, const SliceFrame& frame);

// Heart membership of a semistable class at the vertical plane through s~:
// unshifted sheaves require s~ < mu~, shifted ones s~ >= mu~; torsion classes
// are in the heart unshifted at every s~ and never in it shifted.
bool in_heart_semistable(const ChernCharacter& ch, const SliceFrame& frame,
                         const StabilityPoint& pt, bool shifted);

// s~ range on which E embeds into O_S inside the heart: [lo, hi) with
// lo = mu~(first quotient factor) (or -inf) and hi = mu~(last sub factor).
// Requires lo < hi and hi < 0.
struct SubobjectWindow {
    ExtendedRational lo;
    Rational hi;

    bool contains(const Rational& s) const {
        return s < hi && lo <= ExtendedRational::finite(s);
    }
};

SubobjectWindow subobject_window(const HNProfile& profile, const SliceFrame& frame);

} // namespace wallscan
