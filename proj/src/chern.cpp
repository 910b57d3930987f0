#include "wallscan/chern.hpp"

namespace wallscan {

ChernCharacter structure_sheaf(int rank) {
    return ChernCharacter{1, DivisorClass::zero(rank), Rational(0)};
}

ChernCharacter shifted_structure_sheaf(int rank) {
    return shift(structure_sheaf(rank));
}

ChernCharacter line_bundle_minus(const IntersectionLattice& lat, const DivisorClass& C) {
    if (C.rank() != lat.rank())
        throw precondition_error("divisor rank does not match lattice rank");
    return ChernCharacter{1, -C, lat.self(C) / 2};
}

ChernCharacter ideal_sheaf_twist(const IntersectionLattice& lat, const DivisorClass& C,
                                 const Rational& n) {
    if (!is_integer(n) || sign(n) < 0)
        throw precondition_error("ideal sheaf length must be a nonnegative integer");
    ChernCharacter ch = line_bundle_minus(lat, C);
    ch.ch2 -= n;
    return ch;
}

ChernCharacter torsion_on_curve(const IntersectionLattice& lat, const DivisorClass& C) {
    if (C.is_zero())
        throw precondition_error("torsion sheaf needs a nonzero curve class");
    return ChernCharacter{0, C, lat.self(C) / 2};
}

ChernCharacter twist(const IntersectionLattice& lat, const ChernCharacter& ch,
                     const DivisorClass& d) {
    ChernCharacter out;
    out.r = ch.r;
    out.c1 = ch.c1 + Rational(ch.r) * d;
    out.ch2 = ch.ch2 + lat.pair(ch.c1, d) + Rational(ch.r) * lat.self(d) / 2;
    return out;
}

ChernCharacter shift(const ChernCharacter& ch) {
    return ChernCharacter{-ch.r, -ch.c1, -ch.ch2};
}

SliceCoords slice_coords(const ChernCharacter& ch, const SliceFrame& frame) {
    SliceCoords sc;
    sc.a = frame.lattice.pair(ch.c1, frame.h0);
    sc.b = -frame.lattice.pair(ch.c1, frame.g0);
    sc.alpha_sq = frame.lattice.self(ch.c1) - sc.a * sc.a / frame.h + sc.b * sc.b / frame.g;
    if (sign(sc.alpha_sq) > 0)
        throw internal_error("orthogonal remainder of c1 has positive square");
    return sc;
}

ExtendedRational mumford_slope(const ChernCharacter& ch, const SliceFrame& frame) {
    if (ch.r < 0)
        throw precondition_error("slope needs a sheaf-shaped class (rank >= 0)");
    const Rational a = frame.lattice.pair(ch.c1, frame.h0);
    if (ch.r == 0) return ExtendedRational::plus_inf();
    return ExtendedRational::finite(a / (Rational(ch.r) * frame.h));
}

bool bogomolov_ok(const IntersectionLattice& lat, const ChernCharacter& ch) {
    return sign(lat.self(ch.c1) - Rational(2 * ch.r) * ch.ch2) >= 0;
}

} // namespace wallscan
