#pragma once

#include "wallscan/lattice.hpp"
#include "wallscan/rational.hpp"

namespace wallscan {

// Chern character (r, c1, ch2). Rank is a plain machine integer; negative
// ranks denote shifted classes.
struct ChernCharacter {
    long r = 0;
    DivisorClass c1;
    Rational ch2 = 0;

    bool operator==(const ChernCharacter&) const = default;
};

ChernCharacter structure_sheaf(int rank);          // ch(O_S) = (1, 0, 0)
ChernCharacter shifted_structure_sheaf(int rank);  // ch(O_S[1]) = (-1, 0, 0)

// ch(O(-C)) = (1, -C, C^2/2)
ChernCharacter line_bundle_minus(const IntersectionLattice& lat, const DivisorClass& C);

// ch(I_Z(-C)) = (1, -C, C^2/2 - n) with n = length(Z), a nonnegative integer
ChernCharacter ideal_sheaf_twist(const IntersectionLattice& lat, const DivisorClass& C,
                                 const Rational& n);

// ch(O(C)|_C) = (0, C, C^2/2); C = 0 gives the zero class, rejected downstream
ChernCharacter torsion_on_curve(const IntersectionLattice& lat, const DivisorClass& C);

// ch(E otimes O(d)) = (r, c1 + r d, ch2 + c1.d + r d^2/2)
ChernCharacter twist(const IntersectionLattice& lat, const ChernCharacter& ch,
                     const DivisorClass& d);

// ch(E[1]) = -ch(E)
ChernCharacter shift(const ChernCharacter& ch);

// Frame coordinates of a character: a = c1.H0, b = -c1.G0, and the square of
// the component of c1 orthogonal to the slice,
//   alpha_sq = c1^2 - a^2/h + b^2/g.
// Hodge index forces alpha_sq <= 0, with equality in rank 2. The normalized
// quantities d_h = a/sqrt(h), d_g = b/sqrt(g) are never materialized.
struct SliceCoords {
    Rational a;
    Rational b;
    Rational alpha_sq;
};

SliceCoords slice_coords(const ChernCharacter& ch, const SliceFrame& frame);

// Tilde Mumford slope a/(r h), the value the heart threshold s~ is compared
// against. +inf for torsion (r = 0); negative rank is rejected (shift first).
ExtendedRational mumford_slope(const ChernCharacter& ch, const SliceFrame& frame);

// Bogomolov inequality c1^2 - 2 r ch2 >= 0 for r >= 0 classes.
bool bogomolov_ok(const IntersectionLattice& lat, const ChernCharacter& ch);

} // namespace wallscan
