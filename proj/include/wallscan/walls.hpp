#pragma once

#include <array>
#include <optional>

#include "wallscan/charge.hpp"

namespace wallscan {

// Numerical wall of the pair (E, B) in the slice: the locus where the charges
// of E and B are real-proportional,
//
//   A (s~^2 + t~^2) + B2 s~ u~ + C2 u~^2 + D1 s~ = 0.
//
// Supported bases B are the classes of O_S and O_S[1] (and rational multiples);
// for those the bilinear expansion has no constant or u~-linear term, so the
// four coefficients are complete. Against ch(O_S), the unscaled coefficients
// are A = -a_E, B2 = 2 b_E, C2 = -a_E q, D1 = 2 ch2_E.
//
// Coefficients keep the raw bilinear values (denominators cleared by one
// positive integer factor) with the orientation of the defining pair
// preserved, so classification can read the sign of ch2 off D1.
// canonical_key() normalizes the scale for locus equality tests.
struct WallConic {
    Rational A, B2, C2, D1;
    ChernCharacter sub;   // E
    ChernCharacter base;  // B

    bool all_zero() const {
        return sign(A) == 0 && sign(B2) == 0 && sign(C2) == 0 && sign(D1) == 0;
    }
    std::array<Rational, 4> canonical_key() const;
    bool same_conic(const WallConic& other) const { return canonical_key() == other.canonical_key(); }
};

WallConic wall(const ChernCharacter& e, const ChernCharacter& b, const SliceFrame& frame);

enum class WallKind {
    Parabola,        // delta = 0
    Ellipse,         // delta < 0
    Cone,            // delta > 0, c = 0
    RightHyperbola,  // delta > 0, c > 0
    LeftHyperbola,   // delta > 0, c < 0
    VerticalLine,    // A = B2 = C2 = 0, D1 != 0: the plane s~ = 0
    Degenerate       // identically zero
};

const char* wall_kind_name(WallKind k);

struct WallClass {
    WallKind kind = WallKind::Degenerate;
    int delta_sign = 0;  // sign of B2^2 - 4 A C2, the sign of d_g^2 - d_h^2
    int c_sign = 0;      // sign of D1, the sign of ch2(E) against O_S
    // whether a wall with these signs can weakly destabilize: parabolas and
    // ellipses need c > 0; every delta > 0 shape qualifies
    bool weakly_destabilizing = false;
};

WallClass classify(const WallConic& w);

// Discriminant-like invariant delta~ = B2^2 - 4 A C2.
Rational wall_delta(const WallConic& w);

// Distinguished points of a non-degenerate wall (A != 0, delta != 0, D1 != 0):
// p_w is the second vertical-tangent point (the first is the origin), always
// rational; the two horizontal-tangent points lie on the pullbacks of the
// lines u = +-s and are exact elements of Q(sqrt(A*C2)), rational whenever
// q is a perfect square.
struct SpecialPoints {
    std::pair<Rational, Rational> p_w;
    std::array<std::pair<QuadExt, QuadExt>, 2> horizontal;
};

SpecialPoints special_points(const WallConic& w);

// Asymptote directions of the leading form A s~^2 + B2 s~ u~ + C2 u~^2 for
// delta > 0 walls. Slopes are (-B2 +- sqrt(delta)) / (2 C2) as exact quadratic
// extensions; a vanishing u~^2 coefficient makes one direction vertical.
struct AsymptoteDirection {
    bool vertical = false;
    QuadExt slope;  // u~ / s~, meaningful when !vertical
};

std::array<AsymptoteDirection, 2> asymptote_directions(const WallConic& w);

// Restriction of a wall (A != 0) to the plane u~ = const: the circle
//   (s~ - center)^2 + t~^2 = radius_sq,
//   center = -(B2 u + D1) / (2A),  radius_sq = center^2 - (C2/A) u^2.
struct CircleSlice {
    Rational center;
    Rational radius_sq;
};

// Center and radius_sq regardless of emptiness.
CircleSlice pi_u_circle_raw(const WallConic& w, const Rational& u);

// Empty semicircles (radius_sq <= 0) come back as nullopt.
std::optional<CircleSlice> pi_u_circle(const WallConic& w, const Rational& u);

enum class Nesting {
    FirstInsideSecond,
    SecondInsideFirst,
    Equal,
    FirstEmpty,
    SecondEmpty,
    BothEmpty,
    ExternallyDisjoint
};

const char* nesting_name(Nesting n);

// Exact disk comparison of the two walls' slices at u~. Same-base slices share
// radius_sq = center^2 - q u^2, which rules out transversal crossings; one is
// reported as internal_error if it ever shows up.
Nesting nesting_compare(const WallConic& w1, const WallConic& w2, const Rational& u);

// The unique u~ where the slices of two distinct walls coincide, if any:
// (B2_1 A_2 - B2_2 A_1) u = D1_2 A_1 - D1_1 A_2. at_zero flags the degenerate
// coincidence in the trivial plane u~ = 0.
struct Coincidence {
    std::optional<Rational> u0;
    bool at_zero = false;
};

Coincidence coincidence_u(const WallConic& w1, const WallConic& w2);

// Strict crossing of the vertical line s~ = s_line by the t~ > 0 semicircle:
// (s_line - center)^2 < radius_sq. Tangency does not count.
bool crosses_line(const WallConic& w, const Rational& u, const Rational& s_line);

// Image under (s~, u~) -> (-s~, -u~): flips D1. Provenance classes map to
// their duals (r, -c1, ch2), which cut the same locus.
WallConic mirror(const WallConic& w);

} // namespace wallscan
