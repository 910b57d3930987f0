#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wallscan/rational.hpp"

namespace wallscan {

// Divisor class written in a fixed basis of the Neron-Severi lattice.
struct DivisorClass {
    std::vector<Rational> c;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<Rational> coeffs) : c(std::move(coeffs)) {}
    static DivisorClass zero(int rank) { return DivisorClass(std::vector<Rational>(rank, Rational(0))); }

    int rank() const { return static_cast<int>(c.size()); }
    bool is_zero() const;

    DivisorClass operator-() const;
    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator*(const Rational& s, const DivisorClass& a);
    bool operator==(const DivisorClass&) const = default;
};

// Signature of a symmetric rational matrix as (#positive, #negative) inertia,
// computed exactly by congruence diagonalization. Degenerate forms are rejected.
std::pair<int, int> form_signature(std::vector<std::vector<Rational>> m);

// Symmetric intersection form of signature (1, rank-1), per the Hodge index
// theorem. Checked exactly at construction.
class IntersectionLattice {
public:
    IntersectionLattice(int rank, std::vector<std::vector<Rational>> gram);

    int rank() const { return rank_; }
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }

    Rational pair(const DivisorClass& x, const DivisorClass& y) const;
    Rational self(const DivisorClass& x) const { return pair(x, x); }

    bool operator==(const IntersectionLattice&) const = default;

private:
    int rank_ = 0;
    std::vector<std::vector<Rational>> gram_;
};

// Orthogonal slice frame: H0 with H0^2 = h > 0 and G0 with G0^2 = -g < 0,
// H0.G0 = 0. The normalized classes H = H0/sqrt(h), G = G0/sqrt(g) satisfy
// H^2 = 1, G^2 = -1; all downstream formulas work in the rational tilde
// coordinates induced by this frame, so sqrt(h) and sqrt(g) never materialize.
struct SliceFrame {
    IntersectionLattice lattice;
    DivisorClass h0;
    DivisorClass g0;
    Rational h;  // H0^2
    Rational g;  // -G0^2
    Rational q;  // g/h

    Rational pair(const DivisorClass& x, const DivisorClass& y) const { return lattice.pair(x, y); }
};

// Builds a frame from h0 and an optional g0. When g0 is omitted the lattice
// must have rank 2 and g0 is derived as a generator of the orthogonal
// complement of h0. If orient is given, the sign of g0 is flipped so that
// pair(orient, g0) > 0; otherwise the supplied or derived sign is kept.
SliceFrame make_frame(const IntersectionLattice& lat, const DivisorClass& h0,
                      const std::optional<DivisorClass>& g0 = std::nullopt,
                      const std::optional<DivisorClass>& orient = std::nullopt);

struct SurfacePreset {
    std::string name;
    IntersectionLattice lattice;
    SliceFrame frame;
    // effective cone generators (C1, C2); when present, oriented so that
    // C1.G0 > 0 and C2.G0 < 0
    std::optional<std::pair<DivisorClass, DivisorClass>> effective_generators;
    std::vector<DivisorClass> negative_curves;
};

// Hirzebruch surface F_e in the basis (F, E): F^2 = 0, E^2 = -e, F.E = 1.
// h0 = aF + bE must be ample: b > 0 and a > b*e.
SurfacePreset hirzebruch(long e, const DivisorClass& h0);

SurfacePreset preset_f1();    // F_1 with h0 = 2F + E
SurfacePreset preset_f2();    // F_2 with h0 = 3F + E
SurfacePreset preset_p1p1();  // P1 x P1 with h0 = F1 + F2

} // namespace wallscan
