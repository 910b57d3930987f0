#include "wallscan/lattice.hpp"

#include <numeric>

namespace wallscan {

bool DivisorClass::is_zero() const {
    for (const auto& x : c)
        if (sign(x) != 0) return false;
    return true;
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass out = *this;
    for (auto& x : out.c) x = -x;
    return out;
}

static void check_same_rank(const DivisorClass& a, const DivisorClass& b) {
    if (a.rank() != b.rank())
        throw precondition_error("divisor classes of different rank");
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    check_same_rank(a, b);
    DivisorClass out = a;
    for (int i = 0; i < out.rank(); ++i) out.c[i] += b.c[i];
    return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    check_same_rank(a, b);
    DivisorClass out = a;
    for (int i = 0; i < out.rank(); ++i) out.c[i] -= b.c[i];
    return out;
}

DivisorClass operator*(const Rational& s, const DivisorClass& a) {
    DivisorClass out = a;
    for (auto& x : out.c) x *= s;
    return out;
}

// Exact congruence diagonalization (symmetric Gaussian elimination). The
// inertia of the diagonal is the signature; a zero row along the way means a
// degenerate form.
std::pair<int, int> form_signature(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(m[i].size()) != n)
            throw precondition_error("signature of a non-square matrix");
    for (int k = 0; k < n; ++k) {
        if (sign(m[k][k]) == 0) {
            int swap_row = -1, mix_row = -1;
            for (int j = k + 1; j < n; ++j) {
                if (sign(m[j][j]) != 0 && swap_row < 0) swap_row = j;
                if (sign(m[k][j]) != 0 && mix_row < 0) mix_row = j;
            }
            if (swap_row >= 0) {
                std::swap(m[k], m[swap_row]);
                for (int r = 0; r < n; ++r) std::swap(m[r][k], m[r][swap_row]);
            } else if (mix_row >= 0) {
                // e_k += e_mix makes the pivot 2*m[k][mix] != 0
                for (int c = 0; c < n; ++c) m[k][c] += m[mix_row][c];
                for (int r = 0; r < n; ++r) m[r][k] += m[r][mix_row];
            } else {
                throw precondition_error("degenerate intersection form");
            }
        }
        for (int i = k + 1; i < n; ++i) {
            if (sign(m[i][k]) == 0) continue;
            const Rational f = m[i][k] / m[k][k];
            for (int c = 0; c < n; ++c) m[i][c] -= f * m[k][c];
            for (int r = 0; r < n; ++r) m[r][i] -= f * m[r][k];
        }
    }
    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        const int s = sign(m[k][k]);
        if (s > 0) ++pos;
        else if (s < 0) ++neg;
        else throw precondition_error("degenerate intersection form");
    }
    return {pos, neg};
}

IntersectionLattice::IntersectionLattice(int rank, std::vector<std::vector<Rational>> gram)
    : rank_(rank), gram_(std::move(gram)) {
    if (rank_ < 2) throw precondition_error("lattice rank must be at least 2");
    if (static_cast<int>(gram_.size()) != rank_)
        throw precondition_error("gram matrix size does not match rank");
    for (int i = 0; i < rank_; ++i) {
        if (static_cast<int>(gram_[i].size()) != rank_)
            throw precondition_error("gram matrix is not square");
        for (int j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw precondition_error("gram matrix is not symmetric");
    }
    const auto [pos, neg] = form_signature(gram_);
    if (pos != 1 || neg != rank_ - 1)
        throw precondition_error("intersection form must have signature (1, rank-1)");
}

Rational IntersectionLattice::pair(const DivisorClass& x, const DivisorClass& y) const {
    if (x.rank() != rank_ || y.rank() != rank_)
        throw precondition_error("divisor rank does not match lattice rank");
    Rational acc(0);
    for (int i = 0; i < rank_; ++i) {
        if (sign(x.c[i]) == 0) continue;
        Rational row(0);
        for (int j = 0; j < rank_; ++j) row += gram_[i][j] * y.c[j];
        acc += x.c[i] * row;
    }
    return acc;
}

static DivisorClass primitive_scale(DivisorClass d) {
    // clear denominators, divide by the gcd of numerators
    mpz_class den(1);
    for (const auto& x : d.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class g(0);
    for (auto& x : d.c) {
        x *= Rational(den);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (sign(g) != 0)
        for (auto& x : d.c) x /= Rational(g);
    return d;
}

SliceFrame make_frame(const IntersectionLattice& lat, const DivisorClass& h0,
                      const std::optional<DivisorClass>& g0_in,
                      const std::optional<DivisorClass>& orient) {
    const Rational h = lat.self(h0);
    if (sign(h) <= 0) throw precondition_error("h0 must have positive self-intersection");

    DivisorClass g0;
    if (g0_in) {
        g0 = *g0_in;
        if (sign(lat.pair(h0, g0)) != 0)
            throw precondition_error("g0 must be orthogonal to h0");
    } else {
        if (lat.rank() != 2)
            throw precondition_error("g0 can only be derived in rank 2");
        // orthogonal complement of h0: rotate the gram image of h0
        const Rational p0 = lat.pair(DivisorClass({Rational(1), Rational(0)}), h0);
        const Rational p1 = lat.pair(DivisorClass({Rational(0), Rational(1)}), h0);
        g0 = primitive_scale(DivisorClass({-p1, p0}));
    }
    if (g0.is_zero()) throw precondition_error("g0 must be nonzero");

    if (orient) {
        const Rational o = lat.pair(*orient, g0);
        if (sign(o) == 0)
            throw precondition_error("orientation class is orthogonal to g0");
        if (sign(o) < 0) g0 = -g0;
    }

    const Rational g = -lat.self(g0);
    if (sign(g) <= 0) throw precondition_error("g0 must have negative self-intersection");

    SliceFrame frame{lat, h0, g0, h, g, g / h};
    return frame;
}

SurfacePreset hirzebruch(long e, const DivisorClass& h0) {
    if (e < 0) throw precondition_error("hirzebruch index must be nonnegative");
    if (h0.rank() != 2) throw precondition_error("hirzebruch h0 must have two coefficients");
    IntersectionLattice lat(2, {{Rational(0), Rational(1)}, {Rational(1), Rational(-e)}});
    const Rational a = h0.c[0], b = h0.c[1];
    if (!(sign(b) > 0 && a > b * Rational(e)))
        throw precondition_error("h0 = aF + bE is ample iff b > 0 and a > b e");
    const DivisorClass F({Rational(1), Rational(0)});
    const DivisorClass E({Rational(0), Rational(1)});
    std::vector<DivisorClass> negatives;
    if (e > 0) negatives.push_back(E);
    return SurfacePreset{"F" + std::to_string(e), lat, make_frame(lat, h0, std::nullopt, E),
                         std::make_pair(E, F), std::move(negatives)};
}

SurfacePreset preset_f1() {
    return hirzebruch(1, DivisorClass({Rational(2), Rational(1)}));
}

SurfacePreset preset_f2() {
    return hirzebruch(2, DivisorClass({Rational(3), Rational(1)}));
}

SurfacePreset preset_p1p1() {
    SurfacePreset p = hirzebruch(0, DivisorClass({Rational(1), Rational(1)}));
    p.name = "P1xP1";
    return p;
}

} // namespace wallscan
