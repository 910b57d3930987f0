#include <doctest.h>

#include "wallscan/chern.hpp"

using namespace wallscan;

namespace {

DivisorClass dc2(long x, long y) { return DivisorClass({Rational(x), Rational(y)}); }

} // namespace

TEST_CASE("character constructors") {
    auto f1 = preset_f1();
    const auto& lat = f1.lattice;
    const DivisorClass E = dc2(0, 1), F = dc2(1, 0);

    CHECK(structure_sheaf(2) == ChernCharacter{1, dc2(0, 0), Rational(0)});
    CHECK(shifted_structure_sheaf(2) == ChernCharacter{-1, dc2(0, 0), Rational(0)});

    CHECK(line_bundle_minus(lat, E) == ChernCharacter{1, dc2(0, -1), Rational(-1) / 2});
    CHECK(line_bundle_minus(lat, Rational(3) * E + F) ==
          ChernCharacter{1, dc2(-1, -3), Rational(-3) / 2});

    CHECK(ideal_sheaf_twist(lat, E, 1) == ChernCharacter{1, dc2(0, -1), Rational(-3) / 2});
    CHECK(ideal_sheaf_twist(lat, E, 0) == line_bundle_minus(lat, E));
    CHECK_THROWS_AS(ideal_sheaf_twist(lat, E, Rational(-1)), precondition_error);
    CHECK_THROWS_AS(ideal_sheaf_twist(lat, E, Rational(5) / 2), precondition_error);

    CHECK(torsion_on_curve(lat, E) == ChernCharacter{0, dc2(0, 1), Rational(-1) / 2});
    CHECK_THROWS_AS(torsion_on_curve(lat, dc2(0, 0)), precondition_error);
}

TEST_CASE("twist and shift act on characters") {
    auto f1 = preset_f1();
    const auto& lat = f1.lattice;
    const DivisorClass E = dc2(0, 1);

    // twisting O(-E) back up by E gives the trivial character
    CHECK(twist(lat, line_bundle_minus(lat, E), E) == structure_sheaf(2));
    // twist is additive in the divisor
    const ChernCharacter ch{2, dc2(-1, -3), Rational(5) / 2};
    CHECK(twist(lat, twist(lat, ch, E), Rational(-1) * E) == ch);
    // shift negates every component
    const ChernCharacter sh = shift(ch);
    CHECK(sh.r == -2);
    CHECK(sh.c1 == dc2(1, 3));
    CHECK(sh.ch2 == Rational(-5) / 2);
    CHECK(shift(sh) == ch);
}

TEST_CASE("slice coordinates on the first Hirzebruch frame") {
    auto f1 = preset_f1();
    const auto& lat = f1.lattice;
    const DivisorClass E = dc2(0, 1), F = dc2(1, 0);

    SUBCASE("line bundles sit on the null cone of the slice form") {
        const SliceCoords omE = slice_coords(line_bundle_minus(lat, E), f1.frame);
        CHECK(omE.a == -1);
        CHECK(omE.b == 2);
        CHECK(omE.alpha_sq == 0);

        const SliceCoords omF = slice_coords(line_bundle_minus(lat, F), f1.frame);
        CHECK(omF.a == -1);
        CHECK(omF.b == -1);
        CHECK(omF.alpha_sq == 0);
    }

    SUBCASE("the length of an ideal sheaf does not move c1") {
        const SliceCoords iz = slice_coords(ideal_sheaf_twist(lat, E, 4), f1.frame);
        CHECK(iz.a == -1);
        CHECK(iz.b == 2);
        CHECK(iz.alpha_sq == 0);
    }

    SUBCASE("skyscraper-shaped classes have zero slice data") {
        const SliceCoords sky = slice_coords(ChernCharacter{0, dc2(0, 0), Rational(3)}, f1.frame);
        CHECK(sky.a == 0);
        CHECK(sky.b == 0);
        CHECK(sky.alpha_sq == 0);
    }
}

TEST_CASE("slice coordinates can have negative square in higher rank") {
    IntersectionLattice lat(3, {{Rational(1), Rational(0), Rational(0)},
                                {Rational(0), Rational(-1), Rational(0)},
                                {Rational(0), Rational(0), Rational(-1)}});
    const DivisorClass h0({Rational(1), Rational(0), Rational(0)});
    const DivisorClass g0({Rational(0), Rational(1), Rational(0)});
    SliceFrame fr = make_frame(lat, h0, g0);
    const DivisorClass off({Rational(0), Rational(0), Rational(2)});
    const SliceCoords sc = slice_coords(ChernCharacter{1, off, Rational(0)}, fr);
    CHECK(sc.a == 0);
    CHECK(sc.b == 0);
    CHECK(sc.alpha_sq == -4);
}

TEST_CASE("reduced slope") {
    auto f1 = preset_f1();
    const auto& lat = f1.lattice;
    const DivisorClass E = dc2(0, 1);

    CHECK(mumford_slope(line_bundle_minus(lat, E), f1.frame) ==
          ExtendedRational::finite(Rational(-1) / 3));
    CHECK(mumford_slope(ChernCharacter{2, dc2(0, -1), Rational(0)}, f1.frame) ==
          ExtendedRational::finite(Rational(-1) / 6));
    CHECK(mumford_slope(ChernCharacter{0, dc2(0, 1), Rational(0)}, f1.frame) ==
          ExtendedRational::plus_inf());
    CHECK_THROWS_AS(mumford_slope(ChernCharacter{-1, dc2(0, 0), Rational(0)}, f1.frame),
                    precondition_error);
}

TEST_CASE("discriminant inequality") {
    auto f1 = preset_f1();
    const auto& lat = f1.lattice;
    const DivisorClass E = dc2(0, 1);

    CHECK(bogomolov_ok(lat, line_bundle_minus(lat, E)));
    CHECK(bogomolov_ok(lat, ideal_sheaf_twist(lat, E, 3)));
    CHECK(bogomolov_ok(lat, ChernCharacter{2, dc2(0, -5), Rational(-17) / 2}));
    CHECK_FALSE(bogomolov_ok(lat, ChernCharacter{1, dc2(0, 0), Rational(1)}));
    CHECK_FALSE(bogomolov_ok(lat, ChernCharacter{3, dc2(0, -1), Rational(1)}));
}
