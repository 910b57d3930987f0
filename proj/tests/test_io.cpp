#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "wallscan/io.hpp"

using namespace wallscan;

namespace {

DivisorClass dc2(long x, long y) { return DivisorClass({Rational(x), Rational(y)}); }

json f1_json() {
    return json{{"name", "F1"},
                {"rank", 2},
                {"gram", {{0, 1}, {1, -1}}},
                {"h0", {2, 1}},
                {"effective_generators", {{0, 1}, {1, 0}}},
                {"negative_curves", {{0, 1}}}};
}

} // namespace

TEST_CASE("rational json encoding") {
    CHECK(rational_to_json(Rational(-3) / 7) == json("-3/7"));
    CHECK(rational_to_json(Rational(5)) == json("5"));
    CHECK(rational_from_json(json(-12)) == Rational(-12));
    CHECK(rational_from_json(json("22/4")) == Rational(11) / 2);
    CHECK(rational_from_json(rational_to_json(Rational(-355) / 113)) == Rational(-355) / 113);
    CHECK_THROWS_AS(rational_from_json(json(0.5)), parse_error);
    CHECK_THROWS_AS(rational_from_json(json("1/0")), parse_error);
    CHECK_THROWS_AS(rational_from_json(json("abc")), parse_error);
    CHECK_THROWS_AS(rational_from_json(json::object()), parse_error);
}

TEST_CASE("divisor, character and point round trips") {
    const DivisorClass d({Rational(1) / 2, Rational(-3)});
    CHECK(divisor_from_json(divisor_to_json(d)) == d);
    CHECK_THROWS_AS(divisor_from_json(json::array()), parse_error);
    CHECK_THROWS_AS(divisor_from_json(json(7)), parse_error);

    const ChernCharacter ch{2, dc2(0, -5), Rational(-17) / 2};
    const json cj = chern_to_json(ch);
    CHECK(cj.at("r") == 2);
    CHECK(cj.at("ch2") == json("-17/2"));
    CHECK(chern_from_json(cj) == ch);
    CHECK_THROWS_AS(chern_from_json(json{{"r", 1}, {"c1", {0, 1}}}), parse_error);
    CHECK_THROWS_AS(chern_from_json(json{{"r", "x"}, {"c1", {0, 1}}, {"ch2", 0}}), parse_error);

    const StabilityPoint pt(Rational(-1), Rational(1) / 3, Rational(2));
    const json pj = point_to_json(pt);
    CHECK(pj.at("coords") == json("tilde"));
    const StabilityPoint back = point_from_json(pj);
    CHECK(back.s == pt.s);
    CHECK(back.u == pt.u);
    CHECK(back.t == pt.t);
    CHECK_THROWS_AS(point_from_json(json{{"s", 0}, {"u", 0}}), parse_error);
    CHECK_THROWS_AS(point_from_json(json{{"coords", "normalized"}, {"s", 0}, {"u", 0}, {"t", 1}}),
                    parse_error);
    // the coordinate constraint travels through the parser
    CHECK_THROWS_AS(point_from_json(json{{"s", 0}, {"u", 0}, {"t", -1}}), precondition_error);
}

TEST_CASE("surface files") {
    SUBCASE("parse and round trip") {
        const SurfacePreset s = surface_from_json(f1_json());
        CHECK(s.name == "F1");
        CHECK(s.lattice.rank() == 2);
        CHECK(s.frame.h == Rational(3));
        CHECK(s.frame.g == Rational(3));
        CHECK(s.frame.g0 == dc2(1, -1));
        REQUIRE(s.effective_generators.has_value());
        CHECK(s.effective_generators->first == dc2(0, 1));
        REQUIRE(s.negative_curves.size() == 1);

        const SurfacePreset back = surface_from_json(surface_to_json(s));
        CHECK(back.name == s.name);
        CHECK(back.frame.h0 == s.frame.h0);
        CHECK(back.frame.g0 == s.frame.g0);
        CHECK(back.frame.q == s.frame.q);
        CHECK(back.negative_curves == s.negative_curves);

        const SurfacePreset pp = surface_from_json(surface_to_json(preset_p1p1()));
        CHECK(pp.negative_curves.empty());
        CHECK(pp.frame.q == Rational(1));
    }

    SUBCASE("a unique negative generator is moved to the front") {
        json j = f1_json();
        j["effective_generators"] = {{1, 0}, {0, 1}};  // F first
        const SurfacePreset s = surface_from_json(j);
        CHECK(s.effective_generators->first == dc2(0, 1));
        CHECK(s.effective_generators->second == dc2(1, 0));
        // the frame orientation follows the first generator
        CHECK(s.frame.g0 == dc2(1, -1));
    }

    SUBCASE("explicit g0 is honored") {
        // without orienting inputs the supplied sign is kept as-is
        json j = f1_json();
        j.erase("effective_generators");
        j.erase("negative_curves");
        j["g0"] = {-1, 1};
        const SurfacePreset s = surface_from_json(j);
        CHECK(s.frame.g0 == dc2(-1, 1));

        // with cone generators present, orientation follows the first one
        json k = f1_json();
        k["g0"] = {-1, 1};
        CHECK(surface_from_json(k).frame.g0 == dc2(1, -1));
    }

    SUBCASE("defaulted name") {
        json j = f1_json();
        j.erase("name");
        CHECK(surface_from_json(j).name == "surface");
    }

    SUBCASE("rejects") {
        json j = f1_json();
        j.erase("h0");
        CHECK_THROWS_AS(surface_from_json(j), parse_error);

        j = f1_json();
        j["gram"] = {{0, 1, 0}, {1, -1, 0}, {0, 0, -1}};  // 3x3 against rank 2
        CHECK_THROWS_AS(surface_from_json(j), parse_error);

        j = f1_json();
        j["negative_curves"] = {{1, 0}};  // F^2 = 0
        CHECK_THROWS_AS(surface_from_json(j), parse_error);

        j = f1_json();
        j["negative_curves"] = {{0, -1}};  // pairs negatively with h0
        CHECK_THROWS_AS(surface_from_json(j), parse_error);

        j = f1_json();
        j["effective_generators"] = {{0, 1}, {-1, 0}};  // -F against h0
        CHECK_THROWS_AS(surface_from_json(j), parse_error);

        j = f1_json();
        j["effective_generators"] = {{0, 1}};
        CHECK_THROWS_AS(surface_from_json(j), parse_error);

        j = f1_json();
        j["h0"] = {1, 1};  // square 1, but the negative curve no longer pairs positively
        CHECK_THROWS_AS(surface_from_json(j), parse_error);
    }
}

TEST_CASE("bounds files") {
    ScanBounds b;
    b.max_cone_coeff = 6;
    b.max_length = 2;
    b.max_rank = 3;
    b.u_grid = {Rational(1) / 3, Rational(-2)};
    const ScanBounds back = bounds_from_json(bounds_to_json(b));
    CHECK(back.max_cone_coeff == 6);
    CHECK(back.max_length == 2);
    CHECK(back.max_rank == 3);
    REQUIRE(back.u_grid.size() == 2);
    CHECK(back.u_grid[0] == Rational(1) / 3);

    const ScanBounds defaults = bounds_from_json(json::object());
    CHECK(defaults.max_cone_coeff == 8);
    CHECK(defaults.max_length == 5);
    CHECK(defaults.max_rank == 4);
    CHECK(defaults.u_grid.empty());

    CHECK_THROWS_AS(bounds_from_json(json{{"max_rank", 0}}), parse_error);
    CHECK_THROWS_AS(bounds_from_json(json{{"max_length", -1}}), parse_error);
    CHECK_THROWS_AS(bounds_from_json(json::array()), parse_error);
}

TEST_CASE("wall and report serialization") {
    const SurfacePreset f1 = preset_f1();
    const WallConic w =
        wall(line_bundle_minus(f1.lattice, dc2(0, 1)), structure_sheaf(2), f1.frame);
    const json wj = wall_to_json(w);
    CHECK(wj.at("A") == json("1"));
    CHECK(wj.at("B2") == json("4"));
    CHECK(wj.at("C2") == json("1"));
    CHECK(wj.at("D1") == json("-1"));
    CHECK(wj.at("kind") == json("left-hyperbola"));
    CHECK(wj.at("delta_sign") == 1);
    CHECK(wj.at("c_sign") == -1);
    CHECK(wj.at("weakly_destabilizing") == true);
    CHECK(chern_from_json(wj.at("sub")) == w.sub);
    CHECK(chern_from_json(wj.at("base")) == structure_sheaf(2));

    ScanBounds b;
    b.max_cone_coeff = 2;
    b.max_length = 1;
    b.u_grid = {Rational(1), Rational(2)};
    const ScanReport rep =
        verify_rank2_conjecture(f1, b, ScanMode::Rank2OneNegative, ExecMode::Serial);
    const json rj = report_to_json(rep);
    CHECK(rj.at("mode") == json("one-negative"));
    CHECK(rj.at("exec") == json("serial"));
    CHECK(rj.at("surface") == json("F1"));
    CHECK(rj.at("passed") == true);
    CHECK(rj.at("certified_empty") == false);
    CHECK(rj.at("candidates").size() == rep.candidates.size());
    CHECK(rj.at("candidates")[0].at("label") == json("O-(1,0)"));
    CHECK(rj.at("candidates")[0].at("provenance") == json("line-bundle"));
    CHECK(rj.at("candidates")[0].contains("wall"));
    CHECK(rj.at("exclusions").size() == rep.exclusions.size());
    CHECK(rj.at("exclusions")[0].at("reason") ==
          json("C^2 >= 0: the wall of I_Z(-C) is not a left hyperbola"));
    REQUIRE(rj.at("planes").size() == 2);
    CHECK(rj.at("planes")[1].at("u") == json("2"));
    CHECK(rj.at("planes")[1].at("outermost") == json("O-(1,0)"));
    CHECK(rj.at("violations").empty());
}

TEST_CASE("injected candidate files") {
    const SurfacePreset f1 = preset_f1();
    const json one = json{
        {"ch", {{"r", 2}, {"c1", {0, -5}}, {"ch2", "-17/2"}}},
        {"profile",
         {{"factors",
           {{{"r", 1}, {"c1", {0, -2}}, {"ch2", -2}},
            {{"r", 1}, {"c1", {0, -3}}, {"ch2", "-13/2"}}}},
          {"quotient_factors", {{{"r", 1}, {"c1", {0, -4}}, {"ch2", -8}}}}}},
        {"quotient_h0_c1", {0, 1}}};

    SUBCASE("fields land and the length is recomputed") {
        const auto cands = injected_from_json(json::array({one}), f1);
        REQUIRE(cands.size() == 1);
        const CandidateSubobject& c = cands[0];
        CHECK(c.label == "inj:0");
        CHECK(c.provenance == Provenance::Injected);
        CHECK(c.ch == ChernCharacter{2, dc2(0, -5), Rational(-17) / 2});
        CHECK(c.profile.sub_factors.size() == 2);
        CHECK(c.profile.quotient_factors.size() == 1);
        CHECK(c.quotient_h0_c1 == dc2(0, 1));
        CHECK(c.length == Rational(0));  // C^2/2 - ch2 of the residual

        // explicit labels win, and array position names the rest
        json two = one;
        two["label"] = "X";
        const auto named = injected_from_json(json::array({one, two}), f1);
        CHECK(named[0].label == "inj:0");
        CHECK(named[1].label == "X");

        // a structurally valid candidate passes the scan-side validation too
        ScanBounds b;
        b.max_cone_coeff = 1;
        b.max_length = 0;
        b.u_grid = {Rational(4)};
        const ScanReport rep = verify_rank2_conjecture(f1, b, ScanMode::Rank2OneNegative,
                                                       ExecMode::Serial, cands);
        CHECK(rep.passed());
        CHECK(rep.candidates.back().label == "inj:0");
    }

    SUBCASE("structural rejects") {
        CHECK_THROWS_AS(injected_from_json(json::object(), f1), parse_error);
        json bad = one;
        bad.erase("quotient_h0_c1");
        CHECK_THROWS_AS(injected_from_json(json::array({bad}), f1), parse_error);
        bad = one;
        bad["profile"] = json::object();
        CHECK_THROWS_AS(injected_from_json(json::array({bad}), f1), parse_error);
        bad = one;
        bad["ch"]["c1"] = {0, 1, 2};  // wrong lattice rank
        CHECK_THROWS_AS(injected_from_json(json::array({bad}), f1), parse_error);
        bad = one;
        bad["profile"]["factors"][0]["r"] = "one";
        CHECK_THROWS_AS(injected_from_json(json::array({bad}), f1), parse_error);
    }
}

TEST_CASE("object spec mini-language") {
    const SurfacePreset f1 = preset_f1();
    const auto& lat = f1.lattice;

    CHECK(parse_object_spec("O(-0,1)", f1, false) == line_bundle_minus(lat, dc2(0, 1)));
    CHECK(parse_object_spec("O(-1,0)", f1, true) == line_bundle_minus(lat, dc2(0, 1)));
    CHECK(parse_object_spec("O(-3,1)", f1, true) ==
          line_bundle_minus(lat, dc2(1, 3)));  // 3E + F in lattice coordinates
    CHECK(parse_object_spec("IZ(0,1;2)", f1, false) == ideal_sheaf_twist(lat, dc2(0, 1), 2));
    CHECK(parse_object_spec("IZ(1,0;1)", f1, true) == ideal_sheaf_twist(lat, dc2(0, 1), 1));
    CHECK(parse_object_spec("TOR(0,1)", f1, false) == torsion_on_curve(lat, dc2(0, 1)));
    CHECK(parse_object_spec("raw 2;0,-5;-17/2", f1, false) ==
          ChernCharacter{2, dc2(0, -5), Rational(-17) / 2});
    CHECK(parse_object_spec("raw -1;0,0;0", f1, false).r == -1);
    // fractional coefficients ride through
    CHECK(parse_object_spec("O(-0,1/2)", f1, false).c1 ==
          DivisorClass({Rational(0), Rational(-1) / 2}));

    CHECK_THROWS_AS(parse_object_spec("Q(1,1)", f1, false), parse_error);
    CHECK_THROWS_AS(parse_object_spec("O(-0,1", f1, false), parse_error);
    CHECK_THROWS_AS(parse_object_spec("IZ(0,1)", f1, false), parse_error);
    CHECK_THROWS_AS(parse_object_spec("IZ(0,1;1;2)", f1, false), parse_error);
    CHECK_THROWS_AS(parse_object_spec("O(-1)", f1, false), parse_error);
    CHECK_THROWS_AS(parse_object_spec("O(-1,1,1)", f1, true), parse_error);
    CHECK_THROWS_AS(parse_object_spec("raw 1;0,1", f1, false), parse_error);
    CHECK_THROWS_AS(parse_object_spec("raw 3/2;0,1;0", f1, false), parse_error);
    CHECK_THROWS_AS(parse_object_spec("O(-x,y)", f1, false), parse_error);

    // cone-basis coordinates need generators on the preset
    SurfacePreset bare = preset_f1();
    bare.effective_generators.reset();
    CHECK_THROWS_AS(parse_object_spec("O(-1,0)", bare, true), parse_error);
}

TEST_CASE("json file loading") {
    const std::string good = "/tmp/wallscan_io_good.json";
    const std::string bad = "/tmp/wallscan_io_bad.json";
    {
        std::ofstream out(good);
        out << "{\"rank\": 2}";
    }
    {
        std::ofstream out(bad);
        out << "{rank:";
    }
    CHECK(load_json_file(good).at("rank") == 2);
    CHECK_THROWS_AS(load_json_file(bad), parse_error);
    CHECK_THROWS_AS(load_json_file("/tmp/wallscan_io_missing.json"), parse_error);
    std::remove(good.c_str());
    std::remove(bad.c_str());
}
