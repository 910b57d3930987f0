#include "wallscan/io.hpp"

#include <fstream>

namespace wallscan {

json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw parse_error("rationals are encoded as integers or \"p/q\" strings");
}

json divisor_to_json(const DivisorClass& d) {
    json arr = json::array();
    for (const auto& x : d.c) arr.push_back(rational_to_json(x));
    return arr;
}

DivisorClass divisor_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw parse_error("divisor classes are nonempty arrays of rationals");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return DivisorClass(std::move(c));
}

json chern_to_json(const ChernCharacter& ch) {
    return json{{"r", ch.r}, {"c1", divisor_to_json(ch.c1)}, {"ch2", rational_to_json(ch.ch2)}};
}

ChernCharacter chern_from_json(const json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("c1") || !j.contains("ch2"))
        throw parse_error("characters need fields r, c1, ch2");
    if (!j.at("r").is_number_integer())
        throw parse_error("character rank must be an integer");
    ChernCharacter ch;
    ch.r = j.at("r").get<long>();
    ch.c1 = divisor_from_json(j.at("c1"));
    ch.ch2 = rational_from_json(j.at("ch2"));
    return ch;
}

json point_to_json(const StabilityPoint& pt) {
    return json{{"coords", "tilde"},
                {"s", rational_to_json(pt.s)},
                {"u", rational_to_json(pt.u)},
                {"t", rational_to_json(pt.t)}};
}

StabilityPoint point_from_json(const json& j) {
    if (!j.is_object() || !j.contains("s") || !j.contains("u") || !j.contains("t"))
        throw parse_error("points need fields s, u, t");
    // points travel in tilde units only; a coords tag, when present, must say so
    if (j.contains("coords") && j.at("coords") != json("tilde"))
        throw parse_error("points must carry tilde coordinates");
    return StabilityPoint(rational_from_json(j.at("s")), rational_from_json(j.at("u")),
                          rational_from_json(j.at("t")));
}

json surface_to_json(const SurfacePreset& s) {
    json j;
    j["name"] = s.name;
    j["rank"] = s.lattice.rank();
    json gram = json::array();
    for (const auto& row : s.lattice.gram()) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rational_to_json(x));
        gram.push_back(r);
    }
    j["gram"] = gram;
    j["h0"] = divisor_to_json(s.frame.h0);
    j["g0"] = divisor_to_json(s.frame.g0);
    if (s.effective_generators) {
        j["effective_generators"] =
            json::array({divisor_to_json(s.effective_generators->first),
                         divisor_to_json(s.effective_generators->second)});
    }
    json neg = json::array();
    for (const auto& c : s.negative_curves) neg.push_back(divisor_to_json(c));
    j["negative_curves"] = neg;
    return j;
}

SurfacePreset surface_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("gram") || !j.contains("h0"))
        throw parse_error("surfaces need fields rank, gram, h0");
    if (!j.at("rank").is_number_integer())
        throw parse_error("surface rank must be an integer");
    const int rank = j.at("rank").get<int>();
    if (!j.at("gram").is_array() || static_cast<int>(j.at("gram").size()) != rank)
        throw parse_error("gram must be a rank x rank array");
    std::vector<std::vector<Rational>> gram;
    for (const auto& row : j.at("gram")) {
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw parse_error("gram must be a rank x rank array");
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(rational_from_json(x));
        gram.push_back(std::move(r));
    }
    IntersectionLattice lat(rank, std::move(gram));

    const DivisorClass h0 = divisor_from_json(j.at("h0"));
    std::optional<DivisorClass> g0;
    if (j.contains("g0")) g0 = divisor_from_json(j.at("g0"));

    std::vector<DivisorClass> negatives;
    if (j.contains("negative_curves"))
        for (const auto& e : j.at("negative_curves"))
            negatives.push_back(divisor_from_json(e));

    std::optional<std::pair<DivisorClass, DivisorClass>> gens;
    if (j.contains("effective_generators")) {
        const auto& eg = j.at("effective_generators");
        if (!eg.is_array() || eg.size() != 2)
            throw parse_error("effective_generators must list exactly two classes");
        DivisorClass c1 = divisor_from_json(eg[0]);
        DivisorClass c2 = divisor_from_json(eg[1]);
        // a unique negative generator sits first
        if (sign(lat.self(c1)) >= 0 && sign(lat.self(c2)) < 0) std::swap(c1, c2);
        gens = std::make_pair(std::move(c1), std::move(c2));
    }

    std::optional<DivisorClass> orient;
    if (gens)
        orient = gens->first;
    else if (!negatives.empty())
        orient = negatives.front();

    SliceFrame frame = make_frame(lat, h0, g0, orient);
    SurfacePreset preset{j.value("name", std::string("surface")), std::move(lat),
                         std::move(frame), std::move(gens), std::move(negatives)};

    for (const auto& c : preset.negative_curves) {
        if (sign(preset.lattice.self(c)) >= 0)
            throw parse_error("negative_curves entries must have negative square");
        if (sign(preset.lattice.pair(c, preset.frame.h0)) <= 0)
            throw parse_error("negative_curves entries must pair positively with h0");
    }
    if (preset.effective_generators) {
        const auto& [c1, c2] = *preset.effective_generators;
        if (sign(preset.lattice.pair(c1, preset.frame.h0)) <= 0 ||
            sign(preset.lattice.pair(c2, preset.frame.h0)) <= 0)
            throw parse_error("effective generators must pair positively with h0");
    }
    return preset;
}

json bounds_to_json(const ScanBounds& b) {
    json j;
    j["max_cone_coeff"] = b.max_cone_coeff;
    j["max_length"] = b.max_length;
    j["max_rank"] = b.max_rank;
    json grid = json::array();
    for (const auto& u : b.u_grid) grid.push_back(rational_to_json(u));
    j["u_grid"] = grid;
    return j;
}

ScanBounds bounds_from_json(const json& j) {
    ScanBounds b;
    if (!j.is_object()) throw parse_error("bounds must be an object");
    if (j.contains("max_cone_coeff")) b.max_cone_coeff = j.at("max_cone_coeff").get<long>();
    if (j.contains("max_length")) b.max_length = j.at("max_length").get<long>();
    if (j.contains("max_rank")) b.max_rank = j.at("max_rank").get<long>();
    if (j.contains("u_grid"))
        for (const auto& e : j.at("u_grid")) b.u_grid.push_back(rational_from_json(e));
    if (b.max_cone_coeff < 0 || b.max_length < 0 || b.max_rank < 1)
        throw parse_error("bounds out of range");
    return b;
}

json wall_to_json(const WallConic& w) {
    json j;
    j["A"] = rational_to_json(w.A);
    j["B2"] = rational_to_json(w.B2);
    j["C2"] = rational_to_json(w.C2);
    j["D1"] = rational_to_json(w.D1);
    const WallClass c = classify(w);
    j["kind"] = wall_kind_name(c.kind);
    j["delta_sign"] = c.delta_sign;
    j["c_sign"] = c.c_sign;
    j["weakly_destabilizing"] = c.weakly_destabilizing;
    j["sub"] = chern_to_json(w.sub);
    j["base"] = chern_to_json(w.base);
    return j;
}

static json candidate_to_json(const CandidateSubobject& c) {
    json j;
    j["label"] = c.label;
    j["provenance"] = provenance_name(c.provenance);
    j["ch"] = chern_to_json(c.ch);
    j["cone_class"] = divisor_to_json(c.cone_class);
    j["length"] = rational_to_json(c.length);
    if (!c.parent.empty()) j["parent"] = c.parent;
    return j;
}

json report_to_json(const ScanReport& r) {
    json j;
    j["mode"] = scan_mode_name(r.mode);
    j["exec"] = exec_mode_name(r.exec);
    j["surface"] = r.surface;
    j["bounds"] = bounds_to_json(r.bounds);
    j["passed"] = r.passed();
    j["certified_empty"] = r.certified_empty;
    j["elapsed_seconds"] = r.elapsed_seconds;
    json cands = json::array();
    for (size_t i = 0; i < r.candidates.size(); ++i) {
        json c = candidate_to_json(r.candidates[i]);
        if (i < r.walls.size()) c["wall"] = wall_to_json(r.walls[i]);
        cands.push_back(std::move(c));
    }
    j["candidates"] = cands;
    json excl = json::array();
    for (const auto& e : r.exclusions)
        excl.push_back(json{{"C", divisor_to_json(e.C)}, {"n", rational_to_json(e.n)},
                            {"reason", e.reason}});
    j["exclusions"] = excl;
    json planes = json::array();
    for (const auto& p : r.planes) {
        json pe;
        pe["u"] = rational_to_json(p.u);
        pe["dominant"] = p.dominant;
        if (p.outermost) pe["outermost"] = *p.outermost;
        pe["outer_ties"] = p.outer_ties;
        pe["live_chain"] = p.live_chain;
        planes.push_back(std::move(pe));
    }
    j["planes"] = planes;
    json viol = json::array();
    for (const auto& v : r.violations)
        viol.push_back(json{{"u", rational_to_json(v.u)}, {"candidate", v.candidate},
                            {"detail", v.detail}});
    j["violations"] = viol;
    return j;
}

static HNFactor factor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("c1") || !j.contains("ch2"))
        throw parse_error("profile factors need fields r, c1, ch2");
    if (!j.at("r").is_number_integer())
        throw parse_error("factor rank must be an integer");
    HNFactor f;
    f.rank = j.at("r").get<long>();
    f.c1 = divisor_from_json(j.at("c1"));
    f.ch2 = rational_from_json(j.at("ch2"));
    return f;
}

std::vector<CandidateSubobject> injected_from_json(const json& j, const SurfacePreset& surface) {
    if (!j.is_array()) throw parse_error("injected candidates must be an array");
    std::vector<CandidateSubobject> out;
    long idx = 0;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("ch") || !e.contains("profile") ||
            !e.contains("quotient_h0_c1"))
            throw parse_error("injected candidates need ch, profile, quotient_h0_c1");
        CandidateSubobject c;
        c.ch = chern_from_json(e.at("ch"));
        const auto& prof = e.at("profile");
        if (!prof.is_object() || !prof.contains("factors"))
            throw parse_error("profiles need a factors array");
        for (const auto& f : prof.at("factors"))
            c.profile.sub_factors.push_back(factor_from_json(f));
        if (prof.contains("quotient_factors"))
            for (const auto& f : prof.at("quotient_factors"))
                c.profile.quotient_factors.push_back(factor_from_json(f));
        c.quotient_h0_c1 = divisor_from_json(e.at("quotient_h0_c1"));
        c.provenance = Provenance::Injected;
        c.cone_class = DivisorClass::zero(2);
        // n = C^2/2 - ch2(E - sum of quotient factors)
        c.length = surface.lattice.self(c.quotient_h0_c1) / 2 - c.ch.ch2;
        for (const auto& f : c.profile.quotient_factors) c.length += f.ch2;
        c.label = e.value("label", "inj:" + std::to_string(idx));
        if (c.ch.c1.rank() != surface.lattice.rank() ||
            c.quotient_h0_c1.rank() != surface.lattice.rank())
            throw parse_error("injected classes do not match the surface rank");
        out.push_back(std::move(c));
        ++idx;
    }
    return out;
}

// spec forms: O(-c1,...,cn) | IZ(c1,...,cn;m) | TOR(c1,...,cn) | raw r;c1,...,cn;ch2
ChernCharacter parse_object_spec(const std::string& spec, const SurfacePreset& surface,
                                 bool cone_basis) {
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : s) {
            if (ch == sep) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
        return parts;
    };
    auto parse_class = [&](const std::string& body) {
        std::vector<Rational> coeffs;
        for (const auto& p : split(body, ','))
            coeffs.push_back(rational_from_string(p));
        DivisorClass d(std::move(coeffs));
        if (cone_basis) {
            if (!surface.effective_generators)
                throw parse_error("cone-basis coefficients need effective generators");
            if (d.rank() != 2)
                throw parse_error("cone-basis coefficients are two numbers");
            return d.c[0] * surface.effective_generators->first +
                   d.c[1] * surface.effective_generators->second;
        }
        if (d.rank() != surface.lattice.rank())
            throw parse_error("coefficient count does not match the lattice rank");
        return d;
    };
    auto body_of = [&](const std::string& head) {
        if (spec.size() < head.size() + 2 || spec.compare(0, head.size(), head) != 0 ||
            spec[head.size()] != '(' || spec.back() != ')')
            throw parse_error("malformed object spec: " + spec);
        return spec.substr(head.size() + 1, spec.size() - head.size() - 2);
    };
    if (spec.rfind("O(-", 0) == 0) {
        const std::string body = spec.substr(3, spec.size() - 4);
        if (spec.back() != ')') throw parse_error("malformed object spec: " + spec);
        return line_bundle_minus(surface.lattice, parse_class(body));
    }
    if (spec.rfind("IZ(", 0) == 0) {
        const std::string body = body_of("IZ");
        const auto parts = split(body, ';');
        if (parts.size() != 2) throw parse_error("IZ spec needs a ;length suffix");
        return ideal_sheaf_twist(surface.lattice, parse_class(parts[0]),
                                 rational_from_string(parts[1]));
    }
    if (spec.rfind("TOR(", 0) == 0)
        return torsion_on_curve(surface.lattice, parse_class(body_of("TOR")));
    if (spec.rfind("raw ", 0) == 0) {
        const auto parts = split(spec.substr(4), ';');
        if (parts.size() != 3) throw parse_error("raw spec is r;c1,...,cn;ch2");
        const Rational r = rational_from_string(parts[0]);
        if (!is_integer(r)) throw parse_error("raw rank must be an integer");
        ChernCharacter ch;
        ch.r = static_cast<long>(mpz_get_si(r.get_num().get_mpz_t()));
        std::vector<Rational> coeffs;
        for (const auto& p : split(parts[1], ','))
            coeffs.push_back(rational_from_string(p));
        ch.c1 = DivisorClass(std::move(coeffs));
        if (ch.c1.rank() != surface.lattice.rank())
            throw parse_error("raw c1 does not match the lattice rank");
        ch.ch2 = rational_from_string(parts[2]);
        return ch;
    }
    throw parse_error("unknown object spec: " + spec);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

} // namespace wallscan
