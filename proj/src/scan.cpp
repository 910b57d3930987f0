#include "wallscan/scan.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wallscan {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::LineBundleMinusC: return "line-bundle";
        case Provenance::IdealSheaf: return "ideal-sheaf";
        case Provenance::TorsionOnC: return "torsion";
        case Provenance::BertramReduced: return "reduced";
        case Provenance::Injected: return "injected";
    }
    return "?";
}

const char* scan_mode_name(ScanMode m) {
    switch (m) {
        case ScanMode::Rank2OneNegative: return "one-negative";
        case ScanMode::Rank2TwoNegative: return "two-negative";
        case ScanMode::NoNegativeCurves: return "no-negative";
        case ScanMode::DualShift: return "dual";
    }
    return "?";
}

const char* exec_mode_name(ExecMode m) {
    return m == ExecMode::Serial ? "serial" : "openmp";
}

static std::string cone_label(long alpha, long beta) {
    std::ostringstream os;
    os << "(" << alpha << "," << beta << ")";
    return os.str();
}

std::vector<CandidateSubobject> rank_one_candidates(const SurfacePreset& surface,
                                                    const ScanBounds& bounds,
                                                    std::vector<Exclusion>* excl) {
    if (!surface.effective_generators)
        throw precondition_error("candidate enumeration needs effective cone generators");
    const auto& [C1, C2] = *surface.effective_generators;
    const IntersectionLattice& lat = surface.lattice;
    std::vector<CandidateSubobject> out;
    for (long alpha = 0; alpha <= bounds.max_cone_coeff; ++alpha) {
        for (long beta = 0; beta <= bounds.max_cone_coeff; ++beta) {
            if (alpha == 0 && beta == 0) continue;
            const DivisorClass C = Rational(alpha) * C1 + Rational(beta) * C2;
            const Rational csq = lat.self(C);
            if (sign(csq) >= 0) {
                if (excl)
                    excl->push_back({C, Rational(-1),
                                     "C^2 >= 0: the wall of I_Z(-C) is not a left hyperbola"});
                continue;
            }
            for (long n = 0; n <= bounds.max_length; ++n) {
                CandidateSubobject cand;
                cand.ch = ideal_sheaf_twist(lat, C, Rational(n));
                cand.profile.sub_factors = {HNFactor{1, cand.ch.c1, cand.ch.ch2}};
                cand.quotient_h0_c1 = C;
                cand.provenance = n == 0 ? Provenance::LineBundleMinusC : Provenance::IdealSheaf;
                cand.cone_class = DivisorClass({Rational(alpha), Rational(beta)});
                cand.length = Rational(n);
                cand.label = (n == 0 ? "O-" + cone_label(alpha, beta)
                                     : "IZ" + cone_label(alpha, beta) + ":" + std::to_string(n));
                out.push_back(std::move(cand));
            }
        }
    }
    return out;
}

// Numeric validation of an externally supplied candidate. Enumerated ones
// satisfy all of this by construction.
static void validate_candidate(const CandidateSubobject& cand, const SurfacePreset& surface) {
    const IntersectionLattice& lat = surface.lattice;
    const SliceFrame& frame = surface.frame;
    if (cand.ch.r < 1)
        throw precondition_error("candidate subobjects must have positive rank");
    const auto& K = cand.profile.sub_factors;
    const auto& J = cand.profile.quotient_factors;
    if (K.empty())
        throw precondition_error("candidate profile needs at least one sub-side factor");
    long rank_sum = 0;
    DivisorClass c1_sum = DivisorClass::zero(lat.rank());
    Rational ch2_sum(0);
    auto check_list = [&](const std::vector<HNFactor>& list, const char* side) {
        for (size_t i = 0; i < list.size(); ++i) {
            if (list[i].rank < 1)
                throw precondition_error(std::string(side) + " factors must have positive rank");
            const ChernCharacter fch{list[i].rank, list[i].c1, list[i].ch2};
            if (!bogomolov_ok(lat, fch))
                throw precondition_error(std::string(side) +
                                         " factor violates the discriminant inequality");
            if (i > 0 && !(factor_slope(list[i], frame) < factor_slope(list[i - 1], frame)))
                throw precondition_error(std::string(side) +
                                         " factor slopes must strictly decrease");
        }
    };
    check_list(K, "sub");
    check_list(J, "quotient");
    for (const auto& f : K) {
        rank_sum += f.rank;
        c1_sum = c1_sum + f.c1;
        ch2_sum += f.ch2;
    }
    if (rank_sum != cand.ch.r || !(c1_sum == cand.ch.c1) || ch2_sum != cand.ch.ch2)
        throw precondition_error("sub-side factors do not sum to the candidate character");
    // residual E - sum(J) must look like I_Z(-C) for C = quotient_h0_c1
    ChernCharacter resid = cand.ch;
    for (const auto& f : J) {
        resid.r -= f.rank;
        resid.c1 = resid.c1 - f.c1;
        resid.ch2 -= f.ch2;
    }
    if (resid.r != 1)
        throw precondition_error("quotient factors must leave a rank-1 residual");
    if (!(resid.c1 == -cand.quotient_h0_c1))
        throw precondition_error("residual c1 does not match the recorded quotient class");
    const Rational n = lat.self(cand.quotient_h0_c1) / 2 - resid.ch2;
    if (!is_integer(n) || sign(n) < 0)
        throw precondition_error("residual ch2 is not an ideal sheaf value");
    if (sign(lat.pair(cand.ch.c1, frame.h0)) == 0)
        throw precondition_error("candidate wall degenerates to planes (a = 0)");
    subobject_window(cand.profile, frame);  // throws when empty or nonnegative
}

// Liveness: the open s~ interval of the t~ > 0 semicircle meets the window.
static bool live_at(const WallConic& w, const SubobjectWindow& win, const Rational& u) {
    const CircleSlice c = pi_u_circle_raw(w, u);
    if (sign(c.radius_sq) <= 0) return false;
    // center - r < hi
    const bool below_hi = c.center <= win.hi ||
                          (c.center - win.hi) * (c.center - win.hi) < c.radius_sq;
    if (!below_hi) return false;
    // center + r > lo
    if (win.lo.kind != ExtendedRational::Kind::Finite) return true;
    const Rational& lo = win.lo.value;
    return lo <= c.center || (lo - c.center) * (lo - c.center) < c.radius_sq;
}

std::optional<CandidateSubobject> bertram_reduce(const CandidateSubobject& cand,
                                                 const Rational& u, const SliceFrame& frame) {
    const auto& K = cand.profile.sub_factors;
    const auto& J = cand.profile.quotient_factors;
    const ChernCharacter base = structure_sheaf(frame.lattice.rank());
    const WallConic w = wall(cand.ch, base, frame);

    auto finish = [&](CandidateSubobject child) -> std::optional<CandidateSubobject> {
        child.provenance = Provenance::BertramReduced;
        child.parent = cand.label;
        child.step = cand.step + 1;
        child.label = cand.label + "~r" + std::to_string(child.step);
        child.cone_class = cand.cone_class;
        child.length = cand.length;
        if (sign(frame.lattice.pair(child.ch.c1, frame.h0)) == 0)
            throw internal_error("reduction produced a plane-degenerate class");
        const WallConic cw = wall(child.ch, base, frame);
        const Nesting rel = nesting_compare(w, cw, u);
        if (rel != Nesting::FirstInsideSecond && rel != Nesting::Equal)
            throw internal_error("reduction produced a smaller wall");
        return child;
    };

    if (K.size() >= 2) {
        const ExtendedRational mu = factor_slope(K.back(), frame);
        if (mu.kind == ExtendedRational::Kind::Finite && crosses_line(w, u, mu.value)) {
            CandidateSubobject child = cand;
            const HNFactor& f = K.back();
            child.ch.r -= f.rank;
            child.ch.c1 = child.ch.c1 - f.c1;
            child.ch.ch2 -= f.ch2;
            child.profile.sub_factors.pop_back();
            return finish(std::move(child));
        }
    }
    if (!J.empty()) {
        const ExtendedRational mu = factor_slope(J.front(), frame);
        if (mu.kind == ExtendedRational::Kind::Finite && crosses_line(w, u, mu.value)) {
            CandidateSubobject child = cand;
            const HNFactor& f = J.front();
            child.ch.r -= f.rank;
            child.ch.c1 = child.ch.c1 - f.c1;
            child.ch.ch2 -= f.ch2;
            child.profile.quotient_factors.erase(child.profile.quotient_factors.begin());
            // the residual class C is re-read from what is left
            ChernCharacter resid = child.ch;
            for (const auto& g : child.profile.quotient_factors) {
                resid.r -= g.rank;
                resid.c1 = resid.c1 - g.c1;
                resid.ch2 -= g.ch2;
            }
            if (resid.r == 1) child.quotient_h0_c1 = -resid.c1;
            return finish(std::move(child));
        }
    }
    return std::nullopt;
}

namespace {

struct LiveWall {
    std::string label;
    WallConic w;
    DivisorClass quotient_c1;
};

struct PlaneScratch {
    PlaneEntry entry;
    std::vector<Violation> violations;
};

// Collect live walls at u, closing the candidate set under rank reduction.
std::vector<LiveWall> collect_live(const Rational& u, const SurfacePreset& surface,
                                   const std::vector<CandidateSubobject>& candidates,
                                   long max_rank, std::vector<Violation>* violations) {
    const SliceFrame& frame = surface.frame;
    const ChernCharacter base = structure_sheaf(surface.lattice.rank());
    std::vector<LiveWall> live;
    for (const auto& c0 : candidates) {
        CandidateSubobject cur = c0;
        for (long depth = 0;; ++depth) {
            if (depth > 2 * max_rank)
                throw internal_error("rank reduction did not terminate");
            const WallConic w = wall(cur.ch, base, frame);
            std::optional<SubobjectWindow> win;
            try {
                win = subobject_window(cur.profile, frame);
            } catch (const precondition_error&) {
                break;  // the reduced chain left the negative-slope range
            }
            if (live_at(w, *win, u)) live.push_back({cur.label, w, cur.quotient_h0_c1});
            std::optional<CandidateSubobject> child;
            try {
                child = bertram_reduce(cur, u, frame);
            } catch (const internal_error& e) {
                if (!violations) throw;
                violations->push_back({u, cur.label, e.what()});
                break;
            }
            if (!child) break;
            cur = std::move(*child);
        }
    }
    return live;
}

// Insertion sort outermost-first with exact nesting comparisons; equal conics
// group together.
OutermostResult order_live(const Rational& u, std::vector<LiveWall> live,
                           std::vector<Violation>* violations) {
    OutermostResult res;
    std::vector<std::vector<LiveWall>> groups;  // outermost group first
    for (auto& lw : live) {
        bool placed = false;
        for (size_t gi = 0; gi < groups.size() && !placed; ++gi) {
            Nesting rel;
            try {
                rel = nesting_compare(lw.w, groups[gi][0].w, u);
            } catch (const internal_error& e) {
                if (!violations) throw;
                violations->push_back({u, lw.label, e.what()});
                placed = true;
                break;
            }
            switch (rel) {
                case Nesting::Equal:
                    groups[gi].push_back(lw);
                    placed = true;
                    break;
                case Nesting::SecondInsideFirst:
                    groups.insert(groups.begin() + static_cast<long>(gi), {lw});
                    placed = true;
                    break;
                case Nesting::FirstInsideSecond:
                    break;  // keep walking inward
                default:
                    // live walls are never empty; disjoint live walls break
                    // the total order and are reported upstream
                    if (!violations) throw internal_error("live walls are not nested");
                    violations->push_back(
                        {u, lw.label, std::string("live wall not nested: ") +
                                          nesting_name(rel) + " against " + groups[gi][0].label});
                    placed = true;
                    break;
            }
        }
        if (!placed) groups.push_back({lw});
    }
    for (const auto& g : groups)
        for (const auto& lw : g) res.chain.push_back(lw.label);
    if (!groups.empty()) {
        res.outermost = groups[0][0].label;
        for (const auto& lw : groups[0]) res.ties.push_back(lw.label);
    }
    return res;
}

struct DominanceSide {
    WallConic wall;
    std::string label;
};

void scan_plane(const Rational& u, const SurfacePreset& surface,
                const std::vector<CandidateSubobject>& candidates, long max_rank,
                const DominanceSide& dom, PlaneScratch& out) {
    out.entry.u = u;
    out.entry.dominant = dom.label;
    std::vector<LiveWall> live =
        collect_live(u, surface, candidates, max_rank, &out.violations);
    for (const auto& lw : live) {
        Nesting rel;
        try {
            rel = nesting_compare(lw.w, dom.wall, u);
        } catch (const internal_error& e) {
            out.violations.push_back({u, lw.label, e.what()});
            continue;
        }
        if (rel != Nesting::FirstInsideSecond && rel != Nesting::Equal)
            out.violations.push_back(
                {u, lw.label,
                 std::string("live wall escapes the dominant one: ") + nesting_name(rel)});
    }
    OutermostResult ord = order_live(u, live, &out.violations);
    out.entry.outermost = ord.outermost;
    out.entry.outer_ties = ord.ties;
    out.entry.live_chain = ord.chain;
    if (ord.outermost) {
        // the outermost live wall must be the dominant conic itself, a left
        // hyperbola whose quotient curve class has negative square
        const auto it = std::find_if(live.begin(), live.end(),
                                     [&](const LiveWall& lw) { return lw.label == *ord.outermost; });
        if (it != live.end()) {
            if (!it->w.same_conic(dom.wall))
                out.violations.push_back(
                    {u, it->label, "outermost live wall differs from the dominant one"});
            if (classify(it->w).kind != WallKind::LeftHyperbola)
                out.violations.push_back({u, it->label, "outermost live wall is not a left hyperbola"});
            if (sign(surface.lattice.self(it->quotient_c1)) >= 0)
                out.violations.push_back(
                    {u, it->label, "outermost quotient class does not have negative square"});
        }
    }
}

void run_planes(const std::vector<Rational>& grid,
                const std::function<void(size_t, PlaneScratch&)>& body, ExecMode exec,
                std::vector<PlaneScratch>& scratch) {
    scratch.resize(grid.size());
    // nothing may throw across a parallel region; anything unexpected turns
    // into a violation on its own plane
    auto safe_body = [&](size_t i) {
        try {
            body(i, scratch[i]);
        } catch (const std::exception& e) {
            scratch[i].entry.u = grid[i];
            scratch[i].violations.push_back({grid[i], "plane", e.what()});
        }
    };
    if (exec == ExecMode::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(grid.size()); ++i)
            safe_body(static_cast<size_t>(i));
        return;
#endif
    }
    for (size_t i = 0; i < grid.size(); ++i) safe_body(i);
}

} // namespace

OutermostResult outermost_wall_at(const Rational& u, const SurfacePreset& surface,
                                  const std::vector<CandidateSubobject>& candidates,
                                  long max_rank) {
    std::vector<LiveWall> live = collect_live(u, surface, candidates, max_rank, nullptr);
    return order_live(u, std::move(live), nullptr);
}

OutermostResult outermost_wall_at(const Rational& u, const SurfacePreset& surface,
                                  const ScanBounds& bounds) {
    return outermost_wall_at(u, surface, rank_one_candidates(surface, bounds),
                             bounds.max_rank);
}

ScanReport verify_rank2_conjecture(const SurfacePreset& surface, const ScanBounds& bounds,
                                   ScanMode mode, ExecMode exec,
                                   const std::vector<CandidateSubobject>& injected) {
    const auto t0 = std::chrono::steady_clock::now();
    if (mode != ScanMode::Rank2OneNegative && mode != ScanMode::Rank2TwoNegative)
        throw precondition_error("dominance scans run in the one- or two-negative mode");
    const size_t want = mode == ScanMode::Rank2OneNegative ? 1 : 2;
    if (surface.negative_curves.size() != want)
        throw precondition_error("surface negative-curve count does not match the scan mode");

    ScanReport rep;
    rep.mode = mode;
    rep.exec = exec;
    rep.surface = surface.name;
    rep.bounds = bounds;

    const SliceFrame& frame = surface.frame;
    const ChernCharacter base = structure_sheaf(surface.lattice.rank());
    std::vector<DominanceSide> sides;
    std::vector<Rational> thresholds;  // u~ >= thr for side 0, u~ <= -thr-style below
    for (size_t i = 0; i < surface.negative_curves.size(); ++i) {
        const DivisorClass& Cneg = surface.negative_curves[i];
        DominanceSide side;
        side.wall = wall(line_bundle_minus(surface.lattice, Cneg), base, frame);
        side.label = "dominant:" + std::to_string(i);
        sides.push_back(side);
        thresholds.push_back(frame.lattice.pair(Cneg, frame.g0) / frame.g);
    }

    rep.candidates = rank_one_candidates(surface, bounds, &rep.exclusions);
    for (const auto& inj : injected) {
        validate_candidate(inj, surface);
        rep.candidates.push_back(inj);
    }
    for (const auto& c : rep.candidates)
        rep.walls.push_back(wall(c.ch, base, frame));

    // map each grid plane to the side whose dominance claim covers it
    struct PlaneJob {
        Rational u;
        size_t side;
    };
    std::vector<PlaneJob> jobs;
    for (const auto& u : bounds.u_grid) {
        if (mode == ScanMode::Rank2OneNegative) {
            jobs.push_back({u, 0});
            continue;
        }
        // side i certifies the half-space of its own curve: u~ >= C1.G0/g
        // (positive pairing) or u~ <= C2.G0/g (negative pairing)
        for (size_t i = 0; i < sides.size(); ++i) {
            const Rational& thr = thresholds[i];
            const bool covered = sign(thr) > 0 ? u >= thr : u <= thr;
            if (covered) jobs.push_back({u, i});
        }
    }

    std::vector<Rational> grid;
    for (const auto& j : jobs) grid.push_back(j.u);
    std::vector<PlaneScratch> scratch;
    run_planes(grid,
               [&](size_t i, PlaneScratch& out) {
                   scan_plane(jobs[i].u, surface, rep.candidates, bounds.max_rank,
                              sides[jobs[i].side], out);
               },
               exec, scratch);
    for (auto& s : scratch) {
        rep.planes.push_back(std::move(s.entry));
        for (auto& v : s.violations) rep.violations.push_back(std::move(v));
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ScanReport verify_no_negative_curves(const SurfacePreset& surface, const ScanBounds& bounds,
                                     ExecMode exec) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!surface.negative_curves.empty())
        throw precondition_error("surface carries negative curves");
    ScanReport rep;
    rep.mode = ScanMode::NoNegativeCurves;
    rep.exec = exec;
    rep.surface = surface.name;
    rep.bounds = bounds;
    rep.candidates = rank_one_candidates(surface, bounds, &rep.exclusions);
    for (const auto& c : rep.candidates)
        rep.violations.push_back(
            {Rational(0), c.label, "weakly destabilizing candidate on a surface without negative curves"});
    rep.certified_empty = rep.candidates.empty();
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ScanReport dual_scan_for_shift(const SurfacePreset& surface, const ScanBounds& bounds,
                               ExecMode exec) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!surface.effective_generators)
        throw precondition_error("dual scan needs effective cone generators");
    if (surface.negative_curves.size() != 1)
        throw precondition_error("dual scan transfers dominance from the one-negative mode");
    ScanReport rep;
    rep.mode = ScanMode::DualShift;
    rep.exec = exec;
    rep.surface = surface.name;
    rep.bounds = bounds;

    const IntersectionLattice& lat = surface.lattice;
    const SliceFrame& frame = surface.frame;
    const ChernCharacter o = structure_sheaf(lat.rank());
    const ChernCharacter o1 = shifted_structure_sheaf(lat.rank());
    const auto& [C1, C2] = *surface.effective_generators;

    // mirror identity on the full cone grid
    for (long alpha = 0; alpha <= bounds.max_cone_coeff; ++alpha) {
        for (long beta = 0; beta <= bounds.max_cone_coeff; ++beta) {
            if (alpha == 0 && beta == 0) continue;
            const DivisorClass C = Rational(alpha) * C1 + Rational(beta) * C2;
            CandidateSubobject cand;
            cand.ch = torsion_on_curve(lat, C);
            cand.provenance = Provenance::TorsionOnC;
            cand.cone_class = DivisorClass({Rational(alpha), Rational(beta)});
            cand.label = "TOR" + cone_label(alpha, beta);
            const WallConic primal = wall(line_bundle_minus(lat, C), o, frame);
            const WallConic dual = wall(cand.ch, o1, frame);
            if (!dual.same_conic(mirror(primal)))
                rep.violations.push_back(
                    {Rational(0), cand.label, "dual wall is not the mirror of the primal wall"});
            if (s0_subobject_witness(cand.ch, frame))
                rep.violations.push_back(
                    {Rational(0), cand.label, "torsion class on a curve claims the s~ = 0 plane"});
            rep.candidates.push_back(std::move(cand));
            rep.walls.push_back(dual);
        }
    }

    // dominance transfer: primal nesting against the distinguished wall at u~
    // must reappear mirrored at -u~
    const WallConic w1 = wall(line_bundle_minus(lat, surface.negative_curves[0]), o, frame);
    const WallConic m1 = mirror(w1);
    std::vector<CandidateSubobject> primal_cands = rank_one_candidates(surface, bounds);
    std::vector<PlaneScratch> scratch;
    run_planes(bounds.u_grid,
               [&](size_t i, PlaneScratch& out) {
                   const Rational& u = bounds.u_grid[i];
                   out.entry.u = -u;
                   out.entry.dominant = "mirror:dominant:0";
                   const ChernCharacter base = o;
                   for (const auto& c : primal_cands) {
                       const WallConic pw = wall(c.ch, base, frame);
                       const SubobjectWindow win = subobject_window(c.profile, frame);
                       if (!live_at(pw, win, u)) continue;
                       Nesting direct, mirrored;
                       try {
                           direct = nesting_compare(pw, w1, u);
                           mirrored = nesting_compare(mirror(pw), m1, -u);
                       } catch (const internal_error& e) {
                           out.violations.push_back({-u, c.label, e.what()});
                           continue;
                       }
                       if (direct != mirrored)
                           out.violations.push_back(
                               {-u, c.label, "mirrored nesting disagrees with the primal one"});
                       if (mirrored != Nesting::FirstInsideSecond && mirrored != Nesting::Equal)
                           out.violations.push_back(
                               {-u, c.label, std::string("mirrored wall escapes the mirrored dominant: ") +
                                                 nesting_name(mirrored)});
                       out.entry.live_chain.push_back("mirror:" + c.label);
                   }
               },
               exec, scratch);
    for (auto& s : scratch) {
        rep.planes.push_back(std::move(s.entry));
        for (auto& v : s.violations) rep.violations.push_back(std::move(v));
    }
    rep.certified_empty = false;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

bool s0_subobject_witness(const ChernCharacter& ch, const SliceFrame& frame) {
    return ch.r == 0 && sign(frame.lattice.pair(ch.c1, frame.h0)) == 0;
}

} // namespace wallscan
