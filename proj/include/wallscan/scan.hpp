#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wallscan/walls.hpp"

namespace wallscan {

enum class Provenance { LineBundleMinusC, IdealSheaf, TorsionOnC, BertramReduced, Injected };

const char* provenance_name(Provenance p);

struct CandidateSubobject {
    ChernCharacter ch;
    HNProfile profile;
    DivisorClass quotient_h0_c1;  // c1 of H^0(O_S/E)
    Provenance provenance = Provenance::IdealSheaf;
    DivisorClass cone_class;      // C, for constructed candidates
    Rational length = 0;          // n, for ideal sheaves
    std::string label;            // stable display id
    std::string parent;           // label of the parent, for BertramReduced
    int step = 0;                 // reduction depth
};

struct ScanBounds {
    long max_cone_coeff = 8;  // C = alpha C1 + beta C2, 0 <= alpha, beta <= this
    long max_length = 5;      // n <= this
    std::vector<Rational> u_grid;
    long max_rank = 4;        // cap on Bertram chain length
};

enum class ScanMode { Rank2OneNegative, Rank2TwoNegative, NoNegativeCurves, DualShift };
enum class ExecMode { Serial, OpenMP };

const char* scan_mode_name(ScanMode m);
const char* exec_mode_name(ExecMode m);

struct Exclusion {
    DivisorClass C;
    Rational n;
    std::string reason;
};

struct Violation {
    Rational u;
    std::string candidate;
    std::string detail;
};

// One u~ plane of a scan: which walls are live (their semicircle meets the
// candidate's subobject window at t~ > 0), ordered outermost first, and who
// dominates.
struct PlaneEntry {
    Rational u;
    std::string dominant;             // label of the reference wall
    std::optional<std::string> outermost;
    std::vector<std::string> outer_ties;
    std::vector<std::string> live_chain;
};

struct ScanReport {
    ScanMode mode = ScanMode::Rank2OneNegative;
    ExecMode exec = ExecMode::Serial;
    std::string surface;
    ScanBounds bounds;
    std::vector<CandidateSubobject> candidates;
    std::vector<WallConic> walls;  // parallel to candidates
    std::vector<Exclusion> exclusions;
    std::vector<PlaneEntry> planes;
    std::vector<Violation> violations;
    bool certified_empty = false;
    double elapsed_seconds = 0.0;

    bool passed() const { return violations.empty(); }
};

// Rank-1 candidates I_Z(-C), C = alpha C1 + beta C2 nonzero within bounds,
// n <= max_length, filtered to the weakly destabilizing shape (C^2 < 0, left
// hyperbola). Excluded classes are recorded with reasons when excl != nullptr.
std::vector<CandidateSubobject> rank_one_candidates(const SurfacePreset& surface,
                                                    const ScanBounds& bounds,
                                                    std::vector<Exclusion>* excl = nullptr);

// One rank-reduction step at the plane u~: if the wall slice strictly crosses
// s~ = mu~(last sub factor), drop that factor; else if it crosses
// s~ = mu~(first quotient factor), pass to E / that factor; else nullopt.
// The child's wall is asserted to be outside-or-equal the parent's at u~.
std::optional<CandidateSubobject> bertram_reduce(const CandidateSubobject& cand,
                                                 const Rational& u, const SliceFrame& frame);

struct OutermostResult {
    std::optional<std::string> outermost;
    std::vector<std::string> ties;
    std::vector<std::string> chain;  // live labels, outermost first
};

// Maximal live wall at the plane u~ among the given candidates closed under
// bertram_reduce. Candidates whose slice misses their subobject window do not
// participate.
OutermostResult outermost_wall_at(const Rational& u, const SurfacePreset& surface,
                                  const std::vector<CandidateSubobject>& candidates,
                                  long max_rank);

// Convenience overload: enumerates rank-1 candidates itself.
OutermostResult outermost_wall_at(const Rational& u, const SurfacePreset& surface,
                                  const ScanBounds& bounds);

// Dominance scan: asserts every live candidate wall at every grid plane is
// inside-or-equal the distinguished wall W(O(-C1), O_S) (resp. W(O(-C2), O_S)
// on the u~ <= C2.G0/g side in the two-negative mode, whose grid is restricted
// to the certified ranges). Also asserts each plane's outermost wall is the
// distinguished one, a left hyperbola with negative quotient square.
ScanReport verify_rank2_conjecture(const SurfacePreset& surface, const ScanBounds& bounds,
                                   ScanMode mode, ExecMode exec,
                                   const std::vector<CandidateSubobject>& injected = {});

// Certifies the rank-1 weakly destabilizing candidate set is empty.
ScanReport verify_no_negative_curves(const SurfacePreset& surface, const ScanBounds& bounds,
                                     ExecMode exec);

// Mirror-side scan: checks W(O(C)|_C, O_S[1]) = mirror(W(O(-C), O_S)) for all
// cone classes in bounds, that nesting against the distinguished wall
// transfers through the mirror to the reflected planes, and the s~ = 0
// exclusion predicate on candidate classes.
ScanReport dual_scan_for_shift(const SurfacePreset& surface, const ScanBounds& bounds,
                               ExecMode exec);

// s~ = 0 subobject witness predicate: Im Z vanishes identically on the plane
// s~ = 0 iff a = 0; together with r = 0 that pins the class to (0, 0, ch2).
bool s0_subobject_witness(const ChernCharacter& ch, const SliceFrame& frame);

} // namespace wallscan
