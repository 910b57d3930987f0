#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wallscan/scan.hpp"

namespace wallscan {

// Seeded random-input invariant suites, shared by the CLI selftest and the
// acceptance harness. Every check is exact; a failure count of zero is the
// pass condition.
struct SuiteResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string note;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    long integer(long lo, long hi);           // uniform in [lo, hi]
    Rational rational(long max_num, long max_den);  // num in [-max_num, max_num], den in [1, max_den]
    Rational positive_rational(long max_num, long max_den);

private:
    std::mt19937_64 gen_;
};

// Synthetic rank-2 frame diag(h', -g') realizing arbitrary rational slice data.
SliceFrame synthetic_frame(const Rational& h, const Rational& g);

// Wall of (1, c1, ch2) against O_S on a synthetic frame with prescribed
// (a, b, ch2, q); h is a free positive scale.
WallConic synthetic_wall(const Rational& a, const Rational& b, const Rational& ch2,
                         const Rational& q, const Rational& h = 1);

SuiteResult check_classification_grid();
SuiteResult check_tangent_points(std::uint64_t seed, long cases);
SuiteResult check_nesting(std::uint64_t seed, long pairs, long probes_per_pair);
SuiteResult check_coincidence(std::uint64_t seed, long pairs);
SuiteResult check_twist_equivariance(std::uint64_t seed, long cases);
SuiteResult check_s0_exclusion(std::uint64_t seed, long cases);
SuiteResult check_charge_linearity(std::uint64_t seed, long cases);
SuiteResult check_large_t_bound(std::uint64_t seed, long cases);

std::vector<SuiteResult> run_selfcheck(std::uint64_t seed);

} // namespace wallscan
