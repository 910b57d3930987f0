#pragma once

#include <stdexcept>

namespace wallscan {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed input: files, CLI object specs, rational literals
struct parse_error : error {
    using error::error;
};

// violated mathematical precondition (bad signature, t = 0 charge evaluation, ...)
struct precondition_error : error {
    using error::error;
};

// broken internal invariant, e.g. two same-slice circles crossing transversally
struct internal_error : error {
    using error::error;
};

} // namespace wallscan
