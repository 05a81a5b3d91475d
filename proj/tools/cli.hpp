#pragma once

#include "gmono/e3.hpp"
#include "gmono/quaternion.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace gmono::cli {

enum Exit : int { kPass = 0, kVerifyFailed = 1, kInputError = 2 };

/// Axis-aligned box sampled on a tensor grid. "lo:hi:n" applies to all three
/// axes; "lo:hi:n,lo:hi:n,lo:hi:n" sets them separately.
struct GridSpec {
    std::array<double, 3> lo{-1.0, -1.0, -1.0};
    std::array<double, 3> hi{1.0, 1.0, 1.0};
    std::array<int, 3> count{5, 5, 5};

    /// Points in x-major order (x slowest, z fastest).
    std::vector<Point3> points() const;
};

/// Throws std::invalid_argument on malformed text, lo >= hi or a count < 2.
GridSpec parse_grid(const std::string& text);
/// "re,im" or "re".
Complex parse_complex(const std::string& text);
/// "x,y,z".
Point3 parse_point(const std::string& text);

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

/// Seams for tests that need to break the algebra on purpose.
struct Hooks {
    std::function<Quaternion(const Quaternion&, const Quaternion&)> mul;
};

/// Runs the command line `args` (without the program name). Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

} // namespace gmono::cli
