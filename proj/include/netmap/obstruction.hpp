#pragma once

// Thurston obstruction search and half-space cover certificates.

#include "netmap/halfspace.hpp"

#include <string>
#include <vector>

namespace netmap {

// All slopes of height at most h, by height, then by value with inf last.
std::vector<Slope> enumerate_slopes(i64 height);

struct FixedSlope {
    Slope slope;
    Q multiplier;
};

std::vector<FixedSlope> find_fixed_slopes(const NetMapPresentation& p, i64 height);

enum class VerdictKind { Obstructed, Unobstructed, Inconclusive };

struct LeftoverDisposition {
    LeftoverPoint point;
    std::string reason;
};

struct ObstructionVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    // Obstructed
    Slope slope;
    Q multiplier{0};
    // Unobstructed: a covering subfamily and the handling of uncovered points.
    std::vector<HalfSpace> certificate;
    std::vector<LeftoverDisposition> leftovers;
    // Every half-space that was tried, in order.
    std::vector<HalfSpace> considered;
    i64 height = 0;
    std::vector<std::string> diagnostics;
};

ObstructionVerdict obstruction_report(const NetMapPresentation& p, i64 height, std::size_t budget);
// Same, with the candidate half-spaces drawn from an explicit slope list.
ObstructionVerdict obstruction_report(const NetMapPresentation& p, i64 height, const std::vector<Slope>& slopes);

// Rechecks a certificate from its source slopes alone. Empty result means valid.
std::vector<std::string> verify_certificate(const NetMapPresentation& p, const ObstructionVerdict& v);

std::string summary_line(const ObstructionVerdict& v);
std::string render_svg(const ObstructionVerdict& v);

} // namespace netmap
