#pragma once

/**
 * @file classifier.hpp
 * @brief Decision procedure for admissibility of cone-angle vectors.
 *
 * classify(theta) answers whether a curvature-1 metric on the sphere
 * with cone angles 2*pi*theta_i exists, by exact case analysis:
 *
 *   n = 0            -> Admissible (round sphere)
 *   n = 1            -> Admissible iff theta_1 = 1 (teardrop convention)
 *   n = 2            -> Admissible iff theta_1 = theta_2 (Troyanov football)
 *   n >= 3, with chi = sum(theta_i - 1) + 2 and d = d_1(Z^n_o, theta - 1):
 *     chi <= 0                  -> NotAdmissible (positivity fails)
 *     d < 1                     -> NotAdmissible (holonomy constraint)
 *     d > 1                     -> Admissible (Mondello-Panov, non-coaxial)
 *     d = 1, no theta_i in N    -> NotAdmissible
 *     d = 1, all theta_i in N   -> Admissible iff the polygon inequality
 *                                  holds (Kapovich); coaxial when admissible
 *     d = 1, mixed              -> Unknown (open case)
 *
 * Every certificate embeds the exact chi and d so a verdict can be
 * audited without re-running.
 */

#include <optional>
#include <string>
#include <vector>

#include "cones/angles.hpp"
#include "cones/odd_lattice.hpp"

namespace cones {

struct NotIntegral : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Verdict { Admissible, NotAdmissible, Unknown };

enum class DecidingRule {
    RoundSphere,
    Teardrop,
    TroyanovFootball,
    PositivityViolated,
    HolonomyConstraintViolated,
    MondelloPanovSufficient,
    MainTheoremNonIntegral,
    KapovichIntegral,
    MixedCaseOpen,
};

enum class HolonomyNote { NonCoaxialForced, CoaxialForced, NotApplicable };

const char* to_string(Verdict v);
const char* to_string(DecidingRule r);
const char* to_string(HolonomyNote h);

Verdict verdict_from_string(const std::string& s);
DecidingRule rule_from_string(const std::string& s);
HolonomyNote holonomy_from_string(const std::string& s);
IntegralityClass integrality_from_string(const std::string& s);

struct Certificate {
    Verdict verdict = Verdict::Unknown;
    int n = 0;
    Rational chi;
    std::optional<LatticeResult> lattice;  // present iff n >= 3
    IntegralityClass integrality = IntegralityClass::Empty;
    std::optional<bool> polygon_ok;        // present iff integral branch ran
    DecidingRule rule = DecidingRule::RoundSphere;
    HolonomyNote holonomy = HolonomyNote::NotApplicable;
    std::vector<std::string> notes;
};

Certificate classify(const AngleVector& theta);

/// Kapovich polygon inequality: theta_i - 1 <= (1/2) * sum_j (theta_j - 1)
/// for every i. Requires every theta_i to be a positive integer.
bool polygon_inequality(const AngleVector& theta);

}  // namespace cones
