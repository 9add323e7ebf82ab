#include "cones/classifier.hpp"

#include <algorithm>

namespace cones {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Admissible: return "Admissible";
        case Verdict::NotAdmissible: return "NotAdmissible";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(DecidingRule r) {
    switch (r) {
        case DecidingRule::RoundSphere: return "RoundSphere";
        case DecidingRule::Teardrop: return "Teardrop";
        case DecidingRule::TroyanovFootball: return "TroyanovFootball";
        case DecidingRule::PositivityViolated: return "PositivityViolated";
        case DecidingRule::HolonomyConstraintViolated: return "HolonomyConstraintViolated";
        case DecidingRule::MondelloPanovSufficient: return "MondelloPanovSufficient";
        case DecidingRule::MainTheoremNonIntegral: return "MainTheoremNonIntegral";
        case DecidingRule::KapovichIntegral: return "KapovichIntegral";
        case DecidingRule::MixedCaseOpen: return "MixedCaseOpen";
    }
    return "?";
}

const char* to_string(HolonomyNote h) {
    switch (h) {
        case HolonomyNote::NonCoaxialForced: return "NonCoaxialForced";
        case HolonomyNote::CoaxialForced: return "CoaxialForced";
        case HolonomyNote::NotApplicable: return "NotApplicable";
    }
    return "?";
}

namespace {

template <typename Enum>
Enum enum_from_string(const std::string& s, std::initializer_list<Enum> values,
                      const char* what) {
    for (Enum v : values)
        if (s == to_string(v)) return v;
    throw ParseError(std::string("unknown ") + what + " '" + s + "'");
}

}  // namespace

Verdict verdict_from_string(const std::string& s) {
    return enum_from_string<Verdict>(
        s, {Verdict::Admissible, Verdict::NotAdmissible, Verdict::Unknown}, "verdict");
}

DecidingRule rule_from_string(const std::string& s) {
    return enum_from_string<DecidingRule>(
        s,
        {DecidingRule::RoundSphere, DecidingRule::Teardrop, DecidingRule::TroyanovFootball,
         DecidingRule::PositivityViolated, DecidingRule::HolonomyConstraintViolated,
         DecidingRule::MondelloPanovSufficient, DecidingRule::MainTheoremNonIntegral,
         DecidingRule::KapovichIntegral, DecidingRule::MixedCaseOpen},
        "rule");
}

HolonomyNote holonomy_from_string(const std::string& s) {
    return enum_from_string<HolonomyNote>(
        s,
        {HolonomyNote::NonCoaxialForced, HolonomyNote::CoaxialForced,
         HolonomyNote::NotApplicable},
        "holonomy note");
}

IntegralityClass integrality_from_string(const std::string& s) {
    return enum_from_string<IntegralityClass>(
        s,
        {IntegralityClass::AllNonIntegral, IntegralityClass::AllIntegral,
         IntegralityClass::Mixed, IntegralityClass::Empty},
        "integrality class");
}

bool polygon_inequality(const AngleVector& theta) {
    Rational total(0);
    for (const Rational& t : theta) {
        if (!t.is_integer())
            throw NotIntegral("polygon inequality needs integer angles, got " + t.str());
        total += t - Rational(1);
    }
    const Rational half_total = total / Rational(2);
    for (const Rational& t : theta)
        if (t - Rational(1) > half_total) return false;
    return true;
}

Certificate classify(const AngleVector& theta) {
    Certificate cert;
    cert.n = static_cast<int>(theta.size());
    cert.chi = euler_characteristic(divisor(theta));
    cert.integrality = integrality_class(theta);

    const std::size_t n = theta.size();
    if (n == 0) {
        cert.verdict = Verdict::Admissible;
        cert.rule = DecidingRule::RoundSphere;
        return cert;
    }
    if (n == 1) {
        cert.verdict = theta[0] == Rational(1) ? Verdict::Admissible : Verdict::NotAdmissible;
        cert.rule = DecidingRule::Teardrop;
        cert.notes.push_back(
            "teardrop convention: n = 1 is decided as the two-cone-point rule "
            "with an implicit second angle equal to 2*pi");
        return cert;
    }
    if (n == 2) {
        cert.verdict = theta[0] == theta[1] ? Verdict::Admissible : Verdict::NotAdmissible;
        cert.rule = DecidingRule::TroyanovFootball;
        return cert;
    }

    cert.lattice = nearest_odd(divisor(theta).entries);
    if (n == 3)
        cert.notes.push_back(
            "n = 3 is also characterized by Eremenko's inequality list; "
            "this verdict uses the general lattice criteria");

    if (!cert.chi.is_positive()) {
        cert.verdict = Verdict::NotAdmissible;
        cert.rule = DecidingRule::PositivityViolated;
        return cert;
    }

    switch (compare_distance_to_one(*cert.lattice)) {
        case Ordering::Less:
            cert.verdict = Verdict::NotAdmissible;
            cert.rule = DecidingRule::HolonomyConstraintViolated;
            return cert;
        case Ordering::Greater:
            cert.verdict = Verdict::Admissible;
            cert.rule = DecidingRule::MondelloPanovSufficient;
            cert.holonomy = HolonomyNote::NonCoaxialForced;
            return cert;
        case Ordering::Equal:
            break;
    }

    switch (cert.integrality) {
        case IntegralityClass::AllNonIntegral:
            cert.verdict = Verdict::NotAdmissible;
            cert.rule = DecidingRule::MainTheoremNonIntegral;
            return cert;
        case IntegralityClass::AllIntegral: {
            const bool ok = polygon_inequality(theta);
            cert.polygon_ok = ok;
            cert.verdict = ok ? Verdict::Admissible : Verdict::NotAdmissible;
            cert.rule = DecidingRule::KapovichIntegral;
            if (ok) cert.holonomy = HolonomyNote::CoaxialForced;
            return cert;
        }
        default:
            cert.verdict = Verdict::Unknown;
            cert.rule = DecidingRule::MixedCaseOpen;
            cert.notes.push_back(
                "mixed integral/non-integral angles at lattice distance exactly 1: "
                "no complete criterion is known; a metric realizing this vector "
                "would necessarily have coaxial holonomy");
            return cert;
    }
}

}  // namespace cones
