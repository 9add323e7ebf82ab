// Command-line front end: classify angle vectors, compute odd-lattice
// distances, sweep admissibility regions, audit glued surfaces.
//
// Exit codes: check reports its verdict (0 admissible, 1 not admissible,
// 2 unknown); surface reports audit health (0 clean, 3 failed audit);
// 64 is a usage or input error.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cones/classifier.hpp"
#include "cones/io.hpp"

namespace {

constexpr int kExitUnknown = 2;
constexpr int kExitAuditFailed = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int verdict_exit_code(cones::Verdict v) {
    switch (v) {
        case cones::Verdict::Admissible: return 0;
        case cones::Verdict::NotAdmissible: return 1;
        case cones::Verdict::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

std::string format_witness(const std::vector<long long>& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(w[i]);
    }
    return out + "]";
}

void print_certificate_text(const cones::Certificate& cert) {
    std::cout << "verdict: " << to_string(cert.verdict) << "\n"
              << "rule: " << to_string(cert.rule) << "\n"
              << "n: " << cert.n << "\n"
              << "chi: " << cert.chi << "\n";
    if (cert.lattice) {
        std::cout << "distance: " << cert.lattice->distance << "\n"
                  << "witness: " << format_witness(cert.lattice->witness) << "\n";
    }
    std::cout << "integrality: " << to_string(cert.integrality) << "\n";
    if (cert.polygon_ok)
        std::cout << "polygon_ok: " << (*cert.polygon_ok ? "true" : "false") << "\n";
    std::cout << "holonomy: " << to_string(cert.holonomy) << "\n";
    for (const std::string& note : cert.notes) std::cout << "note: " << note << "\n";
}

int run_check(const std::vector<std::string>& tokens, const std::string& format) {
    const cones::Certificate cert = cones::classify(cones::parse_angles(tokens));
    if (format == "json")
        std::cout << cones::certificate_to_json(cert).dump() << "\n";
    else
        print_certificate_text(cert);
    return verdict_exit_code(cert.verdict);
}

int run_distance(const std::vector<std::string>& tokens, const std::string& format) {
    std::vector<cones::Rational> values;
    values.reserve(tokens.size());
    for (const std::string& tok : tokens)
        values.push_back(cones::Rational::parse(tok, /*allow_sign=*/true));
    const cones::LatticeResult result = cones::nearest_odd(values);
    if (format == "json") {
        std::cout << cones::lattice_to_json(result).dump() << "\n";
    } else {
        std::cout << "distance: " << result.distance << "\n"
                  << "witness: " << format_witness(result.witness) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// region sweep

struct VaryAxis {
    std::size_t index = 0;  // 0-based
    cones::Rational min, max, step;
};

struct RegionSpec {
    std::size_t n = 0;
    std::map<std::size_t, cones::Rational> fixed;  // 0-based index -> value
    std::vector<VaryAxis> varying;                 // sorted by index
};

std::size_t parse_axis_index(const std::string& text, std::size_t n) {
    std::size_t pos = 0;
    int idx = 0;
    try {
        idx = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("bad axis index '" + text + "'");
    }
    if (pos != text.size() || idx < 1 || static_cast<std::size_t>(idx) > n)
        throw UsageError("axis index '" + text + "' out of range 1.." + std::to_string(n));
    return static_cast<std::size_t>(idx - 1);
}

RegionSpec parse_region_spec(std::size_t n, const std::vector<std::string>& fixes,
                             const std::vector<std::string>& varies) {
    if (n == 0) throw UsageError("--n must be at least 1");
    RegionSpec spec;
    spec.n = n;
    std::vector<bool> covered(n, false);
    const auto claim = [&](std::size_t idx) {
        if (covered[idx])
            throw UsageError("axis " + std::to_string(idx + 1) + " specified twice");
        covered[idx] = true;
    };

    for (const std::string& f : fixes) {
        const auto eq = f.find('=');
        if (eq == std::string::npos)
            throw UsageError("--fix expects INDEX=VALUE, got '" + f + "'");
        const std::size_t idx = parse_axis_index(f.substr(0, eq), n);
        claim(idx);
        spec.fixed.emplace(idx, cones::Rational::parse(f.substr(eq + 1), false));
    }
    for (const std::string& v : varies) {
        const auto eq = v.find('=');
        if (eq == std::string::npos)
            throw UsageError("--vary expects INDEX=MIN:MAX:STEP, got '" + v + "'");
        VaryAxis axis;
        axis.index = parse_axis_index(v.substr(0, eq), n);
        claim(axis.index);
        std::string rest = v.substr(eq + 1);
        const auto c1 = rest.find(':');
        const auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw UsageError("--vary expects INDEX=MIN:MAX:STEP, got '" + v + "'");
        axis.min = cones::Rational::parse(rest.substr(0, c1), false);
        axis.max = cones::Rational::parse(rest.substr(c1 + 1, c2 - c1 - 1), false);
        axis.step = cones::Rational::parse(rest.substr(c2 + 1), false);
        if (!axis.step.is_positive()) throw UsageError("--vary step must be > 0");
        if (!(axis.min < axis.max)) throw UsageError("--vary needs MIN < MAX");
        spec.varying.push_back(std::move(axis));
    }

    if (spec.varying.empty() || spec.varying.size() > 2)
        throw UsageError("region sweeps need exactly 1 or 2 --vary axes");
    for (std::size_t i = 0; i < n; ++i)
        if (!covered[i])
            throw UsageError("axis " + std::to_string(i + 1) + " is neither fixed nor varying");
    std::sort(spec.varying.begin(), spec.varying.end(),
              [](const VaryAxis& a, const VaryAxis& b) { return a.index < b.index; });
    return spec;
}

std::vector<cones::Rational> axis_values(const VaryAxis& axis) {
    std::vector<cones::Rational> out;
    for (cones::Rational v = axis.min; v <= axis.max; v += axis.step) out.push_back(v);
    return out;
}

int run_region(const RegionSpec& spec, const std::string& format) {
    std::vector<cones::Rational> point(spec.n, cones::Rational(1));
    for (const auto& [idx, value] : spec.fixed) point[idx] = value;

    std::vector<std::vector<cones::Rational>> grids;
    grids.reserve(spec.varying.size());
    for (const VaryAxis& axis : spec.varying) grids.push_back(axis_values(axis));

    const bool as_json = format == "json";
    cones::json rows = cones::json::array();
    if (!as_json) {
        for (std::size_t i = 0; i < spec.n; ++i) std::cout << "theta" << i + 1 << ",";
        std::cout << "verdict,rule,chi,distance\n";
    }

    const auto emit = [&](const std::vector<cones::Rational>& theta) {
        const cones::Certificate cert =
            cones::classify(cones::AngleVector(theta));
        if (as_json) {
            cones::json row;
            cones::json coords = cones::json::array();
            for (const cones::Rational& t : theta) coords.push_back(t.str());
            row["theta"] = std::move(coords);
            row["verdict"] = to_string(cert.verdict);
            row["rule"] = to_string(cert.rule);
            row["chi"] = cert.chi.str();
            row["distance"] = cert.lattice ? cones::json(cert.lattice->distance.str())
                                           : cones::json(nullptr);
            rows.push_back(std::move(row));
        } else {
            for (const cones::Rational& t : theta) std::cout << t << ",";
            std::cout << to_string(cert.verdict) << "," << to_string(cert.rule) << ","
                      << cert.chi << ","
                      << (cert.lattice ? cert.lattice->distance.str() : std::string()) << "\n";
        }
    };

    // Rows in lexicographic order over the varying axes (by axis index).
    if (grids.size() == 1) {
        for (const cones::Rational& v : grids[0]) {
            point[spec.varying[0].index] = v;
            emit(point);
        }
    } else {
        for (const cones::Rational& v0 : grids[0]) {
            point[spec.varying[0].index] = v0;
            for (const cones::Rational& v1 : grids[1]) {
                point[spec.varying[1].index] = v1;
                emit(point);
            }
        }
    }
    if (as_json) std::cout << rows.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// surface audits

void print_surface_report_text(const cones::SurfaceReport& report) {
    std::cout << "chi: " << report.chi << "\n"
              << "area: " << report.area << "\n"
              << "gauss_bonnet_residual: " << report.gauss_bonnet_residual << "\n"
              << "gauss_bonnet_ok: " << (report.gauss_bonnet_ok() ? "true" : "false") << "\n";
    for (const cones::ConePoint& p : report.cone_points) {
        std::cout << "vertex_class " << p.vertex_class << ": angle " << p.angle
                  << (p.is_singular ? " (singular)" : " (regular)") << "\n";
    }
    const auto& classes = report.singular_classes;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = 0; j < classes.size(); ++j) {
            const double d = report.singular_pair_distances[i][j];
            if (!std::isfinite(d)) continue;
            std::cout << "distance[" << classes[i] << "][" << classes[j] << "]: " << d
                      << (i == j ? " (loop)" : "")
                      << (report.pi_multiplicity_flags[i][j] ? " (pi-multiple)" : "") << "\n";
        }
    }
}

int run_surface(const std::string& path, const std::string& builtin,
                const std::string& format, double tolerance) {
    using cones::Rational;

    if (builtin.rfind("football:", 0) == 0) {
        const Rational theta = Rational::parse(builtin.substr(9), false);
        const cones::FootballReport report = cones::build_football(theta);
        const double rel_err = std::abs(report.quadrature_area - report.area) / report.area;
        if (format == "json") {
            std::cout << cones::football_to_json(report).dump() << "\n";
        } else {
            std::cout << "theta: " << report.theta << "\n"
                      << "area: " << report.area << "\n"
                      << "quadrature_area: " << report.quadrature_area << "\n"
                      << "quadrature_relative_error: " << rel_err << "\n"
                      << "pole_distance: " << report.pole_distance << " (1*pi)\n"
                      << "sigma_area_at_pi: " << report.sigma_r_area(std::numbers::pi) << "\n";
        }
        return rel_err < tolerance ? 0 : kExitAuditFailed;
    }

    cones::GluedSurface surface;
    try {
        if (builtin == "torus-example") {
            surface = cones::torus_example();
        } else if (builtin == "octant-double") {
            const double right = std::numbers::pi / 2.0;
            surface = cones::double_of_triangle(
                cones::triangle_from_angles(right, right, right));
        } else if (!builtin.empty()) {
            throw UsageError("unknown builtin '" + builtin +
                             "' (torus-example, octant-double, football:THETA)");
        } else {
            surface = cones::glue_surface(cones::load_gluing_file(path), tolerance);
        }
    } catch (const cones::UnmatchedEdge& e) {
        std::cerr << "audit failed: " << e.what() << "\n";
        return kExitAuditFailed;
    } catch (const cones::LengthMismatch& e) {
        std::cerr << "audit failed: " << e.what() << "\n";
        return kExitAuditFailed;
    } catch (const cones::InvalidTriangle& e) {
        std::cerr << "audit failed: " << e.what() << "\n";
        return kExitAuditFailed;
    }

    const cones::SurfaceReport report = cones::surface_report(surface, tolerance);
    if (format == "json")
        std::cout << cones::surface_report_to_json(report).dump() << "\n";
    else
        print_surface_report_text(report);
    return report.gauss_bonnet_ok() ? 0 : kExitAuditFailed;
}

}  // namespace

int main(int argc, char** argv) {
    std::cout << std::setprecision(15);
    CLI::App app{"Spherical cone-metric toolkit: admissibility certificates, "
                 "odd-lattice distances, region sweeps and surface audits"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes:\n"
        "  check    0 admissible, 1 not admissible, 2 unknown\n"
        "  surface  0 clean audits, 3 failed audit\n"
        "  any      64 usage or input error\n\n"
        "Angle tokens are exact rationals: INT, INT/POSINT or a decimal numeral\n"
        "(3/2, 2, 1.25). Irrational angles are not representable; a rational\n"
        "approximation can move a vector onto or off the lattice-distance-1\n"
        "equality stratum and flip the verdict, so choose inputs deliberately.");

    std::string format = "text";
    double tolerance = 1e-9;
    app.add_option("--format", format, "Output format (text|json; region also: csv)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--tolerance", tolerance, "Tolerance for geometry audits")
        ->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "Classify a cone-angle vector");
    check->fallthrough();
    std::vector<std::string> check_tokens;
    check->add_option("angles", check_tokens, "Angle multipliers (INT, P/Q or decimal)");

    auto* distance = app.add_subcommand("distance", "l1 distance to the odd integer lattice");
    distance->fallthrough();
    std::vector<std::string> distance_tokens;
    distance->add_option("values", distance_tokens, "Coordinates (signed rationals)")
        ->required();

    auto* region = app.add_subcommand("region", "Sweep a 1- or 2-axis slice of angle space");
    region->fallthrough();
    std::size_t region_n = 0;
    std::vector<std::string> region_fix, region_vary;
    region->add_option("--n", region_n, "Number of cone points")->required();
    region->add_option("--fix", region_fix, "Fixed axis, INDEX=VALUE (1-based)");
    region->add_option("--vary", region_vary, "Varying axis, INDEX=MIN:MAX:STEP (1-based)")
        ->required();

    auto* surface = app.add_subcommand("surface", "Audit a glued surface or builtin model");
    surface->fallthrough();
    std::string surface_path, surface_builtin;
    surface->add_option("gluing", surface_path, "Path to a gluing description (JSON)");
    surface->add_option("--builtin", surface_builtin,
                        "torus-example | octant-double | football:THETA");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (format == "csv" && !region->parsed())
            throw UsageError("--format csv is only valid for the region command");
        if (check->parsed()) return run_check(check_tokens, format);
        if (distance->parsed()) return run_distance(distance_tokens, format);
        if (region->parsed())
            return run_region(parse_region_spec(region_n, region_fix, region_vary), format);
        if (surface->parsed()) {
            if (surface_path.empty() == surface_builtin.empty())
                throw UsageError("surface needs exactly one of a gluing path or --builtin");
            return run_surface(surface_path, surface_builtin, format, tolerance);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cones::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cones::NonPositiveAngle& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cones::EmptyVector& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return kExitUsage;
}
