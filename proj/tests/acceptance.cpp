// Acceptance suite: runs every release criterion at its pinned tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cones/classifier.hpp"
#include "cones/football.hpp"
#include "cones/gluing.hpp"
#include "cones/io.hpp"
#include "cones/surface_report.hpp"
#include "cones/triangle.hpp"
#include "support.hpp"

std::string test_support::cli_path_storage;

using cones::Certificate;
using cones::DecidingRule;
using cones::Rational;
using cones::Verdict;

namespace {

constexpr double kPi = std::numbers::pi;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure(detail);
}

std::string vec_str(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

// --- criterion 1: classifier fixture table (exact, tolerance zero) --------

void criterion_fixture_table() {
    const std::vector<std::tuple<std::vector<std::string>, Verdict, DecidingRule>> table = {
        {{"1/2", "1/2"}, Verdict::Admissible, DecidingRule::TroyanovFootball},
        {{"3/2", "1/2"}, Verdict::NotAdmissible, DecidingRule::TroyanovFootball},
        {{"1/2", "1/2", "1/2"}, Verdict::Admissible, DecidingRule::MondelloPanovSufficient},
        {{"3/2", "5/4", "5/4"}, Verdict::NotAdmissible, DecidingRule::MainTheoremNonIntegral},
        {{"2", "2", "3"}, Verdict::Admissible, DecidingRule::KapovichIntegral},
        {{"2", "2", "5"}, Verdict::NotAdmissible, DecidingRule::KapovichIntegral},
        {{"2", "2", "2"}, Verdict::NotAdmissible, DecidingRule::HolonomyConstraintViolated},
        {{"1/2", "1/2", "2"}, Verdict::Unknown, DecidingRule::MixedCaseOpen},
        {{"1/2", "1/2", "1/2", "1/2"}, Verdict::NotAdmissible,
         DecidingRule::PositivityViolated},
    };
    for (const auto& [tokens, verdict, rule] : table) {
        const Certificate cert = cones::classify(cones::parse_angles(tokens));
        std::string name;
        for (const auto& t : tokens) name += t + " ";
        require(cert.verdict == verdict, "verdict mismatch for " + name + "- got " +
                                             to_string(cert.verdict));
        require(cert.rule == rule,
                "rule mismatch for " + name + "- got " + to_string(cert.rule));
    }
}

// --- criterion 2: lattice oracle equivalence -------------------------------

void validate_witness(const std::vector<Rational>& v, const cones::LatticeResult& r,
                      const char* which) {
    long long sum = 0;
    Rational total(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        sum += r.witness[i];
        total += (v[i] - Rational(r.witness[i])).abs();
    }
    require((sum % 2 + 2) % 2 == 1,
            std::string(which) + " witness has even sum at " + vec_str(v));
    require(total == r.distance,
            std::string(which) + " witness cost differs from distance at " + vec_str(v));
}

void criterion_oracle_equivalence() {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto v = test_support::random_vector(rng, dim(rng), 100, 100);
        const auto fast = cones::nearest_odd(v);
        const auto slow = cones::nearest_odd_bruteforce(v);
        require(fast.distance == slow.distance,
                "distance mismatch at " + vec_str(v) + ": " + fast.distance.str() + " vs " +
                    slow.distance.str());
        validate_witness(v, fast, "nearest_odd");
        validate_witness(v, slow, "bruteforce");
    }
}

// --- criterion 3: lattice symmetry suite -----------------------------------

void criterion_lattice_symmetries() {
    std::mt19937_64 rng(0xBEEF);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<long> shift(-4, 4);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t n = dim(rng);
        const auto v = test_support::random_vector(rng, n, 100, 100);
        const Rational d = cones::nearest_odd(v).distance;

        auto permuted = v;
        std::shuffle(permuted.begin(), permuted.end(), rng);
        require(cones::nearest_odd(permuted).distance == d,
                "permutation changed the distance at " + vec_str(v));

        auto flipped = v;
        for (Rational& x : flipped)
            if (coin(rng)) x = -x;
        require(cones::nearest_odd(flipped).distance == d,
                "sign flip changed the distance at " + vec_str(v));

        auto translated = v;
        long parity = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const long t = shift(rng);
            parity += t;
            translated[i] += Rational(t);
        }
        if (parity % 2 != 0) translated[0] += Rational(1);
        require(cones::nearest_odd(translated).distance == d,
                "even translation changed the distance at " + vec_str(v));
    }
}

// --- criterion 4: torus example audit ---------------------------------------

void criterion_torus_example() {
    const cones::GluedSurface s = cones::torus_example();
    require(s.euler_char == 0, "chi != 0");
    require(s.vertex_classes.size() == 2, "expected 2 vertex classes");
    double pole = s.vertex_classes[0].cone_angle;
    double apex = s.vertex_classes[1].cone_angle;
    if (pole > apex) std::swap(pole, apex);
    require(std::abs(apex - 4 * kPi) < 1e-12,
            "cone angle " + std::to_string(apex) + " is not 4*pi");
    require(std::abs(s.total_area - 2 * kPi) < 1e-9, "area is not 2*pi");

    const cones::SurfaceReport report = cones::surface_report(s);
    require(report.gauss_bonnet_residual < 1e-9, "Gauss-Bonnet residual too large");
    require(report.singular_classes.size() == 1, "expected exactly one singular point");
    const double loop = report.singular_pair_distances[0][0];
    require(std::abs(loop - kPi / 2) < 1e-9,
            "singular loop " + std::to_string(loop) + " is not pi/2");
}

// --- criterion 5: football audits -------------------------------------------

void criterion_footballs() {
    for (const Rational& theta :
         {Rational(1, 2), Rational(1), Rational(3, 2), Rational(7, 3)}) {
        const cones::FootballReport r = cones::build_football(theta);
        const double expected = 4 * kPi * theta.to_double();
        require(std::abs(r.quadrature_area - expected) / expected < 1e-9,
                "quadrature area off for theta = " + theta.str());
        require(r.pole_distance == kPi, "pole distance is not pi");
        require(std::abs(r.sigma_r_area(kPi) - r.area) <= 1e-12 * r.area,
                "sigma_r(pi) != area for theta = " + theta.str());
    }
}

// --- criterion 6: doubles of random triangles -------------------------------

void criterion_triangle_doubles() {
    std::mt19937_64 rng(0xD0B13);
    for (int iter = 0; iter < 100; ++iter) {
        const auto q = test_support::random_triangle_angles_pi(rng);
        const cones::SphericalTriangle t = cones::triangle_from_angles(
            q[0].to_double() * kPi, q[1].to_double() * kPi, q[2].to_double() * kPi);
        const cones::GluedSurface s = cones::double_of_triangle(t);

        const cones::SurfaceReport report = cones::surface_report(s);
        require(report.gauss_bonnet_residual < 1e-9,
                "Gauss-Bonnet residual too large at " + vec_str({q[0], q[1], q[2]}));
        for (const cones::VertexClass& vc : s.vertex_classes) {
            require(vc.corners.size() == 2, "vertex class is not a mirrored pair");
            require(vc.cone_angle == 2.0 * t.angles[vc.corners[0].second],
                    "cone angle is not exactly twice the triangle angle");
        }

        const Certificate cert = cones::classify(cones::AngleVector({q[0], q[1], q[2]}));
        require(cert.verdict != Verdict::NotAdmissible,
                "constructed vector classified NotAdmissible: " +
                    vec_str({q[0], q[1], q[2]}));

        // Theorem-6 shadow: among >= 3 singular points, pairs are joined
        // by short edges; in a double every pair shares a glued side < pi.
        require(s.vertex_classes.size() == 3, "double must have three cone points");
        std::vector<std::vector<bool>> joined(3, std::vector<bool>(3, false));
        for (const cones::GluedEdge& e : s.edges) {
            if (e.length < kPi) {
                joined[e.class_at_start][e.class_at_end] = true;
                joined[e.class_at_end][e.class_at_start] = true;
            }
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                require(joined[i][j], "singular pair not joined by an edge shorter than pi");
    }
}

// --- criterion 7: dual-law round trip ----------------------------------------

void criterion_dual_law_round_trip() {
    std::mt19937_64 rng(0x5EED);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto q = test_support::random_triangle_angles_pi(rng);
        const std::array<double, 3> angles = {q[0].to_double() * kPi, q[1].to_double() * kPi,
                                              q[2].to_double() * kPi};
        const cones::SphericalTriangle t =
            cones::triangle_from_angles(angles[0], angles[1], angles[2]);
        const auto back = cones::angles_from_sides(t.sides[0], t.sides[1], t.sides[2]);
        for (int k = 0; k < 3; ++k)
            require(std::abs(back[k] - angles[k]) < 1e-9,
                    "angle reconstruction off by " + std::to_string(back[k] - angles[k]));
    }
}

// --- criterion 8: CLI contract -----------------------------------------------

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, sep);) cells.push_back(cell);
    return cells;
}

void criterion_cli_contract() {
    const std::string cli = test_support::cli_path();
    require(!cli.empty(), "CLI path not provided (--cli-path= or CONES_CLI)");

    const std::vector<std::pair<std::string, int>> exits = {
        {"1/2 1/2", 0},          {"3/2 1/2", 1}, {"1/2 1/2 1/2", 0}, {"3/2 5/4 5/4", 1},
        {"2 2 3", 0},            {"2 2 5", 1},   {"2 2 2", 1},       {"1/2 1/2 2", 2},
        {"1/2 1/2 1/2 1/2", 1},
    };
    for (const auto& [angles, expected] : exits) {
        const auto run = test_support::run_command(cli + " check " + angles);
        require(run.exit_code == expected,
                "check " + angles + " exited " + std::to_string(run.exit_code) +
                    ", expected " + std::to_string(expected));
    }

    const auto started = std::chrono::steady_clock::now();
    const auto sweep = test_support::run_command(
        cli + " region --n 3 --fix 3=1/2 --vary 1=1/10:3:1/10 --vary 2=1/10:3:1/10");
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    require(sweep.exit_code == 0, "region sweep failed");
    require(elapsed < 5.0, "region sweep took " + std::to_string(elapsed) + "s");

    std::vector<std::string> rows = split(sweep.output, '\n');
    require(!rows.empty(), "region sweep produced no output");
    require(rows.front() == "theta1,theta2,theta3,verdict,rule,chi,distance",
            "unexpected region header: " + rows.front());
    rows.erase(rows.begin());
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    require(rows.size() == 900, "expected 900 rows, got " + std::to_string(rows.size()));

    std::mt19937_64 rng(0xCAFE);
    std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
    for (int sample = 0; sample < 20; ++sample) {
        const auto cells = split(rows[pick(rng)], ',');
        require(cells.size() == 7, "malformed region row");
        const auto check = test_support::run_command(cli + " check --format json " +
                                                     cells[0] + " " + cells[1] + " " +
                                                     cells[2]);
        const cones::json cert = cones::json::parse(check.output);
        require(cert["verdict"] == cells[3], "verdict drift between region and check");
        require(cert["rule"] == cells[4], "rule drift between region and check");
        require(cert["chi"] == cells[5], "chi drift between region and check");
        require(cert["distance"] == cells[6], "distance drift between region and check");
    }
}

struct Criterion {
    int number;
    std::string label;
    std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--cli-path=", 0) == 0)
            test_support::cli_path_storage = arg.substr(11);
    }

    const std::vector<Criterion> criteria = {
        {1, "classifier fixture table (9 exact verdicts and rules)", criterion_fixture_table},
        {2, "lattice oracle equivalence (1000 random vectors, n in 1..6)",
         criterion_oracle_equivalence},
        {3, "lattice symmetry suite (500 random cases)", criterion_lattice_symmetries},
        {4, "torus example audit (4*pi cone, chi 0, loop pi/2, area 2*pi)",
         criterion_torus_example},
        {5, "football audits for theta in {1/2, 1, 3/2, 7/3}", criterion_footballs},
        {6, "double-of-triangle suite (100 random valid triples)",
         criterion_triangle_doubles},
        {7, "dual-law round trip (1000 random triangles, 1e-9)",
         criterion_dual_law_round_trip},
        {8, "CLI contract (exit codes, 30x30 region sweep vs check)",
         criterion_cli_contract},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            c.run();
            std::cout << "[PASS] criterion " << c.number << ": " << c.label << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] criterion " << c.number << ": " << c.label << " -- "
                      << e.what() << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}
