#include "cones/io.hpp"

#include <cmath>
#include <fstream>

namespace cones {

namespace {

json rational_or_null(const std::optional<Rational>& r) {
    if (!r) return nullptr;
    return r->str();
}

json finite_or_null(double d) {
    if (!std::isfinite(d)) return nullptr;
    return d;
}

}  // namespace

json certificate_to_json(const Certificate& cert) {
    json j;
    j["verdict"] = to_string(cert.verdict);
    j["n"] = cert.n;
    j["chi"] = cert.chi.str();
    j["distance"] =
        rational_or_null(cert.lattice ? std::optional(cert.lattice->distance) : std::nullopt);
    if (cert.lattice)
        j["witness"] = cert.lattice->witness;
    else
        j["witness"] = nullptr;
    j["integrality"] = to_string(cert.integrality);
    if (cert.polygon_ok)
        j["polygon_ok"] = *cert.polygon_ok;
    else
        j["polygon_ok"] = nullptr;
    j["rule"] = to_string(cert.rule);
    j["holonomy"] = to_string(cert.holonomy);
    j["notes"] = cert.notes;
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate cert;
    cert.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    cert.n = j.at("n").get<int>();
    cert.chi = Rational::parse(j.at("chi").get<std::string>());
    if (!j.at("distance").is_null()) {
        LatticeResult lattice;
        lattice.distance = Rational::parse(j.at("distance").get<std::string>());
        lattice.witness = j.at("witness").get<std::vector<long long>>();
        cert.lattice = std::move(lattice);
    }
    cert.integrality = integrality_from_string(j.at("integrality").get<std::string>());
    if (!j.at("polygon_ok").is_null()) cert.polygon_ok = j.at("polygon_ok").get<bool>();
    cert.rule = rule_from_string(j.at("rule").get<std::string>());
    cert.holonomy = holonomy_from_string(j.at("holonomy").get<std::string>());
    cert.notes = j.at("notes").get<std::vector<std::string>>();
    return cert;
}

json lattice_to_json(const LatticeResult& r) {
    json j;
    j["distance"] = r.distance.str();
    j["witness"] = r.witness;
    json costs = json::array();
    for (const Rational& c : r.per_coordinate_cost) costs.push_back(c.str());
    j["per_coordinate_cost"] = std::move(costs);
    return j;
}

GluingDescription gluing_from_json(const json& j) {
    GluingDescription desc;
    try {
        for (const json& t : j.at("triangles")) {
            TriangleSpec spec;
            spec.id = t.at("id").get<std::string>();
            const json& angles = t.at("angles_pi");
            if (!angles.is_array() || angles.size() != 3)
                throw ParseError("triangle '" + spec.id + "' needs exactly 3 angles");
            for (int k = 0; k < 3; ++k)
                spec.angles_pi[k] = Rational::parse(angles[k].get<std::string>());
            desc.triangles.push_back(std::move(spec));
        }
        for (const json& p : j.at("pairings")) {
            DescribedPairing dp;
            const json& a = p.at("a");
            const json& b = p.at("b");
            if (!a.is_array() || a.size() != 2 || !b.is_array() || b.size() != 2)
                throw ParseError("pairing sides must be [triangle-id, slot] pairs");
            dp.a_id = a[0].get<std::string>();
            dp.a_slot = a[1].get<int>();
            dp.b_id = b[0].get<std::string>();
            dp.b_slot = b[1].get<int>();
            dp.reversed = p.value("reversed", false);
            desc.pairings.push_back(std::move(dp));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed gluing description: ") + e.what());
    }
    return desc;
}

GluingDescription load_gluing_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open gluing file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return gluing_from_json(j);
}

json surface_report_to_json(const SurfaceReport& report) {
    json j;
    json points = json::array();
    for (const ConePoint& p : report.cone_points) {
        points.push_back({{"vertex_class", p.vertex_class},
                          {"angle", p.angle},
                          {"is_singular", p.is_singular}});
    }
    j["cone_points"] = std::move(points);
    j["chi"] = report.chi;
    j["area"] = report.area;
    j["gauss_bonnet_residual"] = report.gauss_bonnet_residual;
    j["gauss_bonnet_ok"] = report.gauss_bonnet_ok();
    j["singular_classes"] = report.singular_classes;
    json distances = json::array();
    for (const auto& row : report.singular_pair_distances) {
        json out_row = json::array();
        for (double d : row) out_row.push_back(finite_or_null(d));
        distances.push_back(std::move(out_row));
    }
    j["singular_pair_distances"] = std::move(distances);
    j["pi_multiplicity_flags"] = report.pi_multiplicity_flags;
    return j;
}

json football_to_json(const FootballReport& report) {
    json j;
    j["theta"] = report.theta.str();
    j["area"] = report.area;
    j["quadrature_area"] = report.quadrature_area;
    j["quadrature_relative_error"] =
        std::abs(report.quadrature_area - report.area) / report.area;
    j["pole_distance"] = report.pole_distance;
    j["pole_distance_is_pi_multiple"] = true;  // meridian length is exactly pi
    j["sigma_area_at_pi"] = report.sigma_r_area(report.pole_distance);
    return j;
}

}  // namespace cones
