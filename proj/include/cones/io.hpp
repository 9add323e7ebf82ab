#pragma once

/**
 * @file io.hpp
 * @brief JSON wire formats: certificates, lattice results, gluing files.
 *
 * Certificates serialize with a fixed key order so that parse +
 * re-serialize is byte-identical. Exact rationals travel as "p/q"
 * strings ("p" when integral). Absent optional fields are null.
 * Per-coordinate costs are derived data and are not part of the
 * certificate wire format.
 */

#include <string>

#include "json.hpp"

#include "cones/classifier.hpp"
#include "cones/football.hpp"
#include "cones/gluing.hpp"
#include "cones/surface_report.hpp"

namespace cones {

using json = nlohmann::ordered_json;

json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

json lattice_to_json(const LatticeResult& r);

/// Gluing description:
/// {"triangles": [{"id": "t1", "angles_pi": ["1/2","1/2","1/2"]}],
///  "pairings": [{"a": ["t1", 0], "b": ["t2", 2], "reversed": false}]}
/// Angles are exact rational multiples of pi; "reversed" defaults false.
GluingDescription gluing_from_json(const json& j);
GluingDescription load_gluing_file(const std::string& path);

json surface_report_to_json(const SurfaceReport& report);
json football_to_json(const FootballReport& report);

}  // namespace cones
