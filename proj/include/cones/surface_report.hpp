#pragma once

/**
 * @file surface_report.hpp
 * @brief Audits of a glued surface: cone points, Gauss-Bonnet, distances.
 *
 * Distances between singular vertex classes are shortest paths in the
 * glued edge graph (edge weights = side lengths). These are upper bounds
 * on the intrinsic distance: geodesics crossing triangle interiors are
 * not traced. The diagonal holds the shortest single-edge loop based at
 * the class, when one exists.
 */

#include <vector>

#include "cones/gluing.hpp"

namespace cones {

struct ConePoint {
    std::size_t vertex_class = 0;
    double angle = 0.0;
    bool is_singular = false;  // |angle - 2*pi| > tolerance
};

struct SurfaceReport {
    std::vector<ConePoint> cone_points;  // one per vertex class
    int chi = 0;
    double area = 0.0;
    double gauss_bonnet_residual = 0.0;  // |area - 2*pi*(chi + sum(theta_v - 1))|
    double tolerance = 1e-9;

    std::vector<std::size_t> singular_classes;  // row/column order of the matrices
    // Edge-graph path lengths between singular classes (upper bounds on
    // intrinsic distance); diagonal = shortest single-edge loop. Entries
    // are +infinity when no path/loop exists.
    std::vector<std::vector<double>> singular_pair_distances;
    // Whether the distance sits within tolerance of k*pi for some k >= 1.
    std::vector<std::vector<bool>> pi_multiplicity_flags;

    bool gauss_bonnet_ok() const;
};

SurfaceReport surface_report(const GluedSurface& s, double tolerance = 1e-9);

}  // namespace cones
