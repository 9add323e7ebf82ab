#pragma once

/**
 * @file gluing.hpp
 * @brief Closed surfaces assembled from spherical triangles.
 *
 * Triangles expose three edge slots; slot k is the side opposite corner
 * k and runs from corner (k+1)%3 to corner (k+2)%3. A gluing pairs every
 * slot with exactly one partner slot. With reversed = false the paired
 * sides are identified start-to-start; with reversed = true start meets
 * end. Corner identifications are walked from the pairings, which yields
 * the vertex classes, their cone angles (sum of incident corner angles)
 * and the Euler characteristic V - E + F of the quotient.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cones/rational.hpp"
#include "cones/triangle.hpp"

namespace cones {

struct UnmatchedEdge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : std::runtime_error {
    LengthMismatch(const std::string& what, double la, double lb)
        : std::runtime_error(what), length_a(la), length_b(lb) {}
    double length_a;
    double length_b;
};

struct EdgeSlotRef {
    std::size_t triangle = 0;
    int slot = 0;  // 0..2, side opposite this corner
};

struct EdgePairing {
    EdgeSlotRef a;
    EdgeSlotRef b;
    bool reversed = false;
};

/// Triangle described by its angles as exact rational multiples of pi.
struct TriangleSpec {
    std::string id;
    std::array<Rational, 3> angles_pi;
};

struct DescribedPairing {
    std::string a_id;
    int a_slot = 0;
    std::string b_id;
    int b_slot = 0;
    bool reversed = false;
};

struct GluingDescription {
    std::vector<TriangleSpec> triangles;
    std::vector<DescribedPairing> pairings;
};

using CornerRef = std::pair<std::size_t, int>;  // (triangle, corner)

struct VertexClass {
    std::vector<CornerRef> corners;
    double cone_angle = 0.0;  // sum of incident corner angles
};

struct GluedEdge {
    EdgePairing pairing;
    double length = 0.0;        // common side length
    std::size_t class_at_start = 0;  // vertex class of the start corner of side a
    std::size_t class_at_end = 0;    // vertex class of the end corner of side a
};

struct GluedSurface {
    std::vector<std::string> triangle_ids;
    std::vector<SphericalTriangle> triangles;
    std::vector<GluedEdge> edges;  // one per pairing
    std::vector<VertexClass> vertex_classes;
    int euler_char = 0;     // V - E + F of the quotient complex
    double total_area = 0.0;
};

/// Validates slot coverage and side-length matching, then builds the
/// quotient surface. Throws UnmatchedEdge, LengthMismatch or
/// InvalidTriangle (from the angle data).
GluedSurface glue_surface(const GluingDescription& desc, double tolerance = 1e-9);

/// Two mirror copies of t glued along corresponding sides: a sphere with
/// cone angles (2A, 2B, 2C) and area twice the excess of t.
GluedSurface double_of_triangle(const SphericalTriangle& t);

/// Hemisphere cut into four octants around the pole, boundary quarter
/// arcs identified crosswise: a torus with a single cone point of angle
/// 4*pi carrying a geodesic boundary loop of length pi/2.
GluedSurface torus_example();

}  // namespace cones
