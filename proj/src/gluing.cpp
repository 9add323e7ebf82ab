#include "cones/gluing.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace cones {

namespace {

constexpr int corner_at_start(int slot) { return (slot + 1) % 3; }
constexpr int corner_at_end(int slot) { return (slot + 2) % 3; }

std::string slot_name(const std::vector<std::string>& ids, const EdgeSlotRef& s) {
    return ids[s.triangle] + "[" + std::to_string(s.slot) + "]";
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

GluedSurface glue(std::vector<std::string> ids, std::vector<SphericalTriangle> triangles,
                  const std::vector<EdgePairing>& pairings, double tolerance) {
    const std::size_t face_count = triangles.size();

    // Every slot must occur exactly once across the pairings.
    std::vector<int> seen(3 * face_count, 0);
    const auto slot_index = [](const EdgeSlotRef& s) { return 3 * s.triangle + s.slot; };
    for (const EdgePairing& p : pairings) {
        for (const EdgeSlotRef& s : {p.a, p.b}) {
            if (s.triangle >= face_count || s.slot < 0 || s.slot > 2)
                throw UnmatchedEdge("pairing references a slot that does not exist");
            if (++seen[slot_index(s)] > 1)
                throw UnmatchedEdge("edge slot " + slot_name(ids, s) +
                                    " appears in more than one pairing");
        }
    }
    for (std::size_t t = 0; t < face_count; ++t)
        for (int k = 0; k < 3; ++k)
            if (seen[3 * t + k] == 0)
                throw UnmatchedEdge("edge slot " + slot_name(ids, {t, k}) +
                                    " is unpaired; the surface would have boundary");

    for (const EdgePairing& p : pairings) {
        const double la = triangles[p.a.triangle].sides[p.a.slot];
        const double lb = triangles[p.b.triangle].sides[p.b.slot];
        if (std::abs(la - lb) > tolerance) {
            std::ostringstream msg;
            msg << "paired sides " << slot_name(ids, p.a) << " and " << slot_name(ids, p.b)
                << " have different lengths " << la << " vs " << lb;
            throw LengthMismatch(msg.str(), la, lb);
        }
    }

    // Walk corner identifications induced by the pairings.
    UnionFind classes(3 * face_count);
    const auto corner_index = [](std::size_t tri, int corner) { return 3 * tri + corner; };
    for (const EdgePairing& p : pairings) {
        const std::size_t a_start = corner_index(p.a.triangle, corner_at_start(p.a.slot));
        const std::size_t a_end = corner_index(p.a.triangle, corner_at_end(p.a.slot));
        const std::size_t b_start = corner_index(p.b.triangle, corner_at_start(p.b.slot));
        const std::size_t b_end = corner_index(p.b.triangle, corner_at_end(p.b.slot));
        if (p.reversed) {
            classes.unite(a_start, b_end);
            classes.unite(a_end, b_start);
        } else {
            classes.unite(a_start, b_start);
            classes.unite(a_end, b_end);
        }
    }

    GluedSurface s;
    s.triangle_ids = std::move(ids);
    s.triangles = std::move(triangles);

    std::map<std::size_t, std::size_t> root_to_class;
    for (std::size_t t = 0; t < face_count; ++t) {
        for (int c = 0; c < 3; ++c) {
            const std::size_t root = classes.find(corner_index(t, c));
            auto [it, inserted] = root_to_class.try_emplace(root, s.vertex_classes.size());
            if (inserted) s.vertex_classes.emplace_back();
            VertexClass& vc = s.vertex_classes[it->second];
            vc.corners.emplace_back(t, c);
            vc.cone_angle += s.triangles[t].angles[c];
        }
    }

    s.edges.reserve(pairings.size());
    for (const EdgePairing& p : pairings) {
        GluedEdge e;
        e.pairing = p;
        e.length = s.triangles[p.a.triangle].sides[p.a.slot];
        const std::size_t start = corner_index(p.a.triangle, corner_at_start(p.a.slot));
        const std::size_t end = corner_index(p.a.triangle, corner_at_end(p.a.slot));
        e.class_at_start = root_to_class.at(classes.find(start));
        e.class_at_end = root_to_class.at(classes.find(end));
        s.edges.push_back(e);
    }

    s.euler_char = static_cast<int>(s.vertex_classes.size()) -
                   static_cast<int>(pairings.size()) + static_cast<int>(face_count);
    s.total_area = 0.0;
    for (const SphericalTriangle& t : s.triangles) s.total_area += triangle_area(t);
    return s;
}

}  // namespace

GluedSurface glue_surface(const GluingDescription& desc, double tolerance) {
    std::vector<std::string> ids;
    std::vector<SphericalTriangle> triangles;
    std::map<std::string, std::size_t> by_id;
    for (const TriangleSpec& spec : desc.triangles) {
        if (!by_id.try_emplace(spec.id, ids.size()).second)
            throw ParseError("duplicate triangle id '" + spec.id + "'");
        ids.push_back(spec.id);
        triangles.push_back(triangle_from_angles(
            spec.angles_pi[0].to_double() * std::numbers::pi,
            spec.angles_pi[1].to_double() * std::numbers::pi,
            spec.angles_pi[2].to_double() * std::numbers::pi));
    }

    std::vector<EdgePairing> pairings;
    pairings.reserve(desc.pairings.size());
    for (const DescribedPairing& dp : desc.pairings) {
        const auto resolve = [&](const std::string& id, int slot) -> EdgeSlotRef {
            auto it = by_id.find(id);
            if (it == by_id.end())
                throw ParseError("pairing references unknown triangle id '" + id + "'");
            if (slot < 0 || slot > 2)
                throw ParseError("edge slot must be 0, 1 or 2, got " + std::to_string(slot));
            return {it->second, slot};
        };
        pairings.push_back({resolve(dp.a_id, dp.a_slot), resolve(dp.b_id, dp.b_slot),
                            dp.reversed});
    }
    return glue(std::move(ids), std::move(triangles), pairings, tolerance);
}

GluedSurface double_of_triangle(const SphericalTriangle& t) {
    std::vector<EdgePairing> pairings;
    for (int k = 0; k < 3; ++k)
        pairings.push_back({{0, k}, {1, k}, /*reversed=*/false});
    // Mirror gluing: corresponding corners coincide, so every cone angle
    // is twice the triangle angle.
    return glue({"front", "back"}, {t, t}, pairings, 1e-9);
}

GluedSurface torus_example() {
    const double right = std::numbers::pi / 2.0;
    const SphericalTriangle octant = triangle_from_angles(right, right, right);

    // Four octants (pole, x_i, x_{i+1}) tile the hemisphere; corner 0 is
    // the pole, slot 0 the boundary arc x_i -> x_{i+1}.
    std::vector<std::string> ids = {"q0", "q1", "q2", "q3"};
    std::vector<SphericalTriangle> triangles(4, octant);

    std::vector<EdgePairing> pairings;
    for (std::size_t i = 0; i < 4; ++i) {
        // Meridian pole--x_{i+1}: slot 1 of octant i against slot 2 of
        // octant i+1, matched pole-to-pole.
        pairings.push_back({{i, 1}, {(i + 1) % 4, 2}, /*reversed=*/true});
    }
    // Boundary arcs a, b, c, d identified a ~ c^-1 and b ~ d^-1, which
    // collapses the four equator points into one vertex of angle 4*pi.
    pairings.push_back({{0, 0}, {2, 0}, /*reversed=*/true});
    pairings.push_back({{1, 0}, {3, 0}, /*reversed=*/true});

    return glue(std::move(ids), std::move(triangles), pairings, 1e-9);
}

}  // namespace cones
