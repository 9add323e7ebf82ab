#include "cones/surface_report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace cones {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> dijkstra(const std::vector<std::vector<std::pair<std::size_t, double>>>& adj,
                             std::size_t source) {
    std::vector<double> dist(adj.size(), kInf);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[source] = 0.0;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[u]) continue;
        for (const auto& [v, w] : adj[u]) {
            if (d + w < dist[v]) {
                dist[v] = d + w;
                queue.emplace(dist[v], v);
            }
        }
    }
    return dist;
}

bool near_pi_multiple(double d, double tolerance) {
    if (!std::isfinite(d)) return false;
    const double k = std::round(d / std::numbers::pi);
    return k >= 1.0 && std::abs(d - k * std::numbers::pi) <= tolerance;
}

}  // namespace

bool SurfaceReport::gauss_bonnet_ok() const {
    return gauss_bonnet_residual < tolerance * std::max(1.0, area);
}

SurfaceReport surface_report(const GluedSurface& s, double tolerance) {
    SurfaceReport report;
    report.chi = s.euler_char;
    report.area = s.total_area;
    report.tolerance = tolerance;

    double divisor_sum = 0.0;  // sum over classes of (cone_angle/2pi - 1)
    for (std::size_t i = 0; i < s.vertex_classes.size(); ++i) {
        const double angle = s.vertex_classes[i].cone_angle;
        ConePoint p;
        p.vertex_class = i;
        p.angle = angle;
        p.is_singular = std::abs(angle - kTwoPi) > tolerance;
        report.cone_points.push_back(p);
        if (p.is_singular) report.singular_classes.push_back(i);
        divisor_sum += angle / kTwoPi - 1.0;
    }
    report.gauss_bonnet_residual =
        std::abs(s.total_area - kTwoPi * (s.euler_char + divisor_sum));

    // Edge graph over vertex classes; loops kept aside for the diagonal.
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(s.vertex_classes.size());
    std::vector<double> shortest_loop(s.vertex_classes.size(), kInf);
    for (const GluedEdge& e : s.edges) {
        if (e.class_at_start == e.class_at_end) {
            shortest_loop[e.class_at_start] =
                std::min(shortest_loop[e.class_at_start], e.length);
        } else {
            adj[e.class_at_start].emplace_back(e.class_at_end, e.length);
            adj[e.class_at_end].emplace_back(e.class_at_start, e.length);
        }
    }

    const std::size_t m = report.singular_classes.size();
    report.singular_pair_distances.assign(m, std::vector<double>(m, kInf));
    report.pi_multiplicity_flags.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        const std::vector<double> dist = dijkstra(adj, report.singular_classes[i]);
        for (std::size_t j = 0; j < m; ++j) {
            const double d = i == j ? shortest_loop[report.singular_classes[i]]
                                    : dist[report.singular_classes[j]];
            report.singular_pair_distances[i][j] = d;
            report.pi_multiplicity_flags[i][j] = near_pi_multiple(d, tolerance);
        }
    }
    return report;
}

}  // namespace cones
