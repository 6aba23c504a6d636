#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>

#include "cyclopoly/model.hpp"

namespace cyclopoly {

// Shoelace (Gaussian) area over the closed vertex sequence. Self-intersecting
// polygons accumulate signed front/back-facing contributions; degenerate
// polygons (k <= 2) have zero area.
inline double signed_area(const CyclicPolygon& p) {
    const std::size_t k = p.vertices.size();
    if (k <= 2) return 0.0;
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const Vec2 a = p.vertices[j];
        const Vec2 b = p.vertices[(j + 1) % k];
        sum += a.x * b.y - b.x * a.y;
    }
    return 0.5 * sum;
}

// Total length of all closing edges v_j -> v_{j+1 mod k}. A two-vertex polygon
// counts its single segment twice (there and back).
inline double circumference(const CyclicPolygon& p) {
    const std::size_t k = p.vertices.size();
    if (k <= 1) return 0.0;
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) sum += norm(p.vertices[(j + 1) % k] - p.vertices[j]);
    return sum;
}

inline Vec2 vertex_centroid(const CyclicPolygon& p) {
    if (p.vertices.empty()) throw DataError("vertex_centroid of empty polygon");
    Vec2 acc{0.0, 0.0};
    for (const Vec2 v : p.vertices) acc = acc + v;
    return {acc.x / static_cast<double>(p.vertices.size()),
            acc.y / static_cast<double>(p.vertices.size())};
}

struct AngleSums {
    double ccw{0.0};
    double cw{0.0};
};

// Signed turning angle between the incoming and outgoing edge at each vertex,
// split into counter-clockwise and clockwise totals (both reported >= 0).
// Zero-length edges contribute nothing; an exact anti-parallel turn counts
// as +pi (deterministic tie-break).
inline AngleSums angle_sums(const CyclicPolygon& p) {
    const std::size_t k = p.vertices.size();
    AngleSums sums;
    if (k < 2) return sums;
    for (std::size_t j = 0; j < k; ++j) {
        const Vec2 in = p.vertices[j] - p.vertices[(j + k - 1) % k];
        const Vec2 out = p.vertices[(j + 1) % k] - p.vertices[j];
        if ((in.x == 0.0 && in.y == 0.0) || (out.x == 0.0 && out.y == 0.0)) continue;
        const double c = cross(in, out);
        const double d = dot(in, out);
        double angle = std::atan2(c, d);
        if (c == 0.0 && d < 0.0) angle = std::numbers::pi;  // anti-parallel tie -> +pi
        if (angle >= 0.0)
            sums.ccw += angle;
        else
            sums.cw -= angle;
    }
    return sums;
}

// Signed distance of a point to the main diagonal y = x, positive above.
inline double diagonal_distance(Vec2 v) { return (v.y - v.x) / std::numbers::sqrt2; }

// Slopes of the PCP line segments of d under unit axis spacing and equal
// scaling; entry j is delta_{j+1 mod n} - delta_j (the last one wraps around).
inline std::vector<double> pcp_segment_slopes(const DataVector& d) {
    const std::size_t n = d.size();
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = d[(j + 1) % n] - d[j];
    return s;
}

// Slope of edge v_j -> v_{j+1 mod k}; nullopt for a vertical edge.
inline std::optional<double> edge_slope(const CyclicPolygon& p, std::size_t j) {
    const std::size_t k = p.vertices.size();
    if (k < 2) throw DataError("edge_slope requires at least 2 vertices");
    const Vec2 a = p.vertices[j % k];
    const Vec2 b = p.vertices[(j + 1) % k];
    if (b.x == a.x) return std::nullopt;
    return (b.y - a.y) / (b.x - a.x);
}

}  // namespace cyclopoly
