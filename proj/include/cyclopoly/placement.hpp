#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "cyclopoly/geometry.hpp"
#include "cyclopoly/model.hpp"
#include "cyclopoly/scheme.hpp"

namespace cyclopoly {

namespace detail {

// Similarity transform of a polygon into its glyph frame: uniform scale about
// the vertex centroid, then anchored at `center`. The glyph's vertex mean is
// `center` by construction.
inline CyclicPolygon make_glyph(const CyclicPolygon& poly, Vec2 center, double factor) {
    CyclicPolygon glyph = poly;
    const Vec2 mean = vertex_centroid(poly);
    for (Vec2& v : glyph.vertices) v = center + factor * (v - mean);
    return glyph;
}

}  // namespace detail

// Per-dimension min-max rescaling of the input data to [0,1]. Constant
// dimensions map to 0.
inline Dataset minmax_rescale(Dataset ds) {
    if (ds.vectors.empty()) return ds;
    const std::size_t n = ds.dimension();
    std::vector<double> lo(n, std::numeric_limits<double>::infinity());
    std::vector<double> hi(n, -std::numeric_limits<double>::infinity());
    for (const auto& v : ds.vectors)
        for (std::size_t j = 0; j < n; ++j) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    for (auto& v : ds.vectors)
        for (std::size_t j = 0; j < n; ++j) {
            const double span = hi[j] - lo[j];
            v[j] = span > 0.0 ? (v[j] - lo[j]) / span : 0.0;
        }
    return ds;
}

// Intrinsic placement: glyphs stay at the vertex centroid of the value's
// ab-cd polygon. ab-bc polygons (whose centroids all sit on the diagonal) are
// translated to the ab-cd centroid of the same value before downscaling.
inline GlyphLayout place_intrinsic(const Dataset& ds, Scheme scheme, double scale_factor = 0.05) {
    GlyphLayout layout;
    layout.strategy = PlacementStrategy::Intrinsic;
    layout.scale_factor = scale_factor;
    layout.entries.reserve(ds.size());
    for (const auto& d : ds.vectors) {
        const Vec2 center = vertex_centroid(select_abcd(d));
        const CyclicPolygon poly = select(d, scheme);
        layout.entries.push_back({center, detail::make_glyph(poly, center, scale_factor)});
    }
    return layout;
}

// Geometric placement: centroid = (|signed area|, circumference).
inline GlyphLayout place_geometric(const Dataset& ds, Scheme scheme, double scale_factor = 0.05) {
    GlyphLayout layout;
    layout.strategy = PlacementStrategy::Geometric;
    layout.scale_factor = scale_factor;
    layout.entries.reserve(ds.size());
    for (const auto& d : ds.vectors) {
        const CyclicPolygon poly = select(d, scheme);
        const Vec2 center{std::abs(signed_area(poly)), circumference(poly)};
        layout.entries.push_back({center, detail::make_glyph(poly, center, scale_factor)});
    }
    return layout;
}

// Angular placement: centroid = (sum of ccw turning angles, sum of cw turning
// angles), in radians.
inline GlyphLayout place_angular(const Dataset& ds, Scheme scheme, double scale_factor = 0.05) {
    GlyphLayout layout;
    layout.strategy = PlacementStrategy::Angular;
    layout.scale_factor = scale_factor;
    layout.entries.reserve(ds.size());
    for (const auto& d : ds.vectors) {
        const CyclicPolygon poly = select(d, scheme);
        const AngleSums sums = angle_sums(poly);
        const Vec2 center{sums.ccw, sums.cw};
        layout.entries.push_back({center, detail::make_glyph(poly, center, scale_factor)});
    }
    return layout;
}

// Statistical placement: centroid = (component mean, population standard
// deviation). Scheme-invariant; the glyph shape uses the ab-cd polygon.
inline GlyphLayout place_statistical(const Dataset& ds, double scale_factor = 0.05) {
    GlyphLayout layout;
    layout.strategy = PlacementStrategy::Statistical;
    layout.scale_factor = scale_factor;
    layout.entries.reserve(ds.size());
    for (const auto& d : ds.vectors) {
        const double n = static_cast<double>(d.size());
        double mean = 0.0;
        for (double v : d) mean += v;
        mean /= n;
        double var = 0.0;
        for (double v : d) var += (v - mean) * (v - mean);
        var /= n;
        const Vec2 center{mean, std::sqrt(var)};
        layout.entries.push_back({center, detail::make_glyph(select_abcd(d), center, scale_factor)});
    }
    return layout;
}

inline GlyphLayout place(const Dataset& ds, PlacementStrategy strategy, Scheme scheme,
                         double scale_factor = 0.05) {
    switch (strategy) {
        case PlacementStrategy::Intrinsic: return place_intrinsic(ds, scheme, scale_factor);
        case PlacementStrategy::Geometric: return place_geometric(ds, scheme, scale_factor);
        case PlacementStrategy::Angular: return place_angular(ds, scheme, scale_factor);
        case PlacementStrategy::Statistical: return place_statistical(ds, scale_factor);
    }
    throw DataError("unknown placement strategy");
}

}  // namespace cyclopoly
