#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclopoly {

// Thrown for malformed input data (bad CSV cells, dimension mismatches,
// invalid scale bounds, ...). The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

struct Vec2 {
    double x{0.0};
    double y{0.0};

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// One n-dimensional data value (components delta_0 .. delta_{n-1}).
using DataVector = std::vector<double>;

enum class Scheme { AbBc, AbCd };

inline const char* to_string(Scheme s) { return s == Scheme::AbBc ? "abbc" : "abcd"; }

struct Dataset {
    std::vector<DataVector> vectors;
    std::vector<std::string> labels;           // empty when unlabeled
    std::vector<std::string> attribute_names;  // empty when unnamed

    std::size_t size() const { return vectors.size(); }
    std::size_t dimension() const { return vectors.empty() ? 0 : vectors.front().size(); }
    bool labeled() const { return !labels.empty(); }
};

// Ordered 2D vertex sequence produced by cyclic pair selection.
struct CyclicPolygon {
    std::vector<Vec2> vertices;
    Scheme scheme{Scheme::AbBc};
    std::size_t source_dimension{0};

    std::size_t vertex_count() const { return vertices.size(); }
};

enum class AxisTransform { Linear, Log10 };

// Data-domain bounds plus the axis transform used when mapping to image space.
struct ScaleSpec {
    AxisTransform transform{AxisTransform::Linear};
    double x_min{0.0};
    double x_max{1.0};
    double y_min{0.0};
    double y_max{1.0};

    void validate() const {
        if (!(x_min < x_max) || !(y_min < y_max))
            throw DataError("scale bounds must satisfy min < max");
        if (transform == AxisTransform::Log10 && (x_min <= 0.0 || y_min <= 0.0))
            throw DataError("log10 scale requires strictly positive bounds");
    }
};

enum class PlacementStrategy { Intrinsic, Geometric, Angular, Statistical };

inline const char* to_string(PlacementStrategy s) {
    switch (s) {
        case PlacementStrategy::Intrinsic: return "intrinsic";
        case PlacementStrategy::Geometric: return "geometric";
        case PlacementStrategy::Angular: return "angular";
        case PlacementStrategy::Statistical: return "statistical";
    }
    return "?";
}

// One downscaled polygon per data value, anchored at a strategy-defined centroid.
struct GlyphLayout {
    struct Entry {
        Vec2 centroid;
        CyclicPolygon polygon;  // already translated/scaled into the glyph frame
    };

    std::vector<Entry> entries;
    PlacementStrategy strategy{PlacementStrategy::Intrinsic};
    double scale_factor{0.05};

    std::vector<Vec2> centroids() const {
        std::vector<Vec2> out;
        out.reserve(entries.size());
        for (const auto& e : entries) out.push_back(e.centroid);
        return out;
    }
};

// Scores of a 2D embedding against ground-truth class labels.
// Both Jaccard readings and both silhouette labelings are carried so the
// report surfaces the ambiguity instead of hiding it.
struct ClusterEvalReport {
    double jaccard_matched{0.0};     // best one-to-one label matching agreement
    double jaccard_pair{0.0};        // pair-counting partition similarity
    double silhouette_true{0.0};     // silhouette of the true classes on the coords
    double silhouette_kmeans{0.0};   // silhouette of the k-means partition
    std::vector<int> kmeans_labels;
    int k{0};
    int restarts{0};
    std::uint64_t seed{0};
    bool normalized_coords{false};
    double wcss{0.0};
};

namespace detail {

inline std::string ordinal_cell(std::size_t row, std::size_t col) {
    return "row " + std::to_string(row) + ", column " + std::to_string(col);
}

}  // namespace detail

// Checks all Dataset invariants and returns the dataset unchanged.
// Errors carry the offending row (and column where applicable).
inline Dataset validate_dataset(Dataset ds) {
    if (!ds.vectors.empty()) {
        const std::size_t n = ds.vectors.front().size();
        if (n < 2) throw DataError("dimension must be at least 2, got " + std::to_string(n));
        for (std::size_t i = 0; i < ds.vectors.size(); ++i) {
            if (ds.vectors[i].size() != n)
                throw DataError("dimension mismatch at row " + std::to_string(i) + ": expected " +
                                std::to_string(n) + ", got " + std::to_string(ds.vectors[i].size()));
            for (std::size_t j = 0; j < n; ++j)
                if (!std::isfinite(ds.vectors[i][j]))
                    throw DataError("non-finite component at " + detail::ordinal_cell(i, j));
        }
        if (!ds.attribute_names.empty() && ds.attribute_names.size() != n)
            throw DataError("attribute name count " + std::to_string(ds.attribute_names.size()) +
                            " does not match dimension " + std::to_string(n));
    }
    if (!ds.labels.empty() && ds.labels.size() != ds.vectors.size())
        throw DataError("label count " + std::to_string(ds.labels.size()) +
                        " does not match vector count " + std::to_string(ds.vectors.size()));
    return ds;
}

}  // namespace cyclopoly
