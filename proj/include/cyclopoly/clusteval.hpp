#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclopoly/model.hpp"

namespace cyclopoly {

namespace detail {

// Uniform double in [0,1) from the top 53 bits of the engine, independent of
// the standard library's unspecified distribution algorithms.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline std::size_t uniform_index(std::mt19937_64& eng, std::size_t n) {
    const auto i = static_cast<std::size_t>(uniform01(eng) * static_cast<double>(n));
    return i < n ? i : n - 1;
}

inline double sq_dist(Vec2 a, Vec2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace detail

struct KMeansResult {
    std::vector<int> assignment;
    std::vector<Vec2> centroids;
    double wcss{0.0};
    int iterations{0};
    int best_restart{0};
};

struct KMeansConfig {
    int restarts{10};
    std::uint64_t seed{42};
    int max_iterations{300};
};

// Lloyd's algorithm with k-means++ seeding. `restarts` independent runs; the
// assignment with the lowest within-cluster sum of squares wins, ties broken
// by restart index. Deterministic for a fixed seed.
inline KMeansResult kmeans(const std::vector<Vec2>& points, int k, KMeansConfig cfg = {}) {
    const std::size_t n = points.size();
    if (k < 1) throw DataError("k-means requires k >= 1");
    if (static_cast<std::size_t>(k) > n)
        throw DataError("k-means requires at least k points, got " + std::to_string(n) +
                        " for k = " + std::to_string(k));

    KMeansResult best;
    best.wcss = std::numeric_limits<double>::infinity();

    std::vector<double> d2(n);
    std::vector<int> assign(n, 0);
    std::vector<Vec2> centers(static_cast<std::size_t>(k));
    std::vector<std::size_t> counts(static_cast<std::size_t>(k));

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        std::mt19937_64 eng(cfg.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(restart + 1));

        // k-means++ seeding: first center uniform, then squared-distance weighted
        centers[0] = points[detail::uniform_index(eng, n)];
        std::fill(d2.begin(), d2.end(), std::numeric_limits<double>::infinity());
        for (int c = 1; c < k; ++c) {
            double total = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                d2[i] = std::min(d2[i], detail::sq_dist(points[i], centers[static_cast<std::size_t>(c - 1)]));
                total += d2[i];
            }
            if (total <= 0.0) {
                centers[static_cast<std::size_t>(c)] = points[detail::uniform_index(eng, n)];
                continue;
            }
            const double r = detail::uniform01(eng) * total;
            double acc = 0.0;
            std::size_t pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                acc += d2[i];
                if (acc >= r) {
                    pick = i;
                    break;
                }
            }
            centers[static_cast<std::size_t>(c)] = points[pick];
        }

        double prev_wcss = std::numeric_limits<double>::infinity();
        int iterations = 0;
        while (iterations < cfg.max_iterations) {
            // assignment step
            bool any_change = false;
            double wcss = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                int nearest = 0;
                double nearest_d = detail::sq_dist(points[i], centers[0]);
                for (int c = 1; c < k; ++c) {
                    const double dist = detail::sq_dist(points[i], centers[static_cast<std::size_t>(c)]);
                    if (dist < nearest_d) {
                        nearest_d = dist;
                        nearest = c;
                    }
                }
                if (assign[i] != nearest) {
                    assign[i] = nearest;
                    any_change = true;
                }
                wcss += nearest_d;
            }
            // Lloyd steps never increase the objective
            if (wcss > prev_wcss + 1e-9 * std::max(1.0, prev_wcss))
                throw std::logic_error("k-means objective increased between iterations");
            prev_wcss = wcss;
            if (iterations > 0 && !any_change) break;  // assignments stable

            // update step; an emptied cluster keeps its previous centroid
            for (auto& c : centers) c = {0.0, 0.0};
            std::fill(counts.begin(), counts.end(), std::size_t{0});
            for (std::size_t i = 0; i < n; ++i) {
                const auto c = static_cast<std::size_t>(assign[i]);
                centers[c] = centers[c] + points[i];
                ++counts[c];
            }
            for (int c = 0; c < k; ++c) {
                const auto ci = static_cast<std::size_t>(c);
                if (counts[ci] > 0)
                    centers[ci] = (1.0 / static_cast<double>(counts[ci])) * centers[ci];
            }
            ++iterations;
        }

        // final objective under the updated centers
        double wcss = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            wcss += detail::sq_dist(points[i], centers[static_cast<std::size_t>(assign[i])]);

        if (wcss < best.wcss) {
            best.assignment = assign;
            best.centroids = centers;
            best.wcss = wcss;
            best.iterations = iterations;
            best.best_restart = restart;
        }
    }
    return best;
}

// Pair-counting Jaccard similarity of two partitions: over all unordered item
// pairs, n11 / (n11 + n10 + n01). 1.0 iff the partitions agree up to renaming.
template <typename A, typename B>
double jaccard_index(const std::vector<A>& a, const std::vector<B>& b) {
    if (a.size() != b.size())
        throw DataError("jaccard_index: length mismatch " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()));
    const std::size_t n = a.size();
    std::uint64_t n11 = 0, n10 = 0, n01 = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool sa = a[i] == a[j];
            const bool sb = b[i] == b[j];
            if (sa && sb)
                ++n11;
            else if (sa)
                ++n10;
            else if (sb)
                ++n01;
        }
    const std::uint64_t denom = n11 + n10 + n01;
    return denom == 0 ? 1.0 : static_cast<double>(n11) / static_cast<double>(denom);
}

namespace detail {

template <typename T>
std::vector<int> compact_labels(const std::vector<T>& labels, std::size_t& count) {
    std::vector<T> uniq(labels);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    count = uniq.size();
    std::vector<int> out;
    out.reserve(labels.size());
    for (const auto& l : labels)
        out.push_back(static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), l) - uniq.begin()));
    return out;
}

}  // namespace detail

// Best one-to-one label matching agreement: the largest fraction of items on
// which the two labelings agree after optimally renaming one of them.
// 1.0 iff the partitions agree up to renaming.
template <typename A, typename B>
double label_matching_score(const std::vector<A>& a, const std::vector<B>& b) {
    if (a.size() != b.size())
        throw DataError("label_matching_score: length mismatch " + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()));
    if (a.empty()) return 1.0;
    std::size_t ka = 0, kb = 0;
    const std::vector<int> ca = detail::compact_labels(a, ka);
    const std::vector<int> cb = detail::compact_labels(b, kb);
    // confusion counts; rows = smaller side so the permutation search stays tiny
    const bool swap = ka > kb;
    const std::size_t rows = swap ? kb : ka;
    const std::size_t cols = swap ? ka : kb;
    if (rows > 9)
        throw DataError("label_matching_score supports at most 9 clusters on the smaller side");
    std::vector<std::uint64_t> m(rows * cols, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto r = static_cast<std::size_t>(swap ? cb[i] : ca[i]);
        const auto c = static_cast<std::size_t>(swap ? ca[i] : cb[i]);
        ++m[r * cols + c];
    }
    std::vector<std::size_t> perm(cols);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t bestsum = 0;
    // optimal assignment over injections rows -> cols (k is small everywhere here)
    do {
        std::uint64_t s = 0;
        for (std::size_t r = 0; r < rows; ++r) s += m[r * cols + perm[r]];
        bestsum = std::max(bestsum, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<double>(bestsum) / static_cast<double>(a.size());
}

// Mean silhouette of a labeled 2D point set under the Euclidean metric.
// Requires at least two non-empty clusters; singleton points score 0.
template <typename L>
double silhouette(const std::vector<Vec2>& points, const std::vector<L>& labels) {
    if (points.size() != labels.size())
        throw DataError("silhouette: point/label length mismatch");
    const std::size_t n = points.size();
    std::size_t k = 0;
    const std::vector<int> lab = detail::compact_labels(labels, k);
    if (k < 2) throw DataError("silhouette undefined for a single cluster");

    std::vector<std::size_t> sizes(k, 0);
    for (int l : lab) ++sizes[static_cast<std::size_t>(l)];

    double total = 0.0;
    std::vector<double> sums(k);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(sums.begin(), sums.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double dx = points[i].x - points[j].x;
            const double dy = points[i].y - points[j].y;
            sums[static_cast<std::size_t>(lab[j])] += std::sqrt(dx * dx + dy * dy);
        }
        const auto own = static_cast<std::size_t>(lab[i]);
        if (sizes[own] <= 1) continue;  // singleton scores 0
        const double a = sums[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (c == own || sizes[c] == 0) continue;
            b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
        }
        total += (b - a) / std::max(a, b);
    }
    return total / static_cast<double>(n);
}

struct EvalConfig {
    int restarts{10};
    std::uint64_t seed{42};
    bool normalize_coords{false};  // per-axis min-max before k-means
    int k{0};                      // 0 = number of distinct true labels
};

// Per-axis min-max normalization of a 2D embedding to the unit square.
inline std::vector<Vec2> minmax_normalize(std::vector<Vec2> pts) {
    if (pts.empty()) return pts;
    Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Vec2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const Vec2 p : pts) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    const double sx = hi.x - lo.x;
    const double sy = hi.y - lo.y;
    for (Vec2& p : pts) {
        p.x = sx > 0.0 ? (p.x - lo.x) / sx : 0.0;
        p.y = sy > 0.0 ? (p.y - lo.y) / sy : 0.0;
    }
    return pts;
}

// Scores a 2D embedding against ground-truth labels: k-means partition vs
// truth (both Jaccard readings) plus silhouettes of the truth and of the
// k-means partition on the evaluated coordinates.
inline ClusterEvalReport evaluate_embedding(const std::vector<Vec2>& coords,
                                            const std::vector<std::string>& truth,
                                            EvalConfig cfg = {}) {
    if (truth.empty()) throw DataError("evaluation requires a labeled dataset");
    if (coords.size() != truth.size())
        throw DataError("evaluation: coordinate count " + std::to_string(coords.size()) +
                        " does not match label count " + std::to_string(truth.size()));

    std::size_t k_truth = 0;
    detail::compact_labels(truth, k_truth);
    const int k = cfg.k > 0 ? cfg.k : static_cast<int>(k_truth);

    const std::vector<Vec2> pts = cfg.normalize_coords ? minmax_normalize(coords) : coords;
    const KMeansResult km = kmeans(pts, k, {cfg.restarts, cfg.seed});

    ClusterEvalReport report;
    report.kmeans_labels = km.assignment;
    report.k = k;
    report.restarts = cfg.restarts;
    report.seed = cfg.seed;
    report.normalized_coords = cfg.normalize_coords;
    report.wcss = km.wcss;
    report.jaccard_matched = label_matching_score(km.assignment, truth);
    report.jaccard_pair = jaccard_index(km.assignment, truth);
    report.silhouette_true = silhouette(pts, truth);
    std::size_t k_found = 0;
    detail::compact_labels(km.assignment, k_found);
    report.silhouette_kmeans = k_found >= 2 ? silhouette(pts, km.assignment) : 0.0;
    return report;
}

inline ClusterEvalReport evaluate_placement(const GlyphLayout& layout,
                                            const std::vector<std::string>& truth,
                                            EvalConfig cfg = {}) {
    return evaluate_embedding(layout.centroids(), truth, cfg);
}

// Reads a 2D embedding from CSV (columns x,y; optional single header line;
// rows aligned with the dataset order).
inline std::vector<Vec2> load_external_embedding(const std::string& path, std::size_t expected_rows) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open embedding file: " + path);
    std::vector<Vec2> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cx, cy, extra;
        if (!std::getline(ss, cx, ',') || !std::getline(ss, cy, ','))
            throw DataError("embedding row " + std::to_string(lineno) + ": expected two columns");
        if (std::getline(ss, extra, ','))
            throw DataError("embedding row " + std::to_string(lineno) + ": expected two columns");
        try {
            std::size_t px = 0, py = 0;
            const double x = std::stod(cx, &px);
            const double y = std::stod(cy, &py);
            if (px != cx.size() || py != cy.size()) throw std::invalid_argument("trailing");
            pts.push_back({x, y});
        } catch (const std::exception&) {
            if (lineno == 1 && pts.empty()) continue;  // header line
            throw DataError("embedding row " + std::to_string(lineno) + ": non-numeric cell");
        }
    }
    if (pts.size() != expected_rows)
        throw DataError("embedding row count " + std::to_string(pts.size()) + " != " +
                        std::to_string(expected_rows));
    return pts;
}

}  // namespace cyclopoly
