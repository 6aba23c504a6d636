#pragma once

#include <cstddef>

#include "cyclopoly/model.hpp"

namespace cyclopoly {

// ab-bc cyclic pair selection: vertex j = (delta_j, delta_{j+1 mod n}), k = n.
inline CyclicPolygon select_abbc(const DataVector& d) {
    const std::size_t n = d.size();
    if (n < 2) throw DataError("ab-bc selection requires dimension >= 2");
    CyclicPolygon p;
    p.scheme = Scheme::AbBc;
    p.source_dimension = n;
    p.vertices.reserve(n);
    for (std::size_t j = 0; j < n; ++j) p.vertices.push_back({d[j], d[(j + 1) % n]});
    return p;
}

// ab-cd cyclic pair selection: vertex j = (delta_{2j}, delta_{2j+1 mod n}),
// k = ceil(n/2). For odd n the last vertex reuses delta_0 as its y component.
inline CyclicPolygon select_abcd(const DataVector& d) {
    const std::size_t n = d.size();
    if (n < 2) throw DataError("ab-cd selection requires dimension >= 2");
    const std::size_t k = (n + 1) / 2;
    CyclicPolygon p;
    p.scheme = Scheme::AbCd;
    p.source_dimension = n;
    p.vertices.reserve(k);
    for (std::size_t j = 0; j < k; ++j) p.vertices.push_back({d[2 * j], d[(2 * j + 1) % n]});
    return p;
}

inline CyclicPolygon select(const DataVector& d, Scheme scheme) {
    return scheme == Scheme::AbBc ? select_abbc(d) : select_abcd(d);
}

// Cyclic rotation by l positions: component i of the result is delta_{(i+l) mod n}.
// Negative shifts rotate the other way.
inline DataVector cyclic_shift(const DataVector& d, long l) {
    const long n = static_cast<long>(d.size());
    if (n == 0) return {};
    DataVector out(d.size());
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>((((i + l) % n) + n) % n)];
    return out;
}

}  // namespace cyclopoly
