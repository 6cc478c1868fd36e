#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "edc/canny.hpp"
#include "edc/quant.hpp"

namespace edc {

/// AC retention schemes: the fraction of an edge block's non-zero AC
/// coefficients that survives, in zigzag order.
enum class Scheme : std::uint8_t { M1 = 1, M2 = 2, M3 = 3 };

inline double retention_fraction(Scheme s) {
    switch (s) {
        case Scheme::M1: return 1.0;
        case Scheme::M2: return 0.7;
        case Scheme::M3: return 0.5;
    }
    throw std::invalid_argument("unknown scheme");
}

/// ceil(fraction * k) computed in exact integer arithmetic.
inline int retained_count(Scheme s, int nonzero_ac) {
    const int k = nonzero_ac;
    switch (s) {
        case Scheme::M1: return k;
        case Scheme::M2: return (7 * k + 9) / 10;
        case Scheme::M3: return (k + 1) / 2;
    }
    throw std::invalid_argument("unknown scheme");
}

inline std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::M1: return "m1";
        case Scheme::M2: return "m2";
        case Scheme::M3: return "m3";
    }
    return "?";
}

inline Scheme scheme_from_name(const std::string& name) {
    if (name == "m1") return Scheme::M1;
    if (name == "m2") return Scheme::M2;
    if (name == "m3") return Scheme::M3;
    throw std::invalid_argument("unknown scheme '" + name + "'");
}

/// One bit per block, row-major; true marks an edge block. Shared by all
/// three planes.
struct ClassificationMap {
    int blocks_x = 0;
    int blocks_y = 0;
    std::vector<std::uint8_t> bits;

    ClassificationMap() = default;
    ClassificationMap(int bx, int by)
        : blocks_x(bx), blocks_y(by), bits(static_cast<std::size_t>(bx) * by, 0) {}

    bool is_edge(int i) const { return bits[static_cast<std::size_t>(i)] != 0; }
    void set(int i, bool v) { bits[static_cast<std::size_t>(i)] = v ? 1 : 0; }
    int block_count() const { return blocks_x * blocks_y; }

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (auto b : bits) n += b;
        return n;
    }

    bool operator==(const ClassificationMap& o) const {
        return blocks_x == o.blocks_x && blocks_y == o.blocks_y && bits == o.bits;
    }
};

/// A block is an edge block when at least min_edge_pixels edge pixels fall
/// inside its unpadded region. Padding carries no edge pixels by definition.
inline ClassificationMap classify(const EdgeMap& edges, const BlockGrid& grid,
                                  int min_edge_pixels) {
    if (edges.width != grid.true_width || edges.height != grid.true_height)
        throw std::invalid_argument("classify: edge map does not match grid dimensions");
    if (min_edge_pixels < 1)
        throw std::invalid_argument("classify: min_edge_pixels must be >= 1");

    const int n = grid.block_size;
    ClassificationMap map(grid.blocks_x, grid.blocks_y);
    for (int by = 0; by < grid.blocks_y; ++by) {
        for (int bx = 0; bx < grid.blocks_x; ++bx) {
            int count = 0;
            const int y1 = std::min((by + 1) * n, grid.true_height);
            const int x1 = std::min((bx + 1) * n, grid.true_width);
            for (int y = by * n; y < y1; ++y)
                for (int x = bx * n; x < x1; ++x)
                    if (edges.at(x, y)) ++count;
            map.set(by * grid.blocks_x + bx, count >= min_edge_pixels);
        }
    }
    return map;
}

// Non-edge blocks keep only the DC value. Edge blocks keep the first
// ceil(fraction * k) of their k non-zero AC values in zigzag order and drop
// the rest; zeros stay zeros and DC is never touched.
inline QuantizedBlock retain(const QuantizedBlock& qb, bool is_edge, Scheme scheme) {
    QuantizedBlock out = qb;
    const std::size_t count = out.values.size();
    if (!is_edge) {
        for (std::size_t k = 1; k < count; ++k) out.values[k] = 0;
        return out;
    }
    int nonzero = 0;
    for (std::size_t k = 1; k < count; ++k)
        if (out.values[k] != 0) ++nonzero;
    int keep = retained_count(scheme, nonzero);
    for (std::size_t k = 1; k < count; ++k) {
        if (out.values[k] == 0) continue;
        if (keep > 0)
            --keep;
        else
            out.values[k] = 0;
    }
    return out;
}

}  // namespace edc
