#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "edc/dct.hpp"

namespace edc {

enum class QuantClass : std::uint8_t { Luma, Chroma };

namespace quant_detail {

// Baseline JPEG 8x8 step tables (luminance / chrominance).
inline constexpr std::array<int, 64> kBaseLuma = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99,
};

inline constexpr std::array<int, 64> kBaseChroma = {
    17, 18, 24, 47, 99, 99, 99, 99,  //
    18, 21, 26, 66, 99, 99, 99, 99,  //
    24, 26, 56, 99, 99, 99, 99, 99,  //
    47, 66, 99, 99, 99, 99, 99, 99,  //
    99, 99, 99, 99, 99, 99, 99, 99,  //
    99, 99, 99, 99, 99, 99, 99, 99,  //
    99, 99, 99, 99, 99, 99, 99, 99,  //
    99, 99, 99, 99, 99, 99, 99, 99,
};

}  // namespace quant_detail

/// Per-frequency quantization step sizes for one component class.
struct QuantMatrix {
    int n = 0;
    QuantClass cls = QuantClass::Luma;
    std::vector<int> entries;  // raster order, each in [1,255]

    int at(int row, int col) const { return entries[static_cast<std::size_t>(row) * n + col]; }
};

/// Step table for the given block size and quality. The 8x8 base table is
/// scaled by s = quality<50 ? 5000/quality : 200-2*quality (percent) and
/// clamped to [1,255]; 16x16 and 32x32 tables replicate each base entry
/// 2x2 / 4x4 so the frequency-band structure carries over.
inline QuantMatrix base_qmatrix(int n, QuantClass cls, int quality) {
    if (!valid_block_size(n))
        throw std::invalid_argument("base_qmatrix: block size must be 8, 16 or 32");
    if (quality < 1 || quality > 100)
        throw std::invalid_argument("base_qmatrix: quality must be in [1,100]");

    const std::array<int, 64>& base =
        (cls == QuantClass::Luma) ? quant_detail::kBaseLuma : quant_detail::kBaseChroma;
    const double scale = (quality < 50) ? 5000.0 / quality : 200.0 - 2.0 * quality;

    QuantMatrix q;
    q.n = n;
    q.cls = cls;
    q.entries.resize(static_cast<std::size_t>(n) * n);
    const int rep = n / 8;
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            const int b = base[static_cast<std::size_t>(row / rep) * 8 + (col / rep)];
            int v = static_cast<int>(std::llround(b * scale / 100.0));
            if (v < 1) v = 1;
            if (v > 255) v = 255;
            q.entries[static_cast<std::size_t>(row) * n + col] = v;
        }
    }
    return q;
}

/// Integer DCT coefficients of one block, stored in zigzag order.
struct QuantizedBlock {
    int n = 0;
    std::vector<std::int32_t> values;  // n*n values, zigzag order; index 0 is DC

    bool operator==(const QuantizedBlock& o) const { return n == o.n && values == o.values; }
};

/// Divide each coefficient by its step, round half away from zero, reorder
/// into zigzag.
inline QuantizedBlock quantize(const double* coeffs, const QuantMatrix& q,
                               const std::vector<int>& zz) {
    QuantizedBlock out;
    out.n = q.n;
    const std::size_t count = static_cast<std::size_t>(q.n) * q.n;
    if (zz.size() != count)
        throw std::invalid_argument("quantize: zigzag order does not match block size");
    out.values.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        const int raster = zz[k];
        out.values[k] = static_cast<std::int32_t>(std::llround(coeffs[raster] / q.entries[raster]));
    }
    return out;
}

/// Multiply back by the steps and undo the zigzag; raster-order coefficients.
inline void dequantize(const QuantizedBlock& qb, const QuantMatrix& q, const std::vector<int>& zz,
                       double* coeffs) {
    if (qb.n != q.n)
        throw std::invalid_argument("dequantize: block size mismatch");
    const std::size_t count = static_cast<std::size_t>(q.n) * q.n;
    if (zz.size() != count)
        throw std::invalid_argument("dequantize: zigzag order does not match block size");
    for (std::size_t k = 0; k < count; ++k) {
        const int raster = zz[k];
        coeffs[raster] = static_cast<double>(qb.values[k]) * q.entries[raster];
    }
}

}  // namespace edc
