#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "edc/image.hpp"

namespace edc {

inline bool valid_block_size(int n) { return n == 8 || n == 16 || n == 32; }

/// Geometry of a plane partitioned into N x N blocks. Padded dimensions are
/// the smallest multiples of N covering the true dimensions.
struct BlockGrid {
    int block_size = 0;
    int true_width = 0, true_height = 0;
    int padded_width = 0, padded_height = 0;
    int blocks_x = 0, blocks_y = 0;

    static BlockGrid make(int n, int width, int height) {
        if (!valid_block_size(n))
            throw std::invalid_argument("block size must be 8, 16 or 32");
        if (width < 1 || height < 1)
            throw std::invalid_argument("grid dimensions must be >= 1");
        BlockGrid g;
        g.block_size = n;
        g.true_width = width;
        g.true_height = height;
        g.blocks_x = (width + n - 1) / n;
        g.blocks_y = (height + n - 1) / n;
        g.padded_width = g.blocks_x * n;
        g.padded_height = g.blocks_y * n;
        return g;
    }

    int block_count() const { return blocks_x * blocks_y; }
};

/// Row-major sequence of N*N sample blocks cut from one plane.
struct BlockArray {
    BlockGrid grid;
    std::vector<double> data;  // block_count() contiguous blocks of N*N samples

    double* block(int i) { return data.data() + static_cast<std::size_t>(i) * samples_per_block(); }
    const double* block(int i) const {
        return data.data() + static_cast<std::size_t>(i) * samples_per_block();
    }
    std::size_t samples_per_block() const {
        return static_cast<std::size_t>(grid.block_size) * grid.block_size;
    }
};

/// Cuts the plane into N x N blocks, replicating edge samples into padding.
inline BlockArray partition(const Plane& p, int n) {
    BlockArray out;
    out.grid = BlockGrid::make(n, p.width, p.height);
    out.data.resize(static_cast<std::size_t>(out.grid.block_count()) * n * n);
    for (int by = 0; by < out.grid.blocks_y; ++by) {
        for (int bx = 0; bx < out.grid.blocks_x; ++bx) {
            double* blk = out.block(by * out.grid.blocks_x + bx);
            for (int y = 0; y < n; ++y)
                for (int x = 0; x < n; ++x)
                    blk[y * n + x] = p.at_clamped(bx * n + x, by * n + y);
        }
    }
    return out;
}

/// Concatenates blocks back into a plane and crops the padding; exact inverse
/// of partition.
inline Plane reassemble(const BlockArray& blocks) {
    const BlockGrid& g = blocks.grid;
    const int n = g.block_size;
    Plane out(g.true_width, g.true_height);
    for (int by = 0; by < g.blocks_y; ++by) {
        for (int bx = 0; bx < g.blocks_x; ++bx) {
            const double* blk = blocks.block(by * g.blocks_x + bx);
            for (int y = 0; y < n; ++y) {
                const int py = by * n + y;
                if (py >= g.true_height) break;
                for (int x = 0; x < n; ++x) {
                    const int px = bx * n + x;
                    if (px >= g.true_width) break;
                    out.at(px, py) = blk[y * n + x];
                }
            }
        }
    }
    return out;
}

/// Orthonormal 2D DCT over N x N blocks via the precomputed basis matrix:
/// forward is D * X * D^T, inverse is D^T * Y * D. With this scaling a
/// constant block c transforms to DC = N*c and Parseval holds exactly.
/// Instances carry scratch space: one transform per thread.
class Dct2d {
public:
    explicit Dct2d(int n) : n_(n) {
        if (!valid_block_size(n))
            throw std::invalid_argument("block size must be 8, 16 or 32");
        basis_.resize(static_cast<std::size_t>(n) * n);
        tmp_.resize(static_cast<std::size_t>(n) * n);
        const double a0 = std::sqrt(1.0 / n);
        const double a = std::sqrt(2.0 / n);
        for (int i = 0; i < n; ++i)
            for (int x = 0; x < n; ++x)
                basis_[i * n + x] = (i == 0 ? a0 : a) *
                                    std::cos((2.0 * x + 1.0) * i * std::numbers::pi / (2.0 * n));
    }

    int block_size() const { return n_; }

    /// Raster-order samples in, raster-order frequency coefficients out.
    void forward(const double* samples, double* coeffs) const {
        multiply_left(samples);  // tmp = D * X
        // coeffs = tmp * D^T
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                double acc = 0.0;
                for (int y = 0; y < n_; ++y) acc += tmp_[i * n_ + y] * basis_[j * n_ + y];
                coeffs[i * n_ + j] = acc;
            }
        }
    }

    void inverse(const double* coeffs, double* samples) const {
        // tmp = D^T * Y
        for (int x = 0; x < n_; ++x) {
            for (int j = 0; j < n_; ++j) {
                double acc = 0.0;
                for (int i = 0; i < n_; ++i) acc += basis_[i * n_ + x] * coeffs[i * n_ + j];
                tmp_[x * n_ + j] = acc;
            }
        }
        // samples = tmp * D
        for (int x = 0; x < n_; ++x) {
            for (int y = 0; y < n_; ++y) {
                double acc = 0.0;
                for (int j = 0; j < n_; ++j) acc += tmp_[x * n_ + j] * basis_[j * n_ + y];
                samples[x * n_ + y] = acc;
            }
        }
    }

private:
    void multiply_left(const double* x) const {
        for (int i = 0; i < n_; ++i) {
            for (int y = 0; y < n_; ++y) {
                double acc = 0.0;
                for (int t = 0; t < n_; ++t) acc += basis_[i * n_ + t] * x[t * n_ + y];
                tmp_[i * n_ + y] = acc;
            }
        }
    }

    int n_;
    std::vector<double> basis_;           // basis_[i*n + x] = alpha(i) * cos((2x+1) i pi / 2n)
    mutable std::vector<double> tmp_;
};

/// Anti-diagonal traversal starting (0,0),(0,1),(1,0),(2,0),(1,1),(0,2),...
/// Returns zz where zz[k] is the raster index of the k-th scanned position.
inline std::vector<int> zigzag(int n) {
    if (n < 1)
        throw std::invalid_argument("zigzag: n must be >= 1");
    std::vector<int> zz;
    zz.reserve(static_cast<std::size_t>(n) * n);
    for (int s = 0; s <= 2 * (n - 1); ++s) {
        if (s % 2 == 0) {
            // upward: row decreasing
            int row = std::min(s, n - 1);
            int col = s - row;
            for (; row >= 0 && col < n; --row, ++col) zz.push_back(row * n + col);
        } else {
            // downward: row increasing
            int col = std::min(s, n - 1);
            int row = s - col;
            for (; col >= 0 && row < n; --col, ++row) zz.push_back(row * n + col);
        }
    }
    return zz;
}

/// inv[raster_index] = zigzag position of that coefficient.
inline std::vector<int> inverse_zigzag(int n) {
    const std::vector<int> zz = zigzag(n);
    std::vector<int> inv(zz.size());
    for (std::size_t k = 0; k < zz.size(); ++k) inv[zz[k]] = static_cast<int>(k);
    return inv;
}

}  // namespace edc
