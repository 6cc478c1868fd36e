#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "edc/image.hpp"

namespace edc {

struct CannyParams {
    double sigma = 1.4;
    double low = 0.1;   // fraction of the post-suppression maximum magnitude
    double high = 0.3;  // ditto; low < high <= 1

    void validate() const {
        if (!(sigma > 0.0))
            throw std::invalid_argument("canny: sigma must be > 0");
        if (!(low > 0.0 && low < high && high <= 1.0))
            throw std::invalid_argument("canny: need 0 < low < high <= 1");
    }
};

/// One boolean per pixel; dimensions match the source plane.
struct EdgeMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    EdgeMap() = default;
    EdgeMap(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

    bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) {
        bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
    }
    std::size_t count() const {
        std::size_t n = 0;
        for (auto b : bits) n += b;
        return n;
    }
    bool operator==(const EdgeMap& o) const {
        return width == o.width && height == o.height && bits == o.bits;
    }
};

namespace canny_detail {

inline std::vector<double> gaussian_kernel(double sigma) {
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        k[i + radius] = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        sum += k[i + radius];
    }
    for (double& w : k) w /= sum;
    return k;
}

}  // namespace canny_detail

/// Separable Gaussian blur, kernel radius ceil(3*sigma), edge-replicated borders.
inline Plane gaussian_smooth(const Plane& p, double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("gaussian_smooth: sigma must be > 0");
    const std::vector<double> k = canny_detail::gaussian_kernel(sigma);
    const int radius = (static_cast<int>(k.size()) - 1) / 2;

    Plane tmp(p.width, p.height);
    for (int y = 0; y < p.height; ++y) {
        for (int x = 0; x < p.width; ++x) {
            double acc = 0.0;
            for (int t = -radius; t <= radius; ++t)
                acc += k[t + radius] * p.at_clamped(x + t, y);
            tmp.at(x, y) = acc;
        }
    }
    Plane out(p.width, p.height);
    for (int y = 0; y < p.height; ++y) {
        for (int x = 0; x < p.width; ++x) {
            double acc = 0.0;
            for (int t = -radius; t <= radius; ++t)
                acc += k[t + radius] * tmp.at_clamped(x, y + t);
            out.at(x, y) = acc;
        }
    }
    return out;
}

struct Gradient {
    Plane gx, gy, mag, dir;  // dir = atan2(gy, gx), radians
};

/// 3x3 Sobel pair with edge-replicated borders.
inline Gradient sobel_gradient(const Plane& p) {
    if (p.width < 3 || p.height < 3)
        throw std::invalid_argument("sobel_gradient: plane must be at least 3x3");
    Gradient g;
    g.gx = Plane(p.width, p.height);
    g.gy = Plane(p.width, p.height);
    g.mag = Plane(p.width, p.height);
    g.dir = Plane(p.width, p.height);
    for (int y = 0; y < p.height; ++y) {
        for (int x = 0; x < p.width; ++x) {
            const double a = p.at_clamped(x - 1, y - 1), b = p.at_clamped(x, y - 1),
                         c = p.at_clamped(x + 1, y - 1);
            const double d = p.at_clamped(x - 1, y), f = p.at_clamped(x + 1, y);
            const double h = p.at_clamped(x - 1, y + 1), i = p.at_clamped(x, y + 1),
                         j = p.at_clamped(x + 1, y + 1);
            const double gx = (c + 2.0 * f + j) - (a + 2.0 * d + h);
            const double gy = (h + 2.0 * i + j) - (a + 2.0 * b + c);
            g.gx.at(x, y) = gx;
            g.gy.at(x, y) = gy;
            g.mag.at(x, y) = std::sqrt(gx * gx + gy * gy);
            g.dir.at(x, y) = std::atan2(gy, gx);
        }
    }
    return g;
}

namespace canny_detail {

// Gradient direction quantized to 4 sectors; returns the step to the
// "forward" neighbor along the gradient. Sector boundaries at 22.5 degrees.
inline void sector_offset(double dir_radians, int& dx, int& dy) {
    double deg = dir_radians * (180.0 / std::numbers::pi);
    deg = std::fmod(deg + 360.0, 180.0);  // fold to [0,180)
    if (deg < 22.5 || deg >= 157.5) {
        dx = 1; dy = 0;
    } else if (deg < 67.5) {
        dx = 1; dy = 1;
    } else if (deg < 112.5) {
        dx = 0; dy = 1;
    } else {
        dx = -1; dy = 1;
    }
}

}  // namespace canny_detail

/// Intermediate products of the edge detector, exposed so the suppression and
/// hysteresis invariants can be checked from outside.
struct CannyTrace {
    Plane smoothed;
    Gradient gradient;
    Plane nms_mag;  // magnitude where the pixel survived suppression, else 0
    double threshold_low = 0.0;
    double threshold_high = 0.0;
    EdgeMap edges;
};

// Pipeline: smooth -> gradient -> non-maximum suppression -> hysteresis.
//
// Suppression keeps a pixel when its magnitude strictly exceeds the backward
// neighbor and is >= the forward neighbor along the quantized gradient
// direction, so a run of equal magnitudes keeps exactly one pixel and a
// symmetric two-sided tie at a step keeps one column, not two. Pixels on the
// outermost image border never survive. Hysteresis thresholds are fractions
// of the maximum surviving magnitude; a pixel is an edge iff it survives,
// reaches low*M and 8-connects through such pixels to one reaching high*M.
inline CannyTrace canny_trace(const Plane& p, const CannyParams& params) {
    params.validate();
    CannyTrace t;
    t.smoothed = gaussian_smooth(p, params.sigma);
    t.gradient = sobel_gradient(t.smoothed);

    const int w = p.width, h = p.height;
    t.nms_mag = Plane(w, h);
    double max_mag = 0.0;
    for (int y = 1; y < h - 1; ++y) {
        for (int x = 1; x < w - 1; ++x) {
            const double m = t.gradient.mag.at(x, y);
            int dx = 0, dy = 0;
            canny_detail::sector_offset(t.gradient.dir.at(x, y), dx, dy);
            const double back = t.gradient.mag.at(x - dx, y - dy);
            const double fwd = t.gradient.mag.at(x + dx, y + dy);
            if (m > back && m >= fwd) {
                t.nms_mag.at(x, y) = m;
                if (m > max_mag) max_mag = m;
            }
        }
    }

    t.edges = EdgeMap(w, h);
    if (max_mag <= 0.0) return t;  // flat image: nothing survives

    t.threshold_low = params.low * max_mag;
    t.threshold_high = params.high * max_mag;

    // 0 = not a candidate, 1 = weak candidate, 2 = confirmed edge
    std::vector<std::uint8_t> state(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::size_t> stack;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double m = t.nms_mag.at(x, y);
            if (m <= 0.0 || m < t.threshold_low) continue;
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (m >= t.threshold_high) {
                state[idx] = 2;
                stack.push_back(idx);
            } else {
                state[idx] = 1;
            }
        }
    }
    while (!stack.empty()) {
        const std::size_t idx = stack.back();
        stack.pop_back();
        const int x = static_cast<int>(idx % w), y = static_cast<int>(idx / w);
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const int nx = x + dx, ny = y + dy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                const std::size_t nidx = static_cast<std::size_t>(ny) * w + nx;
                if (state[nidx] == 1) {
                    state[nidx] = 2;
                    stack.push_back(nidx);
                }
            }
        }
    }
    for (std::size_t i = 0; i < state.size(); ++i)
        t.edges.bits[i] = (state[i] == 2) ? 1 : 0;
    return t;
}

inline EdgeMap canny(const Plane& p, const CannyParams& params) {
    return canny_trace(p, params).edges;
}

}  // namespace edc
