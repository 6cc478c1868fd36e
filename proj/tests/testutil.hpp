#pragma once

// Shared test helpers: deterministic random inputs, independent reference
// implementations used as oracles, and a small synthetic image corpus with
// natural-image-like statistics (smooth regions, hard edges, texture).

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "edc/canny.hpp"
#include "edc/image.hpp"

namespace testutil {

inline std::mt19937 rng(std::uint32_t seed) { return std::mt19937(seed); }

inline edc::RgbImage random_rgb_image(std::mt19937& g, int w, int h) {
    edc::RgbImage img(w, h);
    std::uniform_int_distribution<int> d(0, 255);
    for (auto& b : img.data) b = static_cast<std::uint8_t>(d(g));
    return img;
}

inline edc::Plane random_plane(std::mt19937& g, int w, int h, double lo, double hi) {
    edc::Plane p(w, h);
    std::uniform_real_distribution<double> d(lo, hi);
    for (auto& s : p.samples) s = d(g);
    return p;
}

// ---------------------------------------------------------------------------
// Independent DCT oracle: the definitional quadruple sum, no matrix products.
inline void dct2_reference(const double* x, double* out, int n) {
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double ai = (i == 0) ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
            const double aj = (j == 0) ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
            double acc = 0.0;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    acc += x[u * n + v] * std::cos((2.0 * u + 1.0) * i * pi / (2.0 * n)) *
                           std::cos((2.0 * v + 1.0) * j * pi / (2.0 * n));
            out[i * n + j] = ai * aj * acc;
        }
    }
}

// ---------------------------------------------------------------------------
// Independent Canny reference. Same contract (separable Gaussian of radius
// ceil(3*sigma), 3x3 Sobel, 4-sector suppression keeping ties only on the
// forward side, hysteresis relative to the post-suppression maximum) written
// as one plain function.
inline edc::EdgeMap canny_reference(const edc::Plane& input, const edc::CannyParams& params) {
    const int w = input.width, h = input.height;
    const double pi = 3.14159265358979323846;

    const int radius = static_cast<int>(std::ceil(3.0 * params.sigma));
    std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
    double ksum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[static_cast<std::size_t>(i + radius)] =
            std::exp(-(static_cast<double>(i) * i) / (2.0 * params.sigma * params.sigma));
        ksum += kernel[static_cast<std::size_t>(i + radius)];
    }
    for (auto& k : kernel) k /= ksum;

    auto clampx = [&](int x) { return x < 0 ? 0 : (x >= w ? w - 1 : x); };
    auto clampy = [&](int y) { return y < 0 ? 0 : (y >= h ? h - 1 : y); };

    edc::Plane pass1(w, h), smooth(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int t = -radius; t <= radius; ++t)
                acc += kernel[static_cast<std::size_t>(t + radius)] * input.at(clampx(x + t), y);
            pass1.at(x, y) = acc;
        }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int t = -radius; t <= radius; ++t)
                acc += kernel[static_cast<std::size_t>(t + radius)] * pass1.at(x, clampy(y + t));
            smooth.at(x, y) = acc;
        }

    edc::Plane mag(w, h), dir(w, h);
    const int sx[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
    const int sy[3][3] = {{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}};
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double gx = 0.0, gy = 0.0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const double s = smooth.at(clampx(x + dx), clampy(y + dy));
                    gx += sx[dy + 1][dx + 1] * s;
                    gy += sy[dy + 1][dx + 1] * s;
                }
            mag.at(x, y) = std::sqrt(gx * gx + gy * gy);
            dir.at(x, y) = std::atan2(gy, gx);
        }

    edc::Plane nms(w, h);
    double max_mag = 0.0;
    for (int y = 1; y < h - 1; ++y)
        for (int x = 1; x < w - 1; ++x) {
            double deg = dir.at(x, y) * 180.0 / pi;
            while (deg < 0.0) deg += 180.0;
            while (deg >= 180.0) deg -= 180.0;
            int dx, dy;
            if (deg < 22.5 || deg >= 157.5) {
                dx = 1; dy = 0;
            } else if (deg < 67.5) {
                dx = 1; dy = 1;
            } else if (deg < 112.5) {
                dx = 0; dy = 1;
            } else {
                dx = -1; dy = 1;
            }
            const double m = mag.at(x, y);
            if (m > mag.at(x - dx, y - dy) && m >= mag.at(x + dx, y + dy)) {
                nms.at(x, y) = m;
                if (m > max_mag) max_mag = m;
            }
        }

    edc::EdgeMap edges(w, h);
    if (max_mag <= 0.0) return edges;
    const double tlow = params.low * max_mag;
    const double thigh = params.high * max_mag;

    std::vector<int> state(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::pair<int, int>> queue;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double m = nms.at(x, y);
            if (m <= 0.0 || m < tlow) continue;
            if (m >= thigh) {
                state[static_cast<std::size_t>(y) * w + x] = 2;
                queue.emplace_back(x, y);
            } else {
                state[static_cast<std::size_t>(y) * w + x] = 1;
            }
        }
    while (!queue.empty()) {
        auto [x, y] = queue.back();
        queue.pop_back();
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                const int nx = x + dx, ny = y + dy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                int& s = state[static_cast<std::size_t>(ny) * w + nx];
                if (s == 1) {
                    s = 2;
                    queue.emplace_back(nx, ny);
                }
            }
    }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            edges.set(x, y, state[static_cast<std::size_t>(y) * w + x] == 2);
    return edges;
}

// ---------------------------------------------------------------------------
// Synthetic corpus. Each scene mixes smooth regions, hard edges and texture
// so that block classification has real work to do.

namespace scenes {

inline std::uint8_t clamp255(double v) {
    if (v < 0.0) return 0;
    if (v > 255.0) return 255;
    return static_cast<std::uint8_t>(std::lround(v));
}

/// Deterministic film-grain style noise in [-amplitude, amplitude].
inline double grain(int x, int y, std::uint32_t seed, double amplitude) {
    std::uint32_t h = static_cast<std::uint32_t>(x) * 0x9E3779B1u ^
                      (static_cast<std::uint32_t>(y) + seed) * 0x85EBCA77u;
    h ^= h >> 13;
    h *= 0xC2B2AE35u;
    h ^= h >> 16;
    return amplitude * (static_cast<double>(h & 0xFFFFu) / 32767.5 - 1.0);
}

/// Concentric bright/dark bands on a diagonal gradient background.
inline edc::RgbImage rings(int size = 256) {
    edc::RgbImage img(size, size);
    const double cx = size / 2.0, cy = size / 2.0;
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            const double base = 60.0 + 120.0 * (x + y) / (2.0 * size);
            const double r = std::hypot(x - cx, y - cy);
            double l = base + 16.0 * std::sin(0.6 * x) * std::sin(0.55 * y);
            if (r < size * 0.42) {
                const int band = static_cast<int>(r / 14.0);
                l = (band % 2 == 0) ? 200.0 - band * 6.0 : 70.0 + band * 4.0;
                l += 14.0 * std::sin(0.9 * r) + 8.0 * std::sin(1.7 * x);
            }
            l += grain(x, y, 17, 9.0);
            img.at(x, y, 0) = clamp255(l + 18.0 * std::sin(2.0 * 3.14159 * y / size));
            img.at(x, y, 1) = clamp255(l);
            img.at(x, y, 2) = clamp255(l * 0.85 + 20.0 + grain(x, y, 18, 3.0));
        }
    }
    return img;
}

/// Boxy buildings with window grids against a smooth sky and textured ground.
inline edc::RgbImage town(int size = 256) {
    edc::RgbImage img(size, size);
    struct Box {
        int x0, y0, x1, y1;
        double shade;
    };
    const int horizon = size * 5 / 8;
    const Box boxes[] = {
        {size / 10, size / 3, size / 10 + size / 5, horizon, 95.0},
        {size * 2 / 5, size / 4, size * 2 / 5 + size / 4, horizon, 140.0},
        {size * 7 / 10, size * 2 / 5, size * 7 / 10 + size / 6, horizon, 75.0},
    };
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            double l, chroma_b;
            if (y < horizon) {
                l = 210.0 - 70.0 * y / horizon + grain(x, y, 5, 3.5);  // sky
                chroma_b = 35.0;
            } else {
                // ground: grass-like texture plus grain
                l = 110.0 + 25.0 * std::sin(0.45 * x) * std::sin(0.3 * y) +
                    22.0 * std::sin(1.3 * x + 0.7 * y) + grain(x, y, 6, 14.0);
                chroma_b = -20.0;
            }
            for (const Box& b : boxes) {
                if (x >= b.x0 && x < b.x1 && y >= b.y0 && y < b.y1) {
                    l = b.shade + 13.0 * std::sin(0.9 * (x + y)) + grain(x, y, 7, 10.0);
                    chroma_b = 0.0;
                    const bool wx = ((x - b.x0) / 9) % 2 == 1 && (x - b.x0) % 9 < 5;
                    const bool wy = ((y - b.y0) / 12) % 2 == 1 && (y - b.y0) % 12 < 7;
                    if (wx && wy) l = 215.0 + grain(x, y, 8, 9.0);
                }
            }
            img.at(x, y, 0) = clamp255(l - chroma_b * 0.4 + grain(x, y, 9, 2.5));
            img.at(x, y, 1) = clamp255(l);
            img.at(x, y, 2) = clamp255(l + chroma_b);
        }
    }
    return img;
}

/// Grid of patches alternating flat fills, stripes, gradients and texture.
inline edc::RgbImage patchwork(int size = 256) {
    edc::RgbImage img(size, size);
    const int patch = size / 4;
    std::mt19937 g(4242);
    std::uniform_real_distribution<double> noise(-5.0, 5.0);
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            const int px = x / patch, py = y / patch;
            const int lx = x % patch, ly = y % patch;
            double l;
            switch ((px + 4 * py) % 5) {
                case 0: l = 70.0 + 22.0 * px + 8.0 * py; break;                       // flat
                case 1: l = (lx / 6) % 2 ? 190.0 : 60.0; break;                       // stripes
                case 2: l = 50.0 + 170.0 * lx / patch; break;                         // ramp
                case 3: l = 128.0 + 55.0 * std::sin(0.5 * lx) * std::cos(0.4 * ly); break;
                default: l = 120.0 + 30.0 * std::sin(0.8 * (lx + ly)) + noise(g); break;
            }
            l += grain(x, y, 11, 9.0) + 7.0 * std::sin(1.1 * x) * std::sin(0.9 * y);
            img.at(x, y, 0) = clamp255(l + 12.0 * std::sin(0.05 * x));
            img.at(x, y, 1) = clamp255(l);
            img.at(x, y, 2) = clamp255(l - 10.0 + 8.0 * std::cos(0.04 * y) + grain(x, y, 12, 3.0));
        }
    }
    return img;
}

/// Mostly-smooth scene: gentle sinusoid hills with one sharp disc.
inline edc::RgbImage hills(int size = 256) {
    edc::RgbImage img(size, size);
    const double cx = size * 0.7, cy = size * 0.3;
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            double l = 120.0 + 50.0 * std::sin(2.0 * 3.14159 * x / size) *
                                   std::cos(2.0 * 3.14159 * y / size) +
                       30.0 * std::sin(4.0 * 3.14159 * (x + 2 * y) / (3.0 * size)) +
                       grain(x, y, 23, 8.0) + 9.0 * std::sin(1.2 * x + 0.4 * y);
            if (std::hypot(x - cx, y - cy) < size / 9.0) l = 235.0 + grain(x, y, 24, 5.0);
            img.at(x, y, 0) = clamp255(l * 0.95 + 15.0);
            img.at(x, y, 1) = clamp255(l);
            img.at(x, y, 2) = clamp255(l * 0.8 + 25.0);
        }
    }
    return img;
}

}  // namespace scenes

/// The named bench corpus used by integration and acceptance tests.
inline std::vector<std::pair<std::string, edc::RgbImage>> corpus(int size = 256) {
    return {
        {"hills", scenes::hills(size)},
        {"patchwork", scenes::patchwork(size)},
        {"rings", scenes::rings(size)},
        {"town", scenes::town(size)},
    };
}

}  // namespace testutil
