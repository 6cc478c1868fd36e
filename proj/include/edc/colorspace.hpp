#pragma once

#include <array>
#include <cmath>

#include "edc/image.hpp"

namespace edc {

/// Decorrelated image: one plane per component plus the channel means that
/// were removed before the transform. The means travel as side information
/// so the decoder can restore absolute levels exactly.
struct YcbcrImage {
    Plane y, cb, cr;
    double mean_r = 0.0, mean_g = 0.0, mean_b = 0.0;
};

namespace colorspace {

// Forward transform, luminance row normalized so white maps inside range.
inline constexpr std::array<std::array<double, 3>, 3> kForward = {{
    {0.299, 0.587, 0.114},
    {-0.16875, -0.33126, 0.5},
    {0.5, -0.41869, -0.08131},
}};

inline constexpr std::array<std::array<double, 3>, 3> kInverse = {{
    {1.0, 0.0, 1.402},
    {1.0, -0.34413, -0.71414},
    {1.0, 1.772, 0.0},
}};

struct ChannelMeans {
    double r = 0.0, g = 0.0, b = 0.0;
};

inline ChannelMeans channel_means(const RgbImage& img) {
    double sr = 0.0, sg = 0.0, sb = 0.0;
    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        sr += img.data[3 * i + 0];
        sg += img.data[3 * i + 1];
        sb += img.data[3 * i + 2];
    }
    return {sr / static_cast<double>(n), sg / static_cast<double>(n),
            sb / static_cast<double>(n)};
}

/// Mean removal followed by the forward matrix. No rounding, no level shift,
/// no chroma offset; everything stays in double precision.
inline YcbcrImage forward_with_means(const RgbImage& img, const ChannelMeans& m) {
    YcbcrImage out;
    out.y = Plane(img.width, img.height);
    out.cb = Plane(img.width, img.height);
    out.cr = Plane(img.width, img.height);
    out.mean_r = m.r;
    out.mean_g = m.g;
    out.mean_b = m.b;

    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const double r = img.data[3 * i + 0] - m.r;
        const double g = img.data[3 * i + 1] - m.g;
        const double b = img.data[3 * i + 2] - m.b;
        out.y.samples[i] = kForward[0][0] * r + kForward[0][1] * g + kForward[0][2] * b;
        out.cb.samples[i] = kForward[1][0] * r + kForward[1][1] * g + kForward[1][2] * b;
        out.cr.samples[i] = kForward[2][0] * r + kForward[2][1] * g + kForward[2][2] * b;
    }
    return out;
}

inline YcbcrImage forward(const RgbImage& img) {
    return forward_with_means(img, channel_means(img));
}

inline std::uint8_t quantize_sample(double v) {
    // round half away from zero, then clamp to [0,255]
    double r = std::round(v);
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<std::uint8_t>(r);
}

inline RgbImage inverse(const YcbcrImage& img) {
    RgbImage out(img.y.width, img.y.height);
    const std::size_t n = out.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const double y = img.y.samples[i];
        const double cb = img.cb.samples[i];
        const double cr = img.cr.samples[i];
        const double r = kInverse[0][0] * y + kInverse[0][2] * cr + img.mean_r;
        const double g = kInverse[1][0] * y + kInverse[1][1] * cb + kInverse[1][2] * cr + img.mean_g;
        const double b = kInverse[2][0] * y + kInverse[2][1] * cb + img.mean_b;
        out.data[3 * i + 0] = quantize_sample(r);
        out.data[3 * i + 1] = quantize_sample(g);
        out.data[3 * i + 2] = quantize_sample(b);
    }
    return out;
}

}  // namespace colorspace
}  // namespace edc
