#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace edc {

/// 8-bit interleaved RGB raster, row-major. The external unit of work.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // length = 3*width*height, R,G,B order

    RgbImage() = default;
    RgbImage(int w, int h) : width(w), height(h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("RgbImage: dimensions must be >= 1");
        data.assign(static_cast<std::size_t>(3) * w * h, 0);
    }

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

    std::uint8_t& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::uint8_t at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }

    bool valid() const {
        return width >= 1 && height >= 1 &&
               data.size() == static_cast<std::size_t>(3) * width * height;
    }

    bool operator==(const RgbImage& o) const {
        return width == o.width && height == o.height && data == o.data;
    }
};

/// Real-valued 2D sample array, row-major. Y/Cb/Cr each live in one.
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<double> samples;  // length = width*height

    Plane() = default;
    Plane(int w, int h) : width(w), height(h), samples(static_cast<std::size_t>(w) * h, 0.0) {}

    double& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }

    /// Clamped access, replicating the nearest edge sample outside the plane.
    double at_clamped(int x, int y) const {
        if (x < 0) x = 0;
        if (x >= width) x = width - 1;
        if (y < 0) y = 0;
        if (y >= height) y = height - 1;
        return at(x, y);
    }

    std::size_t size() const { return samples.size(); }
};

}  // namespace edc
