#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "edc/bitstream.hpp"
#include "edc/colorspace.hpp"
#include "edc/image.hpp"

namespace edc {
namespace metrics {

inline double mse(const Plane& a, const Plane& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("mse: dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double d = a.samples[i] - b.samples[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.samples.size());
}

/// 10*log10(255^2*3 / (MSE(Y)+MSE(Cb)+MSE(Cr))). Both images must carry the
/// same channel means for the comparison to be meaningful. Zero total MSE
/// reports +infinity.
inline double psnr(const YcbcrImage& orig, const YcbcrImage& recon) {
    const double total = mse(orig.y, recon.y) + mse(orig.cb, recon.cb) + mse(orig.cr, recon.cr);
    if (total == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 * 3.0 / total);
}

/// Context-only companion metric computed on the raw RGB samples.
inline double psnr_rgb(const RgbImage& a, const RgbImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("psnr_rgb: dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = static_cast<double>(a.data[i]) - static_cast<double>(b.data[i]);
        acc += d * d;
    }
    const double total = 3.0 * acc / static_cast<double>(a.data.size());
    if (total == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 * 3.0 / total);
}

struct RateInfo {
    double bpp = 0.0;
    double cr = 0.0;
};

/// bpp over the true pixel count; cr = 24/bpp against the 24-bit source.
inline RateInfo rate(const CompressedImage& cs) {
    const StreamHeader h = entropy::parse_header(cs.bytes);
    const double pixels = static_cast<double>(h.width) * h.height;
    RateInfo r;
    r.bpp = static_cast<double>(cs.size_bits()) / pixels;
    r.cr = 24.0 / r.bpp;
    return r;
}

struct QualityReport {
    double psnr_db = 0.0;
    double bpp = 0.0;
    double cr = 0.0;
    double mse_y = 0.0, mse_cb = 0.0, mse_cr = 0.0;
    std::uint64_t compressed_bits = 0;
    std::uint64_t pixels = 0;
};

/// Full rate/quality comparison. Both images are taken to YCbCr with the
/// original's channel means so mean drift in the reconstruction is charged
/// to the error.
inline QualityReport compare(const RgbImage& orig, const RgbImage& recon,
                             const CompressedImage& cs) {
    if (orig.width != recon.width || orig.height != recon.height)
        throw std::invalid_argument("compare: dimension mismatch");
    const colorspace::ChannelMeans m = colorspace::channel_means(orig);
    const YcbcrImage a = colorspace::forward_with_means(orig, m);
    const YcbcrImage b = colorspace::forward_with_means(recon, m);

    QualityReport q;
    q.mse_y = mse(a.y, b.y);
    q.mse_cb = mse(a.cb, b.cb);
    q.mse_cr = mse(a.cr, b.cr);
    const double total = q.mse_y + q.mse_cb + q.mse_cr;
    q.psnr_db = (total == 0.0) ? std::numeric_limits<double>::infinity()
                               : 10.0 * std::log10(255.0 * 255.0 * 3.0 / total);
    q.compressed_bits = cs.size_bits();
    q.pixels = static_cast<std::uint64_t>(orig.width) * orig.height;
    q.bpp = static_cast<double>(q.compressed_bits) / static_cast<double>(q.pixels);
    q.cr = 24.0 / q.bpp;
    return q;
}

}  // namespace metrics
}  // namespace edc
