#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "edc/bitstream.hpp"
#include "edc/canny.hpp"
#include "edc/colorspace.hpp"
#include "edc/dct.hpp"
#include "edc/metrics.hpp"
#include "edc/quant.hpp"
#include "edc/scheme.hpp"

namespace edc {

enum class ForceClassification { Auto, AllEdge, AllNonEdge };

struct EncodeConfig {
    int block_size = 8;
    Scheme scheme = Scheme::M3;
    int quality = 50;
    CannyParams canny{};
    int min_edge_pixels = 1;
    ForceClassification force = ForceClassification::Auto;

    void validate() const {
        if (!valid_block_size(block_size))
            throw std::invalid_argument("block size must be 8, 16 or 32");
        if (quality < 1 || quality > 100)
            throw std::invalid_argument("quality must be in [1,100]");
        if (min_edge_pixels < 1)
            throw std::invalid_argument("min_edge_pixels must be >= 1");
        canny.validate();
    }
};

struct EncodeResult {
    CompressedImage stream;
    ClassificationMap map;
    double bpp = 0.0;
    double cr = 0.0;
    double edge_block_pct = 0.0;
};

namespace codec_detail {

inline std::vector<QuantizedBlock> transform_plane(const Plane& p, const Dct2d& dct,
                                                   const QuantMatrix& q,
                                                   const std::vector<int>& zz,
                                                   const ClassificationMap& map, Scheme scheme) {
    const BlockArray blocks = partition(p, dct.block_size());
    const int nblocks = blocks.grid.block_count();
    std::vector<double> coeffs(blocks.samples_per_block());
    std::vector<QuantizedBlock> out;
    out.reserve(static_cast<std::size_t>(nblocks));
    for (int b = 0; b < nblocks; ++b) {
        dct.forward(blocks.block(b), coeffs.data());
        out.push_back(retain(quantize(coeffs.data(), q, zz), map.is_edge(b), scheme));
    }
    return out;
}

}  // namespace codec_detail

/// Full encoder pipeline: mean removal and color transform, edge detection
/// on Y, block classification, per-block DCT + quantization + AC retention,
/// entropy coding into the bitstream.
inline EncodeResult encode_image(const RgbImage& img, const EncodeConfig& cfg) {
    cfg.validate();
    if (!img.valid())
        throw std::invalid_argument("encode_image: invalid image");
    if (img.width > 0xFFFF || img.height > 0xFFFF)
        throw std::invalid_argument("encode_image: dimensions exceed 65535");

    // Means are rounded to f32 before use so the decoder restores exactly
    // what the encoder removed.
    colorspace::ChannelMeans means = colorspace::channel_means(img);
    means.r = static_cast<float>(means.r);
    means.g = static_cast<float>(means.g);
    means.b = static_cast<float>(means.b);
    const YcbcrImage ycc = colorspace::forward_with_means(img, means);

    const BlockGrid grid = BlockGrid::make(cfg.block_size, img.width, img.height);
    ClassificationMap map;
    switch (cfg.force) {
        case ForceClassification::Auto:
            map = classify(canny(ycc.y, cfg.canny), grid, cfg.min_edge_pixels);
            break;
        case ForceClassification::AllEdge:
            map = ClassificationMap(grid.blocks_x, grid.blocks_y);
            for (int i = 0; i < grid.block_count(); ++i) map.set(i, true);
            break;
        case ForceClassification::AllNonEdge:
            map = ClassificationMap(grid.blocks_x, grid.blocks_y);
            break;
    }

    const Dct2d dct(cfg.block_size);
    const std::vector<int> zz = zigzag(cfg.block_size);
    const QuantMatrix q_luma = base_qmatrix(cfg.block_size, QuantClass::Luma, cfg.quality);
    const QuantMatrix q_chroma = base_qmatrix(cfg.block_size, QuantClass::Chroma, cfg.quality);

    std::array<std::vector<QuantizedBlock>, 3> planes;
    planes[0] = codec_detail::transform_plane(ycc.y, dct, q_luma, zz, map, cfg.scheme);
    planes[1] = codec_detail::transform_plane(ycc.cb, dct, q_chroma, zz, map, cfg.scheme);
    planes[2] = codec_detail::transform_plane(ycc.cr, dct, q_chroma, zz, map, cfg.scheme);

    StreamHeader header;
    header.block_size = cfg.block_size;
    header.scheme = cfg.scheme;
    header.quality = cfg.quality;
    header.width = img.width;
    header.height = img.height;
    header.mean_r = static_cast<float>(means.r);
    header.mean_g = static_cast<float>(means.g);
    header.mean_b = static_cast<float>(means.b);
    header.sigma = static_cast<float>(cfg.canny.sigma);
    header.canny_low = static_cast<float>(cfg.canny.low);
    header.canny_high = static_cast<float>(cfg.canny.high);
    header.min_edge_pixels = cfg.min_edge_pixels;
    header.blocks_x = grid.blocks_x;
    header.blocks_y = grid.blocks_y;

    EncodeResult res;
    res.stream = entropy::encode(planes, map, header);
    res.map = map;
    const metrics::RateInfo rate = metrics::rate(res.stream);
    res.bpp = rate.bpp;
    res.cr = rate.cr;
    res.edge_block_pct =
        100.0 * static_cast<double>(map.edge_count()) / static_cast<double>(map.block_count());
    return res;
}

/// Dequantize + inverse DCT for one decoded plane; output cropped to the
/// true dimensions.
inline Plane reconstruct_plane(const std::vector<QuantizedBlock>& blocks, const BlockGrid& grid,
                               const QuantMatrix& q) {
    const Dct2d dct(grid.block_size);
    const std::vector<int> zz = zigzag(grid.block_size);
    BlockArray arr;
    arr.grid = grid;
    arr.data.resize(static_cast<std::size_t>(grid.block_count()) * grid.block_size *
                    grid.block_size);
    std::vector<double> coeffs(arr.samples_per_block());
    for (int b = 0; b < grid.block_count(); ++b) {
        dequantize(blocks[static_cast<std::size_t>(b)], q, zz, coeffs.data());
        dct.inverse(coeffs.data(), arr.block(b));
    }
    return reassemble(arr);
}

inline RgbImage decode_image(const CompressedImage& cs) {
    const entropy::DecodedStream ds = entropy::decode(cs);
    const BlockGrid grid = ds.header.grid();
    const QuantMatrix q_luma = base_qmatrix(grid.block_size, QuantClass::Luma, ds.header.quality);
    const QuantMatrix q_chroma =
        base_qmatrix(grid.block_size, QuantClass::Chroma, ds.header.quality);

    YcbcrImage ycc;
    ycc.y = reconstruct_plane(ds.planes[0], grid, q_luma);
    ycc.cb = reconstruct_plane(ds.planes[1], grid, q_chroma);
    ycc.cr = reconstruct_plane(ds.planes[2], grid, q_chroma);
    ycc.mean_r = ds.header.mean_r;
    ycc.mean_g = ds.header.mean_g;
    ycc.mean_b = ds.header.mean_b;
    return colorspace::inverse(ycc);
}

}  // namespace edc
