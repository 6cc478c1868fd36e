#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "edc/bitio.hpp"
#include "edc/dct.hpp"
#include "edc/huffman.hpp"
#include "edc/quant.hpp"
#include "edc/scheme.hpp"

namespace edc {

/// Fixed-size stream header. All multi-byte integers little-endian.
struct StreamHeader {
    int block_size = 8;
    Scheme scheme = Scheme::M3;
    int quality = 50;
    int width = 0;
    int height = 0;
    float mean_r = 0.0f, mean_g = 0.0f, mean_b = 0.0f;
    float sigma = 1.4f, canny_low = 0.1f, canny_high = 0.3f;
    int min_edge_pixels = 1;
    int blocks_x = 0;
    int blocks_y = 0;

    BlockGrid grid() const { return BlockGrid::make(block_size, width, height); }
};

/// The serialized bitstream: header, classification bitmap, four canonical
/// Huffman tables (DC/AC for luma and chroma) and one entropy payload per
/// plane. Its byte length is the compressed size that bpp measures.
struct CompressedImage {
    std::vector<std::uint8_t> bytes;

    std::size_t size_bits() const { return bytes.size() * 8; }
};

namespace entropy {

inline constexpr char kMagic[4] = {'E', 'D', 'C', '1'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kFixedHeaderBytes = 42;
inline constexpr int kEob = 0x00;  // end-of-block
inline constexpr int kZrl = 0xF0;  // run of 16 zeros

/// JPEG size category: 0 for 0, otherwise the bit length of |v|.
inline int magnitude_size(std::int64_t v) {
    std::uint64_t a = static_cast<std::uint64_t>(v < 0 ? -v : v);
    int size = 0;
    while (a != 0) {
        ++size;
        a >>= 1;
    }
    return size;
}

/// Amplitude bits: positive values verbatim, negative values as value-1 in
/// `size` bits (one's-complement fold).
inline std::uint32_t amplitude_bits(std::int32_t v, int size) {
    const std::uint32_t mask = (size >= 32) ? 0xFFFFFFFFu : ((1u << size) - 1u);
    const std::int64_t folded = (v < 0) ? static_cast<std::int64_t>(v) - 1 : v;
    return static_cast<std::uint32_t>(folded) & mask;
}

inline std::int32_t amplitude_decode(std::uint32_t bits, int size) {
    if (size == 0) return 0;
    if (bits < (1u << (size - 1)))
        return static_cast<std::int32_t>(bits) - static_cast<std::int32_t>((1u << size) - 1u);
    return static_cast<std::int32_t>(bits);
}

namespace detail {

struct PlaneSymbolSink {
    // histogram pass
    std::array<std::uint64_t, 256>* dc_hist = nullptr;
    std::array<std::uint64_t, 256>* ac_hist = nullptr;
    // emission pass
    const HuffmanEncoder* dc_enc = nullptr;
    const HuffmanEncoder* ac_enc = nullptr;
    BitWriter* bw = nullptr;

    void dc(int symbol, std::uint32_t bits, int nbits) {
        if (dc_hist) (*dc_hist)[static_cast<std::size_t>(symbol)]++;
        if (dc_enc) {
            dc_enc->emit(*bw, symbol);
            if (nbits > 0) bw->put(bits, nbits);
        }
    }
    void ac(int symbol, std::uint32_t bits, int nbits) {
        if (ac_hist) (*ac_hist)[static_cast<std::size_t>(symbol)]++;
        if (ac_enc) {
            ac_enc->emit(*bw, symbol);
            if (nbits > 0) bw->put(bits, nbits);
        }
    }
};

// DC deltas (first block predicted from 0) followed, for edge blocks only,
// by JPEG-style (run,size) AC symbols terminated by EOB. Runs longer than 15
// are split with ZRL escapes.
inline void walk_plane(const std::vector<QuantizedBlock>& blocks, const ClassificationMap& map,
                       PlaneSymbolSink& sink) {
    std::int64_t pred = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const QuantizedBlock& qb = blocks[b];
        const std::int64_t delta = qb.values[0] - pred;
        pred = qb.values[0];
        const int dsize = magnitude_size(delta);
        if (dsize > 16)
            throw BitstreamError(BitstreamError::Kind::AmplitudeOverflow, 0,
                                 "dc delta exceeds 16-bit amplitude");
        sink.dc(dsize, amplitude_bits(static_cast<std::int32_t>(delta), dsize), dsize);

        if (!map.is_edge(static_cast<int>(b))) continue;

        int run = 0;
        for (std::size_t k = 1; k < qb.values.size(); ++k) {
            const std::int32_t v = qb.values[k];
            if (v == 0) {
                ++run;
                continue;
            }
            while (run > 15) {
                sink.ac(kZrl, 0, 0);
                run -= 16;
            }
            const int size = magnitude_size(v);
            if (size > 15)
                throw BitstreamError(BitstreamError::Kind::AmplitudeOverflow, 0,
                                     "ac coefficient exceeds 15-bit amplitude");
            sink.ac((run << 4) | size, amplitude_bits(v, size), size);
            run = 0;
        }
        sink.ac(kEob, 0, 0);
    }
}

inline std::vector<std::uint8_t> pack_bitmap(const ClassificationMap& map) {
    const int nblocks = map.block_count();
    std::vector<std::uint8_t> out((static_cast<std::size_t>(nblocks) + 7) / 8, 0);
    for (int i = 0; i < nblocks; ++i)
        if (map.is_edge(i)) out[static_cast<std::size_t>(i) / 8] |= 0x80u >> (i % 8);
    return out;
}

inline void write_table(ByteWriter& w, const HuffmanTable& t) {
    for (int l = 0; l < 16; ++l) w.u8(t.counts[l]);
    for (auto s : t.symbols) w.u8(s);
}

inline HuffmanTable read_table(ByteReader& r) {
    HuffmanTable t;
    std::size_t total = 0;
    for (int l = 0; l < 16; ++l) {
        t.counts[l] = r.u8();
        total += t.counts[l];
    }
    const std::uint8_t* syms = r.raw(total);
    t.symbols.assign(syms, syms + total);
    return t;
}

}  // namespace detail

/// Serializes quantized-and-retained blocks into the bitstream. Symbol
/// histograms are gathered first so the four tables are optimal for this
/// image; the tables' cost is part of the stream.
inline CompressedImage encode(const std::array<std::vector<QuantizedBlock>, 3>& planes,
                              const ClassificationMap& map, const StreamHeader& header) {
    const BlockGrid grid = header.grid();
    if (grid.blocks_x != header.blocks_x || grid.blocks_y != header.blocks_y)
        throw std::invalid_argument("encode: header block grid inconsistent with dimensions");
    if (map.blocks_x != grid.blocks_x || map.blocks_y != grid.blocks_y)
        throw std::invalid_argument("encode: classification map does not match grid");
    for (const auto& plane : planes) {
        if (static_cast<int>(plane.size()) != grid.block_count())
            throw std::invalid_argument("encode: plane block count does not match grid");
        for (int b = 0; b < grid.block_count(); ++b) {
            const QuantizedBlock& qb = plane[static_cast<std::size_t>(b)];
            if (qb.n != grid.block_size ||
                qb.values.size() != static_cast<std::size_t>(grid.block_size) * grid.block_size)
                throw std::invalid_argument("encode: block shape does not match grid");
            if (!map.is_edge(b))
                for (std::size_t k = 1; k < qb.values.size(); ++k)
                    if (qb.values[k] != 0)
                        throw std::invalid_argument("encode: non-edge block carries AC values");
        }
    }

    std::array<std::uint64_t, 256> dc_luma_hist{}, ac_luma_hist{}, dc_chroma_hist{},
        ac_chroma_hist{};
    for (int p = 0; p < 3; ++p) {
        detail::PlaneSymbolSink sink;
        sink.dc_hist = (p == 0) ? &dc_luma_hist : &dc_chroma_hist;
        sink.ac_hist = (p == 0) ? &ac_luma_hist : &ac_chroma_hist;
        detail::walk_plane(planes[p], map, sink);
    }

    const HuffmanTable dc_luma = build_huffman_table(dc_luma_hist);
    const HuffmanTable ac_luma = build_huffman_table(ac_luma_hist);
    const HuffmanTable dc_chroma = build_huffman_table(dc_chroma_hist);
    const HuffmanTable ac_chroma = build_huffman_table(ac_chroma_hist);
    const HuffmanEncoder dc_luma_enc(dc_luma), ac_luma_enc(ac_luma);
    const HuffmanEncoder dc_chroma_enc(dc_chroma), ac_chroma_enc(ac_chroma);

    ByteWriter w;
    for (char c : kMagic) w.u8(static_cast<std::uint8_t>(c));
    w.u8(kVersion);
    w.u8(static_cast<std::uint8_t>(header.block_size));
    w.u8(static_cast<std::uint8_t>(header.scheme));
    w.u8(static_cast<std::uint8_t>(header.quality));
    w.u16(static_cast<std::uint16_t>(header.width));
    w.u16(static_cast<std::uint16_t>(header.height));
    w.f32(header.mean_r);
    w.f32(header.mean_g);
    w.f32(header.mean_b);
    w.f32(header.sigma);
    w.f32(header.canny_low);
    w.f32(header.canny_high);
    w.u16(static_cast<std::uint16_t>(header.min_edge_pixels));
    w.u16(static_cast<std::uint16_t>(header.blocks_x));
    w.u16(static_cast<std::uint16_t>(header.blocks_y));
    w.raw(detail::pack_bitmap(map));
    detail::write_table(w, dc_luma);
    detail::write_table(w, ac_luma);
    detail::write_table(w, dc_chroma);
    detail::write_table(w, ac_chroma);

    for (int p = 0; p < 3; ++p) {
        detail::PlaneSymbolSink sink;
        BitWriter bw;
        sink.dc_enc = (p == 0) ? &dc_luma_enc : &dc_chroma_enc;
        sink.ac_enc = (p == 0) ? &ac_luma_enc : &ac_chroma_enc;
        sink.bw = &bw;
        detail::walk_plane(planes[p], map, sink);
        bw.align();
        const std::vector<std::uint8_t> payload = bw.take();
        w.u32(static_cast<std::uint32_t>(payload.size()));
        w.raw(payload);
    }

    return CompressedImage{w.take()};
}

struct DecodedStream {
    StreamHeader header;
    ClassificationMap map;
    std::array<std::vector<QuantizedBlock>, 3> planes;
};

/// Header fields only; validates magic, version and grid consistency.
inline StreamHeader parse_header(const std::vector<std::uint8_t>& bytes) {
    ByteReader r(bytes.data(), bytes.size());
    for (char c : kMagic)
        if (r.u8() != static_cast<std::uint8_t>(c))
            throw BitstreamError(BitstreamError::Kind::BadMagic, 0, "bad magic");
    const std::uint8_t version = r.u8();
    if (version != kVersion)
        throw BitstreamError(BitstreamError::Kind::BadHeader, 32,
                             "unsupported version " + std::to_string(version));
    StreamHeader h;
    h.block_size = r.u8();
    const std::uint8_t scheme = r.u8();
    h.quality = r.u8();
    h.width = r.u16();
    h.height = r.u16();
    h.mean_r = r.f32();
    h.mean_g = r.f32();
    h.mean_b = r.f32();
    h.sigma = r.f32();
    h.canny_low = r.f32();
    h.canny_high = r.f32();
    h.min_edge_pixels = r.u16();
    h.blocks_x = r.u16();
    h.blocks_y = r.u16();

    if (!valid_block_size(h.block_size))
        throw BitstreamError(BitstreamError::Kind::BadHeader, 5 * 8,
                             "invalid block size " + std::to_string(h.block_size));
    if (scheme < 1 || scheme > 3)
        throw BitstreamError(BitstreamError::Kind::BadHeader, 6 * 8,
                             "invalid scheme " + std::to_string(scheme));
    h.scheme = static_cast<Scheme>(scheme);
    if (h.quality < 1 || h.quality > 100)
        throw BitstreamError(BitstreamError::Kind::BadHeader, 7 * 8,
                             "invalid quality " + std::to_string(h.quality));
    if (h.width == 0 || h.height == 0)
        throw BitstreamError(BitstreamError::Kind::BadHeader, 8 * 8, "zero image dimension");
    const BlockGrid grid = BlockGrid::make(h.block_size, h.width, h.height);
    if (grid.blocks_x != h.blocks_x || grid.blocks_y != h.blocks_y)
        throw BitstreamError(BitstreamError::Kind::BadHeader, 38 * 8,
                             "block grid inconsistent with dimensions");
    return h;
}

/// Exact inverse of encode. Every failure names the offending bit offset.
inline DecodedStream decode(const CompressedImage& cs) {
    const std::vector<std::uint8_t>& bytes = cs.bytes;
    DecodedStream out;
    out.header = parse_header(bytes);
    const BlockGrid grid = out.header.grid();
    const int nblocks = grid.block_count();
    const int n = grid.block_size;
    const int coeff_count = n * n;

    ByteReader r(bytes.data(), bytes.size());
    r.raw(kFixedHeaderBytes);  // already parsed

    const std::size_t bitmap_len = (static_cast<std::size_t>(nblocks) + 7) / 8;
    const std::uint8_t* bitmap = r.raw(bitmap_len);
    out.map = ClassificationMap(grid.blocks_x, grid.blocks_y);
    for (int i = 0; i < nblocks; ++i)
        out.map.set(i, (bitmap[static_cast<std::size_t>(i) / 8] >> (7 - i % 8)) & 1);

    std::array<HuffmanDecoder, 4> decoders;
    for (int t = 0; t < 4; ++t) {
        const std::size_t table_off = r.position() * 8;
        decoders[t] = HuffmanDecoder(detail::read_table(r), table_off);
    }
    const HuffmanDecoder& dc_luma = decoders[0];
    const HuffmanDecoder& ac_luma = decoders[1];
    const HuffmanDecoder& dc_chroma = decoders[2];
    const HuffmanDecoder& ac_chroma = decoders[3];

    for (int p = 0; p < 3; ++p) {
        const std::uint32_t payload_len = r.u32();
        const std::size_t payload_off = r.position();
        const std::uint8_t* payload = r.raw(payload_len);
        BitReader br(payload, payload_len, payload_off * 8);
        const HuffmanDecoder& dc_dec = (p == 0) ? dc_luma : dc_chroma;
        const HuffmanDecoder& ac_dec = (p == 0) ? ac_luma : ac_chroma;

        out.planes[p].resize(static_cast<std::size_t>(nblocks));
        std::int64_t pred = 0;
        for (int b = 0; b < nblocks; ++b) {
            QuantizedBlock& qb = out.planes[p][static_cast<std::size_t>(b)];
            qb.n = n;
            qb.values.assign(static_cast<std::size_t>(coeff_count), 0);

            const int dsize = dc_dec.decode(br);
            if (dsize > 16)
                throw BitstreamError(BitstreamError::Kind::AmplitudeOverflow, br.bit_offset(),
                                     "dc amplitude size " + std::to_string(dsize));
            pred += amplitude_decode(br.get(dsize), dsize);
            if (pred < INT32_MIN || pred > INT32_MAX)
                throw BitstreamError(BitstreamError::Kind::AmplitudeOverflow, br.bit_offset(),
                                     "dc accumulator out of range");
            qb.values[0] = static_cast<std::int32_t>(pred);

            if (!out.map.is_edge(b)) continue;

            int pos = 1;
            for (;;) {
                const std::size_t sym_off = br.bit_offset();
                const int sym = ac_dec.decode(br);
                if (sym == kEob) break;
                const int run = sym >> 4;
                const int size = sym & 0xF;
                if (size == 0) {
                    if (sym != kZrl)
                        throw BitstreamError(BitstreamError::Kind::InvalidCode, sym_off,
                                             "invalid zero-size ac symbol");
                    if (pos + 16 > coeff_count)
                        throw BitstreamError(BitstreamError::Kind::RunPastBlockEnd, sym_off,
                                             "zero run past block end");
                    pos += 16;
                    continue;
                }
                if (pos + run >= coeff_count)
                    throw BitstreamError(BitstreamError::Kind::RunPastBlockEnd, sym_off,
                                         "coefficient past block end");
                pos += run;
                qb.values[static_cast<std::size_t>(pos)] = amplitude_decode(br.get(size), size);
                ++pos;
            }
        }
    }
    return out;
}

}  // namespace entropy
}  // namespace edc
