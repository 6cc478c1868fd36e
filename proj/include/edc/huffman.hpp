#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "edc/bitio.hpp"

namespace edc {

/// Canonical prefix code: how many codes exist of each length 1..16 plus the
/// symbols in code order. This pair fully determines every codeword.
struct HuffmanTable {
    std::array<std::uint8_t, 16> counts{};  // counts[l-1] = number of codes of length l
    std::vector<std::uint8_t> symbols;      // in (length, value) order

    std::size_t symbol_count() const {
        std::size_t n = 0;
        for (auto c : counts) n += c;
        return n;
    }
    bool empty() const { return symbols.empty(); }

    bool operator==(const HuffmanTable& o) const {
        return counts == o.counts && symbols == o.symbols;
    }
};

/// Optimal code lengths for the given symbol histogram, capped at 16 bits.
/// A one-count pseudo-symbol participates in the tree so a lone real symbol
/// still gets a 1-bit code; the pseudo-symbol's code is dropped at the end.
inline HuffmanTable build_huffman_table(const std::array<std::uint64_t, 256>& histogram) {
    std::array<std::uint64_t, 257> freq{};
    for (int i = 0; i < 256; ++i) freq[i] = histogram[i];
    freq[256] = 1;

    std::array<int, 257> codesize{};
    std::array<int, 257> others;
    others.fill(-1);

    for (;;) {
        // two least-frequent live entries; ties resolved toward the larger
        // index so the result does not depend on container iteration quirks
        int c1 = -1, c2 = -1;
        std::uint64_t v = UINT64_MAX;
        for (int i = 0; i <= 256; ++i)
            if (freq[i] != 0 && freq[i] <= v) { v = freq[i]; c1 = i; }
        v = UINT64_MAX;
        for (int i = 0; i <= 256; ++i)
            if (freq[i] != 0 && freq[i] <= v && i != c1) { v = freq[i]; c2 = i; }
        if (c2 < 0) break;

        freq[c1] += freq[c2];
        freq[c2] = 0;
        ++codesize[c1];
        while (others[c1] >= 0) { c1 = others[c1]; ++codesize[c1]; }
        others[c1] = c2;
        ++codesize[c2];
        while (others[c2] >= 0) { c2 = others[c2]; ++codesize[c2]; }
    }

    // with 257 leaves the tree depth is bounded by 256
    std::array<int, 258> bits{};
    for (int i = 0; i <= 256; ++i)
        if (codesize[i] > 0) ++bits[codesize[i]];

    // limit code lengths to 16: repeatedly replace a pair of overlong codes
    // with one code a bit shorter plus a pair one level below some shorter code
    for (int i = 257 - 1; i > 16; --i) {
        while (bits[i] > 0) {
            int j = i - 2;
            while (bits[j] == 0) --j;
            bits[i] -= 2;
            bits[i - 1] += 1;
            bits[j + 1] += 2;
            bits[j] -= 1;
        }
    }
    // the pseudo-symbol owns one code of the longest length; remove it
    int i = 16;
    while (i > 0 && bits[i] == 0) --i;
    if (i > 0) --bits[i];

    HuffmanTable table;
    for (int l = 1; l <= 16; ++l) table.counts[l - 1] = static_cast<std::uint8_t>(bits[l]);
    for (int size = 1; size <= 256; ++size)
        for (int sym = 0; sym <= 255; ++sym)
            if (codesize[sym] == size) table.symbols.push_back(static_cast<std::uint8_t>(sym));
    return table;
}

/// Codeword lookup for the writer side.
class HuffmanEncoder {
public:
    explicit HuffmanEncoder(const HuffmanTable& table) {
        len_.fill(0);
        std::uint32_t code = 0;
        std::size_t k = 0;
        for (int l = 1; l <= 16; ++l) {
            for (int c = 0; c < table.counts[l - 1]; ++c) {
                const std::uint8_t sym = table.symbols.at(k++);
                code_[sym] = code++;
                len_[sym] = l;
            }
            code <<= 1;
        }
    }

    void emit(BitWriter& bw, int symbol) const {
        const int l = len_[static_cast<std::size_t>(symbol)];
        if (l == 0)
            throw std::logic_error("huffman: symbol has no code");
        bw.put(code_[static_cast<std::size_t>(symbol)], l);
    }

    int length(int symbol) const { return len_[static_cast<std::size_t>(symbol)]; }

private:
    std::array<std::uint32_t, 256> code_{};
    std::array<int, 256> len_{};
};

/// Canonical decoder; construction validates the Kraft inequality and the
/// symbol count so a corrupt table is rejected before any payload is read.
class HuffmanDecoder {
public:
    HuffmanDecoder() = default;

    explicit HuffmanDecoder(const HuffmanTable& table, std::size_t table_bit_offset = 0)
        : symbols_(table.symbols) {
        std::uint64_t kraft = 0;  // scaled by 2^16
        std::int64_t code = 0;
        std::size_t k = 0;
        for (int l = 1; l <= 16; ++l) {
            const int count = table.counts[l - 1];
            kraft += static_cast<std::uint64_t>(count) << (16 - l);
            valptr_[l] = k;
            mincode_[l] = code;
            code += count;
            k += count;
            maxcode_[l] = (count > 0) ? code - 1 : -1;
            if (code > (std::int64_t{1} << l))
                throw BitstreamError(BitstreamError::Kind::BadTable, table_bit_offset,
                                     "code space overflow in huffman table");
            code <<= 1;
        }
        if (kraft > (std::uint64_t{1} << 16))
            throw BitstreamError(BitstreamError::Kind::BadTable, table_bit_offset,
                                 "huffman table violates Kraft inequality");
        if (k != symbols_.size())
            throw BitstreamError(BitstreamError::Kind::BadTable, table_bit_offset,
                                 "huffman table symbol count mismatch");
    }

    int decode(BitReader& br) const {
        const std::size_t start = br.bit_offset();
        std::int64_t code = br.get_bit();
        for (int l = 1; l <= 16; ++l) {
            if (maxcode_[l] >= 0 && code <= maxcode_[l])
                return symbols_[valptr_[l] + static_cast<std::size_t>(code - mincode_[l])];
            code = (code << 1) | br.get_bit();
        }
        throw BitstreamError(BitstreamError::Kind::InvalidCode, start,
                             "invalid huffman code");
    }

private:
    std::vector<std::uint8_t> symbols_;
    std::array<std::int64_t, 17> mincode_{};
    std::array<std::int64_t, 17> maxcode_{};
    std::array<std::size_t, 17> valptr_{};
};

}  // namespace edc
