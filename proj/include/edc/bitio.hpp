#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edc {

struct BitstreamError : std::runtime_error {
    enum class Kind {
        BadMagic,
        BadHeader,
        Truncated,
        InvalidCode,
        RunPastBlockEnd,
        AmplitudeOverflow,
        BadTable,
    };
    Kind kind;
    std::size_t bit_offset;  // position in the enclosing byte span, in bits

    BitstreamError(Kind k, std::size_t bit_off, const std::string& msg)
        : std::runtime_error("bitstream: " + msg + " (bit offset " + std::to_string(bit_off) + ")"),
          kind(k),
          bit_offset(bit_off) {}
};

/// Append-only byte buffer with little-endian scalar writers.
class ByteWriter {
public:
    void u8(std::uint8_t v) { bytes_.push_back(v); }
    void u16(std::uint16_t v) {
        bytes_.push_back(static_cast<std::uint8_t>(v & 0xFF));
        bytes_.push_back(static_cast<std::uint8_t>(v >> 8));
    }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
    }
    void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
    void raw(const std::vector<std::uint8_t>& v) { bytes_.insert(bytes_.end(), v.begin(), v.end()); }

    std::vector<std::uint8_t> take() { return std::move(bytes_); }
    std::size_t size() const { return bytes_.size(); }

private:
    std::vector<std::uint8_t> bytes_;
};

/// Little-endian scalar reader over a fixed byte span; every overrun reports
/// the bit offset where the data ran out.
class ByteReader {
public:
    ByteReader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint16_t u16() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
        pos_ += 2;
        return v;
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }
    float f32() { return std::bit_cast<float>(u32()); }

    const std::uint8_t* raw(std::size_t count) {
        need(count);
        const std::uint8_t* p = data_ + pos_;
        pos_ += count;
        return p;
    }

    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return size_ - pos_; }

private:
    void need(std::size_t count) const {
        if (size_ - pos_ < count)
            throw BitstreamError(BitstreamError::Kind::Truncated, pos_ * 8, "stream truncated");
    }

    const std::uint8_t* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
};

/// MSB-first bit packer. align() pads the current byte with 1-bits.
class BitWriter {
public:
    void put(std::uint32_t value, int nbits) {
        for (int i = nbits - 1; i >= 0; --i) put_bit((value >> i) & 1u);
    }

    void put_bit(std::uint32_t bit) {
        cur_ = static_cast<std::uint8_t>((cur_ << 1) | (bit & 1u));
        if (++fill_ == 8) {
            bytes_.push_back(cur_);
            cur_ = 0;
            fill_ = 0;
        }
    }

    void align() {
        while (fill_ != 0) put_bit(1);
    }

    std::size_t bit_count() const { return bytes_.size() * 8 + fill_; }

    /// Byte-aligned contents; call align() first.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint8_t cur_ = 0;
    int fill_ = 0;
};

/// MSB-first bit reader over a byte span. base_bit_offset shifts reported
/// error positions so they refer to the whole file rather than the span.
class BitReader {
public:
    BitReader(const std::uint8_t* data, std::size_t size, std::size_t base_bit_offset = 0)
        : data_(data), size_bits_(size * 8), base_(base_bit_offset) {}

    std::uint32_t get_bit() {
        if (pos_ >= size_bits_)
            throw BitstreamError(BitstreamError::Kind::Truncated, bit_offset(),
                                 "payload truncated");
        const std::uint32_t bit = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return bit;
    }

    std::uint32_t get(int nbits) {
        std::uint32_t v = 0;
        for (int i = 0; i < nbits; ++i) v = (v << 1) | get_bit();
        return v;
    }

    std::size_t bit_offset() const { return base_ + pos_; }
    std::size_t bits_left() const { return size_bits_ - pos_; }

private:
    const std::uint8_t* data_;
    std::size_t size_bits_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

}  // namespace edc
