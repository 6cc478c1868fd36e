#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "edc/image.hpp"

namespace edc {

struct PpmError : std::runtime_error {
    enum class Kind {
        BadMagic,
        BadHeader,
        UnsupportedMaxval,
        ZeroDimension,
        Truncated,
    };
    Kind kind;
    PpmError(Kind k, const std::string& msg) : std::runtime_error("ppm: " + msg), kind(k) {}
};

namespace detail {

// Header tokens are separated by whitespace; '#' starts a comment running to
// end of line and counts as whitespace.
class PpmTokenizer {
public:
    explicit PpmTokenizer(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    std::string next_token() {
        skip_space_and_comments();
        if (pos_ >= bytes_.size())
            throw PpmError(PpmError::Kind::BadHeader, "unexpected end of header");
        std::string tok;
        while (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#')
            tok.push_back(static_cast<char>(bytes_[pos_++]));
        return tok;
    }

    unsigned next_uint(const char* what) {
        std::string tok = next_token();
        if (tok.empty() || tok.size() > 9 ||
            tok.find_first_not_of("0123456789") != std::string::npos)
            throw PpmError(PpmError::Kind::BadHeader, std::string("bad ") + what + " '" + tok + "'");
        return static_cast<unsigned>(std::stoul(tok));
    }

    // Exactly one whitespace byte separates the maxval from the payload.
    std::size_t payload_offset() {
        if (pos_ >= bytes_.size() || !is_space(bytes_[pos_]))
            throw PpmError(PpmError::Kind::BadHeader, "missing whitespace before payload");
        return pos_ + 1;
    }

private:
    static bool is_space(std::uint8_t c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    }

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (is_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a binary PPM ("P6", maxval 255). Trailing bytes after the pixel
/// payload are ignored.
inline RgbImage read_ppm(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6')
        throw PpmError(PpmError::Kind::BadMagic, "not a P6 file");

    detail::PpmTokenizer tok(bytes);
    std::string magic = tok.next_token();
    if (magic != "P6")
        throw PpmError(PpmError::Kind::BadMagic, "not a P6 file");

    unsigned w = tok.next_uint("width");
    unsigned h = tok.next_uint("height");
    unsigned maxval = tok.next_uint("maxval");
    if (w == 0 || h == 0)
        throw PpmError(PpmError::Kind::ZeroDimension, "zero image dimension");
    if (maxval != 255)
        throw PpmError(PpmError::Kind::UnsupportedMaxval,
                       "unsupported maxval " + std::to_string(maxval));

    std::size_t off = tok.payload_offset();
    std::size_t need = static_cast<std::size_t>(3) * w * h;
    if (bytes.size() - off < need)
        throw PpmError(PpmError::Kind::Truncated,
                       "payload truncated: need " + std::to_string(need) + " bytes, have " +
                           std::to_string(bytes.size() - off));

    RgbImage img(static_cast<int>(w), static_cast<int>(h));
    std::copy(bytes.begin() + off, bytes.begin() + off + need, img.data.begin());
    return img;
}

/// Canonical form: "P6\n<w> <h>\n255\n" then the raw payload.
inline std::vector<std::uint8_t> write_ppm(const RgbImage& img) {
    if (!img.valid())
        throw std::invalid_argument("write_ppm: invalid image");
    std::string header =
        "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + img.data.size());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), img.data.begin(), img.data.end());
    return out;
}

inline std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::ios_base::failure("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    if (f.bad())
        throw std::ios_base::failure("read error on " + path);
    return bytes;
}

inline void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::ios_base::failure("cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f)
        throw std::ios_base::failure("write error on " + path);
}

inline RgbImage load_ppm(const std::string& path) { return read_ppm(read_file(path)); }

inline void save_ppm(const std::string& path, const RgbImage& img) {
    write_file(path, write_ppm(img));
}

}  // namespace edc
