#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <vector>

namespace dpd {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

// Little-endian scalar encoding, used by both the TCP wire format and the
// value codecs so encoded bytes are identical across hosts.

inline void put_u32(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

inline void put_u64(Bytes& out, std::uint64_t v) {
    put_u32(out, static_cast<std::uint32_t>(v));
    put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

inline std::uint32_t read_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) |
           static_cast<std::uint32_t>(p[1]) << 8 |
           static_cast<std::uint32_t>(p[2]) << 16 |
           static_cast<std::uint32_t>(p[3]) << 24;
}

inline std::uint64_t read_u64(const std::uint8_t* p) {
    return static_cast<std::uint64_t>(read_u32(p)) |
           static_cast<std::uint64_t>(read_u32(p + 4)) << 32;
}

// Sequential reader over an encoded buffer. Decoders consume from the front
// and throw on truncated input.
class ByteReader {
public:
    explicit ByteReader(BytesView data) : data_(data) {}

    std::uint32_t take_u32() {
        require(4);
        std::uint32_t v = read_u32(data_.data() + pos_);
        pos_ += 4;
        return v;
    }

    std::uint64_t take_u64() {
        require(8);
        std::uint64_t v = read_u64(data_.data() + pos_);
        pos_ += 8;
        return v;
    }

    BytesView take(std::size_t n) {
        require(n);
        BytesView v = data_.subspan(pos_, n);
        pos_ += n;
        return v;
    }

    std::size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }

private:
    void require(std::size_t n) const {
        if (data_.size() - pos_ < n) {
            throw std::out_of_range("truncated payload");
        }
    }

    BytesView data_;
    std::size_t pos_ = 0;
};

}  // namespace dpd
