// =========================
// bitstream.hpp
// =========================
//
// BitStream: ordered sequence of bits with byte (de)serialization.
// Packing is MSB-first within each byte; serialization pads the final
// byte with zeros while the true bit length is carried alongside.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace semlink {

class BitStream {
public:
    BitStream() = default;
    explicit BitStream(size_t nbits) : nbits_(nbits), bytes_((nbits + 7) / 8, 0) {}

    static BitStream from_bytes(const std::vector<uint8_t>& bytes, size_t nbits) {
        if (nbits > bytes.size() * 8)
            throw std::invalid_argument("BitStream::from_bytes: length exceeds data");
        BitStream b;
        b.nbits_ = nbits;
        b.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<long>((nbits + 7) / 8));
        // clear pad bits so equality is well-defined
        if (nbits % 8 != 0) b.bytes_.back() &= static_cast<uint8_t>(0xFF << (8 - nbits % 8));
        return b;
    }

    size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    int get(size_t i) const { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1; }

    void set(size_t i, int bit) {
        const uint8_t mask = static_cast<uint8_t>(1u << (7 - (i & 7)));
        if (bit)
            bytes_[i >> 3] |= mask;
        else
            bytes_[i >> 3] &= static_cast<uint8_t>(~mask);
    }

    void push_bit(int bit) {
        if (nbits_ % 8 == 0) bytes_.push_back(0);
        ++nbits_;
        set(nbits_ - 1, bit);
    }

    // Appends the low `n` bits of v, most significant first.
    void push_bits(uint64_t v, int n) {
        for (int i = n - 1; i >= 0; --i) push_bit(static_cast<int>((v >> i) & 1));
    }

    uint64_t read_bits(size_t pos, int n) const {
        uint64_t v = 0;
        for (int i = 0; i < n; ++i) v = (v << 1) | static_cast<uint64_t>(get(pos + i));
        return v;
    }

    void append(const BitStream& other) {
        for (size_t i = 0; i < other.size(); ++i) push_bit(other.get(i));
    }

    BitStream slice(size_t pos, size_t len) const {
        if (pos + len > nbits_) throw std::out_of_range("BitStream::slice");
        BitStream out;
        for (size_t i = 0; i < len; ++i) out.push_bit(get(pos + i));
        return out;
    }

    const std::vector<uint8_t>& bytes() const { return bytes_; }

    bool operator==(const BitStream& o) const = default;

private:
    size_t nbits_ = 0;
    std::vector<uint8_t> bytes_;
};

}  // namespace semlink
