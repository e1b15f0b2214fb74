#include "knapcrack/bits.hpp"

#include <stdexcept>

namespace knapcrack {

BitVector bytes_to_bits(std::span<const std::uint8_t> bytes) {
    BitVector bits;
    bits.reserve(bytes.size() * 8);
    for (std::uint8_t byte : bytes) {
        for (int k = 7; k >= 0; --k) {
            bits.push_back(static_cast<std::uint8_t>((byte >> k) & 1u));
        }
    }
    return bits;
}

Bytes bits_to_bytes(std::span<const std::uint8_t> bits) {
    Bytes out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) throw std::invalid_argument("bits_to_bytes: entries must be 0 or 1");
        if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    }
    return out;
}

std::vector<BitVector> split_into_blocks(const BitVector& bits, std::size_t block_len) {
    if (block_len == 0) throw std::invalid_argument("split_into_blocks: block_len must be >= 1");
    std::vector<BitVector> blocks;
    for (std::size_t off = 0; off < bits.size(); off += block_len) {
        BitVector block(block_len, 0);
        for (std::size_t j = 0; j < block_len && off + j < bits.size(); ++j) {
            block[j] = bits[off + j];
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace knapcrack
