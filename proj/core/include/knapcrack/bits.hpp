#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace knapcrack {

/* A subset-selection vector; every entry is 0 or 1. */
using BitVector = std::vector<std::uint8_t>;
using Bytes = std::vector<std::uint8_t>;

/* MSB-first expansion: bit 0 of the result is the top bit of byte 0. */
BitVector bytes_to_bits(std::span<const std::uint8_t> bytes);

/* Packs bits MSB-first; a trailing partial byte is zero-filled. */
Bytes bits_to_bytes(std::span<const std::uint8_t> bits);

/* Splits into fixed-size chunks, zero-padding the last one. */
std::vector<BitVector> split_into_blocks(const BitVector& bits, std::size_t block_len);

}  // namespace knapcrack
