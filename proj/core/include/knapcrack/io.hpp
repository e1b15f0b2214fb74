#pragma once

#include "knapcrack/bigint.hpp"
#include "knapcrack/bits.hpp"
#include "knapcrack/hwang.hpp"
#include "knapcrack/merkle_hellman.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knapcrack::io {

inline constexpr std::string_view kKeyMagic = "knapcrack-key v1";
inline constexpr std::string_view kEnvelopeMagic = "knapcrack-ct v1";
inline constexpr std::string_view kReportMagic = "knapcrack-report v1";
inline constexpr std::string_view kExperimentMagic = "knapcrack-experiment v1";

/*
 * On-disk key material.  The text format is line oriented with decimal
 * integers; the exact grammar lives in docs/FORMATS.md.  Public files
 * carry only scheme, shape and the `a` lines, so handing one to an attack
 * command cannot leak trapdoor data.
 */
struct KeyMaterial {
    std::string scheme;  // "mh" or "hwang"
    std::size_t n = 0;
    unsigned gap_bits = 0;
    std::optional<hwang::Params> hwang_params;
    std::vector<BigInt> a;

    struct PrivatePart {
        std::vector<BigInt> b;
        BigInt p, w, w_inv;
    };
    std::optional<PrivatePart> priv;
};

std::string serialize_key(const KeyMaterial& key, bool include_private);
KeyMaterial parse_key(std::string_view text);

std::string serialize_envelope(const std::string& scheme, const hwang::Envelope& env);
std::pair<std::string, hwang::Envelope> parse_envelope(std::string_view text);

/* SHA-256 of the serialized public part, lowercase hex. */
std::string fingerprint_hex(std::string_view public_serialization);

KeyMaterial key_material_from_mh(const MhPrivateKey& priv, const PublicKnapsack& pub,
                                 unsigned gap_bits);
KeyMaterial key_material_from_hwang(const hwang::PrivateKey& priv, const hwang::PublicKey& pub);

/* Throw std::invalid_argument when the material does not fit the scheme. */
MhPrivateKey mh_private_from_material(const KeyMaterial& key);
hwang::PrivateKey hwang_private_from_material(const KeyMaterial& key);
hwang::PublicKey hwang_public_from_material(const KeyMaterial& key);

/* Rational of the form "num/den" with den > 0, e.g. "99/100". */
BigRat parse_rational(std::string_view text);
std::string format_rational(const BigRat& q);

std::string read_text_file(const std::filesystem::path& path);
Bytes read_binary_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);
void write_binary_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace knapcrack::io
