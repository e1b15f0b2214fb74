#include "knapcrack/hwang.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace knapcrack::hwang {

namespace {

std::array<std::uint8_t, 32> sha256_with_counter(std::span<const std::uint8_t> message,
                                                 std::uint32_t counter) {
    std::array<std::uint8_t, 4> be{
        static_cast<std::uint8_t>(counter >> 24), static_cast<std::uint8_t>(counter >> 16),
        static_cast<std::uint8_t>(counter >> 8), static_cast<std::uint8_t>(counter)};
    std::array<std::uint8_t, 32> out{};
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw std::runtime_error("sha256: EVP_MD_CTX_new failed");
    unsigned int len = 0;
    const bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
                    EVP_DigestUpdate(ctx, message.data(), message.size()) == 1 &&
                    EVP_DigestUpdate(ctx, be.data(), be.size()) == 1 &&
                    EVP_DigestFinal_ex(ctx, out.data(), &len) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok || len != 32) throw std::runtime_error("sha256: digest computation failed");
    return out;
}

}  // namespace

BigInt digest_to_dprime(std::span<const std::uint8_t> message, std::size_t g) {
    if (g == 0) throw std::invalid_argument("digest_to_dprime: g must be >= 1");
    std::array<std::uint8_t, 128> concatenated{};
    for (std::uint32_t i = 0; i < 4; ++i) {
        auto part = sha256_with_counter(message, i);
        std::copy(part.begin(), part.end(), concatenated.begin() + 32 * i);
    }
    BigInt digest;
    mpz_import(digest.get_mpz_t(), concatenated.size(), 1, 1, 0, 0, concatenated.data());
    return mod_nonneg(digest, factorial(static_cast<unsigned long>(g)));
}

}  // namespace knapcrack::hwang
