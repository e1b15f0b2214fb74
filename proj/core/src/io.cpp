#include "knapcrack/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace knapcrack::io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("parse error: " + what);
}

/* Splits into lines; rejects anything but "token token ..." structure. */
std::vector<std::vector<std::string>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

BigInt parse_int(const std::string& s) {
    if (s.empty()) malformed("empty integer");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) malformed("bare minus sign");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') malformed("bad integer '" + s + "'");
    }
    return BigInt(s, 10);
}

std::size_t parse_size(const std::string& s) {
    BigInt v = parse_int(s);
    if (v < 0 || !v.fits_ulong_p()) malformed("size out of range");
    return static_cast<std::size_t>(v.get_ui());
}

struct LineReader {
    const std::vector<std::vector<std::string>>& lines;
    std::size_t at = 0;

    const std::vector<std::string>& next(const std::string& expect_head) {
        if (at >= lines.size()) malformed("unexpected end of file, wanted '" + expect_head + "'");
        const auto& line = lines[at++];
        if (line[0] != expect_head) {
            malformed("expected '" + expect_head + "', found '" + line[0] + "'");
        }
        return line;
    }
    bool peek_is(const std::string& head) const {
        return at < lines.size() && lines[at][0] == head;
    }
    const std::string& single_value(const std::string& head) {
        const auto& line = next(head);
        if (line.size() != 2) malformed("'" + head + "' takes exactly one value");
        return line[1];
    }
};

}  // namespace

std::string serialize_key(const KeyMaterial& key, bool include_private) {
    if (key.scheme != "mh" && key.scheme != "hwang") {
        throw std::invalid_argument("serialize_key: unknown scheme " + key.scheme);
    }
    if (include_private && !key.priv) {
        throw std::invalid_argument("serialize_key: no private part available");
    }
    std::ostringstream out;
    out << kKeyMagic << '\n';
    out << "scheme " << key.scheme << '\n';
    if (key.scheme == "hwang") {
        const auto& hp = key.hwang_params;
        if (!hp) throw std::invalid_argument("serialize_key: hwang key lacks shape parameters");
        out << "s " << hp->subsets << '\n';
        out << "g " << hp->subset_size << '\n';
        out << "c " << hp->select << '\n';
    } else {
        out << "n " << key.n << '\n';
    }
    out << "gap_bits " << key.gap_bits << '\n';
    for (const BigInt& ai : key.a) out << "a " << to_dec(ai) << '\n';
    if (include_private) {
        for (const BigInt& bi : key.priv->b) out << "b " << to_dec(bi) << '\n';
        out << "p " << to_dec(key.priv->p) << '\n';
        out << "w " << to_dec(key.priv->w) << '\n';
        out << "w_inv " << to_dec(key.priv->w_inv) << '\n';
    }
    out << "end\n";
    return out.str();
}

KeyMaterial parse_key(std::string_view text) {
    const auto lines = tokenize_lines(text);
    if (lines.empty() || lines[0].size() != 2 ||
        lines[0][0] + " " + lines[0][1] != std::string(kKeyMagic)) {
        malformed("missing key header");
    }
    LineReader rd{lines, 1};
    KeyMaterial key;
    key.scheme = rd.single_value("scheme");
    if (key.scheme == "hwang") {
        hwang::Params hp;
        hp.subsets = parse_size(rd.single_value("s"));
        hp.subset_size = parse_size(rd.single_value("g"));
        hp.select = parse_size(rd.single_value("c"));
        hp.gap_bits = static_cast<unsigned>(parse_size(rd.single_value("gap_bits")));
        hp.validate();
        key.hwang_params = hp;
        key.n = hp.n();
        key.gap_bits = hp.gap_bits;
    } else if (key.scheme == "mh") {
        key.n = parse_size(rd.single_value("n"));
        key.gap_bits = static_cast<unsigned>(parse_size(rd.single_value("gap_bits")));
    } else {
        malformed("unknown scheme '" + key.scheme + "'");
    }
    if (key.n == 0) malformed("key length must be >= 1");
    while (rd.peek_is("a")) key.a.push_back(parse_int(rd.single_value("a")));
    if (key.a.size() != key.n) malformed("public element count does not match key length");
    if (rd.peek_is("b")) {
        KeyMaterial::PrivatePart priv;
        while (rd.peek_is("b")) priv.b.push_back(parse_int(rd.single_value("b")));
        if (priv.b.size() != key.n) malformed("private element count does not match key length");
        priv.p = parse_int(rd.single_value("p"));
        priv.w = parse_int(rd.single_value("w"));
        priv.w_inv = parse_int(rd.single_value("w_inv"));
        key.priv = std::move(priv);
    }
    rd.next("end");
    if (rd.at != lines.size()) malformed("trailing content after end marker");
    return key;
}

std::string serialize_envelope(const std::string& scheme, const hwang::Envelope& env) {
    if (scheme != "mh" && scheme != "hwang") {
        throw std::invalid_argument("serialize_envelope: unknown scheme " + scheme);
    }
    if (scheme == "hwang" && !env.d_prime) {
        throw std::invalid_argument("serialize_envelope: hwang envelope needs d_prime");
    }
    std::ostringstream out;
    out << kEnvelopeMagic << '\n';
    out << "scheme " << scheme << '\n';
    out << "msg_bits " << env.msg_bit_len << '\n';
    if (scheme == "hwang") out << "d_prime " << to_dec(*env.d_prime) << '\n';
    for (const BigInt& c : env.blocks) out << "block " << to_dec(c) << '\n';
    out << "end\n";
    return out.str();
}

std::pair<std::string, hwang::Envelope> parse_envelope(std::string_view text) {
    const auto lines = tokenize_lines(text);
    if (lines.empty() || lines[0].size() != 2 ||
        lines[0][0] + " " + lines[0][1] != std::string(kEnvelopeMagic)) {
        malformed("missing ciphertext header");
    }
    LineReader rd{lines, 1};
    std::string scheme = rd.single_value("scheme");
    if (scheme != "mh" && scheme != "hwang") malformed("unknown scheme '" + scheme + "'");
    hwang::Envelope env;
    BigInt bits = parse_int(rd.single_value("msg_bits"));
    if (bits < 1 || !bits.fits_ulong_p()) malformed("msg_bits out of range");
    env.msg_bit_len = static_cast<std::uint64_t>(bits.get_ui());
    if (scheme == "hwang") env.d_prime = parse_int(rd.single_value("d_prime"));
    while (rd.peek_is("block")) {
        BigInt c = parse_int(rd.single_value("block"));
        if (c < 0) malformed("block values must be non-negative");
        env.blocks.push_back(std::move(c));
    }
    if (env.blocks.empty()) malformed("envelope carries no blocks");
    rd.next("end");
    if (rd.at != lines.size()) malformed("trailing content after end marker");
    return {std::move(scheme), std::move(env)};
}

std::string fingerprint_hex(std::string_view public_serialization) {
    unsigned char md[32];
    unsigned int len = 0;
    if (EVP_Digest(public_serialization.data(), public_serialization.size(), md, &len,
                   EVP_sha256(), nullptr) != 1 ||
        len != 32) {
        throw std::runtime_error("fingerprint: SHA-256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (unsigned char byte : md) {
        out.push_back(hex[byte >> 4]);
        out.push_back(hex[byte & 0xF]);
    }
    return out;
}

KeyMaterial key_material_from_mh(const MhPrivateKey& priv, const PublicKnapsack& pub,
                                 unsigned gap_bits) {
    KeyMaterial key;
    key.scheme = "mh";
    key.n = pub.a.size();
    key.gap_bits = gap_bits;
    key.a = pub.a;
    key.priv = KeyMaterial::PrivatePart{priv.b.elements(), priv.p, priv.w, priv.w_inv};
    return key;
}

KeyMaterial key_material_from_hwang(const hwang::PrivateKey& priv, const hwang::PublicKey& pub) {
    KeyMaterial key;
    key.scheme = "hwang";
    key.n = pub.params.n();
    key.gap_bits = pub.params.gap_bits;
    key.hwang_params = pub.params;
    key.a = pub.a;
    key.priv = KeyMaterial::PrivatePart{priv.b.elements(), priv.p, priv.w, priv.w_inv};
    return key;
}

MhPrivateKey mh_private_from_material(const KeyMaterial& key) {
    if (key.scheme != "mh" || !key.priv) {
        throw std::invalid_argument("key file does not hold a private mh key");
    }
    return make_mh_private_key(SuperincreasingSequence(key.priv->b), key.priv->p, key.priv->w);
}

hwang::PrivateKey hwang_private_from_material(const KeyMaterial& key) {
    if (key.scheme != "hwang" || !key.priv || !key.hwang_params) {
        throw std::invalid_argument("key file does not hold a private hwang key");
    }
    MhPrivateKey mh = make_mh_private_key(SuperincreasingSequence(key.priv->b), key.priv->p,
                                          key.priv->w);
    return hwang::PrivateKey{std::move(mh.b), std::move(mh.p), std::move(mh.w),
                             std::move(mh.w_inv), *key.hwang_params};
}

hwang::PublicKey hwang_public_from_material(const KeyMaterial& key) {
    if (key.scheme != "hwang" || !key.hwang_params) {
        throw std::invalid_argument("key file does not hold a hwang key");
    }
    return hwang::PublicKey{key.a, *key.hwang_params};
}

BigRat parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size()) {
        throw std::invalid_argument("rational must have the form num/den");
    }
    BigInt num = parse_int(std::string(text.substr(0, slash)));
    BigInt den = parse_int(std::string(text.substr(slash + 1)));
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    return make_rat(num, den);
}

std::string format_rational(const BigRat& q) {
    return to_dec(q.get_num()) + "/" + to_dec(q.get_den());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Bytes read_binary_file(const std::filesystem::path& path) {
    std::string text = read_text_file(path);
    return Bytes(text.begin(), text.end());
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + path.string());
    out << content;
    if (!out) throw std::invalid_argument("write failed: " + path.string());
}

void write_binary_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::invalid_argument("write failed: " + path.string());
}

}  // namespace knapcrack::io
