// knapcrack: keygen/encrypt/decrypt for two knapsack cryptosystems and the
// lattice attack that breaks them from public data alone.
//
// Exit codes: 0 success, 2 bad parameters or malformed input, 3 decryption
// failure, 4 attack failure, 1 internal error.

#include <knapcrack/attack.hpp>
#include <knapcrack/experiment.hpp>
#include <knapcrack/hwang.hpp>
#include <knapcrack/io.hpp>
#include <knapcrack/merkle_hellman.hpp>
#include <knapcrack/rng.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace knapcrack;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDecryptFailure = 3;
constexpr int kExitAttackFailure = 4;

/* Thrown for anything the user can fix: flags, file contents, scheme mismatches. */
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DecryptFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AttackFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

io::KeyMaterial load_key(const std::string& path) {
    std::string text;
    try {
        text = io::read_text_file(path);
    } catch (const std::exception& e) {
        throw UsageError(std::string("cannot read key file: ") + e.what());
    }
    try {
        return io::parse_key(text);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

io::KeyMaterial load_public_key(const std::string& path) {
    io::KeyMaterial key = load_key(path);
    if (key.priv) {
        throw UsageError(path +
                         ": contains private key material; attacks take the public "
                         "file only (re-run keygen and pass the --pub output)");
    }
    return key;
}

std::pair<std::string, hwang::Envelope> load_envelope(const std::string& path) {
    std::string text;
    try {
        text = io::read_text_file(path);
    } catch (const std::exception& e) {
        throw UsageError(std::string("cannot read ciphertext file: ") + e.what());
    }
    try {
        return io::parse_envelope(text);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Bytes load_message(const std::string& path) {
    Bytes msg;
    try {
        msg = io::read_binary_file(path);
    } catch (const std::exception& e) {
        throw UsageError(std::string("cannot read message file: ") + e.what());
    }
    if (msg.empty()) throw UsageError("message is empty; nothing to encrypt");
    return msg;
}

/* Message bytes -> one subset sum per n-bit block, MSB-first, zero padded. */
hwang::Envelope mh_encrypt_bytes(const PublicKnapsack& pub, const Bytes& msg) {
    hwang::Envelope env;
    env.msg_bit_len = std::uint64_t{8} * msg.size();
    BitVector bits = bytes_to_bits(msg);
    for (const BitVector& block : split_into_blocks(bits, pub.a.size()))
        env.blocks.push_back(mh_encrypt(pub, block));
    return env;
}

Bytes assemble_bits(const std::vector<BitVector>& blocks, std::uint64_t msg_bit_len) {
    BitVector all;
    for (const BitVector& b : blocks) all.insert(all.end(), b.begin(), b.end());
    if (all.size() < msg_bit_len) throw DecryptFailure("short ciphertext");
    all.resize(msg_bit_len);
    return bits_to_bytes(all);
}

struct AttackFlags {
    std::string pub_path;
    std::string ct_path;
    std::string out_path;
    std::string report_path;
    attack::Config cfg;
    std::string delta_text = "99/100";
    std::uint64_t lambda = 1;
};

void add_attack_flags(CLI::App* cmd, AttackFlags& f) {
    cmd->add_option("--pub", f.pub_path, "public key file (public part only)")->required();
    cmd->add_option("--ct", f.ct_path, "ciphertext envelope file")->required();
    cmd->add_option("--out", f.out_path, "recovered plaintext output file");
    cmd->add_option("--report", f.report_path, "attack report output file");
    cmd->add_option("--lattice-dim", f.cfg.t, "public elements in the lattice (3..12)")
        ->capture_default_str();
    cmd->add_option("--delta", f.delta_text, "Lovasz parameter as num/den in (1/4,1)")
        ->capture_default_str();
    cmd->add_option("--lambda", f.lambda, "weight on the denominator coordinate")
        ->capture_default_str();
    cmd->add_option("--max-candidates", f.cfg.max_candidates,
                    "reduced rows examined for denominators")
        ->capture_default_str();
}

void finish_attack_config(AttackFlags& f) {
    try {
        f.cfg.delta = io::parse_rational(f.delta_text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--delta: ") + e.what());
    }
    if (f.lambda < 1) throw UsageError("--lambda must be >= 1");
    f.cfg.lambda_scale = BigInt(static_cast<unsigned long>(f.lambda));
}

std::string render_attack_report(const std::string& scheme, const AttackFlags& f,
                                 std::size_t n, const attack::KeyRecovery& rec,
                                 std::size_t blocks_total, std::size_t blocks_ok,
                                 double elapsed_ms) {
    std::ostringstream out;
    out << io::kReportMagic << '\n';
    out << "scheme " << scheme << '\n';
    out << "n " << n << '\n';
    out << "t " << f.cfg.t << '\n';
    out << "delta " << io::format_rational(f.cfg.delta) << '\n';
    out << "lambda " << to_dec(f.cfg.lambda_scale) << '\n';
    out << "max_candidates " << f.cfg.max_candidates << '\n';
    for (const BigInt& c : rec.candidates) out << "candidate " << to_dec(c) << '\n';
    if (rec.key) {
        out << "accepted_index "
            << (rec.accepted_index == attack::npos ? std::string("none")
                                                   : std::to_string(rec.accepted_index))
            << '\n';
        out << "u_prime " << to_dec(rec.key->u_prime) << '\n';
        out << "p_prime " << to_dec(rec.key->p_prime) << '\n';
        out << "superincreasing_when_sorted "
            << (rec.key->superincreasing_when_sorted ? 1 : 0) << '\n';
    } else {
        out << "accepted_index none\n";
    }
    out << "blocks_total " << blocks_total << '\n';
    out << "blocks_recovered " << blocks_ok << '\n';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", elapsed_ms);
    out << "elapsed_ms " << buf << '\n';
    out << "end\n";
    return out.str();
}

int cmd_keygen(const std::string& scheme, std::uint64_t seed, std::size_t n,
               std::size_t subsets, std::size_t subset_size, std::size_t select,
               unsigned gap_bits, const std::string& key_path, const std::string& pub_path) {
    io::KeyMaterial material;
    if (scheme == "mh") {
        if (n == 0) throw UsageError("--n is required for --scheme mh");
        Rng rng(seed);
        auto [priv, pub] = mh_keygen(n, gap_bits, rng);
        material = io::key_material_from_mh(priv, pub, gap_bits);
    } else {
        if (subsets == 0 || subset_size == 0 || select == 0)
            throw UsageError(
                "--subsets, --subset-size and --select are required for --scheme hwang");
        hwang::Params params{subsets, subset_size, select, gap_bits};
        try {
            params.validate();
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        Rng rng(seed);
        auto [priv, pub] = hwang::keygen(params, rng);
        material = io::key_material_from_hwang(priv, pub);
    }
    std::string public_text = io::serialize_key(material, false);
    io::write_text_file(key_path, io::serialize_key(material, true));
    io::write_text_file(pub_path, public_text);
    std::cout << "wrote " << key_path << " (private) and " << pub_path << " (public)\n";
    std::cout << "public fingerprint sha256:" << io::fingerprint_hex(public_text) << '\n';
    return kExitOk;
}

int cmd_encrypt(const std::string& pub_path, const std::string& msg_path,
                const std::string& ct_path) {
    io::KeyMaterial key = load_key(pub_path);
    Bytes msg = load_message(msg_path);
    hwang::Envelope env;
    if (key.scheme == "mh") {
        PublicKnapsack pub{key.a};
        env = mh_encrypt_bytes(pub, msg);
    } else {
        env = hwang::encrypt(io::hwang_public_from_material(key), msg);
    }
    io::write_text_file(ct_path, io::serialize_envelope(key.scheme, env));
    std::cout << "wrote " << ct_path << " (" << env.blocks.size() << " block"
              << (env.blocks.size() == 1 ? "" : "s") << ", " << env.msg_bit_len
              << " message bits)\n";
    return kExitOk;
}

int cmd_decrypt(const std::string& key_path, const std::string& ct_path,
                const std::string& out_path) {
    io::KeyMaterial key = load_key(key_path);
    if (!key.priv) throw UsageError(key_path + ": no private part; decryption needs --key");
    auto [scheme, env] = load_envelope(ct_path);
    if (scheme != key.scheme)
        throw UsageError("ciphertext scheme '" + scheme + "' does not match key scheme '" +
                         key.scheme + "'");
    Bytes msg;
    if (scheme == "mh") {
        MhPrivateKey priv = io::mh_private_from_material(key);
        std::vector<BitVector> blocks;
        for (const BigInt& c : env.blocks) {
            auto bits = mh_decrypt(priv, c);
            if (!bits) throw DecryptFailure("block does not decrypt under this key");
            blocks.push_back(std::move(*bits));
        }
        msg = assemble_bits(blocks, env.msg_bit_len);
    } else {
        auto out = hwang::decrypt(io::hwang_private_from_material(key), env);
        if (!out) throw DecryptFailure("envelope does not decrypt under this key");
        msg = std::move(*out);
    }
    io::write_binary_file(out_path, msg);
    std::cout << "wrote " << out_path << " (" << msg.size() << " bytes)\n";
    return kExitOk;
}

int cmd_attack_mh(AttackFlags& f) {
    finish_attack_config(f);
    io::KeyMaterial key = load_public_key(f.pub_path);
    if (key.scheme != "mh") throw UsageError(f.pub_path + ": not an mh key");
    auto [scheme, env] = load_envelope(f.ct_path);
    if (scheme != "mh") throw UsageError(f.ct_path + ": not an mh ciphertext");
    if (env.blocks.empty()) throw UsageError(f.ct_path + ": no ciphertext blocks");

    auto t0 = std::chrono::steady_clock::now();
    attack::MhAttackResult res = attack::attack_mh(key.a, env.blocks, f.cfg);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();

    std::size_t ok = 0;
    std::vector<BitVector> blocks;
    bool all = true;
    for (auto& p : res.plaintexts) {
        if (p) {
            ++ok;
            blocks.push_back(*p);
        } else {
            all = false;
        }
    }
    if (!f.report_path.empty())
        io::write_text_file(f.report_path,
                            render_attack_report("mh", f, key.a.size(), res.recovery,
                                                 res.plaintexts.size(), ok, ms));
    std::cout << "candidates " << res.recovery.candidates.size() << ", blocks " << ok << "/"
              << res.plaintexts.size() << ", " << ms << " ms\n";
    if (!all)
        throw AttackFailure("attack did not recover every block (" +
                            std::to_string(ok) + "/" +
                            std::to_string(res.plaintexts.size()) + ")");
    Bytes msg = assemble_bits(blocks, env.msg_bit_len);
    if (!f.out_path.empty()) {
        io::write_binary_file(f.out_path, msg);
        std::cout << "wrote " << f.out_path << " (" << msg.size() << " bytes)\n";
    }
    return kExitOk;
}

int cmd_attack_hwang(AttackFlags& f) {
    finish_attack_config(f);
    io::KeyMaterial key = load_public_key(f.pub_path);
    if (key.scheme != "hwang") throw UsageError(f.pub_path + ": not a hwang key");
    hwang::PublicKey pub = io::hwang_public_from_material(key);
    auto [scheme, env] = load_envelope(f.ct_path);
    if (scheme != "hwang") throw UsageError(f.ct_path + ": not a hwang ciphertext");

    auto t0 = std::chrono::steady_clock::now();
    attack::HwangAttackResult res = attack::attack_hwang(pub, env, f.cfg);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();

    std::size_t total = env.blocks.size();
    std::size_t ok = total - res.blocks_failed;
    if (!f.report_path.empty())
        io::write_text_file(f.report_path, render_attack_report("hwang", f, key.a.size(),
                                                                res.recovery, total, ok, ms));
    std::cout << "candidates " << res.recovery.candidates.size() << ", blocks " << ok << "/"
              << total << ", " << ms << " ms\n";
    if (!res.message)
        throw AttackFailure("attack did not recover the message (" + std::to_string(ok) +
                            "/" + std::to_string(total) + " blocks)");
    if (!f.out_path.empty()) {
        io::write_binary_file(f.out_path, *res.message);
        std::cout << "wrote " << f.out_path << " (" << res.message->size() << " bytes)\n";
    }
    return kExitOk;
}

int cmd_experiment(const std::string& scheme, std::vector<std::size_t> n_values,
                   std::vector<std::string> shapes, std::vector<unsigned> gap_values,
                   std::vector<std::size_t> t_values, std::vector<std::string> delta_texts,
                   std::size_t trials, std::uint64_t seed, const std::string& report_path) {
    experiment::Grid grid;
    grid.scheme = scheme;
    grid.trials = trials;
    grid.master_seed = seed;
    grid.n_values = std::move(n_values);
    grid.gap_bits_values =
        gap_values.empty() ? std::vector<unsigned>{8} : std::move(gap_values);
    grid.t_values = t_values.empty() ? std::vector<std::size_t>{5} : std::move(t_values);
    if (delta_texts.empty()) delta_texts.push_back("99/100");
    for (const std::string& d : delta_texts) {
        try {
            grid.delta_values.push_back(io::parse_rational(d));
        } catch (const std::exception& e) {
            throw UsageError(std::string("--delta: ") + e.what());
        }
    }
    for (const std::string& s : shapes) {
        hwang::Params params;
        if (std::sscanf(s.c_str(), "%zu,%zu,%zu", &params.subsets, &params.subset_size,
                        &params.select) != 3)
            throw UsageError("--shape wants subsets,subset_size,select (e.g. 8,5,3)");
        grid.hwang_shapes.push_back(params);
    }
    if (scheme == "mh" && grid.n_values.empty())
        throw UsageError("--n is required at least once for --scheme mh");
    if (scheme == "hwang" && grid.hwang_shapes.empty())
        throw UsageError("--shape is required at least once for --scheme hwang");

    experiment::Report report;
    try {
        report = experiment::run(grid);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::cout << experiment::serialize_report_rows(grid, report);
    if (!report_path.empty())
        io::write_text_file(report_path, experiment::serialize_report(grid, report));
    if (report.verified_mismatches != 0) {
        std::cerr << "verified_mismatches = " << report.verified_mismatches
                  << " (re-encryption verification accepted a wrong plaintext)\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "knapcrack: Merkle-Hellman and permutation-combination knapsack "
        "cryptosystems, plus the lattice attack that recovers plaintext from "
        "public data alone"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // keygen
    std::string scheme = "mh";
    std::uint64_t seed = 0;
    std::size_t n = 0, subsets = 0, subset_size = 0, select = 0;
    unsigned gap_bits = 0;
    std::string key_path, pub_path, msg_path, ct_path, out_path, report_path;

    CLI::App* keygen = app.add_subcommand("keygen", "generate a key pair deterministically");
    keygen->add_option("--scheme", scheme, "mh or hwang")
        ->required()
        ->check(CLI::IsMember({"mh", "hwang"}));
    keygen->add_option("--seed", seed, "64-bit generator seed")->required();
    keygen->add_option("--n", n, "mh: public key length");
    keygen->add_option("--subsets", subsets, "hwang: number of subsets (s)");
    keygen->add_option("--subset-size", subset_size, "hwang: elements per subset (g)");
    keygen->add_option("--select", select, "hwang: elements chosen per subset (c)");
    keygen->add_option("--gap-bits", gap_bits,
                       "superincreasing gap size (default: mh 8, hwang 20)");
    keygen->add_option("--key", key_path, "private key output file")->required();
    keygen->add_option("--pub", pub_path, "public key output file")->required();

    CLI::App* encrypt = app.add_subcommand("encrypt", "encrypt a message file");
    encrypt->add_option("--pub", pub_path, "key file (public part is used)")->required();
    encrypt->add_option("--msg", msg_path, "message file (raw bytes)")->required();
    encrypt->add_option("--ct", ct_path, "ciphertext envelope output file")->required();

    CLI::App* decrypt = app.add_subcommand("decrypt", "decrypt with the private key");
    decrypt->add_option("--key", key_path, "private key file")->required();
    decrypt->add_option("--ct", ct_path, "ciphertext envelope file")->required();
    decrypt->add_option("--out", out_path, "plaintext output file")->required();

    AttackFlags mh_flags, hwang_flags;
    CLI::App* attack_mh_cmd = app.add_subcommand(
        "attack-mh", "recover an mh plaintext from public key and ciphertext");
    add_attack_flags(attack_mh_cmd, mh_flags);
    CLI::App* attack_hwang_cmd = app.add_subcommand(
        "attack-hwang", "recover a hwang message from public key and envelope");
    add_attack_flags(attack_hwang_cmd, hwang_flags);

    std::vector<std::size_t> exp_n, exp_t;
    std::vector<unsigned> exp_gap;
    std::vector<std::string> exp_shapes, exp_deltas;
    std::size_t exp_trials = 10;
    std::uint64_t exp_seed = 0;
    std::string exp_scheme = "mh";
    CLI::App* experiment_cmd =
        app.add_subcommand("experiment", "seeded attack-success sweep over a parameter grid");
    experiment_cmd->add_option("--scheme", exp_scheme, "mh or hwang")
        ->check(CLI::IsMember({"mh", "hwang"}))
        ->capture_default_str();
    experiment_cmd->add_option("--n", exp_n, "mh key length (repeatable)");
    experiment_cmd->add_option("--shape", exp_shapes,
                               "hwang shape subsets,subset_size,select (repeatable)");
    experiment_cmd->add_option("--gap-bits", exp_gap, "gap sizes (repeatable, default 8)");
    experiment_cmd->add_option("--lattice-dim", exp_t,
                               "lattice dimensions (repeatable, default 5)");
    experiment_cmd->add_option("--delta", exp_deltas,
                               "Lovasz parameters (repeatable, default 99/100)");
    experiment_cmd->add_option("--trials", exp_trials, "trials per grid point")
        ->capture_default_str();
    experiment_cmd->add_option("--seed", exp_seed, "master seed")->required();
    experiment_cmd->add_option("--report", report_path, "report output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Keep --help at exit 0 but fold every real parse failure into the
        // documented usage-error code.
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*keygen) {
            if (gap_bits == 0) gap_bits = scheme == "mh" ? 8 : 20;
            return cmd_keygen(scheme, seed, n, subsets, subset_size, select, gap_bits,
                              key_path, pub_path);
        }
        if (*encrypt) return cmd_encrypt(pub_path, msg_path, ct_path);
        if (*decrypt) return cmd_decrypt(key_path, ct_path, out_path);
        if (*attack_mh_cmd) return cmd_attack_mh(mh_flags);
        if (*attack_hwang_cmd) return cmd_attack_hwang(hwang_flags);
        if (*experiment_cmd)
            return cmd_experiment(exp_scheme, exp_n, exp_shapes, exp_gap, exp_t, exp_deltas,
                                  exp_trials, exp_seed, report_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DecryptFailure& e) {
        std::cerr << "decryption failed: " << e.what() << '\n';
        return kExitDecryptFailure;
    } catch (const AttackFailure& e) {
        std::cerr << "attack failed: " << e.what() << '\n';
        return kExitAttackFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
