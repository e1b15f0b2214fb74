/*
 * End-to-end scenarios for the command-line tool.  Takes the binary path
 * as argv[1], drives it through std::system in a scratch directory, and
 * checks exit codes, file outputs and determinism guarantees.
 */

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_binary;
fs::path g_dir;

#define CLI_CHECK(cond)                                                     \
    do {                                                                    \
        if (!(cond)) {                                                      \
            ++g_failures;                                                   \
            std::cerr << "FAILED at line " << __LINE__ << ": " #cond "\n"; \
        }                                                                   \
    } while (0)

struct RunResult {
    int code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const fs::path capture = g_dir / "capture.log";
    const std::string cmd = g_binary + " " + args + " > " + capture.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult res;
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    res.output = buf.str();
    return res;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

std::string q(const fs::path& p) { return p.string(); }

void scenario_keygen_determinism() {
    const auto key1 = g_dir / "det1.key", pub1 = g_dir / "det1.pub";
    const auto key2 = g_dir / "det2.key", pub2 = g_dir / "det2.pub";
    auto r1 = run("keygen --scheme mh --n 8 --seed 4 --gap-bits 8 --key " + q(key1) +
                  " --pub " + q(pub1));
    auto r2 = run("keygen --scheme mh --n 8 --seed 4 --gap-bits 8 --key " + q(key2) +
                  " --pub " + q(pub2));
    CLI_CHECK(r1.code == 0);
    CLI_CHECK(r2.code == 0);
    // Stdout names the output paths, so compare the fingerprint lines.
    auto fingerprint_line = [](const std::string& text) {
        auto pos = text.find("public fingerprint sha256:");
        return pos == std::string::npos ? std::string() : text.substr(pos);
    };
    CLI_CHECK(!fingerprint_line(r1.output).empty());
    CLI_CHECK(fingerprint_line(r1.output) == fingerprint_line(r2.output));
    CLI_CHECK(slurp(key1) == slurp(key2));
    CLI_CHECK(slurp(pub1) == slurp(pub2));
    CLI_CHECK(!slurp(key1).empty());
    // The public file must never contain trapdoor lines.
    CLI_CHECK(slurp(pub1).find("\nb ") == std::string::npos);
    CLI_CHECK(slurp(pub1).find("w_inv") == std::string::npos);
}

void scenario_mh_roundtrip() {
    const auto key = g_dir / "mh.key", pub = g_dir / "mh.pub";
    const auto msg = g_dir / "mh.msg", ct = g_dir / "mh.ct", out = g_dir / "mh.out";
    CLI_CHECK(run("keygen --scheme mh --n 64 --seed 9 --key " + q(key) + " --pub " +
                  q(pub))
                  .code == 0);
    spit(msg, "the quick brown fox jumps over the lazy dog");
    CLI_CHECK(run("encrypt --pub " + q(pub) + " --msg " + q(msg) + " --ct " + q(ct))
                  .code == 0);
    CLI_CHECK(slurp(ct).rfind("knapcrack-ct v1\n", 0) == 0);
    CLI_CHECK(run("decrypt --key " + q(key) + " --ct " + q(ct) + " --out " + q(out))
                  .code == 0);
    CLI_CHECK(slurp(out) == slurp(msg));
}

void scenario_hwang_roundtrip() {
    const auto key = g_dir / "hw.key", pub = g_dir / "hw.pub";
    const auto msg = g_dir / "hw.msg", ct = g_dir / "hw.ct", out = g_dir / "hw.out";
    CLI_CHECK(run("keygen --scheme hwang --subsets 8 --subset-size 5 --select 3 "
                  "--seed 11 --gap-bits 8 --key " +
                  q(key) + " --pub " + q(pub))
                  .code == 0);
    spit(msg, "attack at dawn");
    CLI_CHECK(run("encrypt --pub " + q(pub) + " --msg " + q(msg) + " --ct " + q(ct))
                  .code == 0);
    CLI_CHECK(slurp(ct).find("d_prime ") != std::string::npos);
    CLI_CHECK(run("decrypt --key " + q(key) + " --ct " + q(ct) + " --out " + q(out))
                  .code == 0);
    CLI_CHECK(slurp(out) == "attack at dawn");
}

void scenario_wrong_key_fails_cleanly() {
    const auto key = g_dir / "w1.key", pub = g_dir / "w1.pub";
    const auto key2 = g_dir / "w2.key", pub2 = g_dir / "w2.pub";
    const auto msg = g_dir / "w.msg", ct = g_dir / "w.ct", out = g_dir / "w.out";
    run("keygen --scheme mh --n 16 --seed 1 --key " + q(key) + " --pub " + q(pub));
    run("keygen --scheme mh --n 16 --seed 2 --key " + q(key2) + " --pub " + q(pub2));
    spit(msg, "secret");
    run("encrypt --pub " + q(pub) + " --msg " + q(msg) + " --ct " + q(ct));
    auto r = run("decrypt --key " + q(key2) + " --ct " + q(ct) + " --out " + q(out));
    CLI_CHECK(r.code == 3);
    CLI_CHECK(!fs::exists(out));  // no partial plaintext on failure
}

void scenario_attack_mh() {
    const auto key = g_dir / "atk.key", pub = g_dir / "atk.pub";
    const auto msg = g_dir / "atk.msg", ct = g_dir / "atk.ct";
    const auto out = g_dir / "atk.out", report = g_dir / "atk.report";
    // Seed 8 recovers a wrap-free equivalent key, so every byte decrypts.
    run("keygen --scheme mh --n 8 --seed 8 --gap-bits 8 --key " + q(key) + " --pub " +
        q(pub));
    spit(msg, "attack at dawn");
    run("encrypt --pub " + q(pub) + " --msg " + q(msg) + " --ct " + q(ct));
    auto r = run("attack-mh --pub " + q(pub) + " --ct " + q(ct) + " --out " + q(out) +
                 " --report " + q(report));
    CLI_CHECK(r.code == 0);
    CLI_CHECK(slurp(out) == "attack at dawn");
    const std::string rep = slurp(report);
    CLI_CHECK(rep.rfind("knapcrack-report v1\n", 0) == 0);
    CLI_CHECK(rep.find("u_prime ") != std::string::npos);
    CLI_CHECK(rep.find("p_prime ") != std::string::npos);
    CLI_CHECK(rep.find("superincreasing_when_sorted 1") != std::string::npos);
}

void scenario_attack_hwang() {
    const auto key = g_dir / "ahw.key", pub = g_dir / "ahw.pub";
    const auto msg = g_dir / "ahw.msg", ct = g_dir / "ahw.ct", out = g_dir / "ahw.out";
    run("keygen --scheme hwang --subsets 8 --subset-size 5 --select 3 --seed 3 "
        "--gap-bits 8 --key " +
        q(key) + " --pub " + q(pub));
    spit(msg, "attack at dawn");
    run("encrypt --pub " + q(pub) + " --msg " + q(msg) + " --ct " + q(ct));
    auto r = run("attack-hwang --pub " + q(pub) + " --ct " + q(ct) + " --out " + q(out));
    CLI_CHECK(r.code == 0);
    CLI_CHECK(slurp(out) == "attack at dawn");
}

void scenario_attack_refuses_private_key() {
    const auto key = g_dir / "priv.key", pub = g_dir / "priv.pub";
    const auto msg = g_dir / "priv.msg", ct = g_dir / "priv.ct", out = g_dir / "priv.out";
    run("keygen --scheme mh --n 8 --seed 4 --key " + q(key) + " --pub " + q(pub));
    spit(msg, "x");
    run("encrypt --pub " + q(pub) + " --msg " + q(msg) + " --ct " + q(ct));
    auto r = run("attack-mh --pub " + q(key) + " --ct " + q(ct) + " --out " + q(out));
    CLI_CHECK(r.code == 2);
    CLI_CHECK(!fs::exists(out));
}

void scenario_attack_failure_writes_report() {
    // A key whose elements defeat the lattice heuristics: exit 4, but the
    // report still lands for post-mortem inspection.
    const auto pub = g_dir / "bad.pub", ct = g_dir / "bad.ct";
    const auto out = g_dir / "bad.out", report = g_dir / "bad.report";
    std::string text = "knapcrack-key v1\nscheme mh\nn 8\ngap_bits 8\n";
    for (int i = 1; i <= 8; ++i) text += "a " + std::to_string(i) + "\n";
    text += "end\n";
    spit(pub, text);
    // 1000 exceeds the total key sum, so no selection can ever explain it.
    spit(ct, "knapcrack-ct v1\nscheme mh\nmsg_bits 8\nblock 1000\nend\n");
    auto r = run("attack-mh --pub " + q(pub) + " --ct " + q(ct) + " --out " + q(out) +
                 " --report " + q(report));
    CLI_CHECK(r.code == 4);
    CLI_CHECK(!fs::exists(out));
    CLI_CHECK(fs::exists(report));
    CLI_CHECK(slurp(report).rfind("knapcrack-report v1\n", 0) == 0);
}

void scenario_usage_errors() {
    const auto key = g_dir / "u.key", pub = g_dir / "u.pub";
    const auto msg = g_dir / "u.msg", ct = g_dir / "u.ct";
    // Missing required --seed is a usage error.
    CLI_CHECK(run("keygen --scheme mh --n 8 --key " + q(key) + " --pub " + q(pub))
                  .code == 2);
    // Unknown subcommands and bare invocations too.
    CLI_CHECK(run("frobnicate").code == 2);
    CLI_CHECK(run("").code == 2);
    // Help remains a success.
    CLI_CHECK(run("--help").code == 0);
    CLI_CHECK(run("keygen --help").code == 0);
    // Empty message.
    run("keygen --scheme mh --n 8 --seed 4 --key " + q(key) + " --pub " + q(pub));
    spit(msg, "");
    CLI_CHECK(run("encrypt --pub " + q(pub) + " --msg " + q(msg) + " --ct " + q(ct))
                  .code == 2);
    // Malformed key file.
    const auto broken = g_dir / "broken.key";
    spit(broken, "not a key\n");
    spit(msg, "hi");
    CLI_CHECK(run("encrypt --pub " + q(broken) + " --msg " + q(msg) + " --ct " + q(ct))
                  .code == 2);
    // Scheme mismatch between key and ciphertext.
    const auto hkey = g_dir / "um.key", hpub = g_dir / "um.pub";
    run("keygen --scheme hwang --subsets 8 --subset-size 5 --select 3 --seed 3 "
        "--key " +
        q(hkey) + " --pub " + q(hpub));
    run("encrypt --pub " + q(pub) + " --msg " + q(msg) + " --ct " + q(ct));
    CLI_CHECK(run("decrypt --key " + q(hkey) + " --ct " + q(ct) + " --out " +
                  q(g_dir / "um.out"))
                  .code == 2);
    // Invalid parameter combinations.
    CLI_CHECK(run("keygen --scheme hwang --subsets 8 --subset-size 5 --select 9 "
                  "--seed 3 --key " +
                  q(key) + " --pub " + q(pub))
                  .code == 2);
}

void scenario_experiment_determinism() {
    const auto rep1 = g_dir / "exp1.txt", rep2 = g_dir / "exp2.txt";
    const std::string args =
        "experiment --scheme mh --n 8 --gap-bits 8 --trials 3 --seed 7 --report ";
    auto r1 = run(args + q(rep1));
    auto r2 = run(args + q(rep2));
    CLI_CHECK(r1.code == 0);
    CLI_CHECK(r2.code == 0);
    CLI_CHECK(r1.output == r2.output);
    CLI_CHECK(r1.output.rfind("knapcrack-experiment v1\n", 0) == 0);
    CLI_CHECK(r1.output.find("row n=8") != std::string::npos);
    // Stdout carries only the reproducible rows; timing goes to the file.
    CLI_CHECK(r1.output.find("timing") == std::string::npos);
    CLI_CHECK(slurp(rep1).find("timing ") != std::string::npos);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: test_cli <path-to-knapcrack-binary>\n";
        return 2;
    }
    g_binary = argv[1];
    g_dir = fs::temp_directory_path() / ("knapcrack-cli-" + std::to_string(::getpid()));
    fs::create_directories(g_dir);

    scenario_keygen_determinism();
    scenario_mh_roundtrip();
    scenario_hwang_roundtrip();
    scenario_wrong_key_fails_cleanly();
    scenario_attack_mh();
    scenario_attack_hwang();
    scenario_attack_refuses_private_key();
    scenario_attack_failure_writes_report();
    scenario_usage_errors();
    scenario_experiment_determinism();

    fs::remove_all(g_dir);
    if (g_failures == 0) {
        std::cout << "all cli scenarios passed\n";
        return 0;
    }
    std::cerr << g_failures << " cli check(s) failed\n";
    return 1;
}
