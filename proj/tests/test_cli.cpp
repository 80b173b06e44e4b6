#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pfa/cli.hpp"
#include "pfa/io.hpp"

using namespace pfa;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"pfacrypt"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int rc = cli_main(int(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool exists(const std::string& path) {
    std::ifstream in(path);
    return in.good();
}

const std::string kDir = "/tmp/pfa_cli_test_";

}  // namespace

TEST_CASE("keygen, encrypt, decrypt round trip") {
    std::string pub = kDir + "k.pub", priv = kDir + "k.priv",
                bits = kDir + "msg.txt", cipher = kDir + "c.pfa",
                plain = kDir + "out.txt";
    std::ofstream(bits) << "01\n";

    auto kg = run_cli({"keygen", "--states", "6", "--word-len", "7", "--seed",
                       "9", "--pub", pub, "--priv", priv});
    CHECK(kg.exit_code == 0);
    CHECK(exists(pub));
    CHECK(exists(priv));

    auto en = run_cli({"encrypt", "--pub", pub, "--in", bits, "--seed", "4",
                       "--noise", "1..2", "--out", cipher});
    CHECK(en.exit_code == 0);
    CHECK(exists(cipher));

    auto de = run_cli({"decrypt", "--cipher", cipher, "--priv", priv, "--out",
                       plain});
    CHECK(de.exit_code == 0);
    CHECK(slurp(plain) == "01\n");

    SUBCASE("extended mode round trips too") {
        auto ex = run_cli({"encrypt", "--pub", pub, "--in", bits, "--seed",
                           "5", "--extended", "--clusters", "2",
                           "--cluster-size", "2..4", "--extra-states", "1..2",
                           "--out", cipher});
        CHECK(ex.exit_code == 0);
        auto dx = run_cli({"decrypt", "--cipher", cipher, "--priv", priv,
                           "--out", plain});
        CHECK(dx.exit_code == 0);
        CHECK(slurp(plain) == "01\n");
    }
    SUBCASE("a truncated private word fails and writes nothing") {
        std::ofstream(priv) << "a\n";
        std::remove(plain.c_str());
        auto bad = run_cli({"decrypt", "--cipher", cipher, "--priv", priv,
                            "--out", plain});
        CHECK(bad.exit_code == 1);
        CHECK_FALSE(exists(plain));
    }
}

TEST_CASE("check prints the landing state") {
    std::string path = kDir + "t1.pfa";
    save_pfa_file(fixtures::t1(), path);

    auto ok = run_cli({"check", "--pfa", path, "--word", "ab"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "2\n");

    auto no = run_cli({"check", "--pfa", path, "--word", "aa"});
    CHECK(no.exit_code == 1);
    CHECK(no.out == "NOT-SYNCHRONIZING\n");
}

TEST_CASE("attack subcommand prints findings and cost") {
    std::string pub = kDir + "t1.pfa", bits = kDir + "m.txt",
                cipher = kDir + "tc.pfa";
    save_pfa_file(fixtures::t1(), pub);
    std::ofstream(bits) << "10\n";
    REQUIRE(run_cli({"encrypt", "--pub", pub, "--in", bits, "--seed", "1",
                     "--out", cipher})
                .exit_code == 0);

    auto word = run_cli({"attack", "--pub", pub, "--cipher", cipher,
                         "--budget", "100000"});
    CHECK(word.exit_code == 0);
    CHECK(word.out.find("decrypting word: ab") != std::string::npos);
    CHECK(word.out.find("plaintext: 10") != std::string::npos);
    CHECK(word.out.find("subsets_visited=") != std::string::npos);

    auto copy = run_cli({"attack", "--pub", pub, "--cipher", cipher,
                         "--budget", "100000", "--mode", "copy"});
    CHECK(copy.exit_code == 0);
    CHECK(copy.out.find("plaintext: 10") != std::string::npos);

    auto tight = run_cli({"attack", "--pub", pub, "--budget", "1"});
    CHECK(tight.exit_code == 1);
    CHECK(tight.out.find("status=budget-exceeded") != std::string::npos);

    auto missing = run_cli({"attack", "--pub", pub, "--budget", "10",
                            "--mode", "copy"});
    CHECK(missing.exit_code == 2);
}

TEST_CASE("inspect reports clusters and writes dot") {
    std::string path = kDir + "anatomy.pfa", dot = kDir + "anatomy.dot";
    save_pfa_file(fixtures::seven_state_cluster(), path);

    auto res = run_cli({"inspect", "--pfa", path, "--clusters", "--dot", dot});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("states 7") != std::string::npos);
    CHECK(res.out.find("center={2,3,4,5}") != std::string::npos);
    CHECK(res.out.find("depth=2") != std::string::npos);
    CHECK(slurp(dot).find("digraph pfa {") != std::string::npos);
}

TEST_CASE("exit codes distinguish parse and domain errors") {
    auto parse = run_cli({"keygen", "--bogus-flag"});
    CHECK(parse.exit_code == 2);

    auto domain = run_cli({"check", "--pfa", kDir + "does_not_exist.pfa",
                           "--word", "ab"});
    CHECK(domain.exit_code == 1);

    auto help = run_cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("keygen") != std::string::npos);
}
