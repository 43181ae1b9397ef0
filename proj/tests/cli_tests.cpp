#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(IGP2H10_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    CmdResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) res.out += buf.data();
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string data_path(const std::string& rel) { return std::string(IGP2H10_DATA_DIR) + "/" + rel; }

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "igp2h10_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("validate-group subcommand") {
    auto ok = run_cli("validate-group " + data_path("groups/C2.grp"));
    REQUIRE(ok.exit_code == 0);
    REQUIRE(ok.out.find("valid: group C2 of order 2") != std::string::npos);

    fs::path bad = scratch_dir() / "bad.grp";
    std::ofstream(bad) << "group bad order 2\n1 2\n2 2\n";
    auto rej = run_cli("validate-group " + bad.string());
    REQUIRE(rej.exit_code == 1);
    REQUIRE(rej.out.find("invalid") != std::string::npos);

    fs::path garbled = scratch_dir() / "garbled.grp";
    std::ofstream(garbled) << "not a group file\n";
    REQUIRE(run_cli("validate-group " + garbled.string()).exit_code == 2);
}

TEST_CASE("encode igp over F5 is deterministic and brute-force solvable") {
    fs::path out1 = scratch_dir() / "c2_f5_a.dio";
    fs::path out2 = scratch_dir() / "c2_f5_b.dio";
    auto r1 = run_cli("encode --problem igp --ring \"Fp p=5\" --output " + out1.string() + " " +
                      data_path("groups/C2.grp"));
    REQUIRE(r1.exit_code == 0);
    auto r2 = run_cli("encode --problem igp --ring \"Fp p=5\" --output " + out2.string() + " " +
                      data_path("groups/C2.grp"));
    REQUIRE(r2.exit_code == 0);
    REQUIRE(slurp(out1) == slurp(out2));

    auto brute = run_cli("brute-force " + out1.string());
    REQUIRE(brute.exit_code == 0);
    REQUIRE(brute.out.find("status: solvable-with-witness") != std::string::npos);
    REQUIRE(brute.out.find("search-space: 78125") != std::string::npos); // 5^7
}

TEST_CASE("encode igp over Q for C1 is the trivially solvable degree-1 system") {
    auto res = run_cli("encode --problem igp --ring Q " + data_path("groups/C1.grp"));
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.out.find("var a[0][0] poly-coefficient") != std::string::npos);
    REQUIRE(res.out.find("pred irreducible d=1 vars=a[0][0]") != std::string::npos);
    REQUIRE(res.out.find("eq ") == std::string::npos); // no equations at all
}

TEST_CASE("encode subgroup with the Lagrange filter emits the sentinel") {
    auto res = run_cli("encode --problem subgroup --ring Q " + data_path("groups/C4.grp") + " " +
                       data_path("groups/C3.grp"));
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.out.find("eq 1\n") != std::string::npos);
}

TEST_CASE("verify subcommand distinguishes accept, reject, coverage and parse errors") {
    fs::path sys = scratch_dir() / "c2_q.dio";
    REQUIRE(run_cli("encode --problem igp --ring Q --output " + sys.string() + " " +
                    data_path("groups/C2.grp"))
                .exit_code == 0);

    auto accepted = run_cli("verify " + sys.string() + " " + data_path("witnesses/c2_q.wit"));
    REQUIRE(accepted.exit_code == 0);
    REQUIRE(accepted.out.find("accepted") != std::string::npos);

    // same shape but a reducible polynomial: rejected with the predicate flagged
    fs::path badwit = scratch_dir() / "c2_bad.wit";
    std::ofstream(badwit) << "witness v1\na[0][0] = -4/1\na[1][0] = 0/1\nb[2][0][0] = 0/1\n"
                             "b[2][1][0] = -1/1\nt = 1/1\nw[0] = 0/1\nw[1] = 1/2\n";
    auto rejected = run_cli("verify " + sys.string() + " " + badwit.string());
    REQUIRE(rejected.exit_code == 1);
    REQUIRE(rejected.out.find("reducible over Q") != std::string::npos);

    fs::path shortwit = scratch_dir() / "c2_short.wit";
    std::ofstream(shortwit) << "witness v1\na[0][0] = -2/1\n";
    REQUIRE(run_cli("verify " + sys.string() + " " + shortwit.string()).exit_code == 4);

    fs::path notasys = scratch_dir() / "nota.dio";
    std::ofstream(notasys) << "hello\n";
    REQUIRE(run_cli("verify " + notasys.string() + " " + data_path("witnesses/c2_q.wit")).exit_code == 2);
}

TEST_CASE("single-equation mode appends the folded polynomial") {
    auto res = run_cli("encode --problem igp --ring Q --single-equation --splice-predicates " +
                       data_path("groups/C2.grp"));
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.out.find("provenance galois-set group-table diseq-encode splice conjoin-single") !=
            std::string::npos);
    // the nonzero predicate was spliced away; irreducibility stays as a side condition
    REQUIRE(res.out.find("pred nonzero") == std::string::npos);
    REQUIRE(res.out.find("pred irreducible d=2") != std::string::npos);
}

TEST_CASE("cap and parse failures use the documented exit codes") {
    REQUIRE(run_cli("encode --problem subgroup --ring \"Fp p=5\" " + data_path("groups/A4.grp") + " " +
                    data_path("groups/D6.grp"))
                .exit_code == 3);
    REQUIRE(run_cli("encode --problem igp --ring \"Fp p=6\" " + data_path("groups/C2.grp")).exit_code == 2);
    REQUIRE(run_cli("encode --problem automorphism --ring \"Fp p=5\" --degree 3 " +
                    data_path("groups/C2.grp"))
                .exit_code == 4); // |H| does not divide n
    REQUIRE(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("automorphism encode via the CLI") {
    auto res = run_cli("encode --problem automorphism --ring \"Fp p=5\" --degree 2 " +
                       data_path("groups/C2.grp"));
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.out.find("provenance galois-set group-table automorphism-branches diseq-encode") !=
            std::string::npos);
}

TEST_CASE("demo subcommand passes end to end") {
    auto res = run_cli("demo --data " + std::string(IGP2H10_DATA_DIR));
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.out.find("FAIL") == std::string::npos);
    REQUIRE(res.out.find("demo: all scenarios passed") != std::string::npos);
}
