#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run(const std::string& args) {
    std::string cmd = std::string(ISOGR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse_ok(const CliRun& r) {
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("schema"), "isogr-exc/1");
    return j;
}

}  // namespace

TEST(Cli, ContextJson) {
    auto j = parse_ok(run("ctx --series C --n 3 --k 2"));
    EXPECT_EQ(j["command"], "ctx");
    EXPECT_EQ(j["result"]["r"], "5");
    EXPECT_EQ(j["result"]["dim"], 7);
    EXPECT_EQ(j["result"]["xi"], nlohmann::json::array({"1", "1", "0"}));
}

TEST(Cli, CountTotals) {
    CliRun r = run("--format tsv count --series C --n 3 --k 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("total\t\t12"), std::string::npos);
    EXPECT_NE(r.out.find("expected\t\t12"), std::string::npos);
}

TEST(Cli, BlocksModes) {
    auto small = parse_ok(run("blocks --series C --n 3 --k 3 --j 1"));
    auto big = parse_ok(run("blocks --series C --n 3 --k 3 --j 1 --mode big"));
    EXPECT_NE(small.dump(), big.dump());
    EXPECT_NE(big.dump().find("\"4\",\"1\",\"1\""), std::string::npos);
}

TEST(Cli, CohomologyOfNegativeLineBundle) {
    auto j = parse_ok(run("bbw --series C --n 1 --k 1 --weight -2"));
    EXPECT_NE(j.dump().find("\"degree\":1"), std::string::npos);
}

TEST(Cli, EquivariantExt) {
    auto j = parse_ok(run("ext --series C --n 4 --k 3 --from 4,1,1,0 --to 1,1,1,1 --equivariant"));
    EXPECT_EQ(j["result"]["graded_dimension"], nlohmann::json({{"2", 1}}));
    auto k = parse_ok(run("ext --series C --n 4 --k 3 --from 4,1,1,0 --to 1,1,1,1"));
    EXPECT_EQ(k["result"]["graded_dimension"], nlohmann::json({{"2", 1}}));
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(run("verify counts --series B --n 3 --k 3").code, 0);
    EXPECT_EQ(run("verify all --series C --n 3 --k 3").code, 0);
    EXPECT_EQ(run("verify path-closure --series C --n 4 --k 3").code, 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("ctx --series C --n 3").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("ctx --series D --n 3 --k 2").code, 2);
    EXPECT_EQ(run("bbw --series C --n 3 --k 2 --weight 1,2").code, 2);
    EXPECT_EQ(run("--format xml ctx --series C --n 3 --k 2").code, 2);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
    CliRun a = run("verify all --series C --n 3 --k 2");
    CliRun b = run("--threads 3 verify all --series C --n 3 --k 2");
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExperimentalTypeA) {
    auto j = parse_ok(run("typea --k 2 --l 2 --all-curves"));
    EXPECT_EQ(j["result"]["experimental"], true);
    EXPECT_EQ(j["result"]["curves"].size(), 3u);
    EXPECT_EQ(run("typea --k 2 --l 2 --steps L").code, 2);
}

TEST(Cli, SigmaIdentity) {
    auto j = parse_ok(run("sigma --n 3 --a 1 --kappa 1 --sigma 1,1 --tau 1,1 --N 2"));
    EXPECT_EQ(j["result"]["reports"][0]["pass"], true);
}
