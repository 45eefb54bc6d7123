#include <gtest/gtest.h>

#include <sstream>

#include "latcheq/cli.hpp"

using namespace latcheq;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(args, in, out, err);
    return {status, out.str(), err.str()};
}

const char* kRS = "S = 0, 1@1, 0@2\nR = 0, 1@4, 0@6\n";
const char* kJK = "J = 0\nK = 0, 1@1.5, 0@2\nC = 0, 1@1, 0@3\n";

TEST(Cli, SolveRSWithInit) {
    const auto r = run({"solve", "--circuit", "rs", "--init", "Q=0"}, kRS);
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "interval   S  R  Q\n"
                     "(-inf, 1)  0  0  0\n"
                     "[1, 2)     1  0  1\n"
                     "[2, 4)     0  0  1\n"
                     "[4, 6)     0  1  0\n"
                     "[6, inf)   0  0  0\n");
}

TEST(Cli, SolveWithoutInitPrintsBothSolutions) {
    const auto r = run({"solve", "--circuit", "rs"}, kRS);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "# 2 solutions, primes mark higher initial states; they coincide from t=1\n"
                     "interval   S  R  Q  Q'\n"
                     "(-inf, 1)  0  0  0  1\n"
                     "[1, 2)     1  0  1  1\n"
                     "[2, 4)     0  0  1  1\n"
                     "[4, 6)     0  1  0  0\n"
                     "[6, inf)   0  0  0  0\n");
}

TEST(Cli, SolveMasterSlaveFormats) {
    const auto text = run({"solve", "--circuit", "jk", "--init", "P=1", "--init", "Q=1"}, kJK);
    EXPECT_EQ(text.status, 0) << text.err;
    EXPECT_NE(text.out.find("[3, inf)   0  0  0  0  0"), std::string::npos) << text.out;

    const auto dump = run({"solve", "--circuit", "jk", "--init", "P=1", "--format", "dump"}, kJK);
    EXPECT_EQ(dump.status, 0) << dump.err;
    EXPECT_NE(dump.out.find("$comment scale_factor 2 $end"), std::string::npos);

    const auto json = run({"solve", "--circuit", "jk", "--format", "structured"}, kJK);
    EXPECT_EQ(json.status, 0) << json.err;
    EXPECT_NE(json.out.find("\"Q'\""), std::string::npos); // two consistent initial states
    EXPECT_NE(json.out.find("\"kind\": \"jk\""), std::string::npos);
}

TEST(Cli, CompareJKVariants) {
    const auto r = run({"compare", "--circuit", "jk", "--against", "jk-d", "--init", "P=1", "--init", "Q=1"}, kJK);
    EXPECT_EQ(r.status, 1) << r.err;
    EXPECT_EQ(r.out, "Q differs from t=3\n");

    const auto same = run({"compare", "--circuit", "jk", "--against", "jk", "--init", "P=0"}, kJK);
    EXPECT_EQ(same.status, 0) << same.err;
    EXPECT_EQ(same.out, "equal\n");

    const auto ambiguous = run({"compare", "--circuit", "jk", "--against", "jk-d"}, kJK);
    EXPECT_EQ(ambiguous.status, 2);
}

TEST(Cli, Verify) {
    const std::string good = "D = 0, 1@2, 0@6\nC = 0, 1@1, 0@3, 1@5, 0@7\nQ = 0, 1@2, 0@6\n";
    const auto ok = run({"verify", "--circuit", "d-latch"}, good);
    EXPECT_EQ(ok.status, 0);
    EXPECT_EQ(ok.out, "ok\n");

    const std::string tampered = "D = 0, 1@2, 0@6\nC = 0, 1@1, 0@3, 1@5, 0@7\nQ = 0, 1@2, 0@4\n";
    const auto bad = run({"verify", "--circuit", "d-latch"}, tampered);
    EXPECT_EQ(bad.status, 1);
    EXPECT_EQ(bad.out, "violation at t=4\n");
}

TEST(Cli, EnumerateInit) {
    EXPECT_EQ(run({"enumerate-init", "--circuit", "rs"}, kRS).out, "Q=0\nQ=1\n");
    EXPECT_EQ(run({"enumerate-init", "--circuit", "t-ff"}, "C = 0, 1@1\n").out, "P=0 Q=0\nP=1 Q=1\n");
    EXPECT_EQ(run({"enumerate-init", "--circuit", "rs"}, "R = 1\nS = 1\n").out, "none\n");
}

TEST(Cli, CircuitFromDirectiveAndParameters) {
    const auto r = run({"solve", "--init", "x=0"}, ".circuit inertial d=2\nu = 0, 1@1, 0@5\nv = 0, 1@8, 0@11\n");
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("[3, 5)"), std::string::npos) << r.out;

    const auto ce = run({"solve", "--circuit", "c-element", "--init", "x=0"}, "u1 = 0, 1@1, 0@5\nu2 = 0, 1@3, 0@8\n");
    EXPECT_EQ(ce.status, 0) << ce.err;
    EXPECT_NE(ce.out.find("[3, 5)     1   1   1"), std::string::npos) << ce.out;
}

TEST(Cli, UsageAndInputErrors) {
    EXPECT_EQ(run({}, "").status, 2);
    EXPECT_EQ(run({"solve", "--circuit", "nope"}, kRS).status, 2);
    EXPECT_EQ(run({"solve"}, kRS).status, 2);                                    // no circuit
    EXPECT_EQ(run({"solve", "--circuit", "jk"}, kRS).status, 2);                 // missing roles
    EXPECT_EQ(run({"solve", "--circuit", "rs", "--init", "S=1"}, kRS).status, 2); // not a state
    EXPECT_EQ(run({"solve", "--circuit", "rs"}, "R = 1\nS = 1\n").status, 2);    // inadmissible
    EXPECT_EQ(run({"solve", "--circuit", "rs", "--init", "Q=0"}, "R = 0\nS = 1\n").status, 2);
    EXPECT_EQ(run({"solve", "--circuit", "rs", "--stimulus", "/nonexistent/x"}, "").status, 2);

    const auto parse = run({"solve", "--circuit", "rs"}, "S = 0, 1@2, 0@2\n");
    EXPECT_EQ(parse.status, 2);
    EXPECT_NE(parse.err.find("<stdin>:1:14:"), std::string::npos) << parse.err;
}

TEST(Cli, InitDoesNotSwallowPositionalStimulus) {
    const auto r = run({"solve", "--circuit", "rs", "--init", "Q=0", "-"}, kRS);
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("[1, 2)     1  0  1"), std::string::npos) << r.out;
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args = {"solve", "--circuit", "jk", "--format", "dump"};
    EXPECT_EQ(run(args, kJK).out, run(args, kJK).out);
}

} // namespace
