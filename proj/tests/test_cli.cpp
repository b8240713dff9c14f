#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratapprox/json_io.hpp"
#include "ratapprox/run.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace ratapprox;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }

    std::string read() const {
        std::ifstream file(path, std::ios::binary);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }
};

int run_quiet(const RunConfig& config) {
    std::ostringstream diag;
    return run(config, diag);
}

}  // namespace

TEST_CASE("decompose command emits the documented JSON schema") {
    TempFile out("decompose.json");
    RunConfig config;
    config.command = RunConfig::Command::Decompose;
    config.a = 1;
    config.q = 101;
    config.Q = 25600;
    config.n = 3;
    config.out = out.path;
    CHECK(run_quiet(config) == kExitOk);

    auto j = nlohmann::ordered_json::parse(out.read());
    CHECK(j["a"] == "1");
    CHECK(j["q"] == "101");
    CHECK(j["Q"] == "25600");
    CHECK(j["n"] == 3);
    CHECK(j["c"] == "2/1");
    CHECK(j["path"] == "theorem-search");
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["num"] == "2");
    CHECK(j["terms"][0]["den"] == "23");
    CHECK(j["terms"][1]["num"] == "31");
    CHECK(j["terms"][1]["den"] == "37");
    CHECK(j["terms"][2]["num"] == "-43");
    CHECK(j["terms"][2]["den"] == "47");
    CHECK(j["b"] == "396");
    CHECK(j["product"] == "39997");
    CHECK(j["error"]["num"] == "1");
    CHECK(j["error"]["den"] == "4039697");
    CHECK(j["hypothesis_Q_ge_q2eps"].is_boolean());
}

TEST_CASE("decompose JSON round-trips through verify") {
    ProblemSpec spec = make_problem(Int(1), Int(101), Int(25600), 3);
    auto d = decompose(spec);
    REQUIRE(d.has_value());
    std::string text = decomposition_json(spec, *d).dump(2);

    ParsedDecomposition parsed = decomposition_from_json(text);
    VerificationReport direct = verify(*d, spec);
    VerificationReport roundtrip = verify(parsed.decomposition, parsed.spec);
    CHECK(verification_json(direct) == verification_json(roundtrip));
    CHECK(roundtrip.all_ok());

    // serializing the parsed object reproduces the bytes
    CHECK(decomposition_json(parsed.spec, parsed.decomposition).dump(2) == text);
}

TEST_CASE("verify command reads a decomposition document") {
    TempFile doc("verify_in.json");
    TempFile out("verify_out.json");
    {
        RunConfig produce;
        produce.command = RunConfig::Command::Decompose;
        produce.a = 3;
        produce.q = 7;
        produce.Q = 49;
        produce.n = 3;
        produce.out = doc.path;
        REQUIRE(run_quiet(produce) == kExitOk);
    }
    RunConfig config;
    config.command = RunConfig::Command::Verify;
    config.in = doc.path;
    config.out = out.path;
    CHECK(run_quiet(config) == kExitOk);
    auto j = nlohmann::ordered_json::parse(out.read());
    CHECK(j["all_ok"] == true);
}

TEST_CASE("exit codes: NotFound vs domain errors") {
    // theorem mode on an instance the engine cannot solve
    ProblemSpec probe = make_problem(Int(1), Int(997), Int(1000), 3, Fraction(Int(2)),
                                     Mode::Theorem);
    REQUIRE(!decompose(probe).has_value());

    RunConfig config;
    config.command = RunConfig::Command::Decompose;
    config.a = 1;
    config.q = 997;
    config.Q = 1000;
    config.n = 3;
    config.mode = Mode::Theorem;
    config.out = "cli_test_notfound.json";
    CHECK(run_quiet(config) == kExitNotFound);
    std::remove("cli_test_notfound.json");

    RunConfig bad = config;
    bad.q = 0;
    CHECK(run_quiet(bad) == kExitError);

    RunConfig bad_n = config;
    bad_n.n = 7;
    CHECK(run_quiet(bad_n) == kExitError);

    RunConfig bad_fmt = config;
    bad_fmt.q = 101;
    bad_fmt.Q = 25600;
    bad_fmt.mode = Mode::Auto;
    bad_fmt.format = "xml";
    CHECK(run_quiet(bad_fmt) == kExitError);
}

TEST_CASE("sweep command is byte-deterministic per seed") {
    TempFile out1("sweep1.csv");
    TempFile out2("sweep2.csv");
    RunConfig config;
    config.command = RunConfig::Command::Sweep;
    config.seed = 42;
    config.count = 12;
    config.q_min = 101;
    config.q_max = 997;
    config.n = 3;
    config.out = out1.path;
    CHECK(run_quiet(config) == kExitOk);
    config.out = out2.path;
    CHECK(run_quiet(config) == kExitOk);
    std::string first = out1.read();
    CHECK(first == out2.read());
    CHECK(first.starts_with("q,a,Q,R,S_size,P_size,L_size,found,product,verify_pass\n"));
    CHECK(first.find("# summary: instances=12") != std::string::npos);

    config.seed = 43;
    config.out = out1.path;
    CHECK(run_quiet(config) == kExitOk);
    CHECK(out1.read() != first);  // different seed, different instances
}

TEST_CASE("sweep found rows always verify") {
    SweepConfig config;
    config.seed = 7;
    config.count = 25;
    config.q_min = 50;
    config.q_max = 2000;
    config.n = 3;
    auto [rows, summary] = sweep_decompose(config);
    CHECK(rows.size() == 25);
    std::uint64_t found = 0;
    for (const SweepRow& row : rows) {
        if (row.result) {
            ++found;
            CHECK(row.verify_pass);
        }
    }
    CHECK(found == summary.found);
}

TEST_CASE("sweep count=0 emits header only") {
    SweepConfig config;
    config.count = 0;
    config.q_min = 101;
    config.q_max = 199;
    auto [rows, summary] = sweep_decompose(config);
    CHECK(rows.empty());
    std::string csv = sweep_csv(rows, summary, 3);
    CHECK(csv ==
          "q,a,Q,R,S_size,P_size,L_size,found,product,verify_pass\n"
          "# summary: instances=0 found=0 success_rate=0/0\n");
}

TEST_CASE("decompose csv format and n=4 sweep header") {
    TempFile out("decompose.csv");
    RunConfig config;
    config.command = RunConfig::Command::Decompose;
    config.a = 1;
    config.q = 101;
    config.Q = 25600;
    config.n = 3;
    config.format = "csv";
    config.out = out.path;
    CHECK(run_quiet(config) == kExitOk);
    std::string csv = out.read();
    CHECK(csv.starts_with("q,a,Q,R,S_size,P_size,L_size,found,product,verify_pass\n"
                          "101,1,25600,58,9,5,2,true,39997,true\n"));

    TempFile sweep_out("sweep4.csv");
    RunConfig sweep;
    sweep.command = RunConfig::Command::Sweep;
    sweep.seed = 5;
    sweep.count = 3;
    sweep.q_min = 1000;
    sweep.q_max = 2000;
    sweep.n = 4;
    sweep.out = sweep_out.path;
    CHECK(run_quiet(sweep) == kExitOk);
    CHECK(sweep_out.read().starts_with(
        "q,a,Q,R,S_size,P_size,L_size,R4_size,found,product,verify_pass\n"));
}

TEST_CASE("moments command emits the documented CSV schema") {
    TempFile out("moments.csv");
    RunConfig config;
    config.command = RunConfig::Command::Moments;
    config.q_list = {Int(5)};
    config.x_set = std::vector<Int>{Int(1), Int(2)};
    config.Y = Int(2);
    config.Z = 0;
    config.out = out.path;
    CHECK(run_quiet(config) == kExitOk);
    CHECK(out.read() ==
          "q,X_card,Y,Z,moment_num,moment_den,bound_term,ratio_num,ratio_den\n"
          "5,2,2,0,14,5,8,7,20\n");
}

TEST_CASE("oracle command reports the witness") {
    TempFile out("oracle.json");
    RunConfig config;
    config.command = RunConfig::Command::Oracle;
    config.a = 1;
    config.q = 5;
    config.n = 3;
    config.D = 3;
    config.out = out.path;
    CHECK(run_quiet(config) == kExitOk);
    auto j = nlohmann::ordered_json::parse(out.read());
    CHECK(j["best_error"]["num"] == "1");
    CHECK(j["best_error"]["den"] == "30");
    CHECK(j["witness"].size() == 3);
}

TEST_CASE("malformed verify input is a domain error") {
    CHECK_THROWS_AS(decomposition_from_json("{not json"), std::domain_error);
    CHECK_THROWS_AS(decomposition_from_json("{\"a\": \"1\"}"), std::domain_error);
    CHECK_THROWS_AS(decomposition_from_json(
                        "{\"a\":\"x\",\"q\":\"7\",\"Q\":\"49\",\"n\":3,\"c\":\"2/1\","
                        "\"path\":\"trivial\",\"terms\":[],\"b\":\"0\",\"product\":\"7\","
                        "\"error\":{\"num\":\"0\",\"den\":\"1\"},"
                        "\"hypothesis_Q_ge_q2eps\":false}"),
                    std::domain_error);
}
