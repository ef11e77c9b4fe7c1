#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "rba/certificate.hpp"
#include "rba/generate.hpp"
#include "rba/harness.hpp"
#include "rba/io.hpp"
#include "support/oracles.hpp"

using namespace rba;
using nlohmann::json;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("rba_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

json last_line_json(const std::string& text) {
    std::istringstream in(text);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    return json::parse(last);
}

}  // namespace

TEST_CASE("serialization is canonical and round-trips") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Shape shape = static_cast<Shape>(seed % 6);
        int n = 4 + static_cast<int>(seed % 4);
        int k = (shape == Shape::TwoMultiroots) ? n - 1 : 1 + static_cast<int>(seed % (n - 1));
        ColoredInstance inst = generate({n, k, shape, seed});
        std::string text = serialize_instance(inst);
        ColoredInstance back = parse_instance(text);
        CHECK(back == inst);
        CHECK(serialize_instance(back) == text);
    }
}

TEST_CASE("parser accepts comments and reports line numbers") {
    CHECK(parse_instance("# header comment\nrba 1 2 1 # trailing\n\n1 1 2\n").n() == 2);
    try {
        parse_instance("rba 2 2 1\n1 1 2\n");
        FAIL("expected version error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }
    try {
        parse_instance("rba 1 2 1\n1 x 2\n");
        FAIL("expected arc error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_instance(""), ParseError);
}

TEST_CASE("digest is stable") {
    ColoredInstance inst = generate({5, 4, Shape::Random, 12});
    CHECK(instance_digest(inst) == instance_digest(inst));
    CHECK(instance_digest(inst).size() == 16);
    ColoredInstance other = generate({5, 4, Shape::Random, 13});
    CHECK(instance_digest(inst) != instance_digest(other));
}

TEST_CASE("cmd_validate reports ok and violations") {
    TempDir tmp;
    write_text_file(tmp.file("ok.rba"), "rba 1 2 1\n1 1 2\n");
    std::ostringstream out;
    CHECK(cmd_validate(tmp.file("ok.rba"), out) == kExitOk);
    json j = last_line_json(out.str());
    CHECK(j["ok"] == true);
    CHECK(j["n"] == 2);
    CHECK(j["k"] == 1);

    write_text_file(tmp.file("bad.rba"), "rba 1 3 1\n1 1 2\n1 3 2\n");
    std::ostringstream out2;
    CHECK(cmd_validate(tmp.file("bad.rba"), out2) == kExitInputError);
    json j2 = last_line_json(out2.str());
    CHECK(j2["ok"] == false);
    CHECK(j2["error"] == "InstanceError");
    CHECK(j2["color"] == 1);
    CHECK(j2["vertex"] == 2);

    std::ostringstream out3;
    CHECK(cmd_validate(tmp.file("missing.rba"), out3) == kExitInputError);
}

TEST_CASE("cmd_gen writes canonical deterministic files") {
    TempDir tmp;
    GenOptions opts;
    opts.n = 5;
    opts.k = 4;
    opts.shape = "two-multiroots";
    opts.seed = 7;
    opts.out_path = tmp.file("a.rba");
    std::ostringstream out1;
    CHECK(cmd_gen(opts, out1) == kExitOk);
    std::string first = read_text_file(opts.out_path);
    ColoredInstance inst = parse_instance(first);
    CHECK(rho_profile(inst).multi_roots().size() == 2);

    opts.out_path = tmp.file("b.rba");
    std::ostringstream out2;
    CHECK(cmd_gen(opts, out2) == kExitOk);
    CHECK(read_text_file(opts.out_path) == first);

    GenOptions bad = opts;
    bad.n = 4;
    bad.k = 3;
    std::ostringstream out3;
    CHECK(cmd_gen(bad, out3) == kExitInputError);
    CHECK(last_line_json(out3.str())["error"] == "InfeasibleSpec");
}

TEST_CASE("cmd_solve reports a verified certificate") {
    TempDir tmp;
    GenOptions gen;
    gen.n = 6;
    gen.k = 5;
    gen.shape = "all-paths";
    gen.seed = 3;
    gen.out_path = tmp.file("paths.rba");
    std::ostringstream ignore;
    REQUIRE(cmd_gen(gen, ignore) == kExitOk);

    SolveOptions solve;
    std::ostringstream out;
    CHECK(cmd_solve(gen.out_path, solve, out) == kExitOk);
    json j = last_line_json(out.str());
    CHECK(j["algorithm"] == "paths");
    CHECK(j["outcome"] == "found");

    // The embedded certificate re-verifies on re-load.
    ColoredInstance inst = load_instance_file(gen.out_path);
    RainbowCertificate cert;
    for (const auto& arc : j["arcs"])
        cert.arcs.push_back({arc[0].get<int>(), arc[1].get<int>(), arc[2].get<int>()});
    cert.root = j["root"].get<int>();
    for (VertexId v = 1; v <= inst.n(); ++v) cert.spanned.push_back(v);
    CHECK(check_certificate(inst, cert, true));

    // Identical command, identical bytes.
    std::ostringstream again;
    CHECK(cmd_solve(gen.out_path, solve, again) == kExitOk);
    CHECK(again.str() == out.str());
}

TEST_CASE("cmd_solve dispatches and enforces preconditions") {
    TempDir tmp;
    write_text_file(tmp.file("tiny.rba"), "rba 1 2 1\n1 1 2\n");

    SolveOptions exact;
    exact.algo = "exact";
    exact.root = 2;
    std::ostringstream out;
    CHECK(cmd_solve(tmp.file("tiny.rba"), exact, out) == kExitOk);
    CHECK(last_line_json(out.str())["outcome"] == "none");

    SolveOptions half;
    half.algo = "half-size";
    half.size = 3;  // > floor(n/2)
    std::ostringstream out2;
    CHECK(cmd_solve(tmp.file("tiny.rba"), half, out2) == kExitInputError);
    json j = last_line_json(out2.str());
    CHECK(j["error"] == "PreconditionFailed");
    CHECK(j["reason"] == "TargetTooLarge");

    SolveOptions wrong;
    wrong.algo = "paths";
    std::ostringstream out3;
    write_text_file(tmp.file("star.rba"), "rba 1 3 2\n1 1 2\n1 1 3\n2 2 1\n2 2 3\n");
    CHECK(cmd_solve(tmp.file("star.rba"), wrong, out3) == kExitInputError);
    CHECK(last_line_json(out3.str())["reason"] == "NotAllPaths");
}

TEST_CASE("cmd_solve two-arcs reports an arc set") {
    TempDir tmp;
    GenOptions gen;
    gen.n = 6;
    gen.k = 4;
    gen.shape = "random";
    gen.seed = 5;
    gen.out_path = tmp.file("inst.rba");
    std::ostringstream ignore;
    REQUIRE(cmd_gen(gen, ignore) == kExitOk);
    SolveOptions solve;
    solve.algo = "two-arcs";
    std::ostringstream out;
    CHECK(cmd_solve(gen.out_path, solve, out) == kExitOk);
    json j = last_line_json(out.str());
    CHECK(j["outcome"] == "found");
    CHECK(j["arcs"].size() == 5);
}

TEST_CASE("cmd_verify exhaustive n=3 finds everything") {
    VerifyOptions opts;
    opts.n = 3;
    opts.k = 2;
    opts.mode = "exhaustive";
    std::ostringstream out;
    CHECK(cmd_verify(opts, out) == kExitOk);
    json j = last_line_json(out.str());
    CHECK(j["total"] == 81);
    CHECK(j["found"] == 81);
    CHECK(j["none"] == 0);
    CHECK(j["unknown"] == 0);

    // Parallel run produces byte-identical output.
    VerifyOptions par = opts;
    par.jobs = 4;
    std::ostringstream out2;
    CHECK(cmd_verify(par, out2) == kExitOk);
    CHECK(out2.str() == out.str());
}

TEST_CASE("cmd_verify sampled mode is deterministic and scriptable") {
    TempDir tmp;
    VerifyOptions opts;
    opts.n = 5;
    opts.k = 4;
    opts.mode = "sample";
    opts.samples = 50;
    opts.seed = 99;
    opts.csv_path = tmp.file("summary.csv");
    std::ostringstream out;
    CHECK(cmd_verify(opts, out) == kExitOk);
    json j = last_line_json(out.str());
    CHECK(j["found"] == 50);
    CHECK(read_text_file(opts.csv_path) ==
          "outcome,count\nfound,50\nnone,0\nunknown,0\n");

    std::ostringstream out2;
    CHECK(cmd_verify(opts, out2) == kExitOk);
    CHECK(out2.str() == out.str());
}

TEST_CASE("cmd_verify exits 2 when a proven none occurs") {
    // With k < n-1 no rainbow spanning arborescence can exist, so every
    // instance is a verified "none" and must be emitted verbatim.
    VerifyOptions opts;
    opts.n = 3;
    opts.k = 1;
    opts.mode = "exhaustive";
    std::ostringstream out;
    CHECK(cmd_verify(opts, out) == kExitCounterexample);
    json j = last_line_json(out.str());
    CHECK(j["none"] == 9);
    CHECK(j["found"] == 0);

    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    json event = json::parse(line);
    CHECK(event["event"] == "none");
    ColoredInstance inst = parse_instance(event["instance"].get<std::string>());
    CHECK(inst.n() == 3);
}

TEST_CASE("cmd_verify reports budget stops as unknown, never as counterexamples") {
    VerifyOptions opts;
    opts.n = 4;
    opts.k = 3;
    opts.mode = "sample";
    opts.samples = 5;
    opts.seed = 1;
    opts.budget.node_budget = 1;
    std::ostringstream out;
    CHECK(cmd_verify(opts, out) == kExitBudget);
    json j = last_line_json(out.str());
    CHECK(j["none"] == 0);
    CHECK(j["unknown"] == 5);

    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    json event = json::parse(line);
    CHECK(event["event"] == "unknown");
    CHECK(event["instance"].get<std::string>().rfind("rba 1 4 3", 0) == 0);
}

TEST_CASE("cmd_reduce_3dm writes the gadget and its layout sidecar") {
    TempDir tmp;
    write_text_file(tmp.file("h.3dm"), "1 1\n1 1 1\n");
    std::ostringstream out;
    CHECK(cmd_reduce_3dm(tmp.file("h.3dm"), tmp.file("g.rba"), false, out) == kExitOk);
    json j = last_line_json(out.str());
    CHECK(j["n"] == 6);
    CHECK(j["k"] == 5);
    CHECK(j["root"] == 1);

    ColoredInstance inst = load_instance_file(tmp.file("g.rba"));
    CHECK(inst.n() == 6);
    std::string sidecar = read_text_file(tmp.file("g.rba.layout"));
    CHECK(sidecar.rfind("# root 1", 0) == 0);
    CHECK(sidecar.find("1 s1\n") != std::string::npos);

    // A solve on the emitted file from s1 succeeds.
    SolveOptions solve;
    solve.algo = "exact";
    solve.root = 1;
    std::ostringstream out2;
    CHECK(cmd_solve(tmp.file("g.rba"), solve, out2) == kExitOk);
    CHECK(last_line_json(out2.str())["outcome"] == "found");

    std::ostringstream out3;
    write_text_file(tmp.file("bad.3dm"), "1 1\n1 1\n");
    CHECK(cmd_reduce_3dm(tmp.file("bad.3dm"), tmp.file("g2.rba"), false, out3) ==
          kExitInputError);
    CHECK(last_line_json(out3.str())["error"] == "ParseError");
}

TEST_CASE("auto dispatch picks the most specific solver") {
    TempDir tmp;
    auto algo_for = [&](const std::string& shape, int n, int k, std::uint64_t seed) {
        GenOptions gen;
        gen.n = n;
        gen.k = k;
        gen.shape = shape;
        gen.seed = seed;
        gen.out_path = tmp.file("dispatch.rba");
        std::ostringstream ignore;
        REQUIRE(cmd_gen(gen, ignore) == kExitOk);
        SolveOptions solve;
        std::ostringstream out;
        REQUIRE(cmd_solve(gen.out_path, solve, out) == kExitOk);
        return last_line_json(out.str())["algorithm"].get<std::string>();
    };
    CHECK(algo_for("all-paths", 6, 5, 1) == "paths");
    CHECK(algo_for("underlying-tree", 7, 6, 1) == "tree");
    CHECK(algo_for("two-multiroots", 7, 6, 1) == "two-multiroots");
    CHECK(algo_for("random", 4, 6, 1) == "many-colors");
}
