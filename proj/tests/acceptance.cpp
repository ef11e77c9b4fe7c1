// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything here is pinned — tolerances, counts, seeds — so a run either
// reproduces the expected behavior exactly or fails loudly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rba/certificate.hpp"
#include "rba/constructive.hpp"
#include "rba/exact.hpp"
#include "rba/gadget.hpp"
#include "rba/generate.hpp"
#include "rba/harness.hpp"
#include "rba/io.hpp"
#include "support/oracles.hpp"

using namespace rba;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// --- criterion 1: exhaustive verification at n = 3 and 4 -------------------

Outcome criterion_exhaustive() {
    Outcome out;
    const auto t0 = Clock::now();
    for (int n : {3, 4}) {
        VerifyOptions opts;
        opts.n = n;
        opts.k = n - 1;
        opts.mode = "exhaustive";
        opts.jobs = worker_count();
        VerifySummary s = run_verification(opts);
        const unsigned long long expected = (n == 3) ? 81ULL : 262144ULL;
        if (s.total != expected)
            out.fail("n=" + std::to_string(n) + ": total " + std::to_string(s.total));
        if (s.found != expected || s.none != 0 || s.unknown != 0)
            out.fail("n=" + std::to_string(n) + ": found " + std::to_string(s.found) +
                     ", none " + std::to_string(s.none) + ", unknown " +
                     std::to_string(s.unknown));
    }
    double elapsed = seconds_since(t0);
    if (elapsed >= 300.0) out.fail("runtime " + std::to_string(elapsed) + "s >= 300s");
    out.detail = "81/81 and 262144/262144 found in " + std::to_string(elapsed) + "s";
    return out;
}

// --- criterion 2: sampled verification at n = 5, 6, 7 ----------------------

Outcome criterion_sampled() {
    Outcome out;
    std::string counts;
    for (int n : {5, 6, 7}) {
        VerifyOptions opts;
        opts.n = n;
        opts.k = n - 1;
        opts.mode = "sample";
        opts.samples = 10000;
        opts.seed = 20250811;
        opts.jobs = worker_count();
        VerifySummary s = run_verification(opts);
        if (s.found != 10000 || s.none != 0 || s.unknown != 0)
            out.fail("n=" + std::to_string(n) + ": none " + std::to_string(s.none) +
                     ", unknown " + std::to_string(s.unknown));
        counts += (counts.empty() ? "" : ", ") + std::to_string(s.found) + "/10000 at n=" +
                  std::to_string(n);
    }
    out.detail = counts;
    return out;
}

// --- criterion 3: gadget equivalence ---------------------------------------

Outcome criterion_gadget_equivalence() {
    Outcome out;
    int checked = 0, budget_stops = 0, mismatches = 0;
    auto check_one = [&](const ThreeDMInstance& h) {
        GadgetResult g = build_gadget(h);
        SearchConfig cfg;
        cfg.required_root = g.root;
        cfg.time_budget_seconds = 60.0;
        bool pm = rba::testing::has_perfect_matching(h);
        try {
            bool ra = find_rainbow(g.instance, cfg).has_value();
            if (pm != ra) ++mismatches;
        } catch (const BudgetExhausted&) {
            ++budget_stops;
        }
        ++checked;
    };

    // p = 1: the triple universe is a single element, so the exhaustive
    // family is every edge list with multiplicity up to q = 3.
    for (int q = 1; q <= 3; ++q)
        check_one(ThreeDMInstance{1, std::vector<ThreeDMTriple>(q, {1, 1, 1})});

    // 200 random p = 2 instances with q <= 3.
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng(mix_seed(424242, i));
        ThreeDMInstance h{2, {}};
        int q = rng.uniform(1, 3);
        for (int e = 0; e < q; ++e)
            h.edges.push_back({rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(1, 2)});
        check_one(h);
    }

    if (mismatches != 0) out.fail(std::to_string(mismatches) + " equivalence mismatches");
    if (budget_stops != 0) out.fail(std::to_string(budget_stops) + " budget exhaustions");
    out.detail = std::to_string(checked) + " instances, matching existence == rooted solver";
    return out;
}

// --- criterion 4: gadget size formulas --------------------------------------

Outcome criterion_gadget_sizes() {
    Outcome out;
    int built = 0;
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 6; ++q) {
            Rng rng(mix_seed(777, static_cast<std::uint64_t>(p * 100 + q)));
            ThreeDMInstance h{p, {}};
            for (int e = 0; e < q; ++e)
                h.edges.push_back({rng.uniform(1, p), rng.uniform(1, p), rng.uniform(1, p)});
            GadgetResult g = build_gadget(h);
            if (g.instance.n() != 3 * p * q + p + 2 || g.instance.k() != 3 * p * q + p + 1)
                out.fail("p=" + std::to_string(p) + " q=" + std::to_string(q));
            if (rho_profile(g.instance).multi_roots().size() > 2)
                out.fail("gadget has more than two root vertices");
            ++built;
        }
    out.detail = std::to_string(built) + " gadgets, n = 3pq+p+2 and k = n-1 exact";
    return out;
}

// --- criterion 5: constructive-solver soundness -----------------------------

Outcome criterion_soundness() {
    Outcome out;
    const int runs = 10000;
    long long done = 0;
    auto expect = [&](bool ok, const char* which, std::uint64_t i) {
        if (!ok) out.fail(std::string(which) + " failed at i=" + std::to_string(i));
        ++done;
    };

    for (std::uint64_t i = 0; i < runs; ++i) {
        int n = 2 + static_cast<int>(i % 11);  // 2..12
        ColoredInstance inst = generate({n, n - 1, Shape::AllPaths, mix_seed(1001, i)});
        RainbowCertificate cert = solve_all_paths(inst);
        expect(static_cast<bool>(check_certificate(inst, cert, true)), "all-paths", i);
    }
    for (std::uint64_t i = 0; i < runs; ++i) {
        int n = 2 + static_cast<int>(i % 11);
        ColoredInstance inst = generate({n, n - 1, Shape::PathsAndStars, mix_seed(1002, i)});
        RainbowCertificate cert = solve_paths_and_stars(inst);
        expect(static_cast<bool>(check_certificate(inst, cert, true)), "paths-stars", i);
    }
    for (std::uint64_t i = 0; i < runs; ++i) {
        ColoredInstance inst =
            (i % 2 == 0)
                ? generate({5 + static_cast<int>(i % 8), 4 + static_cast<int>(i % 8),
                            Shape::TwoMultiroots, mix_seed(1003, i)})
                : generate({2 + static_cast<int>(i % 11), 1 + static_cast<int>(i % 11),
                            Shape::SharedRoot, mix_seed(1003, i)});
        RainbowCertificate cert = solve_two_multiroots(inst);
        expect(static_cast<bool>(check_certificate(inst, cert, true)), "two-multiroots", i);
    }
    for (std::uint64_t i = 0; i < runs; ++i) {
        int n = 2 + static_cast<int>(i % 11);
        ColoredInstance inst = generate({n, n - 1, Shape::UnderlyingTree, mix_seed(1004, i)});
        RainbowCertificate cert = solve_tree_underlying(inst);
        expect(static_cast<bool>(check_certificate(inst, cert, true)), "tree", i);
    }
    for (std::uint64_t i = 0; i < runs; ++i) {
        int n = 3 + static_cast<int>(i % 10);  // 3..12
        int k = (i % 2 == 0) ? 2 * n - 4 : 2 * n - 3;
        ColoredInstance inst = generate({n, k, Shape::Random, mix_seed(1005, i)});
        RainbowCertificate cert = solve_many_colors(inst);
        expect(static_cast<bool>(check_certificate(inst, cert, true)), "many-colors", i);
    }
    for (std::uint64_t i = 0; i < runs; ++i) {
        int n = 3 + static_cast<int>(i % 10);
        ColoredInstance inst = generate({n, n - 2, Shape::Random, mix_seed(1006, i)});
        SpanningSelection sel = solve_two_arcs_per_color(inst);
        std::map<ColorId, int> uses;
        bool ok = static_cast<int>(sel.arcs.size()) == n - 1;
        std::vector<ColoredArc> plain;
        for (ColoredArc a : sel.arcs) {
            ok = ok && inst.has_arc(a) && ++uses[a.color] <= 2;
            a.color = 1;
            plain.push_back(a);
        }
        ok = ok && rba::testing::is_spanning_arborescence(n, plain);
        expect(ok, "two-arcs", i);
    }
    for (std::uint64_t i = 0; i < runs; ++i) {
        int n = 2 + static_cast<int>(i % 11);
        int target = std::max(1, n / 2);
        ColoredInstance inst = generate({n, n - 1, Shape::Random, mix_seed(1007, i)});
        RainbowCertificate cert = solve_half_size(inst, target);
        expect(cert.size() == target && static_cast<bool>(check_certificate(inst, cert)),
               "half-size", i);
    }

    out.detail = std::to_string(done) + " certificates verified across 7 solvers";
    return out;
}

// --- criterion 6: all-paths potential monotonicity ---------------------------

Outcome criterion_potential() {
    Outcome out;
    int with_cycle = 0;
    std::uint64_t i = 0;
    for (; with_cycle < 1000 && i < 300000; ++i) {
        int n = 4 + static_cast<int>(i % 9);  // 4..12
        ColoredInstance inst = generate({n, n - 1, Shape::AllPaths, mix_seed(2001, i)});
        AllPathsStats stats;
        RainbowCertificate cert = solve_all_paths(inst, &stats);
        if (!check_certificate(inst, cert, true)) out.fail("invalid certificate");
        if (!stats.initial_had_cycle) continue;
        ++with_cycle;
        int last = stats.initial_potential;
        for (int p : stats.round_potentials) {
            if (p >= last) out.fail("potential did not strictly decrease");
            last = p;
        }
        if (stats.rounds > stats.initial_potential)
            out.fail("rounds exceeded the initial potential");
    }
    if (with_cycle < 1000) out.fail("only " + std::to_string(with_cycle) + " cyclic starts");
    out.detail = std::to_string(with_cycle) + " cyclic initial selections repaired, potentials "
                 "strictly decreasing, rounds within the initial potential";
    return out;
}

// --- criterion 7: two-arcs usage bound ----------------------------------------

Outcome criterion_two_arcs() {
    Outcome out;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        int n = 3 + static_cast<int>(i % 8);  // 3..10
        ColoredInstance inst = generate({n, n - 2, Shape::Random, mix_seed(3001, i)});
        SpanningSelection sel = solve_two_arcs_per_color(inst);
        std::map<ColorId, int> uses;
        std::vector<ColoredArc> plain;
        bool ok = static_cast<int>(sel.arcs.size()) == n - 1;
        for (ColoredArc a : sel.arcs) {
            ok = ok && inst.has_arc(a) && ++uses[a.color] <= 2;
            a.color = 1;
            plain.push_back(a);
        }
        if (!ok || !rba::testing::is_spanning_arborescence(n, plain))
            out.fail("violation at i=" + std::to_string(i));
    }
    out.detail = "1000 spanning arborescences, per-color usage max <= 2";
    return out;
}

// --- criterion 8: half-size targets -------------------------------------------

Outcome criterion_half_size() {
    Outcome out;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        int n = 7 + static_cast<int>(i % 6);  // 7..12
        int target = n / 2;
        ColoredInstance inst = generate({n, n - 1, Shape::Random, mix_seed(4001, i)});
        RainbowCertificate cert = solve_half_size(inst, target);
        if (cert.size() != target || !check_certificate(inst, cert))
            out.fail("violation at i=" + std::to_string(i));
    }
    out.detail = "1000 rainbow arborescences of size exactly floor(n/2)";
    return out;
}

// --- criterion 9: oracle equivalence per hypothesis class ---------------------

Outcome criterion_oracle_equivalence() {
    Outcome out;
    struct ClassSpec {
        const char* name;
        Shape shape;
        std::function<bool(const ShapeReport&)> predicate;
        std::function<RainbowCertificate(const ColoredInstance&)> solver;
    };
    const std::vector<ClassSpec> classes = {
        {"all-paths", Shape::AllPaths, [](const ShapeReport& s) { return s.all_paths; },
         [](const ColoredInstance& i) { return solve_all_paths(i, nullptr); }},
        {"paths-stars", Shape::PathsAndStars,
         [](const ShapeReport& s) { return s.all_paths_or_stars; },
         [](const ColoredInstance& i) { return solve_paths_and_stars(i); }},
        {"two-multiroots", Shape::Random,
         [](const ShapeReport& s) { return s.multi_root_count <= 2; },
         [](const ColoredInstance& i) { return solve_two_multiroots(i); }},
        {"underlying-tree", Shape::UnderlyingTree,
         [](const ShapeReport& s) { return s.underlying_tree; },
         [](const ColoredInstance& i) { return solve_tree_underlying(i); }},
        {"shared-root", Shape::SharedRoot,
         [](const ShapeReport& s) { return s.multi_root_count <= 1; },
         [](const ColoredInstance& i) { return solve_two_multiroots(i); }},
    };

    long long compared = 0;
    auto compare = [&](const ClassSpec& cls, const ColoredInstance& inst) {
        RainbowCertificate cert = cls.solver(inst);
        bool constructive_ok = static_cast<bool>(check_certificate(inst, cert, true));
        bool exact_ok = find_rainbow(inst).has_value();
        if (!constructive_ok || !exact_ok)
            out.fail(std::string(cls.name) + ": constructive " +
                     (constructive_ok ? "ok" : "FAIL") + ", exact " +
                     (exact_ok ? "ok" : "FAIL"));
        ++compared;
    };

    for (const ClassSpec& cls : classes) {
        // Exhaustive where the full family fits in 1e5 instances (n = 2, 3),
        // 1e4 seeded samples otherwise (n = 4, 5).
        for (int n : {2, 3}) {
            InstanceEnumerator en(n, n - 1);
            while (auto inst = en.next())
                if (cls.predicate(classify_shape(*inst))) compare(cls, *inst);
        }
        for (int n : {4, 5}) {
            for (std::uint64_t i = 0; i < 10000; ++i) {
                Shape shape = cls.shape;
                if (shape == Shape::TwoMultiroots && n < 5) shape = Shape::Random;
                ColoredInstance inst =
                    generate({n, n - 1, shape, mix_seed(5001 + n, i)});
                if (!cls.predicate(classify_shape(inst))) continue;
                compare(cls, inst);
            }
        }
    }
    out.detail = std::to_string(compared) +
                 " instances: constructive and exact both succeed in every class";
    return out;
}

// --- criterion 10: determinism -------------------------------------------------

Outcome criterion_determinism() {
    Outcome out;

    for (Shape shape : {Shape::Random, Shape::TwoMultiroots, Shape::AllPaths}) {
        GenSpec spec{7, shape == Shape::TwoMultiroots ? 6 : 5, shape, 20250811};
        if (serialize_instance(generate(spec)) != serialize_instance(generate(spec)))
            out.fail(std::string("gen ") + shape_name(shape));
    }

    {
        VerifyOptions opts;
        opts.n = 3;
        opts.k = 2;
        opts.mode = "exhaustive";
        std::ostringstream a, b;
        VerifyOptions parallel = opts;
        parallel.jobs = worker_count();
        if (cmd_verify(opts, a) != 0 || cmd_verify(parallel, b) != 0 || a.str() != b.str())
            out.fail("exhaustive verify reports differ across jobs");
    }
    {
        VerifyOptions opts;
        opts.n = 6;
        opts.k = 5;
        opts.mode = "sample";
        opts.samples = 500;
        opts.seed = 99;
        opts.jobs = worker_count();
        std::ostringstream a, b;
        if (cmd_verify(opts, a) != 0 || cmd_verify(opts, b) != 0 || a.str() != b.str())
            out.fail("sampled verify reports differ");
    }
    {
        ColoredInstance inst = generate({6, 5, Shape::Random, 4242});
        auto c1 = find_rainbow(inst);
        auto c2 = find_rainbow(inst);
        if (!c1 || !c2 || !(*c1 == *c2)) out.fail("repeated solves differ");
    }
    out.detail = "seeded gen, solve, and verify runs are byte-identical";
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {1, "exhaustive conjecture verification (n=3, n=4)", criterion_exhaustive},
        {2, "sampled verification (n=5,6,7; 10^4 seeded instances each)", criterion_sampled},
        {3, "gadget equivalence (3DM matching <=> rooted solver)", criterion_gadget_equivalence},
        {4, "gadget size formulas (p<=4, q<=6)", criterion_gadget_sizes},
        {5, "constructive-solver soundness (10^4 instances per solver)", criterion_soundness},
        {6, "all-paths potential monotonicity (10^3 cyclic starts)", criterion_potential},
        {7, "two-arcs usage bound (10^3 instances)", criterion_two_arcs},
        {8, "half-size targets (10^3 instances, n=7..12)", criterion_half_size},
        {9, "constructive vs exact oracle equivalence (n<=5)", criterion_oracle_equivalence},
        {10, "determinism of seeded commands", criterion_determinism},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        const auto t0 = Clock::now();
        Outcome result;
        try {
            result = e.fn();
        } catch (const std::exception& ex) {
            result.pass = false;
            result.detail = std::string("exception: ") + ex.what();
        }
        if (!result.pass) ++failures;
        std::printf("%s %2d %s: %s (%.1fs)\n", result.pass ? "PASS" : "FAIL", e.id, e.name,
                    result.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
