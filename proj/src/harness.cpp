#include "rba/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rba/certificate.hpp"
#include "rba/constructive.hpp"
#include "rba/exact.hpp"
#include "rba/gadget.hpp"
#include "rba/generate.hpp"
#include "rba/io.hpp"

namespace rba {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

json arcs_to_json(const std::vector<ColoredArc>& arcs) {
    json list = json::array();
    for (const ColoredArc& a : arcs) list.push_back({a.color, a.tail, a.head});
    return list;
}

SearchConfig search_config(const BudgetOptions& budget, std::optional<VertexId> root,
                           std::optional<int> size) {
    SearchConfig cfg;
    cfg.required_root = root;
    cfg.target_size = size;
    cfg.node_budget = budget.node_budget;
    cfg.time_budget_seconds = budget.time_budget_seconds;
    return cfg;
}

// A proven "none" is a counterexample candidate only in the settings the
// conjecture covers: unrooted, k >= n-1 for the spanning problem, or any
// target size on an (n-1)-color instance.
bool none_is_counterexample(const ColoredInstance& inst, const SolveOptions& opts, int target) {
    if (opts.root) return false;
    if (target == inst.n() - 1) return inst.k() >= inst.n() - 1;
    return inst.k() == inst.n() - 1;
}

// Spanning arborescence using each color at most twice (the two-arcs
// contract; check_certificate would reject the color reuse).
bool verify_selection(const ColoredInstance& inst, const SpanningSelection& sel) {
    const int n = inst.n();
    if (static_cast<int>(sel.arcs.size()) != n - 1) return false;
    std::vector<int> uses(inst.k() + 1, 0);
    std::vector<VertexId> tail_of(n + 1, 0);
    for (const ColoredArc& a : sel.arcs) {
        if (!inst.has_arc(a)) return false;
        if (++uses[a.color] > 2) return false;
        if (tail_of[a.head] != 0) return false;
        tail_of[a.head] = a.tail;
    }
    if (tail_of[sel.root] != 0) return false;
    for (VertexId v = 1; v <= n; ++v) {
        VertexId u = v;
        int steps = 0;
        while (u != sel.root) {
            u = tail_of[u];
            if (u == 0 || ++steps > n) return false;
        }
    }
    return true;
}

std::string pick_auto_algo(const ColoredInstance& inst, const SolveOptions& opts) {
    const int n = inst.n();
    const int k = inst.k();
    if (opts.root) return "exact";
    if (opts.size && *opts.size != n - 1)
        return (k == n - 1 && *opts.size <= n / 2) ? "half-size" : "exact";
    ShapeReport shape = classify_shape(inst);
    if (k == n - 1) {
        if (shape.all_paths) return "paths";
        if (shape.all_paths_or_stars) return "paths-stars";
        if (shape.underlying_tree) return "tree";
        if (shape.multi_root_count <= 2) return "two-multiroots";
    }
    if (k >= 2 * n - 3 || (n >= 3 && k >= 2 * n - 4)) return "many-colors";
    return "exact";
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out) {
    json j{{"command", "validate"}, {"path", path}};
    try {
        ColoredInstance inst = load_instance_file(path);
        j["ok"] = true;
        j["n"] = inst.n();
        j["k"] = inst.k();
        j["digest"] = instance_digest(inst);
        emit(out, j);
        return kExitOk;
    } catch (const InstanceError& e) {
        j["ok"] = false;
        j["error"] = "InstanceError";
        j["message"] = e.what();
        j["color"] = e.color();
        j["vertex"] = e.vertex();
    } catch (const ParseError& e) {
        j["ok"] = false;
        j["error"] = "ParseError";
        j["message"] = e.what();
        j["line"] = e.line();
    } catch (const std::exception& e) {
        j["ok"] = false;
        j["error"] = "IoError";
        j["message"] = e.what();
    }
    emit(out, j);
    return kExitInputError;
}

int cmd_solve(const std::string& path, const SolveOptions& opts, std::ostream& out) {
    json j{{"command", "solve"}, {"path", path}};
    ColoredInstance inst;
    try {
        inst = load_instance_file(path);
    } catch (const std::exception& e) {
        j["outcome"] = "error";
        j["error"] = "InputError";
        j["message"] = e.what();
        emit(out, j);
        return kExitInputError;
    }
    const int n = inst.n();
    j["n"] = n;
    j["k"] = inst.k();
    j["digest"] = instance_digest(inst);

    std::string algo = opts.algo == "auto" ? pick_auto_algo(inst, opts) : opts.algo;
    j["algorithm"] = algo;
    const int target = opts.size.value_or(n - 1);

    const auto t0 = Clock::now();
    auto finish = [&](int code) {
        if (opts.timing)
            j["elapsed_seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
        emit(out, j);
        return code;
    };

    try {
        std::optional<RainbowCertificate> cert;
        bool spanning_expected = true;
        if (algo == "exact") {
            SearchStats stats;
            cert = find_rainbow(inst, search_config(opts.budget, opts.root, opts.size), &stats);
            j["nodes"] = stats.nodes;
            spanning_expected = (target == n - 1);
        } else if (algo == "paths") {
            cert = solve_all_paths(inst);
        } else if (algo == "paths-stars") {
            cert = solve_paths_and_stars(inst);
        } else if (algo == "two-multiroots") {
            cert = solve_two_multiroots(inst);
        } else if (algo == "tree") {
            cert = solve_tree_underlying(inst);
        } else if (algo == "many-colors") {
            cert = solve_many_colors(inst);
        } else if (algo == "two-arcs") {
            SpanningSelection sel = solve_two_arcs_per_color(inst);
            if (!verify_selection(inst, sel))
                throw std::logic_error("two-arcs selection failed re-verification");
            j["outcome"] = "found";
            j["root"] = sel.root;
            j["size"] = sel.arcs.size();
            j["arcs"] = arcs_to_json(sel.arcs);
            return finish(kExitOk);
        } else if (algo == "half-size") {
            if (!opts.size)
                throw PreconditionError(PreconditionCode::TargetTooLarge,
                                        "half-size requires --size");
            cert = solve_half_size(inst, *opts.size);
            spanning_expected = false;
        } else {
            j["outcome"] = "error";
            j["error"] = "UnknownAlgorithm";
            j["message"] = algo;
            return finish(kExitInputError);
        }

        if (!cert) {
            j["outcome"] = "none";
            bool counter = none_is_counterexample(inst, opts, target);
            j["counterexample"] = counter;
            return finish(counter ? kExitCounterexample : kExitOk);
        }

        if (CheckResult res = check_certificate(inst, *cert, spanning_expected, opts.root); !res)
            throw std::logic_error("certificate failed re-verification: " + res.detail);
        if (!spanning_expected && cert->size() != target)
            throw std::logic_error("certificate size disagrees with the target");
        j["outcome"] = "found";
        j["root"] = cert->root;
        j["size"] = cert->size();
        j["arcs"] = arcs_to_json(cert->arcs);
        return finish(kExitOk);
    } catch (const BudgetExhausted& e) {
        j["outcome"] = "unknown";
        j["error"] = "BudgetExhausted";
        j["message"] = e.what();
        j["nodes"] = e.nodes();
        return finish(kExitBudget);
    } catch (const PreconditionError& e) {
        j["outcome"] = "error";
        j["error"] = "PreconditionFailed";
        j["algorithm"] = algo;
        j["reason"] = precondition_code_name(e.code());
        j["message"] = e.what();
        return finish(kExitInputError);
    }
}

VerifySummary run_verification(const VerifyOptions& opts) {
    const bool exhaustive = opts.mode == "exhaustive";
    if (!exhaustive && opts.mode != "sample")
        throw std::invalid_argument("mode must be exhaustive or sample");

    std::optional<InstanceEnumerator> en;
    unsigned long long total;
    if (exhaustive) {
        en.emplace(opts.n, opts.k);  // throws TooLarge beyond desk scale
        total = en->total();
    } else {
        if (opts.samples < 1) throw std::invalid_argument("samples must be positive");
        total = static_cast<unsigned long long>(opts.samples);
    }

    VerifySummary summary;
    summary.total = total;

    const int jobs = std::max(1, opts.jobs);
    std::atomic<unsigned long long> next{0};
    std::atomic<unsigned long long> found{0};
    std::mutex merge_mutex;
    std::vector<VerifyEvent> events;
    std::exception_ptr failure;

    auto worker = [&] {
        std::vector<VerifyEvent> local;
        for (;;) {
            unsigned long long idx = next.fetch_add(1);
            if (idx >= total) break;
            std::uint64_t child_seed = 0;
            ColoredInstance inst;
            try {
                if (exhaustive) {
                    inst = en->at(idx);
                } else {
                    child_seed = mix_seed(opts.seed, idx);
                    inst = generate(GenSpec{opts.n, opts.k, Shape::Random, child_seed});
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(merge_mutex);
                if (!failure) failure = std::current_exception();
                break;
            }
            try {
                SearchConfig cfg = search_config(opts.budget, std::nullopt, std::nullopt);
                if (find_rainbow(inst, cfg)) {
                    found.fetch_add(1);
                } else {
                    local.push_back(
                        {idx, "none", child_seed, serialize_instance(inst)});
                }
            } catch (const BudgetExhausted&) {
                local.push_back({idx, "unknown", child_seed, serialize_instance(inst)});
            } catch (...) {
                std::lock_guard<std::mutex> lock(merge_mutex);
                if (!failure) failure = std::current_exception();
                break;
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        events.insert(events.end(), local.begin(), local.end());
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::sort(events.begin(), events.end(),
              [](const VerifyEvent& a, const VerifyEvent& b) { return a.index < b.index; });
    summary.found = found.load();
    for (const VerifyEvent& e : events)
        (e.outcome == "none" ? summary.none : summary.unknown) += 1;
    summary.events = std::move(events);
    return summary;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
    const auto t0 = Clock::now();
    VerifySummary summary;
    try {
        summary = run_verification(opts);
    } catch (const PreconditionError& e) {
        json j{{"command", "verify"},
               {"outcome", "error"},
               {"error", "PreconditionFailed"},
               {"reason", precondition_code_name(e.code())},
               {"message", e.what()}};
        emit(out, j);
        return kExitInputError;
    } catch (const std::exception& e) {
        json j{{"command", "verify"},
               {"outcome", "error"},
               {"error", "InputError"},
               {"message", e.what()}};
        emit(out, j);
        return kExitInputError;
    }

    for (const VerifyEvent& e : summary.events) {
        json j{{"command", "verify"},
               {"event", e.outcome},
               {"index", e.index},
               {"instance", e.instance_text}};
        if (opts.mode == "sample") j["seed"] = e.seed;
        emit(out, j);
    }
    json j{{"command", "verify"}, {"mode", opts.mode},   {"n", opts.n},
           {"k", opts.k},         {"seed", opts.seed},   {"total", summary.total},
           {"found", summary.found}, {"none", summary.none}, {"unknown", summary.unknown}};
    if (opts.mode == "sample") j["samples"] = opts.samples;
    if (opts.timing)
        j["elapsed_seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
    emit(out, j);

    if (!opts.csv_path.empty()) {
        std::ostringstream csv;
        csv << "outcome,count\n";
        csv << "found," << summary.found << "\n";
        csv << "none," << summary.none << "\n";
        csv << "unknown," << summary.unknown << "\n";
        write_text_file(opts.csv_path, csv.str());
    }

    if (summary.none > 0) return kExitCounterexample;
    if (summary.unknown > 0) return kExitBudget;
    return kExitOk;
}

int cmd_reduce_3dm(const std::string& in_path, const std::string& out_path, bool timing,
                   std::ostream& out) {
    const auto t0 = Clock::now();
    json j{{"command", "reduce-3dm"}, {"path", in_path}, {"out", out_path}};
    try {
        std::istringstream in(read_text_file(in_path));
        ThreeDMInstance h = parse_threedm(in);
        GadgetResult g = build_gadget(h);
        write_text_file(out_path, serialize_instance(g.instance));
        write_text_file(out_path + ".layout", layout_sidecar(g.layout));
        j["ok"] = true;
        j["p"] = h.p;
        j["q"] = h.q();
        j["n"] = g.instance.n();
        j["k"] = g.instance.k();
        j["root"] = g.root;
        j["root_name"] = "s1";
        j["layout"] = out_path + ".layout";
        j["digest"] = instance_digest(g.instance);
        if (timing)
            j["elapsed_seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
        emit(out, j);
        return kExitOk;
    } catch (const ParseError& e) {
        j["ok"] = false;
        j["error"] = "ParseError";
        j["message"] = e.what();
        j["line"] = e.line();
    } catch (const PreconditionError& e) {
        j["ok"] = false;
        j["error"] = precondition_code_name(e.code());
        j["message"] = e.what();
    } catch (const std::exception& e) {
        j["ok"] = false;
        j["error"] = "IoError";
        j["message"] = e.what();
    }
    emit(out, j);
    return kExitInputError;
}

int cmd_gen(const GenOptions& opts, std::ostream& out) {
    json j{{"command", "gen"}, {"n", opts.n}, {"k", opts.k},
           {"shape", opts.shape}, {"seed", opts.seed}, {"out", opts.out_path}};
    try {
        std::optional<Shape> shape = shape_from_name(opts.shape);
        if (!shape)
            throw PreconditionError(PreconditionCode::InfeasibleSpec,
                                    "unknown shape " + opts.shape);
        ColoredInstance inst = generate(GenSpec{opts.n, opts.k, *shape, opts.seed});
        write_text_file(opts.out_path, serialize_instance(inst));
        j["ok"] = true;
        j["digest"] = instance_digest(inst);
        emit(out, j);
        return kExitOk;
    } catch (const PreconditionError& e) {
        j["ok"] = false;
        j["error"] = precondition_code_name(e.code());
        j["message"] = e.what();
    } catch (const std::exception& e) {
        j["ok"] = false;
        j["error"] = "InputError";
        j["message"] = e.what();
    }
    emit(out, j);
    return kExitInputError;
}

}  // namespace rba
