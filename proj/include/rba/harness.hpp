#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rba/instance.hpp"

namespace rba {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInputError = 4;

struct BudgetOptions {
    std::optional<long long> node_budget;
    std::optional<double> time_budget_seconds;
};

struct SolveOptions {
    std::string algo = "auto";
    std::optional<VertexId> root;
    std::optional<int> size;
    BudgetOptions budget;
    bool timing = false;
};

struct GenOptions {
    int n = 0;
    int k = 0;
    std::string shape = "random";
    std::uint64_t seed = 0;
    std::string out_path;
    bool timing = false;
};

struct VerifyOptions {
    int n = 0;
    int k = 0;
    std::string mode = "exhaustive";  // or "sample"
    long long samples = 10000;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string csv_path;  // optional per-outcome summary
    BudgetOptions budget;
    bool timing = false;
};

// Aggregate of a verification campaign.  Events hold the interesting
// per-instance outcomes (none = counterexample candidate, unknown = budget
// ran out) with enough data to reproduce the instance.
struct VerifyEvent {
    unsigned long long index = 0;
    std::string outcome;  // "none" | "unknown"
    std::uint64_t seed = 0;
    std::string instance_text;
};

struct VerifySummary {
    unsigned long long total = 0;
    unsigned long long found = 0;
    unsigned long long none = 0;
    unsigned long long unknown = 0;
    std::vector<VerifyEvent> events;  // sorted by index
};

// Campaign driver behind cmd_verify, reusable from tests.  Work is split by
// instance across `jobs` workers; the summary does not depend on the
// scheduling.
VerifySummary run_verification(const VerifyOptions& opts);

int cmd_validate(const std::string& path, std::ostream& out);
int cmd_solve(const std::string& path, const SolveOptions& opts, std::ostream& out);
int cmd_verify(const VerifyOptions& opts, std::ostream& out);
int cmd_reduce_3dm(const std::string& in_path, const std::string& out_path,
                   bool timing, std::ostream& out);
int cmd_gen(const GenOptions& opts, std::ostream& out);

}  // namespace rba
