#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rba/instance.hpp"

namespace rba {

// Seeded portable randomness: std::mt19937_64 (a fully specified, platform
// independent generator) plus rejection sampling for bounded draws, so the
// same seed reproduces the same instance everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform integer in [lo, hi], inclusive.
    int uniform(int lo, int hi);

    // Fisher-Yates permutation of [1..n].
    std::vector<int> permutation(int n);

private:
    std::mt19937_64 gen_;
};

// splitmix64; used to derive independent child seeds from a campaign seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Uniform over all n^{n-1} spanning arborescences (or the n^{n-2} rooted at
// forced_root): Wilson's loop-erased random walk on the complete graph
// yields a uniform tree, oriented away from a uniform (or forced) root.
Arborescence random_arborescence(int n, Rng& rng,
                                 std::optional<VertexId> forced_root = std::nullopt);

enum class Shape {
    Random,
    AllPaths,
    PathsAndStars,
    TwoMultiroots,
    UnderlyingTree,
    SharedRoot,
};

// Accepts hyphenated or underscored names ("two-multiroots", "all_paths").
std::optional<Shape> shape_from_name(const std::string& name);
const char* shape_name(Shape s);

struct GenSpec {
    int n = 0;
    int k = 0;
    Shape shape = Shape::Random;
    std::uint64_t seed = 0;
};

// Instance in the requested hypothesis class, deterministic given the seed.
// TwoMultiroots places all k roots on exactly two vertices, each taken at
// least twice; infeasible when k < 4 (so n ≤ 4 with k = n-1).
ColoredInstance generate(const GenSpec& spec);

// All (n^{n-1})^k instances on [1..n] with k colors, ordered
// lexicographically by the per-color arborescence indices of
// enumerate_arborescences.  Throws PreconditionError(TooLarge) when the
// total exceeds the desk-scale cap.
class InstanceEnumerator {
public:
    InstanceEnumerator(int n, int k);

    unsigned long long total() const { return total_; }

    // Random access; thread-safe (const).
    ColoredInstance at(unsigned long long index) const;

    // Sequential convenience over at().
    std::optional<ColoredInstance> next();

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Arborescence> arbs_;
    unsigned long long total_ = 0;
    unsigned long long cursor_ = 0;
};

}  // namespace rba
