#include "rba/generate.hpp"

#include <algorithm>
#include <limits>

#include "rba/exact.hpp"

namespace rba {

int Rng::uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % span + 1) % span;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (rem != 0 && r > max - rem);
    return lo + static_cast<int>(r % span);
}

std::vector<int> Rng::permutation(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    for (int i = n - 1; i >= 1; --i) std::swap(v[i], v[uniform(0, i)]);
    return v;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

namespace {

Arborescence arborescence_from_parent_map(int n, const std::vector<VertexId>& parent) {
    Arborescence arb;
    arb.parent = parent;
    arb.children.assign(n + 1, {});
    for (VertexId v = 1; v <= n; ++v) {
        if (parent[v] == 0)
            arb.root = v;
        else
            arb.children[parent[v]].push_back(v);
    }
    return arb;
}

}  // namespace

Arborescence random_arborescence(int n, Rng& rng, std::optional<VertexId> forced_root) {
    if (n < 2) throw std::invalid_argument("random_arborescence requires n >= 2");
    const VertexId root = forced_root ? *forced_root : rng.uniform(1, n);
    if (root < 1 || root > n) throw std::invalid_argument("forced root outside [1..n]");

    // Wilson: loop-erased random walks on K_n toward the current tree.  The
    // successor map records the walk with loops erased implicitly.
    std::vector<char> in_tree(n + 1, 0);
    std::vector<VertexId> successor(n + 1, 0);
    std::vector<VertexId> parent(n + 1, 0);
    in_tree[root] = 1;
    for (VertexId start = 1; start <= n; ++start) {
        if (in_tree[start]) continue;
        VertexId u = start;
        while (!in_tree[u]) {
            int step = rng.uniform(1, n - 1);
            if (step >= u) ++step;  // uniform neighbor of u on K_n
            successor[u] = step;
            u = step;
        }
        u = start;
        while (!in_tree[u]) {
            in_tree[u] = 1;
            parent[u] = successor[u];  // arc (successor, u): oriented away from the root
            u = successor[u];
        }
    }
    return arborescence_from_parent_map(n, parent);
}

std::optional<Shape> shape_from_name(const std::string& name) {
    std::string s = name;
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "random") return Shape::Random;
    if (s == "all-paths") return Shape::AllPaths;
    if (s == "paths-and-stars" || s == "paths-stars") return Shape::PathsAndStars;
    if (s == "two-multiroots") return Shape::TwoMultiroots;
    if (s == "underlying-tree" || s == "tree") return Shape::UnderlyingTree;
    if (s == "shared-root") return Shape::SharedRoot;
    return std::nullopt;
}

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::Random: return "random";
        case Shape::AllPaths: return "all-paths";
        case Shape::PathsAndStars: return "paths-and-stars";
        case Shape::TwoMultiroots: return "two-multiroots";
        case Shape::UnderlyingTree: return "underlying-tree";
        case Shape::SharedRoot: return "shared-root";
    }
    return "?";
}

namespace {

Arborescence random_path(int n, Rng& rng) {
    std::vector<int> order = rng.permutation(n);
    std::vector<VertexId> parent(n + 1, 0);
    for (int i = 1; i < n; ++i) parent[order[i]] = order[i - 1];
    return arborescence_from_parent_map(n, parent);
}

Arborescence star_at(int n, VertexId r) {
    std::vector<VertexId> parent(n + 1, r);
    parent[0] = 0;
    parent[r] = 0;
    return arborescence_from_parent_map(n, parent);
}

Arborescence orient_tree(int n, const std::vector<std::vector<VertexId>>& adj, VertexId root) {
    std::vector<VertexId> parent(n + 1, 0);
    std::vector<char> seen(n + 1, 0);
    std::vector<VertexId> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    return arborescence_from_parent_map(n, parent);
}

}  // namespace

ColoredInstance generate(const GenSpec& spec) {
    const int n = spec.n;
    const int k = spec.k;
    if (n < 2 || k < 1)
        throw PreconditionError(PreconditionCode::InfeasibleSpec, "need n >= 2 and k >= 1");
    Rng rng(spec.seed);
    std::vector<Arborescence> colors(k + 1);

    switch (spec.shape) {
        case Shape::Random:
            for (ColorId c = 1; c <= k; ++c) colors[c] = random_arborescence(n, rng);
            break;
        case Shape::AllPaths:
            for (ColorId c = 1; c <= k; ++c) colors[c] = random_path(n, rng);
            break;
        case Shape::PathsAndStars:
            for (ColorId c = 1; c <= k; ++c)
                colors[c] = rng.uniform(0, 1) ? star_at(n, rng.uniform(1, n))
                                              : random_path(n, rng);
            break;
        case Shape::TwoMultiroots: {
            // All k roots on two vertices, each taken at least twice.
            if (k < 4)
                throw PreconditionError(PreconditionCode::InfeasibleSpec,
                                        "two multi-roots need k >= 4 (sum of rho >= 4)");
            VertexId x1 = rng.uniform(1, n);
            VertexId x2 = rng.uniform(1, n - 1);
            if (x2 >= x1) ++x2;
            std::vector<char> side(k + 1, 0);
            for (;;) {
                int ones = 0;
                for (ColorId c = 1; c <= k; ++c) {
                    side[c] = static_cast<char>(rng.uniform(0, 1));
                    ones += side[c];
                }
                if (ones >= 2 && k - ones >= 2) break;
            }
            for (ColorId c = 1; c <= k; ++c)
                colors[c] = random_arborescence(n, rng, side[c] ? x2 : x1);
            break;
        }
        case Shape::UnderlyingTree: {
            Arborescence base = random_arborescence(n, rng);
            std::vector<std::vector<VertexId>> adj(n + 1);
            for (VertexId v = 1; v <= n; ++v)
                if (VertexId t = base.parent[v]; t != 0) {
                    adj[v].push_back(t);
                    adj[t].push_back(v);
                }
            for (ColorId c = 1; c <= k; ++c)
                colors[c] = orient_tree(n, adj, rng.uniform(1, n));
            break;
        }
        case Shape::SharedRoot: {
            VertexId r = rng.uniform(1, n);
            for (ColorId c = 1; c <= k; ++c) colors[c] = random_arborescence(n, rng, r);
            break;
        }
    }
    return instance_from_arborescences(n, colors);
}

InstanceEnumerator::InstanceEnumerator(int n, int k) : n_(n), k_(k) {
    constexpr unsigned long long kCap = 100'000'000ULL;
    if (k < 1) throw PreconditionError(PreconditionCode::TooLarge, "need k >= 1");
    arbs_ = enumerate_arborescences(n);  // rejects n outside [2, 5]
    const unsigned long long base = arbs_.size();
    total_ = 1;
    for (int i = 0; i < k; ++i) {
        if (total_ > kCap / base)
            throw PreconditionError(PreconditionCode::TooLarge,
                                    "instance family exceeds the enumeration cap");
        total_ *= base;
    }
}

ColoredInstance InstanceEnumerator::at(unsigned long long index) const {
    if (index >= total_) throw std::out_of_range("instance index out of range");
    const unsigned long long base = arbs_.size();
    std::vector<Arborescence> colors(k_ + 1);
    for (ColorId c = k_; c >= 1; --c) {
        colors[c] = arbs_[index % base];
        index /= base;
    }
    return instance_from_arborescences(n_, colors);
}

std::optional<ColoredInstance> InstanceEnumerator::next() {
    if (cursor_ >= total_) return std::nullopt;
    return at(cursor_++);
}

}  // namespace rba
