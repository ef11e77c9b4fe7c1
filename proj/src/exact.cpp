#include "rba/exact.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_set>

namespace rba {

namespace {

using Clock = std::chrono::steady_clock;

struct WordsHash {
    size_t operator()(const std::vector<std::uint64_t>& w) const {
        std::uint64_t h = 14695981039346656037ULL;
        for (std::uint64_t x : w) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

// Depth-first search over (spanned set, used colors).  Whether a state can
// still be completed depends only on that pair, so failed states are safe
// to memoize across the whole solve, including across candidate roots.
class RainbowSearcher {
public:
    RainbowSearcher(const ColoredInstance& inst, const SearchConfig& cfg)
        : inst_(inst),
          target_(cfg.target_size.value_or(inst.n() - 1)),
          required_root_(cfg.required_root),
          node_budget_(cfg.node_budget),
          start_(Clock::now()) {
        if (target_ < 1 || target_ > inst.n() - 1)
            throw std::invalid_argument("target_size must be in [1, n-1]");
        if (required_root_ && (*required_root_ < 1 || *required_root_ > inst.n()))
            throw std::invalid_argument("required_root outside [1..n]");
        if (cfg.time_budget_seconds)
            deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*cfg.time_budget_seconds));
        words_spanned_ = (inst.n() + 64) / 64;  // slot 0 included, harmless
        words_used_ = (inst.k() + 64) / 64;
    }

    std::optional<RainbowCertificate> run(SearchStats* stats) {
        const int n = inst_.n();
        std::optional<RainbowCertificate> found;
        for (VertexId r = 1; r <= n && !found; ++r) {
            if (required_root_ && r != *required_root_) continue;
            in_tree_.assign(n + 1, 0);
            used_.assign(inst_.k() + 1, 0);
            in_tree_[r] = 1;
            tree_size_ = 1;
            used_count_ = 0;
            chosen_.clear();
            if (dfs()) {
                RainbowCertificate cert;
                cert.arcs = chosen_;
                std::sort(cert.arcs.begin(), cert.arcs.end());
                cert.root = r;
                for (VertexId v = 1; v <= n; ++v)
                    if (in_tree_[v]) cert.spanned.push_back(v);
                found = std::move(cert);
            }
        }
        if (stats) stats->nodes = nodes_;
        return found;
    }

private:
    void bump_node() {
        ++nodes_;
        if (node_budget_ && nodes_ > *node_budget_)
            throw BudgetExhausted("node budget exhausted after " + std::to_string(nodes_) +
                                      " nodes",
                                  nodes_, elapsed());
        if (deadline_ && (nodes_ & 0x3ff) == 0 && Clock::now() > *deadline_)
            throw BudgetExhausted("time budget exhausted after " + std::to_string(nodes_) +
                                      " nodes",
                                  nodes_, elapsed());
    }

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

    std::vector<std::uint64_t> encode_state() const {
        std::vector<std::uint64_t> key(words_spanned_ + words_used_, 0);
        for (VertexId v = 1; v <= inst_.n(); ++v)
            if (in_tree_[v]) key[v / 64] |= 1ULL << (v % 64);
        for (ColorId c = 1; c <= inst_.k(); ++c)
            if (used_[c]) key[words_spanned_ + c / 64] |= 1ULL << (c % 64);
        return key;
    }

    // Necessary condition: an unspanned vertex can only ever be added with
    // an unused color not rooted there, so if all unused colors share a
    // root that is still unspanned, that vertex is unreachable.
    bool prune() const {
        const int needed = target_ - static_cast<int>(chosen_.size());
        if (inst_.k() - used_count_ < needed) return true;
        VertexId shared = 0;
        bool all_shared = true;
        for (ColorId c = 1; c <= inst_.k() && all_shared; ++c) {
            if (used_[c]) continue;
            if (shared == 0)
                shared = inst_.root_of(c);
            else if (inst_.root_of(c) != shared)
                all_shared = false;
        }
        int addable = inst_.n() - tree_size_;
        if (all_shared && shared != 0 && !in_tree_[shared]) --addable;
        return addable < needed;
    }

    bool dfs() {
        if (static_cast<int>(chosen_.size()) == target_) return true;
        bump_node();
        if (prune()) return false;
        auto key = encode_state();
        if (failed_.contains(key)) return false;

        for (ColorId c = 1; c <= inst_.k(); ++c) {
            if (used_[c]) continue;
            for (const ColoredArc& a : inst_.arcs_of(c)) {
                if (!in_tree_[a.tail] || in_tree_[a.head]) continue;
                chosen_.push_back(a);
                in_tree_[a.head] = 1;
                used_[c] = 1;
                ++tree_size_;
                ++used_count_;
                if (dfs()) return true;
                chosen_.pop_back();
                in_tree_[a.head] = 0;
                used_[c] = 0;
                --tree_size_;
                --used_count_;
            }
        }
        failed_.insert(std::move(key));
        return false;
    }

    const ColoredInstance& inst_;
    int target_;
    std::optional<VertexId> required_root_;
    std::optional<long long> node_budget_;
    Clock::time_point start_;
    std::optional<Clock::time_point> deadline_;
    int words_spanned_ = 0;
    int words_used_ = 0;

    long long nodes_ = 0;
    std::vector<char> in_tree_, used_;
    int tree_size_ = 0;
    int used_count_ = 0;
    std::vector<ColoredArc> chosen_;
    std::unordered_set<std::vector<std::uint64_t>, WordsHash> failed_;
};

// Union-find with rollback; no path compression so undo is a plain stack.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(n + 1), size_(n + 1, 1) {
        for (int v = 0; v <= n; ++v) parent_[v] = v;
    }

    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        trail_.push_back(b);
        return true;
    }

    size_t mark() const { return trail_.size(); }

    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            int b = trail_.back();
            trail_.pop_back();
            size_[parent_[b]] -= size_[b];
            parent_[b] = b;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> trail_;
};

class SpanningEnumerator {
public:
    SpanningEnumerator(const ColoredInstance& inst, std::optional<VertexId> required_root,
                       const std::function<bool(const RainbowCertificate&)>& visit,
                       std::optional<long long> step_budget)
        : inst_(inst),
          required_root_(required_root),
          visit_(visit),
          step_budget_(step_budget),
          dsu_(inst.n()),
          has_in_(inst.n() + 1, 0) {}

    long long run() {
        recurse(1, 0);
        return count_;
    }

private:
    void bump() {
        ++steps_;
        if (step_budget_ && steps_ > *step_budget_)
            throw BudgetExhausted("enumeration budget exhausted", steps_, 0.0);
    }

    void emit() {
        ++count_;
        if (!visit_) return;
        RainbowCertificate cert;
        cert.arcs = chosen_;
        std::sort(cert.arcs.begin(), cert.arcs.end());
        cert.root = 0;
        for (VertexId v = 1; v <= inst_.n(); ++v) {
            cert.spanned.push_back(v);
            if (!has_in_[v]) cert.root = v;
        }
        if (!visit_(cert)) stop_ = true;
    }

    // A vertex with no incoming arc yet whose every undecided color is
    // either rooted there or already in its component can never be covered;
    // components only merge, so this is permanent.  One such vertex may
    // still become the root (none when the root is fixed elsewhere).
    bool dead_end(ColorId c) const {
        int stuck = 0;
        const int allowed = required_root_ ? 0 : 1;
        for (VertexId v = 1; v <= inst_.n(); ++v) {
            if (has_in_[v]) continue;
            if (required_root_ && v == *required_root_) continue;
            bool coverable = false;
            for (ColorId cc = c; cc <= inst_.k() && !coverable; ++cc) {
                VertexId t = inst_.parent_in(cc, v);
                coverable = (t != 0 && dsu_.find(t) != dsu_.find(v));
            }
            if (!coverable && ++stuck > allowed) return true;
        }
        return false;
    }

    void recurse(ColorId c, int picked) {
        if (stop_) return;
        bump();
        const int need = inst_.n() - 1;
        if (picked == need) {
            emit();
            return;
        }
        if (c > inst_.k() || picked + (inst_.k() - c + 1) < need) return;
        if (dead_end(c)) return;
        for (const ColoredArc& a : inst_.arcs_of(c)) {
            if (has_in_[a.head]) continue;
            if (required_root_ && a.head == *required_root_) continue;
            size_t mark = dsu_.mark();
            if (!dsu_.unite(a.tail, a.head)) continue;  // would close a cycle
            has_in_[a.head] = 1;
            chosen_.push_back(a);
            recurse(c + 1, picked + 1);
            chosen_.pop_back();
            has_in_[a.head] = 0;
            dsu_.rollback(mark);
            if (stop_) return;
        }
        recurse(c + 1, picked);  // skip this color
    }

    const ColoredInstance& inst_;
    std::optional<VertexId> required_root_;
    const std::function<bool(const RainbowCertificate&)>& visit_;
    std::optional<long long> step_budget_;
    RollbackDsu dsu_;
    std::vector<char> has_in_;
    std::vector<ColoredArc> chosen_;
    long long steps_ = 0;
    long long count_ = 0;
    bool stop_ = false;
};

}  // namespace

std::optional<RainbowCertificate> find_rainbow(const ColoredInstance& inst,
                                               const SearchConfig& cfg, SearchStats* stats) {
    RainbowSearcher searcher(inst, cfg);
    return searcher.run(stats);
}

long long enumerate_rainbow_spanning(const ColoredInstance& inst,
                                     std::optional<VertexId> required_root,
                                     const std::function<bool(const RainbowCertificate&)>& visit,
                                     std::optional<long long> step_budget) {
    SpanningEnumerator en(inst, required_root, visit, step_budget);
    return en.run();
}

long long count_rainbow_spanning(const ColoredInstance& inst,
                                 std::optional<long long> step_budget) {
    return enumerate_rainbow_spanning(inst, std::nullopt, {}, step_budget);
}

std::vector<Arborescence> enumerate_arborescences(int n) {
    if (n < 2 || n > 5)
        throw PreconditionError(PreconditionCode::TooLarge,
                                "enumerate_arborescences supports 2 <= n <= 5");
    std::vector<Arborescence> out;
    std::vector<VertexId> parent(n + 1, 0);

    auto acyclic = [&](VertexId root) {
        for (VertexId start = 1; start <= n; ++start) {
            VertexId v = start;
            int steps = 0;
            while (v != root) {
                v = parent[v];
                if (++steps > n) return false;
            }
        }
        return true;
    };

    for (VertexId root = 1; root <= n; ++root) {
        // Odometer over parent assignments of the non-root vertices, in
        // lexicographic order.
        std::vector<VertexId> slots;
        for (VertexId v = 1; v <= n; ++v)
            if (v != root) slots.push_back(v);
        std::vector<int> digit(slots.size(), 1);
        while (true) {
            bool self_loop = false;
            for (size_t i = 0; i < slots.size(); ++i) {
                parent[slots[i]] = digit[i];
                if (digit[i] == slots[i]) self_loop = true;
            }
            parent[root] = 0;
            if (!self_loop && acyclic(root)) {
                Arborescence arb;
                arb.root = root;
                arb.parent = parent;
                arb.children.assign(n + 1, {});
                for (VertexId v = 1; v <= n; ++v)
                    if (parent[v] != 0) arb.children[parent[v]].push_back(v);
                out.push_back(std::move(arb));
            }
            size_t pos = slots.size();
            while (pos > 0 && digit[pos - 1] == n) digit[--pos] = 1;
            if (pos == 0) break;
            ++digit[pos - 1];
        }
    }
    return out;
}

}  // namespace rba
