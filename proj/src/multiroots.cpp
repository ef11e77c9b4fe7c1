#include <algorithm>
#include <string>

#include "rba/constructive.hpp"

namespace rba {

RainbowCertificate greedy_extend(const ColoredInstance& inst, const Seed& seed,
                                 GreedyStats* stats) {
    const int n = inst.n();
    const int k = inst.k();
    if (k != n - 1)
        throw PreconditionError(PreconditionCode::WrongColorCount,
                                "greedy extension requires k = n-1");
    if (CheckResult res = check_certificate(inst, seed); !res)
        throw PreconditionError(PreconditionCode::NotRainbowSeed,
                                "seed is not a rainbow arborescence: " + res.detail);

    std::vector<char> in_tree(n + 1, 0);
    for (VertexId v : seed.spanned) in_tree[v] = 1;
    for (VertexId m : rho_profile(inst).multi_roots())
        if (!in_tree[m])
            throw PreconditionError(PreconditionCode::SeedMissingMultiRoot,
                                    "seed misses multi-root " + std::to_string(m));

    std::vector<ColoredArc> arcs = seed.arcs;
    std::vector<char> used(k + 1, 0);
    for (const ColoredArc& a : arcs) used[a.color] = 1;
    VertexId root = seed.root;
    int tree_size = static_cast<int>(seed.spanned.size());
    GreedyStats local;

    int guard = 0;
    while (tree_size < n) {
        if (++guard > 4 * n) throw std::logic_error("greedy extension did not progress");

        // Grow by the least unused color rooted inside the tree.
        bool grown = false;
        for (ColorId c = 1; c <= k && !grown; ++c) {
            if (used[c] || !in_tree[inst.root_of(c)]) continue;
            for (const ColoredArc& a : inst.arcs_of(c)) {
                if (!in_tree[a.tail] || in_tree[a.head]) continue;
                arcs.push_back(a);
                in_tree[a.head] = 1;
                used[c] = 1;
                ++tree_size;
                ++local.grows;
                grown = true;
                break;
            }
            if (!grown)
                throw std::logic_error("color rooted inside the tree has no crossing arc");
        }
        if (grown) continue;

        // Every unused color is rooted outside: take the least one and its
        // arc e = (v, root) into the current root.
        ColorId c = 0;
        for (ColorId cc = 1; cc <= k && c == 0; ++cc)
            if (!used[cc]) c = cc;
        if (c == 0) throw std::logic_error("tree not spanning but all colors used");
        std::optional<ColoredArc> e = inst.in_arc(c, root);
        if (!e) throw std::logic_error("current root is the root of an unused color");

        if (!in_tree[e->tail]) {
            arcs.push_back(*e);
            in_tree[e->tail] = 1;
            used[c] = 1;
            root = e->tail;
            ++tree_size;
            ++local.grows;
        } else {
            // Exchange: B <- B + e - f with f the tree arc entering e's
            // tail; the freed color is rooted inside, so the next round
            // grows.
            auto f = std::find_if(arcs.begin(), arcs.end(),
                                  [&](const ColoredArc& a) { return a.head == e->tail; });
            if (f == arcs.end()) throw std::logic_error("exchange target has no tree in-arc");
            used[f->color] = 0;
            used[c] = 1;
            root = e->tail;
            *f = *e;
            ++local.swaps;
        }
    }

    if (stats) *stats = local;
    std::sort(arcs.begin(), arcs.end());
    RainbowCertificate cert;
    cert.arcs = std::move(arcs);
    cert.root = root;
    cert.spanned.resize(n);
    for (VertexId v = 1; v <= n; ++v) cert.spanned[v - 1] = v;
    return cert;
}

RainbowCertificate solve_two_multiroots(const ColoredInstance& inst) {
    const int n = inst.n();
    const int k = inst.k();
    if (k != n - 1)
        throw PreconditionError(PreconditionCode::WrongColorCount,
                                "two-multiroots solver requires k = n-1");
    RhoProfile rho = rho_profile(inst);
    std::vector<VertexId> multis = rho.multi_roots();
    if (multis.size() > 2)
        throw PreconditionError(PreconditionCode::TooManyMultiRoots,
                                "instance has " + std::to_string(multis.size()) +
                                    " multi-roots");

    if (multis.size() <= 1) {
        VertexId r = 1;
        for (VertexId v = 2; v <= n; ++v)
            if (rho.rho[v].size() > rho.rho[r].size()) r = v;
        return greedy_extend(inst, singleton_certificate(r));
    }

    // Grow arc-disjoint rainbow in-arborescences from the two multi-roots
    // until their vertex sets meet.
    const VertexId x[2] = {multis[0], multis[1]};
    std::vector<char> in_set[2] = {std::vector<char>(n + 1, 0), std::vector<char>(n + 1, 0)};
    std::vector<ColoredArc> out_arc[2] = {std::vector<ColoredArc>(n + 1),
                                          std::vector<ColoredArc>(n + 1)};
    in_set[0][x[0]] = 1;
    in_set[1][x[1]] = 1;
    std::vector<char> used(k + 1, 0);
    VertexId common = 0;

    for (int round = 0; round < n && common == 0; ++round) {
        ColorId c = 0;
        for (ColorId cc = 1; cc <= k && c == 0; ++cc)
            if (!used[cc]) c = cc;
        if (c == 0) throw std::logic_error("dual growth ran out of colors");
        int side = in_set[0][inst.root_of(c)] ? 1 : 0;
        if (in_set[side][inst.root_of(c)])
            throw std::logic_error("color rooted inside both growth sets");
        bool added = false;
        for (const ColoredArc& a : inst.arcs_of(c)) {
            if (in_set[side][a.tail] || !in_set[side][a.head]) continue;
            used[c] = 1;
            in_set[side][a.tail] = 1;
            out_arc[side][a.tail] = a;
            if (in_set[1 - side][a.tail]) common = a.tail;
            added = true;
            break;
        }
        if (!added) throw std::logic_error("dual growth found no entering arc");
    }
    if (common == 0) throw std::logic_error("growth sets never met within n-1 augmentations");

    // The two walks common -> x_j along out-arcs are arc-disjoint directed
    // paths sharing only `common`; their union seeds the greedy extension.
    std::vector<ColoredArc> seed_arcs;
    std::vector<VertexId> spanned{common};
    for (int side = 0; side < 2; ++side) {
        VertexId v = common;
        while (v != x[side]) {
            const ColoredArc& a = out_arc[side][v];
            seed_arcs.push_back(a);
            spanned.push_back(a.head);
            v = a.head;
        }
    }
    std::sort(seed_arcs.begin(), seed_arcs.end());
    std::sort(spanned.begin(), spanned.end());
    RainbowCertificate seed;
    seed.arcs = std::move(seed_arcs);
    seed.root = common;
    seed.spanned = std::move(spanned);
    return greedy_extend(inst, seed);
}

}  // namespace rba
