#include <algorithm>
#include <numeric>
#include <string>

#include "rba/constructive.hpp"

namespace rba {

namespace {

// The cycle through the least vertex not reachable from r along the current
// selection, listed in arc direction.
std::vector<VertexId> find_cycle(const std::vector<ColoredArc>& sel, VertexId r, int n) {
    std::vector<std::vector<VertexId>> out(n + 1);
    std::vector<VertexId> tail_of(n + 1, 0);
    for (const ColoredArc& a : sel) {
        out[a.tail].push_back(a.head);
        tail_of[a.head] = a.tail;
    }
    std::vector<char> reached(n + 1, 0);
    std::vector<VertexId> stack{r};
    reached[r] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : out[v])
            if (!reached[w]) {
                reached[w] = 1;
                stack.push_back(w);
            }
    }
    for (VertexId v = 1; v <= n; ++v) {
        if (reached[v]) continue;
        // Walk backwards along in-arcs; every unreached vertex has one, so
        // the walk must close a cycle.
        std::vector<int> seen_at(n + 1, -1);
        std::vector<VertexId> walk;
        VertexId u = v;
        while (seen_at[u] < 0) {
            seen_at[u] = static_cast<int>(walk.size());
            walk.push_back(u);
            u = tail_of[u];
        }
        std::vector<VertexId> cycle(walk.begin() + seen_at[u], walk.end());
        std::reverse(cycle.begin(), cycle.end());  // arc direction
        return cycle;
    }
    return {};
}

}  // namespace

RainbowCertificate solve_all_paths(const ColoredInstance& inst, AllPathsStats* stats) {
    const int n = inst.n();
    const int k = inst.k();
    if (k != n - 1)
        throw PreconditionError(PreconditionCode::WrongColorCount,
                                "all-paths solver requires k = n-1");
    ShapeReport shape = classify_shape(inst);
    if (!shape.all_paths)
        throw PreconditionError(PreconditionCode::NotAllPaths, "every color must be a path");

    // Root-to-leaf order of every path and each vertex's position on it.
    std::vector<std::vector<VertexId>> seq(k + 1);
    std::vector<std::vector<int>> pos(k + 1, std::vector<int>(n + 1, 0));
    for (ColorId c = 1; c <= k; ++c) {
        VertexId v = inst.root_of(c);
        for (int i = 0; i < n; ++i) {
            seq[c].push_back(v);
            pos[c][v] = i;
            const auto& kids = inst.children_in(c, v);
            if (kids.empty()) break;
            v = kids.front();
        }
    }

    // Initial selection: per color, the arc into the vertex closest to the
    // leaf among those still without an incoming arc.
    std::vector<ColoredArc> sel(k + 1);
    std::vector<char> has_in(n + 1, 0);
    for (ColorId c = 1; c <= k; ++c) {
        bool placed = false;
        for (int i = n - 1; i >= 1 && !placed; --i) {
            VertexId v = seq[c][i];
            if (has_in[v]) continue;
            sel[c] = ColoredArc{c, seq[c][i - 1], v};
            has_in[v] = 1;
            placed = true;
        }
        if (!placed)
            throw std::logic_error("all-paths: no selectable vertex on color " +
                                   std::to_string(c));
    }
    VertexId r = 0;
    for (VertexId v = 1; v <= n; ++v)
        if (!has_in[v]) r = v;

    auto potential = [&] {
        int sum = 0;
        for (ColorId c = 1; c <= k; ++c) sum += pos[c][sel[c].head] - pos[c][r];
        return sum;
    };
    auto assert_between_root_and_leaf = [&] {
        for (ColorId c = 1; c <= k; ++c)
            if (pos[c][sel[c].tail] < pos[c][r])
                throw std::logic_error("all-paths: selection left the r-to-leaf segment");
    };
    assert_between_root_and_leaf();

    const int initial_potential = potential();
    if (stats) {
        *stats = {};
        stats->initial_potential = initial_potential;
    }

    // Cycle repair: shift every cycle arc one step toward the root on its
    // own path; the potential drops by the cycle length each round.
    int last_potential = initial_potential;
    int rounds = 0;
    for (;;) {
        std::vector<ColoredArc> current(sel.begin() + 1, sel.end());
        std::vector<VertexId> cycle = find_cycle(current, r, n);
        if (cycle.empty()) break;
        if (stats && rounds == 0) stats->initial_had_cycle = true;
        const int m = static_cast<int>(cycle.size());
        std::vector<std::pair<ColorId, ColoredArc>> replacements;
        for (int i = 0; i < m; ++i) {
            VertexId u = cycle[i];
            VertexId w = cycle[(i + 1) % m];
            ColorId c = 0;
            for (ColorId cc = 1; cc <= k; ++cc)
                if (sel[cc].tail == u && sel[cc].head == w) {
                    c = cc;
                    break;
                }
            if (c == 0) throw std::logic_error("all-paths: cycle arc not in selection");
            if (pos[c][u] < 1) throw std::logic_error("all-paths: no arc enters the cycle vertex");
            replacements.emplace_back(c, ColoredArc{c, seq[c][pos[c][u] - 1], u});
        }
        for (const auto& [c, arc] : replacements) sel[c] = arc;
        ++rounds;
        assert_between_root_and_leaf();
        const int now = potential();
        if (now >= last_potential)
            throw std::logic_error("all-paths: potential did not decrease");
        if (rounds > initial_potential)
            throw std::logic_error("all-paths: more repair rounds than the initial potential");
        last_potential = now;
        if (stats) {
            stats->rounds = rounds;
            stats->round_potentials.push_back(now);
        }
    }

    return certificate_from_arcs({sel.begin() + 1, sel.end()});
}

RainbowCertificate solve_paths_and_stars(const ColoredInstance& inst) {
    const int n = inst.n();
    const int k = inst.k();
    if (k != n - 1)
        throw PreconditionError(PreconditionCode::WrongColorCount,
                                "paths-and-stars solver requires k = n-1");
    ShapeReport shape = classify_shape(inst);
    if (!shape.all_paths_or_stars)
        throw PreconditionError(PreconditionCode::ShapeViolation,
                                "every color must be a path or a star");
    if (shape.all_paths) return solve_all_paths(inst);

    // Peel the least star color; the reduction keeps paths paths and stars
    // stars, so the recursion stays inside the solvable class.
    ColorId star = 0;
    for (ColorId c = 1; c <= k && star == 0; ++c)
        if (shape.is_star[c]) star = c;

    StarReduction red = star_reduce(inst, star);
    RainbowCertificate sub = solve_paths_and_stars(red.reduced);
    return star_lift(sub, red.lift, inst);
}

}  // namespace rba
