#include "rba/instance.hpp"

#include <algorithm>
#include <string>

namespace rba {

namespace {

// Walks parent links color by color; any vertex that cannot reach the root
// sits on (or hangs off) a cycle.
void check_acyclic(const Arborescence& arb, ColorId c) {
    const int n = arb.n();
    std::vector<int> state(n + 1, 0);  // 0 unseen, 1 on current walk, 2 done
    for (VertexId start = 1; start <= n; ++start) {
        if (state[start] != 0) continue;
        VertexId v = start;
        while (v != 0 && state[v] == 0) {
            state[v] = 1;
            v = arb.parent[v];
        }
        if (v != 0 && state[v] == 1)
            throw InstanceError(InstanceErrorCode::CycleInColor,
                                "color " + std::to_string(c) + " contains a cycle through vertex " +
                                    std::to_string(v),
                                c, v);
        for (VertexId u = start; u != 0 && state[u] == 1; u = arb.parent[u]) state[u] = 2;
    }
}

Arborescence arborescence_from_parents(std::vector<VertexId> parent, ColorId c) {
    Arborescence arb;
    const int n = static_cast<int>(parent.size()) - 1;
    arb.parent = std::move(parent);
    arb.children.assign(n + 1, {});
    int roots = 0;
    for (VertexId v = 1; v <= n; ++v) {
        if (arb.parent[v] == 0) {
            arb.root = v;
            ++roots;
        } else {
            arb.children[arb.parent[v]].push_back(v);
        }
    }
    if (roots != 1)
        throw InstanceError(InstanceErrorCode::ColorNotSpanning,
                            "color " + std::to_string(c) + " has " + std::to_string(roots) +
                                " roots",
                            c);
    check_acyclic(arb, c);
    return arb;
}

}  // namespace

std::vector<ColoredArc> ColoredInstance::all_arcs() const {
    std::vector<ColoredArc> out;
    out.reserve(static_cast<size_t>(k_) * (n_ - 1));
    for (ColorId c = 1; c <= k_; ++c)
        out.insert(out.end(), sorted_arcs_[c].begin(), sorted_arcs_[c].end());
    return out;
}

ColoredInstance validate_instance(const std::vector<ColoredArc>& raw, int n, int k) {
    if (n < 2) throw std::invalid_argument("instance requires n >= 2");
    if (k < 1) throw std::invalid_argument("instance requires k >= 1");

    std::vector<std::vector<VertexId>> parent(k + 1);
    for (auto& p : parent) p.assign(n + 1, 0);

    for (const ColoredArc& a : raw) {
        if (a.color < 1 || a.color > k)
            throw InstanceError(InstanceErrorCode::UnknownColor,
                                "arc color " + std::to_string(a.color) + " outside [1.." +
                                    std::to_string(k) + "]",
                                a.color);
        if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n)
            throw InstanceError(InstanceErrorCode::UnknownVertex,
                                "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                    ") outside [1.." + std::to_string(n) + "]",
                                a.color);
        if (a.tail == a.head)
            throw InstanceError(InstanceErrorCode::CycleInColor,
                                "self-loop at vertex " + std::to_string(a.head) + " in color " +
                                    std::to_string(a.color),
                                a.color, a.head);
        VertexId& slot = parent[a.color][a.head];
        if (slot != 0) {
            if (slot == a.tail)
                throw InstanceError(InstanceErrorCode::DuplicateArc,
                                    "duplicate arc into vertex " + std::to_string(a.head) +
                                        " in color " + std::to_string(a.color),
                                    a.color, a.head);
            throw InstanceError(InstanceErrorCode::MultipleIncoming,
                                "vertex " + std::to_string(a.head) +
                                    " has two incoming arcs in color " + std::to_string(a.color),
                                a.color, a.head);
        }
        slot = a.tail;
    }

    ColoredInstance inst;
    inst.n_ = n;
    inst.k_ = k;
    inst.colors_.resize(k + 1);
    inst.sorted_arcs_.resize(k + 1);
    for (ColorId c = 1; c <= k; ++c) {
        int arcs = 0;
        for (VertexId v = 1; v <= n; ++v)
            if (parent[c][v] != 0) ++arcs;
        if (arcs != n - 1)
            throw InstanceError(InstanceErrorCode::ColorNotSpanning,
                                "color " + std::to_string(c) + " has " + std::to_string(arcs) +
                                    " arcs, expected " + std::to_string(n - 1),
                                c);
        inst.colors_[c] = arborescence_from_parents(std::move(parent[c]), c);
        auto& sorted = inst.sorted_arcs_[c];
        sorted.reserve(n - 1);
        for (VertexId v = 1; v <= n; ++v)
            if (VertexId t = inst.colors_[c].parent[v]; t != 0)
                sorted.push_back(ColoredArc{c, t, v});
        std::sort(sorted.begin(), sorted.end());
    }
    return inst;
}

ColoredInstance instance_from_arborescences(int n, const std::vector<Arborescence>& colors) {
    std::vector<ColoredArc> arcs;
    const int k = static_cast<int>(colors.size()) - 1;
    for (ColorId c = 1; c <= k; ++c)
        for (VertexId v = 1; v <= static_cast<int>(colors[c].parent.size()) - 1; ++v)
            if (VertexId t = colors[c].parent[v]; t != 0) arcs.push_back(ColoredArc{c, t, v});
    return validate_instance(arcs, n, k);
}

std::vector<VertexId> RhoProfile::multi_roots() const {
    std::vector<VertexId> out;
    for (VertexId v = 1; v < static_cast<VertexId>(rho.size()); ++v)
        if (rho[v].size() >= 2) out.push_back(v);
    return out;
}

std::vector<VertexId> RhoProfile::non_roots() const {
    std::vector<VertexId> out;
    for (VertexId v = 1; v < static_cast<VertexId>(rho.size()); ++v)
        if (rho[v].empty()) out.push_back(v);
    return out;
}

RhoProfile rho_profile(const ColoredInstance& inst) {
    RhoProfile profile;
    profile.rho.assign(inst.n() + 1, {});
    for (ColorId c = 1; c <= inst.k(); ++c) profile.rho[inst.root_of(c)].push_back(c);
    return profile;
}

ShapeReport classify_shape(const ColoredInstance& inst) {
    const int n = inst.n();
    const int k = inst.k();
    ShapeReport report;
    report.is_path.assign(k + 1, false);
    report.is_star.assign(k + 1, false);
    report.all_paths = report.all_paths_or_stars = report.all_stars = true;
    for (ColorId c = 1; c <= k; ++c) {
        const Arborescence& arb = inst.color(c);
        int leaves = 0;
        bool non_root_internal = false;
        for (VertexId v = 1; v <= n; ++v) {
            if (arb.is_leaf(v))
                ++leaves;
            else if (v != arb.root)
                non_root_internal = true;
        }
        report.is_path[c] = (leaves == 1);
        report.is_star[c] = !non_root_internal;
        report.all_paths = report.all_paths && report.is_path[c];
        report.all_stars = report.all_stars && report.is_star[c];
        report.all_paths_or_stars =
            report.all_paths_or_stars && (report.is_path[c] || report.is_star[c]);
    }

    // Underlying tree: every color orients the same undirected edge set.
    auto undirected = [&](ColorId c) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        edges.reserve(n - 1);
        for (VertexId v = 1; v <= n; ++v)
            if (VertexId t = inst.parent_in(c, v); t != 0)
                edges.emplace_back(std::min(t, v), std::max(t, v));
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    report.underlying_tree = true;
    auto first = undirected(1);
    for (ColorId c = 2; c <= k && report.underlying_tree; ++c)
        report.underlying_tree = (undirected(c) == first);

    report.multi_root_count = static_cast<int>(rho_profile(inst).multi_roots().size());
    return report;
}

SubInstance restrict_instance(const ColoredInstance& inst,
                              std::span<const VertexId> vertices,
                              std::span<const ColorId> colors) {
    SubInstance sub;
    sub.to_parent_vertex.assign(vertices.size() + 1, 0);
    sub.to_parent_color.assign(colors.size() + 1, 0);
    std::vector<int> to_sub(inst.n() + 1, 0);
    {
        int next = 1;
        for (VertexId v : vertices) {
            sub.to_parent_vertex[next] = v;
            to_sub[v] = next++;
        }
    }
    std::vector<ColoredArc> arcs;
    int next_color = 1;
    for (ColorId c : colors) {
        sub.to_parent_color[next_color] = c;
        for (const ColoredArc& a : inst.arcs_of(c))
            if (to_sub[a.tail] != 0 && to_sub[a.head] != 0)
                arcs.push_back(ColoredArc{next_color, to_sub[a.tail], to_sub[a.head]});
        ++next_color;
    }
    sub.inst = validate_instance(arcs, static_cast<int>(vertices.size()),
                                 static_cast<int>(colors.size()));
    return sub;
}

}  // namespace rba
