#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "rba/errors.hpp"

namespace rba {

// Vertices and colors are 1-based contiguous indices; 0 is "none".
using VertexId = int;
using ColorId = int;

// One arc of the colored union G = A_1 ∪ … ∪ A_k.  Member order defines the
// global deterministic arc order (color, tail, head) used for every
// tie-break in the library.
struct ColoredArc {
    ColorId color = 0;
    VertexId tail = 0;
    VertexId head = 0;

    friend auto operator<=>(const ColoredArc&, const ColoredArc&) = default;
};

// A spanning arborescence on [1..n]: the root has no incoming arc, every
// other vertex exactly one.  parent[v] == 0 iff v == root.
struct Arborescence {
    VertexId root = 0;
    std::vector<VertexId> parent;                  // size n+1, slot 0 unused
    std::vector<std::vector<VertexId>> children;   // size n+1, lists sorted

    int n() const { return static_cast<int>(parent.size()) - 1; }
    bool is_leaf(VertexId v) const { return children[v].empty(); }

    friend bool operator==(const Arborescence&, const Arborescence&) = default;
};

// The disjoint union of k spanning arborescences on n vertices.  Immutable
// after construction; build one through validate_instance or
// instance_from_arborescences.
class ColoredInstance {
public:
    // An empty instance; only validate_instance produces populated ones.
    ColoredInstance() = default;

    int n() const { return n_; }
    int k() const { return k_; }

    const Arborescence& color(ColorId c) const { return colors_[c]; }
    VertexId root_of(ColorId c) const { return colors_[c].root; }
    VertexId parent_in(ColorId c, VertexId v) const { return colors_[c].parent[v]; }
    const std::vector<VertexId>& children_in(ColorId c, VertexId v) const {
        return colors_[c].children[v];
    }

    // The unique arc of color c entering v, or nullopt when v is the root.
    std::optional<ColoredArc> in_arc(ColorId c, VertexId v) const {
        VertexId t = colors_[c].parent[v];
        if (t == 0) return std::nullopt;
        return ColoredArc{c, t, v};
    }

    bool has_arc(const ColoredArc& a) const {
        if (a.color < 1 || a.color > k_) return false;
        if (a.head < 1 || a.head > n_) return false;
        return colors_[a.color].parent[a.head] == a.tail && a.tail != 0;
    }

    // Arcs of one color, sorted by (tail, head).
    const std::vector<ColoredArc>& arcs_of(ColorId c) const { return sorted_arcs_[c]; }

    // Every arc of the union in the global deterministic order.
    std::vector<ColoredArc> all_arcs() const;

    friend bool operator==(const ColoredInstance&, const ColoredInstance&) = default;

private:
    friend ColoredInstance validate_instance(const std::vector<ColoredArc>&, int, int);

    int n_ = 0;
    int k_ = 0;
    std::vector<Arborescence> colors_;                  // slot 0 unused
    std::vector<std::vector<ColoredArc>> sorted_arcs_;  // slot 0 unused
};

// Checks that every color class is a spanning arborescence on [1..n] and
// builds the immutable instance.  Throws InstanceError with the first
// violation found (per color: DuplicateArc / MultipleIncoming, then
// ColorNotSpanning on bad arc counts, then CycleInColor).
ColoredInstance validate_instance(const std::vector<ColoredArc>& raw, int n, int k);

// Convenience wrapper: colors given as parent maps (colors[0] unused).
ColoredInstance instance_from_arborescences(int n, const std::vector<Arborescence>& colors);

// ρ(v) = set of colors rooted at v.  Σ_v |ρ(v)| = k.
struct RhoProfile {
    std::vector<std::vector<ColorId>> rho;  // size n+1, lists sorted

    // |ρ(v)| ≥ 2
    std::vector<VertexId> multi_roots() const;
    // |ρ(v)| = 0
    std::vector<VertexId> non_roots() const;
};

RhoProfile rho_profile(const ColoredInstance& inst);

// Per-color shape flags plus whole-instance structure used for solver
// dispatch.  A path has exactly one leaf; a star has every non-root vertex
// a leaf; at n = 2 a single arc is both.
struct ShapeReport {
    std::vector<bool> is_path;  // size k+1
    std::vector<bool> is_star;  // size k+1
    bool all_paths = false;
    bool all_paths_or_stars = false;
    bool all_stars = false;
    bool underlying_tree = false;  // all colors orient one undirected tree
    int multi_root_count = 0;
};

ShapeReport classify_shape(const ColoredInstance& inst);

// Instance induced by a vertex subset and color subset, with maps back to
// the parent instance.  Every kept color restricted to the kept vertices
// must again be a spanning arborescence (true wherever the solvers use
// this); otherwise InstanceError propagates.
struct SubInstance {
    ColoredInstance inst;
    std::vector<VertexId> to_parent_vertex;  // size n'+1
    std::vector<ColorId> to_parent_color;    // size k'+1
};

SubInstance restrict_instance(const ColoredInstance& inst,
                              std::span<const VertexId> vertices,
                              std::span<const ColorId> colors);

}  // namespace rba
