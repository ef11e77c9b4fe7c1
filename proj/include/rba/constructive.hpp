#pragma once

#include <optional>
#include <vector>

#include "rba/certificate.hpp"
#include "rba/instance.hpp"

namespace rba {

// A seed for greedy extension is just a (possibly trivial) rainbow
// arborescence on a vertex subset.
using Seed = RainbowCertificate;

// ---------------------------------------------------------------------------
// Star reduction
// ---------------------------------------------------------------------------

// Records how each reduced arc corresponds to the original instance, so a
// certificate of the reduced instance can be lifted back.  A substituted
// reduced arc (r', v) stands for two original arcs: the kept one (r, v) and
// a dropped companion ((r, r') when the color was rooted at the removed
// vertex, (r', r) otherwise).
struct LiftMap {
    ColorId star_color = 0;
    VertexId removed = 0;                    // r, the star's root (original label)
    std::vector<VertexId> to_original_vertex;  // reduced [1..n-1] -> original
    std::vector<ColorId> to_original_color;    // reduced [1..n-2] -> original

    struct Substitution {
        ColorId reduced_color = 0;
        VertexId reduced_head = 0;
        ColoredArc kept;     // original labels and color
        ColoredArc dropped;  // original labels and color
    };
    std::vector<Substitution> substitutions;  // sorted by (color, head)
};

struct StarReduction {
    ColoredInstance reduced;
    LiftMap lift;
};

// Removes a star color and its root r, producing the (n-1)-vertex,
// (n-2)-color instance: colors rooted at r reattach r's other children to a
// chosen child r' (the least one); other colors reattach r's children to
// r's parent.  Requires k = n-1 and a star color.
StarReduction star_reduce(const ColoredInstance& inst, ColorId star_color);

// Lifts a rainbow spanning arborescence of the reduced instance back to the
// original: expands substituted arcs to their original pairs, drops the
// companion arc of every substituted color, and connects the removed root r
// with one star arc.
RainbowCertificate star_lift(const RainbowCertificate& reduced_cert,
                             const LiftMap& lift,
                             const ColoredInstance& inst);

// ---------------------------------------------------------------------------
// Greedy extension from a seed covering all multi-roots
// ---------------------------------------------------------------------------

struct GreedyStats {
    int grows = 0;   // arcs added with the growing color rooted inside
    int swaps = 0;   // root exchanges B <- B + e - f
};

// Extends a rainbow arborescence whose vertex set contains every multi-root
// to a rainbow spanning arborescence.  Requires k = n-1.  Two moves: grow by
// an unused color rooted inside the tree, else take the unused-color arc
// into the current root and either grow by it or exchange it against the
// tree arc entering its tail.
RainbowCertificate greedy_extend(const ColoredInstance& inst, const Seed& seed,
                                 GreedyStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Special-case solvers, one per hypothesis class
// ---------------------------------------------------------------------------

struct AllPathsStats {
    int initial_potential = 0;
    bool initial_had_cycle = false;
    int rounds = 0;
    // potential after each repair round; strictly decreasing
    std::vector<int> round_potentials;
};

// Every color a path, k = n-1.  Builds the initial selection by scanning
// colors and picking the arc into the vertex closest to the leaf that has
// no incoming arc yet, then repairs cycles by shifting every cycle arc one
// step toward the root along its own path.  The potential
// Σ_i |A_i(r, S)| strictly decreases each round.
RainbowCertificate solve_all_paths(const ColoredInstance& inst,
                                   AllPathsStats* stats = nullptr);

// Every color a path or a star, k = n-1.  Peels stars with star_reduce
// (paths stay paths under the reduction), solves the all-paths core, and
// lifts back.
RainbowCertificate solve_paths_and_stars(const ColoredInstance& inst);

// At most two multi-roots, k = n-1.  One multi-root: greedy from the vertex
// maximizing |ρ|.  Two multi-roots x1, x2: grows arc-disjoint rainbow
// in-arborescences rooted at x1 and x2 until their vertex sets meet, then
// seeds greedy_extend with the union of the two paths from the meeting
// vertex.
RainbowCertificate solve_two_multiroots(const ColoredInstance& inst);

// All colors orient the same undirected tree, k = n-1.  Peels a leaf of the
// last color and recurses.
RainbowCertificate solve_tree_underlying(const ColoredInstance& inst);

// k ≥ 2n-3 (or k ≥ 2n-4 when n ≥ 3).  Grows a maximal rainbow arborescence,
// recurses on the unused colors restricted to the unspanned vertices, and
// extends back across V; the k = 2n-4 boundary falls back to
// solve_two_multiroots when all colors end up rooted at two vertices.
RainbowCertificate solve_many_colors(const ColoredInstance& inst);

// A spanning arborescence that is rainbow only up to multiplicity two.
struct SpanningSelection {
    std::vector<ColoredArc> arcs;  // global order
    VertexId root = 0;
};

// k = n-2, n ≥ 3.  Duplicates every color, runs solve_many_colors on the
// 2n-4 colors, and folds the copies back; at most two arcs per original
// color.
SpanningSelection solve_two_arcs_per_color(const ColoredInstance& inst);

struct HalfSizeStats {
    int initial_size = 0;  // size of the first maximal arborescence
    int exchanges = 0;     // path-exchange augmentations performed
};

// Rainbow arborescence of size exactly k_target ≤ ⌊n/2⌋ on an instance with
// n-1 colors.  n ≤ 6 delegates to solve_two_multiroots; n ≥ 7 grows a
// maximal rainbow arborescence and augments it by rainbow-path exchanges
// until large enough, then trims leaf arcs.
RainbowCertificate solve_half_size(const ColoredInstance& inst, int k_target,
                                   HalfSizeStats* stats = nullptr);

}  // namespace rba
