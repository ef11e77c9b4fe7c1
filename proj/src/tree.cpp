#include <algorithm>

#include "rba/constructive.hpp"

namespace rba {

RainbowCertificate solve_tree_underlying(const ColoredInstance& inst) {
    const int n = inst.n();
    const int k = inst.k();
    if (k != n - 1)
        throw PreconditionError(PreconditionCode::WrongColorCount,
                                "underlying-tree solver requires k = n-1");
    ShapeReport shape = classify_shape(inst);
    if (!shape.underlying_tree)
        throw PreconditionError(PreconditionCode::NotUnderlyingTree,
                                "colors do not orient a common tree");

    if (n == 2) return certificate_from_arcs({inst.arcs_of(1).front()});

    // A leaf of the last color has tree-degree one, so every other color
    // loses exactly its one incident arc under the restriction.
    VertexId v = 0;
    for (VertexId u = 1; u <= n && v == 0; ++u)
        if (inst.color(k).is_leaf(u)) v = u;
    ColoredArc e = *inst.in_arc(k, v);

    std::vector<VertexId> vertices;
    for (VertexId u = 1; u <= n; ++u)
        if (u != v) vertices.push_back(u);
    std::vector<ColorId> colors(k - 1);
    for (ColorId c = 1; c < k; ++c) colors[c - 1] = c;

    SubInstance sub = restrict_instance(inst, vertices, colors);
    RainbowCertificate inner = solve_tree_underlying(sub.inst);

    std::vector<ColoredArc> arcs;
    arcs.reserve(inner.arcs.size() + 1);
    for (const ColoredArc& a : inner.arcs)
        arcs.push_back(ColoredArc{sub.to_parent_color[a.color], sub.to_parent_vertex[a.tail],
                                  sub.to_parent_vertex[a.head]});
    arcs.push_back(e);
    return certificate_from_arcs(std::move(arcs));
}

}  // namespace rba
