#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "rba/certificate.hpp"
#include "rba/instance.hpp"

namespace rba {

// A tripartite 3-uniform hypergraph with |X| = |Y| = |Z| = p, given as a
// list of q triples of 1-based part-local indices.  Duplicate triples are
// legal (edges is a list).
struct ThreeDMTriple {
    int x = 0;
    int y = 0;
    int z = 0;

    friend bool operator==(const ThreeDMTriple&, const ThreeDMTriple&) = default;
};

struct ThreeDMInstance {
    int p = 0;
    std::vector<ThreeDMTriple> edges;

    int q() const { return static_cast<int>(edges.size()); }
};

// Throws PreconditionError(InvalidHypergraph) on out-of-range parts or
// empty instances.
void validate_threedm(const ThreeDMInstance& h);

// Text format: first line "p q", then q lines "x y z"; '#' comments allowed.
ThreeDMInstance parse_threedm(std::istream& in);

// Vertex/color bookkeeping of the reduction.  Vertex indices: s_1 = 1, then
// per copy j the 3q internal path vertices (ordered by hyperedge, then
// position) followed by the junction t_j (t_j = s_{j+1}), and the sink t
// last.  Colors: c_v for the 3p part elements (X, then Y, then Z), then
// c_{H,j} ordered by (copy, hyperedge), then the filler stars.
struct GadgetLayout {
    ThreeDMInstance source;
    int n = 0;
    int k = 0;
    VertexId s1 = 0;
    VertexId t = 0;
    std::vector<VertexId> junction;  // [1..p] -> t_j

    // chain[j-1][h-1] = the three internal vertices of P^j_H
    std::vector<std::vector<std::array<VertexId, 3>>> chain;

    std::vector<ColorId> element_color;            // [0..3p-1]: x_1..x_p, y_*, z_*
    std::vector<std::vector<ColorId>> edge_color;  // [j-1][h-1] -> c_{H,j}
    std::vector<ColorId> filler_color;             // the 2pq-2p+1 stars

    std::vector<std::string> vertex_name;  // size n+1
    std::vector<std::string> color_name;   // size k+1
};

struct GadgetResult {
    ColoredInstance instance;
    GadgetLayout layout;
    VertexId root = 0;  // s_1
};

// Builds the reduction instance: p chained copies of D_st (one length-4
// path per hyperedge), a sink t, colors c_v on the e-arcs completed from
// t_p, unique colors c_{H,j} on the f-arcs completed from t, and
// 2pq-2p+1 filler stars rooted at t_p.  |V| = 3pq+p+2 and the union has
// 3pq+p+1 spanning arborescences whose roots are exactly t_p and t.
GadgetResult build_gadget(const ThreeDMInstance& h);

// Extracts the s_1 -> t_p path of a rainbow spanning arborescence rooted at
// s_1 and maps each s_j -> t_j segment to its hyperedge.  Returns 0-based
// edge indices, one per copy; the result is a perfect matching.
std::vector<int> decode_matching(const RainbowCertificate& cert,
                                 const GadgetLayout& layout);

// Builds the witness arborescence of a perfect matching (0-based edge index
// per copy): the concatenated paths, one star arc t_p -> t, and completion
// arcs from t / t_p covering everything else.  Rooted at s_1.
RainbowCertificate encode_matching(const std::vector<int>& matching,
                                   const GadgetLayout& layout);

// Sidecar text: "# root <index>" then one "index name" line per vertex.
std::string layout_sidecar(const GadgetLayout& layout);

}  // namespace rba
