#include "rba/gadget.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

namespace rba {

void validate_threedm(const ThreeDMInstance& h) {
    if (h.p < 1 || h.edges.empty())
        throw PreconditionError(PreconditionCode::InvalidHypergraph,
                                "3DM instance needs p >= 1 and q >= 1");
    for (const ThreeDMTriple& e : h.edges)
        if (e.x < 1 || e.x > h.p || e.y < 1 || e.y > h.p || e.z < 1 || e.z > h.p)
            throw PreconditionError(PreconditionCode::InvalidHypergraph,
                                    "triple element outside [1..p]");
}

ThreeDMInstance parse_threedm(std::istream& in) {
    ThreeDMInstance h;
    std::string line;
    int line_no = 0;
    int declared_q = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ss(line);
        if (declared_q < 0) {
            if (!(ss >> h.p >> declared_q)) {
                std::string word;
                std::istringstream probe(line);
                if (!(probe >> word)) continue;  // blank/comment line
                throw ParseError("expected header \"p q\"", line_no);
            }
            std::string extra;
            if (ss >> extra) throw ParseError("trailing tokens after header", line_no);
            continue;
        }
        ThreeDMTriple e;
        if (!(ss >> e.x >> e.y >> e.z)) {
            std::string word;
            std::istringstream probe(line);
            if (!(probe >> word)) continue;
            throw ParseError("expected triple \"x y z\"", line_no);
        }
        std::string extra;
        if (ss >> extra) throw ParseError("trailing tokens after triple", line_no);
        h.edges.push_back(e);
    }
    if (declared_q < 0) throw ParseError("missing header \"p q\"", line_no);
    if (declared_q != h.q()) throw ParseError("edge count disagrees with header", line_no);
    validate_threedm(h);
    return h;
}

GadgetResult build_gadget(const ThreeDMInstance& h) {
    validate_threedm(h);
    const int p = h.p;
    const int q = h.q();
    const int n = 3 * p * q + p + 2;
    const int k = 3 * p * q + p + 1;

    GadgetResult out;
    GadgetLayout& lay = out.layout;
    lay.source = h;
    lay.n = n;
    lay.k = k;
    lay.vertex_name.assign(n + 1, {});
    lay.color_name.assign(k + 1, {});

    // Vertices: s_1, then per copy the 3q internal vertices followed by the
    // junction t_j, and the sink t last.
    lay.s1 = 1;
    lay.vertex_name[1] = "s1";
    lay.junction.assign(p + 1, 0);
    lay.chain.assign(p, std::vector<std::array<VertexId, 3>>(q));
    for (int j = 1; j <= p; ++j) {
        const int base = 1 + (j - 1) * (3 * q + 1);
        for (int e = 1; e <= q; ++e)
            for (int pos = 1; pos <= 3; ++pos) {
                VertexId v = base + (e - 1) * 3 + pos;
                lay.chain[j - 1][e - 1][pos - 1] = v;
                lay.vertex_name[v] =
                    "w" + std::to_string(j) + "_" + std::to_string(e) + "_" + std::to_string(pos);
            }
        lay.junction[j] = base + 3 * q + 1;
        lay.vertex_name[lay.junction[j]] = "t" + std::to_string(j);
    }
    lay.t = n;
    lay.vertex_name[n] = "t";
    const VertexId tp = lay.junction[p];

    // Colors: c_v for the 3p part elements, then c_{H,j} by (copy, edge),
    // then the filler stars.
    lay.element_color.assign(3 * p, 0);
    for (int i = 0; i < p; ++i) {
        lay.element_color[i] = i + 1;
        lay.element_color[p + i] = p + i + 1;
        lay.element_color[2 * p + i] = 2 * p + i + 1;
        lay.color_name[i + 1] = "c_x" + std::to_string(i + 1);
        lay.color_name[p + i + 1] = "c_y" + std::to_string(i + 1);
        lay.color_name[2 * p + i + 1] = "c_z" + std::to_string(i + 1);
    }
    lay.edge_color.assign(p, std::vector<ColorId>(q));
    for (int j = 1; j <= p; ++j)
        for (int e = 1; e <= q; ++e) {
            ColorId c = 3 * p + (j - 1) * q + e;
            lay.edge_color[j - 1][e - 1] = c;
            lay.color_name[c] = "c_e" + std::to_string(e) + "_" + std::to_string(j);
        }
    const int fillers = 2 * p * q - 2 * p + 1;
    lay.filler_color.assign(fillers, 0);
    for (int s = 1; s <= fillers; ++s) {
        ColorId c = 3 * p + p * q + s;
        lay.filler_color[s - 1] = c;
        lay.color_name[c] = "star" + std::to_string(s);
    }

    // Path arcs of every copy of D_st.
    std::vector<ColoredArc> arcs;
    std::vector<std::vector<char>> covered(k + 1, std::vector<char>(n + 1, 0));
    auto put = [&](ColorId c, VertexId tail, VertexId head) {
        arcs.push_back(ColoredArc{c, tail, head});
        covered[c][head] = 1;
    };
    for (int j = 1; j <= p; ++j) {
        const VertexId sj = (j == 1) ? lay.s1 : lay.junction[j - 1];
        for (int e = 1; e <= q; ++e) {
            const ThreeDMTriple& tr = h.edges[e - 1];
            const auto& w = lay.chain[j - 1][e - 1];
            put(lay.element_color[tr.x - 1], sj, w[0]);
            put(lay.element_color[p + tr.y - 1], w[0], w[1]);
            put(lay.element_color[2 * p + tr.z - 1], w[1], w[2]);
            put(lay.edge_color[j - 1][e - 1], w[2], lay.junction[j]);
        }
    }

    // Completions: every branching becomes a spanning arborescence, c_v from
    // t_p, c_{H,j} from t, and the filler stars from t_p.
    for (ColorId c : lay.element_color)
        for (VertexId v = 1; v <= n; ++v)
            if (v != tp && !covered[c][v]) put(c, tp, v);
    for (int j = 0; j < p; ++j)
        for (int e = 0; e < q; ++e) {
            ColorId c = lay.edge_color[j][e];
            for (VertexId v = 1; v <= n; ++v)
                if (v != lay.t && !covered[c][v]) put(c, lay.t, v);
        }
    for (ColorId c : lay.filler_color)
        for (VertexId v = 1; v <= n; ++v)
            if (v != tp) put(c, tp, v);

    out.instance = validate_instance(arcs, n, k);
    out.root = lay.s1;
    return out;
}

std::vector<int> decode_matching(const RainbowCertificate& cert, const GadgetLayout& lay) {
    const int p = lay.source.p;
    const int q = lay.source.q();
    if (cert.root != lay.s1)
        throw PreconditionError(PreconditionCode::NotRootedAtS1,
                                "certificate rooted at " + std::to_string(cert.root));

    std::vector<VertexId> tail_of(lay.n + 1, 0);
    for (const ColoredArc& a : cert.arcs) tail_of[a.head] = a.tail;

    // The tree path from s_1 to t_p, recovered backwards.
    std::vector<VertexId> path;
    VertexId v = lay.junction[p];
    int steps = 0;
    while (v != lay.s1) {
        path.push_back(v);
        v = tail_of[v];
        if (v == 0 || ++steps > lay.n)
            throw PreconditionError(PreconditionCode::PathNotFound,
                                    "no s1 -> t_p path in the certificate");
    }
    path.push_back(lay.s1);
    std::reverse(path.begin(), path.end());

    if (static_cast<int>(path.size()) != 4 * p + 1)
        throw PreconditionError(PreconditionCode::PathNotFound,
                                "s1 -> t_p path has unexpected length");

    std::vector<int> matching(p, -1);
    int at = 0;
    for (int j = 1; j <= p; ++j) {
        int picked = -1;
        for (int e = 0; e < q && picked < 0; ++e)
            if (lay.chain[j - 1][e][0] == path[at + 1]) picked = e;
        if (picked < 0 || lay.chain[j - 1][picked][1] != path[at + 2] ||
            lay.chain[j - 1][picked][2] != path[at + 3] || lay.junction[j] != path[at + 4])
            throw PreconditionError(PreconditionCode::PathNotFound,
                                    "copy " + std::to_string(j) +
                                        " segment is not a hyperedge path");
        matching[j - 1] = picked;
        at += 4;
    }
    return matching;
}

RainbowCertificate encode_matching(const std::vector<int>& matching, const GadgetLayout& lay) {
    const int p = lay.source.p;
    const int q = lay.source.q();
    auto reject = [](const std::string& why) {
        return PreconditionError(PreconditionCode::NotAPerfectMatching, why);
    };
    if (static_cast<int>(matching.size()) != p) throw reject("matching must pick p hyperedges");
    std::vector<char> used_x(p + 1, 0), used_y(p + 1, 0), used_z(p + 1, 0);
    for (int idx : matching) {
        if (idx < 0 || idx >= q) throw reject("hyperedge index out of range");
        const ThreeDMTriple& e = lay.source.edges[idx];
        if (used_x[e.x]++ || used_y[e.y]++ || used_z[e.z]++)
            throw reject("hyperedges are not disjoint");
    }

    std::vector<ColoredArc> arcs;
    std::vector<char> used_color(lay.k + 1, 0);
    std::vector<char> covered(lay.n + 1, 0);
    covered[lay.s1] = 1;
    auto put = [&](ColorId c, VertexId tail, VertexId head) {
        arcs.push_back(ColoredArc{c, tail, head});
        used_color[c] = 1;
        covered[head] = 1;
    };

    for (int j = 1; j <= p; ++j) {
        const VertexId sj = (j == 1) ? lay.s1 : lay.junction[j - 1];
        const int e = matching[j - 1];
        const ThreeDMTriple& tr = lay.source.edges[e];
        const auto& w = lay.chain[j - 1][e];
        put(lay.element_color[tr.x - 1], sj, w[0]);
        put(lay.element_color[p + tr.y - 1], w[0], w[1]);
        put(lay.element_color[2 * p + tr.z - 1], w[1], w[2]);
        put(lay.edge_color[j - 1][e], w[2], lay.junction[j]);
    }
    put(lay.filler_color.front(), lay.junction[p], lay.t);

    // The internal vertices of the unchosen paths pair up exactly with the
    // unused c_{H,j} colors (tail t) and filler colors (tail t_p).
    std::vector<ColorId> free_colors;
    for (int j = 0; j < p; ++j)
        for (int e = 0; e < q; ++e)
            if (!used_color[lay.edge_color[j][e]]) free_colors.push_back(lay.edge_color[j][e]);
    for (ColorId c : lay.filler_color)
        if (!used_color[c]) free_colors.push_back(c);
    std::sort(free_colors.begin(), free_colors.end());

    const ColorId first_filler = lay.filler_color.front();
    size_t next = 0;
    for (VertexId v = 1; v <= lay.n; ++v) {
        if (covered[v]) continue;
        if (next >= free_colors.size()) throw std::logic_error("gadget completion ran dry");
        ColorId c = free_colors[next++];
        put(c, c >= first_filler ? lay.junction[p] : lay.t, v);
    }
    if (next != free_colors.size()) throw std::logic_error("gadget completion left colors over");

    RainbowCertificate cert = certificate_from_arcs(std::move(arcs));
    return cert;
}

std::string layout_sidecar(const GadgetLayout& lay) {
    std::ostringstream out;
    out << "# root " << lay.s1 << "\n";
    for (VertexId v = 1; v <= lay.n; ++v) out << v << " " << lay.vertex_name[v] << "\n";
    out << "# colors\n";
    for (ColorId c = 1; c <= lay.k; ++c) out << "# " << c << " " << lay.color_name[c] << "\n";
    return out.str();
}

}  // namespace rba
