#include "rba/certificate.hpp"

#include <algorithm>
#include <map>

namespace rba {

const char* cert_failure_name(CertFailure f) {
    switch (f) {
        case CertFailure::None: return "None";
        case CertFailure::NotInInstance: return "NotInInstance";
        case CertFailure::RepeatedColor: return "RepeatedColor";
        case CertFailure::NotArborescence: return "NotArborescence";
        case CertFailure::SpannedMismatch: return "SpannedMismatch";
        case CertFailure::NotSpanning: return "NotSpanning";
        case CertFailure::WrongRoot: return "WrongRoot";
    }
    return "?";
}

RainbowCertificate singleton_certificate(VertexId root) {
    RainbowCertificate cert;
    cert.root = root;
    cert.spanned = {root};
    return cert;
}

RainbowCertificate certificate_from_arcs(std::vector<ColoredArc> arcs) {
    if (arcs.empty()) throw std::invalid_argument("empty arc set needs an explicit root");
    std::sort(arcs.begin(), arcs.end());
    std::map<VertexId, int> in_degree;
    for (const ColoredArc& a : arcs) {
        in_degree.emplace(a.tail, 0);
        in_degree[a.head] += 1;
    }
    RainbowCertificate cert;
    cert.arcs = std::move(arcs);
    int roots = 0;
    for (const auto& [v, deg] : in_degree) {
        cert.spanned.push_back(v);
        if (deg == 0) {
            cert.root = v;
            ++roots;
        }
    }
    if (roots != 1) throw std::invalid_argument("arc set has no unique root");
    return cert;
}

CheckResult check_certificate(const ColoredInstance& inst, const RainbowCertificate& cert,
                              bool require_spanning, std::optional<VertexId> require_root) {
    auto fail = [](CertFailure f, std::string detail) {
        return CheckResult{f, std::move(detail)};
    };

    const int n = inst.n();
    std::vector<int> color_uses(inst.k() + 1, 0);
    std::vector<VertexId> in_arc_tail(n + 1, 0);
    std::vector<int> in_degree(n + 1, 0);

    for (const ColoredArc& a : cert.arcs) {
        if (!inst.has_arc(a))
            return fail(CertFailure::NotInInstance,
                        "arc (" + std::to_string(a.color) + ": " + std::to_string(a.tail) +
                            "->" + std::to_string(a.head) + ") not in instance");
        if (++color_uses[a.color] > 1)
            return fail(CertFailure::RepeatedColor,
                        "color " + std::to_string(a.color) + " used more than once");
        if (++in_degree[a.head] > 1)
            return fail(CertFailure::NotArborescence,
                        "vertex " + std::to_string(a.head) + " has two incoming arcs");
        in_arc_tail[a.head] = a.tail;
    }

    // Vertex set touched by the arcs plus the claimed root.
    if (cert.root < 1 || cert.root > n)
        return fail(CertFailure::NotArborescence, "root outside [1..n]");
    std::vector<char> touched(n + 1, 0);
    touched[cert.root] = 1;
    for (const ColoredArc& a : cert.arcs) touched[a.tail] = touched[a.head] = 1;

    std::vector<VertexId> derived;
    for (VertexId v = 1; v <= n; ++v)
        if (touched[v]) derived.push_back(v);

    std::vector<VertexId> claimed = cert.spanned;
    std::sort(claimed.begin(), claimed.end());
    if (claimed != derived)
        return fail(CertFailure::SpannedMismatch, "spanned set disagrees with arcs");

    if (in_degree[cert.root] != 0)
        return fail(CertFailure::NotArborescence, "claimed root has an incoming arc");
    if (cert.arcs.size() + 1 != derived.size())
        return fail(CertFailure::NotArborescence, "arc count does not match vertex count");

    // Every touched vertex must reach the root along in-arcs; with unique
    // in-arcs and |arcs| = |vertices| - 1 this rules out cycles.
    for (VertexId start : derived) {
        VertexId v = start;
        int steps = 0;
        while (v != cert.root) {
            v = in_arc_tail[v];
            if (v == 0 || ++steps > n)
                return fail(CertFailure::NotArborescence,
                            "vertex " + std::to_string(start) + " does not reach the root");
        }
    }

    if (require_spanning && static_cast<int>(derived.size()) != n)
        return fail(CertFailure::NotSpanning, "certificate does not span all vertices");
    if (require_root && cert.root != *require_root)
        return fail(CertFailure::WrongRoot,
                    "rooted at " + std::to_string(cert.root) + ", required " +
                        std::to_string(*require_root));
    return {};
}

}  // namespace rba
