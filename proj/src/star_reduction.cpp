#include <algorithm>
#include <string>

#include "rba/constructive.hpp"

namespace rba {

StarReduction star_reduce(const ColoredInstance& inst, ColorId star_color) {
    const int n = inst.n();
    const int k = inst.k();
    if (k != n - 1)
        throw PreconditionError(PreconditionCode::WrongColorCount,
                                "star reduction requires k = n-1");
    if (star_color < 1 || star_color > k)
        throw std::invalid_argument("star color outside [1..k]");
    ShapeReport shape = classify_shape(inst);
    if (!shape.is_star[star_color])
        throw PreconditionError(PreconditionCode::NotAStar,
                                "color " + std::to_string(star_color) + " is not a star");

    const VertexId r = inst.root_of(star_color);

    StarReduction out;
    LiftMap& lift = out.lift;
    lift.star_color = star_color;
    lift.removed = r;
    lift.to_original_vertex.assign(n, 0);
    lift.to_original_color.assign(n - 1, 0);

    std::vector<int> to_reduced(n + 1, 0);
    {
        int next = 1;
        for (VertexId v = 1; v <= n; ++v) {
            if (v == r) continue;
            lift.to_original_vertex[next] = v;
            to_reduced[v] = next++;
        }
    }

    std::vector<ColoredArc> reduced_arcs;
    int next_color = 1;
    for (ColorId c = 1; c <= k; ++c) {
        if (c == star_color) continue;
        const ColorId rc = next_color++;
        lift.to_original_color[rc] = c;
        const auto& kids_of_r = inst.children_in(c, r);

        if (inst.root_of(c) == r) {
            // Reattach r's other children to the least child r', which
            // becomes the reduced root.
            const VertexId rp = kids_of_r.front();
            for (VertexId v = 1; v <= n; ++v) {
                if (v == r) continue;
                VertexId parent = inst.parent_in(c, v);
                if (parent == r) {
                    if (v == rp) continue;  // reduced root
                    reduced_arcs.push_back(ColoredArc{rc, to_reduced[rp], to_reduced[v]});
                    lift.substitutions.push_back(
                        {rc, to_reduced[v], ColoredArc{c, r, v}, ColoredArc{c, r, rp}});
                } else {
                    reduced_arcs.push_back(ColoredArc{rc, to_reduced[parent], to_reduced[v]});
                }
            }
        } else {
            // Reattach r's children to r's parent r'; drop the arc (r', r).
            const VertexId rp = inst.parent_in(c, r);
            for (VertexId v = 1; v <= n; ++v) {
                if (v == r) continue;
                VertexId parent = inst.parent_in(c, v);
                if (parent == r) {
                    reduced_arcs.push_back(ColoredArc{rc, to_reduced[rp], to_reduced[v]});
                    lift.substitutions.push_back(
                        {rc, to_reduced[v], ColoredArc{c, r, v}, ColoredArc{c, rp, r}});
                } else if (parent != 0) {
                    reduced_arcs.push_back(ColoredArc{rc, to_reduced[parent], to_reduced[v]});
                }
            }
        }
    }
    std::sort(lift.substitutions.begin(), lift.substitutions.end(),
              [](const LiftMap::Substitution& a, const LiftMap::Substitution& b) {
                  return std::pair{a.reduced_color, a.reduced_head} <
                         std::pair{b.reduced_color, b.reduced_head};
              });
    out.reduced = validate_instance(reduced_arcs, n - 1, k - 1);
    return out;
}

RainbowCertificate star_lift(const RainbowCertificate& reduced_cert, const LiftMap& lift,
                             const ColoredInstance& inst) {
    const int rn = static_cast<int>(lift.to_original_vertex.size()) - 1;
    const int rk = static_cast<int>(lift.to_original_color.size()) - 1;

    auto invalid = [](const std::string& why) {
        return PreconditionError(PreconditionCode::InvalidReducedCertificate,
                                 "invalid reduced certificate: " + why);
    };

    // The reduced certificate must be a rainbow spanning arborescence of the
    // reduced instance: rn-1 arcs, every reduced color once.
    if (reduced_cert.size() != rn - 1) throw invalid("wrong arc count");
    {
        std::vector<char> seen_color(rk + 1, 0);
        std::vector<VertexId> tail_of(rn + 1, 0);
        for (const ColoredArc& a : reduced_cert.arcs) {
            if (a.color < 1 || a.color > rk || a.tail < 1 || a.tail > rn || a.head < 1 ||
                a.head > rn)
                throw invalid("arc outside the reduced instance");
            if (seen_color[a.color]++) throw invalid("repeated color");
            if (tail_of[a.head] != 0) throw invalid("two arcs into one vertex");
            tail_of[a.head] = a.tail;
        }
        for (VertexId v = 1; v <= rn; ++v) {
            VertexId u = v;
            int steps = 0;
            while (u != reduced_cert.root) {
                u = tail_of[u];
                if (u == 0 || ++steps > rn) throw invalid("not an arborescence");
            }
        }
    }

    auto find_substitution = [&](ColorId c, VertexId head) -> const LiftMap::Substitution* {
        auto it = std::lower_bound(
            lift.substitutions.begin(), lift.substitutions.end(), std::pair{c, head},
            [](const LiftMap::Substitution& s, const std::pair<ColorId, VertexId>& key) {
                return std::pair{s.reduced_color, s.reduced_head} < key;
            });
        if (it != lift.substitutions.end() && it->reduced_color == c && it->reduced_head == head)
            return &*it;
        return nullptr;
    };

    // Expanding a substituted arc gives its kept arc plus a companion that
    // the lift immediately removes again, so only the kept arc is emitted.
    std::vector<ColoredArc> lifted;
    for (const ColoredArc& a : reduced_cert.arcs) {
        if (const LiftMap::Substitution* sub = find_substitution(a.color, a.head)) {
            lifted.push_back(sub->kept);
        } else {
            ColoredArc orig{lift.to_original_color[a.color], lift.to_original_vertex[a.tail],
                            lift.to_original_vertex[a.head]};
            if (!inst.has_arc(orig)) throw invalid("arc does not lift into the instance");
            lifted.push_back(orig);
        }
    }

    // With substitutions the kept arcs stay and each companion is removed,
    // leaving two arborescences, one rooted at the removed vertex r.  The
    // star arc from r to the other root finishes the lift; without
    // substitutions it attaches r above the lifted certificate.
    std::vector<char> is_head(inst.n() + 1, 0);
    for (const ColoredArc& a : lifted) is_head[a.head] = 1;
    VertexId other_root = 0;
    for (VertexId v = 1; v <= inst.n(); ++v) {
        if (v == lift.removed || is_head[v]) continue;
        if (other_root != 0) throw invalid("lift produced two candidate roots");
        other_root = v;
    }
    if (other_root == 0) throw invalid("lift produced no attachment root");
    lifted.push_back(ColoredArc{lift.star_color, lift.removed, other_root});

    RainbowCertificate cert = certificate_from_arcs(std::move(lifted));
    if (!check_certificate(inst, cert, /*require_spanning=*/true))
        throw invalid("lifted certificate fails verification");
    return cert;
}

}  // namespace rba
