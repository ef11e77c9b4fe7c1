#include <algorithm>
#include <string>

#include "rba/constructive.hpp"

namespace rba {

namespace {

struct GrowState {
    std::vector<ColoredArc> arcs;
    std::vector<char> in_tree;  // size n+1
    std::vector<char> used;     // size k+1
    VertexId root = 0;
    int tree_size = 0;
};

GrowState grow_state_from(const ColoredInstance& inst, VertexId root) {
    GrowState st;
    st.in_tree.assign(inst.n() + 1, 0);
    st.used.assign(inst.k() + 1, 0);
    st.in_tree[root] = 1;
    st.root = root;
    st.tree_size = 1;
    return st;
}

void add_arc(GrowState& st, const ColoredArc& a) {
    st.arcs.push_back(a);
    st.in_tree[a.head] = 1;
    st.used[a.color] = 1;
    ++st.tree_size;
}

// Least-(color, arc) crossing additions until inclusion-wise maximal.
void extend_maximal(const ColoredInstance& inst, GrowState& st) {
    for (;;) {
        bool added = false;
        for (ColorId c = 1; c <= inst.k() && !added; ++c) {
            if (st.used[c]) continue;
            for (const ColoredArc& a : inst.arcs_of(c)) {
                if (!st.in_tree[a.tail] || st.in_tree[a.head]) continue;
                add_arc(st, a);
                added = true;
                break;
            }
        }
        if (!added) return;
    }
}

RainbowCertificate certificate_from_state(const ColoredInstance& inst, const GrowState& st) {
    RainbowCertificate cert;
    cert.arcs = st.arcs;
    std::sort(cert.arcs.begin(), cert.arcs.end());
    cert.root = st.root;
    for (VertexId v = 1; v <= inst.n(); ++v)
        if (st.in_tree[v]) cert.spanned.push_back(v);
    return cert;
}

}  // namespace

RainbowCertificate solve_many_colors(const ColoredInstance& inst) {
    const int n = inst.n();
    const int k = inst.k();
    if (!(k >= 2 * n - 3 || (n >= 3 && k >= 2 * n - 4)))
        throw PreconditionError(PreconditionCode::TooFewColors,
                                "requires k >= 2n-3, or k >= 2n-4 with n >= 3");

    GrowState st = grow_state_from(inst, 1);
    extend_maximal(inst, st);
    if (st.tree_size == n) return certificate_from_state(inst, st);

    std::vector<VertexId> vprime;
    for (VertexId v = 1; v <= n; ++v)
        if (!st.in_tree[v]) vprime.push_back(v);
    std::vector<ColorId> unused;
    for (ColorId c = 1; c <= k; ++c)
        if (!st.used[c]) {
            if (st.in_tree[inst.root_of(c)])
                throw std::logic_error("maximality violated: unused color rooted inside");
            unused.push_back(c);
        }
    const int kprime = static_cast<int>(unused.size());

    if (kprime >= n - 1) {
        // Rainbow arborescence on the unspanned vertices from the unused
        // colors, then extension across V with the still-fresh ones.
        RainbowCertificate base;
        if (vprime.size() == 1) {
            base = singleton_certificate(vprime.front());
        } else {
            SubInstance sub = restrict_instance(inst, vprime, unused);
            RainbowCertificate inner = solve_many_colors(sub.inst);
            std::vector<ColoredArc> arcs;
            for (const ColoredArc& a : inner.arcs)
                arcs.push_back(ColoredArc{sub.to_parent_color[a.color],
                                          sub.to_parent_vertex[a.tail],
                                          sub.to_parent_vertex[a.head]});
            base = certificate_from_arcs(std::move(arcs));
        }

        GrowState ext;
        ext.arcs = base.arcs;
        ext.in_tree.assign(n + 1, 0);
        ext.used.assign(k + 1, 0);
        for (VertexId v : base.spanned) ext.in_tree[v] = 1;
        for (const ColoredArc& a : base.arcs) ext.used[a.color] = 1;
        ext.root = base.root;
        ext.tree_size = static_cast<int>(base.spanned.size());

        while (ext.tree_size < n) {
            bool added = false;
            for (ColorId c : unused) {
                if (ext.used[c]) continue;
                for (const ColoredArc& a : inst.arcs_of(c)) {
                    if (!ext.in_tree[a.tail] || ext.in_tree[a.head]) continue;
                    add_arc(ext, a);
                    added = true;
                    break;
                }
                if (added) break;
            }
            if (!added) throw std::logic_error("extension across V stalled");
        }
        return certificate_from_state(inst, ext);
    }

    // Boundary of the k = 2n-4 bound: the maximal arborescence missed one
    // vertex r and exactly n-2 colors, all rooted at r, remain.  Build a
    // fresh arborescence from r out of those; it misses one vertex w.
    if (static_cast<int>(vprime.size()) != 1 || kprime != n - 2 || k != 2 * n - 4)
        throw std::logic_error("unexpected boundary state in many-colors solver");
    const VertexId r = vprime.front();
    GrowState fresh = grow_state_from(inst, r);
    for (int step = 0; step < kprime; ++step) {
        bool added = false;
        for (ColorId c : unused) {
            if (fresh.used[c]) continue;
            for (const ColoredArc& a : inst.arcs_of(c)) {
                if (!fresh.in_tree[a.tail] || fresh.in_tree[a.head]) continue;
                add_arc(fresh, a);
                added = true;
                break;
            }
            if (added) break;
        }
        if (!added) throw std::logic_error("fresh growth from r stalled");
    }
    if (fresh.tree_size != n - 1)
        throw std::logic_error("fresh growth did not reach n-1 vertices");
    VertexId w = 0;
    for (VertexId v = 1; v <= n; ++v)
        if (!fresh.in_tree[v]) w = v;

    // One arc of a color used by the first arborescence finishes the job
    // unless all of them are rooted at w.
    for (ColorId c = 1; c <= k; ++c) {
        if (!st.used[c]) continue;
        if (VertexId t = inst.parent_in(c, w); t != 0) {
            add_arc(fresh, ColoredArc{c, t, w});
            return certificate_from_state(inst, fresh);
        }
    }

    // All remaining colors rooted at w: at most two multi-roots {r, w}, so
    // restricting to any n-1 colors keeps that property and the
    // two-multiroots solver applies.
    std::vector<VertexId> all_vertices(n);
    for (VertexId v = 1; v <= n; ++v) all_vertices[v - 1] = v;
    std::vector<ColorId> first_colors(n - 1);
    for (ColorId c = 1; c <= n - 1; ++c) first_colors[c - 1] = c;
    SubInstance sub = restrict_instance(inst, all_vertices, first_colors);
    RainbowCertificate inner = solve_two_multiroots(sub.inst);
    std::vector<ColoredArc> arcs;
    for (const ColoredArc& a : inner.arcs)
        arcs.push_back(ColoredArc{sub.to_parent_color[a.color], a.tail, a.head});
    return certificate_from_arcs(std::move(arcs));
}

SpanningSelection solve_two_arcs_per_color(const ColoredInstance& inst) {
    const int n = inst.n();
    const int k = inst.k();
    if (n < 3 || k != n - 2)
        throw PreconditionError(PreconditionCode::WrongColorCount,
                                "two-arcs solver requires k = n-2 and n >= 3");

    // Duplicate every color; colors k+1..2k are the copies.
    std::vector<Arborescence> doubled(2 * k + 1);
    for (ColorId c = 1; c <= k; ++c) doubled[c] = doubled[k + c] = inst.color(c);
    ColoredInstance dup = instance_from_arborescences(n, doubled);

    RainbowCertificate cert = solve_many_colors(dup);  // 2k = 2n-4, n >= 3

    SpanningSelection sel;
    sel.root = cert.root;
    for (ColoredArc a : cert.arcs) {
        if (a.color > k) a.color -= k;
        sel.arcs.push_back(a);
    }
    std::sort(sel.arcs.begin(), sel.arcs.end());
    return sel;
}

RainbowCertificate solve_half_size(const ColoredInstance& inst, int k_target,
                                   HalfSizeStats* stats) {
    const int n = inst.n();
    const int k = inst.k();
    if (k != n - 1)
        throw PreconditionError(PreconditionCode::WrongColorCount,
                                "half-size solver requires an instance with n-1 colors");
    if (k_target < 1) throw std::invalid_argument("k_target must be positive");
    if (k_target > n / 2)
        throw PreconditionError(PreconditionCode::TargetTooLarge,
                                "k_target " + std::to_string(k_target) + " exceeds floor(n/2)");
    if (stats) *stats = {};

    RainbowCertificate cert;
    if (n <= 6) {
        // At most five colors means at most two multi-roots.
        cert = solve_two_multiroots(inst);
        if (stats) stats->initial_size = cert.size();
    } else {
        GrowState st = grow_state_from(inst, 1);
        extend_maximal(inst, st);
        if (stats) stats->initial_size = static_cast<int>(st.arcs.size());

        while (static_cast<int>(st.arcs.size()) < k_target) {
            const VertexId rt = st.root;

            // Rainbow in-arborescence rooted at rt built from the unused
            // colors' ancestor chains; it must break out of the tree.
            std::vector<char> in_vp(n + 1, 0);
            std::vector<ColoredArc> out_arc(n + 1);
            in_vp[rt] = 1;
            VertexId w = 0;
            for (ColorId c = 1; c <= k && w == 0; ++c) {
                if (st.used[c]) continue;
                if (st.in_tree[inst.root_of(c)])
                    throw std::logic_error("maximality violated in half-size solver");
                // P_c: the chain of A_c ancestors of rt up to the first
                // vertex outside the tree.
                std::vector<ColoredArc> chain;
                VertexId v = rt;
                for (;;) {
                    std::optional<ColoredArc> a = inst.in_arc(c, v);
                    if (!a) throw std::logic_error("ancestor chain hit the color root in-tree");
                    chain.push_back(*a);
                    v = a->tail;
                    if (!st.in_tree[v]) break;
                }
                // Least crossing arc into the current in-arborescence.
                const ColoredArc* pick = nullptr;
                for (const ColoredArc& a : chain) {
                    if (in_vp[a.tail] || !in_vp[a.head]) continue;
                    if (!pick || std::pair{a.tail, a.head} < std::pair{pick->tail, pick->head})
                        pick = &a;
                }
                if (!pick) throw std::logic_error("chain has no crossing arc");
                in_vp[pick->tail] = 1;
                out_arc[pick->tail] = *pick;
                if (!st.in_tree[pick->tail]) w = pick->tail;
            }
            if (w == 0)
                throw std::logic_error("half-size claim failed: |V'| = |J|+1 > |tree| yet "
                                       "no escape vertex found");

            // Rainbow path P from w to rt; exchange it against the tree
            // arcs Q whose heads lie on it.
            std::vector<ColoredArc> path;
            std::vector<char> on_path(n + 1, 0);
            on_path[w] = 1;
            for (VertexId v = w; v != rt;) {
                const ColoredArc& a = out_arc[v];
                path.push_back(a);
                on_path[a.head] = 1;
                v = a.head;
            }
            std::vector<ColoredArc> kept;
            int removed = 0;
            for (const ColoredArc& a : st.arcs) {
                if (on_path[a.head]) {
                    st.used[a.color] = 0;
                    ++removed;
                } else {
                    kept.push_back(a);
                }
            }
            if (removed != static_cast<int>(path.size()) - 1)
                throw std::logic_error("half-size exchange removed |Q| != |P|-1 arcs");
            for (const ColoredArc& a : path) {
                kept.push_back(a);
                st.used[a.color] = 1;
            }
            st.arcs = std::move(kept);
            st.in_tree[w] = 1;
            ++st.tree_size;
            st.root = w;
            if (stats) ++stats->exchanges;

            extend_maximal(inst, st);  // restore maximality before the next round
        }
        cert = certificate_from_state(inst, st);
    }

    // Trim to exactly k_target arcs: removing an arc into a leaf keeps a
    // rainbow arborescence.
    while (cert.size() > k_target) {
        std::vector<char> has_out(n + 1, 0);
        for (const ColoredArc& a : cert.arcs) has_out[a.tail] = 1;
        auto victim = cert.arcs.end();
        for (auto it = cert.arcs.begin(); it != cert.arcs.end(); ++it)
            if (!has_out[it->head]) {
                victim = it;
                break;
            }
        if (victim == cert.arcs.end()) throw std::logic_error("trim found no leaf arc");
        VertexId gone = victim->head;
        cert.arcs.erase(victim);
        std::erase(cert.spanned, gone);
    }
    return cert;
}

}  // namespace rba
