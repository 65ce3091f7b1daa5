// Filling Lambda^2_1 horns in hom-spaces: glue the beads of T into the
// stretched necklace U, then merge each bead group into one simplex.

#include <numeric>

#include "ccat/errors.hpp"
#include "ccat/theorems.hpp"

namespace ccat {

namespace {

std::vector<int> range(int lo, int hi) {
    std::vector<int> v(hi - lo + 1);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

SimplexRef edge_of(const FinSSet& x, const SimplexRef& s, int a, int b) {
    return x.apply(s, OrdinalMap({a, b}, s.dim() + 1));
}

enum class SlotKind { matched, u_degenerate, t_degenerate };

struct Slot {
    SlotKind kind;
    int u_bead = -1;
    int t_vertex = 0;  // T vertex where the slot starts
};

class Merger {
public:
    explicit Merger(const FinSSet& x) : x_(x) {}

    std::vector<MergeStep> trace;

    SimplexRef extend(const std::string& kind, int dim, std::vector<std::vector<int>> gens,
                      std::vector<SimplexRef> assignment, bool interpretation) {
        Shape shape = make_generated(dim, gens);
        auto sols = solve_extension(x_, shape, assignment);
        if (sols.empty())
            throw DomainError("no " + kind + " extension in dimension " + std::to_string(dim) +
                              ": the simplicial set is not a quasi-category there");
        trace.push_back(MergeStep{kind, dim, std::move(gens), std::move(assignment), sols.front(),
                                  static_cast<int>(sols.size()), interpretation});
        return sols.front();
    }

    // A simplex of dimension sum(k_j) whose faces on consecutive intervals are
    // the pieces and whose face on the interval endpoints is tau.
    SimplexRef bead(const SimplexRef& tau, const std::vector<SimplexRef>& pieces) {
        const int d = tau.dim();
        if (d == 1) return pieces.front();
        const int k1 = pieces.front().dim();
        SimplexRef p = tau;
        if (k1 > 1) {
            // Delta^k1 and Delta^d overlapping along [0,k1] = [0,1]
            std::vector<int> tail{0};
            for (int v = k1; v <= k1 + d - 1; ++v) tail.push_back(v);
            p = extend("overlap", k1 + d - 1, {range(0, k1), tail}, {pieces.front(), tau}, false);
        }
        std::vector<SimplexRef> rest(pieces.begin() + 1, pieces.end());
        SimplexRef g = bead(x_.face(tau, 0), rest);
        int total = k1;
        std::vector<int> ends = range(0, k1);
        for (const auto& r : rest) {
            total += r.dim();
            ends.push_back(total);
        }
        if (total == k1 + d - 1) return p;  // remaining pieces were edges, p already spans them
        // join along the common face d0 tau
        return extend("join", total, {ends, range(k1, total)}, {p, g}, true);
    }

private:
    const FinSSet& x_;
};

}  // namespace

Lambda21Filler fill_lambda21(const FinSSet& x, const HornInHom& h) {
    if (h.n != 2 || h.missing != 1) throw DomainError("expected a Lambda^2_1 horn");
    if (!h.compatible(x)) throw DomainError("horn faces are not compatible");
    const HomSimplex& u = *h.faces[0];
    const HomSimplex& t = *h.faces[2];

    // T spine edges, and which T vertices are joins
    std::vector<SimplexRef> t_edges;
    std::vector<int> t_bead_of_edge;
    for (int b = 0; b < t.shape().bead_count(); ++b)
        for (int j = 0; j < t.shape().bead_dims()[b]; ++j) {
            t_edges.push_back(edge_of(x, t.map.images[b], j, j + 1));
            t_bead_of_edge.push_back(b);
        }
    const VertexMask t_joins = t.shape().joins();
    std::vector<SimplexRef> u_diag;
    for (const auto& img : u.map.images) u_diag.push_back(edge_of(x, img, 0, img.dim()));

    // align the spine of T with the diagonal of U; degenerate U diagonals first
    std::vector<Slot> slots;
    {
        int a = 0, b = 0;
        const int ne = static_cast<int>(t_edges.size()), nu = static_cast<int>(u_diag.size());
        while (a < ne || b < nu) {
            if (b < nu && u_diag[b].degenerate()) {
                slots.push_back({SlotKind::u_degenerate, b++, a});
            } else if (a < ne && t_edges[a].degenerate()) {
                slots.push_back({SlotKind::t_degenerate, -1, a++});
            } else if (a < ne && b < nu) {
                if (u_diag[b] != t_edges[a]) throw DomainError("spine of T does not match the diagonal of U");
                slots.push_back({SlotKind::matched, b++, a++});
            } else {
                throw DomainError("spine of T does not match the diagonal of U");
            }
        }
    }

    // group the slots into beads of S: one per T bead, one per degenerate U
    // diagonal sitting on a join of T
    struct Group {
        int t_bead = -1;
        std::vector<int> slots;
    };
    std::vector<Group> groups;
    for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
        const Slot& sl = slots[s];
        int owner;
        if (sl.kind == SlotKind::u_degenerate)
            owner = (t_joins >> sl.t_vertex & 1) ? -1 : t_bead_of_edge[sl.t_vertex];
        else
            owner = t_bead_of_edge[sl.t_vertex];
        if (owner >= 0 && !groups.empty() && groups.back().t_bead == owner)
            groups.back().slots.push_back(s);
        else
            groups.push_back({owner, {s}});
    }

    Merger merger(x);
    Lambda21Filler out;
    out.raw.source = h.source;
    out.raw.target = h.target;
    std::vector<int> dims;
    VertexMask joins = 1, level1 = 1;
    int at = 0;
    for (const auto& g : groups) {
        std::vector<SimplexRef> pieces;
        SimplexRef beta;
        if (g.t_bead < 0) {
            beta = u.map.images[slots[g.slots.front()].u_bead];
            pieces.push_back(beta);
        } else {
            // thicken the T bead: a degenerate U diagonal repeats the vertex it sits on
            const SimplexRef& tau = t.map.images[g.t_bead];
            std::vector<int> theta{0};
            for (int s : g.slots) theta.push_back(theta.back() + (slots[s].kind == SlotKind::u_degenerate ? 0 : 1));
            const SimplexRef thick = x.apply(tau, OrdinalMap(theta, tau.dim() + 1));
            for (int q = 0; q < static_cast<int>(g.slots.size()); ++q) {
                const Slot& sl = slots[g.slots[q]];
                pieces.push_back(sl.kind == SlotKind::t_degenerate ? edge_of(x, thick, q, q + 1)
                                                                   : u.map.images[sl.u_bead]);
                if (edge_of(x, pieces.back(), 0, pieces.back().dim()) != edge_of(x, thick, q, q + 1))
                    throw DomainError("piece diagonal does not match the thickened bead");
            }
            beta = merger.bead(thick, pieces);
        }
        for (const auto& p : pieces) {
            at += p.dim();
            level1 |= VertexMask{1} << at;
        }
        joins |= VertexMask{1} << at;
        dims.push_back(beta.dim());
        out.raw.images.push_back(beta);
    }
    out.raw.shape = Necklace(dims);
    out.raw.validate(x);
    out.raw_flag = Flag{{joins, level1, out.raw.shape.all_vertices()}};
    out.filler = tnd_quotient(x, out.raw, out.raw_flag);
    out.trace = std::move(merger.trace);
    if (hom_face(x, out.filler, 0) != u || hom_face(x, out.filler, 2) != t)
        throw DomainError("constructed simplex does not restore the horn faces");
    return out;
}

}  // namespace ccat
