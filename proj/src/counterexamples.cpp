// Unfillable Lambda^3_1 horns built from pairs of simplices, and the case
// analysis that finds such a pair when X is not a nerve.

#include "ccat/errors.hpp"
#include "ccat/theorems.hpp"

namespace ccat {

namespace {

// U = J-splitting with flag J <= [n] <= [n]; S and T the single beads with
// flag {0,n} <= J <= [n]. Faces 0, 2, 3 of a Lambda^3_1 horn.
HornInHom horn_from_pair(const FinSSet& x, SimplexRef sigma, SimplexRef tau, VertexMask j) {
    const int n = sigma.dim();
    if (tau.degenerate()) std::swap(sigma, tau);
    if (tau.degenerate()) throw DomainError("at least one of the two simplices must be non-degenerate");
    const Necklace bead({n});
    const VertexMask all = bead.all_vertices();
    const VertexMask ends = bead.joins();
    if ((j & ends) != ends || j == all || popcount(j) < 3 || (j & ~all))
        throw DomainError("J must be a proper vertex set with both endpoints and one more vertex");
    const int source = x.vertices(tau).front(), target = x.vertices(tau).back();
    NecklaceMap s{bead, {sigma}, source, target};
    NecklaceMap t{bead, {tau}, source, target};
    s.validate(x);
    t.validate(x);
    HornInHom h{source, target, 3, 1, {}};
    h.faces.resize(4);
    h.faces[0] = tnd_quotient(x, split(x, t, j), Flag{{j, all, all}});
    h.faces[2] = tnd_quotient(x, s, Flag{{ends, j, all}});
    h.faces[3] = tnd_quotient(x, t, Flag{{ends, j, all}});
    if (!h.compatible(x)) throw DomainError("the two simplices do not agree where the horn needs them to");
    return h;
}

VertexMask mask_of_list(std::initializer_list<int> v) { return mask_of(std::vector<int>(v)); }

}  // namespace

HornInHom construct_badex_horn(const FinSSet& x, const SimplexRef& sigma, const SimplexRef& tau, VertexMask j) {
    const int n = sigma.dim();
    if (n < 3 || tau.dim() != n) throw DomainError("need two simplices of the same dimension n >= 3");
    if (sigma == tau) throw DomainError("the two simplices must be distinct");
    for (int i = 0; i <= n; ++i)
        if (x.face(sigma, i) != x.face(tau, i)) throw DomainError("the two simplices must have the same boundary");
    return horn_from_pair(x, sigma, tau, j);
}

HornInHom construct_lowdim_horn(const FinSSet& x, const SimplexRef& sigma, const SimplexRef& tau) {
    if (sigma.dim() != 3 || tau.dim() != 3) throw DomainError("need two 3-simplices");
    if (sigma == tau) throw DomainError("the two simplices must be distinct");
    if (x.face(sigma, 0) != x.face(tau, 0) || x.face(sigma, 2) != x.face(tau, 2))
        throw DomainError("d0 and d2 of the two simplices must agree");
    return horn_from_pair(x, sigma, tau, mask_of_list({0, 1, 3}));
}

HornInHom construct_lowdim_horn_dual(const FinSSet& x, const SimplexRef& sigma, const SimplexRef& tau) {
    if (sigma.dim() != 3 || tau.dim() != 3) throw DomainError("need two 3-simplices");
    if (sigma == tau) throw DomainError("the two simplices must be distinct");
    if (x.face(sigma, 1) != x.face(tau, 1) || x.face(sigma, 3) != x.face(tau, 3))
        throw DomainError("d1 and d3 of the two simplices must agree");
    return horn_from_pair(x, sigma, tau, mask_of_list({0, 2, 3}));
}

HornInHom lowdim_horn_from_triangles(const FinSSet& x, const SimplexRef& alpha, const SimplexRef& beta,
                                     std::vector<SimplexRef>* witnesses) {
    if (alpha.dim() != 2 || beta.dim() != 2) throw DomainError("need two 2-simplices");
    if (alpha == beta) throw DomainError("the two simplices must be distinct");
    if (x.face(alpha, 0) != x.face(beta, 0) || x.face(alpha, 2) != x.face(beta, 2))
        throw DomainError("d0 and d2 of the two simplices must agree");
    const SimplexRef zeroth = x.degeneracy(x.face(alpha, 0), 1);
    auto fill = [&](const SimplexRef& third) {
        auto f = find_fillers(x, {zeroth, std::nullopt, alpha, third});
        if (f.empty()) throw DomainError("Lambda^3_1 horn without filler: not a quasi-category");
        return f.front();
    };
    const SimplexRef sigma = fill(alpha);
    const SimplexRef tau = fill(beta);
    if (witnesses) *witnesses = {sigma, tau};
    return construct_lowdim_horn(x, sigma, tau);
}

// ---------------------------------------------------------------------------

NerveDetection detect_nerve(const FinSSet& x, int up_to, int size_cap) {
    if (up_to < 3) throw CapError("nerve detection needs dimensions up to at least 3");
    NerveDetection out;
    CheckReport rep = is_nerve_like(x, up_to);
    if (rep.ok) {
        out.is_nerve = true;
        out.case_name = "nerve";
        out.category = std::move(rep.category);
        out.detail = rep.detail;
        return out;
    }
    const Certificate& c = *rep.certificate;
    out.witness = c;
    const int n = c.n;
    if (c.kind == "sphere") {
        if (c.fillers.size() >= 2) {
            out.case_name = "badex";
            out.detail = "distinct " + std::to_string(n) + "-simplices with the same boundary";
            out.horn = construct_badex_horn(x, c.fillers[0], c.fillers[1], mask_of_list({0, 1, n}));
        } else {
            FaceAssignment horn = c.faces;
            const SimplexRef alpha = *horn[1];
            horn[1].reset();
            auto fill = find_fillers(x, horn);
            if (fill.empty()) throw DomainError("inner horn without filler: not a quasi-category");
            const SimplexRef beta = x.face(fill.front(), 1);
            if (n - 1 >= 3) {
                out.case_name = "sphere-badex";
                out.detail = "unfilled " + std::to_string(n) + "-sphere; filling its inner horn gives a second " +
                             std::to_string(n - 1) + "-simplex with the same boundary";
                out.horn = construct_badex_horn(x, alpha, beta, mask_of_list({0, 1, n - 1}));
            } else {
                out.case_name = "sphere-lowdim";
                out.detail = "unfilled 3-sphere; filling its inner horn gives two 2-simplices with one boundary";
                out.horn = lowdim_horn_from_triangles(x, alpha, beta);
            }
        }
    } else {
        if (c.fillers.size() < 2) throw DomainError("inner horn without filler: not a quasi-category");
        const SimplexRef& a = c.fillers[0];
        const SimplexRef& b = c.fillers[1];
        if (n == 2) {
            out.case_name = "lambda21";
            out.detail = "Lambda^2_1 horn with several fillers";
            out.horn = lowdim_horn_from_triangles(x, a, b);
        } else if (c.missing == 1) {
            out.case_name = "lambda31";
            out.detail = "Lambda^3_1 horn with several fillers";
            out.horn = construct_lowdim_horn(x, a, b);
        } else {
            out.case_name = "lambda32";
            out.detail = "Lambda^3_2 horn with several fillers";
            out.horn = construct_lowdim_horn_dual(x, a, b);
        }
    }
    out.certificate = certify_unfillable(x, *out.horn, size_cap);
    return out;
}

OuterHorns outer_horn_counterexample(const FinSSet& x, const HomSimplex& s) {
    if (s.dim() != 2 || !s.flag.strict()) throw DomainError("need a non-degenerate 2-simplex");
    const HomSimplex d0 = hom_face(x, s, 0), d1 = hom_face(x, s, 1), d2 = hom_face(x, s, 2);
    const int a = s.map.source, b = s.map.target;
    OuterHorns out;
    out.lambda20 = HornInHom{a, b, 2, 0, {std::nullopt, d2, d1}};
    out.lambda22 = HornInHom{a, b, 2, 2, {d1, d0, std::nullopt}};
    return out;
}

}  // namespace ccat
