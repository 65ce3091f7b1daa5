// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <climits>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "ccat/errors.hpp"
#include "ccat/notation.hpp"
#include "ccat/resolution.hpp"
#include "ccat/theorems.hpp"

using namespace ccat;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok && problems.size() < 5) problems.push_back(what);
        pass = pass && ok;
    }
};

VertexMask m(std::initializer_list<int> v) { return mask_of(std::vector<int>(v)); }

struct Space {
    std::string name;
    FinSSet x;
};

std::vector<int> vertices_of(const FinSSet& x) { return x.nondegenerate(0); }

// Every compatible horn (missing >= 0) or sphere (missing = -1) of dimension n
// in the truncated hom-space. Stops once `limit` have been visited.
long long for_each_hom_horn(const HomSpace& h, int n, int missing, long long limit,
                            const std::function<void(const HornInHom&, const FaceAssignment&)>& visit) {
    SimplexTable table(h.sset);
    long long seen = 0;
    table.for_each_compatible(n, missing, [&](const FaceAssignment& faces) {
        HornInHom horn{h.source, h.target, n, missing, {}};
        for (const auto& f : faces) horn.faces.push_back(f ? std::optional<HomSimplex>(h.decode(*f)) : std::nullopt);
        visit(horn, faces);
        return ++seen < limit;
    });
    return seen;
}

// --- 1 ----------------------------------------------------------------------

void cube_model(Verdict& v) {
    // (Delta^1)^k has (d + 2)^k simplices in dimension d.
    long long homs = 0;
    for (int n = 0; n <= 5; ++n) {
        const int cap = std::max(1, n - 1);
        auto rig = rigidify_nerve(categories::ordinal(n), cap, n + 1);
        auto rd = rigid_delta(n, cap);
        const IsoReport rep = iso_check(rig->cat, rd->cat, rigidification_to_rigid_delta(*rig, *rd), cap);
        v.require(rep.ok, "[" + std::to_string(n) + "]: " + rep.failure);
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                const int k = j - i - 1;
                const FinSSet& h = rig->cat.hom[i][j];
                for (int d = 0; d <= cap; ++d) {
                    const long long want = k < 0 ? 1 : static_cast<long long>(std::pow(d + 2, k));
                    v.require(h.count_simplices(d) == want, "hom(" + std::to_string(i) + "," + std::to_string(j) +
                                                                ") in Delta^" + std::to_string(n) + " dim " +
                                                                std::to_string(d));
                }
                v.require(k < 0 || h.count_nondegenerate(k) == [&] {
                    long long f = 1;
                    for (int t = 2; t <= k; ++t) f *= t;
                    return f;
                }(), "top cells of hom(" + std::to_string(i) + "," + std::to_string(j) + ")");
                ++homs;
            }
    }
    v.detail << homs << " hom-spaces, n <= 5, canonical iso to the cube and (d+2)^k counts";
}

// --- 2 ----------------------------------------------------------------------

void worked_example(Verdict& v) {
    const Shape d6 = make_shape(ShapeKind::simplex, 6);
    const FinSSet& x = d6.sset;
    const SimplexRef sigma = x.ref(*d6.cell_of({0, 1, 2, 3, 4, 5, 6}));
    const HomSimplex s{make_necklace_map(x, {sigma}, *d6.cell_of({0})),
                       Flag{{m({0, 6}), m({0, 3, 4, 6}), m({0, 1, 3, 4, 6}), m({0, 1, 2, 3, 4, 5, 6})}}};
    auto beads = [&](const HomSimplex& h) {
        std::vector<std::vector<int>> out;
        for (const auto& img : h.map.images) {
            std::vector<int> vs;
            for (int c : x.vertices(img)) vs.push_back(d6.vertex_set_of_cell[c][0]);
            out.push_back(vs);
        }
        return out;
    };
    auto render = [&](const HomSimplex& h) {
        return "(" + necklace_notation(h.shape()) + ", " + restriction_notation(beads(h), 6, "σ") + ", " +
               flag_notation(h.flag, h.shape().vertex_count()) + ")";
    };
    v.require(render(s) == "(Δ^6, σ, {0,6} ⊂ {0,3,4,6} ⊂ {0,1,3,4,6} ⊂ [6])", "the simplex renders as printed");
    const std::vector<std::string> printed = {
        "(Δ^3 ∨ Δ^1 ∨ Δ^2, σ|~, {0,3,4,6} ⊂ {0,1,3,4,6} ⊂ [6])", "(Δ^6, σ, {0,6} ⊂ {0,1,3,4,6} ⊂ [6])",
        "(Δ^6, σ, {0,6} ⊂ {0,3,4,6} ⊂ [6])", "(Δ^4, d2d5σ, {0,4} ⊂ {0,2,3,4} ⊂ [4])"};
    for (int i = 0; i <= 3; ++i) {
        const std::string got = render(hom_face(x, s, i));
        v.require(got == printed[i], "d" + std::to_string(i) + " = " + got);
    }
    const HomSimplex d0 = hom_face(x, s, 0);
    v.require(necklace_notation(split(s.shape(), s.flag.sets[1])) == "Δ^3 ∨ Δ^1 ∨ Δ^2", "splitting");
    v.require(bead_vertices_notation(beads(d0)) == "[0,1,2,3] [3,4] [4,5,6]", "bead restrictions of d0");
    v.require(hom_face(x, s, 1).shape() == hom_face(x, s, 2).shape(), "inner faces share the necklace");
    v.detail << "4 faces matched symbol for symbol";
}

// --- 3 ----------------------------------------------------------------------

// The two-triangle fixture re-completed 2-coskeletally up to dimension `cap`.
FinSSet two_triangle_to(int cap) {
    const FinSSet base = builtin_fixture("two-triangle").x;
    FinSSet x(2);
    for (int id = 0; id < base.size(); ++id) {
        const auto& c = base.cell(id);
        if (c.dim == 0)
            x.add_vertex(c.label);
        else if (c.dim <= 2)
            x.add_simplex(c.label, c.faces);
    }
    return coskeletal_completion(x, 2, cap);
}

// Exhaustive oracle for Lambda^2_1, amortized over a hom-space: every
// (necklace, flag) 2-simplex with at most `size` vertices, keyed by (d0, d2).
std::map<std::pair<HomSimplex, HomSimplex>, std::vector<HomSimplex>> outer_face_index(const FinSSet& x, int a, int b,
                                                                                      int size) {
    std::map<std::pair<HomSimplex, HomSimplex>, std::vector<HomSimplex>> index;
    for (const auto& m : enumerate_necklaces(x, a, b, size).maps) {
        const VertexMask joins = m.shape.joins(), all = m.shape.all_vertices();
        const VertexMask interior = all & ~joins;
        // T^1 runs over all sets between the joins and every vertex
        for (VertexMask sub = interior;; sub = (sub - 1) & interior) {
            const HomSimplex s{m, Flag{{joins, joins | sub, all}}};
            index[{hom_face(x, s, 0), hom_face(x, s, 2)}].push_back(s);
            if (sub == 0) break;
        }
    }
    return index;
}

void lambda21(Verdict& v) {
    struct Case {
        std::string name;
        FinSSet x;
        int size;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= 5; ++n) cases.push_back({"[" + std::to_string(n) + "]", nerve(categories::ordinal(n), n), 7});
    cases.push_back({"rs", nerve(categories::retraction(), 6), 7});
    cases.push_back({"parallel_pair", nerve(categories::parallel_pair(), 6), 7});
    // the fixture stops at dimension 4; necklaces with 7 vertices need beads up to dimension 6
    cases.push_back({"two-triangle", two_triangle_to(6), 7});
    long long horns = 0, merges = 0;
    for (const auto& c : cases)
        for (int a : vertices_of(c.x))
            for (int b : vertices_of(c.x)) {
                const HomSpace h = hom_space(c.x, a, b, 2, c.size);
                const auto oracle = outer_face_index(c.x, a, b, c.size);
                for_each_hom_horn(h, 2, 1, LLONG_MAX, [&](const HornInHom& horn, const FaceAssignment&) {
                    const std::string where = c.name + " hom(" + c.x.cell(a).label + "," + c.x.cell(b).label + ")";
                    try {
                        const Lambda21Filler f = fill_lambda21(c.x, horn);
                        merges += static_cast<long long>(f.trace.size());
                        v.require(hom_face(c.x, f.filler, 0) == *horn.faces[0] &&
                                      hom_face(c.x, f.filler, 2) == *horn.faces[2],
                                  where + ": faces of the filler");
                        const auto found = oracle.find({*horn.faces[0], *horn.faces[2]});
                        v.require(found != oracle.end() && std::find(found->second.begin(), found->second.end(),
                                                                     f.filler) != found->second.end(),
                                  where + ": filler not found by exhaustive search");
                    } catch (const std::exception& e) {
                        v.require(false, where + ": " + e.what());
                    }
                    ++horns;
                });
            }
    v.detail << horns << " horns over " << cases.size() << " spaces, " << merges
             << " merge steps; size cap 7";
}

// --- 4 ----------------------------------------------------------------------

void cosk3(Verdict& v) {
    std::vector<Space> spaces = {{"[3]", nerve(categories::ordinal(3), 3)},
                                 {"[4]", nerve(categories::ordinal(4), 4)},
                                 {"[5]", nerve(categories::ordinal(5), 5)},
                                 {"rs", nerve(categories::retraction(), 6)},
                                 {"parallel_pair", nerve(categories::parallel_pair(), 3)},
                                 {"five_object", nerve(categories::five_object(), 4)},
                                 {"two-triangle", builtin_fixture("two-triangle").x},
                                 {"cosk-sphere", builtin_fixture("cosk-sphere").x}};
    const long long exhaustive_limit = 100000;
    long long exhaustive = 0, sampled = 0;
    for (const auto& sp : spaces) {
        const int size = std::min(7, sp.x.dim_cap() + 1);
        for (int a : vertices_of(sp.x))
            for (int b : vertices_of(sp.x)) {
                const HomSpace h = hom_space(sp.x, a, b, 5, size);
                for (int n = 4; n <= 5; ++n) {
                    const std::string where = sp.name + " hom(" + sp.x.cell(a).label + "," + sp.x.cell(b).label +
                                              ") " + std::to_string(n) + "-spheres";
                    SimplexTable table(h.sset);
                    auto check = [&](const SphereInHom& s, const FaceAssignment& faces) {
                        try {
                            const HomSimplex f1 = fill_sphere_cosk3(sp.x, s);
                            const HomSimplex f2 = fill_sphere_cosk3(sp.x, s);
                            v.require(f1 == f2, where + ": not deterministic");
                            v.require(boundary_of(sp.x, f1).faces == s.faces, where + ": wrong boundary");
                            const auto oracle = table.fillers(faces);
                            v.require(oracle.size() == 1 && h.decode(oracle[0]) == f1,
                                      where + ": " + std::to_string(oracle.size()) + " fillers in the hom-space");
                        } catch (const std::exception& e) {
                            v.require(false, where + ": " + e.what());
                        }
                    };
                    long long count = 0;
                    table.for_each_compatible(n, -1, [&](const FaceAssignment&) { return ++count < exhaustive_limit; });
                    if (count < exhaustive_limit) {
                        for_each_hom_horn(h, n, -1, exhaustive_limit, [&](const HornInHom& horn, const FaceAssignment& fa) {
                            SphereInHom s{horn.source, horn.target, n, {}};
                            for (const auto& f : horn.faces) s.faces.push_back(*f);
                            check(s, fa);
                            ++exhaustive;
                        });
                    } else {
                        for (std::uint64_t seed = 1; seed <= 500; ++seed) {
                            const SphereInHom s = sample_sphere(sp.x, h, n, seed);
                            FaceAssignment fa;
                            for (const auto& f : s.faces) fa.push_back(h.encode(f));
                            check(s, fa);
                            ++sampled;
                        }
                    }
                }
            }
    }
    v.detail << exhaustive << " spheres exhaustively, " << sampled << " sampled, over " << spaces.size()
             << " spaces; size cap min(7, dim cap + 1)";
}

// --- 5 ----------------------------------------------------------------------

void sharpness(Verdict& v) {
    const Fixture fx = builtin_fixture("cosk-sphere");
    v.require(fx.sphere.has_value(), "fixture has a sphere");
    if (!fx.sphere) return;
    const std::vector<std::string> printed = {"{0,2} ⊂ {0,1,2} ⊂ {0,1,2}", "{0,3} ⊂ {0,2,3} ⊂ {0,1,2,3}",
                                              "{0,3} ⊂ {0,1,3} ⊂ {0,1,2,3}", "{0,2} ⊂ {0,2} ⊂ {0,1,2}"};
    for (int i = 0; i < 4; ++i) {
        std::string text;
        for (VertexMask s : fx.sphere->faces[i].flag.sets) text += (text.empty() ? "" : " ⊂ ") + mask_to_string(s);
        v.require(text == printed[i], "flag of T" + std::to_string(i) + " = " + text);
    }
    v.require(fx.sphere->compatible(fx.x), "sphere is compatible");
    const auto brute = hom_fillers(fx.x, fx.sphere->as_faces(), 8);
    const auto table = hom_fillers_sset(fx.x, fx.sphere->as_faces(), 6);
    v.require(brute.empty() && table.empty(), "a filler exists");
    bool refused = false;
    try {
        fill_sphere_cosk3(fx.x, *fx.sphere);
    } catch (const DomainError&) {
        refused = true;
    }
    v.require(refused, "fill_sphere_cosk3 accepted a 3-sphere");
    v.detail << "flags as printed; no filler by necklace search (size 8) or in the hom-space (size 6)";
}

// --- 6 ----------------------------------------------------------------------

// Edge of the horn between vertices a < b, read off a present face.
HomSimplex horn_edge(const FinSSet& x, const HornInHom& h, int a, int b) {
    for (int i = 0; i <= 3; ++i) {
        if (i == a || i == b || !h.faces[i]) continue;
        int c = 0;
        while (c == a || c == b || c == i) ++c;
        return hom_face(x, *h.faces[i], c - (c > i));
    }
    throw DomainError("edge not in the horn");
}

std::string spine_word(const FinSSet& x, const HomSimplex& s) {
    std::string w;
    for (const auto& img : s.map.images) {
        for (int j = 0; j < img.dim(); ++j) {
            const SimplexRef e = x.apply(img, OrdinalMap({j, j + 1}, img.dim() + 1));
            std::string label = x.cell(e.id).label;
            if (e.degenerate()) label = "1";
            if (label.size() > 2 && label.front() == '(') label = label.substr(1, label.size() - 2);
            w += label;
        }
    }
    return w;
}

std::string edge_name(const FinSSet& x, const HomSimplex& e) {
    if (!e.flag.strict()) {
        const std::string w = spine_word(x, hom_face(x, e, 0));
        return w.size() == 1 ? "s0" + w : "s0(" + w + ")";
    }
    if (spine_word(x, e) == "srs" && e.shape().bead_dims() == std::vector<int>{3}) return "T";
    if (spine_word(x, e) == "srs" && e.shape().bead_dims() == std::vector<int>{2, 1}) return "U";
    return to_string(x, e);
}

void nerve_case(Verdict& v) {
    std::vector<Space> nerves = {{"[3]", nerve(categories::ordinal(3), 4)},
                                 {"[4]", nerve(categories::ordinal(4), 4)},
                                 {"rs", nerve(categories::retraction(), 5)},
                                 {"parallel_pair", nerve(categories::parallel_pair(), 4)},
                                 {"five_object", nerve(categories::five_object(), 4)}};
    int homs = 0;
    for (const auto& sp : nerves)
        for (int a : vertices_of(sp.x))
            for (int b : vertices_of(sp.x)) {
                const HomSpace h = hom_space(sp.x, a, b, 4, 6);
                const CheckReport rep = is_coskeletal(h.sset, 2, 4);
                v.require(rep.ok, sp.name + " hom(" + sp.x.cell(a).label + "," + sp.x.cell(b).label + "): " + rep.detail);
                ++homs;
            }

    const Fixture fx = builtin_fixture("rs-horns");
    // the displayed diagrams, vertex by vertex and edge by edge
    const std::vector<std::vector<std::string>> vertices = {{"s", "s", "srs", "srs"}, {"s", "s", "s", "srs"}};
    const std::vector<std::vector<std::string>> edges = {{"s0s", "T", "U", "U", "U", "s0(srs)"},
                                                         {"s0s", "s0s", "U", "s0s", "T", "U"}};
    v.require(fx.horns.size() == 2, "two horns");
    for (std::size_t k = 0; k < fx.horns.size() && k < 2; ++k) {
        const HornInHom& h = fx.horns[k];
        const std::string name = k == 0 ? "Lambda^3_1" : "Lambda^3_2";
        v.require(h.compatible(fx.x) && h.missing == static_cast<int>(k) + 1, name + " shape");
        for (int a = 0; a <= 3; ++a) {
            const HomSimplex e = horn_edge(fx.x, h, a, a == 3 ? 2 : a + 1);
            const HomSimplex p = hom_face(fx.x, e, a == 3 ? 0 : 1);
            v.require(spine_word(fx.x, p) == vertices[k][a], name + " vertex " + std::to_string(a));
        }
        int idx = 0;
        for (int a = 0; a <= 3; ++a)
            for (int b = a + 1; b <= 3; ++b) {
                const std::string got = edge_name(fx.x, horn_edge(fx.x, h, a, b));
                v.require(got == edges[k][idx], name + " edge " + std::to_string(a) + std::to_string(b) + " = " + got);
                ++idx;
            }
        const UnfillableCertificate cert = certify_unfillable(fx.x, h, 7);
        v.require(cert.unfillable() && hom_fillers(fx.x, h, 8).empty(), name + " has a filler");
    }
    v.detail << homs << " nerve hom-spaces 2-coskeletal up to dim 4 (size 6); both displayed horns match and are "
             << "unfillable";
}

// --- 7 ----------------------------------------------------------------------

// Two 3-simplices on the boundary of Delta^3, completed 3-coskeletally.
FinSSet twin_tetrahedra() {
    Nerve nv = build_nerve(categories::ordinal(3), 2);
    FinSSet x = nv.sset;
    x.raise_dim_cap(3);
    std::vector<SimplexRef> faces;
    for (int i = 0; i <= 3; ++i) {
        std::vector<int> vs;
        for (int c = 0; c <= 3; ++c)
            if (c != i) vs.push_back(nv.vertex_of_object[c]);
        for (int id : x.nondegenerate(2))
            if (x.cell(id).vertices == vs) faces.push_back(x.ref(id));
    }
    x.add_simplex("sigma", faces);
    x.add_simplex("tau", faces);
    return coskeletal_completion(x, 3, 4);
}

void counterexamples(Verdict& v) {
    const Fixture tt = builtin_fixture("two-triangle");
    const SimplexRef alpha = tt.x.ref(*tt.x.find("alpha")), beta = tt.x.ref(*tt.x.find("beta"));
    int horns = 0;
    auto unfillable = [&](const FinSSet& x, const HornInHom& h, const std::string& what) {
        v.require(h.compatible(x), what + ": incompatible horn");
        v.require(hom_fillers(x, h, 8).empty(), what + ": filler found");
        v.require(hom_fillers_sset(x, h, 6).empty(), what + ": filler in the hom-space");
        ++horns;
    };

    // sigma, tau derived from the two triangles, then the low-dimensional construction on them
    std::vector<SimplexRef> witnesses;
    const HornInHom low = lowdim_horn_from_triangles(tt.x, alpha, beta, &witnesses);
    v.require(witnesses.size() >= 2, "sigma and tau are reported");
    if (witnesses.size() >= 2) {
        const SimplexRef sigma = witnesses[0], tau = witnesses[1];
        v.require(sigma != tau && tt.x.face(sigma, 0) == tt.x.face(tau, 0) && tt.x.face(sigma, 2) == tt.x.face(tau, 2),
                  "derived sigma, tau share d0 and d2");
        unfillable(tt.x, construct_lowdim_horn(tt.x, sigma, tau), "lowdim on the derived pair");
    }
    unfillable(tt.x, low, "lowdim from the two triangles");

    // the general construction needs twins with equal boundary, which a coskeletal
    // completion never has: twin tetrahedra stand in, plus a degenerate partner
    const FinSSet twins = twin_tetrahedra();
    const SimplexRef sigma = twins.ref(*twins.find("sigma")), tau = twins.ref(*twins.find("tau"));
    for (VertexMask j : {m({0, 1, 3}), m({0, 2, 3})}) unfillable(twins, construct_badex_horn(twins, sigma, tau, j), "badex");
    {
        FinSSet x = nerve(categories::ordinal(2), 2);
        x.raise_dim_cap(3);
        const SimplexRef s0top = x.degeneracy(x.ref(x.nondegenerate(2).front()), 0);
        std::vector<SimplexRef> faces;
        for (const auto& f : boundary_of(x, s0top)) faces.push_back(*f);
        x.add_simplex("tau", faces);
        x = coskeletal_completion(x, 3, 4);
        unfillable(x, construct_badex_horn(x, s0top, x.ref(*x.find("tau")), m({0, 1, 3})), "badex, degenerate partner");
    }

    // detect_nerve: "nerve" exactly on nerves
    int nerves = 0, others = 0;
    for (const auto& c : {categories::ordinal(2), categories::ordinal(3), categories::retraction(),
                          categories::parallel_pair(), categories::five_object(), categories::terminal()}) {
        const NerveDetection d = detect_nerve(nerve(c, 4), 4, 5);
        v.require(d.is_nerve && d.category && d.category->morphism_count() == c.morphism_count(),
                  "nerve not recognised: " + d.detail);
        ++nerves;
    }
    std::vector<Space> non_nerves = {{"two-triangle", tt.x}, {"twin tetrahedra", twins},
                                     {"cosk-sphere", builtin_fixture("cosk-sphere").x}};
    for (const auto& sp : non_nerves) {
        const int up_to = std::min(4, sp.x.dim_cap());
        const NerveDetection d = detect_nerve(sp.x, up_to, 6);
        v.require(!d.is_nerve && d.horn && d.certificate && d.certificate->unfillable(), sp.name + ": " + d.case_name);
        if (d.horn) unfillable(sp.x, *d.horn, sp.name + " detected horn (" + d.case_name + ")");
        ++others;
    }
    v.detail << horns << " constructed horns unfillable; detect_nerve right on " << nerves << " nerves and " << others
             << " non-nerves";
}

// --- 8 ----------------------------------------------------------------------

void resolution_iso(Verdict& v) {
    const std::vector<std::pair<std::string, FinCategory>> cats = {{"[1]", categories::ordinal(1)},
                                                                   {"[2]", categories::ordinal(2)},
                                                                   {"[3]", categories::ordinal(3)},
                                                                   {"rs", categories::retraction()},
                                                                   {"five_object", categories::five_object()}};
    long long checks = 0;
    for (const auto& [name, a] : cats) {
        auto res = free_resolution(a, 3, 6);
        auto rig = rigidify_nerve(a, 3, 7);
        const IsoReport rep = iso_check(res->cat, rig->cat, resolution_to_rigidification(*res, *rig), 3);
        v.require(rep.ok, name + ": " + rep.failure);
        checks += rep.checked;
    }
    v.detail << checks << " face/degeneracy/unit/composition checks, dim 3, necklaces <= 7 vertices";
}

// --- 9 ----------------------------------------------------------------------

void properties(Verdict& v) {
    long long n_checks = 0;
    auto check = [&](bool ok, const std::string& what) {
        v.require(ok, what);
        ++n_checks;
    };
    // cosimplicial identities, n <= 5
    for (int n = 2; n <= 5; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                check(compose(OrdinalMap::coface(i, n - 1), OrdinalMap::coface(j, n)) ==
                          compose(OrdinalMap::coface(j - 1, n - 1), OrdinalMap::coface(i, n)),
                      "d^j d^i");
    for (int n = 0; n <= 4; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                check(compose(OrdinalMap::codegeneracy(j + 1, n + 1), OrdinalMap::codegeneracy(i, n)) ==
                          compose(OrdinalMap::codegeneracy(i, n + 1), OrdinalMap::codegeneracy(j, n)),
                      "s^j s^i");
    // unique epi-mono factorization against enumeration, m, n <= 5
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (const auto& f : all_monotone_maps(a, b)) {
                int pairs = 0;
                for (int k = 0; k <= std::min(a, b); ++k)
                    for (const auto& e : all_monotone_maps(a, k)) {
                        if (!e.is_surjective()) continue;
                        for (const auto& i : all_monotone_maps(k, b))
                            if (i.is_injective() && compose(e, i) == f) ++pairs;
                    }
                const EpiMono em = epi_mono_factor(f);
                check(pairs == 1 && compose(em.epi.surjection(em.mono.source_dim()), em.mono) == f, "EZ factorization");
            }

    std::vector<Space> spaces = {{"[3]", nerve(categories::ordinal(3), 4)},
                                 {"rs", nerve(categories::retraction(), 5)},
                                 {"parallel_pair", nerve(categories::parallel_pair(), 4)},
                                 {"five_object", nerve(categories::five_object(), 4)},
                                 {"two-triangle", builtin_fixture("two-triangle").x},
                                 {"cosk-sphere", builtin_fixture("cosk-sphere").x}};
    for (const auto& sp : spaces) {
        const FinSSet& x = sp.x;
        for (int a : vertices_of(x))
            for (int b : vertices_of(x)) {
                const HomSpace h = hom_space(x, a, b, 3, 5);
                const std::string where = sp.name + " hom(" + x.cell(a).label + "," + x.cell(b).label + ")";
                for (int n = 0; n <= 3; ++n)
                    for (const auto& s : h.sset.simplices(n)) {
                        const HomSimplex t = h.decode(s);
                        for (int j = 1; n >= 2 && j <= n; ++j)
                            for (int i = 0; i < j; ++i)
                                check(h.sset.face(h.sset.face(s, j), i) == h.sset.face(h.sset.face(s, i), j - 1),
                                      where + ": d_i d_j");
                        for (int i = 0; n > 0 && i <= n; ++i)
                            check(h.decode(h.sset.face(s, i)) == hom_face(x, t, i), where + ": face of triple");
                        for (int i = 0; n < 3 && i <= n; ++i) {
                            const SimplexRef d = h.sset.degeneracy(s, i);
                            check(h.sset.face(d, i) == s && h.sset.face(d, i + 1) == s, where + ": d s = id");
                            check(h.decode(d) == hom_degeneracy(t, i), where + ": degeneracy of triple");
                        }
                        // inner faces keep the necklace
                        for (int i = 1; i < n; ++i) check(hom_face(x, t, i).shape() == t.shape(), where + ": inner face");
                        // quotients are idempotent, including on non-TND restrictions
                        check(tnd_quotient(x, t.map, t.flag) == t, where + ": quotient of a TND triple");
                        for (int k = 0; k <= n; ++k) {
                            const VertexMask keep = t.flag.sets[k];
                            Flag f;
                            for (int i = 0; i <= k; ++i) f.sets.push_back(compress(t.flag.sets[i], keep));
                            const HomSimplex q = tnd_quotient(x, restrict(x, t.map, keep), f);
                            check(q.map.totally_nondegenerate() && tnd_quotient(x, q.map, q.flag) == q,
                                  where + ": quotient idempotent");
                        }
                    }
            }
    }
    // outer horns
    {
        auto d3 = build_nerve(categories::ordinal(3), 3);
        auto h = hom_space(d3.sset, d3.vertex_of_object[0], d3.vertex_of_object[3], 2, 8);
        for (int id : h.sset.nondegenerate(2)) {
            const OuterHorns o = outer_horn_counterexample(d3.sset, h.simplex_of_cell[id]);
            check(hom_fillers(d3.sset, o.lambda20, 8).empty() && hom_fillers(d3.sset, o.lambda22, 8).empty(),
                  "outer horn in [3]");
        }
        const Fixture fx = builtin_fixture("rs-horns");
        const OuterHorns o = outer_horn_counterexample(fx.x, *fx.horns[0].faces[3]);
        check(hom_fillers(fx.x, o.lambda20, 7).empty() && hom_fillers(fx.x, o.lambda22, 7).empty(), "outer horn in rs");
    }
    // horns of dimension 5 fill uniquely
    {
        const FinSSet x = nerve(categories::five_object(), 6);
        const HomSpace h = hom_space(x, x.vertex_by_label("o0"), x.vertex_by_label("o4"), 5, 7);
        SimplexTable table(h.sset);
        long long horns = 0;
        for (int k = 0; k <= 5; ++k)
            horns += table.for_each_compatible(5, k, [&](const FaceAssignment& faces) {
                check(table.fillers(faces).size() == 1, "5-horn filler count");
                return true;
            });
        check(horns > 0, "some 5-horns");
    }
    v.detail << n_checks << " property checks";
}

}  // namespace

int main(int argc, char** argv) {
    // optional arguments pick criteria by number
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    struct Criterion {
        int id;
        std::string title;
        std::function<void(Verdict&)> run;
        double limit_s;  // 0: no runtime bound
    };
    const std::vector<Criterion> criteria = {
        {1, "cube model of hom-spaces of simplices", cube_model, 10},
        {2, "faces of the worked 3-simplex", worked_example, 0},
        {3, "Lambda^2_1 horns fill", lambda21, 60},
        {4, "4- and 5-spheres fill uniquely", cosk3, 0},
        {5, "the 3-sphere without filler", sharpness, 0},
        {6, "nerve hom-spaces are 2-coskeletal; rs horns", nerve_case, 0},
        {7, "counterexample horns and nerve detection", counterexamples, 0},
        {8, "free resolution = rigidified nerve", resolution_iso, 120},
        {9, "property suites", properties, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0) v.require(secs < c.limit_s, "runtime over " + std::to_string(static_cast<int>(c.limit_s)) + " s");
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << "criterion " << c.id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << c.title << " ("
             << v.detail.str() << "; " << secs << " s)";
        std::cout << line.str() << "\n";
        for (const auto& p : v.problems) std::cout << "    " << p << "\n";
        std::cout.flush();
        failed += !v.pass;
    }
    return failed == 0 ? 0 : 1;
}
