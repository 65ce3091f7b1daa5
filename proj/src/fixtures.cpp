#include "ccat/errors.hpp"
#include "ccat/theorems.hpp"

namespace ccat {

namespace {

VertexMask m(std::initializer_list<int> v) { return mask_of(std::vector<int>(v)); }

Fixture cosk_sphere() {
    Fixture fx;
    fx.name = "cosk-sphere";
    fx.description = "edges f, g: x -> y, a 2-simplex alpha and a 3-simplex sigma; a 3-sphere in C[X](x, y) "
                     "with no filler";
    FinSSet& x = fx.x;
    x = FinSSet(3);
    const int vx = x.add_vertex("x"), vy = x.add_vertex("y");
    const int f = x.add_simplex("f", {x.ref(vy), x.ref(vx)});
    const int g = x.add_simplex("g", {x.ref(vy), x.ref(vx)});
    const int alpha = x.add_simplex("alpha", {x.degeneracy(x.ref(vy), 0), x.ref(g), x.ref(f)});
    const int sigma = x.add_simplex("sigma", {x.ref(alpha), x.ref(alpha), x.degeneracy(x.ref(g), 0),
                                              x.degeneracy(x.ref(f), 0)});
    fx.source = vx;
    fx.target = vy;
    const NecklaceMap ta = make_necklace_map(x, {x.ref(alpha)}, vx);
    const NecklaceMap ts = make_necklace_map(x, {x.ref(sigma)}, vx);
    SphereInHom s{vx, vy, 3, {}};
    s.faces.push_back({ta, Flag{{m({0, 2}), m({0, 1, 2}), m({0, 1, 2})}}});
    s.faces.push_back({ts, Flag{{m({0, 3}), m({0, 2, 3}), m({0, 1, 2, 3})}}});
    s.faces.push_back({ts, Flag{{m({0, 3}), m({0, 1, 3}), m({0, 1, 2, 3})}}});
    s.faces.push_back({ta, Flag{{m({0, 2}), m({0, 2}), m({0, 1, 2})}}});
    fx.sphere = s;
    return fx;
}

Fixture rs_horns() {
    Fixture fx;
    fx.name = "rs-horns";
    fx.description = "nerve of the category with s: x -> y, r: y -> x, rs = 1_x; a Lambda^3_1 and a Lambda^3_2 "
                     "horn in C[X](x, y) with no filler";
    const FinCategory cat = categories::retraction();
    const Nerve nv = build_nerve(cat, 3);
    fx.x = nv.sset;
    const FinSSet& x = fx.x;
    const int ox = cat.object_by_label("x");
    const int s = cat.morphism_by_label("s"), r = cat.morphism_by_label("r");
    fx.source = nv.vertex_of_object[ox];
    fx.target = nv.vertex_of_object[cat.object_by_label("y")];

    const HomSimplex alpha{make_necklace_map(x, {nv.chain_ref(ox, {s, r, s})}, fx.source),
                           Flag{{m({0, 3}), m({0, 2, 3}), m({0, 1, 2, 3})}}};
    const HomSimplex u{make_necklace_map(x, {nv.chain_ref(ox, {s, r}), nv.chain_ref(ox, {s})}, fx.source),
                       Flag{{m({0, 2, 3}), m({0, 1, 2, 3})}}};
    const HomSimplex vs{make_necklace_map(x, {nv.chain_ref(ox, {s})}, fx.source), Flag{{m({0, 1})}}};

    HornInHom h31{fx.source, fx.target, 3, 1, {}};
    h31.faces = {hom_degeneracy(u, 1), std::nullopt, hom_degeneracy(u, 0), alpha};
    HornInHom h32{fx.source, fx.target, 3, 2, {}};
    h32.faces = {alpha, hom_degeneracy(u, 0), std::nullopt, hom_degeneracy(hom_degeneracy(vs, 0), 0)};
    fx.horns = {h31, h32};
    return fx;
}

FinSSet two_triangle_base() {
    FinSSet x(2);
    const int v0 = x.add_vertex("0"), v1 = x.add_vertex("1"), v2 = x.add_vertex("2");
    const int a = x.add_simplex("a", {x.ref(v1), x.ref(v0)});
    const int b = x.add_simplex("b", {x.ref(v2), x.ref(v1)});
    const int c = x.add_simplex("c", {x.ref(v2), x.ref(v0)});
    x.add_simplex("alpha", {x.ref(b), x.ref(c), x.ref(a)});
    x.add_simplex("beta", {x.ref(b), x.ref(c), x.ref(a)});
    return x;
}

Fixture two_triangle() {
    Fixture fx;
    fx.name = "two-triangle";
    fx.description = "2-coskeletal completion of two 2-simplices alpha != beta with boundary (b, c, a); a "
                     "quasi-category that is not a nerve";
    fx.x = coskeletal_completion(two_triangle_base(), 2, 4);
    fx.source = fx.x.vertex_by_label("0");
    fx.target = fx.x.vertex_by_label("2");
    const SimplexRef alpha = fx.x.ref(*fx.x.find("alpha"));
    const SimplexRef beta = fx.x.ref(*fx.x.find("beta"));
    fx.horns = {lowdim_horn_from_triangles(fx.x, alpha, beta)};
    return fx;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"cosk-sphere", "rs-horns", "two-triangle"}; }

Fixture builtin_fixture(const std::string& name) {
    if (name == "cosk-sphere") return cosk_sphere();
    if (name == "rs-horns") return rs_horns();
    if (name == "two-triangle") return two_triangle();
    throw InputError("unknown fixture '" + name + "' (expected cosk-sphere, rs-horns or two-triangle)");
}

}  // namespace ccat
