#include "doctest.h"

#include <cmath>

#include "ccat/errors.hpp"
#include "ccat/necklace.hpp"
#include "ccat/sset.hpp"

using namespace ccat;

namespace {

int vertex(const Shape& s, int v) { return *s.cell_of({v}); }

SimplexRef face_on(const Shape& s, std::vector<int> vs) { return s.sset.ref(*s.cell_of(vs)); }

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// d_i d_j = d_{j-1} d_i and the mixed relations, on raw triples.
void check_hom_identities(const FinSSet& x, const HomSpace& h) {
    for (int n = 0; n <= h.dim_cap; ++n)
        for (const auto& r : h.sset.simplices(n)) {
            const HomSimplex s = h.decode(r);
            REQUIRE(h.encode(s) == r);
            for (int j = 0; j <= n; ++j) {
                auto d = hom_degeneracy(s, j);
                REQUIRE(hom_face(x, d, j) == s);
                REQUIRE(hom_face(x, d, j + 1) == s);
            }
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    if (n < 2) continue;
                    REQUIRE(hom_face(x, hom_face(x, s, j), i) == hom_face(x, hom_face(x, s, i), j - 1));
                }
        }
}

}  // namespace

TEST_CASE("necklace basics") {
    Necklace t({3, 1, 2});
    CHECK(t.vertex_count() == 7);
    CHECK(t.joins() == mask_of({0, 3, 4, 6}));
    CHECK(spine(t).bead_dims() == std::vector<int>(6, 1));
    CHECK(diagonal(t).bead_dims() == std::vector<int>{6});
    CHECK(split(Necklace({6}), mask_of({0, 3, 4, 6})).bead_dims() == std::vector<int>{3, 1, 2});
    CHECK(restrict(t, mask_of({0, 2, 3, 4, 6})).bead_dims() == std::vector<int>{2, 1, 1});
    CHECK_THROWS_AS(split(t, mask_of({0, 4, 6})), DomainError);
    CHECK(compress(mask_of({0, 3, 6}), mask_of({0, 1, 3, 4, 6})) == mask_of({0, 2, 4}));
    Necklace empty;
    CHECK(empty.vertex_count() == 1);
    CHECK(empty.joins() == 1);
}

TEST_CASE("faces of a 3-simplex in the hom-space of Delta^6") {
    auto d6 = make_shape(ShapeKind::simplex, 6);
    const FinSSet& x = d6.sset;
    auto sigma = face_on(d6, {0, 1, 2, 3, 4, 5, 6});
    HomSimplex s{make_necklace_map(x, {sigma}, vertex(d6, 0)),
                 Flag{{mask_of({0, 6}), mask_of({0, 3, 4, 6}), mask_of({0, 1, 3, 4, 6}), mask_of({0, 1, 2, 3, 4, 5, 6})}}};

    HomSimplex d0 = hom_face(x, s, 0);
    CHECK(d0.shape().bead_dims() == std::vector<int>{3, 1, 2});
    CHECK(d0.map.images[0] == face_on(d6, {0, 1, 2, 3}));
    CHECK(d0.map.images[1] == face_on(d6, {3, 4}));
    CHECK(d0.map.images[2] == face_on(d6, {4, 5, 6}));
    CHECK(d0.flag == Flag{{mask_of({0, 3, 4, 6}), mask_of({0, 1, 3, 4, 6}), mask_of({0, 1, 2, 3, 4, 5, 6})}});

    HomSimplex d1 = hom_face(x, s, 1);
    CHECK(d1.map == s.map);
    CHECK(d1.flag == Flag{{mask_of({0, 6}), mask_of({0, 1, 3, 4, 6}), mask_of({0, 1, 2, 3, 4, 5, 6})}});
    HomSimplex d2 = hom_face(x, s, 2);
    CHECK(d2.map == s.map);
    CHECK(d2.flag == Flag{{mask_of({0, 6}), mask_of({0, 3, 4, 6}), mask_of({0, 1, 2, 3, 4, 5, 6})}});

    HomSimplex d3 = hom_face(x, s, 3);
    CHECK(d3.shape().bead_dims() == std::vector<int>{4});
    CHECK(d3.map.images[0] == x.face(x.face(sigma, 5), 2));
    CHECK(d3.flag == Flag{{mask_of({0, 4}), mask_of({0, 2, 3, 4}), mask_of({0, 1, 2, 3, 4})}});
}

TEST_CASE("quotient drops collapsed beads") {
    auto d2 = make_shape(ShapeKind::simplex, 2);
    const FinSSet& x = d2.sset;
    auto e01 = face_on(d2, {0, 1});
    auto v1 = face_on(d2, {1});
    // (s0 e01) v (s0 v1): a 2-bead that degenerates onto an edge, then a collapsed edge
    NecklaceMap m{Necklace({2, 1}), {x.degeneracy(e01, 0), x.degeneracy(v1, 0)}, vertex(d2, 0), vertex(d2, 1)};
    m.validate(x);
    HomSimplex q = tnd_quotient(x, m, Flag{{mask_of({0, 2, 3}), mask_of({0, 1, 2, 3})}});
    CHECK(q.shape().bead_dims() == std::vector<int>{1});
    CHECK(q.map.images[0] == e01);
    CHECK(q.flag == Flag{{mask_of({0, 1}), mask_of({0, 1})}});
}

TEST_CASE("necklaces in Delta^n") {
    // Oracle: a necklace from i to j is a subset of the interior vertices
    // together with a choice of which of them are joins: 3^(j-i-1).
    for (int n = 1; n <= 5; ++n) {
        auto dn = make_shape(ShapeKind::simplex, n);
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                auto e = enumerate_necklaces(dn.sset, vertex(dn, i), vertex(dn, j), 64);
                CHECK(static_cast<long long>(e.maps.size()) == ipow(3, std::max(0, j - i - 1)));
                CHECK_FALSE(e.size_truncated);
                for (const auto& m : e.maps) CHECK(m.totally_nondegenerate());
            }
    }
    auto d3 = make_shape(ShapeKind::simplex, 3);
    CHECK(enumerate_necklaces(d3.sset, vertex(d3, 0), vertex(d3, 3), 64).maps.size() == 9);
    auto capped = enumerate_necklaces(d3.sset, vertex(d3, 0), vertex(d3, 3), 3);
    CHECK(capped.size_truncated);
    CHECK(capped.maps.size() == 5);  // the edge, and {0,1,3},{0,2,3} as one bead or two
}

TEST_CASE("hom-space of Delta^3 from 0 to 3") {
    auto d3 = make_shape(ShapeKind::simplex, 3);
    auto h = hom_space(d3.sset, vertex(d3, 0), vertex(d3, 3), 3, 64);
    CHECK(h.sset.count_nondegenerate(0) == 4);
    CHECK(h.sset.count_nondegenerate(1) == 5);
    CHECK(h.sset.count_nondegenerate(2) == 2);
    CHECK(h.sset.count_nondegenerate(3) == 0);
    CHECK(h.sset.count_simplices(0) == 4);
    CHECK(h.sset.count_simplices(1) == 9);
    CHECK(h.sset.count_simplices(2) == 16);
    h.sset.validate();
    check_hom_identities(d3.sset, h);
}

TEST_CASE("hom-spaces of simplices are cubes") {
    // C[Delta^n](i, j) is (Delta^1)^(j-i-1), with (k+2)^(j-i-1) k-simplices.
    for (int n = 1; n <= 5; ++n) {
        auto dn = make_shape(ShapeKind::simplex, n);
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                const int cap = std::min(3, std::max(0, j - i - 1));
                auto h = hom_space(dn.sset, vertex(dn, i), vertex(dn, j), cap, 64);
                for (int k = 0; k <= cap; ++k)
                    CHECK(h.sset.count_simplices(k) == ipow(k + 2, std::max(0, j - i - 1)));
            }
    }
}

TEST_CASE("hom-space identities on a nerve with loops") {
    auto rs = nerve(categories::retraction(), 3);
    const int x = rs.vertex_by_label("x");
    const int y = rs.vertex_by_label("y");
    for (auto [a, b] : {std::pair{x, y}, std::pair{y, y}, std::pair{x, x}}) {
        auto h = hom_space(rs, a, b, 3, 4);
        CHECK(h.size_truncated);
        h.sset.validate();
        check_hom_identities(rs, h);
    }
}

TEST_CASE("concatenation") {
    auto d3 = make_shape(ShapeKind::simplex, 3);
    const FinSSet& x = d3.sset;
    HomSimplex a{make_necklace_map(x, {face_on(d3, {0, 1, 2})}, vertex(d3, 0)),
                 Flag{{mask_of({0, 2}), mask_of({0, 1, 2})}}};
    HomSimplex b{make_necklace_map(x, {face_on(d3, {2, 3})}, vertex(d3, 2)), Flag{{mask_of({0, 1}), mask_of({0, 1})}}};
    HomSimplex c = concatenate(a, b);
    CHECK(c.shape().bead_dims() == std::vector<int>{2, 1});
    CHECK(c.flag == Flag{{mask_of({0, 2, 3}), mask_of({0, 1, 2, 3})}});
    CHECK_THROWS_AS(concatenate(b, a), DomainError);
}

TEST_CASE("collapsed degenerate edge bead") {
    auto d1 = make_shape(ShapeKind::simplex, 1);
    const FinSSet& x = d1.sset;
    auto e = face_on(d1, {0, 1});
    auto sy = x.degeneracy(face_on(d1, {1}), 0);
    NecklaceMap m{Necklace({1, 1}), {e, sy}, vertex(d1, 0), vertex(d1, 1)};
    m.validate(x);
    HomSimplex q = tnd_quotient(x, m, Flag{{mask_of({0, 1, 2})}});
    CHECK(q.shape().bead_dims() == std::vector<int>{1});
    CHECK(q.map.images == std::vector<SimplexRef>{e});
    CHECK(q.flag == Flag{{mask_of({0, 1})}});
    CHECK(tnd_quotient(x, q.map, q.flag) == q);
}

TEST_CASE("hom-spaces of a 1-skeletal set are discrete") {
    FinSSet x(1);
    int a = x.add_vertex("a"), b = x.add_vertex("b");
    x.add_simplex("f", {x.ref(b), x.ref(a)});
    x.add_simplex("g", {x.ref(b), x.ref(a)});
    x.add_simplex("h", {x.ref(b), x.ref(b)});
    auto h = hom_space(x, a, b, 3, 5);
    CHECK(h.sset.count_nondegenerate(0) == 2 * 4);  // f or g, then 0..3 loops h
    for (int k = 1; k <= 3; ++k) CHECK(h.sset.count_nondegenerate(k) == 0);
}

TEST_CASE("inner faces keep the necklace; nerves need no quotient") {
    auto rs = nerve(categories::retraction(), 3);
    auto n3 = nerve(categories::ordinal(3), 3);
    for (const FinSSet* x : {&rs, &n3})
        for (int a = 0; a < x->size(); ++a) {
            if (x->cell(a).dim != 0) continue;
            for (int b = 0; b < x->size(); ++b) {
                if (x->cell(b).dim != 0) continue;
                auto h = hom_space(*x, a, b, 3, 5);
                for (int k = 1; k <= 3; ++k)
                    for (int id : h.sset.nondegenerate(k)) {
                        const HomSimplex& s = h.simplex_of_cell[id];
                        for (int i = 1; i < k; ++i) CHECK(hom_face(*x, s, i).shape() == s.shape());
                        CHECK(split(*x, s.map, s.flag.sets[1]).totally_nondegenerate());
                        // restriction composes morphisms; in the retraction category r.s = id
                        if (x == &n3) CHECK(restrict(*x, s.map, s.flag.sets[k - 1]).totally_nondegenerate());
                    }
            }
        }
}

TEST_CASE("necklaces in the retraction nerve") {
    auto cat = categories::retraction();
    auto nv = build_nerve(cat, 3);
    const int x = nv.sset.vertex_by_label("x");
    const int y = nv.sset.vertex_by_label("y");
    auto e = enumerate_necklaces(nv.sset, x, y, 4);
    // Oracle: spines are walks x -> y over s: x->y, r: y->x, e: y->y (s, se,
    // see, srs); a spine of length L admits 2^(L-1) groupings into beads.
    CHECK(e.maps.size() == 1 + 2 + 2 * 4);
    int srs = 0;
    for (const auto& m : e.maps) {
        CHECK(m.shape.vertex_count() <= 4);
        if (m.shape.bead_dims() == std::vector<int>{1, 1, 1} &&
            nv.chain_of_cell[m.images[1].id] == std::vector<int>{cat.morphism_by_label("r")})
            ++srs;
    }
    CHECK(srs == 1);
}
