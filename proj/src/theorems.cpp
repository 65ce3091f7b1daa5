#include "ccat/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "ccat/errors.hpp"

namespace ccat {

namespace {

bool faces_agree(const FinSSet& x, const std::vector<std::optional<HomSimplex>>& faces, int n, int source,
                 int target) {
    if (static_cast<int>(faces.size()) != n + 1) return false;
    for (const auto& f : faces) {
        if (!f) continue;
        if (f->dim() != n - 1 || f->map.source != source || f->map.target != target) return false;
    }
    if (n < 2) return true;
    for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
            if (!faces[i] || !faces[j]) continue;
            if (hom_face(x, *faces[j], i) != hom_face(x, *faces[i], j - 1)) return false;
        }
    return true;
}

}  // namespace

bool HornInHom::compatible(const FinSSet& x) const {
    if (missing < 0 || missing > n || static_cast<int>(faces.size()) != n + 1 || faces[missing]) return false;
    return faces_agree(x, faces, n, source, target);
}

HornInHom SphereInHom::as_faces() const {
    HornInHom h{source, target, n, -1, {}};
    for (const auto& f : faces) h.faces.emplace_back(f);
    return h;
}

bool SphereInHom::compatible(const FinSSet& x) const {
    auto h = as_faces();
    return faces_agree(x, h.faces, n, source, target);
}

SphereInHom boundary_of(const FinSSet& x, const HomSimplex& s) {
    SphereInHom out{s.map.source, s.map.target, s.dim(), {}};
    for (int i = 0; i <= s.dim(); ++i) out.faces.push_back(hom_face(x, s, i));
    return out;
}

std::string to_string(const FinSSet& x, const HornInHom& h) {
    std::ostringstream os;
    os << (h.missing >= 0 ? "horn" : "sphere") << " n=" << h.n;
    if (h.missing >= 0) os << " k=" << h.missing;
    for (int i = 0; i < static_cast<int>(h.faces.size()); ++i)
        os << "\n  d" << i << ": " << (h.faces[i] ? to_string(x, *h.faces[i]) : std::string("-"));
    return os.str();
}

// ---------------------------------------------------------------------------
// Exhaustive filler searches.

namespace {

// Every flag of length n+1 on t (weak, repeats allowed).
template <class F>
void for_each_flag(const Necklace& t, int n, F&& visit) {
    const VertexMask joins = t.joins();
    const auto interior = positions(t.all_vertices() & ~joins);
    const int r = static_cast<int>(interior.size());
    if (n == 0) {
        if (r == 0) visit(Flag{{joins}});
        return;
    }
    std::vector<int> level(r, 1);
    while (true) {
        Flag f{{joins}};
        for (int t_ = 1; t_ <= n; ++t_) {
            VertexMask m = f.sets.back();
            for (int q = 0; q < r; ++q)
                if (level[q] == t_) m |= VertexMask{1} << interior[q];
            f.sets.push_back(m);
        }
        visit(f);
        int q = r - 1;
        while (q >= 0 && level[q] == n) level[q--] = 1;
        if (q < 0) break;
        ++level[q];
    }
}

std::vector<HomSimplex> search_fillers(const FinSSet& x, const HornInHom& h, int size_cap, long long& searched) {
    std::vector<HomSimplex> out;
    auto necklaces = enumerate_necklaces(x, h.source, h.target, size_cap);
    for (const auto& m : necklaces.maps)
        for_each_flag(m.shape, h.n, [&](const Flag& f) {
            ++searched;
            HomSimplex s{m, f};
            for (int i = 0; i <= h.n; ++i)
                if (h.faces[i] && hom_face(x, s, i) != *h.faces[i]) return;
            out.push_back(s);
        });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<HomSimplex> hom_fillers(const FinSSet& x, const HornInHom& h, int size_cap) {
    long long searched = 0;
    return search_fillers(x, h, size_cap, searched);
}

std::vector<HomSimplex> hom_fillers_sset(const FinSSet& x, const HornInHom& h, int size_cap) {
    HomSpace hs = hom_space(x, h.source, h.target, h.n, size_cap);
    FaceAssignment faces;
    for (const auto& f : h.faces) faces.push_back(f ? std::optional<SimplexRef>(hs.encode(*f)) : std::nullopt);
    std::vector<HomSimplex> out;
    for (const auto& r : find_fillers(hs.sset, faces)) out.push_back(hs.decode(r));
    std::sort(out.begin(), out.end());
    return out;
}

UnfillableCertificate certify_unfillable(const FinSSet& x, const HornInHom& h, int size_cap) {
    UnfillableCertificate c;
    c.size_cap = size_cap;
    int inner = -1;
    for (int i = 1; i < h.n; ++i)
        if (h.faces[i]) inner = i;
    if (inner > 0) {
        const auto& pin = *h.faces[inner];
        c.argument = "inner face d" + std::to_string(inner) + " fixes the necklace of any filler to " +
                     pin.shape().to_string() + "; no flag on it restores every other face";
        std::vector<HomSimplex> pinned;
        for_each_flag(pin.shape(), h.n, [&](const Flag& f) {
            HomSimplex s{pin.map, f};
            bool ok = true;
            for (int i = 0; i <= h.n && ok; ++i)
                if (h.faces[i]) ok = hom_face(x, s, i) == *h.faces[i];
            if (ok) pinned.push_back(s);
        });
        if (!pinned.empty()) c.argument += " (structural argument fails: a flag exists)";
    } else {
        c.argument = "outer faces are proper subnecklaces of the inner face they would have to produce";
    }
    c.fillers = search_fillers(x, h, size_cap, c.searched);
    return c;
}

// ---------------------------------------------------------------------------

HomSimplex fill_sphere_cosk3(const FinSSet& x, const SphereInHom& s) {
    if (s.n < 4) throw DomainError("unique sphere filling needs n >= 4; 3-spheres can be empty");
    if (static_cast<int>(s.faces.size()) != s.n + 1 || !s.compatible(x))
        throw DomainError("sphere faces are not compatible");
    // every inner face shares the necklace; its flag is the common flag minus one level
    HomSimplex out{s.faces[1].map, s.faces[1].flag};
    out.flag.sets.insert(out.flag.sets.begin() + 1, s.faces[2].flag.sets[1]);
    for (int i = 0; i <= s.n; ++i)
        if (hom_face(x, out, i) != s.faces[i]) throw DomainError("sphere faces are not compatible");
    return out;
}

SphereInHom sample_sphere(const FinSSet& x, const HomSpace& h, int n, std::uint64_t seed) {
    if (n < 1 || n > h.dim_cap) throw CapError("sphere dimension outside the hom-space cap");
    auto all = h.sset.simplices(n);
    if (all.empty()) throw DomainError("hom-space has no simplices of that dimension");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return boundary_of(x, h.decode(all[pick(rng)]));
}

}  // namespace ccat
