#include "ccat/necklace.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "ccat/errors.hpp"

namespace ccat {

int popcount(VertexMask m) { return std::popcount(m); }

std::vector<int> positions(VertexMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

VertexMask mask_of(const std::vector<int>& ps) {
    VertexMask m = 0;
    for (int p : ps) {
        if (p < 0 || p >= 64) throw DomainError("vertex position out of range");
        m |= VertexMask{1} << p;
    }
    return m;
}

VertexMask compress(VertexMask m, VertexMask k) {
    if (m & ~k) throw DomainError("compress: set is not contained in the index set");
    VertexMask out = 0;
    int rank = 0;
    for (int p : positions(k)) {
        if (m >> p & 1) out |= VertexMask{1} << rank;
        ++rank;
    }
    return out;
}

std::string mask_to_string(VertexMask m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int p : positions(m)) {
        if (!first) os << ",";
        os << p;
        first = false;
    }
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------

Necklace::Necklace(std::vector<int> bead_dims) : beads_(std::move(bead_dims)) {
    int v = 0;
    for (int d : beads_) {
        if (d < 1) throw DomainError("necklace beads must have dimension at least 1");
        starts_.push_back(v);
        v += d;
        if (v >= 64) throw CapError("necklace has more than 64 vertices");
        joins_ |= VertexMask{1} << v;
    }
    vertices_ = v + 1;
}

VertexMask Necklace::all_vertices() const {
    return vertices_ == 64 ? ~VertexMask{0} : (VertexMask{1} << vertices_) - 1;
}

std::string Necklace::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int b = 0; b < bead_count(); ++b) os << (b ? "," : "") << beads_[b];
    os << "]";
    return os.str();
}

Necklace spine(const Necklace& t) { return Necklace(std::vector<int>(t.vertex_count() - 1, 1)); }

Necklace diagonal(const Necklace& t) {
    if (t.vertex_count() == 1) return t;
    return Necklace({t.vertex_count() - 1});
}

namespace {

void require_joins(const Necklace& t, VertexMask k) {
    if ((t.joins() & ~k) || (k & ~t.all_vertices()))
        throw DomainError("vertex set must contain the joins and lie in the necklace");
}

// Positions of k inside bead b, relative to the bead start.
std::vector<int> local_positions(const Necklace& t, int b, VertexMask k) {
    std::vector<int> out;
    const int a = t.bead_start(b);
    for (int p = 0; p <= t.bead_dims()[b]; ++p)
        if (k >> (a + p) & 1) out.push_back(p);
    return out;
}

}  // namespace

Necklace split(const Necklace& t, VertexMask k) {
    require_joins(t, k);
    std::vector<int> dims;
    for (int b = 0; b < t.bead_count(); ++b) {
        auto ps = local_positions(t, b, k);
        for (std::size_t q = 0; q + 1 < ps.size(); ++q) dims.push_back(ps[q + 1] - ps[q]);
    }
    return Necklace(dims);
}

Necklace restrict(const Necklace& t, VertexMask k) {
    require_joins(t, k);
    std::vector<int> dims;
    for (int b = 0; b < t.bead_count(); ++b)
        dims.push_back(static_cast<int>(local_positions(t, b, k).size()) - 1);
    return Necklace(dims);
}

// ---------------------------------------------------------------------------

void NecklaceMap::validate(const FinSSet& x) const {
    if (static_cast<int>(images.size()) != shape.bead_count())
        throw DomainError("necklace map needs one image per bead");
    int at = source;
    for (int b = 0; b < shape.bead_count(); ++b) {
        const SimplexRef& s = images[b];
        if (s.id < 0 || s.id >= x.size() || x.cell(s.id).dim != s.base_dim)
            throw DomainError("necklace map image is not a simplex");
        if (s.dim() != shape.bead_dims()[b]) throw DomainError("bead image has wrong dimension");
        auto vs = x.vertices(s);
        if (vs.front() != at) throw DomainError("bead images do not chain");
        at = vs.back();
    }
    if (at != target) throw DomainError("necklace map does not end at its target");
}

bool NecklaceMap::totally_nondegenerate() const {
    return std::none_of(images.begin(), images.end(), [](const SimplexRef& s) { return s.degenerate(); });
}

NecklaceMap make_necklace_map(const FinSSet& x, std::vector<SimplexRef> images, int source) {
    std::vector<int> dims;
    for (const auto& s : images) dims.push_back(s.dim());
    NecklaceMap m{Necklace(dims), std::move(images), source, source};
    if (!m.images.empty()) m.target = x.vertices(m.images.back()).back();
    m.validate(x);
    return m;
}

NecklaceMap split(const FinSSet& x, const NecklaceMap& m, VertexMask k) {
    require_joins(m.shape, k);
    NecklaceMap out{split(m.shape, k), {}, m.source, m.target};
    for (int b = 0; b < m.shape.bead_count(); ++b) {
        const int d = m.shape.bead_dims()[b];
        auto ps = local_positions(m.shape, b, k);
        for (std::size_t q = 0; q + 1 < ps.size(); ++q) {
            std::vector<int> interval;
            for (int p = ps[q]; p <= ps[q + 1]; ++p) interval.push_back(p);
            out.images.push_back(x.apply(m.images[b], OrdinalMap(interval, d + 1)));
        }
    }
    return out;
}

NecklaceMap restrict(const FinSSet& x, const NecklaceMap& m, VertexMask k) {
    require_joins(m.shape, k);
    NecklaceMap out{restrict(m.shape, k), {}, m.source, m.target};
    for (int b = 0; b < m.shape.bead_count(); ++b) {
        const int d = m.shape.bead_dims()[b];
        out.images.push_back(x.apply(m.images[b], OrdinalMap(local_positions(m.shape, b, k), d + 1)));
    }
    return out;
}

// ---------------------------------------------------------------------------

bool Flag::strict() const {
    for (std::size_t i = 0; i + 1 < sets.size(); ++i)
        if (sets[i] == sets[i + 1]) return false;
    return true;
}

void Flag::validate(const Necklace& t) const {
    if (sets.empty()) throw DomainError("flag must have at least one level");
    if ((t.joins() & ~sets.front()) != 0) throw DomainError("flag must start with a set containing the joins");
    if (sets.back() != t.all_vertices()) throw DomainError("flag must end with all vertices");
    for (std::size_t i = 0; i + 1 < sets.size(); ++i)
        if (sets[i] & ~sets[i + 1]) throw DomainError("flag is not increasing");
}

std::string Flag::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? "<" : "") + mask_to_string(sets[i]);
    return out;
}

HomSimplex tnd_quotient(const FinSSet&, const NecklaceMap& m, const Flag& flag) {
    flag.validate(m.shape);
    std::vector<int> dims;
    std::vector<SimplexRef> images;
    std::vector<int> vmap(m.shape.vertex_count(), 0);
    int start = 0;
    for (int b = 0; b < m.shape.bead_count(); ++b) {
        const SimplexRef& s = m.images[b];
        const int a = m.shape.bead_start(b);
        const int d = m.shape.bead_dims()[b];
        const OrdinalMap eps = s.word.surjection(s.base_dim);
        for (int j = 0; j <= d; ++j) vmap[a + j] = start + eps(j);
        if (s.base_dim > 0) {
            dims.push_back(s.base_dim);
            images.push_back(SimplexRef{s.base_dim, s.id, {}});
        }
        start += s.base_dim;
    }
    HomSimplex out{NecklaceMap{Necklace(dims), std::move(images), m.source, m.target}, {}};
    for (VertexMask set : flag.sets) {
        VertexMask img = 0;
        for (int p : positions(set)) img |= VertexMask{1} << vmap[p];
        out.flag.sets.push_back(img);
    }
    return out;
}

HomSimplex hom_face(const FinSSet& x, const HomSimplex& s, int i) {
    const int n = s.dim();
    if (n < 1) throw DomainError("vertices have no faces");
    if (i < 0 || i > n) throw DomainError("face index out of range");
    if (i > 0 && i < n) {
        HomSimplex out = s;
        out.flag.sets.erase(out.flag.sets.begin() + i);
        return out;
    }
    if (i == 0) {
        const VertexMask k = s.flag.sets[1];
        Flag f{std::vector<VertexMask>(s.flag.sets.begin() + 1, s.flag.sets.end())};
        return tnd_quotient(x, split(x, s.map, k), f);
    }
    const VertexMask k = s.flag.sets[n - 1];
    Flag f;
    for (int t = 0; t < n; ++t) f.sets.push_back(compress(s.flag.sets[t], k));
    return tnd_quotient(x, restrict(x, s.map, k), f);
}

HomSimplex hom_degeneracy(const HomSimplex& s, int i) {
    if (i < 0 || i > s.dim()) throw DomainError("degeneracy index out of range");
    HomSimplex out = s;
    out.flag.sets.insert(out.flag.sets.begin() + i, s.flag.sets[i]);
    return out;
}

HomSimplex concatenate(const HomSimplex& first, const HomSimplex& second) {
    if (first.map.target != second.map.source) throw DomainError("necklaces are not composable");
    if (first.dim() != second.dim()) throw DomainError("composed simplices must have equal dimension");
    std::vector<int> dims = first.shape().bead_dims();
    dims.insert(dims.end(), second.shape().bead_dims().begin(), second.shape().bead_dims().end());
    HomSimplex out;
    out.map.shape = Necklace(dims);
    out.map.images = first.map.images;
    out.map.images.insert(out.map.images.end(), second.map.images.begin(), second.map.images.end());
    out.map.source = first.map.source;
    out.map.target = second.map.target;
    const int shift = first.shape().vertex_count() - 1;
    for (int t = 0; t <= first.dim(); ++t)
        out.flag.sets.push_back(first.flag.sets[t] | (second.flag.sets[t] << shift));
    return out;
}

std::string to_string(const FinSSet& x, const NecklaceMap& m) {
    if (m.images.empty()) return "1_" + x.cell(m.source).label;
    std::string out;
    for (std::size_t b = 0; b < m.images.size(); ++b) out += (b ? " v " : "") + x.name(m.images[b]);
    return out;
}

std::string to_string(const FinSSet& x, const HomSimplex& s) {
    return to_string(x, s.map) + " | " + s.flag.to_string();
}

// ---------------------------------------------------------------------------

NecklaceEnumeration enumerate_necklaces(const FinSSet& x, int from, int to, int size_cap) {
    if (size_cap < 1) throw DomainError("size cap must be positive");
    std::vector<std::vector<int>> by_first(x.size());
    for (int d = 1; d <= x.dim_cap(); ++d)
        for (int id : x.nondegenerate(d)) by_first[x.cell(id).vertices.front()].push_back(id);

    NecklaceEnumeration out;
    std::vector<SimplexRef> path;
    std::function<void(int, int)> dfs = [&](int at, int used) {
        if (at == to) out.maps.push_back(make_necklace_map(x, path, from));
        for (int id : by_first[at]) {
            const int d = x.cell(id).dim;
            if (used + d > size_cap) {
                out.size_truncated = true;
                continue;
            }
            path.push_back(x.ref(id));
            dfs(x.cell(id).vertices.back(), used + d);
            path.pop_back();
        }
    };
    dfs(from, 1);
    std::sort(out.maps.begin(), out.maps.end());
    return out;
}

// ---------------------------------------------------------------------------

SimplexRef HomSpace::encode(const HomSimplex& s) const {
    Flag base;
    std::vector<int> word;
    for (int t = 0; t <= s.dim(); ++t) {
        if (t > 0 && s.flag.sets[t] == s.flag.sets[t - 1])
            word.push_back(t - 1);
        else
            base.sets.push_back(s.flag.sets[t]);
    }
    auto it = cell_of.find(HomSimplex{s.map, base});
    if (it == cell_of.end()) throw CapError("simplex lies outside the truncated hom-space");
    return SimplexRef{base.dim(), it->second, DegeneracyWord(word)};
}

HomSimplex HomSpace::decode(const SimplexRef& r) const {
    HomSimplex base = simplex_of_cell.at(r.id);
    if (r.word.empty()) return base;
    const OrdinalMap eps = r.word.surjection(r.base_dim);
    Flag f;
    for (int j = 0; j < eps.source_size(); ++j) f.sets.push_back(base.flag.sets[eps(j)]);
    base.flag = f;
    return base;
}

bool HomSpace::contains(const HomSimplex& s) const {
    try {
        encode(s);
        return true;
    } catch (const CapError&) {
        return false;
    }
}

namespace {

// Strict flags J = T^0 < ... < T^k = V, with k blocks of interior vertices.
void strict_flags(VertexMask joins, VertexMask interior, int k, std::vector<Flag>& out) {
    const auto bits = positions(interior);
    const int r = static_cast<int>(bits.size());
    if (k == 0) {
        if (r == 0) out.push_back(Flag{{joins}});
        return;
    }
    if (k > r) return;
    std::vector<int> block(r, 0);
    while (true) {
        std::vector<VertexMask> blocks(k, 0);
        for (int q = 0; q < r; ++q) blocks[block[q]] |= VertexMask{1} << bits[q];
        if (std::all_of(blocks.begin(), blocks.end(), [](VertexMask b) { return b != 0; })) {
            Flag f{{joins}};
            for (int t = 0; t < k; ++t) f.sets.push_back(f.sets.back() | blocks[t]);
            out.push_back(f);
        }
        int q = r - 1;
        while (q >= 0 && block[q] == k - 1) block[q--] = 0;
        if (q < 0) break;
        ++block[q];
    }
}

}  // namespace

HomSpace hom_space(const FinSSet& x, int from, int to, int dim_cap, int size_cap) {
    if (dim_cap < 0) throw DomainError("dimension cap must be non-negative");
    HomSpace h;
    h.source = from;
    h.target = to;
    h.dim_cap = dim_cap;
    h.size_cap = size_cap;
    h.sset = FinSSet(dim_cap);
    auto necklaces = enumerate_necklaces(x, from, to, size_cap);
    h.size_truncated = necklaces.size_truncated;

    std::vector<std::vector<HomSimplex>> by_dim(dim_cap + 1);
    for (const auto& m : necklaces.maps) {
        const VertexMask joins = m.shape.joins();
        const VertexMask interior = m.shape.all_vertices() & ~joins;
        for (int k = 0; k <= dim_cap; ++k) {
            std::vector<Flag> flags;
            strict_flags(joins, interior, k, flags);
            for (auto& f : flags) by_dim[k].push_back(HomSimplex{m, std::move(f)});
        }
    }
    for (int k = 0; k <= dim_cap; ++k) {
        std::sort(by_dim[k].begin(), by_dim[k].end());
        for (const auto& s : by_dim[k]) {
            const std::string label = to_string(x, s);
            int id;
            if (k == 0) {
                id = h.sset.add_vertex(label);
            } else {
                std::vector<SimplexRef> faces;
                for (int i = 0; i <= k; ++i) faces.push_back(h.encode(hom_face(x, s, i)));
                id = h.sset.add_simplex(label, faces);
            }
            h.simplex_of_cell.push_back(s);
            h.cell_of.emplace(s, id);
        }
    }
    return h;
}

}  // namespace ccat
