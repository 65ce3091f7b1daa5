#include "ccat/sset.hpp"

#include <algorithm>
#include <sstream>

#include "ccat/errors.hpp"

namespace ccat {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x < n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

void FinSSet::raise_dim_cap(int cap) {
    if (cap < dim_cap_) throw DomainError("dim cap can only grow");
    dim_cap_ = cap;
}

int FinSSet::add_vertex(std::string label) { return add_simplex(std::move(label), {}); }

int FinSSet::add_simplex(std::string label, std::vector<SimplexRef> faces) {
    const int dim = faces.empty() ? 0 : static_cast<int>(faces.size()) - 1;
    if (faces.size() == 1) throw DomainError("a simplex has either zero or at least two faces");
    if (dim > dim_cap_) throw CapError("simplex '" + label + "' exceeds dim cap " + std::to_string(dim_cap_));
    if (by_label_.count(label)) throw DomainError("duplicate simplex label '" + label + "'");
    for (const auto& f : faces) {
        if (f.id < 0 || f.id >= size() || cells_[f.id].dim != f.base_dim)
            throw DomainError("face of '" + label + "' references an unknown simplex");
        if (f.dim() != dim - 1) throw DomainError("face of '" + label + "' has the wrong dimension");
        if (!f.word.empty() && f.word.indices().front() >= f.dim())
            throw DomainError("face of '" + label + "' has an invalid degeneracy word");
    }
    for (int j = 1; j <= dim; ++j)
        for (int i = 0; i < j; ++i)
            if (dim >= 2 && face(faces[j], i) != face(faces[i], j - 1))
                throw DomainError("simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) +
                                  " fails on '" + label + "'");
    Cell c;
    c.dim = dim;
    c.label = label;
    const int id = size();
    if (dim == 0) {
        c.vertices = {id};
    } else {
        c.vertices = vertices(faces[dim]);
        c.vertices.push_back(vertices(faces[0]).back());
    }
    c.faces = std::move(faces);
    cells_.push_back(std::move(c));
    if (static_cast<int>(by_dim_.size()) <= dim) by_dim_.resize(dim + 1);
    by_dim_[dim].push_back(id);
    by_label_.emplace(std::move(label), id);
    return id;
}

const std::vector<int>& FinSSet::nondegenerate(int dim) const {
    static const std::vector<int> none;
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[dim];
}

std::optional<int> FinSSet::find(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

int FinSSet::vertex_by_label(const std::string& label) const {
    auto id = find(label);
    if (!id || cells_[*id].dim != 0) throw DomainError("no vertex labelled '" + label + "'");
    return *id;
}

SimplexRef FinSSet::face(const SimplexRef& s, int i) const {
    const int n = s.dim();
    if (n < 1 || i < 0 || i > n) throw DomainError("face index out of range");
    return apply(s, OrdinalMap::coface(i, n));
}

SimplexRef FinSSet::degeneracy(const SimplexRef& s, int i) const {
    const int n = s.dim();
    if (i < 0 || i > n) throw DomainError("degeneracy index out of range");
    return SimplexRef{s.base_dim, s.id, s.word.prepend(i, s.base_dim)};
}

SimplexRef FinSSet::restrict_nondegenerate(int id, const OrdinalMap& mono) const {
    if (mono.is_identity()) return ref(id);
    const auto& v = mono.values();
    const int m = mono.target_dim();
    int missing = m;
    while (std::find(v.begin(), v.end(), missing) != v.end()) --missing;
    std::vector<int> shifted(v);
    for (int& x : shifted)
        if (x > missing) --x;
    return apply(cells_[id].faces[missing], OrdinalMap(std::move(shifted), m));
}

SimplexRef FinSSet::apply(const SimplexRef& s, const OrdinalMap& theta) const {
    if (theta.target_dim() != s.dim()) throw DomainError("operator target does not match simplex dimension");
    const OrdinalMap through = compose(theta, s.word.surjection(s.base_dim));
    const EpiMono em = epi_mono_factor(through);
    const SimplexRef r = restrict_nondegenerate(s.id, em.mono);
    if (em.epi.empty()) return r;
    const int p = em.mono.source_dim();
    const OrdinalMap total = compose(em.epi.surjection(p), r.word.surjection(r.base_dim));
    return SimplexRef{r.base_dim, r.id, DegeneracyWord::of_surjection(total)};
}

std::vector<int> FinSSet::vertices(const SimplexRef& s) const {
    const auto& base = cells_.at(s.id).vertices;
    if (s.word.empty()) return base;
    const OrdinalMap eps = s.word.surjection(s.base_dim);
    std::vector<int> out(eps.source_size());
    for (int k = 0; k < eps.source_size(); ++k) out[k] = base[eps(k)];
    return out;
}

std::vector<SimplexRef> FinSSet::simplices(int dim) const {
    std::vector<SimplexRef> out;
    for (int m = 0; m <= std::min(dim, static_cast<int>(by_dim_.size()) - 1); ++m) {
        auto words = subsets_of_size(dim, dim - m);
        for (int id : by_dim_[m])
            for (const auto& w : words) out.push_back(SimplexRef{m, id, DegeneracyWord(w)});
    }
    return out;
}

long long FinSSet::count_simplices(int dim) const {
    long long total = 0;
    for (int m = 0; m <= std::min(dim, static_cast<int>(by_dim_.size()) - 1); ++m) {
        long long binom = 1;
        for (int t = 0; t < dim - m; ++t) binom = binom * (dim - t) / (t + 1);
        total += binom * static_cast<long long>(by_dim_[m].size());
    }
    return total;
}

void FinSSet::validate() const {
    for (const auto& c : cells_) {
        if (c.dim > dim_cap_) throw DomainError("simplex above dim cap");
        for (int j = 1; j <= c.dim; ++j)
            for (int i = 0; i < j; ++i)
                if (c.dim >= 2 && face(c.faces[j], i) != face(c.faces[i], j - 1))
                    throw DomainError("simplicial identity fails on '" + c.label + "'");
    }
}

std::string FinSSet::name(const SimplexRef& s) const {
    std::ostringstream os;
    for (int i : s.word.indices()) os << "s" << i << " ";
    os << cells_.at(s.id).label;
    return os.str();
}

// ---------------------------------------------------------------------------

int FinCategory::add_object(const std::string& label) {
    const int o = object_count();
    objects_.push_back(label);
    morphisms_.push_back({"id_" + label, o, o});
    identities_.push_back(morphism_count() - 1);
    return o;
}

int FinCategory::add_morphism(const std::string& label, int src, int tgt) {
    if (src < 0 || tgt < 0 || src >= object_count() || tgt >= object_count())
        throw DomainError("morphism endpoints out of range");
    morphisms_.push_back({label, src, tgt});
    return morphism_count() - 1;
}

void FinCategory::set_composite(int g, int f, int gf) {
    const auto& mg = morphisms_.at(g);
    const auto& mf = morphisms_.at(f);
    const auto& mgf = morphisms_.at(gf);
    if (mf.tgt != mg.src || mgf.src != mf.src || mgf.tgt != mg.tgt)
        throw DomainError("composite " + mgf.label + " has the wrong endpoints");
    comp_[{g, f}] = gf;
}

bool FinCategory::is_identity(int m) const { return identities_.at(morphisms_.at(m).src) == m; }

int FinCategory::object_by_label(const std::string& label) const {
    for (int o = 0; o < object_count(); ++o)
        if (objects_[o] == label) return o;
    throw DomainError("unknown object '" + label + "'");
}

int FinCategory::morphism_by_label(const std::string& label) const {
    for (int m = 0; m < morphism_count(); ++m)
        if (morphisms_[m].label == label) return m;
    throw DomainError("unknown morphism '" + label + "'");
}

std::optional<int> FinCategory::try_compose(int g, int f) const {
    if (morphisms_.at(f).tgt != morphisms_.at(g).src) return std::nullopt;
    if (is_identity(g)) return f;
    if (is_identity(f)) return g;
    auto it = comp_.find({g, f});
    if (it == comp_.end()) return std::nullopt;
    return it->second;
}

int FinCategory::compose(int g, int f) const {
    if (morphisms_.at(f).tgt != morphisms_.at(g).src)
        throw DomainError("not composable: " + morphisms_[g].label + " . " + morphisms_[f].label);
    auto r = try_compose(g, f);
    if (!r) throw DomainError("composite not tabulated: " + morphisms_[g].label + " . " + morphisms_[f].label);
    return *r;
}

void FinCategory::validate() const {
    const int n = morphism_count();
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f)
            if (morphisms_[f].tgt == morphisms_[g].src) (void)compose(g, f);
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            if (morphisms_[g].tgt != morphisms_[h].src) continue;
            for (int f = 0; f < n; ++f) {
                if (morphisms_[f].tgt != morphisms_[g].src) continue;
                if (compose(h, compose(g, f)) != compose(compose(h, g), f))
                    throw DomainError("associativity fails at " + morphisms_[h].label + ", " + morphisms_[g].label +
                                      ", " + morphisms_[f].label);
            }
        }
    for (int f = 0; f < n; ++f) {
        const auto& m = morphisms_[f];
        if (comp_.count({identities_[m.tgt], f}) || comp_.count({f, identities_[m.src]}))
            throw DomainError("identity composites must not be tabulated");
    }
}

// ---------------------------------------------------------------------------

namespace categories {

FinCategory ordinal(int n) {
    FinCategory c;
    for (int i = 0; i <= n; ++i) c.add_object(std::to_string(i));
    std::map<std::pair<int, int>, int> arrow;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            arrow[{i, j}] = c.add_morphism(std::to_string(i) + std::to_string(j), i, j);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) c.set_composite(arrow[{j, k}], arrow[{i, j}], arrow[{i, k}]);
    return c;
}

FinCategory terminal() {
    FinCategory c;
    c.add_object("*");
    return c;
}

FinCategory retraction() {
    FinCategory c;
    const int x = c.add_object("x");
    const int y = c.add_object("y");
    const int s = c.add_morphism("s", x, y);
    const int r = c.add_morphism("r", y, x);
    const int e = c.add_morphism("e", y, y);
    c.set_composite(r, s, c.identity(x));
    c.set_composite(s, r, e);
    c.set_composite(e, s, s);
    c.set_composite(r, e, r);
    c.set_composite(e, e, e);
    return c;
}

FinCategory interval_subsets(int lo, int hi) {
    FinCategory c;
    std::vector<int> masks;
    const int inner = std::max(0, hi - lo - 1);
    for (int bits = 0; bits < (1 << inner); ++bits) masks.push_back(bits);
    auto label = [&](int bits) {
        std::string s = "{" + std::to_string(lo);
        for (int t = 0; t < inner; ++t)
            if (bits >> t & 1) s += "," + std::to_string(lo + 1 + t);
        if (hi != lo) s += "," + std::to_string(hi);
        return s + "}";
    };
    for (int b : masks) c.add_object(label(b));
    std::map<std::pair<int, int>, int> arrow;
    for (int a : masks)
        for (int b : masks)
            if (a != b && (a & b) == a) arrow[{a, b}] = c.add_morphism(label(a) + "<" + label(b), a, b);
    for (auto [ab, m1] : arrow)
        for (auto [bc, m2] : arrow)
            if (ab.second == bc.first) c.set_composite(m2, m1, arrow.at({ab.first, bc.second}));
    return c;
}

FinCategory cube(int m) {
    FinCategory c;
    auto label = [&](int bits) {
        std::string s;
        for (int t = 0; t < m; ++t) s += (bits >> t & 1) ? '1' : '0';
        return s.empty() ? std::string("*") : s;
    };
    for (int b = 0; b < (1 << m); ++b) c.add_object(label(b));
    std::map<std::pair<int, int>, int> arrow;
    for (int a = 0; a < (1 << m); ++a)
        for (int b = 0; b < (1 << m); ++b)
            if (a != b && (a & b) == a) arrow[{a, b}] = c.add_morphism(label(a) + "<" + label(b), a, b);
    for (auto [ab, m1] : arrow)
        for (auto [bc, m2] : arrow)
            if (ab.second == bc.first) c.set_composite(m2, m1, arrow.at({ab.first, bc.second}));
    return c;
}

FinCategory parallel_pair() {
    FinCategory c;
    const int o0 = c.add_object("0"), o1 = c.add_object("1"), o2 = c.add_object("2");
    const int a = c.add_morphism("a", o0, o1);
    const int b = c.add_morphism("b", o0, o1);
    const int k = c.add_morphism("c", o1, o2);
    const int ca = c.add_morphism("ca", o0, o2);
    const int cb = c.add_morphism("cb", o0, o2);
    c.set_composite(k, a, ca);
    c.set_composite(k, b, cb);
    return c;
}

FinCategory five_object() {
    FinCategory c;
    for (int i = 0; i < 5; ++i) c.add_object("o" + std::to_string(i));
    const int f = c.add_morphism("f", 0, 1);
    const int g = c.add_morphism("g", 0, 1);
    const int h = c.add_morphism("h", 1, 2);
    const int u = c.add_morphism("u", 0, 2);
    const int k = c.add_morphism("k", 2, 3);
    const int v = c.add_morphism("v", 1, 3);
    const int w = c.add_morphism("w", 0, 3);
    const int t = c.add_morphism("t", 3, 4);
    const int tk = c.add_morphism("tk", 2, 4);
    const int tv = c.add_morphism("tv", 1, 4);
    const int tw = c.add_morphism("tw", 0, 4);
    const int e = c.add_morphism("e", 4, 4);
    c.set_composite(h, f, u);
    c.set_composite(h, g, u);
    c.set_composite(k, h, v);
    c.set_composite(k, u, w);
    c.set_composite(v, f, w);
    c.set_composite(v, g, w);
    c.set_composite(t, k, tk);
    c.set_composite(t, v, tv);
    c.set_composite(t, w, tw);
    c.set_composite(tk, h, tv);
    c.set_composite(tk, u, tw);
    c.set_composite(tv, f, tw);
    c.set_composite(tv, g, tw);
    for (int m : {t, tk, tv, tw}) c.set_composite(e, m, m);
    c.set_composite(e, e, e);
    return c;
}

}  // namespace categories

// ---------------------------------------------------------------------------

SimplexRef Nerve::chain_ref(int start, const std::vector<int>& morphisms) const {
    std::vector<int> kept;
    std::vector<int> word;
    for (int j = 0; j < static_cast<int>(morphisms.size()); ++j) {
        const int m = morphisms[j];
        if (m < 0) {
            word.push_back(j);  // identity marker
        } else {
            kept.push_back(m);
        }
    }
    if (kept.empty()) {
        const int v = vertex_of_object.at(start);
        return SimplexRef{0, v, DegeneracyWord(word)};
    }
    const int id = cell_of_chain.at(kept);
    return SimplexRef{static_cast<int>(kept.size()), id, DegeneracyWord(word)};
}

Nerve build_nerve(const FinCategory& cat, int dim_cap) {
    cat.validate();
    Nerve nv;
    nv.sset = FinSSet(dim_cap);
    auto chain_label = [&](const std::vector<int>& ch) {
        std::string s = "(";
        for (std::size_t k = 0; k < ch.size(); ++k) s += (k ? "," : "") + cat.morphism(ch[k]).label;
        return s + ")";
    };
    // Identities are encoded as -1 - object in intermediate chains.
    auto normalize = [&](int start, std::vector<int> ch) {
        for (int& m : ch)
            if (cat.is_identity(m)) m = -1;
        return nv.chain_ref(start, ch);
    };
    for (int o = 0; o < cat.object_count(); ++o) {
        nv.vertex_of_object.push_back(nv.sset.add_vertex(cat.object_label(o)));
        nv.chain_of_cell.push_back({});
        nv.object_of_cell.push_back(o);
    }
    std::vector<std::vector<int>> layer;
    for (int m = 0; m < cat.morphism_count(); ++m)
        if (!cat.is_identity(m)) layer.push_back({m});
    for (int n = 1; n <= dim_cap && !layer.empty(); ++n) {
        for (const auto& ch : layer) {
            std::vector<SimplexRef> faces;
            const int start = cat.morphism(ch.front()).src;
            if (n == 1) {
                faces = {SimplexRef{0, nv.vertex_of_object[cat.morphism(ch[0]).tgt], {}},
                         SimplexRef{0, nv.vertex_of_object[start], {}}};
            } else {
                for (int i = 0; i <= n; ++i) {
                    std::vector<int> f;
                    int fstart = start;
                    if (i == 0) {
                        f.assign(ch.begin() + 1, ch.end());
                        fstart = cat.morphism(ch[0]).tgt;
                    } else if (i == n) {
                        f.assign(ch.begin(), ch.end() - 1);
                    } else {
                        f.assign(ch.begin(), ch.begin() + (i - 1));
                        f.push_back(cat.compose(ch[i], ch[i - 1]));
                        f.insert(f.end(), ch.begin() + i + 1, ch.end());
                    }
                    faces.push_back(normalize(fstart, f));
                }
            }
            const int id = nv.sset.add_simplex(chain_label(ch), std::move(faces));
            nv.chain_of_cell.push_back(ch);
            nv.object_of_cell.push_back(start);
            nv.cell_of_chain[ch] = id;
        }
        std::vector<std::vector<int>> next;
        if (n < dim_cap)
            for (const auto& ch : layer)
                for (int m = 0; m < cat.morphism_count(); ++m)
                    if (!cat.is_identity(m) && cat.morphism(m).src == cat.morphism(ch.back()).tgt) {
                        auto longer = ch;
                        longer.push_back(m);
                        next.push_back(std::move(longer));
                    }
        layer = std::move(next);
    }
    return nv;
}

// ---------------------------------------------------------------------------

std::optional<int> Shape::cell_of(const std::vector<int>& vertices) const {
    for (int id = 0; id < static_cast<int>(vertex_set_of_cell.size()); ++id)
        if (vertex_set_of_cell[id] == vertices) return id;
    return std::nullopt;
}

Shape make_generated(int n, std::vector<std::vector<int>> generators) {
    Shape sh;
    sh.n = n;
    for (auto& g : generators) {
        std::sort(g.begin(), g.end());
        if (g.empty() || g.front() < 0 || g.back() > n) throw DomainError("shape generator out of range");
    }
    sh.generators = generators;
    std::vector<std::vector<int>> cells;
    for (const auto& g : generators) {
        const int sz = static_cast<int>(g.size());
        for (int mask = 1; mask < (1 << sz); ++mask) {
            std::vector<int> sub;
            for (int t = 0; t < sz; ++t)
                if (mask >> t & 1) sub.push_back(g[t]);
            cells.push_back(sub);
        }
    }
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    int top = 0;
    for (const auto& c : cells) top = std::max(top, static_cast<int>(c.size()) - 1);
    sh.sset = FinSSet(top);
    std::map<std::vector<int>, int> id_of;
    for (const auto& c : cells) {
        std::string label = "{";
        for (std::size_t k = 0; k < c.size(); ++k) label += (k ? "," : "") + std::to_string(c[k]);
        label += "}";
        std::vector<SimplexRef> faces;
        if (c.size() > 1)
            for (std::size_t i = 0; i < c.size(); ++i) {
                auto f = c;
                f.erase(f.begin() + static_cast<long>(i));
                const int fid = id_of.at(f);
                faces.push_back(SimplexRef{static_cast<int>(f.size()) - 1, fid, {}});
            }
        id_of[c] = sh.sset.add_simplex(label, std::move(faces));
        sh.vertex_set_of_cell.push_back(c);
    }
    return sh;
}

Shape make_shape(ShapeKind kind, int n, int k) {
    std::vector<int> all(n + 1);
    for (int v = 0; v <= n; ++v) all[v] = v;
    std::vector<std::vector<int>> gens;
    switch (kind) {
    case ShapeKind::simplex:
        if (n < 0) throw DomainError("negative simplex dimension");
        gens = {all};
        break;
    case ShapeKind::horn:
    case ShapeKind::boundary:
        if (n < 1) throw DomainError("horns and boundaries need n >= 1");
        if (kind == ShapeKind::horn && (k < 0 || k > n)) throw DomainError("horn index out of range");
        for (int i = 0; i <= n; ++i) {
            if (kind == ShapeKind::horn && i == k) continue;
            auto f = all;
            f.erase(f.begin() + i);
            gens.push_back(f);
        }
        break;
    case ShapeKind::wedge:
        throw DomainError("use make_wedge for necklace shapes");
    }
    return make_generated(n, gens);
}

Shape make_wedge(const std::vector<int>& bead_dims) {
    std::vector<std::vector<int>> gens;
    int start = 0;
    for (int d : bead_dims) {
        if (d < 1) throw DomainError("bead dimensions must be positive");
        std::vector<int> g;
        for (int v = start; v <= start + d; ++v) g.push_back(v);
        gens.push_back(g);
        start += d;
    }
    if (gens.empty()) gens.push_back({0});
    return make_generated(start, gens);
}

}  // namespace ccat
