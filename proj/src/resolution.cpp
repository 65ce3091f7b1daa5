#include "ccat/resolution.hpp"

#include <algorithm>
#include <set>

#include "ccat/errors.hpp"

namespace ccat {

namespace {

std::vector<int> all_cuts(int length) {
    std::vector<int> v;
    for (int c = 1; c < length; ++c) v.push_back(c);
    return v;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// eps^* w for a surjection eps : [m] -> [n]; level j becomes T^{eps(j)}.
ParenWord apply_epi(const ParenWord& w, const OrdinalMap& eps) {
    ParenWord out{w.source, w.morphisms, {}};
    const int n = w.dim();
    const std::vector<int> all = all_cuts(w.length());
    for (int j = 0; j + 1 < eps.source_size(); ++j) out.levels.push_back(eps(j) < n ? w.levels[eps(j)] : all);
    return out;
}

SimplexRef unit_at(const SimpCategory& c, int x, int dim) {
    const FinSSet& h = c.hom.at(x).at(x);
    SimplexRef r = h.ref(c.units.at(x));
    for (int t = 0; t < dim; ++t) r = h.degeneracy(r, 0);
    return r;
}

}  // namespace

int SimpCategory::object_by_label(const std::string& label) const {
    for (int o = 0; o < object_count(); ++o)
        if (objects[o] == label) return o;
    throw InputError("unknown object '" + label + "'");
}

LawReport check_category_laws(const SimpCategory& c, int up_to) {
    LawReport rep;
    const int no = c.object_count();
    auto fail = [&](const std::string& msg) {
        if (rep.ok) rep.detail = msg;
        rep.ok = false;
    };
    auto obj = [&](int o) { return c.objects[o]; };
    for (int d = 0; d <= up_to && rep.ok; ++d) {
        std::vector<std::vector<std::vector<SimplexRef>>> s(no, std::vector<std::vector<SimplexRef>>(no));
        for (int x = 0; x < no; ++x)
            for (int y = 0; y < no; ++y) s[x][y] = c.hom[x][y].simplices(d);
        for (int x = 0; x < no; ++x)
            for (int y = 0; y < no; ++y)
                for (const auto& f : s[x][y]) {
                    ++rep.checked;
                    auto left = c.compose(x, y, y, unit_at(c, y, d), f);
                    auto right = c.compose(x, x, y, f, unit_at(c, x, d));
                    if (!left || *left != f || !right || *right != f)
                        fail("unit law fails on " + c.hom[x][y].name(f) + " in hom(" + obj(x) + "," + obj(y) + ")");
                }
        for (int x = 0; x < no && rep.ok; ++x)
            for (int y = 0; y < no; ++y)
                for (int z = 0; z < no; ++z) {
                    for (const auto& g : s[y][z])
                        for (const auto& f : s[x][y]) {
                            auto gf = c.compose(x, y, z, g, f);
                            if (!gf) continue;
                            ++rep.checked;
                            for (int i = 0; i <= d && d > 0; ++i) {
                                auto lower = c.compose(x, y, z, c.hom[y][z].face(g, i), c.hom[x][y].face(f, i));
                                if (!lower || *lower != c.hom[x][z].face(*gf, i))
                                    fail("composition does not commute with d" + std::to_string(i) + " on " +
                                         c.hom[y][z].name(g) + " . " + c.hom[x][y].name(f));
                            }
                            for (int w = 0; w < no; ++w)
                                for (const auto& h : s[z][w]) {
                                    auto hg = c.compose(y, z, w, h, g);
                                    if (!hg) continue;
                                    auto l = c.compose(x, y, w, *hg, f);
                                    auto r = c.compose(x, z, w, h, *gf);
                                    ++rep.checked;
                                    if (l.has_value() != r.has_value() || (l && *l != *r))
                                        fail("associativity fails on " + c.hom[z][w].name(h) + ", " +
                                             c.hom[y][z].name(g) + ", " + c.hom[x][y].name(f));
                                }
                        }
                }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Parenthesized words

bool ParenWord::degenerate() const {
    const int n = dim();
    if (n == 0) return false;
    for (int k = 0; k + 1 < n; ++k)
        if (levels[k] == levels[k + 1]) return true;
    return static_cast<int>(levels[n - 1].size()) == std::max(0, length() - 1);
}

void validate(const FinCategory& a, const ParenWord& w) {
    for (int t = 0; t < w.length(); ++t) {
        const int m = w.morphisms[t];
        if (m < 0 || m >= a.morphism_count()) throw DomainError("morphism index out of range");
        if (a.is_identity(m)) throw DomainError("identity morphism inside a word");
        if (t == 0 && a.morphism(m).src != w.source) throw DomainError("word does not start at its source");
        if (t > 0 && a.morphism(w.morphisms[t - 1]).tgt != a.morphism(m).src)
            throw DomainError("word is not composable");
    }
    const std::vector<int> all = all_cuts(w.length());
    for (int k = 0; k < w.dim(); ++k) {
        const auto& lv = w.levels[k];
        if (!std::is_sorted(lv.begin(), lv.end()) || std::adjacent_find(lv.begin(), lv.end()) != lv.end())
            throw DomainError("paren level is not a sorted set of cuts");
        if (!is_subset(lv, all)) throw DomainError("cut outside the word");
        if (k > 0 && !is_subset(w.levels[k - 1], lv)) throw DomainError("paren levels are not nested");
    }
}

ParenWord paren_face(const FinCategory& a, const ParenWord& w, int i) {
    const int n = w.dim();
    if (n == 0 || i < 0 || i > n) throw DomainError("face index out of range");
    ParenWord out{w.source, {}, {}};
    if (i < n) {
        out.morphisms = w.morphisms;
        out.levels = w.levels;
        out.levels.erase(out.levels.begin() + i);
        return out;
    }
    const int len = w.length();
    std::vector<int> bounds{0};
    bounds.insert(bounds.end(), w.levels[n - 1].begin(), w.levels[n - 1].end());
    if (len > 0) bounds.push_back(len);
    std::vector<int> newpos(len + 1, 0);
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
        int m = w.morphisms[bounds[b]];
        for (int t = bounds[b] + 1; t < bounds[b + 1]; ++t) m = a.compose(w.morphisms[t], m);
        if (!a.is_identity(m)) out.morphisms.push_back(m);
        newpos[bounds[b + 1]] = out.length();
    }
    for (int k = 0; k + 1 < n; ++k) {
        std::set<int> cuts;
        for (int c : w.levels[k])
            if (newpos[c] > 0 && newpos[c] < out.length()) cuts.insert(newpos[c]);
        out.levels.emplace_back(cuts.begin(), cuts.end());
    }
    return out;
}

ParenWord paren_degeneracy(const ParenWord& w, int i) {
    if (i < 0 || i > w.dim()) throw DomainError("degeneracy index out of range");
    return apply_epi(w, OrdinalMap::codegeneracy(i, w.dim()));
}

ParenWord paren_compose(const ParenWord& g, const ParenWord& f) {
    if (g.dim() != f.dim()) throw DomainError("composing words of different dimensions");
    if (f.morphisms.empty()) {
        ParenWord out = g;
        out.source = f.source;
        return out;
    }
    if (g.morphisms.empty()) return f;
    ParenWord out{f.source, f.morphisms, {}};
    out.morphisms.insert(out.morphisms.end(), g.morphisms.begin(), g.morphisms.end());
    const int junction = f.length();
    for (int k = 0; k < f.dim(); ++k) {
        std::vector<int> lv = f.levels[k];
        lv.push_back(junction);
        for (int c : g.levels[k]) lv.push_back(c + junction);
        out.levels.push_back(std::move(lv));
    }
    return out;
}

std::string to_string(const FinCategory& a, const ParenWord& w) {
    if (w.morphisms.empty()) return "1_" + a.object_label(w.source);
    const int n = w.dim();
    auto render = [&](auto&& self, int lo, int hi, int depth) -> std::string {
        std::string s;
        if (depth == n) {
            for (int t = lo; t < hi; ++t) s += (t > lo ? " " : "") + a.morphism(w.morphisms[t]).label;
            return s;
        }
        int start = lo;
        for (int c : w.levels[depth]) {
            if (c <= lo || c >= hi) continue;
            s += "(" + self(self, start, c, depth + 1) + ")";
            start = c;
        }
        return s + "(" + self(self, start, hi, depth + 1) + ")";
    };
    return "(" + render(render, 0, w.length(), 0) + ")";
}

// ---------------------------------------------------------------------------
// Free resolution

SimplexRef Resolution::encode(int x, int y, const ParenWord& w) const {
    const FinSSet& h = cat.hom.at(x).at(y);
    const int n = w.dim();
    if (n > 0) {
        if (static_cast<int>(w.levels[n - 1].size()) == std::max(0, w.length() - 1)) {
            ParenWord v = w;
            v.levels.pop_back();
            return h.degeneracy(encode(x, y, v), n - 1);
        }
        for (int k = 0; k + 1 < n; ++k)
            if (w.levels[k] == w.levels[k + 1]) {
                ParenWord v = w;
                v.levels.erase(v.levels.begin() + k);
                return h.degeneracy(encode(x, y, v), k);
            }
    }
    auto it = cell_of_word.at(x).at(y).find(w);
    if (it == cell_of_word[x][y].end()) throw CapError("word " + to_string(base, w) + " lies outside the truncation");
    return h.ref(it->second);
}

ParenWord Resolution::decode(int x, int y, const SimplexRef& r) const {
    const ParenWord& w = word_of_cell.at(x).at(y).at(r.id);
    if (r.word.empty()) return w;
    return apply_epi(w, r.word.surjection(r.base_dim));
}

std::unique_ptr<Resolution> free_resolution(const FinCategory& a, int dim_cap, int size_cap) {
    if (dim_cap < 0 || size_cap < 0) throw DomainError("caps must be non-negative");
    a.validate();
    auto res = std::make_unique<Resolution>();
    res->base = a;
    const int no = a.object_count();
    SimpCategory& c = res->cat;
    c.name = "free resolution";
    for (int o = 0; o < no; ++o) c.objects.push_back(a.object_label(o));
    c.dim_cap = dim_cap;
    c.size_cap = size_cap;
    c.hom.assign(no, std::vector<FinSSet>(no, FinSSet(dim_cap)));
    res->word_of_cell.assign(no, std::vector<std::vector<ParenWord>>(no));
    res->cell_of_word.assign(no, std::vector<std::map<ParenWord, int>>(no));

    std::vector<std::vector<std::vector<std::vector<int>>>> words(no, std::vector<std::vector<std::vector<int>>>(no));
    std::vector<int> path;
    auto grow = [&](auto&& self, int x, int cur) -> void {
        for (int m = 0; m < a.morphism_count(); ++m) {
            if (a.is_identity(m) || a.morphism(m).src != cur) continue;
            if (static_cast<int>(path.size()) == size_cap) {
                res->size_truncated = true;
                return;
            }
            path.push_back(m);
            words[x][a.morphism(m).tgt].push_back(path);
            self(self, x, a.morphism(m).tgt);
            path.pop_back();
        }
    };
    for (int x = 0; x < no; ++x) {
        words[x][x].push_back({});
        grow(grow, x, x);
    }

    for (int x = 0; x < no; ++x)
        for (int y = 0; y < no; ++y) {
            auto& ws = words[x][y];
            std::sort(ws.begin(), ws.end(), [](const auto& p, const auto& q) {
                return p.size() != q.size() ? p.size() < q.size() : p < q;
            });
            FinSSet& h = c.hom[x][y];
            auto add = [&](const ParenWord& w, std::vector<SimplexRef> faces) {
                const int id = h.add_simplex(to_string(a, w), std::move(faces));
                res->word_of_cell[x][y].push_back(w);
                res->cell_of_word[x][y][w] = id;
            };
            for (const auto& word : ws) add(ParenWord{x, word, {}}, {});
            for (int n = 1; n <= dim_cap; ++n)
                for (const auto& word : ws) {
                    const int cuts = static_cast<int>(word.size()) - 1;
                    if (cuts < n) continue;
                    const std::uint64_t full = (std::uint64_t{1} << cuts) - 1;
                    std::vector<std::uint64_t> chain;
                    auto extend = [&](auto&& self, std::uint64_t below) -> void {
                        if (static_cast<int>(chain.size()) == n) {
                            ParenWord w{x, word, {}};
                            for (std::uint64_t m : chain) {
                                std::vector<int> lv;
                                for (int t = 0; t < cuts; ++t)
                                    if (m >> t & 1) lv.push_back(t + 1);
                                w.levels.push_back(std::move(lv));
                            }
                            std::vector<SimplexRef> faces;
                            for (int i = 0; i <= n; ++i) faces.push_back(res->encode(x, y, paren_face(a, w, i)));
                            add(w, std::move(faces));
                            return;
                        }
                        for (std::uint64_t m = 0; m < full; ++m) {
                            if (!chain.empty() && ((m & below) != below || m == below)) continue;
                            chain.push_back(m);
                            self(self, m);
                            chain.pop_back();
                        }
                    };
                    extend(extend, 0);
                }
        }
    for (int x = 0; x < no; ++x) c.units.push_back(res->cell_of_word[x][x].at(ParenWord{x, {}, {}}));
    const Resolution* self = res.get();
    c.compose = [self](int x, int y, int z, const SimplexRef& g, const SimplexRef& f) -> std::optional<SimplexRef> {
        const int len = self->word_of_cell[y][z][g.id].length() + self->word_of_cell[x][y][f.id].length();
        if (len > self->cat.size_cap) return std::nullopt;
        const ParenWord w = paren_compose(self->decode(y, z, g), self->decode(x, y, f));
        if (w.length() > self->cat.size_cap) return std::nullopt;
        return self->encode(x, z, w);
    };
    return res;
}

// ---------------------------------------------------------------------------
// Cube model

SimplexRef RigidDelta::chain(int i, int j, const std::vector<std::uint64_t>& subsets) const {
    if (i < 0 || j > n || i > j) throw DomainError("no hom from " + std::to_string(i) + " to " + std::to_string(j));
    const std::uint64_t ends = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
    const std::uint64_t span = ((std::uint64_t{1} << (j + 1)) - 1) & ~((std::uint64_t{1} << i) - 1);
    auto object = [&](std::uint64_t m) {
        if ((m & ends) != ends || (m & ~span) != 0) throw DomainError("subset does not lie in the interval");
        return j > i + 1 ? static_cast<int>((m >> (i + 1)) & ((std::uint64_t{1} << (j - i - 1)) - 1)) : 0;
    };
    if (subsets.empty()) throw DomainError("empty chain of subsets");
    std::vector<int> morphisms;
    for (std::size_t t = 0; t + 1 < subsets.size(); ++t) {
        const int a = object(subsets[t]), b = object(subsets[t + 1]);
        if (a == b) {
            morphisms.push_back(-1);
            continue;
        }
        auto it = arrows[i][j].find({a, b});
        if (it == arrows[i][j].end()) throw DomainError("subsets do not form a chain");
        morphisms.push_back(it->second);
    }
    return nerves[i][j].chain_ref(object(subsets[0]), morphisms);
}

std::vector<std::uint64_t> RigidDelta::subsets_of(int i, int j, const SimplexRef& r) const {
    std::vector<std::uint64_t> out;
    const std::uint64_t ends = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
    for (int v : cat.hom.at(i).at(j).vertices(r))
        out.push_back(ends | (static_cast<std::uint64_t>(nerves[i][j].object_of_cell.at(v)) << (i + 1)));
    return out;
}

std::unique_ptr<RigidDelta> rigid_delta(int n, int dim_cap) {
    if (n < 0 || n > 20) throw DomainError("rigid_delta needs 0 <= n <= 20");
    auto rd = std::make_unique<RigidDelta>();
    rd->n = n;
    SimpCategory& c = rd->cat;
    c.name = "C[Delta^" + std::to_string(n) + "]";
    for (int i = 0; i <= n; ++i) c.objects.push_back(std::to_string(i));
    c.dim_cap = dim_cap;
    c.hom.assign(n + 1, std::vector<FinSSet>(n + 1, FinSSet(dim_cap)));
    rd->nerves.assign(n + 1, std::vector<Nerve>(n + 1));
    rd->posets.assign(n + 1, std::vector<FinCategory>(n + 1));
    rd->arrows.assign(n + 1, std::vector<std::map<std::pair<int, int>, int>>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            rd->posets[i][j] = categories::interval_subsets(i, j);
            rd->nerves[i][j] = build_nerve(rd->posets[i][j], dim_cap);
            c.hom[i][j] = rd->nerves[i][j].sset;
            const FinCategory& p = rd->posets[i][j];
            for (int m = 0; m < p.morphism_count(); ++m)
                if (!p.is_identity(m)) rd->arrows[i][j][{p.morphism(m).src, p.morphism(m).tgt}] = m;
        }
    for (int i = 0; i <= n; ++i) c.units.push_back(rd->nerves[i][i].vertex_of_object[0]);
    const RigidDelta* self = rd.get();
    c.compose = [self](int x, int y, int z, const SimplexRef& g, const SimplexRef& f) -> std::optional<SimplexRef> {
        std::vector<std::uint64_t> u = self->subsets_of(x, y, f);
        const std::vector<std::uint64_t> v = self->subsets_of(y, z, g);
        for (std::size_t t = 0; t < u.size(); ++t) u[t] |= v.at(t);
        return self->chain(x, z, u);
    };
    return rd;
}

// ---------------------------------------------------------------------------
// Rigidification of a nerve

std::unique_ptr<Rigidification> rigidify_nerve(const FinCategory& a, int dim_cap, int size_cap) {
    if (dim_cap < 0 || size_cap < 1) throw DomainError("rigidify_nerve needs dim_cap >= 0 and size_cap >= 1");
    auto rig = std::make_unique<Rigidification>();
    rig->base = a;
    rig->nerve = build_nerve(a, std::max(1, size_cap - 1));
    const int no = a.object_count();
    SimpCategory& c = rig->cat;
    c.name = "C[N A]";
    for (int o = 0; o < no; ++o) c.objects.push_back(a.object_label(o));
    c.dim_cap = dim_cap;
    c.size_cap = size_cap;
    c.hom.assign(no, std::vector<FinSSet>(no));
    rig->homs.resize(no);
    const FinSSet& nx = rig->nerve.sset;
    for (int x = 0; x < no; ++x)
        for (int y = 0; y < no; ++y) {
            rig->homs[x].push_back(std::make_unique<HomSpace>(hom_space(
                nx, rig->nerve.vertex_of_object[x], rig->nerve.vertex_of_object[y], dim_cap, size_cap)));
            c.hom[x][y] = rig->homs[x][y]->sset;
        }
    for (int x = 0; x < no; ++x) {
        const HomSimplex unit{make_necklace_map(nx, {}, rig->nerve.vertex_of_object[x]), Flag{{1}}};
        c.units.push_back(rig->homs[x][x]->encode(unit).id);
    }
    const Rigidification* self = rig.get();
    c.compose = [self](int x, int y, int z, const SimplexRef& g, const SimplexRef& f) -> std::optional<SimplexRef> {
        const int vertices = self->homs[y][z]->simplex_of_cell[g.id].shape().vertex_count() +
                             self->homs[x][y]->simplex_of_cell[f.id].shape().vertex_count() - 1;
        if (vertices > self->cat.size_cap) return std::nullopt;
        const HomSimplex gf = concatenate(self->homs[x][y]->decode(f), self->homs[y][z]->decode(g));
        if (gf.shape().vertex_count() > self->cat.size_cap) return std::nullopt;
        return self->homs[x][z]->encode(gf);
    };
    return rig;
}

SimpCategory discrete(const FinCategory& a, int dim_cap) {
    a.validate();
    SimpCategory c;
    c.name = "discrete";
    const int no = a.object_count();
    for (int o = 0; o < no; ++o) c.objects.push_back(a.object_label(o));
    c.dim_cap = dim_cap;
    c.hom.assign(no, std::vector<FinSSet>(no, FinSSet(dim_cap)));
    std::vector<int> vertex(a.morphism_count());
    std::vector<std::vector<std::vector<int>>> morphism(no, std::vector<std::vector<int>>(no));
    for (int m = 0; m < a.morphism_count(); ++m) {
        const auto& mm = a.morphism(m);
        vertex[m] = c.hom[mm.src][mm.tgt].add_vertex(mm.label);
        morphism[mm.src][mm.tgt].push_back(m);
    }
    for (int o = 0; o < no; ++o) c.units.push_back(vertex[a.identity(o)]);
    c.compose = [a, vertex, morphism](int x, int y, int z, const SimplexRef& g,
                                      const SimplexRef& f) -> std::optional<SimplexRef> {
        const auto gf = a.try_compose(morphism[y][z].at(g.id), morphism[x][y].at(f.id));
        if (!gf) return std::nullopt;
        return SimplexRef{0, vertex[*gf], g.word};
    };
    return c;
}

// ---------------------------------------------------------------------------
// Comparison maps

HomSimplex to_hom_simplex(const Rigidification& rig, int x, const ParenWord& w) {
    const FinSSet& nx = rig.nerve.sset;
    const int vx = rig.nerve.vertex_of_object.at(x);
    const int len = w.length(), n = w.dim();
    if (len == 0) return HomSimplex{make_necklace_map(nx, {}, vx), Flag{std::vector<VertexMask>(n + 1, 1)}};
    std::vector<int> joins = n > 0 ? w.levels[0] : all_cuts(len);
    joins.insert(joins.begin(), 0);
    joins.push_back(len);
    std::vector<SimplexRef> images;
    for (std::size_t b = 0; b + 1 < joins.size(); ++b) {
        const std::vector<int> chain(w.morphisms.begin() + joins[b], w.morphisms.begin() + joins[b + 1]);
        auto it = rig.nerve.cell_of_chain.find(chain);
        if (it == rig.nerve.cell_of_chain.end()) throw CapError("bead longer than the nerve truncation");
        images.push_back(nx.ref(it->second));
    }
    NecklaceMap m = make_necklace_map(nx, std::move(images), vx);
    Flag flag;
    for (int k = 0; k < n; ++k) {
        std::vector<int> pos = w.levels[k];
        pos.push_back(0);
        pos.push_back(len);
        flag.sets.push_back(mask_of(pos));
    }
    flag.sets.push_back(m.shape.all_vertices());
    return HomSimplex{std::move(m), std::move(flag)};
}

CellMap resolution_to_rigidification(const Resolution& res, const Rigidification& rig) {
    const int no = res.cat.object_count();
    CellMap out(no, std::vector<std::vector<int>>(no));
    for (int x = 0; x < no; ++x)
        for (int y = 0; y < no; ++y)
            for (const ParenWord& w : res.word_of_cell[x][y]) {
                int target = -1;
                try {
                    const HomSimplex s = to_hom_simplex(rig, x, w);
                    auto it = rig.homs[x][y]->cell_of.find(s);
                    if (it != rig.homs[x][y]->cell_of.end()) target = it->second;
                } catch (const CapError&) {
                }
                out[x][y].push_back(target);
            }
    return out;
}

CellMap rigidification_to_rigid_delta(const Rigidification& rig, const RigidDelta& rd) {
    const int no = rig.cat.object_count();
    if (no != rd.n + 1) throw DomainError("object counts differ");
    const FinSSet& nx = rig.nerve.sset;
    CellMap out(no, std::vector<std::vector<int>>(no));
    for (int i = 0; i < no; ++i)
        for (int j = 0; j < no; ++j)
            for (const HomSimplex& s : rig.homs[i][j]->simplex_of_cell) {
                if (j < i) {
                    out[i][j].push_back(-1);
                    continue;
                }
                std::vector<int> object(s.shape().vertex_count(), i);
                for (int b = 0; b < s.shape().bead_count(); ++b) {
                    const std::vector<int> vs = nx.vertices(s.map.images[b]);
                    for (std::size_t t = 0; t < vs.size(); ++t)
                        object[s.shape().bead_start(b) + t] = rig.nerve.object_of_cell[vs[t]];
                }
                std::vector<std::uint64_t> subsets;
                for (VertexMask set : s.flag.sets) {
                    std::uint64_t m = 0;
                    for (int p : positions(set)) m |= std::uint64_t{1} << object[p];
                    subsets.push_back(m);
                }
                const SimplexRef r = rd.chain(i, j, subsets);
                out[i][j].push_back(r.degenerate() ? -1 : r.id);
            }
    return out;
}

IsoReport iso_check(const SimpCategory& r, const SimpCategory& s, const CellMap& map, int up_to) {
    IsoReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failure = msg;
        return rep;
    };
    const int no = r.object_count();
    if (s.object_count() != no || static_cast<int>(map.size()) != no) return fail("object sets differ");
    auto where = [&](int x, int y) { return "hom(" + r.objects[x] + "," + r.objects[y] + ")"; };
    auto phi = [&](int x, int y, const SimplexRef& a) {
        return SimplexRef{a.base_dim, map[x][y].at(a.id), a.word};
    };
    for (int x = 0; x < no; ++x)
        for (int y = 0; y < no; ++y) {
            const FinSSet& hr = r.hom[x][y];
            const FinSSet& hs = s.hom[x][y];
            const auto& mp = map[x][y];
            if (static_cast<int>(mp.size()) != hr.size()) return fail(where(x, y) + ": map has the wrong size");
            for (int d = 0; d <= up_to; ++d) {
                std::vector<int> hit;
                for (int id : hr.nondegenerate(d)) {
                    ++rep.checked;
                    const int t = mp[id];
                    if (t < 0 || t >= hs.size() || hs.cell(t).dim != d)
                        return fail(where(x, y) + ": " + hr.cell(id).label + " has no image");
                    hit.push_back(t);
                }
                std::sort(hit.begin(), hit.end());
                if (std::adjacent_find(hit.begin(), hit.end()) != hit.end())
                    return fail(where(x, y) + ": not injective in dimension " + std::to_string(d));
                if (hit.size() != hs.nondegenerate(d).size())
                    return fail(where(x, y) + ": not surjective in dimension " + std::to_string(d));
                for (int id : hr.nondegenerate(d)) {
                    const SimplexRef a = hr.ref(id);
                    for (int i = 0; i <= d && d > 0; ++i) {
                        ++rep.checked;
                        if (phi(x, y, hr.face(a, i)) != hs.face(phi(x, y, a), i))
                            return fail(where(x, y) + ": d" + std::to_string(i) + " of " + hr.cell(id).label);
                    }
                    for (int i = 0; i <= d && d < up_to; ++i) {
                        ++rep.checked;
                        if (phi(x, y, hr.degeneracy(a, i)) != hs.degeneracy(phi(x, y, a), i))
                            return fail(where(x, y) + ": s" + std::to_string(i) + " of " + hr.cell(id).label);
                    }
                }
            }
        }
    for (int x = 0; x < no; ++x)
        if (map[x][x].at(r.units[x]) != s.units[x]) return fail("unit of " + r.objects[x]);
    struct Listed {
        std::vector<SimplexRef> simplices, images;
        std::vector<std::uint32_t> directions;  // degeneracy indices as a bit set
    };
    for (int d = 0; d <= up_to; ++d) {
        std::vector<std::vector<Listed>> lists(no, std::vector<Listed>(no));
        for (int x = 0; x < no; ++x)
            for (int y = 0; y < no; ++y) {
                Listed& l = lists[x][y];
                l.simplices = r.hom[x][y].simplices(d);
                for (const auto& a : l.simplices) {
                    l.images.push_back(phi(x, y, a));
                    std::uint32_t bits = 0;
                    for (int i : a.word.indices()) bits |= std::uint32_t{1} << i;
                    l.directions.push_back(bits);
                }
            }
        for (int x = 0; x < no; ++x)
            for (int y = 0; y < no; ++y)
                for (int z = 0; z < no; ++z) {
                    const Listed& gs = lists[y][z];
                    const Listed& fs = lists[x][y];
                    for (std::size_t a = 0; a < gs.simplices.size(); ++a)
                        for (std::size_t b = 0; b < fs.simplices.size(); ++b) {
                            // s_i g' . s_i f' = s_i (g' . f'): shared degeneracy directions add nothing.
                            if (gs.directions[a] & fs.directions[b]) continue;
                            ++rep.checked;
                            const auto rc = r.compose(x, y, z, gs.simplices[a], fs.simplices[b]);
                            const auto sc = s.compose(x, y, z, gs.images[a], fs.images[b]);
                            if (rc.has_value() != sc.has_value() || (rc && phi(x, z, *rc) != *sc))
                                return fail("composite " + r.hom[y][z].name(gs.simplices[a]) + " . " +
                                            r.hom[x][y].name(fs.simplices[b]));
                        }
                }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Homotopy coherent nerve

namespace {

struct Functor {
    std::vector<int> ob;
    std::vector<std::vector<std::vector<SimplexRef>>> img;  // [i][j][cell of C[Delta^k](i, j)], i < j

    auto operator<=>(const Functor&) const = default;
    bool operator==(const Functor&) const = default;
};

class CoherentNerve {
public:
    CoherentNerve(const SimpCategory& c, int n_cap, long long budget) : c_(c), budget_(budget) {
        for (int k = 0; k <= n_cap; ++k) rd_.push_back(rigid_delta(k, std::max(1, k)));
    }

    HcNerve build(int n_cap) {
        HcNerve out;
        out.sset = FinSSet(n_cap);
        nondeg_.assign(n_cap + 1, {});
        for (int o = 0; o < c_.object_count(); ++o) {
            out.sset.add_vertex(c_.objects[o]);
            nondeg_[0][vertex_functor(o)] = o;
        }
        for (int k = 1; k <= n_cap; ++k) {
            int counter = 0;
            for (const Functor& f : enumerate(k)) {
                if (degenerate_direction(f, k) >= 0) continue;
                std::vector<SimplexRef> faces;
                for (int t = 0; t <= k; ++t) faces.push_back(ez(out.sset, precompose(f, k, OrdinalMap::coface(t, k)), k - 1));
                std::string label = "<";
                for (std::size_t t = 0; t < f.ob.size(); ++t) label += (t ? "," : "") + c_.objects[f.ob[t]];
                label += ">#" + std::to_string(counter++);
                nondeg_[k][f] = out.sset.add_simplex(label, std::move(faces));
            }
        }
        out.candidates = candidates_;
        return out;
    }

private:
    Functor vertex_functor(int o) const {
        return Functor{{o}, std::vector<std::vector<std::vector<SimplexRef>>>(1, std::vector<std::vector<SimplexRef>>(1))};
    }

    SimplexRef eval(const Functor& f, int k, int i, int j, const SimplexRef& r) const {
        if (i == j) return unit_at(c_, f.ob[i], r.dim());
        const SimplexRef& base = f.img[i][j].at(r.id);
        if (r.word.empty()) return base;
        (void)k;
        return c_.hom[f.ob[i]][f.ob[j]].apply(base, r.word.surjection(r.base_dim));
    }

    const std::vector<SimplexRef>& simplices(int a, int b, int d) {
        auto key = std::make_tuple(a, b, d);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, c_.hom[a][b].simplices(d)).first;
        return it->second;
    }

    struct Slot {
        int i, j, cell, dim;
        int split = -1;  // interior vertex shared by the whole chain
        SimplexRef rho, tau;
        std::vector<SimplexRef> faces;
    };

    std::vector<Slot> slots(int k) const {
        const RigidDelta& rd = *rd_[k];
        std::vector<Slot> out;
        for (int len = 1; len <= k; ++len)
            for (int i = 0; i + len <= k; ++i) {
                const int j = i + len;
                const FinSSet& h = rd.cat.hom[i][j];
                for (int cell = 0; cell < h.size(); ++cell) {
                    Slot s{i, j, cell, h.cell(cell).dim, -1, {}, {}, {}};
                    const SimplexRef r = h.ref(cell);
                    const auto chain = rd.subsets_of(i, j, r);
                    for (int m = i + 1; m < j; ++m)
                        if (chain[0] >> m & 1) {
                            s.split = m;
                            break;
                        }
                    if (s.split >= 0) {
                        const int m = s.split;
                        std::vector<std::uint64_t> lo, hi;
                        const std::uint64_t low_mask = (std::uint64_t{1} << (m + 1)) - 1;
                        for (std::uint64_t set : chain) {
                            lo.push_back(set & low_mask);
                            hi.push_back(set & ~(low_mask >> 1));
                        }
                        s.rho = rd.chain(i, m, lo);
                        s.tau = rd.chain(m, j, hi);
                    }
                    for (int t = 0; t <= s.dim && s.dim > 0; ++t) s.faces.push_back(h.face(r, t));
                    out.push_back(std::move(s));
                }
            }
        return out;
    }

    std::vector<Functor> enumerate(int k) {
        const std::vector<Slot> plan = slots(k);
        std::vector<Functor> found;
        Functor f;
        f.ob.assign(k + 1, 0);
        f.img.assign(k + 1, std::vector<std::vector<SimplexRef>>(k + 1));
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) f.img[i][j].assign(rd_[k]->cat.hom[i][j].size(), SimplexRef{});
        auto faces_ok = [&](const Slot& s, const SimplexRef& v) {
            const FinSSet& h = c_.hom[f.ob[s.i]][f.ob[s.j]];
            for (int t = 0; t < static_cast<int>(s.faces.size()); ++t)
                if (eval(f, k, s.i, s.j, s.faces[t]) != h.face(v, t)) return false;
            return true;
        };
        auto fill = [&](auto&& self, std::size_t at) -> void {
            if (at == plan.size()) {
                if (functorial(f, k)) found.push_back(f);
                return;
            }
            const Slot& s = plan[at];
            const int a = f.ob[s.i], b = f.ob[s.j];
            if (s.split >= 0) {
                const int m = s.split;
                auto v = c_.compose(a, f.ob[m], b, eval(f, k, m, s.j, s.tau), eval(f, k, s.i, m, s.rho));
                if (!v) throw CapError("composite outside the truncation of " + c_.name);
                if (!faces_ok(s, *v)) return;
                f.img[s.i][s.j][s.cell] = *v;
                self(self, at + 1);
                return;
            }
            for (const SimplexRef& v : simplices(a, b, s.dim)) {
                if (++candidates_ > budget_)
                    throw CapError("homotopy coherent nerve exceeds the candidate budget of " + std::to_string(budget_));
                if (!faces_ok(s, v)) continue;
                f.img[s.i][s.j][s.cell] = v;
                self(self, at + 1);
            }
        };
        auto objects = [&](auto&& self, int t) -> void {
            if (t > k) {
                fill(fill, 0);
                return;
            }
            for (int o = 0; o < c_.object_count(); ++o) {
                f.ob[t] = o;
                self(self, t + 1);
            }
        };
        objects(objects, 0);
        return found;
    }

    // F(tau u rho) = F(tau) . F(rho) for every split, in every dimension up to k.
    bool functorial(const Functor& f, int k) const {
        const SimpCategory& cd = rd_[k]->cat;
        for (int i = 0; i <= k; ++i)
            for (int m = i + 1; m <= k; ++m)
                for (int j = m + 1; j <= k; ++j)
                    for (int d = 0; d <= k; ++d)
                        for (const auto& g : cd.hom[m][j].simplices(d))
                            for (const auto& h : cd.hom[i][m].simplices(d)) {
                                const SimplexRef u = *cd.compose(i, m, j, g, h);
                                auto v = c_.compose(f.ob[i], f.ob[m], f.ob[j], eval(f, k, m, j, g), eval(f, k, i, m, h));
                                if (!v || *v != eval(f, k, i, j, u)) return false;
                            }
        return true;
    }

    // F o C[theta] for theta : [m] -> [k].
    Functor precompose(const Functor& f, int k, const OrdinalMap& theta) const {
        const int m = theta.source_dim();
        const RigidDelta& rm = *rd_[m];
        const RigidDelta& rk = *rd_[k];
        Functor g;
        for (int t = 0; t <= m; ++t) g.ob.push_back(f.ob[theta(t)]);
        g.img.assign(m + 1, std::vector<std::vector<SimplexRef>>(m + 1));
        for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const FinSSet& h = rm.cat.hom[i][j];
                const int ti = theta(i), tj = theta(j);
                for (int cell = 0; cell < h.size(); ++cell) {
                    const SimplexRef r = h.ref(cell);
                    if (ti == tj) {
                        g.img[i][j].push_back(unit_at(c_, f.ob[ti], r.dim()));
                        continue;
                    }
                    std::vector<std::uint64_t> image;
                    for (std::uint64_t set : rm.subsets_of(i, j, r)) {
                        std::uint64_t out = 0;
                        for (int p = 0; p <= m; ++p)
                            if (set >> p & 1) out |= std::uint64_t{1} << theta(p);
                        image.push_back(out);
                    }
                    g.img[i][j].push_back(eval(f, k, ti, tj, rk.chain(ti, tj, image)));
                }
            }
        return g;
    }

    int degenerate_direction(const Functor& f, int k) const {
        for (int i = 0; i < k; ++i) {
            const Functor face = precompose(f, k, OrdinalMap::coface(i, k));
            if (precompose(face, k - 1, OrdinalMap::codegeneracy(i, k - 1)) == f) return i;
        }
        return -1;
    }

    SimplexRef ez(const FinSSet& x, const Functor& f, int k) const {
        auto it = nondeg_[k].find(f);
        if (it != nondeg_[k].end()) return x.ref(it->second);
        const int i = degenerate_direction(f, k);
        if (i < 0) throw DomainError("face functor missing from the coherent nerve");
        return x.degeneracy(ez(x, precompose(f, k, OrdinalMap::coface(i, k)), k - 1), i);
    }

    const SimpCategory& c_;
    long long budget_;
    long long candidates_ = 0;
    std::vector<std::unique_ptr<RigidDelta>> rd_;
    std::vector<std::map<Functor, int>> nondeg_;
    std::map<std::tuple<int, int, int>, std::vector<SimplexRef>> cache_;
};

}  // namespace

HcNerve hc_nerve(const SimpCategory& c, int n_cap, long long budget) {
    if (n_cap < 0) throw DomainError("n_cap must be non-negative");
    if (n_cap > 3) throw CapError("homotopy coherent nerve is limited to dimension 3");
    CoherentNerve builder(c, n_cap, budget);
    return builder.build(n_cap);
}

}  // namespace ccat
