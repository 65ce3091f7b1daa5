#include "ccat/sset_check.hpp"

#include <algorithm>
#include <sstream>

#include "ccat/errors.hpp"

namespace ccat {

const SimplexTable::Layer& SimplexTable::layer(int dim) const {
    auto it = layers_.find(dim);
    if (it != layers_.end()) return *it->second;
    auto l = std::make_unique<Layer>();
    l->simplices = x_->simplices(dim);
    if (dim >= 1) {
        l->by_face.resize(dim + 1);
        l->faces.reserve(l->simplices.size());
        for (int p = 0; p < static_cast<int>(l->simplices.size()); ++p) {
            std::vector<SimplexRef> fs;
            for (int i = 0; i <= dim; ++i) {
                fs.push_back(x_->face(l->simplices[p], i));
                l->by_face[i][fs.back()].push_back(p);
            }
            l->faces.push_back(std::move(fs));
        }
    }
    return *layers_.emplace(dim, std::move(l)).first->second;
}

std::vector<SimplexRef> SimplexTable::fillers(const FaceAssignment& faces) const {
    const int n = static_cast<int>(faces.size()) - 1;
    const Layer& l = layer(n);
    std::vector<SimplexRef> out;
    int anchor = -1;
    for (int i = 0; i <= n; ++i)
        if (faces[i]) {
            anchor = i;
            break;
        }
    auto matches = [&](int p) {
        for (int i = 0; i <= n; ++i)
            if (faces[i] && l.faces[p][i] != *faces[i]) return false;
        return true;
    };
    if (anchor < 0) return l.simplices;
    auto it = l.by_face[anchor].find(*faces[anchor]);
    if (it == l.by_face[anchor].end()) return out;
    for (int p : it->second)
        if (matches(p)) out.push_back(l.simplices[p]);
    return out;
}

long long SimplexTable::for_each_compatible(int n, int missing,
                                            const std::function<bool(const FaceAssignment&)>& visit) const {
    if (n < 1) throw DomainError("horns and spheres need dimension >= 1");
    const Layer& l = layer(n - 1);
    std::vector<int> order;
    for (int j = 0; j <= n; ++j)
        if (j != missing) order.push_back(j);
    std::vector<int> pos(n + 1, -1);
    FaceAssignment faces(n + 1);
    long long visited = 0;
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (stop) return;
        if (k == order.size()) {
            ++visited;
            if (!visit(faces)) stop = true;
            return;
        }
        const int j = order[k];
        auto consider = [&](int p) {
            if (n >= 2)
                for (std::size_t t = 0; t < k; ++t) {
                    const int i = order[t];
                    if (l.faces[p][i] != l.faces[pos[i]][j - 1]) return;
                }
            pos[j] = p;
            faces[j] = l.simplices[p];
            self(self, k + 1);
            faces[j].reset();
            pos[j] = -1;
        };
        if (k == 0 || n < 2) {
            for (int p = 0; p < static_cast<int>(l.simplices.size()) && !stop; ++p) consider(p);
        } else {
            const int i = order[0];
            auto it = l.by_face[i].find(l.faces[pos[i]][j - 1]);
            if (it == l.by_face[i].end()) return;
            for (int p : it->second) {
                if (stop) break;
                consider(p);
            }
        }
    };
    rec(rec, 0);
    return visited;
}

bool faces_compatible(const FinSSet& x, const FaceAssignment& faces) {
    const int n = static_cast<int>(faces.size()) - 1;
    for (int j = 0; j <= n; ++j) {
        if (!faces[j]) continue;
        if (faces[j]->dim() != n - 1) return false;
        if (n < 2) continue;
        for (int i = 0; i < j; ++i)
            if (faces[i] && x.face(*faces[j], i) != x.face(*faces[i], j - 1)) return false;
    }
    return true;
}

std::vector<SimplexRef> find_fillers(const FinSSet& x, const FaceAssignment& faces) {
    const int n = static_cast<int>(faces.size()) - 1;
    if (n > x.dim_cap())
        throw CapError("filler dimension " + std::to_string(n) + " exceeds dim cap " + std::to_string(x.dim_cap()));
    if (!faces_compatible(x, faces)) throw DomainError("face assignment is not compatible");
    SimplexTable table(x);
    return table.fillers(faces);
}

std::vector<SimplexRef> solve_extension(const FinSSet& x, const Shape& sub,
                                        const std::vector<SimplexRef>& assignment) {
    const int m = sub.n;
    if (m > x.dim_cap())
        throw CapError("extension dimension " + std::to_string(m) + " exceeds dim cap " + std::to_string(x.dim_cap()));
    if (assignment.size() != sub.generators.size()) throw DomainError("one assigned simplex per generator required");
    std::vector<int> required(m + 1, -1);
    std::vector<OrdinalMap> incl;
    for (std::size_t g = 0; g < sub.generators.size(); ++g) {
        const auto& gen = sub.generators[g];
        if (assignment[g].dim() != static_cast<int>(gen.size()) - 1)
            throw DomainError("assigned simplex has the wrong dimension");
        const auto vs = x.vertices(assignment[g]);
        for (std::size_t t = 0; t < gen.size(); ++t) {
            if (required[gen[t]] >= 0 && required[gen[t]] != vs[t]) return {};
            required[gen[t]] = vs[t];
        }
        incl.push_back(OrdinalMap::inclusion(gen, m));
    }
    std::vector<SimplexRef> out;
    for (const auto& s : x.simplices(m)) {
        const auto vs = x.vertices(s);
        bool ok = true;
        for (int v = 0; v <= m && ok; ++v) ok = required[v] < 0 || required[v] == vs[v];
        for (std::size_t g = 0; g < incl.size() && ok; ++g) ok = x.apply(s, incl[g]) == assignment[g];
        if (ok) out.push_back(s);
    }
    return out;
}

namespace {

void require_cap(const FinSSet& x, int up_to) {
    if (up_to > x.dim_cap())
        throw CapError("check dimension " + std::to_string(up_to) + " exceeds dim cap " + std::to_string(x.dim_cap()));
}

bool check_horns(const SimplexTable& table, int n, int k, CheckReport& rep, bool require_unique) {
    table.for_each_compatible(n, k, [&](const FaceAssignment& faces) {
        ++rep.checked;
        auto fill = table.fillers(faces);
        if (fill.size() != 1) rep.all_unique = false;
        if (fill.empty() || (require_unique && fill.size() > 1)) {
            rep.ok = false;
            rep.certificate = Certificate{"horn", n, k, faces, fill};
            return false;
        }
        return true;
    });
    return rep.ok;
}

}  // namespace

CheckReport is_quasicategory(const FinSSet& x, int up_to) {
    require_cap(x, up_to);
    CheckReport rep;
    rep.up_to = up_to;
    rep.dim_cap = x.dim_cap();
    SimplexTable table(x);
    for (int n = 2; n <= up_to && rep.ok; ++n)
        for (int k = 1; k < n && rep.ok; ++k) check_horns(table, n, k, rep, false);
    rep.detail = rep.ok ? "every inner horn of dimension <= " + std::to_string(up_to) + " has a filler"
                        : "unfillable inner horn";
    return rep;
}

CheckReport is_coskeletal(const FinSSet& x, int n, int up_to) {
    require_cap(x, up_to);
    CheckReport rep;
    rep.up_to = up_to;
    rep.dim_cap = x.dim_cap();
    SimplexTable table(x);
    for (int k = n + 1; k <= up_to && rep.ok; ++k) {
        table.for_each_compatible(k, -1, [&](const FaceAssignment& faces) {
            ++rep.checked;
            auto fill = table.fillers(faces);
            if (fill.size() != 1) {
                rep.ok = false;
                rep.certificate = Certificate{"sphere", k, -1, faces, fill};
                return false;
            }
            return true;
        });
    }
    rep.detail = rep.ok ? "every sphere of dimension " + std::to_string(n + 1) + ".." + std::to_string(up_to) +
                              " has exactly one filler"
                        : (rep.certificate->fillers.empty() ? "unfillable sphere" : "sphere with several fillers");
    return rep;
}

CheckReport is_nerve_like(const FinSSet& x, int up_to) {
    if (up_to < 3) throw DomainError("nerve characterization needs up_to >= 3");
    CheckReport rep = is_coskeletal(x, 2, up_to);
    if (!rep.ok) return rep;
    SimplexTable table(x);
    for (auto [n, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}})
        if (!check_horns(table, n, k, rep, true)) {
            rep.detail = rep.certificate->fillers.empty() ? "unfillable low-dimensional inner horn"
                                                          : "low-dimensional inner horn with several fillers";
            return rep;
        }
    FinCategory cat;
    for (int v : x.nondegenerate(0)) cat.add_object(x.cell(v).label);
    std::map<int, int> object_of_vertex;
    for (int o = 0; o < static_cast<int>(x.nondegenerate(0).size()); ++o) object_of_vertex[x.nondegenerate(0)[o]] = o;
    std::map<SimplexRef, int> morphism_of_edge;
    for (int v : x.nondegenerate(0))
        morphism_of_edge[x.degeneracy(x.ref(v), 0)] = cat.identity(object_of_vertex[v]);
    for (int e : x.nondegenerate(1)) {
        const auto& c = x.cell(e);
        morphism_of_edge[x.ref(e)] =
            cat.add_morphism(c.label, object_of_vertex.at(c.vertices[0]), object_of_vertex.at(c.vertices[1]));
    }
    for (int f : x.nondegenerate(1))
        for (int g : x.nondegenerate(1)) {
            if (x.cell(f).vertices[1] != x.cell(g).vertices[0]) continue;
            auto fill = table.fillers({x.ref(g), std::nullopt, x.ref(f)});
            const SimplexRef composite = x.face(fill.at(0), 1);
            cat.set_composite(morphism_of_edge.at(x.ref(g)), morphism_of_edge.at(x.ref(f)),
                              morphism_of_edge.at(composite));
        }
    cat.validate();
    rep.category = std::move(cat);
    rep.detail = "2-coskeletal up to " + std::to_string(up_to) + " with unique low-dimensional inner horn fillers";
    return rep;
}

FinSSet coskeletal_completion(const FinSSet& x, int n, int new_cap) {
    if (n > x.dim_cap() || x.dim_cap() > new_cap) throw DomainError("completion needs n <= dim cap <= new cap");
    FinSSet y = x;
    y.raise_dim_cap(new_cap);
    for (int k = n + 1; k <= new_cap; ++k) {
        std::vector<FaceAssignment> holes;
        {
            SimplexTable table(y);
            table.for_each_compatible(k, -1, [&](const FaceAssignment& faces) {
                if (table.fillers(faces).empty()) holes.push_back(faces);
                return true;
            });
        }
        int idx = 0;
        for (const auto& h : holes) {
            std::vector<SimplexRef> faces;
            for (const auto& f : h) faces.push_back(*f);
            std::string label = "c" + std::to_string(k) + "_" + std::to_string(idx++);
            while (y.find(label)) label += "'";
            y.add_simplex(label, std::move(faces));
        }
    }
    return y;
}

FaceAssignment boundary_of(const FinSSet& x, const SimplexRef& s) {
    FaceAssignment out;
    for (int i = 0; i <= s.dim(); ++i) out.push_back(x.face(s, i));
    return out;
}

std::string describe(const FinSSet& x, const Certificate& c) {
    std::ostringstream os;
    os << c.kind << " of dimension " << c.n;
    if (c.missing >= 0) os << " missing face " << c.missing;
    os << ": [";
    for (std::size_t i = 0; i < c.faces.size(); ++i) {
        os << (i ? "; " : "") << "d" << i << "=";
        os << (c.faces[i] ? x.name(*c.faces[i]) : std::string("-"));
    }
    os << "] with " << c.fillers.size() << " filler(s)";
    return os.str();
}

}  // namespace ccat
