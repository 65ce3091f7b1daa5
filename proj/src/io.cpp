#include "ccat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ccat/errors.hpp"

namespace ccat {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where, "missing field '" + key + "'");
    return *it;
}

std::string str(const Json& j, const std::string& where) {
    if (!j.is_string()) bad(where, "expected a string");
    return j.get<std::string>();
}

int integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where, "expected an integer");
    return j.get<int>();
}

const Json& array(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    return j;
}

std::vector<int> int_list(const Json& j, const std::string& where) {
    std::vector<int> out;
    int k = 0;
    for (const auto& v : array(j, where)) out.push_back(integer(v, where + "[" + std::to_string(k++) + "]"));
    return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        int line = 1, col = 1;
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": JSON syntax error");
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

// ---------------------------------------------------------------------------
// Categories

FinCategory category_from_json(const Json& j) {
    FinCategory c;
    std::map<std::string, int> object, morphism;
    int k = 0;
    for (const auto& o : array(field(j, "objects", "category"), "objects")) {
        const std::string label = str(o, "objects[" + std::to_string(k++) + "]");
        if (object.count(label)) bad("objects", "duplicate object '" + label + "'");
        object[label] = c.add_object(label);
    }
    std::map<std::string, std::string> identity_name;
    if (j.contains("identities")) {
        const Json& ids = j["identities"];
        if (!ids.is_object()) bad("identities", "expected an object");
        for (auto it = ids.begin(); it != ids.end(); ++it) {
            if (!object.count(it.key())) bad("identities", "unknown object '" + it.key() + "'");
            const std::string name = str(it.value(), "identities." + it.key());
            identity_name[it.key()] = name;
            morphism[name] = c.identity(object[it.key()]);
        }
    }
    for (const auto& [label, o] : object)
        if (!identity_name.count(label)) morphism[c.morphism(c.identity(o)).label] = c.identity(o);
    k = 0;
    for (const auto& m : array(field(j, "morphisms", "category"), "morphisms")) {
        const std::string where = "morphisms[" + std::to_string(k++) + "]";
        const std::string id = str(field(m, "id", where), where + ".id");
        const std::string src = str(field(m, "src", where), where + ".src");
        const std::string tgt = str(field(m, "tgt", where), where + ".tgt");
        if (!object.count(src)) bad(where + ".src", "unknown object '" + src + "'");
        if (!object.count(tgt)) bad(where + ".tgt", "unknown object '" + tgt + "'");
        auto known = morphism.find(id);
        if (known != morphism.end()) {
            const int mid = known->second;
            if (c.is_identity(mid) && c.morphism(mid).src == object[src] && object[src] == object[tgt]) continue;
            bad(where + ".id", "duplicate morphism '" + id + "'");
        }
        morphism[id] = c.add_morphism(id, object[src], object[tgt]);
    }
    if (j.contains("comp")) {
        k = 0;
        for (const auto& t : array(j["comp"], "comp")) {
            const std::string where = "comp[" + std::to_string(k++) + "]";
            if (!t.is_array() || t.size() != 3) bad(where, "expected [g, f, gf]");
            int ids[3];
            for (int s = 0; s < 3; ++s) {
                const std::string name = str(t[s], where);
                if (!morphism.count(name)) bad(where, "unknown morphism '" + name + "'");
                ids[s] = morphism[name];
            }
            const int g = ids[0], f = ids[1], gf = ids[2];
            if (c.is_identity(g) || c.is_identity(f)) {
                if (c.morphism(f).tgt != c.morphism(g).src || gf != (c.is_identity(g) ? f : g))
                    bad(where, "composite with an identity is inconsistent");
                continue;
            }
            try {
                c.set_composite(g, f, gf);
            } catch (const DomainError& e) {
                bad(where, e.what());
            }
        }
    }
    try {
        c.validate();
    } catch (const DomainError& e) {
        bad("category", e.what());
    }
    return c;
}

Json to_json(const FinCategory& c) {
    Json j;
    j["objects"] = Json::array();
    for (int o = 0; o < c.object_count(); ++o) j["objects"].push_back(c.object_label(o));
    j["morphisms"] = Json::array();
    j["identities"] = Json::object();
    for (int m = 0; m < c.morphism_count(); ++m) {
        const auto& mm = c.morphism(m);
        j["morphisms"].push_back(
            {{"id", mm.label}, {"src", c.object_label(mm.src)}, {"tgt", c.object_label(mm.tgt)}});
    }
    for (int o = 0; o < c.object_count(); ++o) j["identities"][c.object_label(o)] = c.morphism(c.identity(o)).label;
    j["comp"] = Json::array();
    for (const auto& [gf, r] : c.composition_table())
        j["comp"].push_back({c.morphism(gf.first).label, c.morphism(gf.second).label, c.morphism(r).label});
    return j;
}

// ---------------------------------------------------------------------------
// Simplicial sets

Json ref_to_json(const FinSSet& x, const SimplexRef& r) {
    return Json{{"word", r.word.indices()}, {"id", x.cell(r.id).label}};
}

SimplexRef ref_from_json(const FinSSet& x, const Json& j, const std::string& where) {
    const std::string label = str(field(j, "id", where), where + ".id");
    const auto id = x.find(label);
    if (!id) bad(where + ".id", "unknown simplex '" + label + "'");
    std::vector<int> word;
    if (j.contains("word")) word = int_list(j["word"], where + ".word");
    const int base = x.cell(*id).dim;
    try {
        SimplexRef r{base, *id, DegeneracyWord(word)};
        if (!word.empty()) r.word.surjection(base);  // range check
        return r;
    } catch (const DomainError& e) {
        bad(where + ".word", e.what());
    }
}

FinSSet sset_from_json(const Json& j) {
    const int cap = integer(field(j, "dim_cap", "sset"), "dim_cap");
    if (cap < 0) bad("dim_cap", "must be non-negative");
    FinSSet x(cap);
    const Json& simplices = field(j, "simplices", "sset");
    if (!simplices.is_object()) bad("simplices", "expected an object keyed by dimension");
    std::map<int, const Json*> by_dim;
    for (auto it = simplices.begin(); it != simplices.end(); ++it) {
        int d = -1;
        try {
            std::size_t used = 0;
            d = std::stoi(it.key(), &used);
            if (used != it.key().size()) d = -1;
        } catch (const std::exception&) {
        }
        if (d < 0) bad("simplices", "dimension key '" + it.key() + "' is not a natural number");
        by_dim[d] = &it.value();
    }
    for (const auto& [d, list] : by_dim) {
        int k = 0;
        for (const auto& s : array(*list, "simplices." + std::to_string(d))) {
            const std::string where = "simplices." + std::to_string(d) + "[" + std::to_string(k++) + "]";
            const std::string label = str(field(s, "id", where), where + ".id");
            std::vector<SimplexRef> faces;
            if (s.contains("faces")) {
                int t = 0;
                for (const auto& f : array(s["faces"], where + ".faces"))
                    faces.push_back(ref_from_json(x, f, where + ".faces[" + std::to_string(t++) + "]"));
            }
            if (static_cast<int>(faces.size()) != (d == 0 ? 0 : d + 1))
                bad(where, "a " + std::to_string(d) + "-simplex needs " + std::to_string(d == 0 ? 0 : d + 1) +
                               " faces");
            try {
                x.add_simplex(label, std::move(faces));
            } catch (const DomainError& e) {
                bad(where, e.what());
            } catch (const CapError& e) {
                bad(where, e.what());
            }
        }
    }
    return x;
}

Json to_json(const FinSSet& x) {
    Json j;
    j["dim_cap"] = x.dim_cap();
    j["simplices"] = Json::object();
    for (int d = 0; d <= x.dim_cap(); ++d) {
        const auto& ids = x.nondegenerate(d);
        if (ids.empty()) continue;
        Json list = Json::array();
        for (int id : ids) {
            Json faces = Json::array();
            for (const auto& f : x.cell(id).faces) faces.push_back(ref_to_json(x, f));
            list.push_back({{"id", x.cell(id).label}, {"faces", faces}});
        }
        j["simplices"][std::to_string(d)] = list;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Hom-space simplices

Json to_json(const FinSSet& x, const HomSimplex& s) {
    Json j;
    j["beads"] = s.shape().bead_dims();
    j["images"] = Json::array();
    for (const auto& r : s.map.images) j["images"].push_back(ref_to_json(x, r));
    j["source"] = x.cell(s.map.source).label;
    j["target"] = x.cell(s.map.target).label;
    j["flag"] = Json::array();
    for (VertexMask m : s.flag.sets) j["flag"].push_back(positions(m));
    j["text"] = to_string(x, s);
    return j;
}

HomSimplex hom_simplex_from_json(const FinSSet& x, const Json& j, const std::string& where) {
    const std::string source = str(field(j, "source", where), where + ".source");
    const auto v = x.find(source);
    if (!v || x.cell(*v).dim != 0) bad(where + ".source", "unknown vertex '" + source + "'");
    std::vector<SimplexRef> images;
    int k = 0;
    for (const auto& r : array(field(j, "images", where), where + ".images"))
        images.push_back(ref_from_json(x, r, where + ".images[" + std::to_string(k++) + "]"));
    try {
        NecklaceMap m = make_necklace_map(x, images, *v);
        if (j.contains("beads") && int_list(j["beads"], where + ".beads") != m.shape.bead_dims())
            bad(where + ".beads", "bead dimensions do not match the images");
        Flag flag;
        k = 0;
        for (const auto& set : array(field(j, "flag", where), where + ".flag"))
            flag.sets.push_back(mask_of(int_list(set, where + ".flag[" + std::to_string(k++) + "]")));
        flag.validate(m.shape);
        return tnd_quotient(x, m, flag);
    } catch (const DomainError& e) {
        bad(where, e.what());
    }
}

Json to_json(const FinSSet& x, const HomSpace& h) {
    Json j;
    j["source"] = x.cell(h.source).label;
    j["target"] = x.cell(h.target).label;
    j["dim_cap"] = h.dim_cap;
    j["size_cap"] = h.size_cap;
    j["size_truncated"] = h.size_truncated;
    j["sset"] = to_json(h.sset);
    j["index"] = Json::array();
    for (int id = 0; id < h.sset.size(); ++id) {
        Json e = to_json(x, h.simplex_of_cell[id]);
        e["id"] = h.sset.cell(id).label;
        e.erase("source");
        e.erase("target");
        j["index"].push_back(e);
    }
    Json counts = Json::array();
    for (int d = 0; d <= h.dim_cap; ++d)
        counts.push_back({{"dim", d}, {"nondegenerate", h.sset.count_nondegenerate(d)},
                          {"total", h.sset.count_simplices(d)}});
    j["counts"] = counts;
    return j;
}

Json to_json(const FinSSet& x, const HornInHom& h) {
    Json j;
    j["source"] = x.cell(h.source).label;
    j["target"] = x.cell(h.target).label;
    j["n"] = h.n;
    j["missing"] = h.missing;
    j["faces"] = Json::array();
    for (const auto& f : h.faces) j["faces"].push_back(f ? to_json(x, *f) : Json(nullptr));
    return j;
}

Json to_json(const FinSSet& x, const SphereInHom& s) {
    Json j = to_json(x, s.as_faces());
    j.erase("missing");
    return j;
}

Json to_json(const FinSSet& x, const Certificate& c) {
    Json j;
    j["kind"] = c.kind;
    j["n"] = c.n;
    j["missing"] = c.missing;
    j["faces"] = Json::array();
    for (const auto& f : c.faces) j["faces"].push_back(f ? ref_to_json(x, *f) : Json(nullptr));
    j["fillers"] = Json::array();
    for (const auto& f : c.fillers) j["fillers"].push_back(ref_to_json(x, f));
    j["text"] = describe(x, c);
    return j;
}

Json to_json(const FinSSet& x, const CheckReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["up_to"] = r.up_to;
    j["dim_cap"] = r.dim_cap;
    j["truncation_relative"] = r.truncation_relative;
    j["checked"] = r.checked;
    j["all_unique"] = r.all_unique;
    j["detail"] = r.detail;
    j["certificate"] = r.certificate ? to_json(x, *r.certificate) : Json(nullptr);
    j["category"] = r.category ? to_json(*r.category) : Json(nullptr);
    return j;
}

Json to_json(const FinSSet& x, const MergeStep& m) {
    Json j;
    j["kind"] = m.kind;
    j["dim"] = m.dim;
    j["generators"] = m.generators;
    j["assignment"] = Json::array();
    for (const auto& r : m.assignment) j["assignment"].push_back(ref_to_json(x, r));
    j["result"] = ref_to_json(x, m.result);
    j["solutions"] = m.solutions;
    j["interpretation"] = m.interpretation;
    return j;
}

Json to_json(const FinSSet& x, const UnfillableCertificate& c) {
    Json j;
    j["argument"] = c.argument;
    j["size_cap"] = c.size_cap;
    j["searched"] = c.searched;
    j["unfillable"] = c.unfillable();
    j["fillers"] = Json::array();
    for (const auto& f : c.fillers) j["fillers"].push_back(to_json(x, f));
    return j;
}

// ---------------------------------------------------------------------------
// Simplicial categories

Json to_json(const SimpCategory& c, int up_to) {
    Json j;
    j["name"] = c.name;
    j["objects"] = c.objects;
    j["dim_cap"] = c.dim_cap;
    j["size_cap"] = c.size_cap;
    const int no = c.object_count();
    j["units"] = Json::object();
    for (int x = 0; x < no; ++x) j["units"][c.objects[x]] = c.hom[x][x].cell(c.units[x]).label;
    j["homs"] = Json::array();
    for (int x = 0; x < no; ++x)
        for (int y = 0; y < no; ++y)
            j["homs"].push_back({{"source", c.objects[x]}, {"target", c.objects[y]}, {"sset", to_json(c.hom[x][y])}});
    j["composition"] = Json::array();
    for (int d = 0; d <= up_to; ++d)
        for (int x = 0; x < no; ++x)
            for (int y = 0; y < no; ++y)
                for (int z = 0; z < no; ++z)
                    for (const auto& g : c.hom[y][z].simplices(d))
                        for (const auto& f : c.hom[x][y].simplices(d)) {
                            if (g.degenerate() && f.degenerate()) continue;
                            const auto gf = c.compose(x, y, z, g, f);
                            if (!gf) continue;
                            j["composition"].push_back({{"objects", {c.objects[x], c.objects[y], c.objects[z]}},
                                                        {"g", c.hom[y][z].name(g)},
                                                        {"f", c.hom[x][y].name(f)},
                                                        {"gf", c.hom[x][z].name(*gf)}});
                        }
    return j;
}

}  // namespace ccat
