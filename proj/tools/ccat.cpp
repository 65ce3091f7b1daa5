// Command-line front end: hom-spaces, checkers, horn filling, resolutions and demos.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "ccat/errors.hpp"
#include "ccat/io.hpp"
#include "ccat/notation.hpp"

using namespace ccat;

namespace {

enum Exit { ok = 0, negative = 1, cap = 2, input = 3 };

struct Options {
    int dim_cap = 3;
    int size_cap = 5;
    long long budget = 1000000;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "human";
};

struct Report {
    Json json = Json::object();
    std::ostringstream human;
    int exit = Exit::ok;
};

// ---------------------------------------------------------------------------
// Inputs

FinCategory builtin_category(const std::string& arg) {
    const auto colon = arg.find(':');
    const std::string name = arg.substr(0, colon);
    auto size = [&]() {
        if (colon == std::string::npos) throw InputError("builtin '" + name + "' needs a size, e.g. " + name + ":3");
        try {
            return std::stoi(arg.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("bad size in builtin '" + arg + "'");
        }
    };
    if (name == "ordinal") return categories::ordinal(size());
    if (name == "cube") return categories::cube(size());
    if (name == "retraction" || name == "rs") return categories::retraction();
    if (name == "terminal") return categories::terminal();
    if (name == "five-object") return categories::five_object();
    if (name == "parallel-pair") return categories::parallel_pair();
    throw InputError("unknown builtin category '" + name +
                     "' (ordinal:N, cube:M, retraction, terminal, five-object, parallel-pair)");
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::optional<FinCategory> category_arg(const std::string& arg, Json* loaded = nullptr) {
    if (starts_with(arg, "builtin:")) return builtin_category(arg.substr(8));
    if (starts_with(arg, "fixture:")) return std::nullopt;
    const Json j = read_json_file(arg);
    if (loaded) *loaded = j;
    if (j.is_object() && j.contains("objects")) return category_from_json(j);
    return std::nullopt;
}

FinCategory load_category(const std::string& arg) {
    auto c = category_arg(arg);
    if (!c) throw InputError(arg + ": expected a category (builtin:... or a JSON file with 'objects')");
    return *c;
}

FinSSet space_from_json(const Json& j, int dim_cap) {
    if (j.is_string()) {
        const std::string arg = j.get<std::string>();
        if (starts_with(arg, "fixture:")) return builtin_fixture(arg.substr(8)).x;
        if (starts_with(arg, "builtin:")) return nerve(builtin_category(arg.substr(8)), dim_cap);
        throw InputError("space: expected builtin:..., fixture:... or an inline object");
    }
    if (j.is_object() && j.contains("objects")) return nerve(category_from_json(j), dim_cap);
    return sset_from_json(j);
}

FinSSet load_space(const std::string& arg, int dim_cap) {
    if (starts_with(arg, "fixture:")) return builtin_fixture(arg.substr(8)).x;
    Json j;
    if (auto c = category_arg(arg, &j)) return nerve(*c, dim_cap);
    return sset_from_json(j);
}

int vertex(const FinSSet& x, const std::string& label) {
    const auto v = x.find(label);
    if (!v || x.cell(*v).dim != 0) throw InputError("unknown vertex '" + label + "'");
    return *v;
}

Json counts_json(const FinSSet& h, int up_to) {
    Json out = Json::array();
    for (int d = 0; d <= up_to; ++d)
        out.push_back({{"dim", d}, {"nondegenerate", h.count_nondegenerate(d)}, {"total", h.count_simplices(d)}});
    return out;
}

void counts_human(std::ostream& os, const FinSSet& h, int up_to) {
    for (int d = 0; d <= up_to; ++d)
        os << "  dim " << d << ": " << h.count_simplices(d) << " simplices (" << h.count_nondegenerate(d)
           << " non-degenerate)\n";
}

// ---------------------------------------------------------------------------
// Commands

void cmd_hom(const Options& o, const std::string& space, const std::string& a, const std::string& b, Report& r) {
    const FinSSet x = load_space(space, std::max(o.dim_cap, o.size_cap));
    const HomSpace h = hom_space(x, vertex(x, a), vertex(x, b), o.dim_cap, o.size_cap);
    r.json = to_json(x, h);
    r.human << "hom(" << a << ", " << b << ") with dim cap " << o.dim_cap << ", size cap " << o.size_cap
            << (h.size_truncated ? " (necklaces cut off by the size cap)" : "") << "\n";
    counts_human(r.human, h.sset, o.dim_cap);
    for (int d = 0; d <= o.dim_cap; ++d)
        for (int id : h.sset.nondegenerate(d)) r.human << "  " << h.sset.cell(id).label << "\n";
}

void cmd_check_qcat(const Options& o, const std::string& space, Report& r) {
    const FinSSet x = load_space(space, o.dim_cap);
    const CheckReport c = is_quasicategory(x, o.dim_cap);
    r.json = to_json(x, c);
    if (c.ok) {
        r.human << "quasi-category up to dimension " << c.up_to << (c.all_unique ? " (all inner horns uniquely filled)" : "")
                << "\n";
    } else {
        r.human << "not a quasi-category: " << c.detail << "\n";
        if (c.certificate) r.human << "  " << describe(x, *c.certificate) << "\n";
        r.exit = Exit::negative;
    }
}

void cmd_check_cosk(const Options& o, const std::string& space, int n, Report& r) {
    const FinSSet x = load_space(space, o.dim_cap);
    const CheckReport c = is_coskeletal(x, n, o.dim_cap);
    r.json = to_json(x, c);
    r.json["n"] = n;
    if (c.ok) {
        r.human << n << "-coskeletal up to dimension " << c.up_to << "\n";
    } else {
        r.human << "not " << n << "-coskeletal: " << c.detail << "\n";
        if (c.certificate) r.human << "  " << describe(x, *c.certificate) << "\n";
        r.exit = Exit::negative;
    }
}

void cmd_fill_horn(const Options& o, const std::string& path, Report& r) {
    const Json j = read_json_file(path);
    if (!j.is_object() || !j.contains("space") || !j.contains("faces"))
        throw InputError(path + ": expected fields 'space' and 'faces'");
    const FinSSet x = space_from_json(j["space"], std::max(o.dim_cap, o.size_cap));
    const Json& faces = j["faces"];
    if (!faces.is_array() || faces.size() < 2) throw InputError(path + ": 'faces' must list at least two slots");
    const int missing = j.contains("missing") && !j["missing"].is_null() ? j["missing"].get<int>() : -1;
    const int n = static_cast<int>(faces.size()) - 1;
    if (missing < -1 || missing > n) throw InputError(path + ": 'missing' out of range");
    r.json["kind"] = missing < 0 ? "sphere" : "horn";
    r.json["n"] = n;
    r.json["missing"] = missing;

    if (!j.contains("hom")) {
        FaceAssignment fa;
        for (int i = 0; i <= n; ++i) {
            if (i == missing) {
                fa.push_back(std::nullopt);
                continue;
            }
            fa.push_back(ref_from_json(x, faces[i], "faces[" + std::to_string(i) + "]"));
        }
        if (!faces_compatible(x, fa)) throw InputError(path + ": faces are not compatible");
        const auto fillers = find_fillers(x, fa);
        r.json["method"] = "find_fillers";
        r.json["fillers"] = Json::array();
        for (const auto& f : fillers) r.json["fillers"].push_back(ref_to_json(x, f));
        r.human << fillers.size() << " filler(s)\n";
        for (const auto& f : fillers) r.human << "  " << x.name(f) << "\n";
        if (fillers.empty()) r.exit = Exit::negative;
        return;
    }

    const Json& hom = j["hom"];
    if (!hom.is_array() || hom.size() != 2) throw InputError(path + ": 'hom' must be [source, target]");
    HornInHom h;
    h.source = vertex(x, hom[0].get<std::string>());
    h.target = vertex(x, hom[1].get<std::string>());
    h.n = n;
    h.missing = missing;
    for (int i = 0; i <= n; ++i) {
        if (i == missing) {
            h.faces.push_back(std::nullopt);
            continue;
        }
        h.faces.push_back(hom_simplex_from_json(x, faces[i], "faces[" + std::to_string(i) + "]"));
    }
    if (!h.compatible(x)) throw InputError(path + ": faces are not compatible");
    r.json["hom"] = {x.cell(h.source).label, x.cell(h.target).label};

    std::vector<HomSimplex> fillers;
    if (n == 2 && missing == 1) {
        const Lambda21Filler f = fill_lambda21(x, h);
        r.json["method"] = "fill_lambda21";
        r.json["trace"] = Json::array();
        for (const auto& step : f.trace) r.json["trace"].push_back(to_json(x, step));
        r.human << "constructive filler (" << f.trace.size() << " merge steps)\n";
        for (const auto& step : f.trace)
            r.human << "  " << step.kind << " merge in dimension " << step.dim << " -> " << x.name(step.result)
                    << (step.interpretation ? " (interpreted)" : "") << "\n";
        fillers.push_back(f.filler);
    } else if (missing < 0 && n >= 4) {
        SphereInHom s{h.source, h.target, n, {}};
        for (const auto& f : h.faces) s.faces.push_back(*f);
        r.json["method"] = "fill_sphere_cosk3";
        fillers.push_back(fill_sphere_cosk3(x, s));
    } else {
        r.json["method"] = "exhaustive";
        fillers = hom_fillers_sset(x, h, o.size_cap);
    }
    r.json["fillers"] = Json::array();
    for (const auto& f : fillers) r.json["fillers"].push_back(to_json(x, f));
    r.human << fillers.size() << " filler(s)\n";
    for (const auto& f : fillers) r.human << "  " << to_string(x, f) << "\n";
    if (fillers.empty()) r.exit = Exit::negative;
}

void cmd_resolve(const Options& o, const std::string& arg, Report& r) {
    const FinCategory a = load_category(arg);
    auto res = free_resolution(a, o.dim_cap, o.size_cap);
    r.json = to_json(res->cat, 0);
    r.json["size_truncated"] = res->size_truncated;
    r.human << "free resolution, words of length <= " << o.size_cap << ", dimension <= " << o.dim_cap
            << (res->size_truncated ? " (truncated)" : "") << "\n";
    for (int x = 0; x < a.object_count(); ++x)
        for (int y = 0; y < a.object_count(); ++y) {
            const FinSSet& h = res->cat.hom[x][y];
            if (h.size() == 0) continue;
            r.human << "hom(" << a.object_label(x) << ", " << a.object_label(y) << ")\n";
            counts_human(r.human, h, o.dim_cap);
            for (int id : h.nondegenerate(0)) r.human << "  " << h.cell(id).label << "\n";
        }
}

void cmd_rigid_delta(const Options& o, int n, const std::vector<int>& pair, Report& r) {
    auto rd = rigid_delta(n, o.dim_cap);
    r.json["n"] = n;
    r.json["homs"] = Json::array();
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (!pair.empty() && (pair[0] != i || pair[1] != j)) continue;
            Json e{{"source", i}, {"target", j}, {"counts", counts_json(rd->cat.hom[i][j], o.dim_cap)}};
            if (!pair.empty()) e["sset"] = to_json(rd->cat.hom[i][j]);
            r.json["homs"].push_back(e);
            r.human << "hom(" << i << ", " << j << ")\n";
            counts_human(r.human, rd->cat.hom[i][j], o.dim_cap);
        }
    if (!pair.empty() && r.json["homs"].empty()) throw InputError("no hom (" + std::to_string(pair[0]) + ", " +
                                                                  std::to_string(pair[1]) + ") in C[Delta^n]");
}

void cmd_iso(const Options& o, const std::string& arg, Report& r) {
    const FinCategory a = load_category(arg);
    if (o.size_cap < 2) throw CapError("iso needs a size cap of at least 2");
    auto res = free_resolution(a, o.dim_cap, o.size_cap - 1);
    auto rig = rigidify_nerve(a, o.dim_cap, o.size_cap);
    const CellMap map = resolution_to_rigidification(*res, *rig);
    const IsoReport rep = iso_check(res->cat, rig->cat, map, o.dim_cap);
    r.json["isomorphic"] = rep.ok;
    r.json["checked"] = rep.checked;
    r.json["failure"] = rep.failure;
    r.json["table"] = Json::array();
    r.human << (rep.ok ? "isomorphic" : "not isomorphic: " + rep.failure) << " (" << rep.checked << " checks)\n";
    for (int x = 0; x < a.object_count(); ++x)
        for (int y = 0; y < a.object_count(); ++y)
            for (std::size_t id = 0; id < res->word_of_cell[x][y].size(); ++id) {
                const std::string word = res->cat.hom[x][y].cell(static_cast<int>(id)).label;
                const int t = map[x][y][id];
                const std::string triple = t < 0 ? "-" : rig->cat.hom[x][y].cell(t).label;
                r.json["table"].push_back(
                    {{"source", a.object_label(x)}, {"target", a.object_label(y)}, {"word", word}, {"triple", triple}});
                r.human << "  " << word << "  <->  " << triple << "\n";
            }
    if (!rep.ok) r.exit = Exit::negative;
}

void cmd_hc_nerve(const Options& o, const std::string& arg, Report& r) {
    std::unique_ptr<RigidDelta> rd;
    std::unique_ptr<Resolution> res;
    SimpCategory c;
    if (starts_with(arg, "rigid-delta:")) {
        rd = rigid_delta(std::stoi(arg.substr(12)), std::max(1, o.dim_cap));
        c = rd->cat;
    } else if (starts_with(arg, "resolution:")) {
        res = free_resolution(load_category(arg.substr(11)), o.dim_cap, o.size_cap);
        c = res->cat;
    } else {
        c = discrete(load_category(arg), o.dim_cap);
    }
    const HcNerve hc = hc_nerve(c, o.dim_cap, o.budget);
    r.json["sset"] = to_json(hc.sset);
    r.json["counts"] = counts_json(hc.sset, o.dim_cap);
    r.json["candidates"] = hc.candidates;
    r.human << "homotopy coherent nerve of " << c.name << " (" << hc.candidates << " candidates)\n";
    counts_human(r.human, hc.sset, o.dim_cap);
}

void cmd_detect_nerve(const Options& o, const std::string& space, Report& r) {
    const FinSSet x = load_space(space, o.dim_cap);
    const NerveDetection d = detect_nerve(x, o.dim_cap, o.size_cap);
    r.json["is_nerve"] = d.is_nerve;
    r.json["case"] = d.case_name;
    r.json["detail"] = d.detail;
    r.json["category"] = d.category ? to_json(*d.category) : Json(nullptr);
    r.json["horn"] = d.horn ? to_json(x, *d.horn) : Json(nullptr);
    r.json["witness"] = d.witness ? to_json(x, *d.witness) : Json(nullptr);
    r.json["certificate"] = d.certificate ? to_json(x, *d.certificate) : Json(nullptr);
    if (d.is_nerve) {
        r.human << "nerve of a category with " << d.category->object_count() << " objects and "
                << d.category->morphism_count() << " morphisms (up to dimension " << o.dim_cap << ")\n";
        return;
    }
    r.exit = Exit::negative;
    r.human << "not a nerve (" << d.case_name << "): " << d.detail << "\n";
    if (d.horn) r.human << "  horn: " << to_string(x, *d.horn) << "\n";
    if (d.certificate)
        r.human << "  " << (d.certificate->unfillable() ? "no filler" : "has fillers") << " among "
                << d.certificate->searched << " candidates (size cap " << d.certificate->size_cap << ")\n";
}

// ---------------------------------------------------------------------------
// Demos: each row compares a stated outcome with the computed one.

struct Demo {
    Report& r;
    bool all = true;

    void row(const std::string& claim, const std::string& expected, const std::string& computed) {
        const bool match = expected == computed;
        all = all && match;
        r.json["rows"].push_back({{"claim", claim}, {"expected", expected}, {"computed", computed}, {"match", match}});
        r.human << (match ? "[ok] " : "[MISMATCH] ") << claim << "\n    expected: " << expected
                << "\n    computed: " << computed << "\n";
    }
};

std::string filler_verdict(std::size_t count) { return count == 0 ? "no filler" : std::to_string(count) + " filler(s)"; }

void demo_cosk_sphere(const Options& o, Demo& d) {
    const Fixture fx = builtin_fixture("cosk-sphere");
    const std::vector<std::string> expected = {"{0,2} ⊂ {0,1,2} ⊂ {0,1,2}", "{0,3} ⊂ {0,2,3} ⊂ {0,1,2,3}",
                                               "{0,3} ⊂ {0,1,3} ⊂ {0,1,2,3}", "{0,2} ⊂ {0,2} ⊂ {0,1,2}"};
    for (int i = 0; i < 4; ++i) {
        const HomSimplex& f = fx.sphere->faces[i];
        std::string text;
        for (std::size_t k = 0; k < f.flag.sets.size(); ++k) {
            if (k) text += " ⊂ ";
            text += mask_to_string(f.flag.sets[k]);
        }
        d.row("flag of face " + std::to_string(i), expected[i], text);
    }
    const auto fillers = hom_fillers_sset(fx.x, fx.sphere->as_faces(), std::max(o.size_cap, 6));
    d.row("the 3-sphere has no filler", "no filler", filler_verdict(fillers.size()));
    if (fillers.empty()) d.r.human << "no filler: confirmed\n";
}

void demo_rs_horns(const Options& o, Demo& d) {
    const Fixture fx = builtin_fixture("rs-horns");
    const char* names[] = {"Lambda^3_1", "Lambda^3_2"};
    for (std::size_t i = 0; i < fx.horns.size(); ++i) {
        const UnfillableCertificate c = certify_unfillable(fx.x, fx.horns[i], std::max(o.size_cap, 6));
        d.r.human << "  " << to_string(fx.x, fx.horns[i]) << "\n";
        d.row(std::string(names[i]) + " horn in hom(x, y) of the nerve", "no filler", filler_verdict(c.fillers.size()));
    }
}

void demo_two_triangle(const Options& o, Demo& d) {
    const Fixture fx = builtin_fixture("two-triangle");
    d.row("quasi-category up to dimension 4", "yes", is_quasicategory(fx.x, 4).ok ? "yes" : "no");
    d.row("2-coskeletal up to dimension 4", "yes", is_coskeletal(fx.x, 2, 4).ok ? "yes" : "no");
    const auto fillers = hom_fillers_sset(fx.x, fx.horns.at(0), std::max(o.size_cap, 6));
    d.r.human << "  " << to_string(fx.x, fx.horns[0]) << "\n";
    d.row("constructed Lambda^3_1 horn", "no filler", filler_verdict(fillers.size()));
    const NerveDetection det = detect_nerve(fx.x, 4, std::max(o.size_cap, 6));
    d.row("detect_nerve", "counterexample", det.is_nerve ? "nerve" : "counterexample");
}

void demo_worked_example(Demo& d) {
    const Shape d6 = make_shape(ShapeKind::simplex, 6);
    const FinSSet& x = d6.sset;
    const SimplexRef sigma = x.ref(*d6.cell_of({0, 1, 2, 3, 4, 5, 6}));
    const HomSimplex s{make_necklace_map(x, {sigma}, *d6.cell_of({0})),
                       Flag{{mask_of({0, 6}), mask_of({0, 3, 4, 6}), mask_of({0, 1, 3, 4, 6}), mask_of({0, 1, 2, 3, 4, 5, 6})}}};
    auto beads = [&](const HomSimplex& h) {
        std::vector<std::vector<int>> out;
        for (const auto& img : h.map.images) {
            std::vector<int> vs;
            for (int v : x.vertices(img)) vs.push_back(d6.vertex_set_of_cell[v][0]);
            out.push_back(vs);
        }
        return out;
    };
    auto render = [&](const HomSimplex& h) {
        return "(" + necklace_notation(h.shape()) + ", " + restriction_notation(beads(h), 6, "σ") + ", " +
               flag_notation(h.flag, h.shape().vertex_count()) + ")";
    };
    d.r.human << "  simplex: " << render(s) << "\n";
    const std::vector<std::string> expected = {
        "(Δ^3 ∨ Δ^1 ∨ Δ^2, σ|~, {0,3,4,6} ⊂ {0,1,3,4,6} ⊂ [6])", "(Δ^6, σ, {0,6} ⊂ {0,1,3,4,6} ⊂ [6])",
        "(Δ^6, σ, {0,6} ⊂ {0,3,4,6} ⊂ [6])", "(Δ^4, d2d5σ, {0,4} ⊂ {0,2,3,4} ⊂ [4])"};
    d.row("splitting of face d0", "Δ^3 ∨ Δ^1 ∨ Δ^2", necklace_notation(split(s.shape(), s.flag.sets[1])));
    d.row("beads of face d0 restrict σ to", "[0,1,2,3] [3,4] [4,5,6]", bead_vertices_notation(beads(hom_face(x, s, 0))));
    for (int i = 0; i <= 3; ++i) d.row("face d" + std::to_string(i), expected[i], render(hom_face(x, s, i)));
}

void demo_cube(Demo& d) {
    const Shape d3 = make_shape(ShapeKind::simplex, 3);
    const HomSpace h = hom_space(d3.sset, *d3.cell_of({0}), *d3.cell_of({3}), 3, 4);
    auto rd = rigid_delta(3, 3);
    for (int dim = 0; dim <= 2; ++dim) {
        const long long cube = rd->cat.hom[0][3].count_simplices(dim);
        d.row("simplices of hom(0, 3) in dimension " + std::to_string(dim) + " (cube model count)",
              std::to_string(cube), std::to_string(h.sset.count_simplices(dim)));
    }
}

void demo_resolution(Demo& d) {
    const FinCategory a = categories::ordinal(2);
    auto res = free_resolution(a, 2, 2);
    auto rig = rigidify_nerve(a, 2, 3);
    const IsoReport rep = iso_check(res->cat, rig->cat, resolution_to_rigidification(*res, *rig), 2);
    d.row("free resolution of [2] vs rigidified nerve", "isomorphic", rep.ok ? "isomorphic" : rep.failure);
    d.row("vertices of hom(0, 2)", "2", std::to_string(res->cat.hom[0][2].count_simplices(0)));
    d.row("edges of hom(0, 2)", "3", std::to_string(res->cat.hom[0][2].count_simplices(1)));
}

const std::vector<std::string> demo_names = {"cosk-sphere", "rs-horns", "two-triangle", "worked-example", "cube",
                                             "resolution"};

void cmd_demo(const Options& o, const std::string& name, Report& r) {
    Demo d{r};
    r.json["demo"] = name;
    r.json["rows"] = Json::array();
    if (name == "cosk-sphere")
        demo_cosk_sphere(o, d);
    else if (name == "rs-horns")
        demo_rs_horns(o, d);
    else if (name == "two-triangle")
        demo_two_triangle(o, d);
    else if (name == "worked-example")
        demo_worked_example(d);
    else if (name == "cube")
        demo_cube(d);
    else if (name == "resolution")
        demo_resolution(d);
    else {
        std::string known;
        for (const auto& n : demo_names) known += (known.empty() ? "" : ", ") + n;
        throw InputError("unknown demo '" + name + "' (" + known + ")");
    }
    r.json["all_match"] = d.all;
    if (!d.all) r.exit = Exit::negative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Necklaces, hom-spaces of rigidifications, and free simplicial resolutions"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--dim-cap", o.dim_cap, "Highest dimension examined")->check(CLI::NonNegativeNumber);
    app.add_option("--size-cap", o.size_cap, "Maximum necklace vertices (words: one less for iso)")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", o.budget, "Candidate budget for enumeration")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "Seed for sampled checks");
    app.add_option("--jobs", o.jobs, "Worker cap (results do not depend on it)")->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json"}));

    std::string space, a, b, file, name;
    int n = 0;
    std::vector<int> pair;
    Report report;
    std::function<void()> run;

    auto* hom = app.add_subcommand("hom", "Export the hom-space C[X](x, y)");
    hom->add_option("X", space, "Simplicial set, category, builtin:... or fixture:...")->required();
    hom->add_option("x", a)->required();
    hom->add_option("y", b)->required();
    hom->callback([&] { run = [&] { cmd_hom(o, space, a, b, report); }; });

    auto* qcat = app.add_subcommand("check-qcat", "Inner horn filling up to --dim-cap");
    qcat->add_option("X", space)->required();
    qcat->callback([&] { run = [&] { cmd_check_qcat(o, space, report); }; });

    auto* cosk = app.add_subcommand("check-cosk", "Unique sphere filling above n, up to --dim-cap");
    cosk->add_option("X", space)->required();
    cosk->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    cosk->callback([&] { run = [&] { cmd_check_cosk(o, space, n, report); }; });

    auto* fill = app.add_subcommand("fill-horn", "Fill a horn or sphere read from a JSON file");
    fill->add_option("FILE", file)->required();
    fill->callback([&] { run = [&] { cmd_fill_horn(o, file, report); }; });

    auto* resolve = app.add_subcommand("resolve", "Free simplicial resolution of a category");
    resolve->add_option("A", space)->required();
    resolve->callback([&] { run = [&] { cmd_resolve(o, space, report); }; });

    auto* rdelta = app.add_subcommand("rigid-delta", "Cube model of C[Delta^n]");
    rdelta->add_option("n", n)->required()->check(CLI::Range(0, 12));
    rdelta->add_option("--pair", pair, "Only hom(i, j), with its simplicial set")->expected(2);
    rdelta->callback([&] { run = [&] { cmd_rigid_delta(o, n, pair, report); }; });

    auto* iso = app.add_subcommand("iso", "Compare the free resolution with the rigidified nerve");
    iso->add_option("A", space)->required();
    iso->callback([&] { run = [&] { cmd_iso(o, space, report); }; });

    auto* hc = app.add_subcommand("hc-nerve", "Homotopy coherent nerve in dimensions <= 3");
    hc->add_option("C", space, "Category (discrete homs), rigid-delta:N or resolution:<category>")->required();
    hc->callback([&] { run = [&] { cmd_hc_nerve(o, space, report); }; });

    auto* detect = app.add_subcommand("detect-nerve", "Nerve or an unfillable horn in a hom-space");
    detect->add_option("X", space)->required();
    detect->callback([&] { run = [&] { cmd_detect_nerve(o, space, report); }; });

    auto* demo = app.add_subcommand("demo", "Run a fixture end to end against its stated outcome");
    demo->add_option("name", name)->required();
    demo->callback([&] { run = [&] { cmd_demo(o, name, report); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Exit::input;
    }
    try {
        run();
    } catch (const CapError& e) {
        std::cerr << "cap: " << e.what() << "\n";
        return Exit::cap;
    } catch (const InputError& e) {
        std::cerr << "input: " << e.what() << "\n";
        return Exit::input;
    } catch (const DomainError& e) {
        std::cerr << "input: " << e.what() << "\n";
        return Exit::input;
    }
    if (o.format == "json") {
        report.json["exit"] = report.exit;
        std::cout << report.json.dump(2) << "\n";
    } else {
        std::cout << report.human.str();
    }
    return report.exit;
}
