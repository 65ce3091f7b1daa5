#pragma once

// JSON ingestion and reports. Simplices are referred to by label; a face or
// image is {"word": [degeneracy indices], "id": label}.

#include <string>

#include "ccat/necklace.hpp"
#include "ccat/resolution.hpp"
#include "ccat/sset.hpp"
#include "ccat/sset_check.hpp"
#include "ccat/theorems.hpp"
#include "json.hpp"

namespace ccat {

using Json = nlohmann::json;

/// Throws InputError carrying line and column of a syntax error.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

/// {objects: [...], morphisms: [{id, src, tgt}], identities: {obj: id}, comp: [[g, f, gf]]}
FinCategory category_from_json(const Json& j);
Json to_json(const FinCategory& c);

/// {dim_cap, simplices: {dim: [{id, faces: [{word, id}]}]}}
FinSSet sset_from_json(const Json& j);
Json to_json(const FinSSet& x);

Json ref_to_json(const FinSSet& x, const SimplexRef& r);
SimplexRef ref_from_json(const FinSSet& x, const Json& j, const std::string& where);

/// {beads, images, source, target, flag, text}; parsing applies tnd_quotient.
Json to_json(const FinSSet& x, const HomSimplex& s);
HomSimplex hom_simplex_from_json(const FinSSet& x, const Json& j, const std::string& where);

/// The hom-space in sset format plus an index of triples per simplex id.
Json to_json(const FinSSet& x, const HomSpace& h);
Json to_json(const FinSSet& x, const HornInHom& h);
Json to_json(const FinSSet& x, const SphereInHom& s);
Json to_json(const FinSSet& x, const Certificate& c);
Json to_json(const FinSSet& x, const CheckReport& r);
Json to_json(const FinSSet& x, const MergeStep& m);
Json to_json(const FinSSet& x, const UnfillableCertificate& c);

/// Objects, hom-spaces and composites of simplex pairs up to `up_to`.
Json to_json(const SimpCategory& c, int up_to);

}  // namespace ccat
