#pragma once

// Constructive fillers and counterexample horns in the hom-spaces of C[X].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccat/necklace.hpp"
#include "ccat/sset.hpp"
#include "ccat/sset_check.hpp"

namespace ccat {

/// A horn in C[X](source, target): faces[missing] is empty.
struct HornInHom {
    int source = 0;
    int target = 0;
    int n = 0;
    int missing = 0;
    std::vector<std::optional<HomSimplex>> faces;

    /// d_i f_j = d_{j-1} f_i for present i < j; also dimensions and endpoints.
    bool compatible(const FinSSet& x) const;
};

struct SphereInHom {
    int source = 0;
    int target = 0;
    int n = 0;
    std::vector<HomSimplex> faces;

    bool compatible(const FinSSet& x) const;
    HornInHom as_faces() const;  // all slots present, missing = -1
};

SphereInHom boundary_of(const FinSSet& x, const HomSimplex& s);

/// One extension problem solved while building a bead of the filler.
struct MergeStep {
    std::string kind;  // "overlap", "join"
    int dim = 0;
    std::vector<std::vector<int>> generators;
    std::vector<SimplexRef> assignment;
    SimplexRef result;
    int solutions = 0;
    bool interpretation = false;  // shape not literally one of the two textbook merges
};

struct Lambda21Filler {
    HomSimplex filler;
    NecklaceMap raw;      // bead-by-bead necklace before the quotient
    Flag raw_flag;
    std::vector<MergeStep> trace;
};

/// Fills a horn with faces[0] = U, faces[2] = T, faces[1] missing, by gluing
/// the beads of T into the stretched necklace U and merging.
Lambda21Filler fill_lambda21(const FinSSet& x, const HornInHom& h);

/// The unique filler of an n-sphere, n >= 4.
HomSimplex fill_sphere_cosk3(const FinSSet& x, const SphereInHom& s);

/// All fillers by brute force over necklaces (size <= size_cap) and flags.
std::vector<HomSimplex> hom_fillers(const FinSSet& x, const HornInHom& h, int size_cap);

/// Same question answered on the assembled hom-space with find_fillers.
std::vector<HomSimplex> hom_fillers_sset(const FinSSet& x, const HornInHom& h, int size_cap);

/// Lambda^3_1 horn from distinct n-simplices with equal boundary (n >= 3).
/// j: proper vertex set of Delta^n containing 0, n and at least one more.
HornInHom construct_badex_horn(const FinSSet& x, const SimplexRef& sigma, const SimplexRef& tau, VertexMask j);

/// Lambda^3_1 horn from distinct 3-simplices with d0 and d2 equal (J = {0,1,3}).
HornInHom construct_lowdim_horn(const FinSSet& x, const SimplexRef& sigma, const SimplexRef& tau);
/// Mirror case: d1 and d3 equal, J = {0,2,3}.
HornInHom construct_lowdim_horn_dual(const FinSSet& x, const SimplexRef& sigma, const SimplexRef& tau);

/// Builds sigma, tau from 2-simplices alpha != beta with d0, d2 equal by
/// filling two Lambda^3_1 horns in X, then applies construct_lowdim_horn.
HornInHom lowdim_horn_from_triangles(const FinSSet& x, const SimplexRef& alpha, const SimplexRef& beta,
                                     std::vector<SimplexRef>* witnesses = nullptr);

struct UnfillableCertificate {
    std::string argument;  // structural reason
    int size_cap = 0;
    long long searched = 0;  // candidate triples examined
    std::vector<HomSimplex> fillers;  // exhaustive search result
    bool unfillable() const { return fillers.empty(); }
};

UnfillableCertificate certify_unfillable(const FinSSet& x, const HornInHom& h, int size_cap);

struct NerveDetection {
    bool is_nerve = false;
    std::optional<FinCategory> category;
    std::optional<HornInHom> horn;
    std::string case_name;  // "nerve", "badex", "sphere-badex", "sphere-lowdim", "lambda21", "lambda31", "lambda32"
    std::string detail;
    std::optional<Certificate> witness;  // the failing horn/sphere in X
    std::optional<UnfillableCertificate> certificate;
};

/// Either X is (up to `up_to`) the nerve of a category, or an explicit
/// unfillable Lambda^3_1 horn in some hom-space of C[X].
NerveDetection detect_nerve(const FinSSet& x, int up_to, int size_cap);

struct OuterHorns {
    HornInHom lambda20;  // faces (_, d2 s, d1 s)
    HornInHom lambda22;  // faces (d1 s, d0 s, _)
};

OuterHorns outer_horn_counterexample(const FinSSet& x, const HomSimplex& s);

struct Fixture {
    std::string name;
    std::string description;
    FinSSet x;
    int source = 0;
    int target = 0;
    std::optional<SphereInHom> sphere;
    std::vector<HornInHom> horns;
};

Fixture builtin_fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// Boundary of a uniformly chosen n-simplex (degenerate ones included) of the
/// hom-space.
SphereInHom sample_sphere(const FinSSet& x, const HomSpace& h, int n, std::uint64_t seed);

std::string to_string(const FinSSet& x, const HornInHom& h);

}  // namespace ccat
