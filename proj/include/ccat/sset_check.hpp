#pragma once

// Horn and sphere search, extension problems, and the truncation-relative
// predicates (quasi-category, coskeletal, nerve-like) on finite simplicial sets.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccat/sset.hpp"

namespace ccat {

/// Face list for a horn or sphere: slot i holds the intended d_i, or nothing
/// for the missing face of a horn.
using FaceAssignment = std::vector<std::optional<SimplexRef>>;

/// Per-dimension tables of all simplices and their faces, indexed by face, so
/// that filler and horn searches do not rescan the whole dimension.
class SimplexTable {
public:
    explicit SimplexTable(const FinSSet& x) : x_(&x) {}

    struct Layer {
        std::vector<SimplexRef> simplices;
        std::vector<std::vector<SimplexRef>> faces;         // faces[k][i]
        std::vector<std::map<SimplexRef, std::vector<int>>> by_face;  // by_face[i][face] -> positions
    };

    const FinSSet& sset() const { return *x_; }
    const Layer& layer(int dim) const;

    /// All simplices of dimension faces.size() - 1 matching every present slot.
    std::vector<SimplexRef> fillers(const FaceAssignment& faces) const;

    /// Visits every compatible assignment of (n-1)-simplices to the slots
    /// 0..n, leaving `missing` empty (pass -1 for spheres). Return false from
    /// the visitor to stop. Returns the number visited.
    long long for_each_compatible(int n, int missing,
                                  const std::function<bool(const FaceAssignment&)>& visit) const;

private:
    const FinSSet* x_;
    mutable std::map<int, std::unique_ptr<Layer>> layers_;
};

/// True if the present faces satisfy d_i f_j = d_{j-1} f_i.
bool faces_compatible(const FinSSet& x, const FaceAssignment& faces);

/// All fillers of a horn or sphere. Throws CapError if the filler dimension
/// exceeds the dim cap (the truncation could hide fillers).
std::vector<SimplexRef> find_fillers(const FinSSet& x, const FaceAssignment& faces);

/// All m-simplices of x restricting to `assignment[g]` along each generator
/// of the shape (a subcomplex of Delta^m). CapError when m exceeds the cap.
std::vector<SimplexRef> solve_extension(const FinSSet& x, const Shape& sub,
                                        const std::vector<SimplexRef>& assignment);

struct Certificate {
    std::string kind;  // "horn", "sphere"
    int n = 0;         // dimension of the filler
    int missing = -1;  // horn index, -1 for spheres
    FaceAssignment faces;
    std::vector<SimplexRef> fillers;  // empty: unfillable; >1: not unique
};

struct CheckReport {
    bool ok = true;
    int up_to = 0;
    int dim_cap = 0;
    bool truncation_relative = true;  // verdicts only cover dimensions <= up_to
    long long checked = 0;
    bool all_unique = true;  // quasi-category check: every inner horn uniquely filled
    std::optional<Certificate> certificate;
    std::optional<FinCategory> category;  // is_nerve_like: the extracted category
    std::string detail;
};

CheckReport is_quasicategory(const FinSSet& x, int up_to);
CheckReport is_coskeletal(const FinSSet& x, int n, int up_to);
CheckReport is_nerve_like(const FinSSet& x, int up_to);

/// Adjoins one new simplex per unfilled k-sphere for n < k <= new_cap.
FinSSet coskeletal_completion(const FinSSet& x, int n, int new_cap);

/// Boundary faces of a simplex as a sphere assignment.
FaceAssignment boundary_of(const FinSSet& x, const SimplexRef& s);

std::string describe(const FinSSet& x, const Certificate& c);

}  // namespace ccat
