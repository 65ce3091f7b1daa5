#pragma once

// Finite simplicial sets presented by their non-degenerate simplices, with
// every face stored under its Eilenberg-Zilber name.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccat/delta.hpp"

namespace ccat {

/// Eilenberg-Zilber name of a simplex: a canonical degeneracy word applied to
/// a non-degenerate simplex.
struct SimplexRef {
    int base_dim = 0;  // dimension of the non-degenerate simplex `id`
    int id = 0;
    DegeneracyWord word;

    int dim() const { return base_dim + word.length(); }
    bool degenerate() const { return !word.empty(); }

    auto operator<=>(const SimplexRef&) const = default;
    bool operator==(const SimplexRef&) const = default;
};

class FinSSet {
public:
    struct Cell {
        int dim = 0;
        std::string label;
        std::vector<SimplexRef> faces;  // d_0 .. d_dim
        std::vector<int> vertices;      // vertex ids, in order
    };

    explicit FinSSet(int dim_cap = 0) : dim_cap_(dim_cap) {}

    /// Non-degenerate simplices are stored up to this dimension; above it the
    /// set only contains degeneracies.
    int dim_cap() const { return dim_cap_; }
    void raise_dim_cap(int cap);

    int add_vertex(std::string label);
    /// Adds a non-degenerate simplex of dimension faces.size() - 1. Faces must
    /// exist and satisfy d_i d_j = d_{j-1} d_i among themselves.
    int add_simplex(std::string label, std::vector<SimplexRef> faces);

    int size() const { return static_cast<int>(cells_.size()); }
    const Cell& cell(int id) const { return cells_.at(id); }
    const std::vector<int>& nondegenerate(int dim) const;
    int count_nondegenerate(int dim) const { return static_cast<int>(nondegenerate(dim).size()); }
    std::optional<int> find(const std::string& label) const;
    int vertex_by_label(const std::string& label) const;

    SimplexRef ref(int id) const { return SimplexRef{cells_.at(id).dim, id, {}}; }

    SimplexRef face(const SimplexRef& s, int i) const;
    SimplexRef degeneracy(const SimplexRef& s, int i) const;
    /// theta^* s for a monotone theta : [k] -> [dim s].
    SimplexRef apply(const SimplexRef& s, const OrdinalMap& theta) const;
    std::vector<int> vertices(const SimplexRef& s) const;
    int first_vertex(const SimplexRef& s) const { return cells_.at(s.id).vertices.front(); }
    int last_vertex(const SimplexRef& s) const { return cells_.at(s.id).vertices.back(); }

    /// Every simplex of the given dimension, degenerate ones included, in
    /// canonical order (base dimension, id, word).
    std::vector<SimplexRef> simplices(int dim) const;
    /// Total number of simplices of the given dimension.
    long long count_simplices(int dim) const;

    /// Exhaustive simplicial identity check on all stored simplices.
    void validate() const;

    std::string name(const SimplexRef& s) const;

private:
    SimplexRef restrict_nondegenerate(int id, const OrdinalMap& mono) const;

    int dim_cap_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> by_dim_;
    std::map<std::string, int> by_label_;
};

// ---------------------------------------------------------------------------
// Finite categories

class FinCategory {
public:
    struct Morphism {
        std::string label;
        int src = 0;
        int tgt = 0;
    };

    int add_object(const std::string& label);
    int add_morphism(const std::string& label, int src, int tgt);
    /// Records g . f = gf for a composable pair of non-identity morphisms.
    void set_composite(int g, int f, int gf);

    int object_count() const { return static_cast<int>(objects_.size()); }
    int morphism_count() const { return static_cast<int>(morphisms_.size()); }
    const std::string& object_label(int o) const { return objects_.at(o); }
    const Morphism& morphism(int m) const { return morphisms_.at(m); }
    int identity(int o) const { return identities_.at(o); }
    bool is_identity(int m) const;
    int object_by_label(const std::string& label) const;
    int morphism_by_label(const std::string& label) const;

    /// g . f; throws DomainError if not composable or not tabulated.
    int compose(int g, int f) const;
    std::optional<int> try_compose(int g, int f) const;
    const std::map<std::pair<int, int>, int>& composition_table() const { return comp_; }

    /// Totality, associativity and unit laws (exhaustive).
    void validate() const;

private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<int> identities_;
    std::map<std::pair<int, int>, int> comp_;
};

namespace categories {
/// The poset [n] = {0 < 1 < ... < n}.
FinCategory ordinal(int n);
FinCategory terminal();
/// Objects x, y with s : x -> y, r : y -> x, r s = id_x and e = s r idempotent.
FinCategory retraction();
/// Product poset [1]^m, objects named by bit strings.
FinCategory cube(int m);
/// Subsets of {lo..hi} containing both endpoints, ordered by inclusion.
FinCategory interval_subsets(int lo, int hi);
/// Five objects, non-thin: parallel arrows and an idempotent.
FinCategory five_object();
/// A non-thin poset-like category: two parallel arrows a, b : 0 -> 1 and c : 1 -> 2
/// with c a != c b.
FinCategory parallel_pair();
}  // namespace categories

// ---------------------------------------------------------------------------
// Nerve

/// The nerve of a category, truncated at dim_cap, with chain bookkeeping.
struct Nerve {
    FinSSet sset;
    std::vector<std::vector<int>> chain_of_cell;  // empty for vertices
    std::vector<int> object_of_cell;              // start object of each cell
    std::map<std::vector<int>, int> cell_of_chain;
    std::vector<int> vertex_of_object;

    /// EZ name of the chain f_1, ..., f_n starting at `start` (identities allowed).
    SimplexRef chain_ref(int start, const std::vector<int>& morphisms) const;
};

Nerve build_nerve(const FinCategory& cat, int dim_cap);
inline FinSSet nerve(const FinCategory& cat, int dim_cap) { return build_nerve(cat, dim_cap).sset; }

// ---------------------------------------------------------------------------
// Shapes inside a standard simplex

enum class ShapeKind { simplex, horn, boundary, wedge };

/// A subcomplex of Delta^n generated by faces given as vertex lists.
struct Shape {
    int n = 0;
    std::vector<std::vector<int>> generators;
    FinSSet sset;
    std::vector<std::vector<int>> vertex_set_of_cell;  // inclusion into Delta^n

    /// Id of the cell spanned by the given vertices, if it lies in the shape.
    std::optional<int> cell_of(const std::vector<int>& vertices) const;
};

/// simplex / boundary: Delta^n and its boundary; horn: Lambda^n_k;
/// wedge: the necklace Delta^{d_1} v ... v Delta^{d_r} inside Delta^{sum d}.
Shape make_shape(ShapeKind kind, int n, int k = 0);
Shape make_wedge(const std::vector<int>& bead_dims);
Shape make_generated(int n, std::vector<std::vector<int>> generators);

}  // namespace ccat
