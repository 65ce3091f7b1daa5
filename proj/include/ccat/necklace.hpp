#pragma once

// Necklaces, flags and the triple representation of the hom-spaces of the
// rigidification of a simplicial set.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ccat/sset.hpp"

namespace ccat {

/// Set of necklace vertex positions (at most 64 vertices).
using VertexMask = std::uint64_t;

int popcount(VertexMask m);
/// Sorted positions of the set bits.
std::vector<int> positions(VertexMask m);
VertexMask mask_of(const std::vector<int>& positions);
/// Re-index the members of `m` by their rank inside `k` (m must be a subset).
VertexMask compress(VertexMask m, VertexMask k);
std::string mask_to_string(VertexMask m);

/// A wedge of simplices joined final vertex to initial vertex. The empty
/// necklace has a single vertex.
class Necklace {
public:
    Necklace() = default;
    explicit Necklace(std::vector<int> bead_dims);

    const std::vector<int>& bead_dims() const { return beads_; }
    int bead_count() const { return static_cast<int>(beads_.size()); }
    int vertex_count() const { return vertices_; }
    int bead_start(int b) const { return starts_.at(b); }
    VertexMask joins() const { return joins_; }
    VertexMask all_vertices() const;

    std::string to_string() const;

    auto operator<=>(const Necklace& o) const { return beads_ <=> o.beads_; }
    bool operator==(const Necklace& o) const { return beads_ == o.beads_; }

private:
    std::vector<int> beads_;
    std::vector<int> starts_;
    int vertices_ = 1;
    VertexMask joins_ = 1;
};

Necklace spine(const Necklace& t);
Necklace diagonal(const Necklace& t);
/// Cuts beads at the vertices of k; all vertices kept. k must contain the joins.
Necklace split(const Necklace& t, VertexMask k);
/// One bead per original bead, spanned by its vertices in k; vertices renumbered.
Necklace restrict(const Necklace& t, VertexMask k);

/// A necklace together with bead images in X. Images may be degenerate.
struct NecklaceMap {
    Necklace shape;
    std::vector<SimplexRef> images;
    int source = 0;  // vertex of X
    int target = 0;

    /// Throws DomainError unless dimensions match and beads chain up from
    /// source to target.
    void validate(const FinSSet& x) const;
    bool totally_nondegenerate() const;

    auto operator<=>(const NecklaceMap&) const = default;
    bool operator==(const NecklaceMap&) const = default;
};

NecklaceMap make_necklace_map(const FinSSet& x, std::vector<SimplexRef> images, int source);
NecklaceMap split(const FinSSet& x, const NecklaceMap& m, VertexMask k);
NecklaceMap restrict(const FinSSet& x, const NecklaceMap& m, VertexMask k);

/// Chain T^0 <= T^1 <= ... <= T^n of vertex sets; repeats encode degeneracy.
struct Flag {
    std::vector<VertexMask> sets;

    int dim() const { return static_cast<int>(sets.size()) - 1; }
    bool strict() const;
    void validate(const Necklace& t) const;
    std::string to_string() const;

    auto operator<=>(const Flag&) const = default;
    bool operator==(const Flag&) const = default;
};

/// A simplex of the hom-space C[X](x, y): totally non-degenerate necklace map
/// plus flag. Componentwise equality is equality of simplices.
struct HomSimplex {
    NecklaceMap map;
    Flag flag;

    int dim() const { return flag.dim(); }
    const Necklace& shape() const { return map.shape; }

    auto operator<=>(const HomSimplex&) const = default;
    bool operator==(const HomSimplex&) const = default;
};

/// The unique totally non-degenerate quotient of (m, flag).
HomSimplex tnd_quotient(const FinSSet& x, const NecklaceMap& m, const Flag& flag);

HomSimplex hom_face(const FinSSet& x, const HomSimplex& s, int i);
HomSimplex hom_degeneracy(const HomSimplex& s, int i);
/// Composite in C[X]: `first` from x to y followed by `second` from y to z.
HomSimplex concatenate(const HomSimplex& first, const HomSimplex& second);

std::string to_string(const FinSSet& x, const NecklaceMap& m);
std::string to_string(const FinSSet& x, const HomSimplex& s);

struct NecklaceEnumeration {
    std::vector<NecklaceMap> maps;
    bool size_truncated = false;  // some necklace was cut off by the size cap
};

/// Every totally non-degenerate necklace from x to y with at most size_cap vertices.
NecklaceEnumeration enumerate_necklaces(const FinSSet& x, int from, int to, int size_cap);

/// C[X](x, y) as a finite simplicial set, truncated by dimension and by
/// necklace vertex count.
struct HomSpace {
    FinSSet sset;
    std::vector<HomSimplex> simplex_of_cell;
    std::map<HomSimplex, int> cell_of;
    int source = 0;
    int target = 0;
    int dim_cap = 0;
    int size_cap = 0;
    bool size_truncated = false;

    /// EZ name of any simplex of the hom-space (throws if outside the caps).
    SimplexRef encode(const HomSimplex& s) const;
    HomSimplex decode(const SimplexRef& r) const;
    bool contains(const HomSimplex& s) const;
};

HomSpace hom_space(const FinSSet& x, int from, int to, int dim_cap, int size_cap);

}  // namespace ccat
