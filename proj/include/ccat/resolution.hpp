#pragma once

// Simplicial categories: the free simplicial resolution of a category, the
// cube model of C[Delta^n], the rigidification of a nerve, isomorphism checks
// between them, and the low-dimensional homotopy coherent nerve.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccat/necklace.hpp"
#include "ccat/sset.hpp"

namespace ccat {

/// Simplicially enriched category with finite (possibly truncated) homs.
struct SimpCategory {
    std::string name;
    std::vector<std::string> objects;
    int dim_cap = 0;
    int size_cap = 0;  // 0: homs are not truncated by size
    std::vector<std::vector<FinSSet>> hom;  // hom[x][y]
    std::vector<int> units;                 // vertex id of the identity in hom[x][x]
    /// g . f for g in hom(y, z), f in hom(x, y) of equal dimension; empty when
    /// the composite lies outside the truncation.
    std::function<std::optional<SimplexRef>(int x, int y, int z, const SimplexRef& g, const SimplexRef& f)> compose;

    int object_count() const { return static_cast<int>(objects.size()); }
    int object_by_label(const std::string& label) const;
};

struct LawReport {
    bool ok = true;
    long long checked = 0;
    std::string detail;
};

/// Associativity and unit laws on every simplex up to `up_to`.
LawReport check_category_laws(const SimpCategory& c, int up_to);

/// A word of composable non-identity morphisms with nested parentheses.
/// levels[k] holds the cut positions (1..length-1) of paren level k + 1;
/// level 1 is outermost, each level refines the previous one.
struct ParenWord {
    int source = 0;  // object, meaningful for the empty word
    std::vector<int> morphisms;
    std::vector<std::vector<int>> levels;

    int length() const { return static_cast<int>(morphisms.size()); }
    int dim() const { return static_cast<int>(levels.size()); }
    bool degenerate() const;

    auto operator<=>(const ParenWord&) const = default;
    bool operator==(const ParenWord&) const = default;
};

void validate(const FinCategory& a, const ParenWord& w);
/// Face maps: d_k (k < n) removes level k + 1; d_n composes inside the innermost
/// parentheses and drops identities.
ParenWord paren_face(const FinCategory& a, const ParenWord& w, int i);
/// s_i (i < n) doubles level i + 1; s_n parenthesizes every morphism.
ParenWord paren_degeneracy(const ParenWord& w, int i);
/// g . f: f's word followed by g's, cut at the junction on every level.
ParenWord paren_compose(const ParenWord& g, const ParenWord& f);
std::string to_string(const FinCategory& a, const ParenWord& w);

struct Resolution {
    FinCategory base;
    SimpCategory cat;
    std::vector<std::vector<std::vector<ParenWord>>> word_of_cell;  // [x][y][cell]
    std::vector<std::vector<std::map<ParenWord, int>>> cell_of_word;
    bool size_truncated = false;

    SimplexRef encode(int x, int y, const ParenWord& w) const;  // throws CapError outside the caps
    ParenWord decode(int x, int y, const SimplexRef& r) const;
};

/// Words of length <= size_cap, simplices of dimension <= dim_cap.
/// The owner must outlive copies of `cat`: composition reads its tables.
std::unique_ptr<Resolution> free_resolution(const FinCategory& a, int dim_cap, int size_cap);

struct RigidDelta {
    int n = 0;
    SimpCategory cat;
    std::vector<std::vector<Nerve>> nerves;  // nerve of the subset poset P_ij (empty for j < i)
    std::vector<std::vector<FinCategory>> posets;
    std::vector<std::vector<std::map<std::pair<int, int>, int>>> arrows;  // (a, b) -> morphism a<b

    /// The simplex of hom(i, j) given by a chain of subsets (masks over 0..n).
    SimplexRef chain(int i, int j, const std::vector<std::uint64_t>& subsets) const;
    std::vector<std::uint64_t> subsets_of(int i, int j, const SimplexRef& r) const;
};

std::unique_ptr<RigidDelta> rigid_delta(int n, int dim_cap);

struct Rigidification {
    FinCategory base;
    Nerve nerve;
    SimpCategory cat;
    std::vector<std::vector<std::unique_ptr<HomSpace>>> homs;
};

/// C[N A] with hom-spaces assembled from necklaces; composition concatenates.
std::unique_ptr<Rigidification> rigidify_nerve(const FinCategory& a, int dim_cap, int size_cap);

/// Trivially enriched category: discrete homs.
SimpCategory discrete(const FinCategory& a, int dim_cap = 3);

/// Cell correspondence r -> s on non-degenerate simplices, per hom pair.
using CellMap = std::vector<std::vector<std::vector<int>>>;  // [x][y][cell of R] -> cell of S or -1

struct IsoReport {
    bool ok = true;
    long long checked = 0;
    std::string failure;  // first failing simplex
};

/// Checks that `map` is a bijection on non-degenerate simplices of every hom
/// (up to up_to) commuting with faces, degeneracies, units and composition.
IsoReport iso_check(const SimpCategory& r, const SimpCategory& s, const CellMap& map, int up_to);

/// The necklace simplex of a word: level-1 blocks are beads, level k is T^{k-1}.
HomSimplex to_hom_simplex(const Rigidification& rig, int x, const ParenWord& w);

/// Paren levels -> flag sets, blocks of level 1 -> beads.
CellMap resolution_to_rigidification(const Resolution& res, const Rigidification& rig);
/// Flag sets -> chains of vertex subsets.
CellMap rigidification_to_rigid_delta(const Rigidification& rig, const RigidDelta& rd);

/// Simplicial functors C[Delta^k] -> C for k <= n_cap (at most 3).
/// budget bounds the number of candidate images examined.
struct HcNerve {
    FinSSet sset;
    long long candidates = 0;
};

HcNerve hc_nerve(const SimpCategory& c, int n_cap, long long budget);

}  // namespace ccat
