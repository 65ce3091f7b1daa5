#pragma once

// Textbook-style rendering of necklaces, flags and faces of a top simplex.

#include <string>
#include <vector>

#include "ccat/necklace.hpp"

namespace ccat {

/// "Δ^3 ∨ Δ^1 ∨ Δ^2"; the trivial necklace is "Δ^0".
std::string necklace_notation(const Necklace& t);
/// "{0,6} ⊂ {0,3,4,6} ⊂ [6]": the last set is written [n] when it holds every vertex.
std::string flag_notation(const Flag& f, int vertex_count);
/// Face operator removing the given vertices from an n-simplex, "d2d5" for {2, 5}.
std::string face_word_notation(const std::vector<int>& removed);
/// The removed vertices, given the kept ones as a subset of [n].
std::vector<int> complement(const std::vector<int>& kept, int n);
/// Map of a necklace given by restricting a simplex `name` of dimension n:
/// "d2d5σ" for a single bead, "σ|~" when the restriction is split over beads.
std::string restriction_notation(const std::vector<std::vector<int>>& bead_vertices, int n, const std::string& name);
/// "[0,1,2,3] [3,4] [4,5,6]"
std::string bead_vertices_notation(const std::vector<std::vector<int>>& bead_vertices);

}  // namespace ccat
