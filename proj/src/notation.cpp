#include "ccat/notation.hpp"

#include <algorithm>

namespace ccat {

std::string necklace_notation(const Necklace& t) {
    if (t.bead_count() == 0) return "Δ^0";
    std::string s;
    for (int b = 0; b < t.bead_count(); ++b) s += (b ? " ∨ " : "") + ("Δ^" + std::to_string(t.bead_dims()[b]));
    return s;
}

std::string flag_notation(const Flag& f, int vertex_count) {
    const VertexMask all = vertex_count >= 64 ? ~VertexMask{0} : (VertexMask{1} << vertex_count) - 1;
    std::string s;
    for (std::size_t k = 0; k < f.sets.size(); ++k) {
        if (k) s += " ⊂ ";
        if (f.sets[k] == all && k + 1 == f.sets.size()) {
            s += "[" + std::to_string(vertex_count - 1) + "]";
            continue;
        }
        s += "{";
        bool first = true;
        for (int p : positions(f.sets[k])) {
            s += (first ? "" : ",") + std::to_string(p);
            first = false;
        }
        s += "}";
    }
    return s;
}

std::string face_word_notation(const std::vector<int>& removed) {
    std::string s;
    for (int v : removed) s += "d" + std::to_string(v);
    return s;
}

std::vector<int> complement(const std::vector<int>& kept, int n) {
    std::vector<int> out;
    for (int v = 0; v <= n; ++v)
        if (std::find(kept.begin(), kept.end(), v) == kept.end()) out.push_back(v);
    return out;
}

std::string restriction_notation(const std::vector<std::vector<int>>& bead_vertices, int n, const std::string& name) {
    if (bead_vertices.size() == 1) return face_word_notation(complement(bead_vertices[0], n)) + name;
    return name + "|~";
}

std::string bead_vertices_notation(const std::vector<std::vector<int>>& bead_vertices) {
    std::string s;
    for (std::size_t b = 0; b < bead_vertices.size(); ++b) {
        s += b ? " " : "";
        s += "[";
        for (std::size_t k = 0; k < bead_vertices[b].size(); ++k)
            s += (k ? "," : "") + std::to_string(bead_vertices[b][k]);
        s += "]";
    }
    return s;
}

}  // namespace ccat
