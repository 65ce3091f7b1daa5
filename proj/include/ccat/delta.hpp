#pragma once

// Combinatorics of the simplex category: monotone maps [m] -> [n] stored as
// value sequences, generators, and the epi-mono factorization.

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace ccat {

/// A weakly monotone map [m] -> [n]; values[k] is the image of k.
class OrdinalMap {
public:
    OrdinalMap() = default;
    /// Throws DomainError unless values are monotone and below target_size.
    OrdinalMap(std::vector<int> values, int target_size);

    static OrdinalMap identity(int dim);
    /// d^i : [n-1] -> [n], skipping i.
    static OrdinalMap coface(int i, int n);
    /// s^i : [n+1] -> [n], hitting i twice.
    static OrdinalMap codegeneracy(int i, int n);
    /// Inclusion of the sorted vertex list into [n].
    static OrdinalMap inclusion(const std::vector<int>& vertices, int n);

    int source_size() const { return static_cast<int>(values_.size()); }
    int target_size() const { return target_size_; }
    int source_dim() const { return source_size() - 1; }
    int target_dim() const { return target_size_ - 1; }
    const std::vector<int>& values() const { return values_; }
    int operator()(int k) const { return values_[k]; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_identity() const;

    auto operator<=>(const OrdinalMap&) const = default;
    bool operator==(const OrdinalMap&) const = default;

    std::string to_string() const;

private:
    std::vector<int> values_;
    int target_size_ = 0;
};

/// compose(f, g) = g after f. Requires f.target_size() == g.source_size().
OrdinalMap compose(const OrdinalMap& f, const OrdinalMap& g);

/// Canonical name of a surjection [n] -> [n - k]: the positions j with
/// eps(j) == eps(j+1), stored strictly decreasing. As a simplicial operator
/// this is s_{i_1} ... s_{i_k} with i_1 > ... > i_k.
class DegeneracyWord {
public:
    DegeneracyWord() = default;
    /// Accepts any order and repeats are rejected; the stored form is sorted
    /// strictly decreasing.
    explicit DegeneracyWord(std::vector<int> indices);

    /// Word of a surjective map.
    static DegeneracyWord of_surjection(const OrdinalMap& epi);

    const std::vector<int>& indices() const { return indices_; }
    int length() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }

    /// The surjection [target_dim + length] -> [target_dim] this word encodes.
    OrdinalMap surjection(int target_dim) const;

    /// Word of s_i applied after this word (s_i . w), renormalized.
    DegeneracyWord prepend(int i, int target_dim) const;

    auto operator<=>(const DegeneracyWord&) const = default;
    bool operator==(const DegeneracyWord&) const = default;

private:
    std::vector<int> indices_;
};

struct EpiMono {
    DegeneracyWord epi;
    OrdinalMap mono;
};

/// f = mono after epi with epi surjective and mono injective.
EpiMono epi_mono_factor(const OrdinalMap& f);

/// The surjective part of f as a map [m] -> [k].
OrdinalMap epi_part(const OrdinalMap& f);

/// All monotone maps [m] -> [n].
std::vector<OrdinalMap> all_monotone_maps(int m, int n);

}  // namespace ccat
