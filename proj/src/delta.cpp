#include "ccat/delta.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ccat/errors.hpp"

namespace ccat {

OrdinalMap::OrdinalMap(std::vector<int> values, int target_size)
    : values_(std::move(values)), target_size_(target_size) {
    if (values_.empty() || target_size_ <= 0)
        throw DomainError("ordinal map needs non-empty source and target");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (values_[k] < 0 || values_[k] >= target_size_)
            throw DomainError("ordinal map value out of range: " + to_string());
        if (k > 0 && values_[k] < values_[k - 1])
            throw DomainError("ordinal map not monotone: " + to_string());
    }
}

OrdinalMap OrdinalMap::identity(int dim) {
    std::vector<int> v(dim + 1);
    for (int k = 0; k <= dim; ++k) v[k] = k;
    return OrdinalMap(std::move(v), dim + 1);
}

OrdinalMap OrdinalMap::coface(int i, int n) {
    if (n < 1 || i < 0 || i > n) throw DomainError("coface index out of range");
    std::vector<int> v;
    for (int k = 0; k <= n; ++k)
        if (k != i) v.push_back(k);
    return OrdinalMap(std::move(v), n + 1);
}

OrdinalMap OrdinalMap::codegeneracy(int i, int n) {
    if (n < 0 || i < 0 || i > n) throw DomainError("codegeneracy index out of range");
    std::vector<int> v;
    for (int k = 0; k <= n + 1; ++k) v.push_back(k <= i ? k : k - 1);
    return OrdinalMap(std::move(v), n + 1);
}

OrdinalMap OrdinalMap::inclusion(const std::vector<int>& vertices, int n) {
    for (std::size_t k = 1; k < vertices.size(); ++k)
        if (vertices[k] <= vertices[k - 1]) throw DomainError("inclusion needs strictly increasing vertices");
    return OrdinalMap(vertices, n + 1);
}

bool OrdinalMap::is_injective() const {
    return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool OrdinalMap::is_surjective() const {
    return values_.front() == 0 && values_.back() == target_size_ - 1 &&
           std::adjacent_find(values_.begin(), values_.end(),
                              [](int a, int b) { return b > a + 1; }) == values_.end();
}

bool OrdinalMap::is_identity() const { return is_injective() && is_surjective(); }

std::string OrdinalMap::to_string() const {
    std::ostringstream os;
    os << "[" << values_.size() - 1 << "]->[" << target_size_ - 1 << "](";
    for (std::size_t k = 0; k < values_.size(); ++k) os << (k ? "," : "") << values_[k];
    os << ")";
    return os.str();
}

OrdinalMap compose(const OrdinalMap& f, const OrdinalMap& g) {
    if (f.target_size() != g.source_size())
        throw DomainError("compose: size mismatch " + f.to_string() + " then " + g.to_string());
    std::vector<int> v(f.source_size());
    for (int k = 0; k < f.source_size(); ++k) v[k] = g(f(k));
    return OrdinalMap(std::move(v), g.target_size());
}

DegeneracyWord::DegeneracyWord(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end(), std::greater<>());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
        throw DomainError("degeneracy word has a repeated index; normalize via of_surjection");
    if (!indices_.empty() && indices_.back() < 0) throw DomainError("negative degeneracy index");
}

DegeneracyWord DegeneracyWord::of_surjection(const OrdinalMap& epi) {
    if (!epi.is_surjective()) throw DomainError("not a surjection: " + epi.to_string());
    std::vector<int> idx;
    for (int j = epi.source_size() - 2; j >= 0; --j)
        if (epi(j) == epi(j + 1)) idx.push_back(j);
    DegeneracyWord w;
    w.indices_ = std::move(idx);
    return w;
}

OrdinalMap DegeneracyWord::surjection(int target_dim) const {
    const int n = target_dim + length();
    std::vector<int> v(n + 1);
    int value = 0;
    for (int j = 0; j <= n; ++j) {
        v[j] = value;
        if (j < n && std::find(indices_.begin(), indices_.end(), j) == indices_.end()) ++value;
    }
    if (!indices_.empty() && indices_.front() >= n)
        throw DomainError("degeneracy index exceeds dimension");
    return OrdinalMap(std::move(v), target_dim + 1);
}

DegeneracyWord DegeneracyWord::prepend(int i, int target_dim) const {
    const int n = target_dim + length();
    return of_surjection(compose(OrdinalMap::codegeneracy(i, n), surjection(target_dim)));
}

EpiMono epi_mono_factor(const OrdinalMap& f) {
    std::vector<int> image;
    for (int v : f.values())
        if (image.empty() || image.back() != v) image.push_back(v);
    return EpiMono{DegeneracyWord::of_surjection(epi_part(f)),
                   OrdinalMap(image, f.target_size())};
}

OrdinalMap epi_part(const OrdinalMap& f) {
    std::vector<int> v(f.source_size());
    int rank = 0;
    for (int k = 0; k < f.source_size(); ++k) {
        if (k > 0 && f(k) != f(k - 1)) ++rank;
        v[k] = rank;
    }
    return OrdinalMap(std::move(v), rank + 1);
}

std::vector<OrdinalMap> all_monotone_maps(int m, int n) {
    std::vector<OrdinalMap> out;
    std::vector<int> v(m + 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos > m) {
            out.emplace_back(v, n + 1);
            return;
        }
        for (int x = lo; x <= n; ++x) {
            v[pos] = x;
            rec(pos + 1, x);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace ccat
