#include "cupn/complex.hpp"

#include "cupn/error.hpp"

#include <algorithm>
#include <set>

namespace cupn {

namespace {

std::vector<Simplex> to_simplices(std::vector<std::vector<Vertex>> lists) {
    std::vector<Simplex> out;
    out.reserve(lists.size());
    for (auto& l : lists) {
        if (l.empty()) throw ValidationError("complex contains an empty simplex");
        out.push_back(Simplex::from_unsorted(std::move(l)));
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Vertex>> maximal) {
    build(to_simplices(std::move(maximal)));
}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> maximal) { build(std::move(maximal)); }

void SimplicialComplex::build(std::vector<Simplex> candidates) {
    for (const auto& s : candidates) {
        if (s.is_degenerate()) {
            throw ValidationError("maximal simplex has a repeated vertex: " + s.to_string());
        }
    }
    const std::size_t input_count = candidates.size();
    // Larger simplices first so containment only needs to look backwards.
    std::sort(candidates.begin(), candidates.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& s : candidates) {
        const bool covered = std::any_of(maximal_.begin(), maximal_.end(),
                                         [&](const Simplex& m) { return s.is_face_of(m); });
        if (!covered) maximal_.push_back(s);
    }
    std::sort(maximal_.begin(), maximal_.end());
    dropped_ = input_count - maximal_.size();

    std::vector<std::set<Simplex>> faces;
    for (const auto& m : maximal_) {
        const std::size_t size = m.size();
        if (faces.size() < size) faces.resize(size);
        std::vector<Vertex> v;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
            v.clear();
            for (std::size_t k = 0; k < size; ++k) {
                if (mask >> k & 1U) v.push_back(m[k]);
            }
            faces[v.size() - 1].insert(Simplex(v));
        }
    }
    by_dim_.reserve(faces.size());
    for (auto& level : faces) by_dim_.emplace_back(level.begin(), level.end());
}

bool SimplicialComplex::contains(const Simplex& x) const {
    return index_of(x).has_value();
}

std::span<const Simplex> SimplicialComplex::simplices_of_dim(int n) const {
    if (n < 0 || n >= static_cast<int>(by_dim_.size())) return {};
    return by_dim_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& x) const {
    const auto level = simplices_of_dim(x.dim());
    const auto it = std::lower_bound(level.begin(), level.end(), x);
    if (it == level.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

std::optional<Simplex> simplex_union(const Simplex& x, const Simplex& y,
                                     const SimplicialComplex& K) {
    if (!K.contains(x)) throw NotInComplex("simplex " + x.to_string() + " is not in the complex");
    if (!K.contains(y)) throw NotInComplex("simplex " + y.to_string() + " is not in the complex");
    Simplex z = vertex_union(x, y);
    if (!K.contains(z)) return std::nullopt;
    return z;
}

}  // namespace cupn
