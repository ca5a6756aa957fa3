#include "cupn/simplex.hpp"

#include "cupn/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cupn {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw ValidationError("simplex must have at least one vertex");
    if (!std::is_sorted(vertices_.begin(), vertices_.end())) {
        throw ValidationError("simplex vertices must be nondecreasing: " + to_string());
    }
}

Simplex Simplex::from_unsorted(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return Simplex(std::move(vertices));
}

bool Simplex::is_degenerate() const {
    return std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end();
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) os << ',';
        os << vertices_[i];
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) { return os << s.to_string(); }

Simplex face(std::size_t i, const Simplex& x) {
    if (x.dim() < 1 || i > static_cast<std::size_t>(x.dim())) {
        throw IndexOutOfRange("face index " + std::to_string(i) + " invalid for " +
                              x.to_string());
    }
    std::vector<Vertex> v(x.vertices().begin(), x.vertices().end());
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    return Simplex(std::move(v));
}

Simplex degeneracy(std::size_t i, const Simplex& x) {
    if (i > static_cast<std::size_t>(x.dim())) {
        throw IndexOutOfRange("degeneracy index " + std::to_string(i) + " invalid for " +
                              x.to_string());
    }
    std::vector<Vertex> v(x.vertices().begin(), x.vertices().end());
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), v[i]);
    return Simplex(std::move(v));
}

Simplex keep_positions(const Simplex& x, std::span<const unsigned char> mask) {
    std::vector<Vertex> v;
    v.reserve(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (mask[k]) v.push_back(x[k]);
    }
    return Simplex(std::move(v));
}

std::optional<Simplex> intersection(const Simplex& x, const Simplex& y) {
    std::vector<Vertex> v;
    std::set_intersection(x.vertices().begin(), x.vertices().end(), y.vertices().begin(),
                          y.vertices().end(), std::back_inserter(v));
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty()) return std::nullopt;
    return Simplex(std::move(v));
}

Simplex vertex_union(const Simplex& x, const Simplex& y) {
    std::vector<Vertex> v;
    v.reserve(x.size() + y.size());
    std::set_union(x.vertices().begin(), x.vertices().end(), y.vertices().begin(),
                   y.vertices().end(), std::back_inserter(v));
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return Simplex(std::move(v));
}

std::optional<std::vector<int>> positions_in(const Simplex& sub, const Simplex& super) {
    std::vector<int> pos;
    pos.reserve(sub.size());
    std::size_t k = 0;
    for (std::size_t s = 0; s < sub.size(); ++s) {
        while (k < super.size() && super[k] < sub[s]) ++k;
        if (k == super.size() || super[k] != sub[s]) return std::nullopt;
        pos.push_back(static_cast<int>(k));
        ++k;
    }
    return pos;
}

}  // namespace cupn
