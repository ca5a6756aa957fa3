#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cupn {

using Vertex = int;

/// A simplex of SS(P): a nonempty nondecreasing tuple of vertex labels.
///
/// Repeated vertices make the simplex degenerate. Degenerate simplices exist
/// only so the face/degeneracy identities can be exercised; complexes and
/// cochains never store them.
class Simplex {
public:
    /// Throws ValidationError if `vertices` is empty or decreasing somewhere.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices)
        : Simplex(std::vector<Vertex>(vertices)) {}

    /// Builds the simplex on an arbitrary vertex collection: sorted, duplicates kept.
    static Simplex from_unsorted(std::vector<Vertex> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    std::span<const Vertex> vertices() const { return vertices_; }

    bool is_degenerate() const;

    /// Vertex-set inclusion (both simplices taken as sets).
    bool is_face_of(const Simplex& other) const;

    std::string to_string() const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    std::vector<Vertex> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

/// ∂_i: removes the vertex at position i. Requires dim >= 1 and i <= dim.
Simplex face(std::size_t i, const Simplex& x);

/// s_i: duplicates the vertex at position i. Requires i <= dim.
Simplex degeneracy(std::size_t i, const Simplex& x);

/// Keeps the vertices whose mask entry is nonzero. Mask length must equal
/// x.size() and at least one entry must be set.
Simplex keep_positions(const Simplex& x, std::span<const unsigned char> mask);

/// Simplex on the common vertex set of two nondegenerate simplices, or
/// nullopt if they share no vertex.
std::optional<Simplex> intersection(const Simplex& x, const Simplex& y);

/// Simplex on the merged vertex set, without any complex-membership test.
Simplex vertex_union(const Simplex& x, const Simplex& y);

/// Position of each vertex of `sub` inside `super`, or nullopt if some vertex
/// of `sub` is missing from `super`. Both must be nondegenerate.
std::optional<std::vector<int>> positions_in(const Simplex& sub, const Simplex& super);

}  // namespace cupn
