#pragma once

#include "cupn/simplex.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cupn {

/// Ordered simplicial complex given by its maximal simplices.
///
/// Construction canonicalizes the input: vertex lists are sorted, duplicates
/// and non-maximal entries are dropped. All faces are enumerated once and
/// kept per dimension in lexicographic order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Throws ValidationError for an empty or degenerate (repeated-vertex) entry.
    explicit SimplicialComplex(std::vector<std::vector<Vertex>> maximal);
    explicit SimplicialComplex(std::vector<Simplex> maximal);

    std::span<const Simplex> maximal() const { return maximal_; }

    /// How many input entries were discarded as duplicates or non-maximal.
    std::size_t dropped_entries() const { return dropped_; }

    /// -1 for the empty complex.
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    /// True iff x is nondegenerate and its vertex set lies in a maximal simplex.
    bool contains(const Simplex& x) const;

    /// All nondegenerate n-simplices, lexicographically ordered.
    std::span<const Simplex> simplices_of_dim(int n) const;

    /// Index of x within simplices_of_dim(x.dim()), or nullopt.
    std::optional<std::size_t> index_of(const Simplex& x) const;

private:
    void build(std::vector<Simplex> candidates);

    std::vector<Simplex> maximal_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::size_t dropped_ = 0;
};

/// x ∪ y: the smallest simplex of K having both as faces, or nullopt when the
/// merged vertex set is not a simplex of K. Throws NotInComplex if x or y is
/// not in K.
std::optional<Simplex> simplex_union(const Simplex& x, const Simplex& y,
                                     const SimplicialComplex& K);

}  // namespace cupn
