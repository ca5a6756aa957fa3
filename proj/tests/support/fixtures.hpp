#pragma once

#include "cupn/chain.hpp"
#include "cupn/complex.hpp"
#include "cupn/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace cupn::testing {

inline SimplicialComplex solid_simplex(int dim) {
    std::vector<Vertex> v(static_cast<std::size_t>(dim) + 1);
    std::iota(v.begin(), v.end(), 0);
    return SimplicialComplex(std::vector<std::vector<Vertex>>{v});
}

inline SimplicialComplex solid_triangle() { return solid_simplex(2); }

inline SimplicialComplex hollow_triangle() {
    return SimplicialComplex(std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}, {0, 2}});
}

inline SimplicialComplex hollow_tetrahedron() {
    return SimplicialComplex(
        std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// Six-vertex real projective plane.
inline SimplicialComplex rp2_6() {
    return SimplicialComplex(std::vector<std::vector<Vertex>>{{1, 2, 3},
                                                             {1, 3, 4},
                                                             {1, 2, 6},
                                                             {1, 4, 5},
                                                             {1, 5, 6},
                                                             {2, 3, 5},
                                                             {2, 4, 5},
                                                             {2, 4, 6},
                                                             {3, 4, 6},
                                                             {3, 5, 6}});
}

/// Random complex on `vertices` vertices: up to `facets` random vertex
/// subsets of size 1..max_size+1.
inline SimplicialComplex random_complex(std::mt19937& rng, int vertices, int facets,
                                        int max_dim) {
    std::uniform_int_distribution<int> size_dist(1, std::min(vertices, max_dim + 1));
    std::vector<std::vector<Vertex>> maximal;
    std::vector<Vertex> all(static_cast<std::size_t>(vertices));
    std::iota(all.begin(), all.end(), 0);
    for (int f = 0; f < facets; ++f) {
        std::shuffle(all.begin(), all.end(), rng);
        const int size = size_dist(rng);
        std::vector<Vertex> s(all.begin(), all.begin() + size);
        std::sort(s.begin(), s.end());
        maximal.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(maximal));
}

/// Random element of the given ring; over Z drawn from [-3, 3].
inline RingElement random_element(std::mt19937& rng, const Ring& ring) {
    if (ring.kind() == Ring::Kind::Integers) {
        return ring.from_int(std::uniform_int_distribution<int>(-3, 3)(rng));
    }
    return ring.from_int(std::uniform_int_distribution<long long>(0, ring.modulus() - 1)(rng));
}

/// Each p-simplex of K gets a random coefficient with probability `density`.
inline Cochain random_cochain(std::mt19937& rng, const SimplicialComplex& K, int degree,
                              const Ring& ring, double density = 0.5) {
    Cochain c(degree, ring);
    std::bernoulli_distribution keep(density);
    for (const auto& x : K.simplices_of_dim(degree)) {
        if (keep(rng)) c.set(x, random_element(rng, ring));
    }
    return c;
}

/// Uniform random mod-2 cocycle of degree j on K (random combination of a
/// basis of Ker δ^j).
inline Cochain random_cocycle_mod2(std::mt19937& rng, const SimplicialComplex& K, int j) {
    const auto basis = coboundary_matrix(K, j).nullspace();
    std::vector<bool> v(K.simplices_of_dim(j).size(), false);
    std::bernoulli_distribution pick(0.5);
    for (const auto& b : basis) {
        if (!pick(rng)) continue;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] != b[k];
    }
    return mod2_cochain(v, j, K);
}

}  // namespace cupn::testing
