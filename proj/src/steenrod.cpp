#include "cupn/steenrod.hpp"

#include "cupn/cup.hpp"
#include "cupn/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <tuple>

namespace cupn {

namespace {

// The D_z membership test for an unordered support pair whose union is z.
bool qualifies(const Simplex& xr, const Simplex& xs, const Simplex& z, const LoopBounds& b) {
    const auto t = shared_positions(xr, xs, z);
    if (!t || t->n() != b.n) return false;
    if ((*t)[0] != lower_bound(0, t->indices().subspan(1), b)) return false;
    return xr == apply_plus(*t, z) || xr == apply_minus(*t, z);
}

std::vector<Simplex> support_list(const Cochain& c) {
    std::vector<Simplex> out;
    out.reserve(c.support().size());
    for (const auto& [x, value] : c.support()) out.push_back(x);
    return out;
}

FormalSum sq_pairs(const std::vector<Simplex>& C, std::size_t first, std::size_t stride,
                   const LoopBounds& b, const SimplicialComplex& K) {
    const Ring ring = Ring::z2();
    FormalSum out(ring);
    for (std::size_t r = first; r < C.size(); r += stride) {
        for (std::size_t s = r + 1; s < C.size(); ++s) {
            const auto z = simplex_union(C[r], C[s], K);
            if (!z || z->dim() != b.m()) continue;
            if (qualifies(C[r], C[s], *z, b)) out.add(*z, ring.one());
        }
    }
    return out;
}

}  // namespace

FormalSum sq(int i, const Cochain& c, const SimplicialComplex& K, SqOptions options) {
    if (!c.ring().is_z2()) {
        throw RingMismatch("Steenrod squares need a Z2 cochain, got " + c.ring().name());
    }
    if (i < 0) throw ValidationError("Sq^i needs i >= 0");
    require_support_in(c, K);
    const int j = c.degree();
    if (i == 0) return c.as_formal_sum();
    if (i > j) return FormalSum(c.ring());

    const bool cocycle = options.check == CocycleCheck::Direct
                             ? is_cocycle(c, K)
                             : pair_accumulation_cocycle_check(c, K);
    if (!cocycle) throw NotACocycle("not a cocycle");

    const LoopBounds b{j, j, j - i};
    const std::vector<Simplex> C = support_list(c);
    const std::size_t workers =
        std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(C.size(), 1));
    if (workers == 1) return sq_pairs(C, 0, 1, b, K);

    std::vector<FormalSum> partial(workers, FormalSum(c.ring()));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] { partial[w] = sq_pairs(C, w, workers, b, K); });
    }
    for (auto& th : pool) th.join();
    FormalSum out(c.ring());
    for (const auto& part : partial) out.add(part);
    return out;
}

std::vector<std::pair<Simplex, Simplex>> dz_pairs(const Simplex& z,
                                                   std::span<const Simplex> support, int i,
                                                   int j) {
    std::vector<std::pair<Simplex, Simplex>> out;
    if (i <= 0 || i > j || z.dim() != i + j) return out;
    const LoopBounds b{j, j, j - i};
    for (std::size_t r = 0; r < support.size(); ++r) {
        for (std::size_t s = r + 1; s < support.size(); ++s) {
            if (vertex_union(support[r], support[s]) != z) continue;
            if (qualifies(support[r], support[s], z, b)) out.emplace_back(support[r], support[s]);
        }
    }
    return out;
}

bool dz_parity(const Simplex& z, std::span<const Simplex> support, int i, int j) {
    return dz_pairs(z, support, i, j).size() % 2 == 1;
}

bool pair_accumulation_cocycle_check(const Cochain& c, const SimplicialComplex& K) {
    require_support_in(c, K);
    const std::vector<Simplex> C = support_list(c);
    const int j = c.degree();

    // O: pairs whose union is a (j+1)-simplex of K.
    std::vector<std::tuple<std::size_t, std::size_t, Simplex>> pairs;
    for (std::size_t r = 0; r < C.size(); ++r) {
        for (std::size_t s = r + 1; s < C.size(); ++s) {
            auto z = simplex_union(C[r], C[s], K);
            if (z && z->dim() == j + 1) pairs.emplace_back(r, s, std::move(*z));
        }
    }
    if (pairs.empty()) return false;

    // co: for each such z, the support faces seen so far.
    std::map<Simplex, std::set<std::size_t>> co;
    for (const auto& [r, s, z] : pairs) {
        auto& faces = co[z];
        faces.insert(r);
        faces.insert(s);
    }
    return std::none_of(co.begin(), co.end(),
                        [](const auto& entry) { return entry.second.size() % 2 == 1; });
}

}  // namespace cupn
