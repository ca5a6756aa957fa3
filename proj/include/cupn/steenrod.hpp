#pragma once

#include "cupn/chain.hpp"
#include "cupn/complex.hpp"
#include "cupn/simplex.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cupn {

/// How sq() decides that its input is a cocycle.
enum class CocycleCheck {
    /// δc = 0 on every (j+1)-simplex of K.
    Direct,
    /// Counts support faces seen through pairs whose union is a (j+1)-simplex.
    /// It misses a (j+1)-simplex with exactly one support face, and rejects
    /// the zero cochain. Kept for comparison only.
    PairAccumulation,
};

struct SqOptions {
    CocycleCheck check = CocycleCheck::Direct;
    unsigned threads = 1;
};

/// Chain-level Sq^i(c) = c ⌣_{j-i} c over Z_2 for a j-cocycle c.
///
/// i = 0 returns c itself and i > j the empty sum, neither of which runs the
/// cocycle check. Otherwise each unordered support pair {x_r, x_s} whose
/// union z is an (i+j)-simplex of K toggles z when it satisfies the D_z
/// conditions. Throws RingMismatch unless c is over Z_2, NotACocycle,
/// SupportNotInComplex.
FormalSum sq(int i, const Cochain& c, const SimplicialComplex& K, SqOptions options = {});

/// The D_z pair set for z: pairs (x_r, x_s), r < s in the order of `support`,
/// with x_r ∪ x_s = z, x_r ∩ x_s an n-simplex (n = j - i) whose positions
/// satisfy i_0 = S(0), and x_r the union of the even or of the odd segments
/// of z.
std::vector<std::pair<Simplex, Simplex>> dz_pairs(const Simplex& z,
                                                   std::span<const Simplex> support, int i,
                                                   int j);

/// |D_z| mod 2, the value Sq^i(c)(z).
bool dz_parity(const Simplex& z, std::span<const Simplex> support, int i, int j);

/// Support-pair cocycle test, see CocycleCheck::PairAccumulation.
bool pair_accumulation_cocycle_check(const Cochain& c, const SimplicialComplex& K);

}  // namespace cupn
