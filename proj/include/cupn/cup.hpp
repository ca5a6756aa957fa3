#pragma once

#include "cupn/chain.hpp"
#include "cupn/complex.hpp"
#include "cupn/ring.hpp"
#include "cupn/simplex.hpp"
#include "cupn/words.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cupn {

/// Parities of the four sign summands A(n), B(n,m,i), C(n,i), D(n,m,i).
struct SignExponents {
    bool a = false;
    bool b = false;
    bool c = false;
    bool d = false;

    bool parity() const { return a ^ b ^ c ^ d; }
    int sign() const { return parity() ? -1 : 1; }
};

/// indices holds i_0..i_n (n = indices.size() - 1).
SignExponents sign_exponents(int n, int m, std::span<const int> indices);

/// (A + B + C + D) mod 2 for the tuple t.
bool sign_exponent(int n, int m, const IndexTuple& t);

/// Degrees of a cup-n evaluation: c is a p-cochain, c' a q-cochain, the
/// product lives on m = p + q - n simplices.
struct LoopBounds {
    int p = 0;
    int q = 0;
    int n = 0;

    int m() const { return p + q - n; }
    /// p for even n, q for odd n.
    int lambda() const { return n % 2 == 0 ? p : q; }
};

/// S(k) = i_{k+1} - i_{k+2} + ... ± i_n ± (λ(n) - ⌊n/2⌋) + ⌊k/2⌋.
/// `suffix` holds i_{k+1}..i_n and must have n - k entries. S(0) is the
/// forced value of i_0, S(k) for k >= 1 the lower loop bound of i_k.
long long lower_bound(int k, std::span<const int> suffix, const LoopBounds& bounds);

/// Tuple counters filled in by the evaluators.
struct EvalStats {
    std::uint64_t tuples = 0;   // summands formed
    std::uint64_t skipped = 0;  // suffixes whose forced i_0 broke the ordering
};

/// One term of the bounded formula evaluated on a simplex x.
struct Summand {
    IndexTuple tuple;
    int sign;
    Simplex plus_face;
    Simplex minus_face;
};

namespace detail {

template <class Visit>
void bounded_level(const LoopBounds& b, int k, std::vector<int>& idx, Visit& visit,
                   EvalStats* stats) {
    const int n = b.n;
    if (k == 0) {
        const long long i0 = lower_bound(0, std::span<const int>(idx).subspan(1), b);
        if (i0 < 0 || (n >= 1 && i0 >= idx[1])) {
            if (stats) ++stats->skipped;
            return;
        }
        idx[0] = static_cast<int>(i0);
        if (stats) ++stats->tuples;
        visit(std::span<const int>(idx));
        return;
    }
    // Any strictly increasing tuple has i_k >= k, so the bound can be tightened.
    const long long lo =
        std::max<long long>(k, lower_bound(k, std::span<const int>(idx).subspan(k + 1), b));
    const int hi = (k == n) ? b.m() : idx[k + 1] - 1;
    for (long long v = lo; v <= hi; ++v) {
        idx[k] = static_cast<int>(v);
        bounded_level(b, k - 1, idx, visit, stats);
    }
}

template <class Visit>
void all_level(int k, int hi, std::vector<int>& idx, Visit& visit, EvalStats* stats) {
    for (int v = k; v <= hi; ++v) {
        idx[k] = v;
        if (k == 0) {
            if (stats) ++stats->tuples;
            visit(std::span<const int>(idx));
        } else {
            all_level(k - 1, v - 1, idx, visit, stats);
        }
    }
}

}  // namespace detail

/// Runs the restricted loop nest: i_n from S(n) to m, i_k from S(k) to
/// i_{k+1} - 1, i_0 = S(0). Calls visit(span of i_0..i_n) per tuple.
/// Visits nothing when n > p or n > q.
template <class Visit>
void for_each_bounded_tuple(const LoopBounds& b, Visit visit, EvalStats* stats = nullptr) {
    if (b.n < 0 || b.n > b.p || b.n > b.q) return;
    std::vector<int> idx(static_cast<std::size_t>(b.n) + 1);
    detail::bounded_level(b, b.n, idx, visit, stats);
}

/// Every tuple 0 <= i_0 < ... < i_n <= m.
template <class Visit>
void for_each_tuple(int n, int m, Visit visit, EvalStats* stats = nullptr) {
    if (n < 0 || n > m) return;
    std::vector<int> idx(static_cast<std::size_t>(n) + 1);
    detail::all_level(n, m, idx, visit, stats);
}

/// All summands of the restricted formula on x, in enumeration order.
/// Throws DimensionMismatch unless dim x = p + q - n.
std::vector<Summand> bounded_summands(const LoopBounds& b, const Simplex& x);

/// (c ⌣_n c')(x) by enumerating all binomial(m+1, n+1) tuples.
/// Throws DimensionMismatch unless dim x = p + q - n, RingMismatch if the
/// cochains live over different rings.
RingElement cup_eval_oracle(const Cochain& c, const Cochain& cprime, const Simplex& x, int n,
                            EvalStats* stats = nullptr);

/// (c ⌣_n c')(x) over the restricted loop nest only.
RingElement cup_eval_bounded(const Cochain& c, const Cochain& cprime, const Simplex& x, int n,
                             EvalStats* stats = nullptr);

/// Positions of the vertices of x ∩ y inside z, as an index tuple with m = dim z,
/// or nullopt if x and y share no vertex.
std::optional<IndexTuple> shared_positions(const Simplex& x, const Simplex& y, const Simplex& z);

struct CupOptions {
    unsigned threads = 1;
};

/// c ⌣_n c' as a formal sum over the m-simplices of K, built from the
/// support pairs (x, y) that are the two factors of some summand.
/// Throws SupportNotInComplex, RingMismatch.
FormalSum cup_product(const Cochain& c, const Cochain& cprime, int n, const SimplicialComplex& K,
                      CupOptions options = {});

/// cup_product as a cochain of degree p + q - n. Throws DimensionMismatch
/// if that degree is negative.
Cochain cup_cochain(const Cochain& c, const Cochain& cprime, int n, const SimplicialComplex& K,
                    CupOptions options = {});

}  // namespace cupn
