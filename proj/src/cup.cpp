#include "cupn/cup.hpp"

#include "cupn/error.hpp"

#include <algorithm>
#include <thread>

namespace cupn {

SignExponents sign_exponents(int n, int m, std::span<const int> idx) {
    auto odd = [](long long v) { return (v & 1) != 0; };
    SignExponents e;

    const int n8 = n % 8;
    e.a = n8 >= 3 && n8 <= 6;

    long long b = 0;
    if (n % 4 == 1 || n % 4 == 2) {
        for (int j = 0; 2 * j <= n; ++j) b += idx[static_cast<std::size_t>(2 * j)];
    } else {
        for (int j = 0; 2 * j + 1 <= n; ++j) b += idx[static_cast<std::size_t>(2 * j + 1)];
        b += static_cast<long long>(n) * m;
    }
    e.b = odd(b);

    // C: Σ_{j=1}^{⌊n/2⌋} (i_{2j} + i_{2j-1}) (i_{2j-1} + ... + i_0)
    bool c = false;
    long long prefix = 0;  // i_0 + ... + i_{2j-1}
    std::size_t consumed = 0;
    for (int j = 1; 2 * j <= n; ++j) {
        const auto hi = static_cast<std::size_t>(2 * j - 1);
        while (consumed <= hi) prefix += idx[consumed++];
        c ^= odd(idx[hi + 1] + idx[hi]) && odd(prefix);
    }
    e.c = c;

    if (n % 2 == 1) {
        long long total = 0;
        for (int v : idx) total += v;
        e.d = odd(static_cast<long long>(m) + idx[static_cast<std::size_t>(n)]) && odd(total);
    }
    return e;
}

bool sign_exponent(int n, int m, const IndexTuple& t) {
    return sign_exponents(n, m, t.indices()).parity();
}

long long lower_bound(int k, std::span<const int> suffix, const LoopBounds& b) {
    long long s = 0;
    for (std::size_t t = 0; t < suffix.size(); ++t) {
        s += (t % 2 == 0) ? suffix[t] : -static_cast<long long>(suffix[t]);
    }
    const long long constant = static_cast<long long>(b.lambda()) - b.n / 2;
    s += ((k + b.n) % 2 == 0) ? constant : -constant;
    s += k / 2;
    return s;
}

namespace {

void require_same_ring(const Cochain& c, const Cochain& cprime) {
    if (c.ring() != cprime.ring()) {
        throw RingMismatch("cochains live over " + c.ring().name() + " and " +
                           cprime.ring().name());
    }
}

void require_dimension(const Simplex& x, const LoopBounds& b) {
    if (b.n < 0) throw ValidationError("cup-n needs n >= 0");
    if (x.dim() != b.m()) {
        throw DimensionMismatch("cup_" + std::to_string(b.n) + " of degrees " +
                                std::to_string(b.p) + " and " + std::to_string(b.q) +
                                " is evaluated on " + std::to_string(b.m()) +
                                "-simplices, got " + x.to_string());
    }
}

// sign · c(plus face) · c'(minus face) for one tuple.
RingElement summand_value(const Cochain& c, const Cochain& cprime, const Simplex& x,
                          const IndexTuple& t) {
    const Ring& ring = c.ring();
    const RingElement left = c.evaluate(apply_plus(t, x));
    if (left.is_zero()) return ring.zero();
    const RingElement right = cprime.evaluate(apply_minus(t, x));
    if (right.is_zero()) return ring.zero();
    RingElement v = ring.mul(left, right);
    if (!ring.is_z2() && sign_exponent(t.n(), t.m(), t)) v = ring.neg(v);
    return v;
}

}  // namespace

std::vector<Summand> bounded_summands(const LoopBounds& b, const Simplex& x) {
    require_dimension(x, b);
    std::vector<Summand> out;
    for_each_bounded_tuple(b, [&](std::span<const int> idx) {
        IndexTuple t(std::vector<int>(idx.begin(), idx.end()), b.m());
        const int sign = sign_exponents(b.n, b.m(), idx).sign();
        Simplex plus = apply_plus(t, x);
        Simplex minus = apply_minus(t, x);
        out.push_back(Summand{std::move(t), sign, std::move(plus), std::move(minus)});
    });
    return out;
}

RingElement cup_eval_oracle(const Cochain& c, const Cochain& cprime, const Simplex& x, int n,
                            EvalStats* stats) {
    require_same_ring(c, cprime);
    const LoopBounds b{c.degree(), cprime.degree(), n};
    require_dimension(x, b);
    const Ring& ring = c.ring();
    RingElement total = ring.zero();
    for_each_tuple(
        n, b.m(),
        [&](std::span<const int> idx) {
            const IndexTuple t(std::vector<int>(idx.begin(), idx.end()), b.m());
            total = ring.add(total, summand_value(c, cprime, x, t));
        },
        stats);
    return total;
}

RingElement cup_eval_bounded(const Cochain& c, const Cochain& cprime, const Simplex& x, int n,
                             EvalStats* stats) {
    require_same_ring(c, cprime);
    const LoopBounds b{c.degree(), cprime.degree(), n};
    require_dimension(x, b);
    const Ring& ring = c.ring();
    RingElement total = ring.zero();
    for_each_bounded_tuple(
        b,
        [&](std::span<const int> idx) {
            const IndexTuple t(std::vector<int>(idx.begin(), idx.end()), b.m());
            total = ring.add(total, summand_value(c, cprime, x, t));
        },
        stats);
    return total;
}

std::optional<IndexTuple> shared_positions(const Simplex& x, const Simplex& y, const Simplex& z) {
    const auto common = intersection(x, y);
    if (!common) return std::nullopt;
    auto pos = positions_in(*common, z);
    if (!pos) return std::nullopt;
    return IndexTuple(std::move(*pos), z.dim());
}

namespace {

using SupportEntry = std::pair<Simplex, RingElement>;

FormalSum cup_pairs(std::span<const SupportEntry> xs, std::span<const SupportEntry> ys,
                    const LoopBounds& b, const Ring& ring, const SimplicialComplex& K) {
    FormalSum out(ring);
    const int m = b.m();
    for (const auto& [x, cx] : xs) {
        for (const auto& [y, cy] : ys) {
            const auto z = simplex_union(x, y, K);
            if (!z || z->dim() != m) continue;
            const auto t = shared_positions(x, y, *z);
            if (!t || t->n() != b.n) continue;
            const auto tail = t->indices().subspan(1);
            if ((*t)[0] != lower_bound(0, tail, b)) continue;
            if (apply_plus(*t, *z) != x) continue;
            RingElement v = ring.mul(cx, cy);
            if (!ring.is_z2() && sign_exponents(b.n, m, t->indices()).parity()) v = ring.neg(v);
            out.add(*z, v);
        }
    }
    return out;
}

}  // namespace

FormalSum cup_product(const Cochain& c, const Cochain& cprime, int n, const SimplicialComplex& K,
                      CupOptions options) {
    require_same_ring(c, cprime);
    if (n < 0) throw ValidationError("cup-n needs n >= 0");
    require_support_in(c, K);
    require_support_in(cprime, K);
    const Ring& ring = c.ring();
    const LoopBounds b{c.degree(), cprime.degree(), n};
    if (n > b.p || n > b.q || c.is_zero() || cprime.is_zero()) return FormalSum(ring);

    const std::vector<SupportEntry> xs(c.support().begin(), c.support().end());
    const std::vector<SupportEntry> ys(cprime.support().begin(), cprime.support().end());

    const std::size_t workers =
        std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(xs.size(), 1));
    if (workers == 1) return cup_pairs(xs, ys, b, ring, K);

    std::vector<FormalSum> partial(workers, FormalSum(ring));
    std::vector<std::thread> pool;
    const std::size_t chunk = (xs.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(xs.size(), w * chunk);
        const std::size_t end = std::min(xs.size(), begin + chunk);
        pool.emplace_back([&, w, begin, end] {
            partial[w] = cup_pairs(std::span(xs).subspan(begin, end - begin), ys, b, ring, K);
        });
    }
    for (auto& th : pool) th.join();
    FormalSum out(ring);
    for (const auto& part : partial) out.add(part);
    return out;
}

Cochain cup_cochain(const Cochain& c, const Cochain& cprime, int n, const SimplicialComplex& K,
                    CupOptions options) {
    const int degree = c.degree() + cprime.degree() - n;
    if (degree < 0) {
        throw DimensionMismatch("cup_" + std::to_string(n) + " of degrees " +
                                std::to_string(c.degree()) + " and " +
                                std::to_string(cprime.degree()) + " has negative degree");
    }
    return Cochain::from_formal_sum(degree, cup_product(c, cprime, n, K, options));
}

}  // namespace cupn
