#pragma once

#include "cupn/complex.hpp"
#include "cupn/ring.hpp"
#include "cupn/simplex.hpp"

#include <map>
#include <utility>

namespace cupn {

/// Sparse Σ λ_k z_k over a ring. Zero coefficients are never stored; terms
/// iterate in lexicographic simplex order.
class FormalSum {
public:
    using Terms = std::map<Simplex, RingElement>;

    explicit FormalSum(Ring ring = Ring()) : ring_(ring) {}

    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    RingElement coefficient(const Simplex& z) const;

    /// Adds coeff·z, cancelling the term if the total becomes zero.
    void add(const Simplex& z, const RingElement& coeff);
    void add(const FormalSum& other);

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

private:
    Ring ring_;
    Terms terms_;
};

/// A degree-p cochain: a finite map from nondegenerate p-simplices to
/// nonzero ring elements. Anything absent evaluates to zero.
class Cochain {
public:
    using Support = std::map<Simplex, RingElement>;

    Cochain(int degree, Ring ring);

    /// Throws ValidationError if a key is degenerate or of the wrong dimension.
    /// Zero values are dropped.
    Cochain(int degree, Ring ring, Support support);

    /// Reads a formal sum of degree-p simplices as a cochain.
    static Cochain from_formal_sum(int degree, const FormalSum& sum);

    /// Indicator-style constructor: coefficient 1 on every listed simplex.
    static Cochain indicator(int degree, Ring ring, std::span<const Simplex> simplices);

    int degree() const { return degree_; }
    const Ring& ring() const { return ring_; }
    const Support& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    void set(const Simplex& x, const RingElement& value);

    /// c(x); zero when x is absent, degenerate or of another dimension.
    RingElement evaluate(const Simplex& x) const;

    /// Pairing with a chain: Σ λ_k c(z_k).
    RingElement evaluate(const FormalSum& chain) const;

    FormalSum as_formal_sum() const;

    /// Throws RingMismatch/DimensionMismatch on incompatible operands.
    Cochain operator+(const Cochain& other) const;

    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    int degree_;
    Ring ring_;
    Support support_;
};

inline RingElement evaluate(const Cochain& c, const Simplex& x) { return c.evaluate(x); }

/// d x = Σ (-1)^i ∂_i x. A 0-simplex has the empty differential.
FormalSum differential(const Simplex& x, const Ring& ring);

/// d applied termwise to a chain.
FormalSum differential(const FormalSum& chain);

/// δc on every (p+1)-simplex of K. Throws SupportNotInComplex.
Cochain coboundary(const Cochain& c, const SimplicialComplex& K);

bool is_cocycle(const Cochain& c, const SimplicialComplex& K);

/// Throws SupportNotInComplex naming the first offending simplex.
void require_support_in(const Cochain& c, const SimplicialComplex& K);

}  // namespace cupn
