#include "cupn/chain.hpp"

#include "cupn/error.hpp"

namespace cupn {

RingElement FormalSum::coefficient(const Simplex& z) const {
    const auto it = terms_.find(z);
    return it == terms_.end() ? ring_.zero() : it->second;
}

void FormalSum::add(const Simplex& z, const RingElement& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(z, coeff);
    if (inserted) return;
    it->second = ring_.add(it->second, coeff);
    if (it->second.is_zero()) terms_.erase(it);
}

void FormalSum::add(const FormalSum& other) {
    if (other.ring_ != ring_) throw RingMismatch("cannot add formal sums over different rings");
    for (const auto& [z, coeff] : other.terms_) add(z, coeff);
}

Cochain::Cochain(int degree, Ring ring) : degree_(degree), ring_(ring) {
    if (degree < 0) throw ValidationError("cochain degree must be nonnegative");
}

Cochain::Cochain(int degree, Ring ring, Support support) : Cochain(degree, ring) {
    for (auto& [x, value] : support) set(x, value);
}

Cochain Cochain::from_formal_sum(int degree, const FormalSum& sum) {
    Cochain c(degree, sum.ring());
    for (const auto& [z, coeff] : sum.terms()) c.set(z, coeff);
    return c;
}

Cochain Cochain::indicator(int degree, Ring ring, std::span<const Simplex> simplices) {
    Cochain c(degree, ring);
    for (const auto& x : simplices) c.set(x, ring.one());
    return c;
}

void Cochain::set(const Simplex& x, const RingElement& value) {
    if (x.dim() != degree_) {
        throw ValidationError("simplex " + x.to_string() + " does not have dimension " +
                              std::to_string(degree_));
    }
    if (x.is_degenerate()) {
        throw ValidationError("cochain support cannot hold degenerate simplex " + x.to_string());
    }
    // Values may come from another ring representation; re-canonicalize.
    RingElement v = ring_.from_integer(value.value());
    if (v.is_zero()) {
        support_.erase(x);
    } else {
        support_.insert_or_assign(x, std::move(v));
    }
}

RingElement Cochain::evaluate(const Simplex& x) const {
    if (x.dim() != degree_) return ring_.zero();
    const auto it = support_.find(x);
    return it == support_.end() ? ring_.zero() : it->second;
}

RingElement Cochain::evaluate(const FormalSum& chain) const {
    RingElement total = ring_.zero();
    for (const auto& [z, coeff] : chain.terms()) {
        total = ring_.add(total, ring_.mul(ring_.from_integer(coeff.value()), evaluate(z)));
    }
    return total;
}

FormalSum Cochain::as_formal_sum() const {
    FormalSum s(ring_);
    for (const auto& [x, value] : support_) s.add(x, value);
    return s;
}

Cochain Cochain::operator+(const Cochain& other) const {
    if (other.ring_ != ring_) throw RingMismatch("cannot add cochains over different rings");
    if (other.degree_ != degree_) {
        throw DimensionMismatch("cannot add cochains of degrees " + std::to_string(degree_) +
                                " and " + std::to_string(other.degree_));
    }
    Cochain sum = *this;
    for (const auto& [x, value] : other.support_) {
        sum.set(x, ring_.add(sum.evaluate(x), value));
    }
    return sum;
}

FormalSum differential(const Simplex& x, const Ring& ring) {
    FormalSum d(ring);
    if (x.dim() < 1) return d;
    const RingElement plus = ring.one();
    const RingElement minus = ring.neg(plus);
    for (std::size_t i = 0; i < x.size(); ++i) d.add(face(i, x), i % 2 == 0 ? plus : minus);
    return d;
}

FormalSum differential(const FormalSum& chain) {
    const Ring& ring = chain.ring();
    FormalSum d(ring);
    for (const auto& [z, coeff] : chain.terms()) {
        const FormalSum dz = differential(z, ring);
        for (const auto& [f, sign] : dz.terms()) d.add(f, ring.mul(sign, coeff));
    }
    return d;
}

void require_support_in(const Cochain& c, const SimplicialComplex& K) {
    for (const auto& [x, value] : c.support()) {
        if (!K.contains(x)) {
            throw SupportNotInComplex("support simplex " + x.to_string() +
                                      " is not in the complex");
        }
    }
}

Cochain coboundary(const Cochain& c, const SimplicialComplex& K) {
    require_support_in(c, K);
    const Ring& ring = c.ring();
    Cochain out(c.degree() + 1, ring);
    if (c.is_zero()) return out;
    for (const auto& x : K.simplices_of_dim(c.degree() + 1)) {
        RingElement total = ring.zero();
        for (std::size_t i = 0; i < x.size(); ++i) {
            const RingElement v = c.evaluate(face(i, x));
            if (v.is_zero()) continue;
            total = (i % 2 == 0) ? ring.add(total, v) : ring.sub(total, v);
        }
        if (!total.is_zero()) out.set(x, total);
    }
    return out;
}

bool is_cocycle(const Cochain& c, const SimplicialComplex& K) {
    return coboundary(c, K).is_zero();
}

}  // namespace cupn
