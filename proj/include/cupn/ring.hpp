#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cupn {

using Integer = boost::multiprecision::cpp_int;

/// An element of a coefficient ring, always stored in canonical form.
///
/// For Z/M the value is the residue in [0, M); for Z it is the integer
/// itself. Elements carry no ring tag; arithmetic goes through Ring.
class RingElement {
public:
    RingElement() = default;

    const Integer& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    std::string to_string() const { return value_.str(); }

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    friend class Ring;
    explicit RingElement(Integer v) : value_(std::move(v)) {}

    Integer value_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& e);

/// Commutative ring with unit: the integers or the integers modulo M >= 2.
class Ring {
public:
    enum class Kind { Integers, IntegersMod };

    /// Defaults to Z.
    Ring() = default;

    static Ring integers() { return Ring(); }
    /// Throws ValidationError if modulus < 2.
    static Ring integers_mod(std::int64_t modulus);
    static Ring z2() { return integers_mod(2); }

    Kind kind() const { return kind_; }
    std::int64_t modulus() const { return modulus_; }
    bool is_z2() const { return kind_ == Kind::IntegersMod && modulus_ == 2; }

    RingElement zero() const { return RingElement(); }
    RingElement one() const { return RingElement(Integer(1)); }
    RingElement from_integer(const Integer& v) const;
    RingElement from_int(long long v) const { return from_integer(Integer(v)); }

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;

    /// "Z", "Z2" or "Z/M".
    std::string name() const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    Ring(Kind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_ = Kind::Integers;
    std::int64_t modulus_ = 0;
};

}  // namespace cupn
