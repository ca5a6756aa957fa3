#include "cupn/ring.hpp"

#include "cupn/error.hpp"

#include <ostream>

namespace cupn {

std::ostream& operator<<(std::ostream& os, const RingElement& e) { return os << e.value(); }

Ring Ring::integers_mod(std::int64_t modulus) {
    if (modulus < 2) {
        throw ValidationError("modulus must be at least 2, got " + std::to_string(modulus));
    }
    return Ring(Kind::IntegersMod, modulus);
}

RingElement Ring::from_integer(const Integer& v) const {
    if (kind_ == Kind::Integers) return RingElement(v);
    Integer r = v % modulus_;
    if (r < 0) r += modulus_;
    return RingElement(std::move(r));
}

RingElement Ring::add(const RingElement& a, const RingElement& b) const {
    if (kind_ == Kind::Integers) return RingElement(a.value_ + b.value_);
    Integer r = a.value_ + b.value_;
    if (r >= modulus_) r -= modulus_;
    return RingElement(std::move(r));
}

RingElement Ring::sub(const RingElement& a, const RingElement& b) const {
    return add(a, neg(b));
}

RingElement Ring::mul(const RingElement& a, const RingElement& b) const {
    if (kind_ == Kind::Integers) return RingElement(a.value_ * b.value_);
    return RingElement(Integer(a.value_ * b.value_ % modulus_));
}

RingElement Ring::neg(const RingElement& a) const {
    if (kind_ == Kind::Integers) return RingElement(Integer(-a.value_));
    if (a.value_.is_zero()) return a;
    return RingElement(Integer(modulus_ - a.value_));
}

std::string Ring::name() const {
    if (kind_ == Kind::Integers) return "Z";
    if (modulus_ == 2) return "Z2";
    return "Z/" + std::to_string(modulus_);
}

}  // namespace cupn
