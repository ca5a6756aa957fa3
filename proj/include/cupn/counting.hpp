#pragma once

#include "cupn/ring.hpp"

#include <string>
#include <vector>

namespace cupn {

/// binomial(top, bottom); zero when bottom < 0, top < 0 or bottom > top.
Integer binomial(long long top, long long bottom);

/// Summands in the unrestricted formula: binomial(m+1, n+1), m = p+q-n.
Integer count_oracle(long long p, long long q, long long n);

/// Summands in the restricted formula:
/// binomial(q - ⌊(n+1)/2⌋, ⌊n/2⌋) · binomial(p - ⌊n/2⌋, ⌊(n+1)/2⌋),
/// zero when n > min(p, q).
Integer count_bounded(long long p, long long q, long long n);

/// Summands for Sq^i on a j-cochain:
/// binomial(⌊m/2⌋, ⌊n/2⌋) · binomial(⌊(m+1)/2⌋, ⌊(n+1)/2⌋), m = i+j, n = j-i.
Integer count_sq(long long i, long long j);

struct CountRow {
    std::string label;  // e.g. "c_3 cup_2 c_4"
    long long p;
    long long n;
    long long q;
    Integer full;
    Integer bounded;
};

/// The eight benchmark products c_p ⌣_n c_q with both counts computed.
std::vector<CountRow> table1();

}  // namespace cupn
