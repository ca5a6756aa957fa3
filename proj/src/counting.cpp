#include "cupn/counting.hpp"

#include <algorithm>

namespace cupn {

Integer binomial(long long top, long long bottom) {
    if (bottom < 0 || top < 0 || bottom > top) return 0;
    bottom = std::min(bottom, top - bottom);
    Integer result = 1;
    for (long long k = 1; k <= bottom; ++k) {
        result *= top - bottom + k;
        result /= k;
    }
    return result;
}

Integer count_oracle(long long p, long long q, long long n) {
    if (n < 0) return 0;
    const long long m = p + q - n;
    return binomial(m + 1, n + 1);
}

Integer count_bounded(long long p, long long q, long long n) {
    if (n < 0 || n > p || n > q) return 0;
    return binomial(q - (n + 1) / 2, n / 2) * binomial(p - n / 2, (n + 1) / 2);
}

Integer count_sq(long long i, long long j) {
    if (i < 0 || i > j) return 0;
    const long long m = i + j;
    const long long n = j - i;
    return binomial(m / 2, n / 2) * binomial((m + 1) / 2, (n + 1) / 2);
}

std::vector<CountRow> table1() {
    struct Product {
        long long p, n, q;
    };
    static constexpr Product products[] = {
        {3, 2, 4},   {6, 5, 6},   {12, 4, 10},  {25, 5, 30},
        {60, 5, 70}, {6, 5, 700}, {60, 50, 60}, {6, 5, 7000},
    };
    std::vector<CountRow> rows;
    for (const auto& [p, n, q] : products) {
        rows.push_back(CountRow{"c_" + std::to_string(p) + " cup_" + std::to_string(n) + " c_" +
                                    std::to_string(q),
                                p, n, q, count_oracle(p, q, n), count_bounded(p, q, n)});
    }
    return rows;
}

}  // namespace cupn
