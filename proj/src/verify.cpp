#include "cupn/verify.hpp"

#include "cupn/error.hpp"

#include <bit>

namespace cupn {

namespace {

using Row = std::vector<std::uint64_t>;

bool test_bit(const Row& row, std::size_t c) { return (row[c / 64] >> (c % 64)) & 1U; }

void xor_into(Row& dst, const Row& src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

std::size_t lowest_bit(const Row& row) {
    for (std::size_t w = 0; w < row.size(); ++w) {
        if (row[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
    }
    return static_cast<std::size_t>(-1);
}

Row pack(const std::vector<bool>& v) {
    Row row((v.size() + 63) / 64, 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k]) row[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    return row;
}

// Echelon basis of a span; every stored row has a distinct lowest set bit.
class Echelon {
public:
    explicit Echelon(std::size_t width) : pivot_row_(width, npos) {}

    /// Reduces v in place; returns true if it ends up zero.
    bool reduce(Row& v) const {
        for (;;) {
            const std::size_t p = lowest_bit(v);
            if (p == npos) return true;
            if (pivot_row_[p] == npos) return false;
            xor_into(v, rows_[pivot_row_[p]]);
        }
    }

    /// Adds v to the span; returns true if it was independent.
    bool insert(Row v) {
        if (reduce(v)) return false;
        pivot_row_[lowest_bit(v)] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_row_;
    std::vector<Row> rows_;
};

}  // namespace

Mod2Matrix::Mod2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

bool Mod2Matrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_per_row() + c / 64] >> (c % 64)) & 1U;
}

void Mod2Matrix::set(std::size_t r, std::size_t c, bool value) {
    auto& word = bits_[r * words_per_row() + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    word = value ? (word | mask) : (word & ~mask);
}

void Mod2Matrix::flip(std::size_t r, std::size_t c) {
    bits_[r * words_per_row() + c / 64] ^= std::uint64_t{1} << (c % 64);
}

std::size_t Mod2Matrix::row_weight(std::size_t r) const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_per_row(); ++w) {
        total += static_cast<std::size_t>(std::popcount(bits_[r * words_per_row() + w]));
    }
    return total;
}

Mod2Matrix Mod2Matrix::transpose() const {
    Mod2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r);
        }
    }
    return t;
}

Mod2Matrix Mod2Matrix::operator*(const Mod2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix shapes do not compose");
    Mod2Matrix out(rows_, rhs.cols_);
    const std::size_t wr = rhs.words_per_row();
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!get(r, k)) continue;
            for (std::size_t w = 0; w < wr; ++w) {
                out.bits_[r * wr + w] ^= rhs.bits_[k * wr + w];
            }
        }
    }
    return out;
}

bool Mod2Matrix::is_zero() const {
    for (auto w : bits_) {
        if (w) return false;
    }
    return true;
}

std::size_t Mod2Matrix::rank() const {
    Echelon e(cols_);
    const std::size_t wr = words_per_row();
    for (std::size_t r = 0; r < rows_; ++r) {
        e.insert(Row(bits_.begin() + static_cast<std::ptrdiff_t>(r * wr),
                     bits_.begin() + static_cast<std::ptrdiff_t>((r + 1) * wr)));
    }
    return e.rank();
}

std::vector<std::vector<bool>> Mod2Matrix::nullspace() const {
    // Reduced row echelon form, then one basis vector per free column.
    const std::size_t wr = words_per_row();
    std::vector<Row> rows;
    for (std::size_t r = 0; r < rows_; ++r) {
        rows.emplace_back(bits_.begin() + static_cast<std::ptrdiff_t>(r * wr),
                          bits_.begin() + static_cast<std::ptrdiff_t>((r + 1) * wr));
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_ && next < rows.size(); ++c) {
        std::size_t pick = next;
        while (pick < rows.size() && !test_bit(rows[pick], c)) ++pick;
        if (pick == rows.size()) continue;
        std::swap(rows[next], rows[pick]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && test_bit(rows[r], c)) xor_into(rows[r], rows[next]);
        }
        pivot_cols.push_back(c);
        ++next;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<bool>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<bool> v(cols_, false);
        v[f] = true;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
            if (test_bit(rows[k], f)) v[pivot_cols[k]] = true;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Mod2Matrix::in_column_space(const std::vector<bool>& v) const {
    if (v.size() != rows_) throw DimensionMismatch("vector length does not match matrix rows");
    const Mod2Matrix t = transpose();
    Echelon e(rows_);
    const std::size_t wr = t.words_per_row();
    for (std::size_t r = 0; r < t.rows_; ++r) {
        e.insert(Row(t.bits_.begin() + static_cast<std::ptrdiff_t>(r * wr),
                     t.bits_.begin() + static_cast<std::ptrdiff_t>((r + 1) * wr)));
    }
    Row target = pack(v);
    target.resize(wr, 0);
    return e.reduce(target);
}

Mod2Matrix coboundary_matrix(const SimplicialComplex& K, int p) {
    const auto rows = K.simplices_of_dim(p + 1);
    const auto cols = K.simplices_of_dim(p);
    Mod2Matrix M(rows.size(), cols.size());
    if (p < 0) return M;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            M.set(r, *K.index_of(face(i, rows[r])));
        }
    }
    return M;
}

std::vector<bool> mod2_vector(const Cochain& c, const SimplicialComplex& K) {
    require_support_in(c, K);
    std::vector<bool> v(K.simplices_of_dim(c.degree()).size(), false);
    for (const auto& [x, value] : c.support()) {
        if (value.value() % 2 != 0) v[*K.index_of(x)] = true;
    }
    return v;
}

Cochain mod2_cochain(const std::vector<bool>& v, int degree, const SimplicialComplex& K) {
    const auto basis = K.simplices_of_dim(degree);
    if (v.size() != basis.size()) throw DimensionMismatch("vector length does not match basis");
    const Ring z2 = Ring::z2();
    Cochain c(degree, z2);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k]) c.set(basis[k], z2.one());
    }
    return c;
}

bool is_coboundary_mod2(const Cochain& c, const SimplicialComplex& K) {
    if (!c.ring().is_z2()) {
        throw RingMismatch("coboundary membership is decided over Z2, got " + c.ring().name());
    }
    const auto v = mod2_vector(c, K);
    return coboundary_matrix(K, c.degree() - 1).in_column_space(v);
}

std::size_t betti_mod2(const SimplicialComplex& K, int n) {
    const std::size_t simplices = K.simplices_of_dim(n).size();
    return simplices - coboundary_matrix(K, n).rank() - coboundary_matrix(K, n - 1).rank();
}

std::vector<Cochain> cohomology_basis_mod2(const SimplicialComplex& K, int n) {
    const std::size_t width = K.simplices_of_dim(n).size();
    const Mod2Matrix image = coboundary_matrix(K, n - 1);
    Echelon span(width);
    const Mod2Matrix columns = image.transpose();
    for (std::size_t r = 0; r < columns.rows(); ++r) {
        std::vector<bool> v(width);
        for (std::size_t k = 0; k < width; ++k) v[k] = columns.get(r, k);
        span.insert(pack(v));
    }
    std::vector<Cochain> basis;
    for (const auto& z : coboundary_matrix(K, n).nullspace()) {
        if (span.insert(pack(z))) basis.push_back(mod2_cochain(z, n, K));
    }
    return basis;
}

}  // namespace cupn
