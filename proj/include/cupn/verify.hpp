#pragma once

#include "cupn/chain.hpp"
#include "cupn/complex.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cupn {

/// Dense matrix over Z_2 with rows packed into 64-bit words.
class Mod2Matrix {
public:
    Mod2Matrix() = default;
    Mod2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c);

    std::size_t row_weight(std::size_t r) const;

    Mod2Matrix transpose() const;
    Mod2Matrix operator*(const Mod2Matrix& rhs) const;
    bool is_zero() const;

    /// Rank by Gaussian elimination with first-nonzero pivoting.
    std::size_t rank() const;

    /// Basis of {v : M v = 0}, each vector of length cols().
    std::vector<std::vector<bool>> nullspace() const;

    /// True iff v (length rows()) is a combination of the columns.
    bool in_column_space(const std::vector<bool>& v) const;

    friend bool operator==(const Mod2Matrix&, const Mod2Matrix&) = default;

private:
    std::size_t words_per_row() const { return (cols_ + 63) / 64; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Matrix of δ^p over Z_2: row i is a (p+1)-simplex, column j a p-simplex,
/// entry 1 iff the column simplex is a face of the row simplex. Both bases
/// are lexicographic.
Mod2Matrix coboundary_matrix(const SimplicialComplex& K, int p);

/// Coefficient vector of c in the lexicographic basis of its degree.
/// Throws SupportNotInComplex.
std::vector<bool> mod2_vector(const Cochain& c, const SimplicialComplex& K);

/// Cochain over Z_2 from a coefficient vector in the lexicographic basis.
Cochain mod2_cochain(const std::vector<bool>& v, int degree, const SimplicialComplex& K);

/// True iff c = δc' for some c' over Z_2. Throws RingMismatch unless c is
/// over Z_2, SupportNotInComplex.
bool is_coboundary_mod2(const Cochain& c, const SimplicialComplex& K);

/// dim Ker δ^n - rank δ^{n-1} over Z_2.
std::size_t betti_mod2(const SimplicialComplex& K, int n);

/// Cocycles whose classes form a basis of H^n(K; Z_2).
std::vector<Cochain> cohomology_basis_mod2(const SimplicialComplex& K, int n);

}  // namespace cupn
