#pragma once

#include <cstdint>
#include <vector>

#include "qrep/errors.hpp"

namespace qrep {

/// Prime field context: modulus plus a table of multiplicative inverses.
/// Primality is checked at construction.
struct PrimeField {
    explicit PrimeField(uint32_t prime);
    uint32_t p;
    std::vector<uint32_t> inv;   // inv[a] for 1 <= a < p; inv[0] unused

    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
};

bool is_prime(uint32_t n);
/// First k primes, ascending.
std::vector<uint32_t> first_primes(int k);

/// Dense row-major matrix over F_p, entries in [0, p). Shapes with zero
/// rows or columns are valid (empty maps show up constantly: arrows in or
/// out of a zero space).
class MatModP {
public:
    MatModP() = default;
    MatModP(int rows, int cols) : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

    static MatModP identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint8_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    uint8_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const std::vector<uint8_t>& data() const { return a_; }
    std::vector<uint8_t>& data() { return a_; }

    bool operator==(const MatModP&) const = default;

    /// this * other (mod p).
    MatModP mul(const MatModP& other, const PrimeField& f) const;
    /// this * column vector.
    std::vector<uint8_t> apply(const std::vector<uint8_t>& x, const PrimeField& f) const;

    /// Vertically stack rows of `top` over rows of `bottom` (equal cols).
    static MatModP vstack(const MatModP& top, const MatModP& bottom);
    /// Horizontal concatenation (equal rows).
    static MatModP hstack(const MatModP& left, const MatModP& right);

    int rank(const PrimeField& f) const;
    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref_in_place(const PrimeField& f);
    /// Rows spanning the kernel of this matrix (as RREF basis of the
    /// nullspace, one row per free column).
    MatModP nullspace(const PrimeField& f) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<uint8_t> a_;
};

/// Rank via bit-packed elimination, p = 2 only; used transparently by
/// MatModP::rank and exposed for tests to compare against the generic path.
int rank_f2(const MatModP& m);

/// All subspaces of F_p^dim as RREF basis matrices (rows = subspace dim),
/// every rank from 0 to dim. Canonical: one matrix per subspace.
std::vector<MatModP> enumerate_subspaces(int dim, const PrimeField& f);

} // namespace qrep
