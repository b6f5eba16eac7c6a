#include "qrep/modp.hpp"

#include <algorithm>

namespace qrep {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> first_primes(int k) {
    std::vector<uint32_t> out;
    for (uint32_t n = 2; static_cast<int>(out.size()) < k; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

PrimeField::PrimeField(uint32_t prime) : p(prime) {
    if (!is_prime(prime)) throw precondition_error(std::to_string(prime) + " is not prime");
    if (prime > 251) throw precondition_error("prime too large for byte-packed matrices");
    inv.assign(p, 0);
    for (uint32_t a = 1; a < p; ++a) {
        // Fermat: a^(p-2) mod p.
        uint64_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        inv[a] = static_cast<uint32_t>(r);
    }
}

MatModP MatModP::identity(int n) {
    MatModP m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatModP MatModP::mul(const MatModP& other, const PrimeField& f) const {
    if (cols_ != other.rows_) throw dimension_mismatch("matrix product shape mismatch");
    MatModP r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint32_t a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < other.cols_; ++j) {
                uint32_t v = r.at(i, j) + a * other.at(k, j) % f.p;
                r.at(i, j) = static_cast<uint8_t>(v >= f.p ? v - f.p : v);
            }
        }
    return r;
}

std::vector<uint8_t> MatModP::apply(const std::vector<uint8_t>& x, const PrimeField& f) const {
    if (static_cast<int>(x.size()) != cols_) throw dimension_mismatch("matrix-vector shape mismatch");
    std::vector<uint8_t> y(static_cast<size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i) {
        uint32_t acc = 0;
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * x[static_cast<size_t>(j)] % f.p;
        y[static_cast<size_t>(i)] = static_cast<uint8_t>(acc % f.p);
    }
    return y;
}

MatModP MatModP::vstack(const MatModP& top, const MatModP& bottom) {
    if (top.cols_ != bottom.cols_ && top.rows_ != 0 && bottom.rows_ != 0)
        throw dimension_mismatch("vstack column mismatch");
    int cols = top.rows_ != 0 ? top.cols_ : bottom.cols_;
    MatModP r(top.rows_ + bottom.rows_, cols);
    std::copy(top.a_.begin(), top.a_.end(), r.a_.begin());
    std::copy(bottom.a_.begin(), bottom.a_.end(), r.a_.begin() + static_cast<long>(top.a_.size()));
    return r;
}

MatModP MatModP::hstack(const MatModP& left, const MatModP& right) {
    if (left.rows_ != right.rows_) throw dimension_mismatch("hstack row mismatch");
    MatModP r(left.rows_, left.cols_ + right.cols_);
    for (int i = 0; i < left.rows_; ++i) {
        for (int j = 0; j < left.cols_; ++j) r.at(i, j) = left.at(i, j);
        for (int j = 0; j < right.cols_; ++j) r.at(i, left.cols_ + j) = right.at(i, j);
    }
    return r;
}

int rank_f2(const MatModP& m) {
    if (m.cols() > 64) throw precondition_error("rank_f2 supports up to 64 columns");
    // Pack rows into words and eliminate.
    uint64_t basis[64] = {0};
    int rank = 0;
    for (int i = 0; i < m.rows(); ++i) {
        uint64_t row = 0;
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) row |= uint64_t(1) << j;
        while (row) {
            int bit = __builtin_ctzll(row);
            if (basis[bit]) {
                row ^= basis[bit];
            } else {
                basis[bit] = row;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

int MatModP::rank(const PrimeField& f) const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (f.p == 2 && cols_ <= 64) return rank_f2(*this);
    MatModP m(*this);
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (m.at(r, col)) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = col; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        uint32_t inv = f.inv[m.at(rank, col)];
        for (int r = rank + 1; r < rows_; ++r) {
            uint32_t factor = m.at(r, col) * inv % f.p;
            if (!factor) continue;
            for (int j = col; j < cols_; ++j) {
                uint32_t v = m.at(r, j) + (f.p - factor) * m.at(rank, j) % f.p;
                m.at(r, j) = static_cast<uint8_t>(v % f.p);
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<int> MatModP::rref_in_place(const PrimeField& f) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r)
            if (at(r, col)) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
        uint32_t inv = f.inv[at(row, col)];
        for (int j = 0; j < cols_; ++j)
            at(row, j) = static_cast<uint8_t>(at(row, j) * inv % f.p);
        for (int r = 0; r < rows_; ++r) {
            if (r == row) continue;
            uint32_t factor = at(r, col);
            if (!factor) continue;
            for (int j = 0; j < cols_; ++j) {
                uint32_t v = at(r, j) + (f.p - factor) * at(row, j) % f.p;
                at(r, j) = static_cast<uint8_t>(v % f.p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    // Drop zero rows.
    rows_ = static_cast<int>(pivots.size());
    a_.resize(static_cast<size_t>(rows_) * cols_);
    return pivots;
}

MatModP MatModP::nullspace(const PrimeField& f) const {
    MatModP m(*this);
    std::vector<int> pivots = m.rref_in_place(f);
    std::vector<char> is_pivot(static_cast<size_t>(cols_), 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    int free_count = cols_ - static_cast<int>(pivots.size());
    MatModP basis(free_count, cols_);
    int row = 0;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        // Kernel vector with a 1 in free column c: pivot entries solve
        // row_i . x = 0, giving x[pivot_i] = -m[i][c].
        basis.at(row, c) = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            basis.at(row, pivots[static_cast<size_t>(i)]) = static_cast<uint8_t>(f.neg(m.at(static_cast<int>(i), c)));
        ++row;
    }
    basis.rref_in_place(f);
    return basis;
}

std::vector<MatModP> enumerate_subspaces(int dim, const PrimeField& f) {
    std::vector<MatModP> out;
    // RREF matrices are parameterized by the pivot column set plus the free
    // entries: positions strictly right of the row's pivot in non-pivot
    // columns.
    for (int r = 0; r <= dim; ++r) {
        std::vector<int> pivots(static_cast<size_t>(r));
        // Iterate over all r-subsets of columns as pivot sets.
        auto combos = [&](auto&& self, int start, int k) -> void {
            if (k == r) {
                std::vector<char> is_pivot(static_cast<size_t>(dim), 0);
                for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
                std::vector<std::pair<int, int>> free_pos;   // (row, col)
                for (int i = 0; i < r; ++i)
                    for (int c = pivots[static_cast<size_t>(i)] + 1; c < dim; ++c)
                        if (!is_pivot[static_cast<size_t>(c)]) free_pos.emplace_back(i, c);
                std::vector<uint8_t> fill(free_pos.size(), 0);
                while (true) {
                    MatModP m(r, dim);
                    for (int i = 0; i < r; ++i) m.at(i, pivots[static_cast<size_t>(i)]) = 1;
                    for (size_t t = 0; t < free_pos.size(); ++t)
                        m.at(free_pos[t].first, free_pos[t].second) = fill[t];
                    out.push_back(std::move(m));
                    // Base-p odometer over free entries.
                    size_t t = 0;
                    while (t < fill.size() && ++fill[t] == f.p) fill[t++] = 0;
                    if (t == fill.size()) break;
                }
                return;
            }
            for (int c = start; c < dim; ++c) {
                pivots[static_cast<size_t>(k)] = c;
                self(self, c + 1, k + 1);
            }
        };
        if (r == 0) {
            out.emplace_back(0, dim);
        } else {
            combos(combos, 0, 0);
        }
    }
    return out;
}

} // namespace qrep
