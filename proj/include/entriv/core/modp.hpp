#pragma once

#include "entriv/core/int_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace entriv {

// Rank of m reduced mod p. Uses the bit-packed GF(2) path for p = 2 and the
// dispatched row-axpy kernel otherwise.
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

// Dense matrix over F_2 with rows packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

    // row[dst] ^= row[src]
    void add_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t rank() const;
    // In-place reduced row echelon form; returns the pivot column of each
    // nonzero row, in order. Zero rows end up at the bottom.
    std::vector<std::size_t> reduce();
    // Basis of the null space {v : M v = 0}, as rows of a matrix with cols() columns.
    Gf2Matrix null_space() const;

    Gf2Matrix transpose() const;
    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
    bool is_zero() const;
    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

} // namespace entriv
