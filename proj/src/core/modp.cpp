#include "entriv/core/modp.hpp"

#include "entriv/error.hpp"
#include "entriv/kernels/kernels.hpp"

#include <algorithm>

namespace entriv {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

std::size_t rank_gf2(const IntMatrix& m)
{
    Gf2Matrix g(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (mpz_odd_p(m(r, c).get_mpz_t()))
                g.set(r, c, true);
    return g.rank();
}

} // namespace

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p)
{
    if (p < 2)
        throw InvalidInput("rank_mod_p needs a prime");
    if (p == 2)
        return rank_gf2(m);

    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint32_t> a(rows * cols);
    Integer pz(p), tmp;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_fdiv_r(tmp.get_mpz_t(), m(r, c).get_mpz_t(), pz.get_mpz_t());
            a[r * cols + c] = static_cast<std::uint32_t>(tmp.get_ui());
        }
    auto row = [&](std::size_t r) { return std::span<std::uint32_t>(a.data() + r * cols, cols); };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            std::swap_ranges(row(piv).begin(), row(piv).end(), row(rank).begin());
        kernels::scale_mod(row(rank), inverse_mod(a[rank * cols + c], p), p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint32_t x = a[r * cols + c];
            if (x != 0)
                kernels::axpy_mod(row(r), row(rank), p - x, p);
        }
        ++rank;
    }
    return rank;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0)
{
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1u; }

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value)
{
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    if (value)
        row(r)[c / 64] |= bit;
    else
        row(r)[c / 64] &= ~bit;
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }

void Gf2Matrix::add_row(std::size_t dst, std::size_t src)
{
    kernels::xor_words(std::span<std::uint64_t>(row(dst), words_), std::span<const std::uint64_t>(row(src), words_));
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a != b)
        std::swap_ranges(row(a), row(a) + words_, row(b));
}

std::size_t Gf2Matrix::rank() const
{
    Gf2Matrix copy = *this;
    return copy.reduce().size();
}

std::vector<std::size_t> Gf2Matrix::reduce()
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && !get(piv, c))
            ++piv;
        if (piv == rows_)
            continue;
        swap_rows(r, piv);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && get(i, c))
                add_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Gf2Matrix Gf2Matrix::null_space() const
{
    Gf2Matrix e = *this;
    const auto pivots = e.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    Gf2Matrix out(cols_ - pivots.size(), cols_);
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        out.set(k, f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (e.get(i, f))
                out.set(k, pivots[i], true);
        ++k;
    }
    return out;
}

Gf2Matrix Gf2Matrix::transpose() const
{
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw InvalidInput("GF(2) product shape mismatch");
    Gf2Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.get(i, k))
                kernels::xor_words(std::span<std::uint64_t>(out.row(i), out.words_),
                                   std::span<const std::uint64_t>(b.row(k), b.words_));
    return out;
}

bool Gf2Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

} // namespace entriv
