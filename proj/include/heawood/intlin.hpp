#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace heawood {

using Integer = mpz_class;

/// Dense row-major matrix over the integers. All arithmetic is exact.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Integer> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }

    /// Row vector times matrix.
    std::vector<Integer> left_multiply(std::span<const Integer> v) const;

    IntMatrix with_row(std::span<const Integer> extra) const;
    IntMatrix transposed() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Smith normal form with unimodular transforms: u * input * v == s.
struct SnfResult {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;

    /// Diagonal entries of s (length min(rows, cols)).
    std::vector<Integer> diagonal() const;
    std::size_t rank() const;
};

std::vector<Integer> to_integers(std::span<const std::int64_t> v);

/// The banded matrix attached to a parameter vector: diagonal k_i + 1,
/// superdiagonal -k_{i+1}, and -k_1 in the bottom-left corner.
IntMatrix build_mk(std::span<const std::int64_t> k);

/// Bareiss fraction-free determinant.
Integer det(const IntMatrix& m);

/// prod(k_i + 1) - prod(k_i)
Integer closed_form_dk(std::span<const std::int64_t> k);

SnfResult smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice: nonzero rows only, upper
/// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// True iff target is an integer combination of the rows.
bool integer_span_contains(const IntMatrix& rows, std::span<const Integer> target);
bool integer_span_contains(const IntMatrix& rows, std::span<const std::int64_t> target);

/// Floor division for signed 64-bit values.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) noexcept {
    return a - b * floor_div(a, b);
}

}  // namespace heawood
