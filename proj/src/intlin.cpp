#include "heawood/intlin.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "heawood/error.hpp"

namespace heawood {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::ShapeError, "ragged initializer");
        for (long v : r) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorKind::ShapeError, "ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
    }
    return m;
}

std::vector<Integer> IntMatrix::left_multiply(std::span<const Integer> v) const {
    if (v.size() != rows_) throw Error(ErrorKind::ShapeError, "vector length does not match row count");
    std::vector<Integer> out(cols_, Integer(0));
    for (std::size_t r = 0; r < rows_; ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < cols_; ++c) out[c] += v[r] * (*this)(r, c);
    }
    return out;
}

IntMatrix IntMatrix::with_row(std::span<const Integer> extra) const {
    if (extra.size() != cols_) throw Error(ErrorKind::ShapeError, "appended row has wrong length");
    IntMatrix m(rows_ + 1, cols_);
    std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
    std::copy(extra.begin(), extra.end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(rows_ * cols_));
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeError, "incompatible shapes in product");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ';';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << m(r, c);
        }
    }
    return os << ']';
}

std::vector<Integer> SnfResult::diagonal() const {
    std::vector<Integer> d;
    const std::size_t n = std::min(s.rows(), s.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(s(i, i));
    return d;
}

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    for (const auto& x : diagonal())
        if (x != 0) ++r;
    return r;
}

std::vector<Integer> to_integers(std::span<const std::int64_t> v) {
    std::vector<Integer> out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

IntMatrix build_mk(std::span<const std::int64_t> k) {
    const std::size_t n = k.size();
    if (n < 2) throw Error(ErrorKind::InvalidSignature, "signature needs at least two entries");
    for (auto ki : k)
        if (ki < 0) throw Error(ErrorKind::InvalidSignature, "signature entries must be nonnegative");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = (i + 1) % n;
        m(i, i) = static_cast<long>(k[i] + 1);
        m(i, next) = -static_cast<long>(k[next]);
    }
    return m;
}

Integer det(const IntMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeError, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
            if (swap_with == n) return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Integer closed_form_dk(std::span<const std::int64_t> k) {
    Integer plus_one = 1;
    Integer plain = 1;
    for (auto ki : k) {
        plus_one *= static_cast<long>(ki + 1);
        plain *= static_cast<long>(ki);
    }
    return plus_one - plain;
}

namespace {

// Smallest nonzero |entry| within rows [r0, rows) x cols [c0, cols).
std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(const IntMatrix& a, std::size_t r0,
                                                                    std::size_t c0) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = r0; i < a.rows(); ++i)
        for (std::size_t j = c0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Integer v = abs(a(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = v;
            }
        }
    return best;
}

Integer trunc_quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& s = res.s;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    const std::size_t n = std::min(m.rows(), m.cols());

    auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
        s.swap_rows(t, i);
        u.swap_rows(t, i);
        s.swap_cols(t, j);
        v.swap_cols(t, j);
    };

    for (std::size_t t = 0; t < n; ++t) {
        auto pos = smallest_nonzero(s, t, t);
        if (!pos) break;
        move_to_pivot(t, pos->first, pos->second);

        for (;;) {
            bool cleared = true;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0) continue;
                Integer q = -trunc_quotient(s(i, t), s(t, t));
                s.add_row_multiple(i, t, q);
                u.add_row_multiple(i, t, q);
                if (s(i, t) != 0) cleared = false;
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0) continue;
                Integer q = -trunc_quotient(s(t, j), s(t, t));
                s.add_col_multiple(j, t, q);
                v.add_col_multiple(j, t, q);
                if (s(t, j) != 0) cleared = false;
            }
            if (!cleared) {
                // A remainder smaller than the pivot survived; promote the
                // smallest entry of the pivot row/column and go again.
                std::size_t bi = t, bj = t;
                Integer best = abs(s(t, t));
                for (std::size_t i = t + 1; i < s.rows(); ++i)
                    if (s(i, t) != 0 && abs(s(i, t)) < best) {
                        best = abs(s(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < s.cols(); ++j)
                    if (s(t, j) != 0 && abs(s(t, j)) < best) {
                        best = abs(s(t, j));
                        bi = t;
                        bj = j;
                    }
                move_to_pivot(t, bi, bj);
                continue;
            }
            // Pivot row and column are clear; enforce divisibility of the rest.
            std::optional<std::size_t> offending_row;
            for (std::size_t i = t + 1; i < s.rows() && !offending_row; ++i)
                for (std::size_t j = t + 1; j < s.cols(); ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        offending_row = i;
                        break;
                    }
            if (!offending_row) break;
            s.add_row_multiple(t, *offending_row, 1);
            u.add_row_multiple(t, *offending_row, 1);
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t r = pivot_row; r < a.rows(); ++r)
                if (a(r, c) != 0 && (!best || abs(a(r, c)) < abs(a(*best, c)))) best = r;
            if (!best) break;
            a.swap_rows(pivot_row, *best);
            bool others_zero = true;
            for (std::size_t r = pivot_row + 1; r < a.rows(); ++r) {
                if (a(r, c) == 0) continue;
                a.add_row_multiple(r, pivot_row, -floor_quotient(a(r, c), a(pivot_row, c)));
                if (a(r, c) != 0) others_zero = false;
            }
            if (others_zero) break;
        }
        if (a(pivot_row, c) == 0) continue;
        if (a(pivot_row, c) < 0) a.negate_row(pivot_row);
        for (std::size_t r = 0; r < pivot_row; ++r)
            a.add_row_multiple(r, pivot_row, -floor_quotient(a(r, c), a(pivot_row, c)));
        ++pivot_row;
    }
    IntMatrix out(pivot_row, a.cols());
    for (std::size_t r = 0; r < pivot_row; ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    return out;
}

bool integer_span_contains(const IntMatrix& rows, std::span<const Integer> target) {
    if (target.size() != rows.cols())
        throw Error(ErrorKind::ShapeError, "target length does not match column count");
    // x * rows = t  <=>  y * S = t * V with y = x * U^{-1}.
    const SnfResult snf = smith_normal_form(rows);
    std::vector<Integer> tv(rows.cols(), Integer(0));
    for (std::size_t j = 0; j < rows.cols(); ++j)
        for (std::size_t i = 0; i < rows.cols(); ++i) tv[j] += target[i] * snf.v(i, j);
    const auto diag = snf.diagonal();
    for (std::size_t j = 0; j < tv.size(); ++j) {
        const Integer pivot = j < diag.size() ? diag[j] : Integer(0);
        if (pivot == 0) {
            if (tv[j] != 0) return false;
        } else if (tv[j] % pivot != 0) {
            return false;
        }
    }
    return true;
}

bool integer_span_contains(const IntMatrix& rows, std::span<const std::int64_t> target) {
    const auto t = to_integers(target);
    return integer_span_contains(rows, std::span<const Integer>(t));
}

}  // namespace heawood
