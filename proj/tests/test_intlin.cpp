#include <doctest.h>

#include <random>

#include "heawood/error.hpp"
#include "heawood/intlin.hpp"
#include "oracles.hpp"

using namespace heawood;

namespace {

oracle::Mat to_mat(const IntMatrix& m) {
    oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_si();
    return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

void check_snf(const IntMatrix& m) {
    const SnfResult snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.s);
    CHECK(abs(det(snf.u)) == 1);
    CHECK(abs(det(snf.v)) == 1);
    for (std::size_t r = 0; r < snf.s.rows(); ++r)
        for (std::size_t c = 0; c < snf.s.cols(); ++c)
            if (r != c) CHECK(snf.s(r, c) == 0);
    const auto diag = snf.diagonal();
    bool seen_zero = false;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] == 0) {
            seen_zero = true;
            continue;
        }
        CHECK_FALSE(seen_zero);
        if (i + 1 < diag.size() && diag[i + 1] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    }
    if (m.is_square()) {
        Integer prod = 1;
        for (const auto& x : diag) prod *= x;
        CHECK(prod == abs(det(m)));
    }
}

}  // namespace

TEST_CASE("build_mk matches the banded pattern") {
    const std::vector<std::int64_t> k111{1, 1, 1};
    CHECK(build_mk(k111) == IntMatrix{{2, -1, 0}, {0, 2, -1}, {-1, 0, 2}});
    const std::vector<std::int64_t> k232{2, 3, 2};
    CHECK(build_mk(k232) == IntMatrix{{3, -3, 0}, {0, 4, -2}, {-2, 0, 3}});
    const std::vector<std::int64_t> k1111{1, 1, 1, 1};
    CHECK(build_mk(k1111) == IntMatrix{{2, -1, 0, 0}, {0, 2, -1, 0}, {0, 0, 2, -1}, {-1, 0, 0, 2}});
    const std::vector<std::int64_t> short_k{3};
    CHECK_THROWS_AS(build_mk(short_k), Error);
}

TEST_CASE("determinants") {
    const std::vector<std::int64_t> k111{1, 1, 1}, k223{2, 2, 3};
    CHECK(det(build_mk(k111)) == 7);
    CHECK(det(build_mk(k223)) == 24);
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
    try {
        det(IntMatrix(2, 3));
        FAIL("expected shape error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ShapeError);
    }
}

TEST_CASE("closed form D_k examples") {
    CHECK(closed_form_dk(std::vector<std::int64_t>{1, 2, 1}) == 10);
    CHECK(closed_form_dk(std::vector<std::int64_t>{3, 1, 2}) == 18);
    CHECK(closed_form_dk(std::vector<std::int64_t>{1, 1, 1, 1}) == 15);
}

TEST_CASE("det of M_k equals the closed form, cross-checked by cofactor expansion") {
    std::mt19937 rng(20260101);
    std::uniform_int_distribution<int> entry(1, 4);
    for (int d = 2; d <= 5; ++d)
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<std::int64_t> k(d + 1);
            for (auto& x : k) x = entry(rng);
            const IntMatrix m = build_mk(k);
            CHECK(det(m) == closed_form_dk(k));
            CHECK(det(m).get_si() == oracle::cofactor_det(oracle::mk(k)));
        }
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = random_matrix(rng, n, n, -6, 6);
        CHECK(det(m).get_si() == oracle::cofactor_det(to_mat(m)));
    }
}

TEST_CASE("smith normal form examples") {
    check_snf(IntMatrix::identity(3));
    const SnfResult id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.s == IntMatrix::identity(3));

    const IntMatrix d23{{2, 0}, {0, 3}};
    const SnfResult snf = smith_normal_form(d23);
    CHECK(snf.s == IntMatrix{{1, 0}, {0, 6}});
    CHECK(snf.u * d23 * snf.v == snf.s);

    const std::vector<std::int64_t> k111{1, 1, 1};
    const auto diag = smith_normal_form(build_mk(k111)).diagonal();
    CHECK(diag[0] * diag[1] * diag[2] == 7);
}

TEST_CASE("smith normal form invariants on random matrices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + trial % 5;
        const std::size_t cols = 1 + (trial / 5) % 5;
        check_snf(random_matrix(rng, rows, cols, -9, 9));
    }
    check_snf(IntMatrix(3, 2));
    check_snf(IntMatrix{{4, 6}, {6, 9}});
}

TEST_CASE("hermite normal form spans the same lattice") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = random_matrix(rng, 4, 3, -5, 5);
        const IntMatrix h = hermite_normal_form(m);
        for (std::size_t r = 0; r < m.rows(); ++r) CHECK(integer_span_contains(h, m.row(r)));
        for (std::size_t r = 0; r < h.rows(); ++r) CHECK(integer_span_contains(m, h.row(r)));
    }
}

TEST_CASE("integer span membership") {
    const std::vector<std::int64_t> k232{2, 3, 2}, k111{1, 1, 1};
    CHECK(integer_span_contains(build_mk(k232), std::vector<std::int64_t>{3, -3, 0}));
    CHECK(integer_span_contains(build_mk(k111), std::vector<std::int64_t>{1, 1, 1}));
    const IntMatrix pappus{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}};
    CHECK_FALSE(integer_span_contains(pappus, std::vector<std::int64_t>{1, 1, 1}));
    CHECK_THROWS_AS(integer_span_contains(pappus, std::vector<std::int64_t>{1, 1}), Error);
}

TEST_CASE("random integer combinations of rows are in the span") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coef(-7, 7);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = random_matrix(rng, 3, 4, -5, 5);
        std::vector<Integer> x(3);
        for (auto& c : x) c = coef(rng);
        const auto target = m.left_multiply(x);
        CHECK(integer_span_contains(m, std::span<const Integer>(target)));
        for (std::size_t r = 0; r < m.rows(); ++r) CHECK(integer_span_contains(m, m.row(r)));
    }
}
