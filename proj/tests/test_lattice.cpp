#include <doctest.h>

#include <random>
#include <set>

#include "heawood/error.hpp"
#include "heawood/lattice.hpp"
#include "oracles.hpp"

using namespace heawood;

namespace {

WCoeffs wc(std::vector<std::int64_t> v) { return WCoeffs(std::move(v)); }

std::vector<std::vector<std::int64_t>> small_signatures(int max_entry, int max_d) {
    std::vector<std::vector<std::int64_t>> out;
    for (int d = 2; d <= max_d; ++d) {
        std::vector<std::int64_t> k(d + 1, 1);
        for (;;) {
            out.push_back(k);
            std::size_t i = 0;
            while (i < k.size() && k[i] == max_entry) k[i++] = 1;
            if (i == k.size()) break;
            ++k[i];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("signature parsing") {
    const auto k = KSignature::parse("1,2, 3");
    CHECK(k.dim() == 2);
    CHECK(k.to_string() == "1,2,3");
    CHECK_FALSE(k.is_delta());
    CHECK_THROWS_AS(KSignature::parse("1,0,1"), Error);
    CHECK(KSignature::parse("1,0,1", true).is_delta());
    CHECK_THROWS_AS(KSignature::parse("1,1"), Error);
    CHECK_THROWS_AS(KSignature::parse("1,x,1"), Error);
    CHECK_THROWS_AS(KSignature::parse("1,,1"), Error);
    CHECK(KSignature::parse("2,2,2").is_constant());
}

TEST_CASE("w vectors") {
    CHECK(w_vector(1, 2) == std::vector<std::int64_t>{2, -1, -1});
    CHECK(w_vector(3, 2) == std::vector<std::int64_t>{-1, -1, 2});
    CHECK(w_vector(1, 3) == std::vector<std::int64_t>{3, -1, -1, -1});
    CHECK_THROWS_AS(w_vector(0, 2), Error);
    CHECK_THROWS_AS(w_vector(4, 2), Error);
}

TEST_CASE("ambient conversions") {
    CHECK(to_ambient(wc({1, 0, 0})) == std::vector<std::int64_t>{2, -1, -1});
    CHECK(from_ambient(std::vector<std::int64_t>{2, -1, -1}) == wc({1, 0, 0}));
    CHECK(to_ambient(wc({1, 1, 1})) == std::vector<std::int64_t>{0, 0, 0});
    CHECK(from_ambient(std::vector<std::int64_t>{0, 0, 0}) == wc({0, 0, 0}));
    CHECK(wc({1, 1, 1}).is_zero());
    try {
        from_ambient(std::vector<std::int64_t>{1, 0, -1});
        FAIL("expected not-in-lattice");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInLattice);
    }
    CHECK_THROWS_AS(from_ambient(std::vector<std::int64_t>{3, 0, 0}), Error);
}

TEST_CASE("ambient round trips") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int n = 3; n <= 6; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::int64_t> raw(n);
            for (auto& x : raw) x = coef(rng);
            const WCoeffs a(raw);
            const auto v = to_ambient(a);
            CHECK(from_ambient(v) == a);
            CHECK(to_ambient(from_ambient(v)) == v);
            // Raw and canonical forms name the same ambient vector.
            std::vector<std::int64_t> direct(n, 0);
            for (int j = 0; j < n; ++j) {
                const auto w = w_vector(j + 1, n - 1);
                for (int c = 0; c < n; ++c) direct[c] += raw[j] * w[c];
            }
            CHECK(direct == v);
        }
}

TEST_CASE("sublattice membership") {
    const auto k232 = KSignature::strict({2, 3, 2});
    const auto k111 = KSignature::strict({1, 1, 1});
    CHECK(sublattice_contains(wc({3, -3, 0}), k232));
    CHECK_FALSE(sublattice_contains(wc({1, 0, 0}), k111));
    CHECK(sublattice_contains(wc({0, 0, 0}), k111));
    CHECK(sublattice_contains(wc({0, 0, 0}), k232));
    CHECK(sublattice_contains(wc({2, -1, 0}), k111));
}

TEST_CASE("reduction examples") {
    const auto k111 = KSignature::strict({1, 1, 1});
    CHECK(reduce_to_fundamental(wc({0, 0, 0}), k111).rep == wc({0, 0, 0}));
    CHECK(reduce_to_fundamental(wc({2, -1, 0}), k111).rep == wc({0, 0, 0}));
    CHECK(reduce_to_fundamental(wc({1, 0, 0}), k111).rep == wc({1, 0, 0}));
    CHECK_THROWS_AS(reduce_to_fundamental(wc({1, 0, 0, 0}), k111), Error);
}

TEST_CASE("enumeration of fundamental vectors") {
    const auto f111 = enumerate_fundamental(KSignature::strict({1, 1, 1}));
    CHECK(f111.size() == 7);
    for (const auto& c : f111) CHECK((c.rep[0] == 0 || c.rep[1] == 0 || c.rep[2] == 0));
    CHECK(std::is_sorted(f111.begin(), f111.end()));
    CHECK(enumerate_fundamental(KSignature::strict({1, 2, 1})).size() == 10);
    CHECK(enumerate_fundamental(KSignature::strict({1, 1, 1, 1})).size() == 15);
}

TEST_CASE("fundamental count equals D_k and determinant") {
    for (const auto& kv : small_signatures(3, 4)) {
        const auto k = KSignature::strict(kv);
        const auto f = enumerate_fundamental(k);
        CHECK(Integer(static_cast<long>(f.size())) == k.dk());
        CHECK(k.dk() == det(k.matrix()));
        CHECK(quotient_order_general(k.matrix()) == k.dk());
    }
}

TEST_CASE("fundamental vectors are pairwise inequivalent") {
    for (const auto& kv : small_signatures(2, 3)) {
        const auto k = KSignature::strict(kv);
        const auto m = oracle::mk(kv);
        const auto f = enumerate_fundamental(k);
        for (std::size_t s = 0; s < f.size(); ++s)
            for (std::size_t t = s + 1; t < f.size(); ++t) {
                const WCoeffs diff = f[t].rep - f[s].rep;
                CHECK_FALSE(sublattice_contains(diff, k));
                std::vector<std::int64_t> dv(diff.coeffs().begin(), diff.coeffs().end());
                CHECK_FALSE(oracle::in_row_span_square(m, dv));
            }
    }
}

TEST_CASE("reduction is idempotent and constant on sublattice orbits") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-12, 12);
    std::uniform_int_distribution<int> mult(-3, 3);
    for (const auto& kv : small_signatures(3, 3)) {
        const auto k = KSignature::strict(kv);
        const IntMatrix m = k.matrix();
        const auto mo = oracle::mk(kv);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::int64_t> raw(kv.size());
            for (auto& x : raw) x = coef(rng);
            const WCoeffs rep = reduce_to_fundamental(raw, k).rep;
            CHECK(reduce_to_fundamental(rep, k).rep == rep);
            for (std::size_t i = 0; i < kv.size(); ++i) CHECK(rep[i] <= kv[i]);
            // a - rep lies in the sublattice.
            std::vector<std::int64_t> diff(raw.size());
            for (std::size_t i = 0; i < raw.size(); ++i) diff[i] = raw[i] - rep[i];
            CHECK(oracle::in_row_span_square(mo, diff));
            for (std::size_t g = 0; g < m.rows(); ++g) {
                std::vector<std::int64_t> moved(raw);
                const int t = mult(rng);
                for (std::size_t c = 0; c < raw.size(); ++c) moved[c] += t * mo[g][c];
                CHECK(reduce_to_fundamental(moved, k).rep == rep);
            }
        }
    }
}

TEST_CASE("general quotient orders") {
    CHECK(quotient_order_general(IntMatrix{{2, -1, 0}, {0, 2, -1}, {-1, 0, 2}}) == 7);
    CHECK(quotient_order_general(IntMatrix{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}) == 9);
    CHECK(quotient_order_general(IntMatrix{{3, -1, 0}, {0, 3, -1}, {-1, 0, 3}}) == 13);
    CHECK(quotient_order_general(IntMatrix{{2, 0, -1}, {0, 2, -1}, {-1, -1, 3}}) == 8);
    CHECK(quotient_order_general(IntMatrix{{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}) == 3);
    CHECK(quotient_order_general(IntMatrix{{2, -2, 0}, {0, 2, -2}, {-2, 0, 2}}) == 12);
    try {
        quotient_order_general(IntMatrix{{1, -1, 0}});
        FAIL("expected infinite quotient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InfiniteQuotient);
    }
}

TEST_CASE("general sublattice representatives are a transversal") {
    const std::vector<IntMatrix> mats{
        IntMatrix{{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}},  IntMatrix{{2, 0, -1}, {0, 2, -1}, {-1, -1, 3}},
        IntMatrix{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}},     IntMatrix{{2, -2, 0}, {0, 2, -2}, {-2, 0, 2}},
        IntMatrix{{3, -1, 0}, {0, 3, -1}, {-1, 0, 3}},
    };
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> coef(-10, 10);
    for (const auto& m : mats) {
        const auto lat = Sublattice::from_rows(m);
        const auto reps = lat.representatives();
        CHECK(Integer(static_cast<long>(reps.size())) == lat.order());
        for (std::size_t s = 0; s < reps.size(); ++s) {
            CHECK(lat.reduce(reps[s]) == reps[s]);
            for (std::size_t t = s + 1; t < reps.size(); ++t) CHECK_FALSE(lat.contains(reps[t] - reps[s]));
        }
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::int64_t> raw(3);
            for (auto& x : raw) x = coef(rng);
            const WCoeffs r = lat.reduce(raw);
            CHECK(std::binary_search(reps.begin(), reps.end(), r));
            CHECK(lat.contains(WCoeffs(raw) - r));
        }
    }
}

TEST_CASE("signature sublattice agrees with the general one") {
    for (const auto& kv : small_signatures(2, 3)) {
        const auto k = KSignature::strict(kv);
        const auto strict = Sublattice::from_signature(k);
        const auto general = Sublattice::from_rows(k.matrix());
        CHECK(strict.uses_fundamental_vectors());
        CHECK_FALSE(general.uses_fundamental_vectors());
        CHECK(strict.order() == general.order());
        // Same partition of the representatives into classes.
        const auto reps = strict.representatives();
        std::set<WCoeffs> images;
        for (const auto& r : reps) images.insert(general.reduce(r));
        CHECK(images.size() == reps.size());
    }
}
