#include <doctest.h>

#include <random>
#include <set>

#include "heawood/error.hpp"
#include "heawood/tiling.hpp"
#include "oracles.hpp"

using namespace heawood;

namespace {

WCoeffs wc(std::vector<std::int64_t> v) { return WCoeffs(std::move(v)); }

// A random tiling vertex: a random permutation plus a random lattice vector.
Coords random_vertex(std::mt19937& rng, int d) {
    Coords x(static_cast<std::size_t>(d) + 1);
    std::iota(x.begin(), x.end(), 1);
    std::shuffle(x.begin(), x.end(), rng);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<std::int64_t> a(x.size());
    for (auto& c : a) c = coef(rng);
    const auto v = to_ambient(WCoeffs(a));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += v[i];
    return x;
}

std::set<Coords> as_set(const std::vector<Coords>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("vertex validity") {
    CHECK(is_tiling_vertex(Coords{1, 2, 3}));
    CHECK(is_tiling_vertex(Coords{-1, 4, 3}));
    CHECK_FALSE(is_tiling_vertex(Coords{1, 2, 4}));
    CHECK_FALSE(is_tiling_vertex(Coords{2, 2, 2}));
}

TEST_CASE("neighbour examples") {
    CHECK(as_set(neighbors(Coords{1, 2, 3})) == std::set<Coords>{{2, 1, 3}, {1, 3, 2}, {0, 2, 4}});
    CHECK(as_set(neighbors(Coords{3, 1, 2})).count(Coords{4, 0, 2}) == 1);
    CHECK_THROWS_AS(neighbors(Coords{1, 2, 4}), Error);
}

TEST_CASE("residue neighbour rule agrees with the definitional filter") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 3;
        const Coords x = random_vertex(rng, d);
        REQUIRE(oracle::tiling_vertex(x));
        const auto nb = neighbors(x);
        CHECK(nb.size() == static_cast<std::size_t>(d) + 1);
        CHECK(as_set(nb) == oracle::definitional_neighbors(x));
    }
}

TEST_CASE("adjacency is translation invariant") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + trial % 3;
        const Coords x = random_vertex(rng, d);
        for (int i = 1; i <= d + 1; ++i) {
            const auto w = w_vector(static_cast<std::size_t>(i), d);
            Coords y = x;
            for (std::size_t a = 0; a < y.size(); ++a) y[a] += w[a];
            std::set<Coords> shifted;
            for (auto nb : neighbors(x)) {
                for (std::size_t a = 0; a < nb.size(); ++a) nb[a] += w[a];
                shifted.insert(nb);
            }
            CHECK(as_set(neighbors(y)) == shifted);
        }
    }
}

TEST_CASE("tiles through a vertex") {
    const auto t = tiles_containing(Coords{1, 2, 3});
    const std::set<WCoeffs> expect{from_ambient(Coords{0, 0, 0}), from_ambient(Coords{-2, 1, 1}),
                                   from_ambient(Coords{-1, -1, 2})};
    CHECK(std::set<WCoeffs>(t.begin(), t.end()) == expect);
    const auto t321 = tiles_containing(Coords{3, 2, 1});
    CHECK(std::count(t321.begin(), t321.end(), WCoeffs::unit(0, 3)) == 1);
}

TEST_CASE("tiles_containing matches a ball search") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + trial % 2;
        const Coords x = random_vertex(rng, d);
        const auto tiles = tiles_containing(x);
        CHECK(tiles.size() == static_cast<std::size_t>(d) + 1);
        // Every tile offset v with x - v a permutation, searching coefficient
        // vectors near the base tile.
        const WCoeffs base = from_ambient([&] {
            Coords v(x.size());
            const auto p = base_permutation(x);
            for (std::size_t a = 0; a < x.size(); ++a) v[a] = x[a] - p[a];
            return v;
        }());
        std::set<WCoeffs> found;
        const int n = d + 1;
        std::vector<std::int64_t> delta(static_cast<std::size_t>(n), -2);
        for (;;) {
            const WCoeffs v = base + WCoeffs(delta);
            const auto amb = to_ambient(v);
            Coords p(x.size());
            for (std::size_t a = 0; a < x.size(); ++a) p[a] = x[a] - amb[a];
            if (oracle::is_permutation_of_1n(p)) found.insert(v);
            std::size_t i = 0;
            while (i < delta.size() && delta[i] == 2) delta[i++] = -2;
            if (i == delta.size()) break;
            ++delta[i];
        }
        CHECK(found == std::set<WCoeffs>(tiles.begin(), tiles.end()));
    }
}

TEST_CASE("ordered partitions") {
    const OrderedPartition p({{2, 3}, {1}}, 3);
    CHECK(p.to_string() == "[{2,3},{1}]");
    CHECK(OrderedPartition::parse("[{2,3},{1}]", 3) == p);
    CHECK(OrderedPartition::parse("23|1", 3) == p);
    CHECK_THROWS_AS(OrderedPartition({{1, 2}}, 3), Error);
    CHECK_THROWS_AS(OrderedPartition({{1, 2}, {2, 3}}, 3), Error);
    for (int n = 1; n <= 5; ++n)
        for (int b = 1; b <= n; ++b) {
            long expect = oracle::stirling2_table(n, b);
            for (int f = 2; f <= b; ++f) expect *= f;
            CHECK(static_cast<long>(ordered_partitions(n, b).size()) == expect);
        }
}

TEST_CASE("rotation examples") {
    const TilingFace f{OrderedPartition({{2, 3}, {1}}, 3), WCoeffs::zero(3)};
    const TilingFace r = rotate_partition(f);
    CHECK(r.partition == OrderedPartition({{1}, {2, 3}}, 3));
    CHECK(r.offset == WCoeffs::unit(0, 3));
    CHECK(r.offset == -(WCoeffs::unit(1, 3) + WCoeffs::unit(2, 3)));

    const TilingFace whole{OrderedPartition({{1, 2, 3}}, 3), WCoeffs::zero(3)};
    CHECK(rotate_partition(whole) == whole);

    const TilingFace chain{OrderedPartition({{2}, {3}, {1}}, 3), WCoeffs::zero(3)};
    const TilingFace twice = rotate_partition(rotate_partition(chain));
    CHECK(twice.partition == OrderedPartition({{1}, {2}, {3}}, 3));
    // (3,1,2) + w_2 + w_3 = (1,2,3): the rotated name sits at -(w_2 + w_3).
    CHECK(face_vertices(chain) == std::vector<Coords>{{3, 1, 2}});
    CHECK(face_vertices(twice) == std::vector<Coords>{{3, 1, 2}});
    CHECK(twice.offset == -(WCoeffs::unit(1, 3) + WCoeffs::unit(2, 3)));
}

TEST_CASE("canonical faces") {
    const TilingFace id{OrderedPartition({{1}, {2}, {3}}, 3), wc({0, 1, 0})};
    CHECK(canonical_face(id) == id);
    const TilingFace f{OrderedPartition({{3}, {1, 2}}, 3), wc({0, 1, 0})};
    const TilingFace c = canonical_face(f);
    CHECK(c.partition == OrderedPartition({{1, 2}, {3}}, 3));
    CHECK(c.offset == wc({0, 1, 0}) - WCoeffs::unit(2, 3));
    CHECK(face_vertices(c) == face_vertices(f));
}

TEST_CASE("face vertices") {
    CHECK(face_vertices({OrderedPartition({{2, 3}, {1}}, 3), WCoeffs::zero(3)}) ==
          std::vector<Coords>{{3, 1, 2}, {3, 2, 1}});
    CHECK(face_vertices({OrderedPartition({{1}, {2}, {3}}, 3), WCoeffs::zero(3)}) == std::vector<Coords>{{1, 2, 3}});
    CHECK(face_vertices({OrderedPartition({{1, 2, 3}}, 3), WCoeffs::zero(3)}).size() == 6);
    // Singletons name the inverse permutation.
    CHECK(face_vertices({OrderedPartition({{2}, {3}, {1}}, 3), WCoeffs::zero(3)}) == std::vector<Coords>{{3, 1, 2}});
}

TEST_CASE("rotation keeps the geometric face for every partition, d <= 3") {
    for (int n = 3; n <= 4; ++n)
        for (int b = 1; b <= n; ++b)
            for (const auto& p : ordered_partitions(n, b)) {
                const TilingFace f{p, WCoeffs::zero(static_cast<std::size_t>(n))};
                const auto verts = face_vertices(f);
                TilingFace g = f;
                for (int r = 0; r < b; ++r) {
                    g = rotate_partition(g);
                    CHECK(face_vertices(g) == verts);
                }
                CHECK(g == f);
                CHECK(canonical_face(f).is_canonical());
            }
}

TEST_CASE("canonical faces are unique, d <= 3") {
    for (int n = 3; n <= 4; ++n) {
        std::vector<TilingFace> canon;
        for (int b = 1; b <= n; ++b)
            for (const auto& p : ordered_partitions(n, b))
                if (p.mask(0) & 1u) canon.push_back({p, WCoeffs::zero(static_cast<std::size_t>(n))});
        std::set<std::vector<Coords>> seen;
        for (const auto& f : canon) seen.insert(face_vertices(f));
        CHECK(seen.size() == canon.size());
    }
}

TEST_CASE("a vertex lies in a tile iff the tile is listed") {
    std::mt19937 rng(45);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 2 + trial % 2;
        const Coords x = random_vertex(rng, d);
        const auto n = static_cast<std::size_t>(d) + 1;
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        for (const auto& v : tiles_containing(x)) {
            const auto verts = face_vertices({OrderedPartition({all}, static_cast<int>(n)), v});
            CHECK(std::binary_search(verts.begin(), verts.end(), x));
        }
        // A neighbouring offset that is not listed does not contain x.
        const auto listed = tiles_containing(x);
        for (std::size_t i = 0; i < n; ++i) {
            const WCoeffs other = listed[0] + WCoeffs::unit(i, n) + WCoeffs::unit(i, n);
            if (std::find(listed.begin(), listed.end(), other) != listed.end()) continue;
            const auto verts = face_vertices({OrderedPartition({all}, static_cast<int>(n)), other});
            CHECK_FALSE(std::binary_search(verts.begin(), verts.end(), x));
        }
    }
}

TEST_CASE("permutahedron membership") {
    const auto zero = WCoeffs::zero(3);
    CHECK(permutahedron_membership(Coords{2, 2, 2}, zero) == Membership::Interior);
    CHECK(permutahedron_membership(Coords{1, 2, 3}, zero) == Membership::Boundary);
    CHECK(permutahedron_membership(Coords{0, 2, 4}, zero) == Membership::Outside);
    try {
        permutahedron_membership(Coords{1, 1, 1}, zero);
        FAIL("expected slice error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SliceError);
    }
    // Rational point (3/2, 2, 5/2) is inside the hexagon's interior.
    CHECK(permutahedron_membership(Coords{3, 4, 5}, 2, zero) == Membership::Interior);
    // Translated tile.
    const WCoeffs w1 = WCoeffs::unit(0, 3);
    CHECK(permutahedron_membership(Coords{4, 1, 1}, w1) == Membership::Interior);
    CHECK(permutahedron_membership(Coords{2, 2, 2}, w1) == Membership::Outside);
}

TEST_CASE("base permutation ignores lattice translations") {
    std::mt19937 rng(46);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + trial % 3;
        const Coords x = random_vertex(rng, d);
        const auto p = base_permutation(x);
        CHECK(oracle::is_permutation_of_1n(p));
        CHECK(p[0] == 1);
        for (int i = 1; i <= d + 1; ++i) {
            const auto w = w_vector(static_cast<std::size_t>(i), d);
            Coords y = x;
            for (std::size_t a = 0; a < y.size(); ++a) y[a] += w[a];
            CHECK(base_permutation(y) == p);
        }
    }
}
