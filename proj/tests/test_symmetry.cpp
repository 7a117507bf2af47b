#include <doctest.h>

#include "heawood/error.hpp"
#include "heawood/symmetry.hpp"

using namespace heawood;

namespace {

QuotientGraph H(const char* k) { return build_heawood_graph(KSignature::parse(k)); }

Perm translate_by(const QuotientGraph& h, const std::vector<std::int64_t>& v) {
    Perm p(h.vertex_count());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Coords y = h.keys()[i];
        for (std::size_t a = 0; a < y.size(); ++a) y[a] += v[a];
        p[i] = h.index_of(y);
    }
    return p;
}

std::uint64_t brute_order(const Graph& g, std::size_t cap = 200) {
    AutSearchOptions o;
    o.vertex_cap = cap;
    return brute_force_automorphisms(g, o).order;
}

}  // namespace

TEST_CASE("permutation helpers") {
    const Perm a{1, 2, 0}, b{0, 2, 1};
    CHECK(compose(a, b) == Perm{1, 0, 2});
    CHECK(compose(a, inverse(a)) == identity_perm(3));
    CHECK_FALSE(is_bijection(Perm{0, 0, 1}));
    CHECK(is_automorphism(cycle_graph(5), Perm{1, 2, 3, 4, 0}));
    CHECK_FALSE(is_automorphism(path_graph(3), Perm{1, 0, 2}));
}

TEST_CASE("translations") {
    const auto h = H("1,1,1");
    const auto t = translation_generators(h);
    CHECK(t.size() == 2);
    for (const auto& p : t) CHECK(is_automorphism(h.graph(), p));
    CHECK(group_closure(t, h.vertex_count()).order() == 7);
    CHECK(group_closure(translation_generators(H("2,3,2")), 48).order() == 24);
    // w_1 + w_2 + w_3 = 0.
    const Perm all = compose(compose(t[0], t[1]), translate_by(h, w_vector(3, 2)));
    CHECK(all == identity_perm(h.vertex_count()));
    CHECK(compose(t[0], t[1]) == compose(t[1], t[0]));
}

TEST_CASE("rotation R") {
    const auto h = H("1,1,1");
    const Perm r = rotation_R(h);
    CHECK(r[static_cast<std::size_t>(h.index_of(Coords{1, 2, 3}))] == h.index_of(Coords{3, 2, 1}));
    CHECK(compose(r, r) == identity_perm(h.vertex_count()));
    CHECK(is_automorphism(h.graph(), r));
    for (const char* k : {"1,2,1", "2,3,2", "1,1,1,1", "2,1,2,1"}) CHECK(is_automorphism(H(k).graph(), rotation_R(H(k))));
}

TEST_CASE("cyclic shifts") {
    const auto h = H("2,1,2,1");
    CHECK(admitted_shifts(h) == std::vector<int>{0, 2});
    CHECK(is_automorphism(h.graph(), cyclic_C(h, 2)));
    try {
        cyclic_C(h, 1);
        FAIL("expected refusal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAnAutomorphism);
    }
    CHECK(admitted_shifts(KSignature::parse("2,3,4,3,2,3,4,3,2,3,4,3")) == std::vector<int>{0, 4, 8});
    CHECK(admitted_shifts(H("2,2,2")).size() == 3);
    CHECK(admitted_shifts(H("1,1,1,1")).size() == 4);
}

TEST_CASE("generated group orders") {
    auto order = [](const char* k) {
        const auto h = H(k);
        return group_closure(standard_generators(h), h.vertex_count()).order();
    };
    CHECK(order("2,2,2") == 114);
    CHECK(order("1,1,1") == 42);
    CHECK(group_closure({}, 5).order() == 1);
    CHECK(group_closure({identity_perm(4)}, 4).order() == 1);
    const auto h = H("2,2,2");
    CHECK_THROWS_AS(group_closure(standard_generators(h), h.vertex_count(), 10), Error);
}

TEST_CASE("brute-force automorphism counts") {
    CHECK(brute_order(H("1,1,1").graph()) == 336);
    CHECK(brute_order(H("2,2,2").graph()) == 114);
    CHECK(brute_order(cycle_graph(6)) == 12);
    CHECK(brute_order(complete_graph(5)) == 120);
    CHECK(brute_order(path_graph(3)) == 2);
    Graph two_triangles(6);
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i) two_triangles.add_edge(base + i, base + (i + 1) % 3);
    CHECK(brute_order(two_triangles) == 72);
    try {
        brute_order(H("2,1,2,1").graph(), 100);
        FAIL("expected cap refusal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
}

TEST_CASE("brute force agrees with T, R, C for constant signatures") {
    for (const char* k : {"2,2,2", "3,3,3", "1,1,1,1", "2,2,2,2"}) {
        CAPTURE(k);
        const auto h = H(k);
        const auto gen = group_closure(standard_generators(h), h.vertex_count());
        const auto sig = KSignature::parse(k);
        const auto expect = static_cast<std::uint64_t>(2 * (sig.dim() + 1) * sig.dk().get_si());
        CHECK(gen.order() == expect);
        AutSearchOptions o;
        o.vertex_cap = 400;
        o.collect = true;
        const auto bf = brute_force_automorphisms(h.graph(), o);
        CHECK(bf.order == expect);
        for (const auto& p : bf.elements) CHECK(gen.contains(p));
    }
}

TEST_CASE("brute force gives 2 l D for non-constant signatures") {
    for (const char* k : {"1,1,2", "1,2,1", "2,1,1", "1,2,2", "2,2,1", "1,3,2", "2,3,2", "2,1,2,1", "1,1,1,2", "1,2,1,2"}) {
        CAPTURE(k);
        const auto h = H(k);
        if (h.vertex_count() > 200) continue;
        const auto sig = KSignature::parse(k);
        const auto ell = static_cast<std::int64_t>(admitted_shifts(sig).size());
        const auto expect = static_cast<std::uint64_t>(2 * ell * sig.dk().get_si());
        CHECK(brute_order(h.graph()) == expect);
        CHECK(group_closure(standard_generators(h), h.vertex_count()).order() == expect);
    }
}

TEST_CASE("vertex orbits") {
    for (const char* k : {"1,1,1", "1,2,1", "2,2,2", "1,3,2", "2,3,2"}) {
        const auto bf = brute_force_automorphisms(H(k).graph());
        CHECK(bf.vertex_transitive());
    }
    // In dimension three the automorphism group has more than one orbit.
    const auto bf = brute_force_automorphisms(H("1,1,1,1").graph());
    REQUIRE(bf.orbits.size() == 2);
    CHECK(bf.orbits[0].size() + bf.orbits[1].size() == 90);
    CHECK(std::min(bf.orbits[0].size(), bf.orbits[1].size()) == 30);
    CHECK(brute_force_automorphisms(H("2,1,2,1").graph()).orbits.size() == 3);
}

TEST_CASE("exceptional generator") {
    const auto h = H("1,1,1");
    CHECK(verify_exceptional_W(h));
    const Perm w = exceptional_W(h);
    CHECK(compose(w, w) == identity_perm(14));
    const auto gen = group_closure(standard_generators(h), 14);
    CHECK_FALSE(gen.contains(w));
    auto all = standard_generators(h);
    all.push_back(w);
    CHECK(group_closure(all, 14).order() == 336);
    CHECK_FALSE(verify_exceptional_W(H("1,2,1")));
    CHECK(is_automorphism(h.graph(), identity_perm(14)));
}
