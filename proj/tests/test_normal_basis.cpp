#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qcyc/cyclic_code.hpp"
#include "qcyc/normal_basis.hpp"
#include "test_util.hpp"

using namespace qcyc;
using testing::elem;
using testing::ints;
using testing::sv;

namespace {

// Independence of a, a^p, ..., a^(p^(n-1)) in Z_p[x]/(f), computed with plain integers.
bool normal_by_oracle(const oracle::IntVec& a, const oracle::IntVec& f, int p) {
    const std::size_t n = f.size() - 1;
    std::vector<oracle::IntVec> conj;
    oracle::IntVec cur = a;
    for (std::size_t i = 0; i < n; ++i) {
        conj.push_back(cur);
        cur = oracle::ext_pow(cur, static_cast<std::uint64_t>(p), f, p);
    }
    return oracle::rank_by_span(conj, n, p) == n;
}

std::vector<TowerPtr> sample_towers() {
    return {FieldTower::build(2, 1, 3), FieldTower::build(2, 1, 4), FieldTower::build(3, 1, 3),
            FieldTower::build(2, 2, 3), FieldTower::build(3, 1, 4), FieldTower::build(2, 1, 6)};
}

}  // namespace

TEST_CASE("is_normal examples in GF(8)", "[normal]") {
    const auto t = FieldTower::build(2, 1, 3);
    CHECK_FALSE(is_normal(t, elem({0, 1, 0})));
    CHECK(is_normal(t, elem({1, 1, 0})));
    CHECK_FALSE(is_normal(t, t->zero()));
    CHECK_FALSE(is_normal(t, t->one()));
}

TEST_CASE("find_normal examples", "[normal]") {
    const auto t8 = FieldTower::build(2, 1, 3);
    CHECK(find_normal(t8).element() == elem({1, 1, 0}));

    const auto t4 = FieldTower::build(2, 1, 2);
    REQUIRE(t4->ext_poly() == testing::upoly({1, 1, 1}));
    CHECK(find_normal(t4).element() == elem({0, 1}));

    for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
        const auto t = FieldTower::build(p, m, 1);
        CHECK(find_normal(t).element() == t->one());
    }
}

TEST_CASE("scanning GF(8), GF(16), GF(27) finds exactly the normal elements", "[normal]") {
    for (auto [p, n] : {std::pair{2, 3}, {2, 4}, {3, 3}, {2, 5}}) {
        const auto t = FieldTower::build(static_cast<unsigned>(p), 1, static_cast<unsigned>(n));
        const oracle::IntVec f = ints(t->ext_poly().coeffs());
        std::size_t count = 0;
        bool first_seen = false;
        for (const Element& a : t->elements()) {
            const bool expected = normal_by_oracle(ints(a.coeffs), f, p);
            REQUIRE(is_normal(t, a) == expected);
            if (expected && !first_seen) {
                CHECK(find_normal(t).element() == a);
                first_seen = true;
            }
            count += expected;
        }
        CHECK(first_seen);
        // Counting normal elements by the same scan with the skip argument.
        CHECK(find_normal(t, count - 1).element() != find_normal(t).element());
        CHECK_THROWS(find_normal(t, count));
    }
}

TEST_CASE("coords examples", "[normal]") {
    const auto t = FieldTower::build(2, 1, 3);
    const NormalBasis nb = find_normal(t);
    CHECK(nb.coords(nb.element()) == sv({1, 0, 0}));
    CHECK(nb.coords(t->zero()) == sv({0, 0, 0}));
    CHECK(nb.coords(t->one()) == sv({1, 1, 1}));
    CHECK(nb.from_coords(sv({1, 0, 0})) == nb.element());
    CHECK(nb.from_coords(sv({0, 0, 0})) == t->zero());
    CHECK_THROWS_AS(nb.from_coords(sv({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(NormalBasis(t, elem({0, 1, 0})), std::invalid_argument);
}

TEST_CASE("basis matrices", "[normal]") {
    for (const auto& t : sample_towers()) {
        const NormalBasis nb = find_normal(t);
        CHECK(rank(nb.basis_matrix()) == t->n());
        CHECK(multiply(nb.basis_matrix(), nb.inverse_matrix()) == GFqMatrix::identity(FieldTower::base_ptr(t), t->n()));
        for (std::size_t i = 0; i < t->n(); ++i) {
            const Element conj = t->frobenius(nb.element(), i);
            for (std::size_t r = 0; r < t->n(); ++r) REQUIRE(nb.basis_matrix().at(r, i) == conj.coeffs[r]);
        }
    }
}

TEST_CASE("coordinates: round trip, linearity and Frobenius shift", "[normal][property]") {
    std::mt19937_64 rng(21);
    for (const auto& t : sample_towers()) {
        const NormalBasis nb = find_normal(t);
        for (int trial = 0; trial < 100; ++trial) {
            const Element x = testing::random_element(*t, rng), y = testing::random_element(*t, rng);
            const Scalar c{static_cast<unsigned>(rng() % t->q())};
            const ScalarVec cx = nb.coords(x);
            REQUIRE(nb.from_coords(cx) == x);
            REQUIRE(nb.coords(nb.from_coords(cx)) == cx);
            ScalarVec sum(t->n()), scaled(t->n());
            const ScalarVec cy = nb.coords(y);
            for (std::size_t i = 0; i < t->n(); ++i) {
                sum[i] = t->base().add(cx[i], cy[i]);
                scaled[i] = t->base().mul(c, cx[i]);
            }
            REQUIRE(nb.coords(t->add(x, y)) == sum);
            REQUIRE(nb.coords(t->scale(c, x)) == scaled);
            REQUIRE(nb.coords(t->frobenius(x, 1)) == cyclic_shift(cx));
        }
    }
}

TEST_CASE("a different normal element gives another valid basis", "[normal]") {
    const auto t = FieldTower::build(3, 1, 3);
    const NormalBasis a = find_normal(t), b = find_normal(t, 3);
    CHECK(a.element() != b.element());
    for (const Element& x : t->elements()) {
        REQUIRE(b.from_coords(b.coords(x)) == x);
        REQUIRE(b.coords(t->frobenius(x, 1)) == cyclic_shift(b.coords(x)));
    }
}
