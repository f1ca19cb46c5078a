#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "qcyc/cyclic_code.hpp"
#include "qcyc/error.hpp"
#include "test_util.hpp"

using namespace qcyc;
using testing::ints;
using testing::sv;
using testing::upoly;

namespace {

std::vector<oracle::IntVec> int_words(const std::vector<ScalarVec>& words) {
    std::vector<oracle::IntVec> out;
    for (const auto& w : words) out.push_back(ints(w));
    return out;
}

Poly product(const BaseField& f, const std::vector<Factor>& factors) {
    Poly acc = Poly::constant(f.one());
    for (const auto& fac : factors)
        for (unsigned e = 0; e < fac.multiplicity; ++e) acc = poly::mul(f, acc, fac.poly);
    return acc;
}

}  // namespace

TEST_CASE("factor_xn_minus_1 examples", "[cyclic]") {
    const auto f2 = testing::prime_field(2);
    CHECK(factor_xn_minus_1(*f2, 3) == std::vector<Factor>{{upoly({1, 1}), 1}, {upoly({1, 1, 1}), 1}});
    CHECK(factor_xn_minus_1(*f2, 7) ==
          std::vector<Factor>{{upoly({1, 1}), 1}, {upoly({1, 1, 0, 1}), 1}, {upoly({1, 0, 1, 1}), 1}});
    CHECK(factor_xn_minus_1(*f2, 2) == std::vector<Factor>{{upoly({1, 1}), 2}});
    CHECK(factor_xn_minus_1(*f2, 1) == std::vector<Factor>{{upoly({1, 1}), 1}});
    CHECK_THROWS_AS(factor_xn_minus_1(*f2, 0), std::invalid_argument);
}

TEST_CASE("factorizations reconstruct x^n - 1 with irreducible factors", "[cyclic][property]") {
    for (const auto& f : {testing::prime_field(2), testing::prime_field(3), testing::gf4(), testing::prime_field(5)}) {
        for (std::size_t n = 1; n <= 16; ++n) {
            const auto factors = factor_xn_minus_1(*f, n);
            REQUIRE(product(*f, factors) == poly::x_pow_minus_one(*f, n));
            for (const auto& fac : factors) {
                REQUIRE(fac.poly.is_monic());
                REQUIRE(poly::is_irreducible(*f, fac.poly));
                if (f->degree() == 1 && fac.poly.degree() <= 4)
                    REQUIRE(oracle::is_irreducible_by_products(ints(fac.poly.coeffs()), static_cast<int>(f->order())));
            }
        }
    }
}

TEST_CASE("cyclotomic coset count equals the number of irreducible factors", "[cyclic][property]") {
    for (const auto& f : {testing::prime_field(2), testing::prime_field(3), testing::gf4()}) {
        for (std::size_t n = 1; n <= 21; ++n) {
            if (std::gcd(n, static_cast<std::size_t>(f->order())) != 1) continue;
            const auto cosets = cyclotomic_cosets(n, f->order());
            std::set<std::uint64_t> seen;
            std::size_t total = 0;
            for (const auto& c : cosets) {
                total += c.size();
                seen.insert(c.begin(), c.end());
            }
            REQUIRE(total == n);
            REQUIRE(seen.size() == n);
            REQUIRE(cosets.size() == factor_xn_minus_1(*f, n).size());
        }
    }
}

TEST_CASE("q_cyclotomic_coset examples", "[cyclic]") {
    CHECK(q_cyclotomic_coset(0, 7, 2) == std::vector<std::uint64_t>{0});
    CHECK(q_cyclotomic_coset(1, 7, 2) == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(q_cyclotomic_coset(3, 7, 2) == std::vector<std::uint64_t>{3, 5, 6});
    CHECK(q_cyclotomic_coset(5, 1, 2) == std::vector<std::uint64_t>{0});
    CHECK_THROWS_AS(q_cyclotomic_coset(1, 0, 2), std::invalid_argument);
}

TEST_CASE("code construction examples", "[cyclic]") {
    const auto f2 = testing::prime_field(2);
    const CyclicCode full(f2, upoly({1}), 7);
    CHECK(full.dimension() == 7);
    const CyclicCode zero(f2, poly::x_pow_minus_one(*f2, 7), 7);
    CHECK(zero.dimension() == 0);
    CHECK(zero.parity_check() == upoly({1}));
    const CyclicCode ham(f2, upoly({1, 1, 0, 1}), 7);
    CHECK(ham.dimension() == 4);
    CHECK(ham.parity_check() == upoly({1, 1, 1, 0, 1}));
    CHECK_THROWS_AS(CyclicCode(f2, upoly({1, 0, 0, 1, 1}), 7), std::invalid_argument);
    CHECK_THROWS_AS(CyclicCode(testing::prime_field(3), upoly({1, 2}), 3), std::invalid_argument);
    CHECK(code_from_parity_check(f2, upoly({1, 1, 1, 0, 1}), 7).generator() == ham.generator());
}

TEST_CASE("generator matrices", "[cyclic]") {
    const auto f2 = testing::prime_field(2);
    CHECK(g1_matrix(CyclicCode(f2, upoly({1}), 4)) == GFqMatrix::identity(f2, 4));
    const GFqMatrix g1 = g1_matrix(CyclicCode(f2, upoly({1, 1}), 3));
    CHECK(g1 == GFqMatrix::from_rows(f2, {sv({1, 1, 0}), sv({0, 1, 1}), sv({1, 0, 1})}, 3));
    CHECK(rank(g1) == 2);
    CHECK(rank(g1_matrix(CyclicCode(f2, upoly({1, 1, 0, 1}), 7))) == 4);

    CHECK(standard_generator_matrix(CyclicCode(f2, upoly({1}), 3)) == GFqMatrix::identity(f2, 3));
    CHECK(standard_generator_matrix(CyclicCode(f2, upoly({1, 1}), 3)) ==
          GFqMatrix::from_rows(f2, {sv({1, 1, 0}), sv({0, 1, 1})}, 3));
    CHECK(standard_generator_matrix(CyclicCode(f2, upoly({1, 1, 1}), 3)) == GFqMatrix::from_rows(f2, {sv({1, 1, 1})}, 3));
}

TEST_CASE("G1 and the standard generator matrix agree for every divisor", "[cyclic][property]") {
    for (const auto& f : {testing::prime_field(2), testing::prime_field(3), testing::gf4()}) {
        for (std::size_t n = 1; n <= 12; ++n) {
            for (const Poly& g : monic_divisors(*f, n)) {
                const CyclicCode code(f, g, n);
                const GFqMatrix g1 = g1_matrix(code), std = standard_generator_matrix(code);
                REQUIRE(rank(g1) == n - static_cast<std::size_t>(g.degree()));
                REQUIRE(rank(std) == code.dimension());
                REQUIRE(row_space_equal(g1, std));
                REQUIRE(poly::mul(*f, g, code.parity_check()) == poly::x_pow_minus_one(*f, n));
            }
        }
    }
}

TEST_CASE("monic_divisors", "[cyclic]") {
    const auto f2 = testing::prime_field(2);
    CHECK(monic_divisors(*f2, 7).size() == 8);
    CHECK(monic_divisors(*f2, 2) == std::vector<Poly>{upoly({1}), upoly({1, 1}), upoly({1, 0, 1})});
    CHECK(monic_divisors(*f2, 3) == std::vector<Poly>{upoly({1}), upoly({1, 1}), upoly({1, 1, 1}), upoly({1, 0, 0, 1})});
    // Exhaustive count of monic divisors by trial over every monic polynomial of degree <= n.
    for (auto [p, n] : {std::pair{2, 6}, {3, 4}, {2, 9}}) {
        const auto f = testing::prime_field(static_cast<unsigned>(p));
        std::size_t count = 0;
        oracle::IntVec xn(n + 1, 0);
        xn[0] = p - 1;
        xn[n] = 1;
        for (int d = 0; d <= n; ++d)
            for (std::uint64_t i = 0; i < oracle::ipow(p, d); ++i)
                count += oracle::poly_rem_monic(xn, oracle::monic_from_index(i, d, p), p).empty();
        CHECK(monic_divisors(*f, static_cast<std::size_t>(n)).size() == count);
    }
}

TEST_CASE("encode", "[cyclic]") {
    const auto f2 = testing::prime_field(2);
    const CyclicCode ham(f2, upoly({1, 1, 0, 1}), 7);
    CHECK(encode(ham, sv({0, 0, 0, 0})) == ScalarVec(7));
    CHECK(encode(ham, sv({1, 0, 0, 0})) == sv({1, 1, 0, 1, 0, 0, 0}));
    CHECK(encode(ham, sv({0, 1, 0, 0})) == cyclic_shift(encode(ham, sv({1, 0, 0, 0}))));
    CHECK_THROWS_AS(encode(ham, sv({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the divisibility oracle", "[cyclic][property]") {
    for (auto [p, n] : {std::pair{2, 7}, {2, 6}, {3, 4}, {2, 9}, {3, 6}}) {
        const auto f = testing::prime_field(static_cast<unsigned>(p));
        for (const Poly& g : monic_divisors(*f, static_cast<std::size_t>(n))) {
            const CyclicCode code(f, g, static_cast<std::size_t>(n));
            const auto words = enumerate_codewords(code);
            const auto expected = oracle::cyclic_code_by_divisibility(ints(g.coeffs()), static_cast<std::size_t>(n), p);
            REQUIRE(int_words(words) == expected);
            REQUIRE(is_cyclic_set(words));
            if (code.dimension() > 0) REQUIRE(minimum_distance(code) == oracle::min_weight(expected));
        }
    }
}

TEST_CASE("enumeration examples", "[cyclic]") {
    const auto f2 = testing::prime_field(2);
    CHECK(enumerate_codewords(CyclicCode(f2, upoly({1, 1, 1}), 3)) == std::vector<ScalarVec>{sv({0, 0, 0}), sv({1, 1, 1})});
    CHECK(enumerate_codewords(CyclicCode(f2, poly::x_pow_minus_one(*f2, 3), 3)) == std::vector<ScalarVec>{sv({0, 0, 0})});
    const auto ham = enumerate_codewords(CyclicCode(f2, upoly({1, 1, 0, 1}), 7));
    CHECK(ham.size() == 16);
    CHECK(is_cyclic_set(ham));
    CHECK_THROWS_AS(enumerate_codewords(CyclicCode(f2, upoly({1}), 7), 100), CapExceeded);
}

TEST_CASE("codewords are closed under linear combination", "[cyclic][property]") {
    std::mt19937_64 rng(41);
    const auto f4 = testing::gf4();
    for (const Poly& g : monic_divisors(*f4, 5)) {
        const CyclicCode code(f4, g, 5);
        const auto words = enumerate_codewords(code);
        const std::set<ScalarVec> set(words.begin(), words.end());
        REQUIRE(is_cyclic_set(words));
        for (int trial = 0; trial < 50; ++trial) {
            const auto& a = words[rng() % words.size()];
            const auto& b = words[rng() % words.size()];
            const Scalar c{static_cast<unsigned>(rng() % 4)};
            ScalarVec v(5);
            for (std::size_t i = 0; i < 5; ++i) v[i] = f4->add(a[i], f4->mul(c, b[i]));
            REQUIRE(set.contains(v));
        }
    }
}

TEST_CASE("minimum distance examples", "[cyclic]") {
    const auto f2 = testing::prime_field(2);
    CHECK(minimum_distance(CyclicCode(f2, upoly({1, 1, 1}), 3)) == 3);
    CHECK(minimum_distance(CyclicCode(f2, upoly({1, 1}), 3)) == 2);
    CHECK(minimum_distance(CyclicCode(f2, upoly({1, 1, 0, 1}), 7)) == 3);
    CHECK_THROWS_AS(minimum_distance(CyclicCode(f2, poly::x_pow_minus_one(*f2, 3), 3)), std::invalid_argument);
    CHECK_THROWS_AS(minimum_distance(CyclicCode(f2, upoly({1}), 15), 1000), CapExceeded);

    const CodeReport rep = make_report(CyclicCode(f2, upoly({1, 1, 0, 1}), 7), kDefaultEnumerationCap, true);
    CHECK(rep.k == 4);
    CHECK(rep.d == 3u);
    std::vector<std::uint64_t> dist(8, 0);
    for (const auto& w : oracle::cyclic_code_by_divisibility({1, 1, 0, 1}, 7, 2))
        ++dist[static_cast<std::size_t>(std::count(w.begin(), w.end(), 1))];
    CHECK(*rep.weight_distribution == dist);
    CHECK_FALSE(make_report(CyclicCode(f2, upoly({1}), 15), 1000).d.has_value());
    CHECK_FALSE(make_report(CyclicCode(f2, poly::x_pow_minus_one(*f2, 4), 4)).d.has_value());
}

TEST_CASE("is_cyclic_set examples", "[cyclic]") {
    CHECK(is_cyclic_set({sv({0, 0, 0})}));
    CHECK_FALSE(is_cyclic_set({sv({1, 0, 0})}));
    CHECK(is_cyclic_set({sv({1, 0, 0}), sv({0, 1, 0}), sv({0, 0, 1})}));
    CHECK_THROWS_AS(is_cyclic_set({sv({1, 0}), sv({1, 0, 0})}), std::invalid_argument);
    CHECK(cyclic_shift(sv({1, 2, 3})) == sv({3, 1, 2}));
}

TEST_CASE("generator_of_span recovers g", "[cyclic]") {
    for (const auto& f : {testing::prime_field(2), testing::prime_field(3)})
        for (std::size_t n : {4u, 6u, 7u})
            for (const Poly& g : monic_divisors(*f, n)) {
                const CyclicCode code(f, g, n);
                REQUIRE(generator_of_span(*f, standard_generator_matrix(code).row_vectors(), n) == g);
            }
}
