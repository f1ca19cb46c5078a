#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "qcyc/error.hpp"
#include "qcyc/qpoly.hpp"
#include "test_util.hpp"

using namespace qcyc;
using testing::elem;
using testing::sv;

namespace {

QPolynomial random_qpoly(const TowerPtr& t, std::mt19937_64& rng) {
    ScalarVec c(t->n());
    for (auto& s : c) s.code = static_cast<unsigned>(rng() % t->q());
    return QPolynomial(t, c);
}

// Direct sum l_i y^(q^i) with repeated exponentiation rather than the Frobenius matrix.
Element evaluate_by_powers(const QPolynomial& ell, const Element& y) {
    const FieldTower& t = *ell.tower();
    Element acc = t.zero(), conj = y;
    for (std::size_t i = 0; i < t.n(); ++i) {
        acc = t.add(acc, t.scale(ell.coeffs()[i], conj));
        conj = t.pow(conj, t.q());
    }
    return acc;
}

}  // namespace

TEST_CASE("QPolynomial construction", "[qpoly]") {
    const auto t = FieldTower::build(2, 1, 3);
    CHECK(QPolynomial(t, sv({1})).coeffs() == sv({1, 0, 0}));
    CHECK(QPolynomial(t, {}).is_zero());
    CHECK_THROWS_AS(QPolynomial(t, sv({1, 0, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(QPolynomial(t, sv({2})), std::invalid_argument);
}

TEST_CASE("evaluate examples", "[qpoly]") {
    const auto t = FieldTower::build(2, 1, 3);
    std::mt19937_64 rng(31);
    const QPolynomial id(t, sv({1, 0, 0})), zero(t, {}), trace(t, sv({1, 1, 1}));
    for (int i = 0; i < 8; ++i) {
        const Element y = testing::random_element(*t, rng);
        CHECK(evaluate(id, y) == y);
        CHECK(evaluate(zero, y) == t->zero());
    }
    CHECK(evaluate(trace, elem({0, 1, 0})) == t->zero());
    for (const Element& y : t->elements()) {
        const Element v = evaluate(trace, y);
        CHECK((v == t->zero() || v == t->one()));
    }
}

TEST_CASE("image_basis examples", "[qpoly]") {
    const auto t = FieldTower::build(2, 1, 3);
    const NormalBasis nb = find_normal(t);
    CHECK(image_basis(QPolynomial(t, sv({1})), nb).size() == 3);
    CHECK(image_basis(QPolynomial(t, {}), nb).empty());

    const QPolynomial trace(t, sv({1, 1, 1}));
    std::set<ScalarVec> image;
    for (const Element& y : t->elements()) image.insert(evaluate(trace, y).coeffs);
    CHECK(image == std::set<ScalarVec>{t->zero().coeffs, t->one().coeffs});
    const auto basis = image_basis(trace, nb);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == nb.coords(t->one()));
    CHECK(kernel_dimension(trace, nb) == 2);
}

TEST_CASE("evaluate_in_coords examples", "[qpoly]") {
    const auto t = FieldTower::build(2, 1, 3);
    const QPolynomial ell(t, sv({1, 0, 1}));
    CHECK(evaluate_in_coords(ell, sv({1, 0, 0})) == sv({1, 0, 1}));
    CHECK(evaluate_in_coords(QPolynomial(t, sv({1})), sv({0, 1, 1})) == sv({0, 1, 1}));
    CHECK(evaluate_in_coords(ell, sv({0, 0, 0})) == sv({0, 0, 0}));
    CHECK_THROWS_AS(evaluate_in_coords(ell, sv({1, 0})), std::invalid_argument);
}

TEST_CASE("evaluation is GF(q)-linear, exhaustively", "[qpoly][property]") {
    std::mt19937_64 rng(32);
    for (auto [p, m, n] : {std::tuple{2u, 1u, 3u}, {2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
        const auto t = FieldTower::build(p, m, n);
        for (int trial = 0; trial < 3; ++trial) {
            const QPolynomial ell = random_qpoly(t, rng);
            for (const Element& y1 : t->elements()) {
                const Element v1 = evaluate(ell, y1);
                REQUIRE(v1 == evaluate_by_powers(ell, y1));
                for (std::uint32_t c = 0; c < t->q(); ++c)
                    REQUIRE(evaluate(ell, t->scale(Scalar{c}, y1)) == t->scale(Scalar{c}, v1));
                const Element y2 = testing::random_element(*t, rng);
                REQUIRE(evaluate(ell, t->add(y1, y2)) == t->add(v1, evaluate(ell, y2)));
            }
        }
    }
}

TEST_CASE("coordinate evaluation agrees with field evaluation", "[qpoly][property]") {
    std::mt19937_64 rng(33);
    for (auto [p, m, n] : {std::tuple{2u, 1u, 3u}, {2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 3u}, {2u, 1u, 6u}}) {
        const auto t = FieldTower::build(p, m, n);
        for (std::size_t skip : {std::size_t{0}, std::size_t{1}}) {
            const NormalBasis nb = find_normal(t, skip);
            for (int trial = 0; trial < 4; ++trial) {
                const QPolynomial ell = random_qpoly(t, rng);
                for (const Element& y : t->elements()) {
                    const ScalarVec yc = nb.coords(y);
                    REQUIRE(evaluate_in_coords(ell, yc) == nb.coords(evaluate(ell, nb.from_coords(yc))));
                }
            }
        }
    }
}

TEST_CASE("image and kernel dimensions add to n", "[qpoly][property]") {
    std::mt19937_64 rng(34);
    for (auto [p, m, n] : {std::tuple{2u, 1u, 3u}, {2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
        const auto t = FieldTower::build(p, m, n);
        const NormalBasis nb = find_normal(t);
        for (int trial = 0; trial < 10; ++trial) {
            const QPolynomial ell = random_qpoly(t, rng);
            std::set<ScalarVec> image;
            std::size_t kernel = 0;
            for (const Element& y : t->elements()) {
                const Element v = evaluate(ell, y);
                image.insert(v.coeffs);
                kernel += v == t->zero();
            }
            const std::size_t dim = image_basis(ell, nb).size();
            REQUIRE(dim + kernel_dimension(ell, nb) == n);
            REQUIRE(image.size() == span_size(t->base(), dim));
            REQUIRE(kernel == span_size(t->base(), n - dim));
        }
    }
}

TEST_CASE("qpoly text form", "[qpoly][io]") {
    const auto t = FieldTower::build(2, 1, 3);
    const QPolynomial ell(t, sv({1, 0, 1}));
    CHECK(format_qpoly(ell) == "qpoly:1,0,1");
    CHECK(parse_qpoly(t, "qpoly:1,0,1") == ell);
    CHECK(parse_qpoly(t, format_qpoly(QPolynomial(t, {}))) == QPolynomial(t, {}));
    CHECK(parse_qpoly(t, "1,0,1") == ell);
    CHECK_THROWS_AS(parse_qpoly(t, "qpoly:1,0,1,1"), ParseError);
    CHECK_THROWS_AS(parse_qpoly(t, "qpoly:1,x"), ParseError);
}
