#include "qcyc/cyclic_code.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qcyc/error.hpp"

namespace qcyc {

std::vector<Factor> factor_xn_minus_1(const BaseField& f, std::size_t n) {
    if (n == 0) throw std::invalid_argument("code length must be positive");
    Poly rest = poly::x_pow_minus_one(f, n);
    std::vector<Factor> out;
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(rest.degree()); ++d) {
        const std::uint64_t count = poly::monic_count(f, d);
        if (count == 0) throw std::overflow_error("x^n - 1 factorization exceeds the trial-division range");
        for (std::uint64_t i = 0; i < count && 2 * d <= static_cast<std::size_t>(rest.degree()); ++i) {
            const Poly cand = poly::monic_from_index(f, d, i);
            unsigned mult = 0;
            while (true) {
                auto [quot, rem] = poly::divmod(f, rest, cand);
                if (!rem.is_zero()) break;
                rest = std::move(quot);
                ++mult;
            }
            if (mult) out.push_back({cand, mult});
        }
    }
    if (rest.degree() >= 1) out.push_back({rest, 1});
    return out;
}

namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

}  // namespace

std::vector<Poly> monic_divisors(const BaseField& f, std::size_t n) {
    std::vector<Poly> divisors{Poly::constant(f.one())};
    for (const auto& fac : factor_xn_minus_1(f, n)) {
        std::vector<Poly> next;
        for (const auto& d : divisors) {
            Poly cur = d;
            next.push_back(cur);
            for (unsigned e = 1; e <= fac.multiplicity; ++e) {
                cur = poly::mul(f, cur, fac.poly);
                next.push_back(cur);
            }
        }
        divisors = std::move(next);
    }
    std::sort(divisors.begin(), divisors.end(), poly_less);
    return divisors;
}

CyclicCode::CyclicCode(FieldPtr field, Poly generator, std::size_t n)
    : field_(std::move(field)), n_(n), g_(std::move(generator)) {
    if (n_ == 0) throw std::invalid_argument("code length must be positive");
    for (auto c : g_.coeffs())
        if (!field_->contains(c)) throw std::invalid_argument("generator coefficient outside GF(q)");
    if (!g_.is_monic()) throw std::invalid_argument("generator polynomial must be monic");
    auto [quot, rem] = poly::divmod(*field_, poly::x_pow_minus_one(*field_, n_), g_);
    if (!rem.is_zero()) throw std::invalid_argument("generator polynomial does not divide x^n - 1");
    h_ = std::move(quot);
}

CyclicCode code_from_parity_check(FieldPtr field, const Poly& h, std::size_t n) {
    if (!h.is_monic()) throw std::invalid_argument("parity-check polynomial must be monic");
    auto [quot, rem] = poly::divmod(*field, poly::x_pow_minus_one(*field, n), h);
    if (!rem.is_zero()) throw std::invalid_argument("parity-check polynomial does not divide x^n - 1");
    return CyclicCode(std::move(field), std::move(quot), n);
}

Poly generator_of_span(const BaseField& f, const std::vector<ScalarVec>& rows, std::size_t n) {
    Poly g = poly::x_pow_minus_one(f, n);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("row length must equal n");
        g = poly::gcd(f, g, Poly(r));
    }
    return g;
}

Poly reciprocal_generator(const BaseField& f, const Poly& g) {
    if (g.is_zero() || g.coeff(0).code == 0) throw std::invalid_argument("reciprocal needs a nonzero constant term");
    ScalarVec rev(g.coeffs().rbegin(), g.coeffs().rend());
    return poly::make_monic(f, Poly(std::move(rev)));
}

GFqMatrix g1_matrix(const CyclicCode& code) {
    const std::size_t n = code.length();
    const ScalarVec g = poly::fold_cyclic(code.field(), code.generator(), n);
    ScalarVec e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + (i + j) % n] = g[j];
    return GFqMatrix(code.field_ptr(), n, n, std::move(e));
}

GFqMatrix standard_generator_matrix(const CyclicCode& code) {
    const std::size_t n = code.length(), k = code.dimension();
    ScalarVec e(k * n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < code.generator().coeffs().size(); ++j) e[i * n + i + j] = code.generator().coeff(j);
    return GFqMatrix(code.field_ptr(), k, n, std::move(e));
}

ScalarVec encode(const CyclicCode& code, std::span<const Scalar> message) {
    if (message.size() != code.dimension()) throw std::invalid_argument("message length must equal k");
    for (auto c : message)
        if (!code.field().contains(c)) throw std::invalid_argument("message symbol outside GF(q)");
    const Poly m(ScalarVec(message.begin(), message.end()));
    return poly::fold_cyclic(code.field(), poly::mul(code.field(), m, code.generator()), code.length());
}

std::vector<ScalarVec> enumerate_codewords(const CyclicCode& code, std::uint64_t cap) {
    if (code.dimension() == 0) return {ScalarVec(code.length())};
    return enumerate_row_space(standard_generator_matrix(code), cap);
}

std::size_t hamming_weight(std::span<const Scalar> v) noexcept {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Scalar s) { return s.code != 0; }));
}

std::size_t minimum_distance(const GFqMatrix& generator, std::uint64_t cap) {
    if (rank(generator) == 0) throw std::invalid_argument("the zero code has no minimum distance");
    std::size_t best = generator.cols() + 1;
    for_each_in_row_space(generator, cap, [&](std::span<const Scalar> v) {
        const std::size_t w = hamming_weight(v);
        if (w != 0 && w < best) best = w;
    });
    return best;
}

std::size_t minimum_distance(const CyclicCode& code, std::uint64_t cap) {
    if (code.dimension() == 0) throw std::invalid_argument("the zero code has no minimum distance");
    return minimum_distance(standard_generator_matrix(code), cap);
}

CodeReport make_report(const CyclicCode& code, std::uint64_t cap, bool with_weights) {
    CodeReport rep;
    rep.n = code.length();
    rep.k = code.dimension();
    if (rep.k == 0) {
        if (with_weights) {
            rep.weight_distribution = std::vector<std::uint64_t>(rep.n + 1, 0);
            (*rep.weight_distribution)[0] = 1;
        }
        return rep;
    }
    const std::uint64_t size = span_size(code.field(), rep.k);
    if (size == 0 || size > cap) return rep;
    std::vector<std::uint64_t> dist(rep.n + 1, 0);
    for_each_in_row_space(standard_generator_matrix(code), cap,
                          [&](std::span<const Scalar> v) { ++dist[hamming_weight(v)]; });
    for (std::size_t w = 1; w <= rep.n; ++w)
        if (dist[w]) {
            rep.d = w;
            break;
        }
    if (with_weights) rep.weight_distribution = std::move(dist);
    return rep;
}

std::vector<std::uint64_t> q_cyclotomic_coset(std::uint64_t s, std::uint64_t modulus, std::uint64_t q) {
    if (modulus == 0) throw std::invalid_argument("coset modulus must be positive");
    std::set<std::uint64_t> coset;
    std::uint64_t cur = s % modulus;
    while (coset.insert(cur).second)
        cur = mul_mod(cur, q % modulus, modulus);
    return {coset.begin(), coset.end()};
}

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t modulus, std::uint64_t q) {
    std::vector<bool> seen(modulus, false);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t s = 0; s < modulus; ++s) {
        if (seen[s]) continue;
        auto c = q_cyclotomic_coset(s, modulus, q);
        for (auto v : c) seen[v] = true;
        out.push_back(std::move(c));
    }
    return out;
}

ScalarVec cyclic_shift(std::span<const Scalar> v) {
    ScalarVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[(i + 1) % v.size()] = v[i];
    return out;
}

bool is_cyclic_set(const std::vector<ScalarVec>& words) {
    if (words.empty()) return true;
    const std::size_t n = words.front().size();
    for (const auto& w : words)
        if (w.size() != n) throw std::invalid_argument("words of different lengths");
    const std::set<ScalarVec> set(words.begin(), words.end());
    for (const auto& w : set)
        if (!set.contains(cyclic_shift(w))) return false;
    return true;
}

}  // namespace qcyc
