#ifndef QCYC_CYCLIC_CODE_HPP
#define QCYC_CYCLIC_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcyc/matrix.hpp"
#include "qcyc/poly.hpp"

namespace qcyc {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

struct Factor {
    Poly poly;
    unsigned multiplicity = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Complete factorization of x^n - 1 over GF(q) into monic irreducibles, ordered by degree
/// and then by monic_from_index. Works when p divides n (repeated factors).
///
/// Candidates are tried in increasing degree and divided out completely, so every candidate
/// that divides is irreducible; the search stops once the cofactor has no divisor of degree at
/// most half its own.
std::vector<Factor> factor_xn_minus_1(const BaseField& f, std::size_t n);

/// Every monic divisor of x^n - 1, sorted by degree then coefficient vector.
std::vector<Poly> monic_divisors(const BaseField& f, std::size_t n);

/// Cyclic code <g> in GF(q)[x]/(x^n - 1).
class CyclicCode {
   public:
    /// Throws std::invalid_argument unless g is monic and divides x^n - 1.
    CyclicCode(FieldPtr field, Poly generator, std::size_t n);

    const BaseField& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::size_t length() const noexcept { return n_; }
    const Poly& generator() const noexcept { return g_; }
    /// h = (x^n - 1) / g.
    const Poly& parity_check() const noexcept { return h_; }
    std::size_t generator_degree() const noexcept { return static_cast<std::size_t>(g_.degree()); }
    std::size_t dimension() const noexcept { return n_ - generator_degree(); }

   private:
    FieldPtr field_;
    std::size_t n_;
    Poly g_;
    Poly h_;
};

/// Parity-check polynomial h must be monic and divide x^n - 1.
CyclicCode code_from_parity_check(FieldPtr field, const Poly& h, std::size_t n);

/// The generator polynomial of the cyclic code spanned by `rows`: gcd(x^n - 1, rows...).
/// Only meaningful when the span is known to be cyclic.
Poly generator_of_span(const BaseField& f, const std::vector<ScalarVec>& rows, std::size_t n);

/// Generator of the reciprocal code {(c_0, c_{n-1}, ..., c_1) : c in <g>}: x^s g(1/x) made
/// monic. The code is reversible iff this equals g.
Poly reciprocal_generator(const BaseField& f, const Poly& g);

/// n x n matrix whose row i is x^i g(x) mod x^n - 1.
GFqMatrix g1_matrix(const CyclicCode& code);
/// k x n matrix with rows x^i g(x), i < k.
GFqMatrix standard_generator_matrix(const CyclicCode& code);

/// Coefficients of m(x) g(x); message length must be k.
ScalarVec encode(const CyclicCode& code, std::span<const Scalar> message);

/// All q^k codewords, sorted. Throws CapExceeded when q^k > cap.
std::vector<ScalarVec> enumerate_codewords(const CyclicCode& code, std::uint64_t cap = kDefaultEnumerationCap);

std::size_t hamming_weight(std::span<const Scalar> v) noexcept;

/// Minimum nonzero weight of the row space of `generator`, exhaustively. Throws
/// std::invalid_argument for the zero code and CapExceeded past the cap.
std::size_t minimum_distance(const GFqMatrix& generator, std::uint64_t cap = kDefaultEnumerationCap);
std::size_t minimum_distance(const CyclicCode& code, std::uint64_t cap = kDefaultEnumerationCap);

struct CodeReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d;                           // unset when not computed
    std::optional<std::vector<std::uint64_t>> weight_distribution;  // A_0..A_n
};

/// d is left unset (never estimated) for the zero code or when q^k exceeds the cap.
CodeReport make_report(const CyclicCode& code, std::uint64_t cap = kDefaultEnumerationCap,
                       bool with_weights = false);

/// {s q^j mod modulus : j >= 0}, sorted.
std::vector<std::uint64_t> q_cyclotomic_coset(std::uint64_t s, std::uint64_t modulus, std::uint64_t q);
/// Partition of {0, ..., modulus-1} into q-cyclotomic cosets, ordered by smallest member.
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t modulus, std::uint64_t q);

/// (c_{n-1}, c_0, ..., c_{n-2}).
ScalarVec cyclic_shift(std::span<const Scalar> v);
/// True iff the set is closed under cyclic_shift. Throws std::invalid_argument for ragged
/// input.
bool is_cyclic_set(const std::vector<ScalarVec>& words);

}  // namespace qcyc

#endif  // QCYC_CYCLIC_CODE_HPP
