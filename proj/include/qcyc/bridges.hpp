#ifndef QCYC_BRIDGES_HPP
#define QCYC_BRIDGES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcyc/cyclic_code.hpp"
#include "qcyc/field.hpp"
#include "qcyc/matrix.hpp"
#include "qcyc/normal_basis.hpp"
#include "qcyc/qpoly.hpp"

// Conversions among the four descriptions of a cyclic code of length n over GF(q):
//
//   generator polynomial g      <g> in GF(q)[x]/(x^n - 1)
//   parity-check polynomial h   h = (x^n - 1) / g
//   check element lambda        C_lambda = {c : sum c_i lambda^(q^i) = 0}
//   q-polynomial l              image code: normal coordinates of Im(l) w.r.t. beta
//
// n is always the tower's extension degree.

namespace qcyc {

/// Nonzero lambda in GF(q^n).
class CheckElement {
   public:
    /// Throws std::invalid_argument for lambda == 0.
    CheckElement(TowerPtr tower, Element lambda);

    const TowerPtr& tower() const noexcept { return tower_; }
    const Element& value() const noexcept { return lambda_; }

   private:
    TowerPtr tower_;
    Element lambda_;
};

struct ImageCodeSpec {
    QPolynomial ell;
    NormalBasis basis;  // the beta of the image code
};

/// n x n circulant G with entry (i, j) = l_{(i-j) mod n}. Normal coordinates of l(y) are G y,
/// so the image code of l is the column space of G. The row space of G is the reversed code
/// (c_0, c_{n-1}, ..., c_1); the two agree only for reversible codes. rank(G) is the dimension
/// of both.
GFqMatrix image_code_generator_matrix(const QPolynomial& ell);

/// Image code straight from its definition: coords(l(y)) for every y in GF(q^n), sorted and
/// deduplicated. Throws CapExceeded when q^n > cap.
std::vector<ScalarVec> image_code_by_definition(const ImageCodeSpec& spec,
                                                std::uint64_t cap = kDefaultEnumerationCap);

/// l with l_{(-i) mod n} = sum of g_i over i, i.e. l_0 = g_0 and l_{n-i} = g_i for
/// 1 <= i <= deg g < n. Then circulant(l) = G1 and its row space is <g>. The image code of this
/// l is the reciprocal code <g*>, which is <g> only when <g> is reversible. Throws
/// std::invalid_argument unless g is monic and divides x^n - 1.
QPolynomial ell_from_generator(const TowerPtr& tower, const Poly& g);

/// l with l_{i mod n} = sum of g_i: the q-polynomial whose image code is <g> for every normal
/// basis. Same validation as ell_from_generator.
QPolynomial ell_direct_from_generator(const TowerPtr& tower, const Poly& g);

/// lambda = sum h_i alpha^(q^i); C_lambda is the code with parity-check polynomial h. Throws
/// std::invalid_argument for the zero polynomial, for deg h = n (the full space, where lambda
/// would vanish) and when h is not a monic divisor of x^n - 1.
CheckElement lambda_from_parity_check(const Poly& h, const NormalBasis& basis);

struct LambdaCode {
    GFqMatrix check_matrix;  // column i = power-basis coordinates of lambda^(q^i)
    GFqMatrix basis;         // nullspace basis, dim C_lambda rows
};

/// C_lambda as the nullspace of c -> sum c_i lambda^(q^i).
LambdaCode code_from_lambda(const CheckElement& lambda);

/// Circulant of coords(lambda) in the given normal basis; dim C_lambda = n - rank.
GFqMatrix b_lambda_matrix(const CheckElement& lambda, const NormalBasis& basis);

/// n - |q-cyclotomic coset of s mod r-1| where lambda = gamma^s: a lower bound on dim C_lambda.
std::size_t coset_dimension_bound(const CheckElement& lambda, const Element& gamma,
                                  std::uint64_t dlog_bound = kDefaultDlogBound);

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::skip;
    std::string detail;
};

struct VerificationReport {
    std::string subject;  // e.g. "q=2 n=7 g=1,1,0,1"
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    std::size_t count(CheckStatus s) const noexcept;
};

struct VerifyOptions {
    std::uint64_t cap = kDefaultEnumerationCap;
    std::uint64_t dlog_bound = kDefaultDlogBound;
    /// Primitive element for the coset-bound check; the check is skipped when unset.
    std::optional<Element> gamma;
};

/// Builds <g> through every route and cross-checks them:
///
///   rank-g1           rank(G1) = n - deg g
///   g1-generates      rowspace(G1) = rowspace(standard generator matrix)
///   ell-matches-g1    circulant(l) = G1 entrywise
///   rank-circulant    rank(circulant(l)) = n - deg g
///   circulant-route   rowspace(circulant(l)) = <g>
///   definition-route  image code of ell_from_generator = codewords of <g> (needs q^n <= cap);
///                     on mismatch the detail says whether it is the reciprocal code <g*>
///   definition-direct image code of ell_direct_from_generator = <g>  (needs q^n <= cap)
///   cyclic            every enumerated set is shift-closed              (needs q^k <= cap)
///   lambda-route      C_lambda = <g>, lambda from h                      (deg h <= n-1)
///   dim-b-lambda      dim C_lambda = n - rank(B_lambda) = deg h
///   coset-bound       dim C_lambda >= n - |coset(s)|                    (needs gamma)
///
/// Checks whose preconditions fail are reported as skip with the reason.
VerificationReport verify_equivalence(const Poly& g, const NormalBasis& basis, const VerifyOptions& options = {});

std::string to_string(CheckStatus s);
/// One "PASS|FAIL|SKIP <id> <detail>" line per check.
std::string format_report(const VerificationReport& report);

}  // namespace qcyc

#endif  // QCYC_BRIDGES_HPP
