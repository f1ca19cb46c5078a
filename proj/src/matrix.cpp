#include "qcyc/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "qcyc/error.hpp"
#include "qcyc/text.hpp"

namespace qcyc {

GFqMatrix::GFqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : GFqMatrix(std::move(field), rows, cols, ScalarVec(rows * cols)) {}

GFqMatrix::GFqMatrix(FieldPtr field, std::size_t rows, std::size_t cols, ScalarVec entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
    if (cols_ == 0) throw std::invalid_argument("matrix must have at least one column");
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("entry count does not match shape");
    for (auto e : entries_)
        if (!field_->contains(e)) throw std::invalid_argument("matrix entry outside GF(q)");
}

GFqMatrix GFqMatrix::identity(FieldPtr field, std::size_t n) {
    ScalarVec e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = field->one();
    return GFqMatrix(std::move(field), n, n, std::move(e));
}

GFqMatrix GFqMatrix::from_rows(FieldPtr field, const std::vector<ScalarVec>& rows, std::size_t cols) {
    ScalarVec e;
    e.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    return GFqMatrix(std::move(field), rows.size(), cols, std::move(e));
}

GFqMatrix GFqMatrix::circulant(FieldPtr field, std::span<const Scalar> first_column) {
    const std::size_t n = first_column.size();
    if (n == 0) throw std::invalid_argument("circulant of an empty vector");
    ScalarVec e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = first_column[(i + n - j) % n];
    return GFqMatrix(std::move(field), n, n, std::move(e));
}

std::vector<ScalarVec> GFqMatrix::row_vectors() const {
    std::vector<ScalarVec> out;
    for (std::size_t i = 0; i < rows_; ++i) out.emplace_back(row(i).begin(), row(i).end());
    return out;
}

GFqMatrix GFqMatrix::transpose() const {
    if (rows_ == 0) throw std::invalid_argument("cannot transpose a matrix without rows");
    ScalarVec e(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = entries_[i * cols_ + j];
    return GFqMatrix(field_, cols_, rows_, std::move(e));
}

EchelonForm rref(const GFqMatrix& m) {
    const BaseField& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    ScalarVec a = m.entries();
    std::vector<std::size_t> pivots;
    std::size_t top = 0;
    for (std::size_t col = 0; col < cols && top < rows; ++col) {
        std::size_t pr = top;
        while (pr < rows && a[pr * cols + col].code == 0) ++pr;
        if (pr == rows) continue;
        if (pr != top)
            std::swap_ranges(a.begin() + pr * cols, a.begin() + (pr + 1) * cols, a.begin() + top * cols);
        const Scalar s = f.inv(a[top * cols + col]);
        for (std::size_t j = col; j < cols; ++j) a[top * cols + j] = f.mul(s, a[top * cols + j]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == top) continue;
            const Scalar c = a[i * cols + col];
            if (c.code == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(c, a[top * cols + j]));
        }
        pivots.push_back(col);
        ++top;
    }
    return {GFqMatrix(m.field_ptr(), rows, cols, std::move(a)), std::move(pivots)};
}

std::size_t rank(const GFqMatrix& m) { return rref(m).pivots.size(); }

GFqMatrix row_basis(const GFqMatrix& m) {
    auto ech = rref(m);
    const std::size_t k = ech.pivots.size();
    ScalarVec e(ech.reduced.entries().begin(), ech.reduced.entries().begin() + k * m.cols());
    return GFqMatrix(m.field_ptr(), k, m.cols(), std::move(e));
}

std::vector<ScalarVec> nullspace(const GFqMatrix& m) {
    const BaseField& f = m.field();
    const auto ech = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<ScalarVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ScalarVec v(m.cols());
        v[free] = f.one();
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = f.neg(ech.reduced.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

bool row_space_equal(const GFqMatrix& a, const GFqMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("row_space_equal: column counts differ");
    if (!(a.field() == b.field())) throw std::invalid_argument("row_space_equal: matrices over different fields");
    const GFqMatrix ra = row_basis(a), rb = row_basis(b);
    return ra.rows() == rb.rows() && ra.entries() == rb.entries();
}

ScalarVec mat_vec(const GFqMatrix& m, std::span<const Scalar> v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: length mismatch");
    const BaseField& f = m.field();
    ScalarVec out(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (v[j].code == 0) continue;
        for (std::size_t i = 0; i < m.rows(); ++i) out[i] = f.add(out[i], f.mul(m.entries()[i * m.cols() + j], v[j]));
    }
    return out;
}

GFqMatrix multiply(const GFqMatrix& a, const GFqMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    if (!(a.field() == b.field())) throw std::invalid_argument("multiply: matrices over different fields");
    const BaseField& f = a.field();
    ScalarVec e(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar c = a.at(i, k);
            if (c.code == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                e[i * b.cols() + j] = f.add(e[i * b.cols() + j], f.mul(c, b.at(k, j)));
        }
    return GFqMatrix(a.field_ptr(), a.rows(), b.cols(), std::move(e));
}

GFqMatrix inverse(const GFqMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::domain_error("inverse of a non-square matrix");
    ScalarVec aug(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = m.at(i, j);
        aug[i * 2 * n + n + i] = m.field().one();
    }
    const auto ech = rref(GFqMatrix(m.field_ptr(), n, 2 * n, std::move(aug)));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    ScalarVec inv(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = ech.reduced.at(i, n + j);
    return GFqMatrix(m.field_ptr(), n, n, std::move(inv));
}

std::uint64_t span_size(const BaseField& f, std::size_t k) noexcept {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (s > std::numeric_limits<std::uint64_t>::max() / f.order()) return 0;
        s *= f.order();
    }
    return s;
}

void for_each_in_row_space(const GFqMatrix& m, std::uint64_t cap,
                           const std::function<void(std::span<const Scalar>)>& visit) {
    const BaseField& f = m.field();
    const GFqMatrix basis = row_basis(m);
    const std::uint64_t total = span_size(f, basis.rows());
    if (total == 0 || total > cap)
        throw CapExceeded("row space of dimension " + std::to_string(basis.rows()) + " over GF(" +
                          std::to_string(f.order()) + ") exceeds the enumeration cap " + std::to_string(cap));

    // Additive generators over GF(p): t^j * row_i for every basis row i and j < m.
    const std::size_t cols = m.cols();
    std::vector<ScalarVec> gens;
    std::uint32_t unit = 1;
    for (std::uint32_t j = 0; j < f.degree(); ++j, unit *= f.characteristic())
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            ScalarVec g(cols);
            for (std::size_t c = 0; c < cols; ++c) g[c] = f.mul(Scalar{unit}, basis.at(i, c));
            gens.push_back(std::move(g));
        }

    ScalarVec cur(cols);
    std::vector<std::uint32_t> digit(gens.size(), 0);
    visit(cur);
    for (std::uint64_t step = 1; step < total; ++step) {
        // p-ary counter; a digit wrapping from p-1 to 0 has added its generator p times, which
        // cancels, so the running vector stays equal to the counter's combination.
        for (std::size_t t = 0;; ++t) {
            for (std::size_t c = 0; c < cols; ++c) cur[c] = f.add(cur[c], gens[t][c]);
            if (++digit[t] < f.characteristic()) break;
            digit[t] = 0;
        }
        visit(cur);
    }
}

std::vector<ScalarVec> enumerate_row_space(const GFqMatrix& m, std::uint64_t cap) {
    std::vector<ScalarVec> out;
    for_each_in_row_space(m, cap, [&](std::span<const Scalar> v) { out.emplace_back(v.begin(), v.end()); });
    std::sort(out.begin(), out.end());
    return out;
}

std::string export_matrix(const GFqMatrix& m) {
    const BaseField& f = m.field();
    std::string out = "gfq-matrix\n";
    out += "p: " + std::to_string(f.characteristic()) + "\n";
    out += "m: " + std::to_string(f.degree()) + "\n";
    out += "base_poly: " + text::format_integers(f.modulus()) + "\n";
    out += "level: q\n";
    out += "rows: " + std::to_string(m.rows()) + "\n";
    out += "cols: " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) out += "row: " + text::format_scalars(m.row(i)) + "\n";
    return out;
}

namespace {

class LineReader {
   public:
    explicit LineReader(std::string_view text) : text_(text) {}

    std::size_t line() const noexcept { return line_; }

    std::string_view next(std::string_view what) {
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input, expected " + std::string(what), line_ + 1);
        const std::size_t nl = text_.find('\n', pos_);
        std::string_view l = text_.substr(pos_, nl == text_.npos ? text_.npos : nl - pos_);
        pos_ = nl == text_.npos ? text_.size() : nl + 1;
        ++line_;
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
        return l;
    }

    std::string_view field(std::string_view key) {
        const std::string_view l = next(std::string(key) + ":");
        const std::string prefix = std::string(key) + ": ";
        if (l.substr(0, prefix.size()) != prefix) throw ParseError("expected \"" + prefix + "...\"", line_);
        return l.substr(prefix.size());
    }

    std::uint64_t number(std::string_view key) {
        const std::string_view v = field(key);
        std::uint64_t out = 0;
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || ptr != v.data() + v.size())
            throw ParseError("bad value for " + std::string(key), line_);
        return out;
    }

    bool at_end() const {
        return text_.find_first_not_of(" \t\r\n", pos_) == std::string_view::npos;
    }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

}  // namespace

GFqMatrix import_matrix(std::string_view text, const FieldPtr& expected) {
    LineReader in(text);
    if (in.next("header") != "gfq-matrix") throw ParseError("missing gfq-matrix header", in.line());
    const std::uint64_t p = in.number("p");
    const std::uint64_t m = in.number("m");
    std::vector<std::uint32_t> modulus;
    try {
        modulus = text::parse_integers(in.field("base_poly"));
    } catch (const ParseError& e) {
        throw ParseError(e.what(), in.line());
    }
    if (modulus.size() != m + 1) throw ParseError("base_poly degree does not match m", in.line());
    if (in.field("level") != "q") throw ParseError("only q-level matrices are supported", in.line());
    const std::uint64_t rows = in.number("rows");
    const std::uint64_t cols = in.number("cols");
    if (cols == 0) throw ParseError("cols must be positive", in.line());

    FieldPtr field;
    try {
        field = std::make_shared<const BaseField>(static_cast<std::uint32_t>(p), modulus);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid field: ") + e.what(), in.line());
    }
    if (expected) {
        if (!(*expected == *field)) throw std::invalid_argument("matrix field does not match the expected tower");
        field = expected;
    }

    std::vector<ScalarVec> row_list;
    for (std::uint64_t i = 0; i < rows; ++i) {
        const std::string_view v = in.field("row");
        ScalarVec r;
        try {
            r = text::parse_scalars(*field, v);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), in.line());
        }
        if (r.size() != cols) throw ParseError("row has " + std::to_string(r.size()) + " entries, expected " +
                                                   std::to_string(cols), in.line());
        row_list.push_back(std::move(r));
    }
    if (!in.at_end()) throw ParseError("trailing content after the last row", in.line() + 1);
    return GFqMatrix::from_rows(field, row_list, cols);
}

}  // namespace qcyc
