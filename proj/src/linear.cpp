#include "locsys/linear.hpp"

#include "locsys/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace locsys {

bool is_zero_vector(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return Field::is_zero(s); });
}

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

std::optional<std::size_t> leading_index(std::span<const Scalar> v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!Field::is_zero(v[i])) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------- Mat

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Mat Mat::identity(Field field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Mat Mat::from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
    Mat m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row length does not match column count");
        for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = field.normalize(rows[r][c]);
    }
    return m;
}

Mat Mat::from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols) {
    Mat m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionMismatch("column length does not match row count");
        for (std::size_t r = 0; r < rows; ++r) m.data_[r * cols.size() + c] = field.normalize(cols[c][r]);
    }
    return m;
}

Vec Mat::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Vec> Mat::row_vectors() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

std::vector<Vec> Mat::column_vectors() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

Vec Mat::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (Field::is_zero(v[c])) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = data_[r * cols_ + c];
            if (!Field::is_zero(a)) field_.fma(out[r], a, v[c]);
        }
    }
    return out;
}

Mat Mat::transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

std::size_t Mat::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Scalar& s) { return !Field::is_zero(s); }));
}

Mat operator*(const Mat& a, const Mat& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (Field::is_zero(x)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!Field::is_zero(y)) a.field_.fma(out.data_[i * b.cols_ + j], x, y);
            }
        }
    return out;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- row reduction

namespace detail {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return result;
}

// Same elimination on machine words; p < 2^32 keeps products in 64 bits.
EchelonRows rref_dense_mod(const Field& field, std::size_t cols, const std::vector<Vec>& input) {
    const std::uint64_t p = field.characteristic();
    std::vector<std::vector<std::uint64_t>> rows(input.size(), std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < input.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const Scalar& x = input[r][c];
            if (Field::is_zero(x)) continue;
            const bool reduced = x.get_den() == 1 && sgn(x.get_num()) > 0 && x.get_num() < p;
            rows[r][c] = reduced ? x.get_num().get_ui() : field.normalize(x).get_num().get_ui();
        }
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t r = rank;
        while (r < rows.size() && rows[r][c] == 0) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[rank], rows[r]);
        auto& pivot_row = rows[rank];
        const std::uint64_t scale = inverse_mod(pivot_row[c], p);
        for (std::size_t j = c; j < cols; ++j) pivot_row[j] = pivot_row[j] * scale % p;
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == rank || rows[other][c] == 0) continue;
            const std::uint64_t factor = p - rows[other][c];
            auto& row = rows[other];
            for (std::size_t j = c; j < cols; ++j)
                if (pivot_row[j] != 0) row[j] = (row[j] + factor * pivot_row[j]) % p;
        }
        pivots.push_back(c);
        ++rank;
    }
    std::vector<Vec> out(rank, Vec(cols));
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] != 0) out[r][c] = static_cast<unsigned long>(rows[r][c]);
    return {std::move(out), std::move(pivots)};
}

} // namespace

EchelonRows rref_dense(const Field& field, std::size_t cols, std::vector<Vec> rows) {
    if (!field.is_rationals()) return rref_dense_mod(field, cols, rows);
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t r = rank;
        while (r < rows.size() && Field::is_zero(rows[r][c])) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[rank], rows[r]);
        Vec& pivot_row = rows[rank];
        Scalar scale = field.inv(pivot_row[c]);
        for (std::size_t j = c; j < cols; ++j) pivot_row[j] = field.mul(pivot_row[j], scale);
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == rank || Field::is_zero(rows[other][c])) continue;
            Scalar factor = rows[other][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!Field::is_zero(pivot_row[j]))
                    rows[other][j] = field.sub(rows[other][j], field.mul(factor, pivot_row[j]));
        }
        pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    return {std::move(rows), std::move(pivots)};
}

EchelonRows rref_sparse(const Field& field, std::size_t cols, const std::vector<Vec>& rows) {
    using Sparse = std::vector<std::pair<std::size_t, Scalar>>;
    // Fully reduced basis keyed by pivot column; every stored row has a 1 at
    // its pivot and zeros at all other pivots.
    std::map<std::size_t, Sparse> basis;
    Vec acc(cols);
    std::vector<std::size_t> touched;
    std::vector<char> mark(cols, 0);

    auto touch = [&](std::size_t c) {
        if (!mark[c]) {
            mark[c] = 1;
            touched.push_back(c);
        }
    };

    for (const Vec& row : rows) {
        touched.clear();
        for (std::size_t c = 0; c < cols; ++c)
            if (!Field::is_zero(row[c])) {
                acc[c] = row[c];
                touch(c);
            }
        if (touched.empty()) continue;
        // Coefficients at pivot columns are read before any subtraction: the
        // basis rows vanish on each other's pivots.
        std::vector<std::pair<const Sparse*, Scalar>> hits;
        for (std::size_t c : touched) {
            auto it = basis.find(c);
            if (it != basis.end()) hits.emplace_back(&it->second, acc[c]);
        }
        for (auto& [brow, factor] : hits)
            for (const auto& [c, v] : *brow) {
                touch(c);
                acc[c] = field.sub(acc[c], field.mul(factor, v));
            }
        Sparse reduced;
        std::sort(touched.begin(), touched.end());
        for (std::size_t c : touched) {
            if (!Field::is_zero(acc[c])) reduced.emplace_back(c, acc[c]);
            acc[c] = 0;
            mark[c] = 0;
        }
        if (reduced.empty()) continue;
        std::size_t pivot = reduced.front().first;
        Scalar scale = field.inv(reduced.front().second);
        for (auto& [c, v] : reduced) v = field.mul(v, scale);
        // Clear the new pivot from existing rows.
        for (auto& [p, brow] : basis) {
            auto hit = std::find_if(brow.begin(), brow.end(), [&](const auto& e) { return e.first == pivot; });
            if (hit == brow.end()) continue;
            Scalar factor = hit->second;
            std::map<std::size_t, Scalar> merged(brow.begin(), brow.end());
            for (const auto& [c, v] : reduced) {
                Scalar& slot = merged[c];
                slot = field.sub(slot, field.mul(factor, v));
            }
            Sparse next;
            for (auto& [c, v] : merged)
                if (!Field::is_zero(v)) next.emplace_back(c, v);
            brow = std::move(next);
        }
        basis.emplace(pivot, std::move(reduced));
    }

    EchelonRows out;
    for (auto& [p, brow] : basis) {
        Vec dense(cols);
        for (auto& [c, v] : brow) dense[c] = v;
        out.rows.push_back(std::move(dense));
        out.pivots.push_back(p);
    }
    return out;
}

EchelonRows rref_rows(const Field& field, std::size_t cols, std::vector<Vec> rows) {
    std::size_t nnz = 0;
    for (const Vec& r : rows)
        for (const Scalar& s : r)
            if (!Field::is_zero(s)) ++nnz;
    std::size_t cells = rows.size() * cols;
    if (cells > 0 && nnz * 10 < cells) return rref_sparse(field, cols, rows);
    return rref_dense(field, cols, std::move(rows));
}

} // namespace detail

Mat rref(const Mat& m) {
    auto reduced = detail::rref_rows(m.field(), m.cols(), m.row_vectors());
    Mat out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < reduced.rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, reduced.rows[r][c]);
    return out;
}

std::size_t rank(const Mat& m) {
    return detail::rref_rows(m.field(), m.cols(), m.row_vectors()).rows.size();
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    Subspace s(field, ambient_dim);
    std::vector<Vec> rows;
    rows.reserve(vectors.size());
    for (const Vec& v : vectors) {
        if (v.size() != ambient_dim) throw DimensionMismatch("vector length does not match ambient dimension");
        if (is_zero_vector(v)) continue;
        Vec n(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) n[i] = field.normalize(v[i]);
        rows.push_back(std::move(n));
    }
    auto reduced = detail::rref_rows(field, ambient_dim, std::move(rows));
    s.basis_ = std::move(reduced.rows);
    s.pivots_ = std::move(reduced.pivots);
    return s;
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
    Subspace s(field, ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back(unit_vector(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

std::vector<std::size_t> Subspace::non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (next < pivots_.size() && pivots_[next] == c) {
            ++next;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

void Subspace::check_length(std::size_t n) const {
    if (n != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
}

Vec Subspace::reduce(std::span<const Scalar> v) const {
    check_length(v.size());
    Vec w(v.begin(), v.end());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        Scalar factor = w[pivots_[r]];
        if (Field::is_zero(factor)) continue;
        const Vec& row = basis_[r];
        for (std::size_t c = pivots_[r]; c < ambient_; ++c)
            if (!Field::is_zero(row[c])) w[c] = field_.sub(w[c], field_.mul(factor, row[c]));
    }
    return w;
}

bool Subspace::contains(std::span<const Scalar> w) const {
    return is_zero_vector(reduce(w));
}

bool Subspace::contains(const Subspace& other) const {
    require_same_ambient(*this, other);
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(std::span<const Scalar> v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(basis_.size());
    for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
}

Vec Subspace::combine(std::span<const Scalar> coeffs) const {
    if (coeffs.size() != basis_.size()) throw DimensionMismatch("coefficient count does not match subspace dimension");
    Vec out(ambient_);
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        if (Field::is_zero(coeffs[r])) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!Field::is_zero(basis_[r][c])) field_.fma(out[c], coeffs[r], basis_[r][c]);
    }
    return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

void require_same_ambient(const Subspace& u, const Subspace& v) {
    require_same_field(u.field(), v.field());
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspaces live in different ambient spaces");
}

Subspace kernel(const Mat& m) {
    auto reduced = detail::rref_rows(m.field(), m.cols(), m.row_vectors());
    const Field& f = m.field();
    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t p : reduced.pivots) is_pivot[p] = 1;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < reduced.rows.size(); ++r) v[reduced.pivots[r]] = f.neg(reduced.rows[r][free]);
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, m.cols(), basis);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    std::vector<Vec> rows = u.basis();
    rows.insert(rows.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(u.field(), u.ambient_dim(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    const Field& f = u.field();
    if (u.is_zero() || v.is_zero()) return Subspace(f, u.ambient_dim());
    // Solve sum a_i u_i - sum b_j v_j = 0.
    std::vector<Vec> cols = u.basis();
    for (const Vec& w : v.basis()) {
        Vec n(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) n[i] = f.neg(w[i]);
        cols.push_back(std::move(n));
    }
    Subspace relations = kernel(Mat::from_columns(f, u.ambient_dim(), cols));
    std::vector<Vec> common;
    for (const Vec& rel : relations.basis())
        common.push_back(u.combine(std::span<const Scalar>(rel).first(u.dim())));
    return Subspace::span(f, u.ambient_dim(), common);
}

Subspace row_space(const Mat& m) {
    return Subspace::span(m.field(), m.cols(), m.row_vectors());
}

Subspace image(const Mat& m) {
    return Subspace::span(m.field(), m.rows(), m.column_vectors());
}

std::optional<Vec> solve(const Mat& a, std::span<const Scalar> b) {
    if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length does not match row count");
    const Field& f = a.field();
    std::vector<Vec> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Vec row(a.row(r).begin(), a.row(r).end());
        row.push_back(f.normalize(b[r]));
        rows.push_back(std::move(row));
    }
    auto reduced = detail::rref_rows(f, a.cols() + 1, std::move(rows));
    Vec x(a.cols());
    for (std::size_t r = 0; r < reduced.rows.size(); ++r) {
        if (reduced.pivots[r] == a.cols()) return std::nullopt;
        x[reduced.pivots[r]] = reduced.rows[r][a.cols()];
    }
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < n; ++r) {
        Vec row(m.row(r).begin(), m.row(r).end());
        row.resize(2 * n);
        row[n + r] = 1;
        rows.push_back(std::move(row));
    }
    auto reduced = detail::rref_dense(m.field(), 2 * n, std::move(rows));
    if (reduced.rows.size() < n || (n > 0 && reduced.pivots[n - 1] != n - 1)) return std::nullopt;
    Mat inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, reduced.rows[r][n + c]);
    return inv;
}

// ---------------------------------------------------------------- Echelon

SpanBuilder::SpanBuilder(Field field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim), row_at_(ambient_dim, -1), work_(ambient_dim) {}

bool SpanBuilder::insert(std::span<const Scalar> v) {
    if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
    if (is_full()) return false;
    for (std::size_t i = 0; i < ambient_; ++i)
        if (!Field::is_zero(v[i])) work_[i] = field_.is_rationals() ? v[i] : field_.normalize(v[i]);
    // Rows are monic at their pivot and vanish left of it, so one sweep clears
    // every pivot column.
    std::optional<std::size_t> lead;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (Field::is_zero(work_[c])) continue;
        if (row_at_[c] < 0) {
            if (!lead) lead = c;
            continue;
        }
        const Scalar factor = work_[c];
        for (const auto& [k, x] : rows_[static_cast<std::size_t>(row_at_[c])]) field_.fms(work_[k], factor, x);
    }
    if (!lead) return false;
    const Scalar scale = field_.inv(work_[*lead]);
    SparseRow row;
    for (std::size_t c = *lead; c < ambient_; ++c)
        if (!Field::is_zero(work_[c])) row.emplace_back(c, field_.mul(work_[c], scale));
    for (auto& x : work_) x = 0;
    row_at_[*lead] = static_cast<std::ptrdiff_t>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

std::vector<Vec> SpanBuilder::vectors() const {
    std::vector<Vec> out;
    for (const auto& row : rows_) {
        Vec v(ambient_);
        for (const auto& [k, x] : row) v[k] = x;
        out.push_back(std::move(v));
    }
    return out;
}

Subspace SpanBuilder::subspace() const {
    if (is_full()) return Subspace::full(field_, ambient_);
    return Subspace::span(field_, ambient_, vectors());
}

Echelon::Echelon(Field field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

std::optional<Vec> Echelon::express(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
    Vec w(v.begin(), v.end());
    Vec coeffs(rows_.size());
    // Rows form a semi-echelon system: row t vanishes at the pivots of rows
    // inserted before it, so one ordered sweep suffices.
    for (const Row& row : rows_) {
        if (Field::is_zero(w[row.pivot])) continue;
        Scalar factor = w[row.pivot];
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!Field::is_zero(row.vector[c])) w[c] = field_.sub(w[c], field_.mul(factor, row.vector[c]));
        for (std::size_t s = 0; s < row.combination.size(); ++s)
            if (!Field::is_zero(row.combination[s])) field_.fma(coeffs[s], factor, row.combination[s]);
    }
    if (!is_zero_vector(w)) return std::nullopt;
    return coeffs;
}

bool Echelon::insert(std::span<const Scalar> v) {
    if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = field_.normalize(v[i]);
    Vec comb(rows_.size() + 1);
    comb.back() = 1;
    for (const Row& row : rows_) {
        if (Field::is_zero(w[row.pivot])) continue;
        Scalar factor = w[row.pivot];
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!Field::is_zero(row.vector[c])) w[c] = field_.sub(w[c], field_.mul(factor, row.vector[c]));
        for (std::size_t s = 0; s < row.combination.size(); ++s)
            if (!Field::is_zero(row.combination[s]))
                comb[s] = field_.sub(comb[s], field_.mul(factor, row.combination[s]));
    }
    auto lead = leading_index(w);
    if (!lead) return false;
    Scalar scale = field_.inv(w[*lead]);
    for (Scalar& x : w) x = field_.mul(x, scale);
    for (Scalar& x : comb) x = field_.mul(x, scale);
    rows_.push_back({std::move(w), *lead, std::move(comb)});
    return true;
}

} // namespace locsys
