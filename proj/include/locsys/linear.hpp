#pragma once

#include "locsys/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace locsys {

using Vec = std::vector<Scalar>;

bool is_zero_vector(std::span<const Scalar> v);
Vec unit_vector(std::size_t n, std::size_t i);
std::optional<std::size_t> leading_index(std::span<const Scalar> v);

/// Dense exact matrix over a single field.
class Mat {
public:
    Mat() = default;
    Mat(Field field, std::size_t rows, std::size_t cols);

    static Mat identity(Field field, std::size_t n);
    static Mat from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);
    static Mat from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Stores the field-normalized value.
    void set(std::size_t r, std::size_t c, const Scalar& v) { data_[r * cols_ + c] = field_.normalize(v); }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec column(std::size_t c) const;
    std::vector<Vec> row_vectors() const;
    std::vector<Vec> column_vectors() const;

    /// Matrix-vector product M * v.
    Vec apply(std::span<const Scalar> v) const;
    Mat transpose() const;
    std::size_t nonzeros() const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form; same shape, zero rows last.
Mat rref(const Mat& m);
std::size_t rank(const Mat& m);

/// A subspace of F^n stored by its reduced row echelon basis. Two equal
/// subspaces have identical stored bases, so equality is structural.
class Subspace {
public:
    Subspace() = default;
    /// The zero subspace.
    Subspace(Field field, std::size_t ambient_dim);

    static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace full(Field field, std::size_t ambient_dim);

    const Field& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool is_zero() const noexcept { return basis_.empty(); }
    bool is_full() const noexcept { return basis_.size() == ambient_; }

    const std::vector<Vec>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// Columns that are not pivots, increasing.
    std::vector<std::size_t> non_pivots() const;

    bool contains(std::span<const Scalar> w) const;
    bool contains(const Subspace& other) const;
    /// Remainder of v modulo the subspace; zero exactly at pivot columns.
    Vec reduce(std::span<const Scalar> v) const;
    /// Coefficients of v in the stored basis, or nullopt if v is outside.
    std::optional<Vec> coordinates(std::span<const Scalar> v) const;
    /// Image of coefficients in ambient coordinates.
    Vec combine(std::span<const Scalar> coeffs) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    void check_length(std::size_t n) const;

    Field field_;
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Throws DimensionMismatch or FieldMismatch unless both live in the same F^n.
void require_same_ambient(const Subspace& u, const Subspace& v);

Subspace kernel(const Mat& m);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// Row space of m.
Subspace row_space(const Mat& m);
/// Column space of m, i.e. the image of the linear map.
Subspace image(const Mat& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// One solution of a * x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Mat& a, std::span<const Scalar> b);

/// Incrementally grown list of independent vectors with the ability to
/// express a vector in terms of the ones inserted so far.
class Echelon {
public:
    Echelon(Field field, std::size_t ambient_dim);

    std::size_t size() const noexcept { return rows_.size(); }
    /// Coefficients c with v = sum c[s] * inserted[s], or nullopt.
    std::optional<Vec> express(std::span<const Scalar> v) const;
    /// Inserts v when independent (returns true), otherwise leaves the set unchanged.
    bool insert(std::span<const Scalar> v);

private:
    struct Row {
        Vec vector;
        std::size_t pivot;
        Vec combination;
    };
    Field field_;
    std::size_t ambient_;
    std::vector<Row> rows_;
};

/// Span accumulator for many candidate vectors: sparse semi-echelon rows and
/// a cheap test for having reached the whole space.
class SpanBuilder {
public:
    SpanBuilder(Field field, std::size_t ambient_dim);

    std::size_t size() const noexcept { return rows_.size(); }
    bool is_full() const noexcept { return rows_.size() == ambient_; }
    /// Adds v when it is independent of what is there; returns whether it was.
    bool insert(std::span<const Scalar> v);
    /// Independent vectors inserted so far, in insertion order (dense).
    std::vector<Vec> vectors() const;
    Subspace subspace() const;

private:
    using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;
    Field field_;
    std::size_t ambient_;
    std::vector<SparseRow> rows_;
    std::vector<std::ptrdiff_t> row_at_; // pivot column -> row, or -1
    Vec work_;
};

namespace detail {

struct EchelonRows {
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan on dense storage.
EchelonRows rref_dense(const Field& field, std::size_t cols, std::vector<Vec> rows);
/// Gauss-Jordan on sorted (column, value) rows.
EchelonRows rref_sparse(const Field& field, std::size_t cols, const std::vector<Vec>& rows);
/// Dispatches on density: sparse below 10% nonzeros.
EchelonRows rref_rows(const Field& field, std::size_t cols, std::vector<Vec> rows);

} // namespace detail

} // namespace locsys
