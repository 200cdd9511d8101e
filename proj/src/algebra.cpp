#include "locsys/algebra.hpp"

#include "locsys/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace locsys {

namespace {

std::vector<std::string> default_names(std::size_t dim) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    return names;
}

std::string unit_name(std::size_t n, std::size_t i, std::size_t j) {
    if (n <= 9) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
    return "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

// out += (columns) y; out must have the right length.
void accumulate_columns(const Field& f, const std::vector<std::vector<Algebra::Term>>& cols, std::span<const Scalar> y,
                        Vec& out) {
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (Field::is_zero(y[j])) continue;
        for (const auto& t : cols[j]) f.fma(out[t.k], t.value, y[j]);
    }
}

Vec apply_columns(const Field& f, const std::vector<std::vector<Algebra::Term>>& cols, std::span<const Scalar> y) {
    Vec out(cols.size());
    accumulate_columns(f, cols, y, out);
    return out;
}

std::vector<std::pair<std::size_t, const Scalar*>> support(std::span<const Scalar> v) {
    std::vector<std::pair<std::size_t, const Scalar*>> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!Field::is_zero(v[i])) out.emplace_back(i, &v[i]);
    return out;
}

// Matrix units e_ij (i, j in `cells`) of an n x n pattern closed under products.
Algebra matrix_pattern(std::size_t n, Field field, const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                       std::string label) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<std::string> names;
    for (const auto& [i, j] : cells) {
        index.emplace(std::make_pair(i, j), names.size());
        names.push_back(unit_name(n, i, j));
    }
    std::vector<StructureConstant> sc;
    for (const auto& [a, b] : cells)
        for (const auto& [c, d] : cells) {
            if (b != c) continue;
            auto it = index.find({a, d});
            if (it == index.end()) throw InvalidArgument("matrix pattern is not closed under products");
            sc.push_back({index.at({a, b}), index.at({c, d}), it->second, Scalar(1)});
        }
    return Algebra(field, cells.size(), sc, std::move(label), std::move(names));
}

} // namespace

Algebra::Algebra(Field field, std::size_t dim, const std::vector<StructureConstant>& constants, std::string label,
                 std::vector<std::string> basis_names)
    : field_(field), dim_(dim), label_(std::move(label)), names_(std::move(basis_names)), table_(dim * dim) {
    if (names_.empty()) names_ = default_names(dim);
    if (names_.size() != dim) throw DimensionMismatch("basis name count does not match dimension");
    std::set<std::string> distinct(names_.begin(), names_.end());
    if (distinct.size() != names_.size()) throw InvalidArgument("basis names must be distinct");

    std::map<std::array<std::size_t, 3>, Scalar> merged;
    for (const auto& c : constants) {
        if (c.i >= dim || c.j >= dim || c.k >= dim) throw DimensionMismatch("structure constant index out of range");
        Scalar& slot = merged[{c.i, c.j, c.k}];
        slot = field_.add(slot, field_.normalize(c.value));
    }
    for (const auto& [key, value] : merged) {
        if (Field::is_zero(value)) continue;
        table_[key[0] * dim_ + key[1]].push_back({key[2], value});
    }
}

std::vector<StructureConstant> Algebra::structure_constants() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const Term& t : table_[i * dim_ + j]) out.push_back({i, j, t.k, t.value});
    return out;
}

std::size_t Algebra::nonzero_constants() const {
    std::size_t n = 0;
    for (const auto& terms : table_) n += terms.size();
    return n;
}

Vec Algebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("element does not belong to this algebra");
    Vec out(dim_);
    auto sx = support(x);
    auto sy = support(y);
    for (const auto& [i, xi] : sx)
        for (const auto& [j, yj] : sy) {
            const auto& terms = table_[i * dim_ + j];
            if (terms.empty()) continue;
            Scalar coeff = field_.mul(*xi, *yj);
            for (const Term& t : terms) field_.fma(out[t.k], coeff, t.value);
        }
    return out;
}

std::vector<std::vector<Algebra::Term>> Algebra::left_multiplication(std::span<const Scalar> x) const {
    if (x.size() != dim_) throw DimensionMismatch("element does not belong to this algebra");
    auto sx = support(x);
    std::vector<std::vector<Term>> cols(dim_);
    Vec acc(dim_);
    std::vector<std::size_t> touched;
    for (std::size_t j = 0; j < dim_; ++j) {
        for (const auto& [i, xi] : sx)
            for (const Term& t : table_[i * dim_ + j]) {
                if (Field::is_zero(acc[t.k])) touched.push_back(t.k);
                field_.fma(acc[t.k], *xi, t.value);
            }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (std::size_t k : touched) {
            if (!Field::is_zero(acc[k])) cols[j].push_back({k, acc[k]});
            acc[k] = 0;
        }
        touched.clear();
    }
    return cols;
}

Algebra Algebra::with_label(std::string label) const {
    Algebra copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.label_ == b.label_ && a.names_ == b.names_ &&
           a.structure_constants() == b.structure_constants();
}

AssociativityReport check_associativity(const Algebra& a) {
    const Field& f = a.field();
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const auto& jk = a.product(j, k);
                if (ij.empty() && jk.empty()) continue;
                std::map<std::size_t, Scalar> lhs, rhs;
                for (const auto& m : ij)
                    for (const auto& t : a.product(m.k, k)) f.fma(lhs[t.k], m.value, t.value);
                for (const auto& m : jk)
                    for (const auto& t : a.product(i, m.k)) f.fma(rhs[t.k], m.value, t.value);
                std::set<std::size_t> keys;
                for (const auto& [l, v] : lhs) keys.insert(l);
                for (const auto& [l, v] : rhs) keys.insert(l);
                for (std::size_t l : keys) {
                    Scalar x = lhs.count(l) ? lhs[l] : Scalar(0);
                    Scalar y = rhs.count(l) ? rhs[l] : Scalar(0);
                    if (x != y) return {false, {i, j, k, l}, x, y};
                }
            }
        }
    return {};
}

Algebra matrix_algebra(std::size_t n, Field field) {
    if (n == 0) throw InvalidArgument("matrix algebra size must be positive");
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cells.emplace_back(i, j);
    return matrix_pattern(n, field, cells, "M_" + std::to_string(n));
}

Algebra upper_triangular_algebra(std::size_t n, Field field) {
    if (n == 0) throw InvalidArgument("triangular algebra size must be positive");
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
    return matrix_pattern(n, field, cells, "T_" + std::to_string(n));
}

Algebra strictly_upper_algebra(std::size_t n, Field field) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
    return matrix_pattern(n, field, cells, "N_" + std::to_string(n));
}

Algebra null_algebra(std::size_t d, Field field) {
    return Algebra(field, d, {}, "null_" + std::to_string(d));
}

Algebra direct_sum(const Algebra& a, const Algebra& b, std::string label) {
    require_same_field(a.field(), b.field());
    std::vector<std::string> names = a.basis_names();
    std::set<std::string> seen(names.begin(), names.end());
    bool collide = std::any_of(b.basis_names().begin(), b.basis_names().end(),
                               [&](const std::string& s) { return seen.count(s) > 0; });
    if (collide)
        for (auto& s : names) s = "a." + s;
    for (const auto& s : b.basis_names()) names.push_back(collide ? "b." + s : s);

    auto sc = a.structure_constants();
    const std::size_t shift = a.dim();
    for (const auto& c : b.structure_constants()) sc.push_back({c.i + shift, c.j + shift, c.k + shift, c.value});
    if (label.empty()) label = a.label() + "+" + b.label();
    return Algebra(a.field(), a.dim() + b.dim(), sc, std::move(label), std::move(names));
}

Algebra change_basis(const Algebra& a, const Mat& rows, std::string label) {
    require_same_field(a.field(), rows.field());
    if (rows.rows() != a.dim() || rows.cols() != a.dim()) throw DimensionMismatch("basis change must be dim x dim");
    auto inv = inverse(rows);
    if (!inv) throw InvalidArgument("basis change matrix is singular");
    // New coordinates y of an old-coordinate vector w satisfy w = rows^T y.
    Mat to_new = inv->transpose();
    const Field& f = a.field();
    std::vector<StructureConstant> sc;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        const auto left = a.left_multiplication(rows.row(r));
        for (std::size_t s = 0; s < a.dim(); ++s) {
            Vec prod = apply_columns(f, left, rows.row(s));
            if (is_zero_vector(prod)) continue;
            Vec y = to_new.apply(prod);
            for (std::size_t t = 0; t < y.size(); ++t)
                if (!Field::is_zero(y[t])) sc.push_back({r, s, t, y[t]});
        }
    }
    if (label.empty()) label = a.label();
    return Algebra(f, a.dim(), sc, std::move(label));
}

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != a.dim() || v.ambient_dim() != a.dim())
        throw DimensionMismatch("subspace does not belong to this algebra");
    require_same_field(a.field(), u.field());
    require_same_field(a.field(), v.field());
    SpanBuilder products(a.field(), a.dim());
    Vec buffer(a.dim());
    for (const Vec& x : u.basis()) {
        const auto left = a.left_multiplication(x);
        for (const Vec& y : v.basis()) {
            accumulate_columns(a.field(), left, y, buffer);
            products.insert(buffer);
            for (auto& c : buffer) c = 0;
            if (products.is_full()) return Subspace::full(a.field(), a.dim());
        }
    }
    return products.subspace();
}

std::vector<Subspace> power_chain(const Algebra& a) {
    std::vector<Subspace> chain{a.full()};
    const Subspace whole = a.full();
    while (true) {
        Subspace next = subspace_product(a, whole, chain.back());
        if (next == chain.back()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

Subspace subalgebra_generated(const Algebra& a, const std::vector<Vec>& generators) {
    Subspace current = Subspace::span(a.field(), a.dim(), generators);
    while (true) {
        Subspace next = sum(current, subspace_product(a, current, current));
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

Subspace ideal_generated(const Algebra& a, const Subspace& s) {
    const Subspace whole = a.full();
    Subspace current = s;
    while (true) {
        Subspace next = sum(sum(current, subspace_product(a, whole, current)), subspace_product(a, current, whole));
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

bool is_ideal(const Algebra& a, const Subspace& u) {
    if (u.ambient_dim() != a.dim()) throw DimensionMismatch("subspace does not belong to this algebra");
    if (u.is_zero() || u.is_full()) return true;
    for (const Vec& x : u.basis())
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vec e = a.basis_vector(i);
            if (!u.contains(a.multiply(e, x)) || !u.contains(a.multiply(x, e))) return false;
        }
    return true;
}

bool is_subalgebra(const Algebra& a, const Subspace& u) {
    if (u.ambient_dim() != a.dim()) throw DimensionMismatch("subspace does not belong to this algebra");
    if (u.is_zero() || u.is_full()) return true;
    for (const Vec& x : u.basis()) {
        const auto left = a.left_multiplication(x);
        for (const Vec& y : u.basis())
            if (!u.contains(apply_columns(a.field(), left, y))) return false;
    }
    return true;
}

Vec Quotient::lift(std::span<const Scalar> q, std::size_t ambient_dim) const {
    if (q.size() != complement.size()) throw DimensionMismatch("quotient element has wrong length");
    Vec x(ambient_dim);
    for (std::size_t i = 0; i < complement.size(); ++i) x[complement[i]] = q[i];
    return x;
}

Quotient quotient(const Algebra& a, const Subspace& i) {
    if (!is_ideal(a, i)) throw NotAnIdeal("quotient requires a two-sided ideal");
    const Field& f = a.field();
    Quotient q;
    q.complement = i.non_pivots();
    const std::size_t m = q.complement.size();
    q.projection = Mat(f, m, a.dim());
    // Image of each e_j in quotient coordinates, kept sparse.
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> image(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec r = i.reduce(a.basis_vector(j));
        for (std::size_t t = 0; t < m; ++t)
            if (!Field::is_zero(r[q.complement[t]])) {
                q.projection.set(t, j, r[q.complement[t]]);
                image[j].emplace_back(t, r[q.complement[t]]);
            }
    }
    std::vector<StructureConstant> sc;
    std::vector<std::string> names;
    Vec acc(m);
    for (std::size_t s = 0; s < m; ++s) {
        names.push_back(a.basis_names()[q.complement[s]]);
        for (std::size_t t = 0; t < m; ++t) {
            std::vector<std::size_t> touched;
            for (const auto& term : a.product(q.complement[s], q.complement[t]))
                for (const auto& [u, c] : image[term.k]) {
                    if (Field::is_zero(acc[u])) touched.push_back(u);
                    f.fma(acc[u], term.value, c);
                }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (std::size_t u : touched) {
                if (!Field::is_zero(acc[u])) sc.push_back({s, t, u, acc[u]});
                acc[u] = 0;
            }
        }
    }
    q.algebra = Algebra(f, m, sc, a.label() + "/I", std::move(names));
    return q;
}

Algebra present_subalgebra(const Algebra& a, const Subspace& u, std::string label) {
    if (u.ambient_dim() != a.dim()) throw DimensionMismatch("subspace does not belong to this algebra");
    if (label.empty()) label = a.label() + "|sub";
    // The reduced basis of the whole space is the standard one.
    if (u.is_full()) return Algebra(a.field(), a.dim(), a.structure_constants(), std::move(label), a.basis_names());
    const auto& basis = u.basis();
    std::vector<std::string> names;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        auto support_size = std::count_if(basis[r].begin(), basis[r].end(), [](const Scalar& s) { return !Field::is_zero(s); });
        if (support_size == 1 && basis[r][u.pivots()[r]] == 1)
            names.push_back(a.basis_names()[u.pivots()[r]]);
        else
            names.push_back("u" + std::to_string(r + 1));
    }
    std::set<std::string> distinct(names.begin(), names.end());
    if (distinct.size() != names.size())
        for (std::size_t r = 0; r < names.size(); ++r) names[r] = "u" + std::to_string(r + 1);

    std::vector<StructureConstant> sc;
    for (std::size_t s = 0; s < basis.size(); ++s)
        for (std::size_t t = 0; t < basis.size(); ++t) {
            auto coords = u.coordinates(a.multiply(basis[s], basis[t]));
            if (!coords) throw InvalidArgument("subspace is not closed under multiplication");
            for (std::size_t k = 0; k < coords->size(); ++k)
                if (!Field::is_zero((*coords)[k])) sc.push_back({s, t, k, (*coords)[k]});
        }
    return Algebra(a.field(), basis.size(), sc, std::move(label), std::move(names));
}

std::string format_vector(const Algebra& a, std::span<const Scalar> v) {
    std::string out;
    const Field& f = a.field();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (Field::is_zero(v[i])) continue;
        Scalar c = v[i];
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (c != 1) out += f.format(c) + "*";
        out += a.basis_names()[i];
    }
    return out.empty() ? "0" : out;
}

std::string format_subspace(const Algebra& a, const Subspace& s) {
    std::string out = "[";
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r > 0) out += ", ";
        out += format_vector(a, s.basis()[r]);
    }
    return out + "]";
}

} // namespace locsys
