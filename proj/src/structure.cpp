#include "locsys/structure.hpp"

#include "locsys/errors.hpp"
#include "locsys/poly.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace locsys {

namespace {

Vec scaled(const Field& f, std::span<const Scalar> v, const Scalar& c) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!Field::is_zero(v[i])) out[i] = f.mul(v[i], c);
    return out;
}

Vec added(const Field& f, std::span<const Scalar> x, std::span<const Scalar> y) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.add(x[i], y[i]);
    return out;
}

Vec subtracted(const Field& f, std::span<const Scalar> x, std::span<const Scalar> y) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.sub(x[i], y[i]);
    return out;
}

// Minimal polynomial of c inside the unital algebra with identity `unit`.
Poly minimal_polynomial(const Algebra& a, const Vec& unit, const Vec& c) {
    const Field& f = a.field();
    Echelon powers(f, a.dim());
    powers.insert(unit);
    Vec current = c;
    for (std::size_t k = 1;; ++k) {
        if (k > 1) current = a.multiply(current, c);
        if (auto coeffs = powers.express(current)) {
            Poly p(k + 1);
            for (std::size_t i = 0; i < k; ++i) p[i] = f.neg((*coeffs)[i]);
            p[k] = 1;
            return p;
        }
        powers.insert(current);
    }
}

Vec evaluate_at(const Algebra& a, const Vec& unit, const Poly& p, const Vec& c) {
    const Field& f = a.field();
    Vec acc(a.dim());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = a.multiply(acc, c);
        if (!Field::is_zero(*it)) acc = added(f, acc, scaled(f, unit, *it));
    }
    return acc;
}

// Idempotent z*y for a nonzero non-invertible y of the local algebra spanned
// by `local` (semisimple, so some z has y z y = y).
std::optional<Vec> idempotent_from_zero_divisor(const Algebra& a, const Vec& unit, const Vec& y,
                                                const std::vector<Vec>& local) {
    const Field& f = a.field();
    const std::size_t n = a.dim();
    std::vector<Vec> cols;
    for (const Vec& b : local) cols.push_back(a.multiply(a.multiply(y, b), y));
    auto z = solve(Mat::from_columns(f, n, cols), y);
    if (!z) return std::nullopt;
    Vec zv(n);
    for (std::size_t t = 0; t < local.size(); ++t)
        if (!Field::is_zero((*z)[t])) zv = added(f, zv, scaled(f, local[t], (*z)[t]));
    Vec e = a.multiply(zv, y);
    if (is_zero_vector(e) || e == unit || a.multiply(e, e) != e) return std::nullopt;
    return e;
}

// Idempotent g with 0 != g != unit: the projection onto the (x - lambda)-primary
// part of the minimal polynomial of c, or a zero-divisor idempotent when that
// polynomial is a power of (x - lambda).
std::optional<Vec> idempotent_from(const Algebra& a, const Vec& unit, const Vec& c, const std::vector<Vec>& local) {
    const Field& f = a.field();
    Poly mp = minimal_polynomial(a, unit, c);
    if (poly::degree(mp) <= 1) return std::nullopt;
    std::vector<Scalar> roots;
    try {
        roots = poly::roots(f, mp);
    } catch (const NonSplit&) {
        return std::nullopt;
    }
    for (const Scalar& lambda : roots) {
        Poly linear{f.neg(lambda), Scalar(1)};
        Poly primary{Scalar(1)};
        Poly rest = mp;
        while (true) {
            auto [q, r] = poly::divmod(f, rest, linear);
            if (!r.empty()) break;
            rest = q;
            primary = poly::mul(f, primary, linear);
        }
        if (poly::degree(rest) <= 0) {
            Vec y = subtracted(f, c, scaled(f, unit, lambda));
            if (auto e = idempotent_from_zero_divisor(a, unit, y, local)) return e;
            continue;
        }
        auto bez = poly::extended_gcd(f, primary, rest);
        Poly e = poly::divmod(f, poly::mul(f, bez.t, rest), mp).second;
        Vec g = evaluate_at(a, unit, e, c);
        if (is_zero_vector(g) || g == unit) continue;
        if (a.multiply(g, g) != g) throw Error("internal: idempotent construction failed");
        return g;
    }
    return std::nullopt;
}

std::optional<Vec> splitting_idempotent(const Algebra& a, const Vec& unit, const std::vector<Vec>& basis) {
    for (const Vec& c : basis)
        if (auto g = idempotent_from(a, unit, c, basis)) return g;
    const Field& f = a.field();
    const std::size_t limit = std::min<std::size_t>(basis.size(), 12);
    for (std::size_t i = 0; i < limit; ++i)
        for (std::size_t j = i + 1; j < limit; ++j)
            if (auto g = idempotent_from(a, unit, added(f, basis[i], basis[j]), basis)) return g;
    for (std::size_t i = 0; i < limit; ++i)
        for (std::size_t j = 0; j < limit; ++j) {
            Vec p = a.multiply(basis[i], basis[j]);
            if (is_zero_vector(p)) continue;
            if (auto g = idempotent_from(a, unit, p, basis)) return g;
        }
    return std::nullopt;
}

Subspace corner(const Algebra& a, const Vec& left, const Vec& right, const std::vector<Vec>& spanning) {
    std::vector<Vec> out;
    for (const Vec& x : spanning) {
        Vec y = a.multiply(a.multiply(left, x), right);
        if (!is_zero_vector(y)) out.push_back(std::move(y));
    }
    return Subspace::span(a.field(), a.dim(), out);
}

std::optional<std::vector<Vec>> primitive_idempotents(const Algebra& a, const Vec& unit, const Subspace& component) {
    std::vector<Vec> stack{unit}, out;
    while (!stack.empty()) {
        Vec f = std::move(stack.back());
        stack.pop_back();
        Subspace local = corner(a, f, f, component.basis());
        if (local.dim() == 1) {
            out.push_back(std::move(f));
            continue;
        }
        auto g = splitting_idempotent(a, f, local.basis());
        if (!g) return std::nullopt;
        stack.push_back(subtracted(a.field(), f, *g));
        stack.push_back(std::move(*g));
    }
    return out;
}

std::optional<std::size_t> exact_sqrt(std::size_t n) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? std::optional<std::size_t>(r) : std::nullopt;
}

// Matrix units built from primitive idempotents f_1..f_r, or nullopt when the
// corners are not 1-dimensional (division algebra content).
std::optional<std::vector<Vec>> matrix_units(const Algebra& a, const Subspace& component, const std::vector<Vec>& idem) {
    const Field& f = a.field();
    const std::size_t r = idem.size();
    if (exact_sqrt(component.dim()) != r) return std::nullopt;
    const Vec& f1 = idem[0];
    const std::size_t lead = *leading_index(f1);
    std::vector<Vec> row(r), col(r);
    row[0] = col[0] = f1;
    for (std::size_t j = 1; j < r; ++j) {
        Subspace up = corner(a, f1, idem[j], component.basis());
        Subspace down = corner(a, idem[j], f1, component.basis());
        if (up.dim() != 1 || down.dim() != 1) return std::nullopt;
        Vec x = up.basis()[0];
        Vec y = down.basis()[0];
        Vec prod = a.multiply(x, y);
        Scalar mu = f.div(prod[lead], f1[lead]);
        if (Field::is_zero(mu) || prod != scaled(f, f1, mu)) return std::nullopt;
        y = scaled(f, y, f.inv(mu));
        if (a.multiply(y, x) != idem[j]) return std::nullopt;
        row[j] = std::move(x);
        col[j] = std::move(y);
    }
    std::vector<Vec> units;
    units.reserve(r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (i == 0) units.push_back(row[j]);
            else if (j == 0) units.push_back(col[i]);
            else units.push_back(a.multiply(col[i], row[j]));
        }
    if (Subspace::span(f, a.dim(), units).dim() != r * r) return std::nullopt;
    return units;
}

} // namespace

// ---------------------------------------------------------------- components

bool ComponentList::split() const {
    return std::all_of(components.begin(), components.end(), [](const SimpleComponent& c) { return c.rank.has_value(); });
}

std::vector<std::optional<std::size_t>> ComponentList::ranks() const {
    std::vector<std::optional<std::size_t>> out;
    for (const auto& c : components) out.push_back(c.rank);
    return out;
}

void require_trace_form_window(const Algebra& a) {
    const auto p = a.field().characteristic();
    if (p != 0 && p <= a.dim()) throw CharacteristicTooSmall(p, a.dim());
}

Subspace radical(const Algebra& a) {
    require_trace_form_window(a);
    const Field& f = a.field();
    const std::size_t n = a.dim();
    if (n == 0) return a.zero();
    // trace[k] = Tr(L_{e_k}) = sum_m c_{km}^m
    Vec trace(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
            for (const auto& t : a.product(k, m))
                if (t.k == m) trace[k] = f.add(trace[k], t.value);
    // form(j, i) = Tr(L_{e_i e_j}); x is radical iff sum_i x_i form(j, i) = 0 for all j.
    Mat form(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar acc = 0;
            for (const auto& t : a.product(i, j))
                if (!Field::is_zero(trace[t.k])) f.fma(acc, t.value, trace[t.k]);
            form.set(j, i, acc);
        }
    Subspace rad = kernel(form);
    if (!is_ideal(a, rad) || !is_nilpotent_subspace(a, rad))
        throw Error("trace-form kernel is not a nilpotent ideal; is the algebra associative?");
    return rad;
}

bool is_nilpotent_subspace(const Algebra& a, const Subspace& u) {
    Subspace power = u;
    while (!power.is_zero()) {
        Subspace next = subspace_product(a, u, power);
        if (next == power) return false;
        power = std::move(next);
    }
    return true;
}

bool is_nilpotent(const Algebra& a) {
    return power_chain(a).back().is_zero() || a.dim() == 0;
}

Subspace perfect_core(const Algebra& a) {
    auto chain = power_chain(a);
    Subspace last = chain.back();
    // The chain stops at the first k with A^k = A^{k+1}; A^{k+1} is the core too.
    return last;
}

bool is_perfect(const Algebra& a) {
    return subspace_product(a, a.full(), a.full()).is_full();
}

bool is_residually_nilpotent(const Algebra& a) {
    return perfect_core(a).is_zero();
}

Subspace center(const Algebra& a) {
    const Field& f = a.field();
    const std::size_t n = a.dim();
    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(a.basis_vector(i));
    for (std::size_t i = 0; i < n && !candidates.empty(); ++i) {
        Vec e = a.basis_vector(i);
        std::vector<Vec> cols;
        cols.reserve(candidates.size());
        for (const Vec& z : candidates) cols.push_back(subtracted(f, a.multiply(z, e), a.multiply(e, z)));
        Subspace rel = kernel(Mat::from_columns(f, n, cols));
        std::vector<Vec> next;
        for (const Vec& coeffs : rel.basis()) {
            Vec z(n);
            for (std::size_t t = 0; t < coeffs.size(); ++t)
                if (!Field::is_zero(coeffs[t]))
                    for (std::size_t c = 0; c < n; ++c)
                        if (!Field::is_zero(candidates[t][c])) f.fma(z[c], coeffs[t], candidates[t][c]);
            next.push_back(std::move(z));
        }
        candidates = std::move(next);
    }
    return Subspace::span(f, n, candidates);
}

ComponentList simple_components(const Algebra& a) {
    if (!radical(a).is_zero()) throw NotSemisimple("simple components require a semisimple algebra (radical is nonzero)");
    ComponentList result;
    const std::size_t n = a.dim();
    if (n == 0) return result;
    const Field& f = a.field();

    Subspace z = center(a);
    // The identity of A is the identity of its center.
    Vec rhs;
    for (const Vec& zj : z.basis()) {
        rhs.insert(rhs.end(), zj.begin(), zj.end());
    }
    Mat system(f, n * z.dim(), z.dim());
    for (std::size_t i = 0; i < z.dim(); ++i)
        for (std::size_t j = 0; j < z.dim(); ++j) {
            Vec p = a.multiply(z.basis()[i], z.basis()[j]);
            for (std::size_t c = 0; c < n; ++c) system.set(j * n + c, i, p[c]);
        }
    auto coeffs = solve(system, rhs);
    if (!coeffs) throw NotSemisimple("center has no identity");
    Vec one = z.combine(*coeffs);
    for (std::size_t j = 0; j < n; ++j) {
        Vec e = a.basis_vector(j);
        if (a.multiply(one, e) != e || a.multiply(e, one) != e) throw NotSemisimple("algebra has no identity");
    }

    struct Block {
        Vec idempotent;
        bool split;
    };
    std::vector<Block> blocks;
    std::vector<Vec> stack{one};
    while (!stack.empty()) {
        Vec e = std::move(stack.back());
        stack.pop_back();
        std::vector<Vec> local;
        for (const Vec& zb : z.basis()) {
            Vec p = a.multiply(e, zb);
            if (!is_zero_vector(p)) local.push_back(std::move(p));
        }
        Subspace ez = Subspace::span(f, n, local);
        if (ez.dim() == 1) {
            blocks.push_back({std::move(e), true});
            continue;
        }
        auto g = splitting_idempotent(a, e, ez.basis());
        if (!g) {
            blocks.push_back({std::move(e), false});
            continue;
        }
        stack.push_back(subtracted(f, e, *g));
        stack.push_back(std::move(*g));
    }

    for (Block& b : blocks) {
        SimpleComponent comp;
        std::vector<Vec> gens;
        for (std::size_t j = 0; j < n; ++j) {
            Vec p = a.multiply(b.idempotent, a.basis_vector(j));
            if (!is_zero_vector(p)) gens.push_back(std::move(p));
        }
        comp.space = Subspace::span(f, n, gens);
        comp.central_idempotent = std::move(b.idempotent);
        if (b.split) {
            if (auto idem = primitive_idempotents(a, comp.central_idempotent, comp.space))
                if (auto units = matrix_units(a, comp.space, *idem)) {
                    comp.rank = idem->size();
                    comp.matrix_units = std::move(*units);
                }
        }
        result.components.push_back(std::move(comp));
    }
    std::sort(result.components.begin(), result.components.end(),
              [](const SimpleComponent& x, const SimpleComponent& y) { return x.space.pivots() < y.space.pivots(); });
    return result;
}

SemisimplePart semisimple_part(const Algebra& a) {
    SemisimplePart part;
    part.radical = radical(a);
    part.quotient = quotient(a, part.radical);
    part.components = simple_components(part.quotient.algebra);
    return part;
}

LeviSplit wedderburn_malcev(const Algebra& a) {
    const Field& f = a.field();
    const std::size_t n = a.dim();
    Subspace rad = radical(a);
    if (rad.is_zero()) return {a.full(), rad};
    Quotient q = quotient(a, rad);
    if (!simple_components(q.algebra).split())
        throw NonSplit("semisimple quotient has a non-split component");

    const std::size_t qd = q.complement.size();
    std::vector<Vec> section;
    for (std::size_t b = 0; b < qd; ++b) section.push_back(a.basis_vector(q.complement[b]));

    auto defect = [&](std::size_t x, std::size_t y) {
        Vec d = a.multiply(section[x], section[y]);
        for (const auto& t : q.algebra.product(x, y)) d = subtracted(f, d, scaled(f, section[t.k], t.value));
        return d;
    };

    Subspace power = rad;
    while (!power.is_zero()) {
        Subspace next = subspace_product(a, rad, power);
        bool done = true;
        for (std::size_t x = 0; x < qd && done; ++x)
            for (std::size_t y = 0; y < qd && done; ++y) done = next.contains(defect(x, y));
        if (!done) {
            // Complement of `next` inside `power`, with coordinates modulo `next`.
            Echelon modulo(f, n);
            std::vector<Vec> w;
            for (const Vec& row : power.basis()) {
                Vec r = next.reduce(row);
                if (modulo.insert(r)) w.push_back(std::move(r));
            }
            const std::size_t m = w.size();
            auto coords = [&](const Vec& v) {
                auto c = modulo.express(next.reduce(v));
                if (!c) throw Error("internal: defect left the radical power");
                return *c;
            };
            std::vector<std::vector<Vec>> left(qd), right(qd);
            for (std::size_t x = 0; x < qd; ++x)
                for (std::size_t i = 0; i < m; ++i) {
                    left[x].push_back(coords(a.multiply(section[x], w[i])));
                    right[x].push_back(coords(a.multiply(w[i], section[x])));
                }
            // sigma_x tau_y + tau_x sigma_y - tau(xy) = -defect(x, y)  (mod next)
            Mat system(f, qd * qd * m, qd * m);
            Vec rhs(qd * qd * m);
            for (std::size_t x = 0; x < qd; ++x)
                for (std::size_t y = 0; y < qd; ++y) {
                    const std::size_t base = (x * qd + y) * m;
                    Vec d = coords(defect(x, y));
                    for (std::size_t l = 0; l < m; ++l) {
                        rhs[base + l] = f.neg(d[l]);
                        for (std::size_t i = 0; i < m; ++i) {
                            system.set(base + l, y * m + i, f.add(system(base + l, y * m + i), left[x][i][l]));
                            system.set(base + l, x * m + i, f.add(system(base + l, x * m + i), right[y][i][l]));
                        }
                    }
                    for (const auto& t : q.algebra.product(x, y))
                        for (std::size_t l = 0; l < m; ++l)
                            system.set(base + l, t.k * m + l, f.sub(system(base + l, t.k * m + l), t.value));
                }
            auto tau = solve(system, rhs);
            if (!tau) throw NonSplit("Levi lifting failed: quotient is not separable");
            for (std::size_t y = 0; y < qd; ++y)
                for (std::size_t i = 0; i < m; ++i)
                    if (!Field::is_zero((*tau)[y * m + i]))
                        section[y] = added(f, section[y], scaled(f, w[i], (*tau)[y * m + i]));
        }
        power = std::move(next);
    }

    LeviSplit split{Subspace::span(f, n, section), rad};
    if (!intersect(split.levi, rad).is_zero() || !sum(split.levi, rad).is_full() || !is_subalgebra(a, split.levi) ||
        !radical(present_subalgebra(a, split.levi)).is_zero())
        throw Error("internal: Levi complement failed its postconditions");
    return split;
}

std::size_t algebra_rank(const Algebra& a) {
    if (a.dim() == 0) throw InvalidArgument("the zero algebra has no rank");
    if (!is_perfect(a)) throw NotPerfect("rank is defined for perfect algebras only");
    auto part = semisimple_part(a);
    if (!part.components.split()) throw NonSplit("rank requires split simple components");
    std::size_t best = 0;
    for (const auto& c : part.components.components)
        if (best == 0 || *c.rank < best) best = *c.rank;
    return best;
}

bool is_simple(const Algebra& a) {
    if (a.dim() == 0) return false;
    if (!radical(a).is_zero()) return false;
    if (subspace_product(a, a.full(), a.full()).is_zero()) return false;
    return simple_components(a).components.size() == 1;
}

std::vector<Character> characters(const Algebra& a) {
    const Field& f = a.field();
    // Characters kill commutators, so they factor through A/C with C the
    // ideal generated by all xy - yx. For noncommutative simple pieces C is
    // everything and nothing further is computed.
    const std::size_t n = a.dim();
    SpanBuilder ideal(f, n);
    std::vector<Vec> found;
    auto add = [&](const Vec& v) {
        if (ideal.insert(v)) found.push_back(v);
    };
    Vec buffer(n);
    auto flush = [&] {
        add(buffer);
        for (auto& x : buffer) x = 0;
    };
    for (std::size_t i = 0; i < n && !ideal.is_full(); ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            for (const auto& t : a.product(i, j)) buffer[t.k] = f.add(buffer[t.k], t.value);
            for (const auto& t : a.product(j, i)) buffer[t.k] = f.sub(buffer[t.k], t.value);
            flush();
        }
    for (std::size_t g = 0; g < found.size() && !ideal.is_full(); ++g)
        for (std::size_t i = 0; i < n && !ideal.is_full(); ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                if (Field::is_zero(found[g][k])) continue;
                for (const auto& t : a.product(i, k)) f.fma(buffer[t.k], found[g][k], t.value);
            }
            flush();
            for (std::size_t k = 0; k < n; ++k) {
                if (Field::is_zero(found[g][k])) continue;
                for (const auto& t : a.product(k, i)) f.fma(buffer[t.k], found[g][k], t.value);
            }
            flush();
        }
    if (ideal.is_full()) return {};
    Subspace comm = ideal.subspace();
    Quotient ab = quotient(a, comm);
    auto part = semisimple_part(ab.algebra);
    std::vector<Character> out;
    for (const auto& comp : part.components.components) {
        if (comp.space.dim() != 1) continue;
        const Vec& e = comp.central_idempotent;
        const std::size_t lead = *leading_index(e);
        Character chi{Vec(a.dim())};
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec pj = part.quotient.project(ab.project(a.basis_vector(j)));
            Vec pe = part.quotient.algebra.multiply(pj, e);
            chi.functional[j] = f.div(pe[lead], e[lead]);
        }
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                Scalar lhs = 0;
                for (const auto& t : a.product(i, j)) f.fma(lhs, t.value, chi.functional[t.k]);
                if (lhs != f.mul(chi.functional[i], chi.functional[j]))
                    throw Error("internal: character is not multiplicative");
            }
        out.push_back(std::move(chi));
    }
    return out;
}

std::vector<std::size_t> candidate_order(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    if (seed == 0) return order;
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    return order;
}

std::optional<Subspace> find_codim1_ideal(const Algebra& a, std::uint64_t seed) {
    const Field& f = a.field();
    Subspace square = subspace_product(a, a.full(), a.full());
    if (!square.is_full()) {
        // Any hyperplane H containing A^2 is an ideal: A H is inside A^2.
        auto outside = square.non_pivots();
        std::size_t drop = outside[candidate_order(outside.size(), seed)[0]];
        std::vector<Vec> rows = square.basis();
        for (std::size_t c : outside)
            if (c != drop) rows.push_back(a.basis_vector(c));
        return Subspace::span(f, a.dim(), rows);
    }
    auto chars = characters(a);
    if (chars.empty()) return std::nullopt;
    const Character& chi = chars[candidate_order(chars.size(), seed)[0]];
    return kernel(Mat::from_rows(f, a.dim(), {chi.functional}));
}

std::vector<Subspace> one_perfect_chain(const Algebra& a, std::uint64_t seed) {
    const Field& f = a.field();
    std::vector<Subspace> chain{a.full()};
    Algebra current = a;
    // Columns: basis of `current` in a's coordinates.
    std::vector<Vec> embed;
    for (std::size_t i = 0; i < a.dim(); ++i) embed.push_back(a.basis_vector(i));
    std::uint64_t step_seed = seed;
    while (auto h = find_codim1_ideal(current, step_seed)) {
        std::vector<Vec> next_embed;
        for (const Vec& v : h->basis()) {
            Vec w(a.dim());
            for (std::size_t t = 0; t < v.size(); ++t)
                if (!Field::is_zero(v[t]))
                    for (std::size_t c = 0; c < a.dim(); ++c)
                        if (!Field::is_zero(embed[t][c])) f.fma(w[c], v[t], embed[t][c]);
            next_embed.push_back(std::move(w));
        }
        current = present_subalgebra(current, *h, a.label());
        embed = std::move(next_embed);
        chain.push_back(Subspace::span(f, a.dim(), embed));
        if (seed != 0) step_seed = seed + chain.size();
    }
    return chain;
}

Subspace one_perfect_radical(const Algebra& a, std::uint64_t seed) {
    return one_perfect_chain(a, seed).back();
}

bool is_one_perfect(const Algebra& a) {
    return !find_codim1_ideal(a).has_value();
}

std::vector<Subspace> maximal_ideals(const Algebra& a) {
    if (!is_perfect(a)) throw NotPerfect("maximal ideals are enumerated for perfect algebras only");
    auto part = semisimple_part(a);
    const auto& comps = part.components.components;
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::vector<Vec> rows = part.radical.basis();
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (j == i) continue;
            for (const Vec& v : comps[j].space.basis()) rows.push_back(part.quotient.lift(v, a.dim()));
        }
        Subspace m = Subspace::span(a.field(), a.dim(), rows);
        if (!is_ideal(a, m) || a.dim() - m.dim() != comps[i].space.dim())
            throw Error("internal: component complement is not a maximal ideal");
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace locsys
