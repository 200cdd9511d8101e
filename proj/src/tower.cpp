#include "locsys/tower.hpp"

#include "locsys/errors.hpp"
#include "locsys/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace locsys {

namespace {

Subspace image_of(const Mat& map, const Subspace& u) {
    std::vector<Vec> out;
    for (const Vec& v : u.basis()) out.push_back(map.apply(v));
    return Subspace::span(map.field(), map.rows(), out);
}

Subspace full_image(const Mat& map) {
    return image(map);
}

std::string pair_text(const std::string& a, const std::string& b) {
    return "(" + a + ", " + b + ")";
}

VerificationReport failed(std::string property, std::string narrative) {
    VerificationReport r;
    r.property = std::move(property);
    r.status = Status::fail;
    r.note(std::move(narrative));
    return r;
}

// Strict relation closure, indexed by node position.
std::vector<std::vector<bool>> strict_closure(const LocalSystem& ls) {
    const std::size_t n = ls.nodes.size();
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : ls.order) {
        auto i = ls.find(a), j = ls.find(b);
        if (i && j) lt[*i][*j] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (lt[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (lt[k][j]) lt[i][j] = true;
    return lt;
}

} // namespace

// ---------------------------------------------------------------- LocalSystem

std::optional<std::size_t> LocalSystem::find(const std::string& id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].id == id) return i;
    return std::nullopt;
}

std::size_t LocalSystem::index(const std::string& id) const {
    auto i = find(id);
    if (!i) throw InvalidArgument("unknown node id '" + id + "'");
    return *i;
}

bool LocalSystem::leq(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    const std::size_t start = index(a), goal = index(b);
    std::vector<bool> seen(nodes.size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        std::size_t cur = stack.back();
        stack.pop_back();
        for (const auto& [x, y] : order) {
            if (x != nodes[cur].id) continue;
            auto j = find(y);
            if (!j || seen[*j]) continue;
            if (*j == goal) return true;
            seen[*j] = true;
            stack.push_back(*j);
        }
    }
    return false;
}

const Embedding* LocalSystem::embedding(const std::string& from, const std::string& to) const {
    for (const auto& e : embeddings)
        if (e.source == from && e.target == to) return &e;
    return nullptr;
}

Mat LocalSystem::map(const std::string& from, const std::string& to) const {
    if (from == to) return Mat::identity(algebra(from).field(), algebra(from).dim());
    const Embedding* e = embedding(from, to);
    if (!e) throw InvalidArgument("no embedding recorded from '" + from + "' to '" + to + "'");
    return e->map;
}

std::vector<std::string> LocalSystem::topological_order() const {
    const std::size_t n = nodes.size();
    auto lt = strict_closure(*this);
    std::vector<bool> placed(n, false);
    std::vector<std::string> out;
    while (out.size() < n) {
        bool progress = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (std::size_t j = 0; j < n && ready; ++j)
                if (!placed[j] && j != i && lt[j][i]) ready = false;
            if (!ready) continue;
            placed[i] = true;
            out.push_back(nodes[i].id);
            progress = true;
            break;
        }
        if (!progress) throw InvalidArgument("node order contains a cycle");
    }
    return out;
}

std::optional<std::string> LocalSystem::top() const {
    for (const auto& cand : nodes)
        if (std::all_of(nodes.begin(), nodes.end(), [&](const Node& x) { return leq(x.id, cand.id); }))
            return cand.id;
    return std::nullopt;
}

std::optional<std::string> LocalSystem::bottom() const {
    for (const auto& cand : nodes)
        if (std::all_of(nodes.begin(), nodes.end(), [&](const Node& x) { return leq(cand.id, x.id); }))
            return cand.id;
    return std::nullopt;
}

std::string status_name(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::undetermined: return "undetermined-at-prefix";
    }
    return "?";
}

int exit_code(Status s) {
    switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::undetermined: return 2;
    }
    return 3;
}

std::optional<std::string> VerificationReport::get(const std::string& key) const {
    for (const auto& f : facts)
        if (f.key == key) return f.value;
    return std::nullopt;
}

// ---------------------------------------------------------------- embeddings

VerificationReport check_embedding(const Algebra& source, const Algebra& target, const Mat& map) {
    const std::string property = "embedding";
    if (!(source.field() == target.field()) || !(map.field() == source.field()))
        return failed(property, "field mismatch between source, target and map");
    if (map.rows() != target.dim() || map.cols() != source.dim())
        return failed(property, "map has shape " + std::to_string(map.rows()) + "x" + std::to_string(map.cols()) +
                                    ", expected " + std::to_string(target.dim()) + "x" + std::to_string(source.dim()));
    VerificationReport r;
    r.property = property;
    const std::size_t rk = rank(map);
    r.fact("rank", std::to_string(rk));
    if (rk != source.dim()) {
        r.status = Status::fail;
        r.note("map is not injective: rank " + std::to_string(rk) + " < " + std::to_string(source.dim()));
        return r;
    }
    const Field& f = source.field();
    auto cols = map.column_vectors();
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j) {
            Vec lhs(target.dim());
            for (const auto& t : source.product(i, j))
                for (std::size_t c = 0; c < target.dim(); ++c)
                    if (!Field::is_zero(cols[t.k][c])) f.fma(lhs[c], t.value, cols[t.k][c]);
            if (lhs != target.multiply(cols[i], cols[j])) {
                r.status = Status::fail;
                r.fact("pair", pair_text(source.basis_names()[i], source.basis_names()[j]));
                r.note("map is not multiplicative on " + pair_text(source.basis_names()[i], source.basis_names()[j]));
                return r;
            }
        }
    r.note("injective and multiplicative on all basis pairs");
    return r;
}

Mat diagonal_map(std::size_t n, DiagonalSignature sig, Field field) {
    if (n == 0) throw InvalidArgument("diagonal embedding needs a positive source size");
    if (sig.copies == 0) throw InvalidArgument("diagonal embedding needs at least one copy");
    const std::size_t m = sig.copies * n + sig.padding;
    Mat map(field, m * m, n * n);
    for (std::size_t b = 0; b < sig.copies; ++b)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) map.set((b * n + i) * m + (b * n + j), i * n + j, Scalar(1));
    return map;
}

Embedding diagonal_embedding(std::size_t n, DiagonalSignature sig, Field field) {
    Mat map = diagonal_map(n, sig, field);
    const std::size_t m = sig.copies * n + sig.padding;
    auto report = check_embedding(matrix_algebra(n, field), matrix_algebra(m, field), map);
    if (report.status != Status::pass) throw Error("internal: diagonal map failed its embedding check");
    return {"M_" + std::to_string(n), "M_" + std::to_string(m), std::move(map)};
}

LocalSystem build_diagonal_tower(std::size_t n1, const std::vector<DiagonalSignature>& sigs, Field field,
                                 Budget budget) {
    if (n1 == 0) throw InvalidArgument("first node size must be positive");
    std::vector<std::size_t> sizes{n1};
    for (const auto& s : sigs) {
        if (s.copies == 0) throw InvalidArgument("diagonal signature needs at least one copy");
        sizes.push_back(s.copies * sizes.back() + s.padding);
    }
    for (std::size_t n : sizes)
        if (n > budget.max_matrix_size || n * n > budget.max_dim)
            throw BudgetExceeded("node M_" + std::to_string(n) + " exceeds the budget (n <= " +
                                 std::to_string(budget.max_matrix_size) + ", dim <= " + std::to_string(budget.max_dim) +
                                 ")");
    LocalSystem ls;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        ls.nodes.push_back({std::to_string(i + 1), matrix_algebra(sizes[i], field), std::nullopt});
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        std::string a = std::to_string(i + 1), b = std::to_string(i + 2);
        ls.order.emplace_back(a, b);
        ls.embeddings.push_back({a, b, diagonal_embedding(sizes[i], sigs[i], field).map});
    }
    complete_composites(ls);
    return ls;
}

void complete_composites(LocalSystem& ls) {
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t count = ls.embeddings.size();
        for (std::size_t x = 0; x < count && !changed; ++x)
            for (std::size_t y = 0; y < count && !changed; ++y) {
                const Embedding& first = ls.embeddings[x];
                const Embedding& second = ls.embeddings[y];
                if (first.target != second.source || first.source == second.target) continue;
                if (ls.embedding(first.source, second.target)) continue;
                Embedding composite{first.source, second.target, second.map * first.map};
                ls.embeddings.push_back(std::move(composite));
                changed = true;
            }
    }
    // Keep a canonical order: by source then target position.
    std::stable_sort(ls.embeddings.begin(), ls.embeddings.end(), [&](const Embedding& a, const Embedding& b) {
        auto ka = std::make_pair(ls.find(a.source).value_or(0), ls.find(a.target).value_or(0));
        auto kb = std::make_pair(ls.find(b.source).value_or(0), ls.find(b.target).value_or(0));
        return ka < kb;
    });
}

// ---------------------------------------------------------------- validation

VerificationReport check_local_system(const LocalSystem& ls) {
    const std::string property = "local-system";
    VerificationReport r;
    r.property = property;
    const std::size_t n = ls.nodes.size();
    if (n == 0) return failed(property, "system has no nodes");

    std::set<std::string> ids;
    for (const auto& node : ls.nodes)
        if (node.id.empty() || !ids.insert(node.id).second) return failed(property, "duplicate or empty node id '" + node.id + "'");
    for (const auto& [a, b] : ls.order) {
        if (!ids.count(a) || !ids.count(b)) return failed(property, "order mentions unknown node " + pair_text(a, b));
        if (a == b) return failed(property, "order relation " + pair_text(a, b) + " is not strict");
    }
    auto lt = strict_closure(ls);
    for (std::size_t i = 0; i < n; ++i)
        if (lt[i][i]) {
            r.status = Status::fail;
            r.witnesses.push_back(ls.nodes[i].id);
            r.note("order is not antisymmetric: node " + ls.nodes[i].id + " lies on a cycle");
            return r;
        }
    const Field& field = ls.nodes[0].algebra.field();
    for (const auto& node : ls.nodes) {
        if (!(node.algebra.field() == field)) return failed(property, "node " + node.id + " is over a different field");
        auto assoc = check_associativity(node.algebra);
        if (!assoc.associative) {
            r.status = Status::fail;
            r.witnesses.push_back(node.id);
            r.note("node " + node.id + " is not associative");
            return r;
        }
    }
    r.fact("nodes", std::to_string(n));

    for (const auto& e : ls.embeddings) {
        auto i = ls.find(e.source), j = ls.find(e.target);
        if (!i || !j) return failed(property, "embedding mentions unknown node " + pair_text(e.source, e.target));
        if (!lt[*i][*j]) return failed(property, "embedding " + pair_text(e.source, e.target) + " does not follow the order");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (lt[i][j] && !ls.embedding(ls.nodes[i].id, ls.nodes[j].id)) {
                r.status = Status::fail;
                r.witnesses = {ls.nodes[i].id, ls.nodes[j].id};
                r.note("no embedding recorded for " + pair_text(ls.nodes[i].id, ls.nodes[j].id));
                return r;
            }
    for (const auto& e : ls.embeddings) {
        auto sub = check_embedding(ls.algebra(e.source), ls.algebra(e.target), e.map);
        if (sub.status != Status::pass) {
            r.status = Status::fail;
            r.witnesses = {e.source, e.target};
            for (const auto& f : sub.facts) r.fact(f.key, f.value);
            r.note("embedding " + pair_text(e.source, e.target) + ": " + sub.narrative.front());
            return r;
        }
    }
    r.fact("embeddings", std::to_string(ls.embeddings.size()));

    for (const auto& j : ls.joins)
        if (!ids.count(j.first) || !ids.count(j.second) || !ids.count(j.upper))
            return failed(property, "join mentions an unknown node");
    std::size_t recorded_joins = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k) {
            if (lt[i][k] || lt[k][i]) continue;
            const std::string& a = ls.nodes[i].id;
            const std::string& b = ls.nodes[k].id;
            bool ok = std::any_of(ls.joins.begin(), ls.joins.end(), [&](const Join& jn) {
                bool match = (jn.first == a && jn.second == b) || (jn.first == b && jn.second == a);
                return match && ls.leq(a, jn.upper) && ls.leq(b, jn.upper);
            });
            if (!ok) {
                r.status = Status::fail;
                r.witnesses = {a, b};
                r.note("directedness fails: no recorded upper bound for " + pair_text(a, b));
                return r;
            }
            ++recorded_joins;
        }
    r.fact("joins", std::to_string(recorded_joins));

    std::size_t triples = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!lt[a][b]) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (!lt[b][c]) continue;
                const auto& ia = ls.nodes[a].id;
                const auto& ib = ls.nodes[b].id;
                const auto& ic = ls.nodes[c].id;
                ++triples;
                if (ls.map(ib, ic) * ls.map(ia, ib) != ls.map(ia, ic)) {
                    r.status = Status::fail;
                    r.witnesses = {ia, ib, ic};
                    r.fact("triple", "(" + ia + ", " + ib + ", " + ic + ")");
                    r.note("coherence fails: " + ib + "->" + ic + " after " + ia + "->" + ib + " differs from " + ia +
                           "->" + ic);
                    return r;
                }
            }
        }
    r.fact("coherent triples", std::to_string(triples));

    auto top = ls.top();
    if (!top) {
        if (!ls.probes.empty()) return failed(property, "probes given but the system has no top node");
        r.note("no top node; probe check skipped");
    } else {
        const Algebra& t = ls.algebra(*top);
        auto topo = ls.topological_order();
        std::vector<Subspace> images;
        for (const auto& id : topo) images.push_back(full_image(ls.map(id, *top)));
        std::vector<Subspace> probes = images;
        for (const auto& p : ls.probes) {
            if (p.ambient_dim() != t.dim()) return failed(property, "probe does not live in the top node");
            probes.push_back(p);
        }
        for (std::size_t i = 0; i < probes.size(); ++i)
            for (std::size_t k = 0; k < topo.size(); ++k)
                if (images[k].contains(probes[i])) {
                    r.fact("probe " + std::to_string(i + 1), topo[k]);
                    break;
                }
        r.note("every probe lies in some node");
    }
    r.note("directed, embeddings valid, composites coherent");
    return r;
}

// ---------------------------------------------------------------- subsystems

SubsystemResult restrict_system(const LocalSystem& ls, const std::vector<std::string>& ids,
                                const std::vector<Subspace>& spaces, const std::string& property) {
    if (ids.size() != spaces.size()) throw InvalidArgument("one subspace per node is required");
    SubsystemResult result;
    result.report.property = property;
    LocalSystem out;
    std::map<std::string, const Subspace*> space_of;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const Algebra& a = ls.algebra(ids[i]);
        if (spaces[i].ambient_dim() != a.dim()) throw DimensionMismatch("subspace does not live in node " + ids[i]);
        if (!is_subalgebra(a, spaces[i])) throw InvalidArgument("subspace of node " + ids[i] + " is not a subalgebra");
        out.nodes.push_back({ids[i], present_subalgebra(a, spaces[i], a.label()), std::nullopt});
        space_of[ids[i]] = &spaces[i];
        result.report.fact("node " + ids[i] + " dim", std::to_string(spaces[i].dim()));
    }
    for (const auto& [a, b] : ls.order)
        if (space_of.count(a) && space_of.count(b)) out.order.emplace_back(a, b);
    for (const auto& a : ids)
        for (const auto& b : ids)
            if (a != b && ls.leq(a, b) && !out.leq(a, b)) out.order.emplace_back(a, b);
    for (const auto& e : ls.embeddings) {
        if (!space_of.count(e.source) || !space_of.count(e.target)) continue;
        const Subspace& from = *space_of[e.source];
        const Subspace& to = *space_of[e.target];
        std::vector<Vec> cols;
        for (const Vec& v : from.basis()) {
            auto c = to.coordinates(e.map.apply(v));
            if (!c) {
                result.report.status = Status::fail;
                result.report.witnesses = {e.source, e.target};
                result.report.note("containment fails along " + pair_text(e.source, e.target) +
                                   ": the edge does not map one subspace into the other");
                return result;
            }
            cols.push_back(std::move(*c));
        }
        out.embeddings.push_back({e.source, e.target, Mat::from_columns(ls.algebra(e.source).field(), to.dim(), cols)});
    }
    for (const auto& j : ls.joins)
        if (space_of.count(j.first) && space_of.count(j.second) && space_of.count(j.upper)) out.joins.push_back(j);
    auto check = check_local_system(out);
    if (check.status != Status::pass) {
        result.report.status = Status::fail;
        result.report.witnesses = check.witnesses;
        for (const auto& line : check.narrative) result.report.note(line);
        return result;
    }
    result.report.note("restricted edges map each subspace into the next; result is a local system");
    result.system = std::move(out);
    return result;
}

SubsystemResult perfect_core_system(const LocalSystem& ls) {
    std::vector<std::string> ids;
    std::vector<Subspace> spaces;
    for (const auto& node : ls.nodes) {
        ids.push_back(node.id);
        spaces.push_back(perfect_core(node.algebra));
    }
    return restrict_system(ls, ids, spaces, "perfect-core");
}

SubsystemResult ideal_subsystem(const LocalSystem& ls, const std::string& node0, const Subspace& p) {
    const Algebra& base = ls.algebra(node0);
    if (p.ambient_dim() != base.dim()) throw DimensionMismatch("subspace does not live in node " + node0);
    if (p.is_zero()) throw InvalidArgument("ideal subsystem needs a nonzero subspace");
    std::vector<std::string> ids;
    std::vector<Subspace> spaces;
    for (const auto& id : ls.topological_order()) {
        if (!ls.leq(node0, id)) continue;
        ids.push_back(id);
        spaces.push_back(ideal_generated(ls.algebra(id), image_of(ls.map(node0, id), p)));
    }
    return restrict_system(ls, ids, spaces, "ideal-subsystem");
}

LocalSystem conical_from_perfect(const LocalSystem& ls, const std::string& base, std::size_t component) {
    for (const auto& node : ls.nodes)
        if (!is_perfect(node.algebra)) throw NotPerfect("node " + node.id + " is not perfect");
    const Algebra& a = ls.algebra(base);
    LeviSplit split = wedderburn_malcev(a);
    Algebra levi = present_subalgebra(a, split.levi);
    auto comps = simple_components(levi);
    if (component >= comps.components.size())
        throw InvalidArgument("node " + base + " has " + std::to_string(comps.components.size()) + " simple components");
    const SimpleComponent& comp = comps.components[component];
    if (!comp.rank) throw NonSplit("chosen simple component is not split");
    std::vector<Vec> rows;
    for (const Vec& v : comp.space.basis()) rows.push_back(split.levi.combine(v));
    Subspace s = Subspace::span(a.field(), a.dim(), rows);

    std::vector<std::string> ids;
    std::vector<Subspace> spaces;
    for (const auto& id : ls.topological_order()) {
        if (!ls.leq(base, id)) continue;
        ids.push_back(id);
        spaces.push_back(ideal_generated(ls.algebra(id), image_of(ls.map(base, id), s)));
    }
    auto restricted = restrict_system(ls, ids, spaces, "conical");
    if (!restricted.system) throw Error("internal: ideals generated by the component do not form a local system");
    LocalSystem out = std::move(*restricted.system);

    const std::string fresh = base + "^s";
    if (ls.find(fresh)) throw InvalidArgument("node id '" + fresh + "' already exists");
    out.nodes.insert(out.nodes.begin(), Node{fresh, present_subalgebra(a, s, "S"), std::nullopt});
    out.order.insert(out.order.begin(), {fresh, base});
    std::vector<Embedding> from_new;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        Mat m = ls.map(base, ids[i]);
        std::vector<Vec> cols;
        for (const Vec& v : s.basis()) cols.push_back(*spaces[i].coordinates(m.apply(v)));
        from_new.push_back({fresh, ids[i], Mat::from_columns(a.field(), spaces[i].dim(), cols)});
    }
    out.embeddings.insert(out.embeddings.begin(), from_new.begin(), from_new.end());
    return out;
}

// ---------------------------------------------------------------- verifiers

namespace {

constexpr const char* kNaturalModuleReading =
    "interpretation: a natural module of a node is a column module of a simple component of its semisimple "
    "quotient, with the radical acting through the quotient";

} // namespace

VerificationReport is_conical(const LocalSystem& ls) {
    VerificationReport r;
    r.property = "conical";
    auto minimal = ls.bottom();
    if (!minimal) {
        r.status = Status::fail;
        r.fact("condition", "1");
        r.note("condition 1 fails: no node lies below every other node");
        return r;
    }
    r.fact("minimal node", *minimal);
    for (const auto& node : ls.nodes)
        if (!is_perfect(node.algebra)) {
            r.status = Status::fail;
            r.witnesses = {node.id};
            r.fact("condition", "perfect");
            r.note("node " + node.id + " is not perfect, so the system is not a perfect local system");
            return r;
        }
    const Algebra& a1 = ls.algebra(*minimal);
    if (!is_simple(a1)) {
        r.status = Status::fail;
        r.witnesses = {*minimal};
        r.fact("condition", "2");
        r.note("condition 2 fails: minimal node " + *minimal + " is not simple");
        return r;
    }
    r.fact("rank", std::to_string(algebra_rank(a1)));
    for (const auto& id : ls.topological_order()) {
        const Algebra& a = ls.algebra(id);
        Subspace img = full_image(ls.map(*minimal, id));
        auto part = semisimple_part(a);
        const auto& comps = part.components.components;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            bool acts = false;
            for (const Vec& v : img.basis()) {
                Vec q = part.quotient.project(v);
                if (!is_zero_vector(part.quotient.algebra.multiply(comps[i].central_idempotent, q))) {
                    acts = true;
                    break;
                }
            }
            r.fact("node " + id + " component " + std::to_string(i + 1), acts ? "nonzero" : "zero");
            if (!acts) {
                r.status = Status::fail;
                r.witnesses = {id};
                r.fact("condition", "3");
                r.fact("component", std::to_string(i + 1));
                r.note("condition 3 fails: the minimal node acts as zero on the module of component " +
                       std::to_string(i + 1) + " of node " + id);
                r.note(kNaturalModuleReading);
                return r;
            }
        }
    }
    r.witnesses = {*minimal};
    r.note("minimal node " + *minimal + " is simple and lies in every node");
    r.note(kNaturalModuleReading);
    return r;
}

VerificationReport verify_radical_avoidance(const LocalSystem& ls, const std::string& alpha) {
    VerificationReport r;
    r.property = "radical-avoidance";
    ls.index(alpha);
    auto topo = ls.topological_order();
    std::optional<std::string> witness;
    for (const auto& id : topo) {
        if (!ls.leq(alpha, id)) continue;
        Subspace img = full_image(ls.map(alpha, id));
        Subspace rad = radical(ls.algebra(id));
        bool clean = intersect(img, rad).is_zero();
        r.fact("node " + id, clean ? "avoids radical" : "meets radical");
        if (clean) {
            witness = id;
            break;
        }
    }
    if (!witness) {
        r.status = Status::undetermined;
        r.note("in this prefix the image of " + alpha + " meets the radical of every node above it; a witness may lie "
               "beyond the prefix");
        return r;
    }
    r.witnesses = {*witness};
    for (const auto& id : topo) {
        if (id == *witness || !ls.leq(*witness, id)) continue;
        Subspace img = full_image(ls.map(alpha, id));
        if (!intersect(img, radical(ls.algebra(id))).is_zero()) {
            r.status = Status::fail;
            r.witnesses.push_back(id);
            r.fact("violation", id);
            r.note("witness " + *witness + " found, but node " + id + " above it has radical meeting the image of " +
                   alpha);
            return r;
        }
    }
    r.note("image of " + alpha + " has zero intersection with the radical of " + *witness +
           " and of every node above it");
    return r;
}

VerificationReport verify_maximal_ideal_avoidance(const LocalSystem& ls, const std::string& alpha) {
    VerificationReport r;
    r.property = "maximal-ideal-avoidance";
    ls.index(alpha);
    for (const auto& id : ls.topological_order()) {
        if (!ls.leq(alpha, id)) continue;
        const Algebra& a = ls.algebra(id);
        if (!is_perfect(a)) {
            r.fact("node " + id, "not perfect, skipped");
            continue;
        }
        Subspace img = full_image(ls.map(alpha, id));
        auto ideals = maximal_ideals(a);
        for (std::size_t i = 0; i < ideals.size(); ++i)
            if (intersect(img, ideals[i]).is_zero()) {
                r.witnesses = {id};
                r.fact("node", id);
                r.fact("maximal ideal", std::to_string(i + 1));
                r.fact("ideal basis", format_subspace(a, ideals[i]));
                r.note("image of " + alpha + " has zero intersection with maximal ideal " + std::to_string(i + 1) +
                       " of node " + id);
                return r;
            }
        r.fact("node " + id, "every maximal ideal meets the image");
    }
    r.status = Status::undetermined;
    r.note("in this prefix every maximal ideal of every perfect node above " + alpha + " meets its image; a witness "
           "may lie beyond the prefix");
    return r;
}

VerificationReport check_not_residually_nilpotent(const LocalSystem& ls) {
    VerificationReport r;
    r.property = "not-residually-nilpotent";
    for (const auto& id : ls.topological_order()) {
        if (!is_residually_nilpotent(ls.algebra(id))) {
            r.witnesses = {id};
            r.fact("node", id);
            r.fact("perfect core dim", std::to_string(perfect_core(ls.algebra(id)).dim()));
            r.note("node " + id + " is not residually nilpotent");
            return r;
        }
        r.fact("node " + id, "nilpotent");
        r.witnesses.push_back(id);
    }
    r.status = Status::fail;
    r.note("every node in the prefix is nilpotent; a locally nilpotent union cannot be simple");
    return r;
}

std::vector<std::pair<std::string, std::size_t>> rank_profile(const LocalSystem& ls) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& id : ls.topological_order()) out.emplace_back(id, algebra_rank(ls.algebra(id)));
    return out;
}

SubsystemResult one_perfect_profile(const LocalSystem& ls) {
    std::vector<std::string> ids;
    std::vector<Subspace> spaces;
    bool all = true;
    for (const auto& id : ls.topological_order()) {
        ids.push_back(id);
        spaces.push_back(one_perfect_radical(ls.algebra(id)));
        if (!spaces.back().is_full()) all = false;
    }
    if (all) {
        SubsystemResult result;
        result.report.property = "one-perfect";
        for (std::size_t i = 0; i < ids.size(); ++i) result.report.fact("node " + ids[i] + " dim", std::to_string(spaces[i].dim()));
        result.report.note("every node is 1-perfect");
        result.system = ls;
        return result;
    }
    auto result = restrict_system(ls, ids, spaces, "one-perfect");
    if (result.system) result.report.note("1-perfect radicals form a local system");
    return result;
}

} // namespace locsys
