#include "locsys/io.hpp"

#include "locsys/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace locsys {

namespace {

bool is_container(const Json& j) {
    return j.is_array() || j.is_object();
}

void write(std::ostringstream& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out << inner << Json(it.key()).dump() << ": ";
            write(out, it.value(), indent + 1);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << pad << "}";
    } else if (j.is_array()) {
        bool flat = std::none_of(j.begin(), j.end(), [](const Json& x) { return is_container(x); });
        if (flat) {
            out << "[";
            for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
            out << "]";
            return;
        }
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << inner;
            write(out, j[i], indent + 1);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << pad << "]";
    } else {
        out << j.dump();
    }
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t as_index(const Json& j, std::size_t limit, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    auto v = j.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > limit)
        throw ParseError(std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(limit));
    return static_cast<std::size_t>(v - 1);
}

std::size_t as_count(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a nonnegative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Scalar as_scalar(const Json& j, const Field& f) {
    if (j.is_string()) {
        try {
            return f.parse(j.get<std::string>());
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    throw ParseError("scalar must be a string such as \"1/2\" or an integer");
}

Field as_field(const Json& j) {
    try {
        return Field::from_name(as_string(j, "field"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool default_names(const Algebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.basis_names()[i] != "e" + std::to_string(i + 1)) return false;
    return true;
}

} // namespace

std::string canonical_json(const Json& value) {
    std::ostringstream out;
    write(out, value, 0);
    out << "\n";
    return out.str();
}

// ---------------------------------------------------------------- algebras

Json algebra_to_json(const Algebra& a) {
    Json j = Json::object();
    j["label"] = a.label();
    j["field"] = a.field().name();
    j["dim"] = a.dim();
    if (!default_names(a)) j["basis"] = a.basis_names();
    Json sc = Json::array();
    for (const auto& c : a.structure_constants())
        sc.push_back(Json::array({c.i + 1, c.j + 1, c.k + 1, a.field().format(c.value)}));
    j["sc"] = std::move(sc);
    return j;
}

Algebra algebra_from_json(const Json& j, const Budget& budget) {
    if (!j.is_object()) throw ParseError("algebra must be an object");
    Field f = as_field(require(j, "field"));
    std::size_t dim = as_count(require(j, "dim"), "dim");
    if (dim > budget.max_dim)
        throw BudgetExceeded("algebra dimension " + std::to_string(dim) + " exceeds the budget " + std::to_string(budget.max_dim));
    std::string label = j.contains("label") ? as_string(j.at("label"), "label") : std::string{};
    std::vector<std::string> names;
    if (j.contains("basis")) {
        const Json& b = j.at("basis");
        if (!b.is_array() || b.size() != dim) throw ParseError("basis must list exactly dim names");
        for (const Json& name : b) names.push_back(as_string(name, "basis name"));
    }
    const Json& sc = require(j, "sc");
    if (!sc.is_array()) throw ParseError("sc must be an array");
    std::vector<StructureConstant> constants;
    for (const Json& e : sc) {
        if (!e.is_array() || e.size() != 4) throw ParseError("structure constant must be [i, j, k, \"value\"]");
        constants.push_back({as_index(e[0], dim, "index"), as_index(e[1], dim, "index"), as_index(e[2], dim, "index"),
                             as_scalar(e[3], f)});
    }
    try {
        return Algebra(f, dim, constants, label, names);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_algebra(const Algebra& a) {
    return canonical_json(algebra_to_json(a));
}

Algebra parse_algebra(std::string_view text, const Budget& budget) {
    return algebra_from_json(parse_json(text), budget);
}

Algebra load_algebra(const std::filesystem::path& path, const Budget& budget) {
    return parse_algebra(read_text(path), budget);
}

// ---------------------------------------------------------------- matrices

Json matrix_to_json(const Mat& m) {
    Json j = Json::object();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!Field::is_zero(m(r, c))) entries.push_back(Json::array({r + 1, c + 1, m.field().format(m(r, c))}));
    j["entries"] = std::move(entries);
    return j;
}

Mat matrix_from_json(const Json& j, const Field& field) {
    if (j.is_array()) {
        const std::size_t rows = j.size();
        const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
        Mat m(field, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (!j[r].is_array() || j[r].size() != cols) throw ParseError("dense matrix rows must have equal length");
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, as_scalar(j[r][c], field));
        }
        return m;
    }
    std::size_t rows = as_count(require(j, "rows"), "rows");
    std::size_t cols = as_count(require(j, "cols"), "cols");
    Mat m(field, rows, cols);
    const Json& entries = require(j, "entries");
    if (!entries.is_array()) throw ParseError("entries must be an array");
    for (const Json& e : entries) {
        if (!e.is_array() || e.size() != 3) throw ParseError("matrix entry must be [row, col, \"value\"]");
        m.set(as_index(e[0], rows, "row"), as_index(e[1], cols, "column"), as_scalar(e[2], field));
    }
    return m;
}

// ---------------------------------------------------------------- towers

std::string serialize_tower(const TowerFile& t) {
    if (t.diagonal) {
        Json d = Json::object();
        d["n1"] = t.diagonal->n1;
        d["field"] = t.diagonal->field.name();
        Json sigs = Json::array();
        for (const auto& s : t.diagonal->sigs) sigs.push_back(Json::array({s.copies, s.padding}));
        d["sigs"] = std::move(sigs);
        Json j = Json::object();
        j["diagonal"] = std::move(d);
        return canonical_json(j);
    }
    return serialize_tower(t.system);
}

std::string serialize_tower(const LocalSystem& ls) {
    Json j = Json::object();
    Json nodes = Json::array();
    for (const auto& n : ls.nodes) {
        Json node = Json::object();
        node["id"] = n.id;
        if (n.file) node["file"] = *n.file;
        else node["algebra"] = algebra_to_json(n.algebra);
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    Json order = Json::array();
    for (const auto& [a, b] : ls.order) order.push_back(Json::array({a, b}));
    j["order"] = std::move(order);
    Json embeddings = Json::array();
    for (const auto& e : ls.embeddings) {
        Json m = Json::object();
        m["from"] = e.source;
        m["to"] = e.target;
        m["matrix"] = matrix_to_json(e.map);
        embeddings.push_back(std::move(m));
    }
    j["embeddings"] = std::move(embeddings);
    Json joins = Json::array();
    for (const auto& jn : ls.joins) joins.push_back(Json::array({jn.first, jn.second, jn.upper}));
    j["joins"] = std::move(joins);
    if (!ls.probes.empty()) {
        Json probes = Json::array();
        for (const auto& p : ls.probes) {
            const Field& f = p.field();
            probes.push_back(matrix_to_json(Mat::from_rows(f, p.ambient_dim(), p.basis())));
        }
        j["probes"] = std::move(probes);
    }
    return canonical_json(j);
}

TowerFile parse_tower(std::string_view text, const std::filesystem::path& base_dir, const Budget& budget) {
    Json j = parse_json(text);
    if (!j.is_object()) throw ParseError("tower must be an object");
    TowerFile t;
    if (j.contains("diagonal")) {
        const Json& d = j.at("diagonal");
        DiagonalTowerSpec spec;
        spec.n1 = as_count(require(d, "n1"), "n1");
        spec.field = as_field(require(d, "field"));
        const Json& sigs = require(d, "sigs");
        if (!sigs.is_array()) throw ParseError("sigs must be an array");
        for (const Json& s : sigs) {
            if (!s.is_array() || s.size() != 2) throw ParseError("signature must be [copies, padding]");
            spec.sigs.push_back({as_count(s[0], "copies"), as_count(s[1], "padding")});
        }
        t.system = build_diagonal_tower(spec.n1, spec.sigs, spec.field, budget);
        t.diagonal = std::move(spec);
        return t;
    }
    LocalSystem& ls = t.system;
    const Json& nodes = require(j, "nodes");
    if (!nodes.is_array() || nodes.empty()) throw ParseError("nodes must be a nonempty array");
    for (const Json& n : nodes) {
        Node node;
        node.id = as_string(require(n, "id"), "node id");
        if (n.contains("file")) {
            node.file = as_string(n.at("file"), "file");
            node.algebra = load_algebra(base_dir / *node.file, budget);
        } else {
            node.algebra = algebra_from_json(require(n, "algebra"), budget);
        }
        if (ls.find(node.id)) throw ParseError("duplicate node id '" + node.id + "'");
        ls.nodes.push_back(std::move(node));
    }
    const Field field = ls.nodes.front().algebra.field();
    for (const auto& n : ls.nodes)
        if (!(n.algebra.field() == field)) throw ParseError("all nodes must share one field");
    auto known = [&](const std::string& id) {
        if (!ls.find(id)) throw ParseError("unknown node id '" + id + "'");
        return id;
    };
    if (j.contains("order"))
        for (const Json& p : j.at("order")) {
            if (!p.is_array() || p.size() != 2) throw ParseError("order entries must be [alpha, beta]");
            ls.order.emplace_back(known(as_string(p[0], "node id")), known(as_string(p[1], "node id")));
        }
    if (j.contains("embeddings"))
        for (const Json& e : j.at("embeddings")) {
            Embedding emb;
            emb.source = known(as_string(require(e, "from"), "from"));
            emb.target = known(as_string(require(e, "to"), "to"));
            if (ls.embedding(emb.source, emb.target))
                throw ParseError("embedding " + emb.source + " -> " + emb.target + " given twice");
            emb.map = matrix_from_json(require(e, "matrix"), field);
            const std::size_t rows = ls.algebra(emb.target).dim(), cols = ls.algebra(emb.source).dim();
            if (emb.map.rows() != rows || emb.map.cols() != cols)
                throw ParseError("embedding " + emb.source + " -> " + emb.target + " must be " + std::to_string(rows) +
                                 "x" + std::to_string(cols));
            ls.embeddings.push_back(std::move(emb));
        }
    if (j.contains("joins"))
        for (const Json& jn : j.at("joins")) {
            if (!jn.is_array() || jn.size() != 3) throw ParseError("joins must be [alpha, beta, gamma]");
            ls.joins.push_back({known(as_string(jn[0], "node id")), known(as_string(jn[1], "node id")),
                                known(as_string(jn[2], "node id"))});
        }
    if (j.contains("probes")) {
        auto top = ls.top();
        if (!top) throw ParseError("probes require a top node");
        const std::size_t dim = ls.algebra(*top).dim();
        for (const Json& p : j.at("probes")) {
            Mat m = matrix_from_json(p, field);
            if (m.cols() != dim) throw ParseError("probe vectors must live in the top node");
            ls.probes.push_back(row_space(m));
        }
    }
    complete_composites(ls);
    return t;
}

TowerFile load_tower(const std::filesystem::path& path, const Budget& budget) {
    return parse_tower(read_text(path), path.parent_path(), budget);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("failed writing " + path.string());
}

} // namespace locsys
