#include "locsys/cli.hpp"

#include "locsys/errors.hpp"
#include "locsys/fixtures.hpp"
#include "locsys/io.hpp"
#include "locsys/structure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

namespace locsys::cli {

namespace {

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::size_t max_dim = Budget{}.max_dim;

    Budget budget() const {
        Budget b;
        b.max_dim = max_dim;
        return b;
    }
};

/// What a command produced: text lines, the structured document, and the exit code.
struct Result {
    std::vector<std::string> lines;
    Json data = Json::object();
    int code = 0;

    void line(std::string s) { lines.push_back(std::move(s)); }
};

Json subspace_json(const Algebra& a, const Subspace& s) {
    Json j = Json::object();
    j["dim"] = s.dim();
    Json basis = Json::array();
    for (const Vec& v : s.basis()) basis.push_back(format_vector(a, v));
    j["basis"] = std::move(basis);
    return j;
}

Json report_json(const VerificationReport& r) {
    Json j = Json::object();
    j["property"] = r.property;
    j["status"] = status_name(r.status);
    j["witnesses"] = r.witnesses;
    Json facts = Json::object();
    for (const auto& f : r.facts) facts[f.key] = f.value;
    j["facts"] = std::move(facts);
    j["narrative"] = r.narrative;
    return j;
}

void add_report(Result& res, const VerificationReport& r) {
    res.line("property: " + r.property);
    res.line("status: " + status_name(r.status));
    if (!r.witnesses.empty()) {
        std::string w;
        for (const auto& id : r.witnesses) w += (w.empty() ? "" : ", ") + id;
        res.line("witnesses: " + w);
    }
    for (const auto& f : r.facts) res.line(f.key + ": " + f.value);
    for (const auto& n : r.narrative) res.line("note: " + n);
    res.data["report"] = report_json(r);
    res.code = exit_code(r.status);
}

void node_summary(Result& res, const LocalSystem& ls) {
    Json nodes = Json::array();
    for (const auto& id : ls.topological_order()) {
        const Algebra& a = ls.algebra(id);
        res.line("node " + id + ": " + (a.label().empty() ? std::string("algebra") : a.label()) + ", dim " +
                 std::to_string(a.dim()));
        Json n = Json::object();
        n["id"] = id;
        n["label"] = a.label();
        n["dim"] = a.dim();
        nodes.push_back(std::move(n));
    }
    res.data["nodes"] = std::move(nodes);
}

void maybe_write(Result& res, const std::optional<LocalSystem>& ls, const std::string& output) {
    if (!ls || output.empty()) return;
    write_text(output, serialize_tower(*ls));
    res.line("wrote: " + output);
    res.data["output"] = output;
}

// ---------------------------------------------------------------- algebra

Result algebra_command(const std::string& action, const std::string& file, const Options& opt) {
    Result res;
    res.data["command"] = "algebra " + action;
    res.data["file"] = file;
    Algebra a = load_algebra(file, opt.budget());
    if (action == "check") {
        auto rep = check_associativity(a);
        res.line("label: " + a.label());
        res.line("field: " + a.field().name());
        res.line("dim: " + std::to_string(a.dim()));
        res.line("structure constants: " + std::to_string(a.nonzero_constants()));
        res.data["label"] = a.label();
        res.data["field"] = a.field().name();
        res.data["dim"] = a.dim();
        res.data["structure constants"] = a.nonzero_constants();
        res.data["associative"] = rep.associative;
        if (rep.associative) {
            res.line("associative: yes");
        } else {
            const auto& n = a.basis_names();
            std::string where = "(" + n[rep.where[0]] + " " + n[rep.where[1]] + ") " + n[rep.where[2]] + " vs " +
                                n[rep.where[0]] + " (" + n[rep.where[1]] + " " + n[rep.where[2]] + ") at " +
                                n[rep.where[3]] + ": " + a.field().format(rep.lhs) + " != " + a.field().format(rep.rhs);
            res.line("associative: no");
            res.line("violation: " + where);
            res.data["violation"] = where;
            res.code = 1;
        }
    } else if (action == "radical") {
        Subspace r = radical(a);
        res.line("radical: " + format_subspace(a, r));
        res.line("radical dim: " + std::to_string(r.dim()));
        res.data["radical"] = subspace_json(a, r);
    } else if (action == "levi") {
        LeviSplit s = wedderburn_malcev(a);
        res.line("levi: " + format_subspace(a, s.levi));
        res.line("radical: " + format_subspace(a, s.radical));
        res.data["levi"] = subspace_json(a, s.levi);
        res.data["radical"] = subspace_json(a, s.radical);
    } else if (action == "components") {
        auto part = semisimple_part(a);
        const Algebra& q = part.quotient.algebra;
        if (!part.radical.is_zero()) res.line("components of the quotient by the radical " + format_subspace(a, part.radical));
        Json comps = Json::array();
        const auto& list = part.components.components;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& c = list[i];
            std::string rank = c.rank ? std::to_string(*c.rank) : std::string("non-split");
            res.line("component " + std::to_string(i + 1) + ": dim " + std::to_string(c.space.dim()) + ", rank " + rank);
            res.line("  basis: " + format_subspace(q, c.space));
            res.line("  idempotent: " + format_vector(q, c.central_idempotent));
            Json j = subspace_json(q, c.space);
            j["rank"] = rank;
            j["idempotent"] = format_vector(q, c.central_idempotent);
            comps.push_back(std::move(j));
        }
        res.data["radical"] = subspace_json(a, part.radical);
        res.data["components"] = std::move(comps);
    } else if (action == "core") {
        Subspace core = perfect_core(a);
        res.line(core.is_full() ? "perfect core: whole algebra (perfect)" : "perfect core: " + format_subspace(a, core));
        res.data["perfect core"] = subspace_json(a, core);
        res.data["perfect"] = core.is_full();
    } else if (action == "onepr") {
        auto chain = one_perfect_chain(a, opt.seed);
        const Subspace& p = chain.back();
        res.line(p.is_full() ? "onepr: whole algebra (1-perfect)" : "onepr: " + format_subspace(a, p));
        res.line("steps: " + std::to_string(chain.size() - 1));
        res.data["onepr"] = subspace_json(a, p);
        res.data["steps"] = chain.size() - 1;
    } else if (action == "rank") {
        std::size_t r = algebra_rank(a);
        res.line("rank: " + std::to_string(r));
        res.data["rank"] = r;
    } else if (action == "simple") {
        bool s = is_simple(a);
        res.line(std::string("simple: ") + (s ? "yes" : "no"));
        res.data["simple"] = s;
    }
    return res;
}

// ---------------------------------------------------------------- tower

struct TowerArgs {
    std::string action;
    std::string file;
    std::string output;
    std::size_t n1 = 0;
    std::vector<std::string> sigs;
    std::string field = "Q";
    std::string node;
    std::vector<std::string> vecs;
    std::string base;
    std::size_t component = 1;
};

DiagonalSignature parse_signature(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw InvalidArgument("signature must be k,z: '" + text + "'");
    try {
        std::size_t used = 0;
        unsigned long k = std::stoul(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(text);
        std::string rest = text.substr(comma + 1);
        unsigned long z = std::stoul(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return {k, z};
    } catch (const std::logic_error&) {
        throw InvalidArgument("signature must be k,z with nonnegative integers: '" + text + "'");
    }
}

Vec parse_vector(const std::string& text, const Field& f, std::size_t dim) {
    Vec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(f.parse(item));
    if (v.size() != dim)
        throw InvalidArgument("vector has " + std::to_string(v.size()) + " entries, node has dim " + std::to_string(dim));
    return v;
}

std::string first_node(const LocalSystem& ls) {
    return ls.topological_order().front();
}

Result tower_command(const TowerArgs& t, const Options& opt) {
    Result res;
    res.data["command"] = "tower " + t.action;
    if (t.action == "build-diagonal") {
        if (t.n1 == 0) throw InvalidArgument("--n1 is required");
        std::vector<DiagonalSignature> sigs;
        for (const auto& s : t.sigs) sigs.push_back(parse_signature(s));
        LocalSystem ls = build_diagonal_tower(t.n1, sigs, Field::from_name(t.field), opt.budget());
        node_summary(res, ls);
        if (t.output.empty()) {
            std::string text = serialize_tower(ls);
            res.data["tower"] = Json::parse(text);
            text.pop_back();
            res.lines = {text};
        } else {
            write_text(t.output, serialize_tower(ls));
            res.line("wrote: " + t.output);
            res.data["output"] = t.output;
        }
        return res;
    }
    if (t.file.empty()) throw InvalidArgument("tower " + t.action + " needs a tower file");
    res.data["file"] = t.file;
    LocalSystem ls = load_tower(t.file, opt.budget()).system;
    if (t.action == "check") {
        add_report(res, check_local_system(ls));
    } else if (t.action == "perfect-core") {
        auto sub = perfect_core_system(ls);
        add_report(res, sub.report);
        maybe_write(res, sub.system, t.output);
    } else if (t.action == "ideal-subsystem") {
        std::string node = t.node.empty() ? first_node(ls) : t.node;
        const Algebra& a = ls.algebra(node);
        if (t.vecs.empty()) throw InvalidArgument("ideal-subsystem needs at least one --vec");
        std::vector<Vec> vs;
        for (const auto& v : t.vecs) vs.push_back(parse_vector(v, a.field(), a.dim()));
        auto sub = ideal_subsystem(ls, node, Subspace::span(a.field(), a.dim(), vs));
        add_report(res, sub.report);
        maybe_write(res, sub.system, t.output);
    } else if (t.action == "conical") {
        std::string base = t.base.empty() ? first_node(ls) : t.base;
        if (t.component == 0) throw InvalidArgument("--component is 1-based");
        LocalSystem out = conical_from_perfect(ls, base, t.component - 1);
        node_summary(res, out);
        if (!t.output.empty()) maybe_write(res, out, t.output);
    } else if (t.action == "is-conical") {
        add_report(res, is_conical(ls));
    } else if (t.action == "profile") {
        Json ranks = Json::array();
        for (const auto& id : ls.topological_order()) {
            std::string value;
            try {
                value = std::to_string(algebra_rank(ls.algebra(id)));
            } catch (const NotPerfect&) {
                value = "n/a (not perfect)";
            } catch (const NonSplit&) {
                value = "n/a (non-split)";
            } catch (const InvalidArgument&) {
                value = "n/a (zero algebra)";
            }
            res.line("rank " + id + ": " + value);
            Json r = Json::object();
            r["node"] = id;
            r["rank"] = value;
            ranks.push_back(std::move(r));
        }
        res.data["ranks"] = std::move(ranks);
        auto sub = one_perfect_profile(ls);
        add_report(res, sub.report);
        maybe_write(res, sub.system, t.output);
    }
    return res;
}

// ---------------------------------------------------------------- verify

Result verify_command(const std::string& property, const std::string& file, const std::string& node, const Options& opt) {
    Result res;
    res.data["command"] = "verify " + property;
    res.data["file"] = file;
    LocalSystem ls = load_tower(file, opt.budget()).system;
    const std::string alpha = node.empty() ? first_node(ls) : node;
    if (property == "radical-avoidance") {
        res.data["node"] = alpha;
        add_report(res, verify_radical_avoidance(ls, alpha));
    } else if (property == "maximal-ideal-avoidance") {
        res.data["node"] = alpha;
        add_report(res, verify_maximal_ideal_avoidance(ls, alpha));
    } else if (property == "not-residually-nilpotent") {
        add_report(res, check_not_residually_nilpotent(ls));
    } else if (property == "one-perfect") {
        add_report(res, one_perfect_profile(ls).report);
    } else if (property == "conical") {
        add_report(res, is_conical(ls));
    }
    return res;
}

Result fixtures_command(const std::string& dir) {
    Result res;
    res.data["command"] = "fixtures";
    res.data["directory"] = dir;
    auto names = fixtures::write_corpus(dir);
    for (const auto& n : names) res.line("wrote: " + n);
    res.data["files"] = names;
    return res;
}

void emit(const Result& res, const Options& opt, std::ostream& out) {
    if (opt.format == "structured") {
        Json j = res.data;
        j["exit"] = res.code;
        out << canonical_json(j);
    } else {
        for (const auto& l : res.lines) out << l << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact structure theory of finite-dimensional algebras and local systems", "locsys"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", opt.seed, "Seed for tie-break candidate orderings");
    app.add_option("--max-dim", opt.max_dim, "Largest algebra dimension accepted");

    std::string action, file, property, node, dir;
    auto* algebra = app.add_subcommand("algebra", "Structure of one algebra file");
    algebra->add_option("action", action)
        ->required()
        ->check(CLI::IsMember({"check", "radical", "levi", "components", "core", "onepr", "rank", "simple"}));
    algebra->add_option("file", file)->required();

    TowerArgs targs;
    auto* tower = app.add_subcommand("tower", "Local-system operations");
    tower->add_option("action", targs.action)
        ->required()
        ->check(CLI::IsMember(
            {"check", "build-diagonal", "perfect-core", "ideal-subsystem", "conical", "is-conical", "profile"}));
    tower->add_option("file", targs.file);
    tower->add_option("-o,--output", targs.output, "Write the resulting tower here");
    tower->add_option("--n1", targs.n1, "Size of the first matrix node");
    tower->add_option("--sig", targs.sigs, "Diagonal signature k,z (repeatable)");
    tower->add_option("--field", targs.field, "Q or GF(p)");
    tower->add_option("--node", targs.node, "Node id");
    tower->add_option("--vec", targs.vecs, "Comma-separated coordinates (repeatable)");
    tower->add_option("--base", targs.base, "Base node for the conical construction");
    tower->add_option("--component", targs.component, "1-based simple component of the base Levi");

    auto* verify = app.add_subcommand("verify", "Check a local-system property on a finite prefix");
    verify->add_option("property", property)
        ->required()
        ->check(CLI::IsMember(
            {"radical-avoidance", "maximal-ideal-avoidance", "not-residually-nilpotent", "one-perfect", "conical"}));
    verify->add_option("file", file)->required();
    verify->add_option("--node", node, "Node id (default: first node)");

    auto* fx = app.add_subcommand("fixtures", "Write the fixture corpus");
    fx->add_option("dir", dir)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 3;
    }

    try {
        Result res;
        if (*algebra) res = algebra_command(action, file, opt);
        else if (*tower) res = tower_command(targs, opt);
        else if (*verify) res = verify_command(property, file, node, opt);
        else res = fixtures_command(dir);
        emit(res, opt, out);
        return res.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        if (opt.format == "structured") {
            Json j = Json::object();
            j["error"] = e.what();
            j["exit"] = 3;
            out << canonical_json(j);
        }
        return 3;
    }
}

} // namespace locsys::cli
