#pragma once

#include "locsys/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace locsys {

/// Linear map between node algebras, dim(target) x dim(source).
struct Embedding {
    std::string source;
    std::string target;
    Mat map;
};

struct DiagonalSignature {
    std::size_t copies = 1;
    std::size_t padding = 0;
};

struct Node {
    std::string id;
    Algebra algebra;
    /// Set when the algebra was read from (or should be written to) a separate file.
    std::optional<std::string> file;
};

/// Recorded upper bound of two nodes.
struct Join {
    std::string first;
    std::string second;
    std::string upper;
};

/// Finite prefix of a local system. The value is a plain description; use
/// check_local_system to validate it.
struct LocalSystem {
    std::vector<Node> nodes;
    /// Strict relations alpha < beta; the order is their reflexive-transitive closure.
    std::vector<std::pair<std::string, std::string>> order;
    /// Step embeddings and composites, at most one per ordered pair.
    std::vector<Embedding> embeddings;
    std::vector<Join> joins;
    /// Extra subspaces of the top node that some node must contain.
    std::vector<Subspace> probes;

    std::optional<std::size_t> find(const std::string& id) const;
    /// Throws InvalidArgument for unknown ids.
    std::size_t index(const std::string& id) const;
    const Node& node(const std::string& id) const { return nodes[index(id)]; }
    const Algebra& algebra(const std::string& id) const { return node(id).algebra; }

    bool leq(const std::string& a, const std::string& b) const;
    const Embedding* embedding(const std::string& from, const std::string& to) const;
    /// The recorded map from a to b; identity when a == b. Throws when missing.
    Mat map(const std::string& from, const std::string& to) const;
    /// Ids sorted so that a < b puts a first; ties keep the node list order.
    std::vector<std::string> topological_order() const;
    /// The unique node above all others, if any.
    std::optional<std::string> top() const;
    /// The unique node below all others, if any.
    std::optional<std::string> bottom() const;
};

enum class Status { pass, fail, undetermined };

std::string status_name(Status s);
/// 0 pass, 1 fail, 2 undetermined.
int exit_code(Status s);

struct Fact {
    std::string key;
    std::string value;
};

struct VerificationReport {
    std::string property;
    Status status = Status::pass;
    /// Node ids, in the order they were found.
    std::vector<std::string> witnesses;
    std::vector<Fact> facts;
    std::vector<std::string> narrative;

    void fact(std::string key, std::string value) { facts.push_back({std::move(key), std::move(value)}); }
    void note(std::string line) { narrative.push_back(std::move(line)); }
    /// Value of the first fact with this key, or nullopt.
    std::optional<std::string> get(const std::string& key) const;
};

/// Result of a construction that may fail a containment check.
struct SubsystemResult {
    std::optional<LocalSystem> system;
    VerificationReport report;
};

struct Budget {
    std::size_t max_matrix_size = 12;
    std::size_t max_dim = 150;
};

/// Full column rank and multiplicativity on all basis pairs.
VerificationReport check_embedding(const Algebra& source, const Algebra& target, const Mat& map);

/// M_n -> M_{kn+z}: e_ij goes to the sum of the k block-diagonal copies.
Mat diagonal_map(std::size_t n, DiagonalSignature sig, Field field);
Embedding diagonal_embedding(std::size_t n, DiagonalSignature sig, Field field);

/// Chain M_{n1} -> M_{n2} -> ... with nodes "1", "2", ... and all composites.
LocalSystem build_diagonal_tower(std::size_t n1, const std::vector<DiagonalSignature>& sigs, Field field,
                                 Budget budget = {});

/// Ids, partial order, embeddings, directedness, coherence and probes.
VerificationReport check_local_system(const LocalSystem& ls);

/// Adds every missing composite alpha -> gamma from recorded steps.
void complete_composites(LocalSystem& ls);

/// Replaces each node in `ids` by the subalgebra spaces[i] and restricts the
/// embeddings. Fails when an edge does not map one subspace into the next.
SubsystemResult restrict_system(const LocalSystem& ls, const std::vector<std::string>& ids,
                                const std::vector<Subspace>& spaces, const std::string& property);

SubsystemResult perfect_core_system(const LocalSystem& ls);
/// Nodes beta >= node0 with A_beta replaced by the ideal generated by the image of p.
SubsystemResult ideal_subsystem(const LocalSystem& ls, const std::string& node0, const Subspace& p);

/// New minimal node "<base>^s" holding the chosen simple component S of a Levi
/// complement of the base node (0-based index), and nodes gamma >= base
/// replaced by the ideals generated by S.
LocalSystem conical_from_perfect(const LocalSystem& ls, const std::string& base, std::size_t component);

VerificationReport is_conical(const LocalSystem& ls);
VerificationReport verify_radical_avoidance(const LocalSystem& ls, const std::string& alpha);
VerificationReport verify_maximal_ideal_avoidance(const LocalSystem& ls, const std::string& alpha);
VerificationReport check_not_residually_nilpotent(const LocalSystem& ls);
/// algebra_rank per node in topological order.
std::vector<std::pair<std::string, std::size_t>> rank_profile(const LocalSystem& ls);
SubsystemResult one_perfect_profile(const LocalSystem& ls);

} // namespace locsys
