#pragma once

#include "locsys/tower.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace locsys::fixtures {

/// Map between matrix-pattern algebras that sends each basis element to the
/// target element of the same name (e.g. T_2 -> M_2, N_3 -> N_4).
Mat inclusion_by_name(const Algebra& source, const Algebra& target);

/// F + M_n with the scalar block first.
Algebra scalar_plus_matrix(std::size_t n, Field field);

/// M_1 -> M_2 -> ... -> M_n, bordering by a zero row and column at each step.
LocalSystem corner_tower(std::size_t n, Field field);
/// N_a -> N_{a+1} -> ... -> N_b by inclusion.
LocalSystem nilpotent_chain(std::size_t from, std::size_t to, Field field);
/// T_a -> ... -> T_b by inclusion; no node avoids the image of the first.
LocalSystem triangular_chain(std::size_t from, std::size_t to, Field field);
/// T_2 -> T_2 + T_2, x -> (x, x).
LocalSystem triangular_diagonal(Field field);
/// T_2 inside M_2; node algebras carry file references t2.alg and m2.alg.
LocalSystem two_node(Field field);
/// F + M_2 -> F + M_3 -> F + M_4, (l, X) -> (0, diag(X, l)).
LocalSystem scalar_plus_matrix_tower(Field field);
/// M_2 -> M_2 + M_2, X -> (X, 0).
LocalSystem condition3_failure(Field field);
/// M_1 -> M_2 -> M_3 corner chain whose composite 1 -> 3 is replaced by e -> e22.
LocalSystem corrupted_corner(Field field);
/// The conical system built on M_2 -> M_4 -> M_8 with the first node as base.
LocalSystem conical_fixture(Field field);

/// File name and canonical content of every corpus file, sorted by name.
std::vector<std::pair<std::string, std::string>> corpus();
/// Writes the corpus into dir (created if needed) and returns the file names.
std::vector<std::string> write_corpus(const std::filesystem::path& dir);

} // namespace locsys::fixtures
