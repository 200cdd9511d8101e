#include "locsys/fixtures.hpp"

#include "locsys/errors.hpp"
#include "locsys/io.hpp"

#include <algorithm>
#include <map>

namespace locsys::fixtures {

namespace {

LocalSystem chain(std::vector<Algebra> algebras) {
    LocalSystem ls;
    for (std::size_t i = 0; i < algebras.size(); ++i) {
        ls.nodes.push_back({std::to_string(i + 1), std::move(algebras[i]), std::nullopt});
        if (i == 0) continue;
        std::string a = std::to_string(i), b = std::to_string(i + 1);
        ls.order.emplace_back(a, b);
        ls.embeddings.push_back({a, b, inclusion_by_name(ls.nodes[i - 1].algebra, ls.nodes[i].algebra)});
    }
    complete_composites(ls);
    return ls;
}

std::string alg(const std::string& stem) {
    return stem + ".alg";
}

} // namespace

Mat inclusion_by_name(const Algebra& source, const Algebra& target) {
    std::map<std::string, std::size_t> where;
    for (std::size_t i = 0; i < target.dim(); ++i) where[target.basis_names()[i]] = i;
    Mat m(source.field(), target.dim(), source.dim());
    for (std::size_t j = 0; j < source.dim(); ++j) {
        auto it = where.find(source.basis_names()[j]);
        if (it == where.end()) throw InvalidArgument("target has no basis element " + source.basis_names()[j]);
        m.set(it->second, j, Scalar(1));
    }
    return m;
}

Algebra scalar_plus_matrix(std::size_t n, Field field) {
    return direct_sum(matrix_algebra(1, field), matrix_algebra(n, field), "F+M_" + std::to_string(n));
}

LocalSystem corner_tower(std::size_t n, Field field) {
    return build_diagonal_tower(1, std::vector<DiagonalSignature>(n - 1, {1, 1}), field);
}

LocalSystem nilpotent_chain(std::size_t from, std::size_t to, Field field) {
    std::vector<Algebra> algebras;
    for (std::size_t n = from; n <= to; ++n) algebras.push_back(strictly_upper_algebra(n, field));
    return chain(std::move(algebras));
}

LocalSystem triangular_chain(std::size_t from, std::size_t to, Field field) {
    std::vector<Algebra> algebras;
    for (std::size_t n = from; n <= to; ++n) algebras.push_back(upper_triangular_algebra(n, field));
    return chain(std::move(algebras));
}

LocalSystem triangular_diagonal(Field field) {
    Algebra t2 = upper_triangular_algebra(2, field);
    LocalSystem ls;
    ls.nodes.push_back({"1", t2, std::nullopt});
    ls.nodes.push_back({"2", direct_sum(t2, t2, "T_2+T_2"), std::nullopt});
    ls.order.emplace_back("1", "2");
    Mat m(field, 6, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        m.set(i, i, Scalar(1));
        m.set(3 + i, i, Scalar(1));
    }
    ls.embeddings.push_back({"1", "2", m});
    return ls;
}

LocalSystem two_node(Field field) {
    LocalSystem ls = chain({upper_triangular_algebra(2, field), matrix_algebra(2, field)});
    ls.nodes[0].file = alg("t2");
    ls.nodes[1].file = alg("m2");
    return ls;
}

LocalSystem scalar_plus_matrix_tower(Field field) {
    LocalSystem ls;
    for (std::size_t n = 2; n <= 4; ++n) ls.nodes.push_back({std::to_string(n - 1), scalar_plus_matrix(n, field), std::nullopt});
    for (std::size_t n = 2; n <= 3; ++n) {
        const std::size_t m = n + 1;
        Mat map(field, 1 + m * m, 1 + n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) map.set(1 + i * m + j, 1 + i * n + j, Scalar(1));
        map.set(1 + n * m + n, 0, Scalar(1));
        ls.order.emplace_back(std::to_string(n - 1), std::to_string(n));
        ls.embeddings.push_back({std::to_string(n - 1), std::to_string(n), map});
    }
    complete_composites(ls);
    return ls;
}

LocalSystem condition3_failure(Field field) {
    LocalSystem ls;
    Algebra m2 = matrix_algebra(2, field);
    ls.nodes.push_back({"1", m2, std::nullopt});
    ls.nodes.push_back({"2", direct_sum(m2, m2, "M_2+M_2"), std::nullopt});
    ls.order.emplace_back("1", "2");
    Mat map(field, 8, 4);
    for (std::size_t i = 0; i < 4; ++i) map.set(i, i, Scalar(1));
    ls.embeddings.push_back({"1", "2", map});
    return ls;
}

LocalSystem corrupted_corner(Field field) {
    LocalSystem ls = corner_tower(3, field);
    for (auto& e : ls.embeddings)
        if (e.source == "1" && e.target == "3") {
            Mat wrong(field, 9, 1);
            wrong.set(4, 0, Scalar(1));
            e.map = wrong;
        }
    return ls;
}

LocalSystem conical_fixture(Field field) {
    return conical_from_perfect(build_diagonal_tower(2, {{2, 0}, {2, 0}}, field), "1", 0);
}

std::vector<std::pair<std::string, std::string>> corpus() {
    const Field q = Field::rationals();
    std::vector<std::pair<std::string, std::string>> files;
    for (std::size_t n = 1; n <= 6; ++n) files.emplace_back(alg("m" + std::to_string(n)), serialize_algebra(matrix_algebra(n, q)));
    for (std::size_t n = 2; n <= 5; ++n)
        files.emplace_back(alg("t" + std::to_string(n)), serialize_algebra(upper_triangular_algebra(n, q)));
    files.emplace_back(alg("n3"), serialize_algebra(strictly_upper_algebra(3, q)));
    files.emplace_back(alg("n4"), serialize_algebra(strictly_upper_algebra(4, q)));
    files.emplace_back(alg("m2m3"), serialize_algebra(direct_sum(matrix_algebra(2, q), matrix_algebra(3, q), "M_2+M_3")));
    files.emplace_back(alg("fm2"), serialize_algebra(scalar_plus_matrix(2, q)));
    files.emplace_back(alg("null1"), serialize_algebra(null_algebra(1, q)));

    files.emplace_back("m_infty_prefix.twr", serialize_tower(corner_tower(6, q)));
    TowerFile diag;
    diag.diagonal = DiagonalTowerSpec{2, q, {{2, 0}, {2, 4}}};
    files.emplace_back("diag_2_4_12.twr", serialize_tower(diag));
    files.emplace_back("conical_fixture.twr", serialize_tower(conical_fixture(q)));
    files.emplace_back("cond3_fail.twr", serialize_tower(condition3_failure(q)));
    files.emplace_back("corrupted.twr", serialize_tower(corrupted_corner(q)));
    files.emplace_back("nil_chain.twr", serialize_tower(nilpotent_chain(3, 5, q)));
    files.emplace_back("two_node.twr", serialize_tower(two_node(q)));
    files.emplace_back("fm2_tower.twr", serialize_tower(scalar_plus_matrix_tower(q)));
    files.emplace_back("adversarial.twr", serialize_tower(triangular_chain(2, 4, q)));
    files.emplace_back("adversarial_diag.twr", serialize_tower(triangular_diagonal(q)));
    std::sort(files.begin(), files.end());
    return files;
}

std::vector<std::string> write_corpus(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
    std::vector<std::string> names;
    for (const auto& [name, text] : corpus()) {
        write_text(dir / name, text);
        names.push_back(name);
    }
    return names;
}

} // namespace locsys::fixtures
