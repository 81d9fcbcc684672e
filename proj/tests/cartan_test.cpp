#include "doctest.h"

#include <stdexcept>

#include "cusp/cartan.hpp"

using namespace cusp;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
long long cofactor_det(const std::vector<std::vector<long long>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    long long det = 0;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<long long>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        long long term = m[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace

TEST_CASE("Cartan determinants: frozen values and cofactor cross-check") {
    CHECK(cartan_det(LieType::G2) == 1);
    CHECK(cartan_det(LieType::F4) == 1);
    CHECK(cartan_det(LieType::E6) == 3);
    CHECK(cartan_det(LieType::E7) == 2);
    CHECK(cartan_det(LieType::E8) == 1);
    for (LieType type : all_lie_types())
        CHECK(cartan_det(type) == cofactor_det(cartan_matrix(type)));
}

TEST_CASE("Cartan matrices are well-formed") {
    for (LieType type : all_lie_types()) {
        auto m = cartan_matrix(type);
        for (size_t i = 0; i < m.size(); ++i) {
            CHECK(m[i].size() == m.size());
            CHECK(m[i][i] == 2);
            for (size_t j = 0; j < m.size(); ++j) {
                if (i == j) continue;
                CHECK(m[i][j] <= 0);
                // Off-diagonal entries vanish together (symmetrizability).
                CHECK((m[i][j] == 0) == (m[j][i] == 0));
            }
        }
    }
}

TEST_CASE("center point counts are the prime-to-p part of the determinant") {
    CHECK(center_points(LieType::E6, 2) == 3);
    CHECK(center_points(LieType::E6, 3) == 1);
    CHECK(center_points(LieType::E7, 3) == 2);
    CHECK(center_points(LieType::E7, 2) == 1);
    for (int p : {2, 3, 5}) {
        CHECK(center_points(LieType::G2, p) == 1);
        CHECK(center_points(LieType::F4, p) == 1);
        CHECK(center_points(LieType::E8, p) == 1);
    }
    CHECK(center_points(LieType::E6, 5) == 3);
}

TEST_CASE("lie type names round-trip") {
    for (LieType type : all_lie_types()) CHECK(parse_lie_type(to_string(type)) == type);
    CHECK_THROWS_AS(parse_lie_type("B2"), std::invalid_argument);
}
