#include "cusp/cartan.hpp"

#include <stdexcept>

namespace cusp {

std::string to_string(LieType type) {
    switch (type) {
        case LieType::G2: return "G2";
        case LieType::F4: return "F4";
        case LieType::E6: return "E6";
        case LieType::E7: return "E7";
        case LieType::E8: return "E8";
    }
    return "?";
}

LieType parse_lie_type(const std::string& text) {
    for (LieType t : all_lie_types())
        if (to_string(t) == text) return t;
    throw std::invalid_argument("parse_lie_type: unknown type '" + text + "'");
}

const std::vector<LieType>& all_lie_types() {
    static const std::vector<LieType> types = {LieType::G2, LieType::F4, LieType::E6,
                                               LieType::E7, LieType::E8};
    return types;
}

namespace {

// E6/E7/E8 are simply laced: 2I minus the adjacency of the Dynkin diagram,
// with node 2 hanging off node 4 of the chain 1-3-4-5-...-n.
std::vector<std::vector<long long>> simply_laced_e(int n) {
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
    link(1, 3);
    link(2, 4);
    for (int i = 3; i < n; ++i) link(i, i + 1);
    return a;
}

}  // namespace

std::vector<std::vector<long long>> cartan_matrix(LieType type) {
    switch (type) {
        case LieType::G2:
            return {{2, -1}, {-3, 2}};
        case LieType::F4:
            return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
        case LieType::E6: return simply_laced_e(6);
        case LieType::E7: return simply_laced_e(7);
        case LieType::E8: return simply_laced_e(8);
    }
    throw std::invalid_argument("cartan_matrix: bad type");
}

long long cartan_det(LieType type) {
    // Bareiss fraction-free elimination; all divisions are exact.
    std::vector<std::vector<long long>> a = cartan_matrix(type);
    int n = static_cast<int>(a.size());
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                long long num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                if (num % prev != 0) throw std::logic_error("cartan_det: inexact division");
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

long long center_points(LieType type, int p) {
    if (p < 2) throw std::invalid_argument("center_points: p must be a prime");
    long long d = cartan_det(type);
    while (d % p == 0) d /= p;
    return d;
}

}  // namespace cusp
