#include "doctest.h"

#include <map>

#include "cusp/tmat.hpp"

using namespace cusp;

namespace {

std::map<std::string, int> eigenvalue_multiset(const TSpectrum& spectrum) {
    std::map<std::string, int> out;
    for (const CycNum& v : spectrum.eigenvalues) out[render_literal(v)]++;
    return out;
}

}  // namespace

TEST_CASE("simple object counts") {
    CHECK(simple_objects(GroupSpec::cyclic(2)).size() == 4);
    CHECK(simple_objects(GroupSpec::symmetric(3)).size() == 8);
    CHECK(simple_objects(GroupSpec::symmetric(4)).size() == 21);
}

TEST_CASE("object count equals the sum over classes of centralizer class counts") {
    for (const char* name : {"S3", "S4", "D8", "Z6", "S3xZ2"}) {
        GroupSpec spec = parse_group_spec(name);
        FiniteGroup g = build_group(spec);
        size_t expected = 0;
        for (const ConjClass& cls : conjugacy_classes(g))
            expected += conjugacy_classes(centralizer(g, cls.rep)).size();
        CHECK(simple_objects(spec).size() == expected);
    }
}

TEST_CASE("theta eigenvalue examples in S3") {
    TSpectrum spectrum = t_spectrum(GroupSpec::symmetric(3));
    // Identity-class objects all have eigenvalue 1.
    for (size_t i = 0; i < spectrum.objects.size(); ++i)
        if (spectrum.objects[i].rep == identity_perm(3))
            CHECK(spectrum.eigenvalues[i] == CycNum::one());
    // (3-cycle, chi1 of Z3) -> zeta_3; (transposition, chi1 of Z2) -> -1.
    bool saw_zeta = false, saw_minus_one = false;
    for (size_t i = 0; i < spectrum.objects.size(); ++i) {
        const SimpleObject& obj = spectrum.objects[i];
        if (perm_order(obj.rep) == 3 && to_string(obj.phi) == "chi1") {
            CHECK(spectrum.eigenvalues[i] == CycNum::root(3, 1));
            saw_zeta = true;
        }
        if (perm_order(obj.rep) == 2 && to_string(obj.phi) == "chi1") {
            CHECK(spectrum.eigenvalues[i] == CycNum::integer(-1));
            saw_minus_one = true;
        }
    }
    CHECK(saw_zeta);
    CHECK(saw_minus_one);
}

TEST_CASE("S3 spectrum: 8 objects, multiset {1 x5, -1, z3^1, z3^2}, sum dim^2 = 36") {
    TSpectrum spectrum = t_spectrum(GroupSpec::symmetric(3));
    CHECK(spectrum.objects.size() == 8);
    std::map<std::string, int> expected = {{"1", 5}, {"-1", 1}, {"z3^1", 1}, {"z3^2", 1}};
    CHECK(eigenvalue_multiset(spectrum) == expected);
    CHECK(spectrum.dimension_square_sum == 36);
}

TEST_CASE("abelian case: Cyclic(3) has the nine eigenvalues zeta_3^(jk)") {
    TSpectrum spectrum = t_spectrum(GroupSpec::cyclic(3));
    CHECK(spectrum.objects.size() == 9);
    std::map<std::string, int> expected = {{"1", 5}, {"z3^1", 2}, {"z3^2", 2}};
    CHECK(eigenvalue_multiset(spectrum) == expected);
}

TEST_CASE("sum of squared dimensions equals |G|^2") {
    for (const char* name : {"S3", "S4", "S5", "D8"}) {
        GroupSpec spec = parse_group_spec(name);
        TSpectrum spectrum = t_spectrum(spec);
        CHECK(spectrum.dimension_square_sum == spec.order() * spec.order());
    }
}

TEST_CASE("every eigenvalue satisfies e^(order of x) = 1") {
    for (const char* name : {"S3", "S4", "S5", "D8", "Z6", "S3xZ2"}) {
        TSpectrum spectrum = t_spectrum(parse_group_spec(name));
        for (size_t i = 0; i < spectrum.objects.size(); ++i)
            CHECK(spectrum.eigenvalues[i].pow(perm_order(spectrum.objects[i].rep)) ==
                  CycNum::one());
    }
}

TEST_CASE("eigenvalues recomputed at a second class member agree") {
    for (const char* name : {"S4", "S5", "D8"}) {
        GroupSpec spec = parse_group_spec(name);
        FiniteGroup g = build_group(spec);
        std::vector<SimpleObject> objects = simple_objects(spec);
        for (SimpleObject obj : objects) {
            std::vector<ConjClass> classes = conjugacy_classes(g);
            const ConjClass& cls = classes[obj.class_index];
            if (cls.size() < 2) continue;
            CycNum canonical = theta_eigenvalue(obj);
            // Swap in the last member of the class and rerun the whole path:
            // centralizer, recognition, central matching.
            SimpleObject other = obj;
            other.rep = g.elements[cls.members.back()];
            other.centralizer_label = recognize(centralizer(g, other.rep));
            CHECK(other.centralizer_label == obj.centralizer_label);
            CHECK(theta_eigenvalue(other) == canonical);
        }
    }
}

TEST_CASE("out-of-catalog groups are rejected") {
    CHECK_THROWS(t_spectrum(GroupSpec::symmetric(6)));
    CHECK_THROWS(t_spectrum(GroupSpec::cyclic(12)));
}
