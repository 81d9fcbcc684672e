#pragma once

#include <vector>

#include "cusp/chars.hpp"

namespace cusp {

// The T-matrix of a finite group: simple equivariant objects are pairs
// (conjugacy class of x, irreducible character phi of the centralizer of x),
// and the automorphism acts on each by the scalar phi(x)/phi(1). Since x is
// always central in its own centralizer the scalar is a root of unity whose
// order divides ord(x).
//
// Character labels live on the recognized catalog copy of the centralizer;
// the eigenvalue is evaluated at the least element of the catalog group's
// center whose order equals ord(x), which is independent of the class
// representative chosen.

struct SimpleObject {
    GroupSpec ambient;
    int class_index = 0;
    Perm rep;  // canonical class representative
    long long class_size = 0;
    GroupSpec centralizer_label;
    CharLabel phi;
    long long dimension = 0;  // class size times degree of phi
};

// One object per (class, character of centralizer), classes first, then
// character rows in table order.
std::vector<SimpleObject> simple_objects(const GroupSpec& spec);

CycNum theta_eigenvalue(const SimpleObject& object);

struct TSpectrum {
    GroupSpec group;
    std::vector<SimpleObject> objects;
    std::vector<CycNum> eigenvalues;  // parallel to objects
    long long dimension_square_sum = 0;
};

TSpectrum t_spectrum(const GroupSpec& spec);

}  // namespace cusp
