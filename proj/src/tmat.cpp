#include "cusp/tmat.hpp"

#include <stdexcept>

namespace cusp {

namespace {

// Least element of the catalog group's center whose order is m. For x of
// order m central in its centralizer H, any isomorphism H -> catalog copy
// sends x to a center element of order m; picking the least one fixes the
// labeling deterministically and depends only on (label, m), so the
// eigenvalue is invariant under the choice of class representative.
Perm central_match(const CharacterTable& table, int m) {
    for (const Perm& z : center(table.group))
        if (perm_order(z) == m) return z;
    throw std::logic_error("central_match: no central element of order " + std::to_string(m));
}

}  // namespace

std::vector<SimpleObject> simple_objects(const GroupSpec& spec) {
    std::vector<SimpleObject> out;
    FiniteGroup group = build_group(spec);
    if (group.order() > 120)
        throw std::invalid_argument("simple_objects: group order exceeds catalog bound 120");
    std::vector<ConjClass> classes = conjugacy_classes(group);
    for (size_t c = 0; c < classes.size(); ++c) {
        GroupSpec label = recognize(centralizer(group, classes[c].rep));
        CharacterTable table = char_table(label);
        for (size_t row = 0; row < table.labels.size(); ++row) {
            SimpleObject obj;
            obj.ambient = spec;
            obj.class_index = static_cast<int>(c);
            obj.rep = classes[c].rep;
            obj.class_size = classes[c].size();
            obj.centralizer_label = label;
            obj.phi = table.labels[row];
            obj.dimension = obj.class_size * table.degree(static_cast<int>(row));
            out.push_back(std::move(obj));
        }
    }
    return out;
}

CycNum theta_eigenvalue(const SimpleObject& object) {
    CharacterTable table = char_table(object.centralizer_label);
    Perm z = central_match(table, perm_order(object.rep));
    return central_character(table, object.phi, z);
}

TSpectrum t_spectrum(const GroupSpec& spec) {
    TSpectrum spectrum;
    spectrum.group = spec;
    spectrum.objects = simple_objects(spec);
    // One table per distinct centralizer label would do; small enough as is.
    for (const SimpleObject& obj : spectrum.objects) {
        spectrum.eigenvalues.push_back(theta_eigenvalue(obj));
        spectrum.dimension_square_sum += obj.dimension * obj.dimension;
    }
    return spectrum;
}

}  // namespace cusp
