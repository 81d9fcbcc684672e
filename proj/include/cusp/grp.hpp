#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cusp {

// Concrete finite groups realized by permutations, everything by brute-force
// enumeration. The largest group in the catalog has 120 elements; the point
// is auditability, not asymptotics.

using Perm = std::vector<uint8_t>;  // image vector: p[i] is where i goes

Perm identity_perm(int degree);
Perm compose(const Perm& f, const Perm& g);  // apply g first, then f
Perm inverse_perm(const Perm& p);
int perm_order(const Perm& p);
// "e" for the identity, cycle notation otherwise: "(0 1 2)(3 4)".
std::string cycle_string(const Perm& p);

struct GroupSpec {
    enum class Kind { Cyclic, Dihedral8, Symmetric, Product };

    Kind kind = Kind::Cyclic;
    int n = 1;                       // parameter of Cyclic / Symmetric
    std::vector<GroupSpec> factors;  // exactly two for Product

    static GroupSpec cyclic(int n);
    static GroupSpec dihedral8();
    static GroupSpec symmetric(int n);
    static GroupSpec product(GroupSpec a, GroupSpec b);

    long long order() const;
    bool operator==(const GroupSpec& rhs) const;
    bool operator!=(const GroupSpec& rhs) const { return !(*this == rhs); }
};

// Text names used by the dataset and CLI: Z<n>, S<n>, D8, and A "x" B for
// direct products (e.g. "S3xZ2", "Z2xZ2").
std::string to_string(const GroupSpec& spec);
GroupSpec parse_group_spec(const std::string& text);

struct ConjClass {
    Perm rep;                  // least member in the fixed order on words
    std::vector<int> members;  // element indices, ascending
    int size() const { return static_cast<int>(members.size()); }
};

struct FiniteGroup {
    std::optional<GroupSpec> spec;  // set for catalog builds, empty for subgroups
    int degree = 0;
    std::vector<Perm> elements;  // lexicographically sorted, closed, with identity

    long long order() const { return static_cast<long long>(elements.size()); }
    int identity_index() const;         // always 0: the identity word is lex-least
    int index_of(const Perm& p) const;  // -1 if absent
    bool contains(const Perm& p) const { return index_of(p) >= 0; }
};

// Faithful permutation realization: Cyclic(n) as an n-cycle, Dihedral8 on the
// 4 vertices of a square, Symmetric(n) on n points, Product on the disjoint
// union. Rejects out-of-catalog specs (Cyclic n>60, Symmetric n>6, product
// nesting deeper than 2, total order > 720).
FiniteGroup build_group(const GroupSpec& spec);

// Partition into conjugation orbits, ordered by least representative.
std::vector<ConjClass> conjugacy_classes(const FiniteGroup& group);

std::vector<Perm> center(const FiniteGroup& group);

// {h : hg = gh} with the induced action on the same points.
FiniteGroup centralizer(const FiniteGroup& group, const Perm& g);

// Catalog labels recognizable by fingerprint (order, abelian flag, center
// size, element-order multiset). The fingerprints separate all members;
// anything else is a hard error ("unrecognized" / "ambiguous").
const std::vector<GroupSpec>& recognition_catalog();
GroupSpec recognize(const FiniteGroup& group);

}  // namespace cusp
