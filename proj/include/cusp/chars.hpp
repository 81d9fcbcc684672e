#pragma once

#include <string>
#include <vector>

#include "cusp/cyclo.hpp"
#include "cusp/grp.hpp"

namespace cusp {

// Exact character tables for the catalog groups, all values in Q(zeta_60).
//
// Cyclic groups use the closed root-of-unity formula chi_k(g^j) = zeta_n^(kj);
// Dihedral8 the standard four-linears-plus-rho2 table; symmetric groups the
// Murnaghan-Nakayama border-strip recursion; products the outer tensor of the
// factor tables. Row order is fixed so rendered tables are reproducible:
// cyclic by k ascending, symmetric by lexicographically descending
// partitions, dihedral as [triv, sgn_r, sgn_s, sgn_rs, rho2], products
// lexicographic in the factor rows.

using Partition = std::vector<int>;  // weakly decreasing positive parts

// Partitions of n in lexicographically descending order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);
// Cycle type of a permutation, fixed points included, sorted descending.
Partition cycle_type(const Perm& p);
std::string partition_label(const Partition& p);  // digit string, e.g. "311"

struct CharLabel {
    enum class Kind { Cyclic, DihedralLinear, DihedralRho2, Symmetric, Product };

    Kind kind = Kind::Cyclic;
    int k = 0;  // Cyclic exponent, or DihedralLinear index 0..3
    Partition parts;
    std::vector<CharLabel> factors;  // exactly two for Product

    static CharLabel cyclic(int k);
    static CharLabel dihedral_linear(int k);
    static CharLabel dihedral_rho2();
    static CharLabel symmetric(Partition parts);
    static CharLabel product(CharLabel a, CharLabel b);

    bool operator==(const CharLabel& rhs) const;
};

// Engine-canonical names: "chi<k>", "triv"/"sgn_r"/"sgn_s"/"sgn_rs"/"rho2",
// partition digits ("311"), and "<left>*<right>" for products.
std::string to_string(const CharLabel& label);

struct CharacterTable {
    GroupSpec spec;
    FiniteGroup group;
    std::vector<ConjClass> classes;       // ordered as conjugacy_classes
    std::vector<CharLabel> labels;        // one per row
    std::vector<std::vector<CycNum>> values;  // [row][class]

    long long order() const { return group.order(); }
    const CycNum& value(int row, int cls) const { return values[row][cls]; }
    long long degree(int row) const;            // values[row][identity class]
    int class_of(const Perm& p) const;           // -1 if absent
    int find_label(const std::string& name) const;  // -1 if absent
};

CharacterTable char_table(const GroupSpec& spec);

// Character of the symmetric group: chi_lambda at the class of cycle type mu,
// by the Murnaghan-Nakayama recursion over border strips (beta-set form).
// Both partitions must have the same size; n <= 6.
long long mn_value(const Partition& lambda, const Partition& mu);

// n! / product of hook lengths; the independent oracle for MN degrees.
long long hook_degree(const Partition& lambda);

// The Schur scalar chi(z)/chi(1) by which the central element z acts in the
// irreducible representation with character phi. Rejects non-central z.
CycNum central_character(const CharacterTable& table, const CharLabel& phi, const Perm& z);
CycNum central_character(const CharacterTable& table, const std::string& phi, const Perm& z);

struct OrthogonalityReport {
    bool ok = true;
    std::string violation;  // first failing pair, empty when ok
};

// Checks row and column orthogonality exactly.
OrthogonalityReport verify_orthogonality(const CharacterTable& table);

}  // namespace cusp
