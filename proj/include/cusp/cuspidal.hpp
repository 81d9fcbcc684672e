#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cusp/cartan.hpp"
#include "cusp/chars.hpp"

namespace cusp {

// The curated dataset of twist eigenvalues of unipotent cuspidal pairs on
// exceptional groups at bad primes (36 local systems across 24 table rows),
// and the constraint engine that re-derives every theta from four rules:
//
//   central     the acting element ubar lies in the center of A (coset by
//               the curated central twist when the support is not unipotent)
//   p-torsion   the unipotent part of ubar has p-power order
//   Springer-Lou  on the regular class, A is cyclic and ubar generates the
//               complement of the center of the ambient group, so ubar has
//               order |A| / center_points(type, p)
//   aux / external  recorded induction facts (theta of a principal-series
//               character is 1) and imported nontriviality facts, with
//               citations carried in the trace
//
// Every rule only removes candidates, so ablating a rule can only grow the
// deduced theta-set.

enum class Derivation { Complete, ConsistencyOnly };
enum class Verdict { DerivedUnique, DerivedSet, Consistent };

std::string to_string(Derivation d);
std::string to_string(Verdict v);

struct AuxConstraint {
    std::string phi_label;  // character of A constrained by the fact
    CycNum required;
    std::string source;
};

struct ExternalFact {
    std::string kind;  // "nontrivial"
    std::string citation;
};

struct CuspidalRecord {
    int row = 0;  // dataset table row, 1..24
    LieType group_type = LieType::G2;
    int p = 2;
    std::string class_label;
    bool regular_class = false;
    GroupSpec component_group;  // A
    std::string phi_paper;      // display notation
    std::string phi_engine;     // engine character label on A
    std::string twist_name;     // "e" or "inv"
    Perm central_twist;
    CycNum theta_expected;
    Derivation derivation = Derivation::Complete;
    std::string galois_orbit;  // empty when the record stands alone
    std::vector<AuxConstraint> aux;
    std::optional<ExternalFact> external_fact;
    std::string note;
    // Expected theta values across the record's orbit (deduped, sorted);
    // just {theta_expected} for records without an orbit id.
    std::vector<CycNum> orbit_expected;
};

struct Dataset {
    std::vector<CuspidalRecord> records;
};

// TSV with header columns:
// row group p class regular A phi_paper phi_engine twist theta derivation
// orbit aux external note
// Validates all record invariants; the shipped dataset has exactly 36
// records spanning rows 1..24. Errors carry the offending line number.
Dataset load_dataset(std::istream& in);
Dataset load_dataset_string(const std::string& text);
const char* embedded_dataset();

// Candidates for ubar: the central twist times every center element of
// p-power order.
std::vector<Perm> ubar_candidates(const CuspidalRecord& record);

// Regular-class rule: keeps exactly the candidates of order
// |A| / center_points(type, p). Identity transformation on non-regular
// records; throws if a regular record has a non-cyclic component group.
std::vector<Perm> apply_springer_lou(const CuspidalRecord& record, std::vector<Perm> candidates);

// Keeps candidates satisfying every recorded constraint phi'(ubar) = value.
// An empty survivor set means the dataset contradicts itself: hard error.
std::vector<Perm> apply_aux(const CuspidalRecord& record, std::vector<Perm> candidates);

// Intersects with the recorded override ("nontrivial" drops the identity).
// An empty survivor set is a hard error.
std::vector<Perm> apply_external(const CuspidalRecord& record, std::vector<Perm> candidates);

struct TraceStep {
    std::string rule;    // "central", "p-torsion", "Springer-Lou", "aux", "external"
    std::string detail;  // human-readable effect, citations included
    std::vector<Perm> survivors;
};

struct DeductionTrace {
    int row = 0;
    std::string class_label;
    std::string phi_engine;
    std::vector<TraceStep> steps;
    std::vector<Perm> survivors;
    std::vector<CycNum> theta_set;  // deduped, deterministic order
    bool expected_in_set = false;
    std::optional<Verdict> verdict;  // empty iff expected theta not deduced
    std::string rule_summary() const;  // "central + p-torsion + Springer-Lou"
};

// Runs the pipeline and classifies the outcome; throws only when a rule is
// misapplied or eliminates every candidate (the dataset contradicts itself).
DeductionTrace deduce_theta(const CuspidalRecord& record);

struct RecordCheck {
    bool ok = true;
    std::string message;  // names the failing row
    DeductionTrace trace;
};

// deduce_theta plus the verification contract: the expected theta must lie
// in the deduced set, and records marked complete must deduce exactly their
// Galois orbit of expected values.
RecordCheck verify_record(const CuspidalRecord& record);

struct ForcedTrivialResult {
    bool forced = false;
    std::string mechanism;  // "trivial center", "coprime order", "p'-center"
};

// True iff the identity is the only center element of A with p-power order;
// the mechanism names which part of the good-characteristic argument fires.
ForcedTrivialResult forced_trivial(const GroupSpec& component_group, int p);

struct Collision {
    int index_a = 0;  // positions in Dataset::records
    int index_b = 0;
    int row_a = 0;
    int row_b = 0;
    std::string class_a;
    std::string class_b;
    CycNum theta;
};

// Unordered pairs of records for (type, p) with equal expected theta.
// Records sharing a galois_orbit id form one ambiguously-labeled family and
// are never reported against each other.
std::vector<Collision> distinct_check(const Dataset& data, LieType type, int p);
std::vector<Collision> distinct_check_all(const Dataset& data);

}  // namespace cusp
