#include "cusp/cuspidal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cusp {

std::string to_string(Derivation d) {
    return d == Derivation::Complete ? "complete" : "consistency-only";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::DerivedUnique: return "derived-unique";
        case Verdict::DerivedSet: return "derived-set";
        case Verdict::Consistent: return "consistent";
    }
    return "?";
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

struct DatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void fail_line(int line_no, const std::string& what) {
    throw DatasetError("dataset line " + std::to_string(line_no) + ": " + what);
}

const char* kHeader =
    "row\tgroup\tp\tclass\tregular\tA\tphi_paper\tphi_engine\ttwist\ttheta"
    "\tderivation\torbit\taux\texternal\tnote";

void insert_sorted_unique(std::vector<CycNum>& values, const CycNum& v) {
    for (const CycNum& existing : values)
        if (existing == v) return;
    values.push_back(v);
    std::sort(values.begin(), values.end(),
              [](const CycNum& a, const CycNum& b) { return a.lex_less(b); });
}

Perm resolve_twist(const std::string& name, const FiniteGroup& group, int line_no) {
    if (name == "e") return identity_perm(group.degree);
    if (name == "inv") {
        std::vector<Perm> involutions;
        for (const Perm& z : center(group))
            if (perm_order(z) == 2) involutions.push_back(z);
        if (involutions.size() != 1)
            fail_line(line_no, "twist 'inv' needs a unique central involution");
        return involutions[0];
    }
    fail_line(line_no, "unknown twist name '" + name + "'");
}

}  // namespace

Dataset load_dataset(std::istream& in) {
    Dataset data;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != kHeader) fail_line(line_no, "bad header row");
            header_seen = true;
            continue;
        }
        std::vector<std::string> f = split(line, '\t');
        if (f.size() != 15)
            fail_line(line_no, "expected 15 columns, got " + std::to_string(f.size()));
        CuspidalRecord r;
        try {
            r.row = std::stoi(f[0]);
            r.group_type = parse_lie_type(f[1]);
            r.p = std::stoi(f[2]);
            r.class_label = f[3];
            if (f[4] == "true")
                r.regular_class = true;
            else if (f[4] == "false")
                r.regular_class = false;
            else
                fail_line(line_no, "field 'regular' must be true/false");
            r.component_group = parse_group_spec(f[5]);
            r.phi_paper = f[6];
            r.phi_engine = f[7];
            r.twist_name = f[8];
            r.theta_expected = parse_literal(f[9]);
            if (f[10] == "complete")
                r.derivation = Derivation::Complete;
            else if (f[10] == "consistency-only")
                r.derivation = Derivation::ConsistencyOnly;
            else
                fail_line(line_no, "field 'derivation' must be complete/consistency-only");
            r.galois_orbit = f[11] == "-" ? "" : f[11];
            if (f[12] != "-") {
                for (const std::string& item : split(f[12], ';')) {
                    size_t eq = item.find('=');
                    size_t at = item.find('@');
                    if (eq == std::string::npos || at == std::string::npos || at < eq)
                        fail_line(line_no, "field 'aux' must be label=lit@source");
                    AuxConstraint aux;
                    aux.phi_label = item.substr(0, eq);
                    aux.required = parse_literal(item.substr(eq + 1, at - eq - 1));
                    aux.source = item.substr(at + 1);
                    r.aux.push_back(std::move(aux));
                }
            }
            if (f[13] != "-") {
                size_t at = f[13].find('@');
                if (at == std::string::npos)
                    fail_line(line_no, "field 'external' must be kind@citation");
                ExternalFact fact;
                fact.kind = f[13].substr(0, at);
                fact.citation = f[13].substr(at + 1);
                if (fact.kind != "nontrivial")
                    fail_line(line_no, "unknown external fact kind '" + fact.kind + "'");
                r.external_fact = std::move(fact);
            }
            r.note = f[14] == "-" ? "" : f[14];

            if (r.row < 1 || r.row > 24) fail_line(line_no, "row must lie in 1..24");
            if (r.p != 2 && r.p != 3 && r.p != 5)
                fail_line(line_no, "p must be a bad prime (2, 3, 5)");

            // Type invariants: phi_engine valid on A, twist central, theta a
            // root of unity.
            FiniteGroup group = build_group(r.component_group);
            CharacterTable table = char_table(r.component_group);
            if (table.find_label(r.phi_engine) < 0)
                fail_line(line_no, "phi_engine '" + r.phi_engine + "' is not a character of " +
                                       to_string(r.component_group));
            for (const AuxConstraint& aux : r.aux)
                if (table.find_label(aux.phi_label) < 0)
                    fail_line(line_no, "aux label '" + aux.phi_label +
                                           "' is not a character of " +
                                           to_string(r.component_group));
            r.central_twist = resolve_twist(r.twist_name, group, line_no);
            if (!r.theta_expected.order_as_root_of_unity().has_value())
                fail_line(line_no, "theta is not a root of unity");
        } catch (const DatasetError&) {
            throw;
        } catch (const std::exception& e) {
            fail_line(line_no, e.what());
        }

        data.records.push_back(std::move(r));
    }
    if (!header_seen) throw std::runtime_error("dataset: missing header row");

    if (data.records.size() != 36)
        throw std::runtime_error("dataset: expected 36 records, got " +
                                 std::to_string(data.records.size()));
    std::vector<bool> row_seen(25, false);
    for (const CuspidalRecord& r : data.records) row_seen[r.row] = true;
    for (int row = 1; row <= 24; ++row)
        if (!row_seen[row])
            throw std::runtime_error("dataset: row " + std::to_string(row) + " missing");

    // Galois orbits: members must share one multiplicative order (then they
    // are exchanged by the maps zeta -> zeta^k with gcd(k, order) = 1).
    std::map<std::string, std::vector<CycNum>> orbits;
    for (const CuspidalRecord& r : data.records)
        if (!r.galois_orbit.empty()) orbits[r.galois_orbit].push_back(r.theta_expected);
    for (const auto& [id, values] : orbits) {
        int order = values.front().order_as_root_of_unity().value();
        for (const CycNum& v : values)
            if (v.order_as_root_of_unity().value() != order)
                throw std::runtime_error("dataset: orbit " + id +
                                         " mixes theta values of different orders");
    }
    for (CuspidalRecord& r : data.records) {
        if (r.galois_orbit.empty()) {
            r.orbit_expected = {r.theta_expected};
        } else {
            for (const CycNum& v : orbits[r.galois_orbit])
                insert_sorted_unique(r.orbit_expected, v);
        }
    }
    return data;
}

Dataset load_dataset_string(const std::string& text) {
    std::istringstream in(text);
    return load_dataset(in);
}

std::vector<Perm> ubar_candidates(const CuspidalRecord& record) {
    FiniteGroup group = build_group(record.component_group);
    std::vector<Perm> out;
    for (const Perm& w : center(group)) {
        int order = perm_order(w);
        while (order % record.p == 0) order /= record.p;
        if (order == 1) out.push_back(compose(record.central_twist, w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> apply_springer_lou(const CuspidalRecord& record, std::vector<Perm> candidates) {
    if (!record.regular_class) return candidates;
    if (record.component_group.kind != GroupSpec::Kind::Cyclic)
        throw std::logic_error("apply_springer_lou: needs a cyclic component group (row " +
                               std::to_string(record.row) + ")");
    long long z = center_points(record.group_type, record.p);
    long long a = record.component_group.order();
    if (a % z != 0) throw std::logic_error("apply_springer_lou: center factor does not divide |A|");
    int target = static_cast<int>(a / z);
    std::vector<Perm> kept;
    for (const Perm& c : candidates)
        if (perm_order(c) == target) kept.push_back(c);
    return kept;
}

std::vector<Perm> apply_aux(const CuspidalRecord& record, std::vector<Perm> candidates) {
    if (record.aux.empty()) return candidates;
    CharacterTable table = char_table(record.component_group);
    for (const AuxConstraint& aux : record.aux) {
        std::vector<Perm> kept;
        for (const Perm& c : candidates)
            if (central_character(table, aux.phi_label, c) == aux.required) kept.push_back(c);
        candidates = std::move(kept);
        if (candidates.empty())
            throw std::runtime_error("apply_aux: constraint " + aux.phi_label +
                                     " eliminated every candidate (row " +
                                     std::to_string(record.row) + ")");
    }
    return candidates;
}

std::vector<Perm> apply_external(const CuspidalRecord& record, std::vector<Perm> candidates) {
    if (!record.external_fact) return candidates;
    std::vector<Perm> kept;
    for (const Perm& c : candidates)
        if (perm_order(c) != 1) kept.push_back(c);
    if (kept.empty())
        throw std::runtime_error("apply_external: override eliminated every candidate (row " +
                                 std::to_string(record.row) + ")");
    return kept;
}

std::string DeductionTrace::rule_summary() const {
    std::string out;
    for (const TraceStep& step : steps) {
        if (!out.empty()) out += " + ";
        out += step.rule;
    }
    return out;
}

DeductionTrace deduce_theta(const CuspidalRecord& record) {
    DeductionTrace trace;
    trace.row = record.row;
    trace.class_label = record.class_label;
    trace.phi_engine = record.phi_engine;

    FiniteGroup group = build_group(record.component_group);
    CharacterTable table = char_table(record.component_group);

    std::vector<Perm> candidates;
    for (const Perm& w : center(group)) candidates.push_back(compose(record.central_twist, w));
    std::sort(candidates.begin(), candidates.end());
    trace.steps.push_back({"central",
                           record.twist_name == "e"
                               ? "ubar lies in the center of " + to_string(record.component_group)
                               : "ubar lies in the coset twist*center, twist = " +
                                     cycle_string(record.central_twist),
                           candidates});

    candidates = ubar_candidates(record);
    trace.steps.push_back(
        {"p-torsion",
         "unipotent part has " + std::to_string(record.p) + "-power order", candidates});

    if (record.regular_class) {
        candidates = apply_springer_lou(record, std::move(candidates));
        long long z = center_points(record.group_type, record.p);
        long long target = record.component_group.order() / z;
        trace.steps.push_back({"Springer-Lou",
                               "ubar generates the complement of the " + std::to_string(z) +
                                   "-point center, so it has order " + std::to_string(target),
                               candidates});
        if (candidates.empty())
            throw std::runtime_error("deduce_theta: Springer-Lou eliminated every candidate "
                                     "(row " + std::to_string(record.row) + ")");
    }

    if (!record.aux.empty()) {
        candidates = apply_aux(record, std::move(candidates));
        std::string detail;
        for (const AuxConstraint& aux : record.aux) {
            if (!detail.empty()) detail += "; ";
            detail += aux.phi_label + "(ubar) = " + render_literal(aux.required) + " [" +
                      aux.source + "]";
        }
        trace.steps.push_back({"aux", detail, candidates});
    }

    if (record.external_fact) {
        candidates = apply_external(record, std::move(candidates));
        trace.steps.push_back({"external",
                               "ubar is nontrivial [" + record.external_fact->citation + "]",
                               candidates});
    }

    trace.survivors = candidates;
    for (const Perm& c : candidates)
        insert_sorted_unique(trace.theta_set, central_character(table, record.phi_engine, c));

    for (const CycNum& v : trace.theta_set)
        if (v == record.theta_expected) trace.expected_in_set = true;

    if (trace.expected_in_set) {
        bool matches_orbit = trace.theta_set.size() == record.orbit_expected.size();
        if (matches_orbit)
            for (size_t i = 0; i < trace.theta_set.size(); ++i)
                if (trace.theta_set[i] != record.orbit_expected[i]) matches_orbit = false;
        if (trace.theta_set.size() == 1)
            trace.verdict = Verdict::DerivedUnique;
        else if (matches_orbit)
            trace.verdict = Verdict::DerivedSet;
        else
            trace.verdict = Verdict::Consistent;
    }
    return trace;
}

RecordCheck verify_record(const CuspidalRecord& record) {
    RecordCheck check;
    check.trace = deduce_theta(record);
    std::string where = "row " + std::to_string(record.row) + " (" + record.class_label +
                        ", " + record.phi_engine + ")";
    if (!check.trace.expected_in_set) {
        check.ok = false;
        check.message = where + ": expected theta " + render_literal(record.theta_expected) +
                        " not in deduced theta-set";
        return check;
    }
    if (record.derivation == Derivation::Complete) {
        bool exact = check.trace.theta_set.size() == record.orbit_expected.size();
        if (exact)
            for (size_t i = 0; i < check.trace.theta_set.size(); ++i)
                if (check.trace.theta_set[i] != record.orbit_expected[i]) exact = false;
        if (!exact) {
            check.ok = false;
            check.message = where + ": verdict " + to_string(*check.trace.verdict) +
                            " falls below derivation status complete";
        }
    }
    return check;
}

ForcedTrivialResult forced_trivial(const GroupSpec& component_group, int p) {
    FiniteGroup group = build_group(component_group);
    std::vector<Perm> central = center(group);
    bool forced = true;
    for (const Perm& z : central) {
        int order = perm_order(z);
        while (order % p == 0) order /= p;
        if (order == 1 && perm_order(z) != 1) forced = false;
    }
    ForcedTrivialResult out;
    out.forced = forced;
    if (central.size() == 1) {
        out.mechanism = "trivial center";
    } else if (std::gcd(group.order(), static_cast<long long>(p)) == 1) {
        out.mechanism = "coprime order";
    } else if (static_cast<long long>(central.size()) % p != 0) {
        out.mechanism = "p'-center";
    } else {
        out.mechanism = "";
    }
    // The mechanisms are exactly the ways the enumeration can come out empty.
    if (forced != !out.mechanism.empty())
        throw std::logic_error("forced_trivial: mechanism disagrees with enumeration");
    return out;
}

std::vector<Collision> distinct_check(const Dataset& data, LieType type, int p) {
    std::vector<int> indices;
    for (size_t i = 0; i < data.records.size(); ++i)
        if (data.records[i].group_type == type && data.records[i].p == p)
            indices.push_back(static_cast<int>(i));
    std::vector<Collision> out;
    for (size_t a = 0; a < indices.size(); ++a) {
        for (size_t b = a + 1; b < indices.size(); ++b) {
            const CuspidalRecord& ra = data.records[indices[a]];
            const CuspidalRecord& rb = data.records[indices[b]];
            if (!ra.galois_orbit.empty() && ra.galois_orbit == rb.galois_orbit) continue;
            if (ra.theta_expected != rb.theta_expected) continue;
            Collision c;
            c.index_a = indices[a];
            c.index_b = indices[b];
            c.row_a = ra.row;
            c.row_b = rb.row;
            c.class_a = ra.class_label;
            c.class_b = rb.class_label;
            c.theta = ra.theta_expected;
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<Collision> distinct_check_all(const Dataset& data) {
    // (type, p) pairs in dataset order, each once.
    std::vector<std::pair<LieType, int>> pairs;
    for (const CuspidalRecord& r : data.records) {
        auto key = std::make_pair(r.group_type, r.p);
        if (std::find(pairs.begin(), pairs.end(), key) == pairs.end()) pairs.push_back(key);
    }
    std::vector<Collision> out;
    for (const auto& [type, p] : pairs)
        for (Collision& c : distinct_check(data, type, p)) out.push_back(std::move(c));
    return out;
}

}  // namespace cusp
