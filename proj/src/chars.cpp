#include "cusp/chars.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cusp {

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    // Depth-first with parts taken largest-first yields lex-descending order.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Partition cycle_type(const Perm& p) {
    Partition out;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        do {
            seen[j] = true;
            j = p[j];
            ++len;
        } while (j != i);
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string partition_label(const Partition& p) {
    std::string out;
    for (int part : p) out += std::to_string(part);
    return out;
}

CharLabel CharLabel::cyclic(int k) {
    CharLabel l;
    l.kind = Kind::Cyclic;
    l.k = k;
    return l;
}

CharLabel CharLabel::dihedral_linear(int k) {
    CharLabel l;
    l.kind = Kind::DihedralLinear;
    l.k = k;
    return l;
}

CharLabel CharLabel::dihedral_rho2() {
    CharLabel l;
    l.kind = Kind::DihedralRho2;
    return l;
}

CharLabel CharLabel::symmetric(Partition parts) {
    CharLabel l;
    l.kind = Kind::Symmetric;
    l.parts = std::move(parts);
    return l;
}

CharLabel CharLabel::product(CharLabel a, CharLabel b) {
    CharLabel l;
    l.kind = Kind::Product;
    l.factors.push_back(std::move(a));
    l.factors.push_back(std::move(b));
    return l;
}

bool CharLabel::operator==(const CharLabel& rhs) const {
    return kind == rhs.kind && k == rhs.k && parts == rhs.parts && factors == rhs.factors;
}

std::string to_string(const CharLabel& label) {
    switch (label.kind) {
        case CharLabel::Kind::Cyclic: return "chi" + std::to_string(label.k);
        case CharLabel::Kind::DihedralLinear: {
            static const char* names[] = {"triv", "sgn_r", "sgn_s", "sgn_rs"};
            return names[label.k];
        }
        case CharLabel::Kind::DihedralRho2: return "rho2";
        case CharLabel::Kind::Symmetric: return partition_label(label.parts);
        case CharLabel::Kind::Product:
            return to_string(label.factors[0]) + "*" + to_string(label.factors[1]);
    }
    return "?";
}

long long CharacterTable::degree(int row) const {
    return values[row][0].rational_part().numerator().to_ll();
}

int CharacterTable::class_of(const Perm& p) const {
    int idx = group.index_of(p);
    if (idx < 0) return -1;
    for (size_t c = 0; c < classes.size(); ++c)
        if (std::binary_search(classes[c].members.begin(), classes[c].members.end(), idx))
            return static_cast<int>(c);
    return -1;
}

int CharacterTable::find_label(const std::string& name) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (to_string(labels[i]) == name) return static_cast<int>(i);
    return -1;
}

namespace {

// MN recursion on beta-sets. Removing a border strip of length m from lambda
// corresponds to replacing a beta number b by b-m (if b-m is free); the
// strip's leg height is the number of beta numbers strictly between them.
long long mn_rec(const Partition& lambda, const Partition& mu,
                 std::map<std::pair<Partition, Partition>, long long>& memo) {
    if (lambda.empty() && mu.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int m = mu[0];
    Partition mu_rest(mu.begin() + 1, mu.end());
    std::vector<int> beta(lambda.size());
    int len = static_cast<int>(lambda.size());
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);

    long long total = 0;
    for (int i = 0; i < len; ++i) {
        int target = beta[i] - m;
        if (target < 0) continue;
        bool free = true;
        int height = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == target) free = false;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (!free) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        Partition next;
        for (int j = 0; j < len; ++j) {
            int part = nb[j] - (len - 1 - j);
            if (part > 0) next.push_back(part);
        }
        long long sub = mn_rec(next, mu_rest, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

int partition_sum(const Partition& p) {
    int s = 0;
    for (int part : p) s += part;
    return s;
}

}  // namespace

long long mn_value(const Partition& lambda, const Partition& mu) {
    if (partition_sum(lambda) != partition_sum(mu))
        throw std::invalid_argument("mn_value: partitions of different sizes");
    // Memo is per call: transparent and safe under concurrent evaluation.
    std::map<std::pair<Partition, Partition>, long long> memo;
    return mn_rec(lambda, mu, memo);
}

long long hook_degree(const Partition& lambda) {
    int n = partition_sum(lambda);
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    Partition conj(lambda.empty() ? 0 : lambda[0], 0);
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) conj[j]++;
    long long hooks = 1;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= lambda[i] - (j + 1) + conj[j] - static_cast<int>(i + 1) + 1;
    if (factorial % hooks != 0) throw std::logic_error("hook_degree: non-integral degree");
    return factorial / hooks;
}

namespace {

CharacterTable cyclic_table(const GroupSpec& spec) {
    CharacterTable t;
    t.spec = spec;
    t.group = build_group(spec);
    t.classes = conjugacy_classes(t.group);
    int n = spec.n;
    for (int k = 0; k < n; ++k) {
        t.labels.push_back(CharLabel::cyclic(k));
        std::vector<CycNum> row;
        for (const ConjClass& cls : t.classes) {
            int power = n == 1 ? 0 : cls.rep[0];  // g^j sends 0 to j
            row.push_back(CycNum::root(n, static_cast<long long>(k) * power));
        }
        t.values.push_back(std::move(row));
    }
    return t;
}

CharacterTable dihedral_table(const GroupSpec& spec) {
    CharacterTable t;
    t.spec = spec;
    t.group = build_group(spec);
    t.classes = conjugacy_classes(t.group);

    // Canonical generators: r = least element of order 4, s = least element
    // outside <r>. Every class rep is r^a s^b; the linear characters are
    // (-1)^(alpha*a + beta*b) and rho2 is the trace of the reflection rep.
    Perm r;
    for (const Perm& p : t.group.elements)
        if (perm_order(p) == 4) {
            r = p;
            break;
        }
    std::vector<Perm> rot{identity_perm(4), r, compose(r, r), compose(r, compose(r, r))};
    auto in_rot = [&](const Perm& p) {
        return std::find(rot.begin(), rot.end(), p) != rot.end();
    };
    Perm s;
    for (const Perm& p : t.group.elements)
        if (!in_rot(p)) {
            s = p;
            break;
        }

    std::vector<int> a_parity, b_flag;
    for (const ConjClass& cls : t.classes) {
        const Perm& h = cls.rep;
        if (in_rot(h)) {
            b_flag.push_back(0);
            a_parity.push_back(perm_order(h) == 4 ? 1 : 0);
        } else {
            b_flag.push_back(1);
            Perm p = compose(h, inverse_perm(s));  // h = r^a s  =>  p = r^a
            a_parity.push_back(perm_order(p) == 4 ? 1 : 0);
        }
    }
    for (int k = 0; k < 4; ++k) {
        int alpha = (k == 1 || k == 3) ? 1 : 0;
        int beta = (k == 2 || k == 3) ? 1 : 0;
        t.labels.push_back(CharLabel::dihedral_linear(k));
        std::vector<CycNum> row;
        for (size_t c = 0; c < t.classes.size(); ++c) {
            int e = alpha * a_parity[c] + beta * b_flag[c];
            row.push_back(CycNum::integer(e % 2 == 0 ? 1 : -1));
        }
        t.values.push_back(std::move(row));
    }
    t.labels.push_back(CharLabel::dihedral_rho2());
    std::vector<CycNum> rho;
    Perm r2 = compose(r, r);
    for (const ConjClass& cls : t.classes) {
        if (cls.rep == identity_perm(4))
            rho.push_back(CycNum::integer(2));
        else if (cls.rep == r2)
            rho.push_back(CycNum::integer(-2));
        else
            rho.push_back(CycNum::zero());
    }
    t.values.push_back(std::move(rho));
    return t;
}

CharacterTable symmetric_table(const GroupSpec& spec) {
    CharacterTable t;
    t.spec = spec;
    t.group = build_group(spec);
    t.classes = conjugacy_classes(t.group);
    std::vector<Partition> types;
    for (const ConjClass& cls : t.classes) types.push_back(cycle_type(cls.rep));
    for (const Partition& lambda : partitions_of(spec.n)) {
        t.labels.push_back(CharLabel::symmetric(lambda));
        std::vector<CycNum> row;
        for (const Partition& mu : types) row.push_back(CycNum::integer(mn_value(lambda, mu)));
        t.values.push_back(std::move(row));
    }
    return t;
}

CharacterTable product_table(const GroupSpec& spec) {
    CharacterTable ta = char_table(spec.factors[0]);
    CharacterTable tb = char_table(spec.factors[1]);
    CharacterTable t;
    t.spec = spec;
    t.group = build_group(spec);
    t.classes = conjugacy_classes(t.group);

    // Locate each product class inside the factor tables by projection.
    std::vector<int> class_a, class_b;
    for (const ConjClass& cls : t.classes) {
        Perm pa(cls.rep.begin(), cls.rep.begin() + ta.group.degree);
        Perm pb;
        for (size_t i = ta.group.degree; i < cls.rep.size(); ++i)
            pb.push_back(static_cast<uint8_t>(cls.rep[i] - ta.group.degree));
        class_a.push_back(ta.class_of(pa));
        class_b.push_back(tb.class_of(pb));
        if (class_a.back() < 0 || class_b.back() < 0)
            throw std::logic_error("product_table: projection failed");
    }
    for (size_t i = 0; i < ta.labels.size(); ++i) {
        for (size_t j = 0; j < tb.labels.size(); ++j) {
            t.labels.push_back(CharLabel::product(ta.labels[i], tb.labels[j]));
            std::vector<CycNum> row;
            for (size_t c = 0; c < t.classes.size(); ++c)
                row.push_back(ta.values[i][class_a[c]] * tb.values[j][class_b[c]]);
            t.values.push_back(std::move(row));
        }
    }
    return t;
}

}  // namespace

CharacterTable char_table(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic: return cyclic_table(spec);
        case GroupSpec::Kind::Dihedral8: return dihedral_table(spec);
        case GroupSpec::Kind::Symmetric: return symmetric_table(spec);
        case GroupSpec::Kind::Product: return product_table(spec);
    }
    throw std::invalid_argument("char_table: bad spec");
}

CycNum central_character(const CharacterTable& table, const CharLabel& phi, const Perm& z) {
    int row = -1;
    for (size_t i = 0; i < table.labels.size(); ++i)
        if (table.labels[i] == phi) {
            row = static_cast<int>(i);
            break;
        }
    if (row < 0) throw std::invalid_argument("central_character: unknown character label");
    for (const Perm& g : table.group.elements)
        if (compose(z, g) != compose(g, z))
            throw std::invalid_argument("central_character: element is not central");
    int cls = table.class_of(z);
    if (cls < 0) throw std::invalid_argument("central_character: element not in group");
    return table.values[row][cls].scaled(Rational(1, table.degree(row)));
}

CycNum central_character(const CharacterTable& table, const std::string& phi, const Perm& z) {
    int row = table.find_label(phi);
    if (row < 0) throw std::invalid_argument("central_character: unknown label '" + phi + "'");
    return central_character(table, table.labels[row], z);
}

OrthogonalityReport verify_orthogonality(const CharacterTable& table) {
    OrthogonalityReport report;
    size_t rows = table.labels.size();
    size_t cols = table.classes.size();
    if (rows != cols) {
        report.ok = false;
        report.violation = "table is not square";
        return report;
    }
    CycNum order = CycNum::integer(table.order());
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = i; j < rows; ++j) {
            CycNum sum;
            for (size_t c = 0; c < cols; ++c) {
                CycNum term = table.values[i][c] * table.values[j][c].conj();
                sum = sum + term.scaled(Rational(table.classes[c].size()));
            }
            CycNum expected = (i == j) ? order : CycNum::zero();
            if (sum != expected) {
                report.ok = false;
                report.violation = "row orthogonality fails for rows " +
                                   to_string(table.labels[i]) + ", " + to_string(table.labels[j]);
                return report;
            }
        }
    }
    for (size_t c = 0; c < cols; ++c) {
        for (size_t d = c; d < cols; ++d) {
            CycNum sum;
            for (size_t i = 0; i < rows; ++i)
                sum = sum + table.values[i][c] * table.values[i][d].conj();
            CycNum expected = (c == d)
                ? CycNum::integer(table.order() / table.classes[c].size())
                : CycNum::zero();
            if (sum != expected) {
                report.ok = false;
                report.violation = "column orthogonality fails for classes " +
                                   cycle_string(table.classes[c].rep) + ", " +
                                   cycle_string(table.classes[d].rep);
                return report;
            }
        }
    }
    return report;
}

}  // namespace cusp
