#include "cusp/grp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cusp {

Perm identity_perm(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& f, const Perm& g) {
    if (f.size() != g.size()) throw std::invalid_argument("compose: degree mismatch");
    Perm out(f.size());
    for (size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
    return out;
}

Perm inverse_perm(const Perm& p) {
    Perm out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<uint8_t>(i);
    return out;
}

int perm_order(const Perm& p) {
    int order = 1;
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
        order = std::lcm(order, len);
    }
    return order;
}

std::string cycle_string(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) {
            seen[i] = true;
            continue;
        }
        out += "(";
        size_t j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(j);
            seen[j] = true;
            j = p[j];
            first = false;
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "e" : out;
}

GroupSpec GroupSpec::cyclic(int n) {
    GroupSpec s;
    s.kind = Kind::Cyclic;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::dihedral8() {
    GroupSpec s;
    s.kind = Kind::Dihedral8;
    s.n = 8;
    return s;
}

GroupSpec GroupSpec::symmetric(int n) {
    GroupSpec s;
    s.kind = Kind::Symmetric;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::product(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = Kind::Product;
    s.factors.push_back(std::move(a));
    s.factors.push_back(std::move(b));
    return s;
}

long long GroupSpec::order() const {
    switch (kind) {
        case Kind::Cyclic: return n;
        case Kind::Dihedral8: return 8;
        case Kind::Symmetric: {
            long long f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        }
        case Kind::Product: return factors[0].order() * factors[1].order();
    }
    return 0;
}

bool GroupSpec::operator==(const GroupSpec& rhs) const {
    return kind == rhs.kind && n == rhs.n && factors == rhs.factors;
}

std::string to_string(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic: return "Z" + std::to_string(spec.n);
        case GroupSpec::Kind::Dihedral8: return "D8";
        case GroupSpec::Kind::Symmetric: return "S" + std::to_string(spec.n);
        case GroupSpec::Kind::Product:
            return to_string(spec.factors[0]) + "x" + to_string(spec.factors[1]);
    }
    return "?";
}

namespace {

GroupSpec parse_atom(const std::string& text) {
    if (text == "D8") return GroupSpec::dihedral8();
    if (text.size() >= 2 && (text[0] == 'Z' || text[0] == 'S')) {
        for (size_t i = 1; i < text.size(); ++i)
            if (text[i] < '0' || text[i] > '9')
                throw std::invalid_argument("parse_group_spec: bad name '" + text + "'");
        int n = std::stoi(text.substr(1));
        return text[0] == 'Z' ? GroupSpec::cyclic(n) : GroupSpec::symmetric(n);
    }
    throw std::invalid_argument("parse_group_spec: bad name '" + text + "'");
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    size_t x = text.find('x');
    if (x == std::string::npos) return parse_atom(text);
    std::string left = text.substr(0, x);
    std::string right = text.substr(x + 1);
    if (right.find('x') != std::string::npos)
        throw std::invalid_argument("parse_group_spec: products nest at most once");
    return GroupSpec::product(parse_atom(left), parse_atom(right));
}

int FiniteGroup::identity_index() const {
    return 0;
}

int FiniteGroup::index_of(const Perm& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) return -1;
    return static_cast<int>(it - elements.begin());
}

namespace {

void validate_spec(const GroupSpec& spec, int depth) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
            if (spec.n < 1 || spec.n > 60)
                throw std::invalid_argument("build_group: cyclic order out of catalog (1..60)");
            break;
        case GroupSpec::Kind::Dihedral8:
            break;
        case GroupSpec::Kind::Symmetric:
            if (spec.n < 1 || spec.n > 6)
                throw std::invalid_argument("build_group: symmetric degree out of catalog (1..6)");
            break;
        case GroupSpec::Kind::Product:
            if (depth >= 1)
                throw std::invalid_argument("build_group: product nesting depth exceeds 2");
            validate_spec(spec.factors[0], depth + 1);
            validate_spec(spec.factors[1], depth + 1);
            break;
    }
    if (spec.order() > 720) throw std::invalid_argument("build_group: order exceeds 720");
}

std::vector<Perm> closure(int degree, const std::vector<Perm>& generators) {
    std::set<Perm> seen;
    std::vector<Perm> frontier{identity_perm(degree)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier) {
            for (const Perm& g : generators) {
                Perm q = compose(p, g);
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec) {
    validate_spec(spec, 0);
    FiniteGroup group;
    group.spec = spec;
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic: {
            group.degree = spec.n;
            Perm g(spec.n);
            for (int i = 0; i < spec.n; ++i) g[i] = static_cast<uint8_t>((i + 1) % spec.n);
            group.elements = closure(spec.n, {g});
            break;
        }
        case GroupSpec::Kind::Dihedral8: {
            group.degree = 4;
            Perm r{1, 2, 3, 0};
            Perm s{0, 3, 2, 1};
            group.elements = closure(4, {r, s});
            break;
        }
        case GroupSpec::Kind::Symmetric: {
            group.degree = spec.n;
            Perm p = identity_perm(spec.n);
            do {
                group.elements.push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
            break;
        }
        case GroupSpec::Kind::Product: {
            FiniteGroup a = build_group(spec.factors[0]);
            FiniteGroup b = build_group(spec.factors[1]);
            group.degree = a.degree + b.degree;
            for (const Perm& pa : a.elements) {
                for (const Perm& pb : b.elements) {
                    Perm p(group.degree);
                    for (int i = 0; i < a.degree; ++i) p[i] = pa[i];
                    for (int i = 0; i < b.degree; ++i)
                        p[a.degree + i] = static_cast<uint8_t>(a.degree + pb[i]);
                    group.elements.push_back(std::move(p));
                }
            }
            std::sort(group.elements.begin(), group.elements.end());
            break;
        }
    }
    std::sort(group.elements.begin(), group.elements.end());
    if (group.order() != spec.order())
        throw std::logic_error("build_group: realized order mismatch");
    if (group.elements[0] != identity_perm(group.degree))
        throw std::logic_error("build_group: identity not least element");
    return group;
}

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& group) {
    std::vector<ConjClass> classes;
    std::vector<bool> assigned(group.elements.size(), false);
    for (size_t i = 0; i < group.elements.size(); ++i) {
        if (assigned[i]) continue;
        ConjClass cls;
        std::set<int> members;
        for (const Perm& h : group.elements) {
            Perm conj = compose(compose(h, group.elements[i]), inverse_perm(h));
            int idx = group.index_of(conj);
            if (idx < 0) throw std::logic_error("conjugacy_classes: group not closed");
            members.insert(idx);
        }
        for (int idx : members) {
            assigned[idx] = true;
            cls.members.push_back(idx);
        }
        cls.rep = group.elements[cls.members.front()];
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<Perm> center(const FiniteGroup& group) {
    std::vector<Perm> out;
    for (const Perm& z : group.elements) {
        bool central = true;
        for (const Perm& g : group.elements) {
            if (compose(z, g) != compose(g, z)) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(z);
    }
    return out;
}

FiniteGroup centralizer(const FiniteGroup& group, const Perm& g) {
    if (!group.contains(g)) throw std::invalid_argument("centralizer: element not in group");
    FiniteGroup sub;
    sub.degree = group.degree;
    for (const Perm& h : group.elements)
        if (compose(h, g) == compose(g, h)) sub.elements.push_back(h);
    return sub;
}

namespace {

struct Fingerprint {
    long long order;
    bool abelian;
    long long center_size;
    std::map<int, int> element_orders;

    bool operator==(const Fingerprint& rhs) const {
        return order == rhs.order && abelian == rhs.abelian &&
               center_size == rhs.center_size && element_orders == rhs.element_orders;
    }
};

Fingerprint fingerprint(const FiniteGroup& group) {
    Fingerprint fp;
    fp.order = group.order();
    fp.center_size = static_cast<long long>(center(group).size());
    fp.abelian = fp.center_size == fp.order;
    for (const Perm& p : group.elements) fp.element_orders[perm_order(p)]++;
    return fp;
}

}  // namespace

const std::vector<GroupSpec>& recognition_catalog() {
    static const std::vector<GroupSpec> catalog = {
        GroupSpec::cyclic(1),
        GroupSpec::cyclic(2),
        GroupSpec::cyclic(3),
        GroupSpec::cyclic(4),
        GroupSpec::cyclic(5),
        GroupSpec::cyclic(6),
        GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(2)),
        GroupSpec::symmetric(3),
        GroupSpec::dihedral8(),
        GroupSpec::product(GroupSpec::symmetric(3), GroupSpec::cyclic(2)),
        GroupSpec::symmetric(4),
        GroupSpec::symmetric(5),
    };
    return catalog;
}

GroupSpec recognize(const FiniteGroup& group) {
    if (group.order() > 120)
        throw std::runtime_error("recognize: order " + std::to_string(group.order()) +
                                 " exceeds the catalog bound 120");
    static const std::vector<std::pair<Fingerprint, GroupSpec>> table = [] {
        std::vector<std::pair<Fingerprint, GroupSpec>> t;
        for (const GroupSpec& spec : recognition_catalog())
            t.emplace_back(fingerprint(build_group(spec)), spec);
        return t;
    }();
    Fingerprint fp = fingerprint(group);
    const GroupSpec* match = nullptr;
    for (const auto& [catalog_fp, spec] : table) {
        if (catalog_fp == fp) {
            if (match) throw std::runtime_error("recognize: ambiguous fingerprint");
            match = &spec;
        }
    }
    if (!match)
        throw std::runtime_error("recognize: unrecognized group of order " +
                                 std::to_string(group.order()));
    return *match;
}

}  // namespace cusp
