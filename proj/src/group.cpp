#include "packetmult/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "packetmult/numutil.hpp"

namespace packetmult {

int order_cap() {
    if (const char* env = std::getenv("PACKETMULT_ORDER_CAP")) {
        int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return kDefaultOrderCap;
}

FiniteGroup::FiniteGroup(int order, std::vector<int> mul, int identity, std::string label,
                         int cap)
    : order_(order), mul_(std::move(mul)), identity_(identity), label_(std::move(label)) {
    if (order < 1) throw std::invalid_argument("group order must be >= 1");
    if (order > cap)
        throw std::invalid_argument("group order " + std::to_string(order) +
                                    " exceeds cap " + std::to_string(cap));
    if (mul_.size() != static_cast<size_t>(order) * order)
        throw std::invalid_argument("multiplication table has wrong size");
    for (int v : mul_)
        if (v < 0 || v >= order) throw std::invalid_argument("table entry out of range");
    if (identity < 0 || identity >= order)
        throw std::invalid_argument("identity index out of range");
    for (int a = 0; a < order; ++a)
        if (this->mul(identity, a) != a || this->mul(a, identity) != a)
            throw std::invalid_argument("identity is not two-sided");
    inverse_.assign(order, -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (this->mul(a, b) == identity && this->mul(b, a) == identity) inverse_[a] = b;
    for (int a = 0; a < order; ++a)
        if (inverse_[a] < 0)
            throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
                    throw std::invalid_argument("multiplication is not associative");
    elem_order_.assign(order, 0);
    for (int a = 0; a < order; ++a) {
        int x = a, n = 1;
        while (x != identity_) {
            x = this->mul(x, a);
            ++n;
        }
        elem_order_[a] = n;
    }
}

int FiniteGroup::power(int a, long long k) const {
    int base = a;
    if (k < 0) {
        base = inverse_[a];
        k = -k;
    }
    int result = identity_;
    k %= elem_order_[a];
    for (long long i = 0; i < k; ++i) result = mul(result, base);
    return result;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::is_cyclic() const {
    for (int a = 0; a < order_; ++a)
        if (elem_order_[a] == order_) return true;
    return false;
}

long long FiniteGroup::exponent() const {
    long long e = 1;
    for (int a = 0; a < order_; ++a) e = lcm(e, static_cast<long long>(elem_order_[a]));
    return e;
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> z;
    for (int a = 0; a < order_; ++a) {
        bool central = true;
        for (int b = 0; b < order_ && central; ++b)
            if (mul(a, b) != mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(order_, false);
    for (int a = 0; a < order_; ++a) {
        if (seen[a]) continue;
        std::set<int> orbit;
        for (int g = 0; g < order_; ++g) orbit.insert(mul(mul(g, a), inverse_[g]));
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int x : cls) seen[x] = true;
        classes.push_back(std::move(cls));
    }
    // Elements are scanned in index order, so classes are already sorted by
    // minimal element; the identity class is the class of index `identity_`.
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return classes;
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& gens) const {
    std::set<int> elems{identity_};
    std::vector<int> frontier{identity_};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : gens) {
                int y = mul(x, g);
                if (elems.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

std::vector<int> FiniteGroup::derived_subgroup() const {
    std::vector<int> comms;
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            comms.push_back(mul(mul(a, b), mul(inverse_[a], inverse_[b])));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return closure(comms);
}

std::vector<int> FiniteGroup::order_statistics() const {
    std::vector<int> counts(order_ + 1, 0);
    for (int a = 0; a < order_; ++a) ++counts[elem_order_[a]];
    return counts;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    if (s.size() != elems.size()) return false;
    if (!s.count(identity_)) return false;
    for (int a : elems)
        for (int b : elems)
            if (!s.count(mul(a, b))) return false;
    return true;
}

bool FiniteGroup::is_central_subset(const std::vector<int>& elems) const {
    for (int a : elems)
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<int> FiniteGroup::cyclic_generator(const std::vector<int>& subgroup) const {
    if (!is_subgroup(subgroup)) return std::nullopt;
    int n = static_cast<int>(subgroup.size());
    for (int g : subgroup)
        if (elem_order_[g] == n) return g;  // subgroup is sorted by caller or not; order suffices
    return std::nullopt;
}

FiniteGroup FiniteGroup::quotient(const std::vector<int>& normal_subgroup,
                                  std::vector<int>* projection) const {
    if (!is_subgroup(normal_subgroup))
        throw std::invalid_argument("quotient: not a subgroup");
    std::set<int> h(normal_subgroup.begin(), normal_subgroup.end());
    for (int g = 0; g < order_; ++g)
        for (int x : normal_subgroup)
            if (!h.count(mul(mul(g, x), inverse_[g])))
                throw std::invalid_argument("quotient: subgroup is not normal");
    // Cosets keyed by their minimal element, ordered by that key.
    std::vector<int> coset_min(order_, -1);
    std::vector<int> reps;
    for (int g = 0; g < order_; ++g) {
        if (coset_min[g] >= 0) continue;
        std::vector<int> coset;
        for (int x : normal_subgroup) coset.push_back(mul(g, x));
        int mn = *std::min_element(coset.begin(), coset.end());
        for (int y : coset) coset_min[y] = mn;
        reps.push_back(mn);
    }
    std::sort(reps.begin(), reps.end());
    std::map<int, int> index_of;
    for (size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<int>(i);
    int q = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<size_t>(i) * q + j] = index_of[coset_min[mul(reps[i], reps[j])]];
    if (projection) {
        projection->assign(order_, -1);
        for (int g = 0; g < order_; ++g) (*projection)[g] = index_of[coset_min[g]];
    }
    return FiniteGroup(q, std::move(table), index_of[coset_min[identity_]],
                       label_.empty() ? "" : label_ + "/N");
}

FiniteGroup FiniteGroup::relabel(std::string label) const {
    FiniteGroup g = *this;
    g.label_ = std::move(label);
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int na = a.order(), nb = b.order();
    int n = na * nb;
    std::vector<int> table(static_cast<size_t>(n) * n);
    auto idx = [nb](int i, int j) { return i * nb + j; };
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    table[static_cast<size_t>(idx(i1, j1)) * n + idx(i2, j2)] =
                        idx(a.mul(i1, i2), b.mul(j1, j2));
    std::string label = a.label() + "x" + b.label();
    return FiniteGroup(n, std::move(table), idx(a.identity(), b.identity()), label);
}

namespace {

FiniteGroup make_cyclic(long long k, int cap) {
    if (k < 1) throw std::invalid_argument("cyclic order must be >= 1");
    int n = static_cast<int>(k);
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[static_cast<size_t>(i) * n + j] = (i + j) % n;
    return FiniteGroup(n, std::move(table), 0, "C" + std::to_string(k), cap);
}

FiniteGroup make_dihedral(long long k, int cap) {
    if (k < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
    int n = static_cast<int>(2 * k);
    int r = static_cast<int>(k);
    auto idx = [r](int i, int j) { return i + r * j; };
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int i1 = 0; i1 < r; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < r; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = j1 == 0 ? (i1 + i2) % r : (i1 - i2 + r) % r;
                    int j = (j1 + j2) % 2;
                    table[static_cast<size_t>(idx(i1, j1)) * n + idx(i2, j2)] = idx(i, j);
                }
    return FiniteGroup(n, std::move(table), 0, "dihedral(" + std::to_string(k) + ")", cap);
}

// Elements 0..7 = 1, -1, i, -i, j, -j, k, -k.
FiniteGroup make_quaternion8(int cap) {
    // axis table: row * col -> (axis, sign) for axes 1,i,j,k
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    auto idx = [](int ax, int sg) { return 2 * ax + (sg < 0 ? 1 : 0); };
    std::vector<int> table(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ax1 = a / 2, sg1 = a % 2 ? -1 : 1;
            int ax2 = b / 2, sg2 = b % 2 ? -1 : 1;
            table[static_cast<size_t>(a) * 8 + b] =
                idx(axis[ax1][ax2], sg1 * sg2 * sign[ax1][ax2]);
        }
    return FiniteGroup(8, std::move(table), 0, "Q8", cap);
}

// Exponent-l extraspecial group of order l^3 for odd prime l, as upper
// unitriangular 3x3 matrices over Z/l.
FiniteGroup make_heisenberg_odd(long long l, int cap) {
    int L = static_cast<int>(l);
    int n = L * L * L;
    auto idx = [L](int a, int b, int c) { return (a * L + b) * L + c; };
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a1 = 0; a1 < L; ++a1)
        for (int b1 = 0; b1 < L; ++b1)
            for (int c1 = 0; c1 < L; ++c1)
                for (int a2 = 0; a2 < L; ++a2)
                    for (int b2 = 0; b2 < L; ++b2)
                        for (int c2 = 0; c2 < L; ++c2)
                            table[static_cast<size_t>(idx(a1, b1, c1)) * n + idx(a2, b2, c2)] =
                                idx((a1 + a2) % L, (b1 + b2) % L, (c1 + c2 + a1 * b2) % L);
    return FiniteGroup(n, std::move(table), 0, "heisenberg(" + std::to_string(l) + ")", cap);
}

// Exponent-l^2 extraspecial group for odd prime l:
// <a, b : a^{l^2} = b^l = 1, b a b^{-1} = a^{1+l}>.
FiniteGroup make_extraspecial_expsq_odd(long long l, int cap) {
    int L = static_cast<int>(l);
    int m = L * L;
    int n = m * L;
    auto idx = [L](int i, int j) { return i * L + j; };
    // powers of (1+l) mod l^2
    std::vector<int> tw(L);
    tw[0] = 1;
    for (int j = 1; j < L; ++j) tw[j] = (tw[j - 1] * (1 + L)) % m;
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < L; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < L; ++j2)
                    table[static_cast<size_t>(idx(i1, j1)) * n + idx(i2, j2)] =
                        idx((i1 + i2 * tw[j1]) % m, (j1 + j2) % L);
    return FiniteGroup(n, std::move(table), 0,
                       "extraspecial(" + std::to_string(l) + ",expl2)", cap);
}

}  // namespace

std::string GroupSpec::to_string() const {
    switch (kind) {
        case Kind::Cyclic: return "C" + std::to_string(param);
        case Kind::Dihedral: return "dihedral(" + std::to_string(param) + ")";
        case Kind::Quaternion8: return "Q8";
        case Kind::Heisenberg: return "heisenberg(" + std::to_string(param) + ")";
        case Kind::Extraspecial:
            return "extraspecial(" + std::to_string(param) +
                   (exponent_squared ? ",expl2)" : ",expl)");
        case Kind::Product: {
            std::string s;
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) s += "x";
                s += factors[i].to_string();
            }
            return s;
        }
        case Kind::Table: return table && !table->label().empty() ? table->label() : "table";
    }
    return "?";
}

namespace {

GroupSpec parse_atom(const std::string& atom) {
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("group spec \"" + atom + "\": " + why);
    };
    auto parse_call = [&](const std::string& name) -> std::optional<std::string> {
        if (atom.rfind(name + "(", 0) == 0 && atom.back() == ')')
            return atom.substr(name.size() + 1, atom.size() - name.size() - 2);
        return std::nullopt;
    };
    GroupSpec spec;
    if (atom == "Q8" || atom == "q8" || atom == "quaternion8") {
        spec.kind = GroupSpec::Kind::Quaternion8;
        return spec;
    }
    if (atom.size() >= 2 && (atom[0] == 'C' || atom[0] == 'c') &&
        atom.find_first_not_of("0123456789", 1) == std::string::npos) {
        spec.kind = GroupSpec::Kind::Cyclic;
        spec.param = std::stoll(atom.substr(1));
        return spec;
    }
    if (auto arg = parse_call("cyclic")) {
        spec.kind = GroupSpec::Kind::Cyclic;
        spec.param = std::stoll(*arg);
        return spec;
    }
    if (auto arg = parse_call("dihedral")) {
        spec.kind = GroupSpec::Kind::Dihedral;
        spec.param = std::stoll(*arg);
        return spec;
    }
    if (auto arg = parse_call("heisenberg")) {
        spec.kind = GroupSpec::Kind::Heisenberg;
        spec.param = std::stoll(*arg);
        return spec;
    }
    if (auto arg = parse_call("extraspecial")) {
        auto comma = arg->find(',');
        if (comma == std::string::npos) throw bad("expected extraspecial(l,expl|expl2)");
        spec.kind = GroupSpec::Kind::Extraspecial;
        spec.param = std::stoll(arg->substr(0, comma));
        std::string type = arg->substr(comma + 1);
        if (type == "expl") spec.exponent_squared = false;
        else if (type == "expl2") spec.exponent_squared = true;
        else throw bad("extraspecial type must be expl or expl2");
        return spec;
    }
    throw bad("unrecognized atom");
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    // split on 'x' outside parentheses; an 'x' only separates factors when it
    // follows a complete atom (a digit or a closing parenthesis), so names
    // like "extraspecial" survive
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        if (c == '(') ++depth;
        if (c == ')') --depth;
        bool after_atom = !cur.empty() && (std::isdigit(static_cast<unsigned char>(cur.back())) ||
                                           cur.back() == ')');
        if (c == 'x' && depth == 0 && after_atom) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() == 1) return parse_atom(parts[0]);
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Product;
    for (const auto& part : parts) spec.factors.push_back(parse_atom(part));
    return spec;
}

FiniteGroup build_group(const GroupSpec& spec, int cap) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
            return make_cyclic(spec.param, cap);
        case GroupSpec::Kind::Dihedral:
            return make_dihedral(spec.param, cap);
        case GroupSpec::Kind::Quaternion8:
            return make_quaternion8(cap);
        case GroupSpec::Kind::Heisenberg:
            if (!is_prime(spec.param))
                throw std::invalid_argument("heisenberg parameter must be prime");
            if (spec.param == 2) return make_quaternion8(cap).relabel("heisenberg(2)");
            return make_heisenberg_odd(spec.param, cap);
        case GroupSpec::Kind::Extraspecial:
            if (!is_prime(spec.param))
                throw std::invalid_argument("extraspecial parameter must be prime");
            if (spec.param == 2)
                return spec.exponent_squared
                           ? make_quaternion8(cap)
                           : make_dihedral(4, cap).relabel("extraspecial(2,expl)");
            return spec.exponent_squared ? make_extraspecial_expsq_odd(spec.param, cap)
                                         : make_heisenberg_odd(spec.param, cap);
        case GroupSpec::Kind::Product: {
            if (spec.factors.empty()) throw std::invalid_argument("empty product spec");
            FiniteGroup g = build_group(spec.factors[0], cap);
            for (size_t i = 1; i < spec.factors.size(); ++i)
                g = direct_product(g, build_group(spec.factors[i], cap));
            return g;
        }
        case GroupSpec::Kind::Table:
            if (!spec.table) throw std::invalid_argument("table spec without table");
            return *spec.table;
    }
    throw std::invalid_argument("unknown group spec kind");
}

namespace {

// Greedy minimal generating sequence: repeatedly adjoin the smallest-index
// element not yet generated.
std::vector<int> generating_sequence(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> generated = g.closure({});
    while (static_cast<int>(generated.size()) < g.order()) {
        std::set<int> have(generated.begin(), generated.end());
        for (int a = 0; a < g.order(); ++a)
            if (!have.count(a)) {
                gens.push_back(a);
                break;
            }
        generated = g.closure(gens);
    }
    return gens;
}

// Attempt to extend generator images to a full isomorphism.  Returns the map
// or empty on failure.
std::vector<int> extend_hom(const FiniteGroup& g1, const FiniteGroup& g2,
                            const std::vector<int>& gens, const std::vector<int>& images) {
    std::vector<int> f(g1.order(), -1);
    f[g1.identity()] = g2.identity();
    std::vector<int> queue{g1.identity()};
    size_t head = 0;
    while (head < queue.size()) {
        int x = queue[head++];
        for (size_t i = 0; i < gens.size(); ++i) {
            int y = g1.mul(x, gens[i]);
            int fy = g2.mul(f[x], images[i]);
            if (f[y] == -1) {
                f[y] = fy;
                queue.push_back(y);
            } else if (f[y] != fy) {
                return {};
            }
        }
    }
    if (queue.size() != static_cast<size_t>(g1.order())) return {};
    std::vector<bool> hit(g2.order(), false);
    for (int v : f) {
        if (hit[v]) return {};
        hit[v] = true;
    }
    for (int a = 0; a < g1.order(); ++a)
        for (int b = 0; b < g1.order(); ++b)
            if (f[g1.mul(a, b)] != g2.mul(f[a], f[b])) return {};
    return f;
}

bool search_iso(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<int>& gens,
                std::vector<int>& images, size_t depth,
                const std::vector<int>* s1_sorted, const std::vector<int>* s2_sorted) {
    if (depth == gens.size()) {
        std::vector<int> f = extend_hom(g1, g2, gens, images);
        if (f.empty()) return false;
        if (s1_sorted) {
            std::vector<int> img;
            img.reserve(s1_sorted->size());
            for (int x : *s1_sorted) img.push_back(f[x]);
            std::sort(img.begin(), img.end());
            if (img != *s2_sorted) return false;
        }
        return true;
    }
    std::vector<int> partial1(gens.begin(), gens.begin() + depth + 1);
    for (int cand = 0; cand < g2.order(); ++cand) {
        if (g2.element_order(cand) != g1.element_order(gens[depth])) continue;
        images.push_back(cand);
        // prune: subgroups generated by the prefixes must have equal size
        std::vector<int> sub1 = g1.closure(partial1);
        std::vector<int> sub2 = g2.closure(images);
        if (sub1.size() == sub2.size() &&
            search_iso(g1, g2, gens, images, depth + 1, s1_sorted, s2_sorted))
            return true;
        images.pop_back();
    }
    return false;
}

bool invariants_match(const FiniteGroup& g1, const FiniteGroup& g2) {
    if (g1.order() != g2.order()) return false;
    if (g1.order_statistics() != g2.order_statistics()) return false;
    if (g1.center().size() != g2.center().size()) return false;
    if (g1.derived_subgroup().size() != g2.derived_subgroup().size()) return false;
    auto sizes = [](const FiniteGroup& g) {
        std::vector<size_t> s;
        for (const auto& c : g.conjugacy_classes()) s.push_back(c.size());
        std::sort(s.begin(), s.end());
        return s;
    };
    return sizes(g1) == sizes(g2);
}

}  // namespace

bool isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) {
    if (!invariants_match(g1, g2)) return false;
    std::vector<int> gens = generating_sequence(g1);
    std::vector<int> images;
    return search_iso(g1, g2, gens, images, 0, nullptr, nullptr);
}

bool isomorphic_with_subgroup(const FiniteGroup& g1, const std::vector<int>& s1,
                              const FiniteGroup& g2, const std::vector<int>& s2) {
    if (s1.size() != s2.size()) return false;
    if (!invariants_match(g1, g2)) return false;
    std::vector<int> a(s1), b(s2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    // order multisets of the two subgroups must agree
    auto orders = [](const FiniteGroup& g, const std::vector<int>& s) {
        std::vector<int> o;
        for (int x : s) o.push_back(g.element_order(x));
        std::sort(o.begin(), o.end());
        return o;
    };
    if (orders(g1, a) != orders(g2, b)) return false;
    std::vector<int> gens = generating_sequence(g1);
    std::vector<int> images;
    return search_iso(g1, g2, gens, images, 0, &a, &b);
}

}  // namespace packetmult
