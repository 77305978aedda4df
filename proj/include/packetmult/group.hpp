#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace packetmult {

inline constexpr int kDefaultOrderCap = 400;

/// Returns PACKETMULT_ORDER_CAP from the environment, or kDefaultOrderCap.
int order_cap();

/// A finite group as an explicit multiplication table.
///
/// Immutable after construction; all queries are pure, so instances can be
/// shared freely between threads.
class FiniteGroup {
public:
    /// The trivial group.
    FiniteGroup() : order_(1), mul_{0}, identity_(0), inverse_{0}, elem_order_{1} {}

    /// Validates the group axioms by full enumeration (order <= cap) and
    /// throws std::invalid_argument on any violation.
    FiniteGroup(int order, std::vector<int> mul, int identity, std::string label = "",
                int cap = order_cap());

    int order() const { return order_; }
    int identity() const { return identity_; }
    const std::string& label() const { return label_; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    const std::vector<int>& table() const { return mul_; }
    int inverse(int a) const { return inverse_[a]; }
    int element_order(int a) const { return elem_order_[a]; }

    int power(int a, long long k) const;  // a^k, k may be negative

    bool is_abelian() const;
    bool is_cyclic() const;
    long long exponent() const;  // lcm of element orders

    /// Elements commuting with everything, sorted by index.
    std::vector<int> center() const;

    /// Conjugacy classes in canonical order: classes sorted by their minimal
    /// element index, elements sorted within each class.  The identity class
    /// comes first.
    std::vector<std::vector<int>> conjugacy_classes() const;

    /// Subgroup generated by `gens`, as a sorted element list.
    std::vector<int> closure(const std::vector<int>& gens) const;

    std::vector<int> derived_subgroup() const;

    /// Multiset of element orders, as counts indexed by order (index 0 unused).
    std::vector<int> order_statistics() const;

    bool is_subgroup(const std::vector<int>& elems) const;
    bool is_central_subset(const std::vector<int>& elems) const;
    /// If the subgroup is cyclic, returns a generator (the minimal-index
    /// element of maximal order); otherwise nullopt.
    std::optional<int> cyclic_generator(const std::vector<int>& subgroup) const;

    /// Quotient by a normal subgroup.  Cosets are ordered by their minimal
    /// element index; if `projection` is non-null it receives the element ->
    /// coset index map.
    FiniteGroup quotient(const std::vector<int>& normal_subgroup,
                         std::vector<int>* projection = nullptr) const;

    FiniteGroup relabel(std::string label) const;

private:
    int order_;
    std::vector<int> mul_;
    int identity_;
    std::string label_;
    std::vector<int> inverse_;
    std::vector<int> elem_order_;
};

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Declarative group constructions.  `heisenberg(l)` is the exponent-l
/// extraspecial group of order l^3 for odd primes l, and Q8 for l = 2.
struct GroupSpec {
    enum class Kind {
        Cyclic,        // param k: Z/k
        Dihedral,      // param k: order 2k
        Quaternion8,
        Heisenberg,    // param l prime
        Extraspecial,  // param l prime; exponent_squared selects the class
        Product,       // factors
        Table,         // explicit table
    };
    Kind kind = Kind::Cyclic;
    long long param = 1;
    bool exponent_squared = false;
    std::vector<GroupSpec> factors;
    std::shared_ptr<FiniteGroup> table;

    std::string to_string() const;
};

/// Parses the compact grammar: "C6", "cyclic(6)", "Q8", "dihedral(4)",
/// "heisenberg(3)", "extraspecial(3,expl)", "extraspecial(3,expl2)", and
/// products joined with "x", e.g. "C4xC2".
GroupSpec parse_group_spec(const std::string& text);

FiniteGroup build_group(const GroupSpec& spec, int cap = order_cap());

/// Brute-force isomorphism test with order-statistics pruning.
bool isomorphic(const FiniteGroup& g1, const FiniteGroup& g2);

/// Isomorphism of pairs: requires some isomorphism g1 -> g2 carrying the
/// subgroup s1 onto s2 as a set.
bool isomorphic_with_subgroup(const FiniteGroup& g1, const std::vector<int>& s1,
                              const FiniteGroup& g2, const std::vector<int>& s2);

}  // namespace packetmult
