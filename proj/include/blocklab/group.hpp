#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocklab/numtheory.hpp"

namespace blocklab {

// A permutation of 0..d-1 given by its image list.
using Perm = std::vector<int>;

// A finite group on indices 0..n-1 with a full composition table. Immutable
// after construction; safe to share read-only across threads.
class Group {
public:
    static constexpr int kDefaultElementCap = 20000;

    // Validates the group axioms: closure (range check), two-sided identity,
    // inverses, associativity (exhaustive for n <= 256, seeded spot-check on
    // 4096 triples above that), and Lagrange order divisibility.
    static Group from_cayley(const std::vector<std::vector<int>>& table);

    // Enumerates the closure of the generators in breadth-first word order
    // (generators applied in the given order; ties broken by earlier
    // discovery, i.e. lexicographically smaller words). Element 0 is the
    // identity. Throws TooLarge past the cap.
    static Group from_permutations(const std::vector<Perm>& gens, int cap = kDefaultElementCap);

    int size() const { return n_; }
    int identity() const { return identity_; }
    int op(int a, int b) const { return op_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int order(int g) const { return order_[static_cast<std::size_t>(g)]; }
    int power(int g, i64 e) const;
    i64 exponent() const { return exponent_; }
    int conjugate(int g, int by) const { return op(op(inv(by), g), by); }  // g^by

    const std::vector<Perm>& perm_gens() const { return perm_gens_; }

private:
    Group() = default;
    void finish(bool check_associativity);

    int n_ = 0;
    int identity_ = 0;
    std::vector<int> op_;
    std::vector<int> inv_;
    std::vector<int> order_;
    i64 exponent_ = 1;
    std::vector<Perm> perm_gens_;
};

struct Subgroup {
    const Group* parent = nullptr;
    std::vector<int> members;  // sorted ascending

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;
};

struct ConjugacyClasses {
    // Sorted by (element order of representative, class size, smallest
    // member); the identity is alone in class 0. Representative = smallest
    // member index.
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
    std::vector<int> reps;

    std::size_t count() const { return classes.size(); }
};

ConjugacyClasses conjugacy_classes(const Group& g);

Subgroup centralizer(const Group& g, const std::vector<int>& s);
Subgroup normalizer(const Group& g, const Subgroup& h);
Subgroup center(const Group& g);

// Deterministic Sylow p-subgroup via normalizer growth from the smallest
// p-element. Trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const Group& g, i64 p);

struct PDecomposition {
    int z;  // p-part
    int y;  // p'-part
};

// Unique commuting factorization g = z*y with z a p-element and y p-regular.
PDecomposition p_decompose(const Group& g, int elem, i64 p);

// Elements of order coprime to p (the set G-circle).
std::vector<int> p_regular_elements(const Group& g, i64 p);

// The p-regular elements as a subgroup iff they are closed under op.
std::optional<Subgroup> normal_p_complement(const Group& g, i64 p);

// C_G(P) = N_G(P) for the computed Sylow P.
bool burnside_hypothesis(const Group& g, i64 p);

Subgroup generated_closure(const Group& g, const std::vector<int>& seed);

// O^p(G): the subgroup generated by all p-regular elements.
Subgroup o_p_residual(const Group& g, i64 p);

struct Quotient {
    Group group;
    std::vector<int> projection;  // element -> coset index
};

// Coset group with the induced table. Throws NotNormal.
Quotient quotient(const Group& g, const Subgroup& n);

struct SubgroupGroup {
    Group group;
    std::vector<int> to_parent;  // local index -> parent index
};

SubgroupGroup subgroup_as_group(const Group& g, const Subgroup& h);

bool is_subgroup(const Group& g, const std::vector<int>& members);
bool is_normal(const Group& g, const Subgroup& h);  // exhaustive

// All normal subgroups, found as closed unions of conjugacy classes.
// Exact at catalog scale; throws TooLarge for absurd class counts.
std::vector<Subgroup> normal_subgroups(const Group& g);

}  // namespace blocklab
