#pragma once

#include <memory>
#include <string>
#include <vector>

#include "blocklab/cyclotomic.hpp"
#include "blocklab/group.hpp"

namespace blocklab {

// A group together with its conjugacy class data and the derived maps that
// character-theoretic code needs. Built once per group and shared.
struct GroupCtx {
    Group group;
    ConjugacyClasses classes;
    std::string id;
    std::vector<int> inverse_class;              // class index of inverses
    std::vector<std::vector<int>> power_class;   // [k][t] = class of rep_k^t, t < order(rep_k)
};

std::shared_ptr<const GroupCtx> make_group_ctx(Group group, std::string id);

class ClassFunction {
public:
    ClassFunction(std::shared_ptr<const GroupCtx> ctx, std::vector<Cyclotomic> values);

    const std::shared_ptr<const GroupCtx>& ctx() const { return ctx_; }
    std::size_t class_count() const { return values_.size(); }
    const Cyclotomic& on_class(std::size_t k) const { return values_[k]; }
    const Cyclotomic& at_element(int g) const;
    const std::vector<Cyclotomic>& values() const { return values_; }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.ctx_ == b.ctx_ && a.values_ == b.values_;
    }

private:
    std::shared_ptr<const GroupCtx> ctx_;
    std::vector<Cyclotomic> values_;
};

// A character is a class function whose value at the identity class is its
// degree, a positive rational integer.
class Character : public ClassFunction {
public:
    Character(std::shared_ptr<const GroupCtx> ctx, std::vector<Cyclotomic> values);
    Int degree() const;
};

struct CharacterTable {
    std::shared_ptr<const GroupCtx> ctx;
    std::vector<Character> irreducibles;  // sorted by (degree, value vector)
    i64 modulus = 0;                      // Dixon prime q
};

// a[i][j][k] = #{(x, y) in K_i x K_j : x*y = rep(K_k)}.
std::vector<std::vector<std::vector<i64>>> class_multiplication_coefficients(const GroupCtx& ctx);

// Dixon's method: splits the class matrices over F_q (q = 1 mod exp(G),
// q > 2 sqrt(|G|)), lifts eigenvalue data to exact cyclotomic values, and
// verifies both orthogonality relations before returning. The seed drives
// the eigenspace-splitting combinations; the returned table is canonical and
// does not depend on it.
CharacterTable character_table(std::shared_ptr<const GroupCtx> ctx, u64 seed = kDefaultSeed);

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

Character trivial_character(std::shared_ptr<const GroupCtx> ctx);
int trivial_character_index(const CharacterTable& table);

// Exactness re-checks; also run internally by character_table.
bool check_row_orthogonality(const CharacterTable& table);
bool check_column_orthogonality(const CharacterTable& table);

struct SubgroupCtx {
    std::shared_ptr<const GroupCtx> ctx;  // the subgroup as its own group
    std::vector<int> to_parent;           // local element -> parent element
};

SubgroupCtx subgroup_ctx(const std::shared_ptr<const GroupCtx>& parent, const Subgroup& h);

struct QuotientCtx {
    std::shared_ptr<const GroupCtx> ctx;  // the quotient group
    std::vector<int> projection;          // parent element -> quotient element
};

QuotientCtx quotient_ctx(const std::shared_ptr<const GroupCtx>& parent, const Subgroup& n);

// Restriction to a subgroup (re-evaluated on the subgroup's classes).
ClassFunction restrict_to(const ClassFunction& chi, const SubgroupCtx& sub);
ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h);

// Pullback through the quotient projection.
ClassFunction inflate(const ClassFunction& chibar, const QuotientCtx& quo,
                      const std::shared_ptr<const GroupCtx>& parent);

// kernel(chi) = {g : chi(g) = chi(1)}; checked to be a normal subgroup.
Subgroup kernel(const ClassFunction& chi);

}  // namespace blocklab
