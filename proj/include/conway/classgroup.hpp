#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conway/bqf.hpp"
#include "conway/diform.hpp"

namespace conway {

// Classes of primitive forms of discriminant D (positive-definite ones when D < 0,
// narrow classes when D > 0). Representatives are canonical (see canonical_form).
struct ClassGroupTable {
    BigInt delta;
    std::vector<BQF> classes;
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of classes[i] * classes[j]
    std::size_t identity = 0;
};

// D < 0: the reduced form. D > 0: the least form of the reduced cycle.
BQF canonical_form(const BQF& q);
BQF principal_form(const BigInt& delta);
void check_discriminant(const BigInt& delta);

// Classes without the composition table.
ClassGroupTable enumerate_classes(const BigInt& delta);
// Classes and full composition table.
ClassGroupTable class_group(const BigInt& delta);
std::size_t class_index(const ClassGroupTable& t, const BQF& q);

// Dirichlet composition; result canonical.
BQF compose(const BQF& f, const BQF& g);
std::size_t compose(const ClassGroupTable& t, std::size_t i, std::size_t j);
BQF inverse_form(const BQF& q);

struct GroupAxioms {
    bool identity = false, inverses = false, associative = false, commutative = false;
    bool ok() const { return identity && inverses && associative && commutative; }
};
GroupAxioms check_group_axioms(const ClassGroupTable& t);

// sigma | D and D / sigma = 0 or sigma mod 4.
bool is_diform_discriminant(int sigma, const BigInt& delta);
BQF ambiguous_form(int sigma, const BigInt& delta);

// Vectors with |x|, |y| <= bound; default bound 2 (1 + sqrt|D|).
BigInt representation_bound(const BigInt& delta);
bool represents(const BQF& q, const BigInt& n, const BigInt& bound);
// Whether the class of q represents n: the bounded scan runs over every reduced form of the
// class (the whole cycle when D > 0), since one representative alone can need long vectors.
bool class_represents(const BQF& q, const BigInt& n);

struct RedBlueReport {
    BigInt delta;
    BQF red, blue, ambiguous;              // canonical representatives
    std::size_t red_index = 0, blue_index = 0, ambiguous_index = 0;
    bool holds = false;                    // [red] = [A] [blue]
};

// Requires a, b sigma, c pairwise coprime and a nondegenerate diform.
RedBlueReport verify_red_blue(const BQD& q);

// A diform whose red and blue restrictions lie in the classes of q1 and q2;
// requires [q1] = [A] [q2]. Searches |b| <= b_bound over all factorizations a c.
std::optional<BQD> red_blue_converse(int sigma, const BQF& q1, const BQF& q2, long b_bound = 40);

}  // namespace conway
