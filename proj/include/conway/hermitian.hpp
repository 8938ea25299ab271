#pragma once

#include <array>
#include <string>
#include <vector>

#include "conway/bigint.hpp"
#include "conway/rings.hpp"

namespace conway {

// H(x, y) = a x xbar + beta xbar y + betabar x ybar + c y ybar with beta = gamma / pi,
// pi = 1 + i (Gauss) or 1 - omega (Eisenstein).
struct BHF {
    Ring ring = Ring::Gauss;
    BigInt a = 0, c = 0;
    RingElement gamma{Ring::Gauss, 0, 0};

    BHF() = default;
    BHF(Ring r, BigInt a_, RingElement gamma_, BigInt c_);
    std::string str() const;
};

RingElement different_generator(Ring r);

BigInt evaluate(const BHF& h, const RingElement& x, const RingElement& y);
BigInt evaluate(const BHF& h, const RVec& v);
// 4 (beta betabar - a c) over Gauss, 3 (beta betabar - a c) over Eisenstein.
BigInt discriminant(const BHF& h);

// Pairwise unimodular over the ring.
bool is_superbasis(const RVec& p, const RVec& q, const RVec& r);
// Lax representative: least image under the unit group.
RVec lax(const RVec& v);

// Opposite pairs (first[k], second[k]); every choice of one vector per pair is a superbasis.
struct Cubasis {
    std::array<RVec, 3> first, second;
};
struct Tetrabasis {
    std::array<RVec, 4> v;
};

// Candidate partner vectors: coordinates of norm <= 4, one per lax class, in scan order.
std::vector<RVec> candidate_vectors(Ring r);
bool is_cubasis(const Cubasis& c);
bool is_tetrabasis(const Tetrabasis& t);
Cubasis find_cubasis(const std::array<RVec, 3>& seed);
std::vector<Cubasis> all_cubases(const std::array<RVec, 3>& seed);
Tetrabasis find_tetrabasis(const std::array<RVec, 3>& seed);
std::vector<Tetrabasis> all_tetrabases(const std::array<RVec, 3>& seed);
std::array<RVec, 3> standard_seed(Ring r);

enum class CubePattern { Uniform, I, II, III, IV, MixedZero };
const char* cube_pattern_name(CubePattern p);

struct CubeValues {
    BigInt a, b, c, u, v, w;  // a opposite u, b opposite v, c opposite w
    BigInt z;
    CubePattern pattern = CubePattern::Uniform;
};

CubePattern classify_cube(const CubeValues& cv);
// Asserts a + u = b + v = c + w and z^2 - 2au - 2bv - 2cw = D (invariant-violation otherwise).
CubeValues cube_values(const BHF& h, const Cubasis& cub);

struct HermitianMinimum {
    BigInt mu;
    RVec witness;
    BigInt delta;
    bool bound_ok = false;  // 6 mu^2 <= D
};

// Least nonzero |H| over nonzero vectors with all four coordinates in [-box, box].
HermitianMinimum empirical_minimum(const BHF& h, long box);

}  // namespace conway
