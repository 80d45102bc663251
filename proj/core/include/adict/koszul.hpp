#pragma once

#include "adict/tower.hpp"

namespace adict {

/* Finite Koszul complexes, stable Koszul towers, and telescopes for a finite
 * sequence of homogeneous ring elements, together with the canonical
 * comparison maps between them.  Every multi-element complex is the tensor
 * product of its single-element factors in input order, seeded with the ring
 * itself so each partial product carries an explicit block layout. */

struct ElemSeq {
    RingPtr ring;
    std::vector<Poly> elems;
    std::vector<long> degs;  // degree of each entry; 0 for the zero element
    bool ungraded = false;   // set when a nonzero entry has degree 0

    int n() const { return (int)elems.size(); }
};

// validates: nonempty, each entry homogeneous.  Degree-0 entries (units
// included) are legal and set the ungraded flag; the ideal they generate may
// be the unit ideal, in which case every construction below is acyclic.
ElemSeq make_sequence(RingPtr R, std::vector<Poly> a);
ElemSeq parse_sequence(const RingPtr& R, const std::vector<std::string>& texts);

// all products of t entries (the generators of the t-th power of the ideal)
std::vector<Poly> power_products(const ElemSeq& a, int t);
// A / (a)^t as a cyclic module
FPModule quotient_by_power(const ElemSeq& a, int t);

// the ring as a one-term complex in index 0
ComplexPtr unit_complex(const RingPtr& R);

/* Left-associated tensor product of a list of complexes with every partial
 * product retained, so chain maps can be transported factor by factor.  All
 * factors but the last must be free-termed. */
struct TensorFamily {
    ComplexPtr seed;                    // the unit complex
    std::vector<ComplexPtr> factors;
    std::vector<BlockComplex> partial;  // partial[k] = seed (x) factors[0..k]

    const BlockComplex& total() const { return partial.back(); }
    ComplexPtr cx() const { return partial.back().cx; }
};
TensorFamily tensor_family(const RingPtr& R, std::vector<ComplexPtr> factors);
// the tensor product of componentwise chain maps fs[k]: A.factors[k] -> B.factors[k]
ChainMap tensor_family_map(const TensorFamily& A, const TensorFamily& B,
                           const std::vector<ChainMap>& fs);

// finite Koszul cochain complex on a, indices 0..n; entry a_i contributes
// the factor [A -> A(deg a_i)] with differential a_i (zero map for a_i = 0)
ComplexPtr koszul(const ElemSeq& a);

/* Stable Koszul tower: stage t is the tensor of [A ->(a_i^t) A(t deg a_i)]
 * over the nonzero entries (a zero entry contributes the ring in index 0),
 * with transitions id (x) ... (x) (id, mult a_i) (x) ... ; the colimit of its
 * cohomology is torsion cohomology along (a). */
struct KoszulTower {
    ElemSeq a;
    std::vector<TensorFamily> stage;  // t = 1..T
    IndSystem sys;

    int T() const { return (int)stage.size(); }
};
KoszulTower stable_koszul_tower(const ElemSeq& a, int T);

/* Telescope on one element, indices 0 and 1, free of rank j+1 on
 * delta_0..delta_j: d(delta_0) = delta_0, d(delta_i) = delta_{i-1} -
 * a delta_i; graded by deg delta_i^(1) = -i w, deg delta_0^(0) = 0,
 * deg delta_i^(0) = -(i-1) w.  Multi-element telescopes tensor the factors;
 * the tower maps are the index-preserving inclusions. */
ComplexPtr telescope(const ElemSeq& a, int j);
struct TelescopeTower {
    ElemSeq a;
    std::vector<TensorFamily> stage;  // j = 1..J
    IndSystem sys;

    int J() const { return (int)stage.size(); }
};
TelescopeTower telescope_tower(const ElemSeq& a, int J);

// stage comparison Tel_j -> stable stage j: index 0 collapses to delta_0's
// coefficient, index 1 sends delta_i to a^{j-i}; certified chain map
ChainMap w_map(const TelescopeTower& tt, const KoszulTower& kt, int j);
// collapse Tel_j -> [A in index 0]: delta_0 -> 1, all other generators -> 0
ChainMap u_map(const TelescopeTower& tt, int j, const ComplexPtr& target);

}  // namespace adict
