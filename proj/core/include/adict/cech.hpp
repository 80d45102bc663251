#pragma once

#include "adict/koszul.hpp"

namespace adict {

/* The literal alternating localization complex on an element sequence: one
 * term per subset of the entries, over the base ring with the product of the
 * chosen entries inverted.  Inverting 0 (or anything that forces 1 = 0)
 * collapses a term to the zero ring, which is how a zero entry "omits" its
 * localization arrow.  This complex is an independent cross-check for the
 * stable Koszul tower; its cohomology is evaluated degreewise whenever every
 * graded piece involved is finite, and in closed form for distinct-variable
 * sequences over a free polynomial ring. */

struct CechTerm {
    std::vector<int> subset;  // ascending entry positions inverted here
    RingPtr ring;
    RingHom from_base;
};

struct CechArrow {
    int p;         // source level |subset|
    int src, dst;  // positions within level p and level p+1
    int sign;      // alternating: (-1)^(entries of src before the new one)
    RingHom map;   // certified; sends the old inverse to a_i * new inverse
};

struct CechComplex {
    ElemSeq a;
    std::vector<std::vector<CechTerm>> level;  // level[p]: size-p subsets, lex
    std::vector<CechArrow> arrows;

    int n() const { return (int)level.size() - 1; }
};

CechComplex cech_complex(const ElemSeq& a);

// matrix of a ring hom on one graded piece, monomial basis to monomial basis
Mat hom_piece_matrix(const RingHom& h, long d);

// total graded dimension of one level over a degree window
std::vector<long> cech_level_dims(const CechComplex& C, int p, long dlo,
                                  long dhi);

// cohomology of the alternating complex by degreewise linear algebra; every
// graded piece touched must be finite (ResourceExhausted otherwise)
std::vector<long> cech_piece_h_dims(const CechComplex& C, int i, long dlo,
                                    long dhi);

// closed form for a sequence of distinct variables over a free polynomial
// ring: cohomology is concentrated in the top index, where the degree-d
// dimension equals the base ring's dimension in degree -d - (total weight of
// the inverted variables); anything outside that domain is rejected
std::vector<long> cech_h_dims(const ElemSeq& a, int i, long dlo, long dhi);

}  // namespace adict
