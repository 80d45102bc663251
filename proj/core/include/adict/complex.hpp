#pragma once

#include "adict/module.hpp"

namespace adict {

/* Bounded cochain complexes of finitely presented graded modules.
 * Sign conventions, fixed once for the whole system:
 *   - d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy
 *   - (D f)   = d_Y . f - (-1)^n f . d_X   for f of cohomological degree n
 *   - d_{X[k]} = (-1)^k d_X  with X[k]^i = X^{i+k}
 * Tensor and Hom require the free-termed side to be X (the left/contravariant
 * slot), which covers every construction in the system. */

struct BoundedComplex {
    RingPtr ring;
    int lo = 0;
    std::vector<FPModule> terms;   // terms[k] lives at index lo + k
    std::vector<ModuleMap> diffs;  // diffs[k]: terms[k] -> terms[k+1]

    int hi() const { return lo + (int)terms.size() - 1; }
    bool in_range(int i) const { return i >= lo && i <= hi(); }
    FPModule term_at(int i) const {
        return in_range(i) ? terms[(size_t)(i - lo)] : zero_module(ring);
    }
    bool has_diff(int i) const { return i >= lo && i < hi(); }
    const ModuleMap& diff(int i) const { return diffs[(size_t)(i - lo)]; }
};

using ComplexPtr = std::shared_ptr<const BoundedComplex>;

// certify: shapes line up, differentials well defined, d.d = 0
ComplexPtr make_complex(RingPtr R, int lo, std::vector<FPModule> terms,
                        std::vector<ModuleMap> diffs, bool certify = true);
ComplexPtr single_term(const FPModule& M, int at);
ComplexPtr shift_complex(const ComplexPtr& X, int k);
bool all_terms_free(const BoundedComplex& X);

struct ChainMap {
    ComplexPtr src, dst;
    std::map<int, ModuleMap> comp;  // zero outside

    bool has(int i) const { return comp.count(i) > 0; }
    const ModuleMap& at(int i) const { return comp.at(i); }
};

// certify: each component well defined, and the squares
// f_{i+1} . d_src^i = d_dst^i . f_i commute (missing components are zero)
ChainMap make_chain_map(ComplexPtr src, ComplexPtr dst,
                        std::map<int, ModuleMap> comp, bool certify = true);
ChainMap identity_chain_map(const ComplexPtr& X);
ChainMap compose_chain_maps(const ChainMap& g, const ChainMap& f);  // g after f
// componentwise equality modulo target relations (shapes must agree)
bool chain_map_equal(const ChainMap& f, const ChainMap& g);

/* Block bookkeeping for tensor and Hom.  A term is a direct sum of twisted
 * copies of the other complex's terms, one block per (index p, generator u)
 * of the free side, ordered by p then u. */
struct BlockTerm {
    FPModule sum;
    std::vector<std::pair<int, int>> blocks;  // (p, u)
    std::map<std::pair<int, int>, int> bidx;
    std::vector<FPModule> mods;
    std::vector<int> offsets;
};

struct BlockComplex {
    ComplexPtr cx;
    std::vector<BlockTerm> layout;  // aligned with cx->terms
    const BlockTerm& layout_at(int i) const { return layout[(size_t)(i - cx->lo)]; }
};

// X (x) Y, X free-termed
BlockComplex tensor_complex(const ComplexPtr& X, const ComplexPtr& Y);
// Hom(X, Y), X free-termed
BlockComplex hom_complex(const ComplexPtr& X, const ComplexPtr& Y);

// functorial chain maps on the non-free slot
ChainMap tensor_map_right(const BlockComplex& XY, const BlockComplex& XY2,
                          const ComplexPtr& X, const ChainMap& g);
ChainMap hom_map_right(const BlockComplex& HXY, const BlockComplex& HXY2,
                       const ComplexPtr& X, const ChainMap& g);
// functorial chain maps on the free slot (h between free-termed complexes)
ChainMap tensor_map_left(const BlockComplex& XY, const BlockComplex& X2Y,
                         const ChainMap& h, const ComplexPtr& Y);
// contravariant: h: X -> X2 gives Hom(X2, Y) -> Hom(X, Y)
ChainMap hom_map_left(const BlockComplex& HX2Y, const BlockComplex& HXY,
                      const ChainMap& h, const ComplexPtr& Y);

// --- cohomology, degreewise ------------------------------------------------

struct HPiece {
    int index = 0;
    long deg = 0;
    int dim = 0;
    Subquotient sq;  // ambient: the degree-d piece of the index-i term
    PieceBasis pb;
};

HPiece cohomology_piece(const BoundedComplex& X, int i, long d);
// matrix of H^i(f) in the chosen representative bases
Mat h_induced(const ChainMap& f, int i, long d, const HPiece& S, const HPiece& D);
std::vector<long> h_dims(const BoundedComplex& X, int i, long dlo, long dhi);

// H^i as a presented module: the kernel of d^i modulo the image of d^{i-1}
FPModule cohomology_module(const BoundedComplex& X, int i);

struct QIEntry {
    int index = 0;
    long deg = 0;
    int src_dim = 0;
    int dst_dim = 0;
    bool bijective = false;
};
// H^i(f) bijective for every index, in every degree of [dlo, dhi]
bool quasi_iso(const ChainMap& f, long dlo, long dhi,
               std::vector<QIEntry>* evidence = nullptr);

/* The natural identification Hom(X (x) Y, Z) = Hom(X, Hom(Y, Z)) for
 * free-termed X and Y, built generator-by-generator and certified both as a
 * permutation of the covers and as a chain map. */
struct Adjunction {
    BlockComplex tensor_xy;  // X (x) Y
    BlockComplex lhs;        // Hom(X (x) Y, Z)
    BlockComplex hom_yz;     // Hom(Y, Z)
    BlockComplex rhs;        // Hom(X, Hom(Y, Z))
    ChainMap iso;            // lhs -> rhs
};
Adjunction adjunction(const ComplexPtr& X, const ComplexPtr& Y,
                      const ComplexPtr& Z);

}  // namespace adict
