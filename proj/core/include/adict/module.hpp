#pragma once

#include <map>
#include <optional>

#include "adict/linalg.hpp"
#include "adict/ring.hpp"

namespace adict {

/* Quotient-ring module computations: a module over R = P/J is handled
 * through its free cover over P, with relation columns padded by J-multiples
 * of the cover generators so that every question reduces to the free-ring
 * Buchberger engine. */

struct RModGB {
    int rank = 0;
    int real = 0;                // leading entries of `all` are the real generators
    std::vector<ModElem> all;    // real generators, then ring-relation pads
    ModGB gb;
};

RModGB r_module_gb(const RingSpec& R, int rank, const std::vector<ModElem>& gens,
                   bool track);
ModElem r_nf(const RingSpec& R, const RModGB& G, const ModElem& v);
bool r_member(const RingSpec& R, const RModGB& G, const ModElem& v);
// v as an R-combination of the real generators; nullopt if not a member
std::optional<std::vector<Poly>> r_lift(const RingSpec& R, const RModGB& G,
                                        const ModElem& v);
// generators of the syzygy module of `gens` over R (pad coordinates dropped,
// components normal-formed)
std::vector<ModElem> r_syzygies(const RingSpec& R, int rank,
                                const std::vector<ModElem>& gens);
// drop generators lying in the span of the others (greedy, order-preserving)
std::vector<ModElem> minimalize_gens(const RingSpec& R, int rank,
                                     std::vector<ModElem> gens);

// --- finitely presented graded modules ------------------------------------

struct FPModule {
    RingPtr ring;
    std::vector<long> gen_degs;   // degree of each cover generator
    std::vector<ModElem> rels;    // homogeneous relation columns, NF'd
    std::vector<long> rel_degs;

    int rank() const { return (int)gen_degs.size(); }

    mutable std::shared_ptr<const RModGB> rel_gb_cache;
};

const RModGB& rel_gb(const FPModule& M);

FPModule free_module(RingPtr R, std::vector<long> gen_degs);
// validates homogeneity, normal-forms and prunes zero columns
FPModule make_module(RingPtr R, std::vector<long> gen_degs,
                     std::vector<ModElem> rels);
FPModule zero_module(RingPtr R);
bool is_zero_module(const FPModule& M);
bool module_equal(const FPModule& A, const FPModule& B);  // same presentation

// M(k): degree-d piece becomes the old degree-(k+d) piece
FPModule twist(const FPModule& M, long k);

// the degree of a homogeneous cover element; nullopt for 0; throws if mixed
std::optional<long> elem_degree(const FPModule& M, const ModElem& v);

struct DirectSum {
    FPModule sum;
    std::vector<int> offsets;  // generator offset of each block
};
DirectSum direct_sum(RingPtr R, const std::vector<const FPModule*>& blocks);
// re-index a block element into the sum / extract one block's coordinates
ModElem ds_inject(const DirectSum& S, int block, const ModElem& v);
ModElem ds_project(const DirectSum& S, int block, int block_rank, const ModElem& v);

// --- module maps ----------------------------------------------------------

struct ModuleMap {
    FPModule src, dst;
    std::vector<ModElem> cols;  // image of each src generator, dst cover coords
};

ModuleMap make_map(FPModule src, FPModule dst, std::vector<ModElem> cols,
                   bool certify = true);
// well-definedness: columns homogeneous of the generator degrees, relations
// of src sent into the relation span of dst
void certify_map(const ModuleMap& f);
ModuleMap identity_map(const FPModule& M);
ModuleMap zero_map(FPModule src, FPModule dst);
// multiplication by a homogeneous p : M(k) -> M(k - deg p) twists covered by
// explicit src/dst (must share the underlying module shape)
ModuleMap mult_map(const FPModule& src, const FPModule& dst, const Poly& p);
ModElem map_apply(const ModuleMap& f, const ModElem& v);
ModuleMap map_compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap map_add(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_scale(const Scalar& c, const ModuleMap& f);
ModuleMap map_twist(const ModuleMap& f, long k);
bool map_is_zero(const ModuleMap& f);  // zero modulo dst relations

struct Submodule {
    FPModule sub;
    ModuleMap incl;  // sub -> ambient
};
Submodule kernel(const ModuleMap& f);
struct Quotient {
    FPModule quot;
    ModuleMap proj;  // ambient -> quot
};
Quotient cokernel(const ModuleMap& f);

// --- free resolutions -----------------------------------------------------

struct Resolution {
    // F[0] = cover of M, F[k] at cohomological index -k; d[k]: F[k+1] -> F[k]
    std::vector<FPModule> F;
    std::vector<ModuleMap> d;
    ModuleMap aug;  // F[0] -> M
    bool complete = false;  // true when the last kernel vanished
};
Resolution free_resolution(const FPModule& M, int length);

// --- graded pieces --------------------------------------------------------

struct PieceBasis {
    long deg = 0;
    std::vector<std::pair<int, Exps>> cover;  // (generator, monomial), ordered
    std::map<std::pair<int, Exps>, int> index;
    Subquotient sq;  // denom: relation span; reps: the piece's basis
    int dim = 0;
};

PieceBasis module_piece(const FPModule& M, long deg);
// coordinates of a normal-formed homogeneous element in the piece's
// representative basis
std::vector<Scalar> elem_coords(const FPModule& M, const PieceBasis& P,
                                const ModElem& v);
// cover-coordinate vector back to a module element
ModElem coords_elem(const FPModule& M, const PieceBasis& P,
                    const std::vector<Scalar>& v);
// rep index r of P -> its cover vector -> module element
ModElem piece_rep_elem(const FPModule& M, const PieceBasis& P, int r);
Mat piece_matrix(const ModuleMap& f, const PieceBasis& Psrc, const PieceBasis& Pdst);
std::vector<long> graded_dims(const FPModule& M, long lo, long hi);

}  // namespace adict
