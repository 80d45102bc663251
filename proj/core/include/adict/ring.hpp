#pragma once

#include <map>
#include <memory>

#include "adict/groebner.hpp"

namespace adict {

/* A ring is presented as k[x_1..x_n]/J with a Z-grading given by integer
 * variable weights; J is stored as its reduced Groebner basis under grevlex.
 * Localization at a homogeneous f adjoins a fresh variable u with the
 * relation u*f - 1 (weight of u = -deg f).  All constructions stay inside
 * this shape, so every ring in the system is concrete and finitely
 * presented over its field. */
struct RingSpec {
    Field F;
    std::vector<std::string> vars;
    std::vector<int> weights;
    std::vector<Poly> gb;  // reduced GB of the relation ideal in k[vars]
    std::string name;

    int nvars() const { return (int)vars.size(); }
    bool is_free() const { return gb.empty(); }
    bool positively_weighted() const;

    mutable std::map<long, std::vector<Exps>> mono_cache;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_poly_ring(const Field& F, std::vector<std::string> vars,
                       std::vector<int> weights, std::string name);

// base with extra relations imposed (given in base's presentation variables)
RingPtr make_quotient(const RingPtr& base, const std::vector<Poly>& rels,
                      std::string name);

// base with homogeneous f inverted; inv_name names the adjoined variable
RingPtr localize_ring(const RingPtr& base, const Poly& f, std::string inv_name,
                      std::string name);

// variable-image homomorphism; apply() substitutes then normal-forms
struct RingHom {
    RingPtr src, dst;
    std::vector<Poly> images;  // one per src presentation variable
    Poly apply(const Poly& p) const;
};

// checks images are homogeneous of the source weights and send relations to 0
RingHom make_hom(RingPtr src, RingPtr dst, std::vector<Poly> images,
                 bool certify = true);

struct TensorRing {
    RingPtr ring;
    RingHom left, right;  // coprojections a -> a (x) 1, b -> 1 (x) b
};

// A (x)_k B; B's variables are renamed with trailing apostrophes as needed
TensorRing tensor_ring(const RingPtr& A, const RingPtr& B, std::string name);

// multiplication map A (x)_k A -> A (requires the tensor square of A)
RingHom mult_hom(const TensorRing& env, const RingPtr& A);

bool ring_equal(const RingSpec& a, const RingSpec& b);   // presentation identity
bool is_zero_ring(const RingSpec& R);                    // relation ideal is (1)

Poly ring_nf(const RingSpec& R, const Poly& p);
Poly ring_mul(const RingSpec& R, const Poly& a, const Poly& b);

// Basis monomials of R in one weighted degree: monomials outside the lead
// ideal of R.gb, ordered by exponent vector (lex in variable order).  The
// enumeration decides finiteness exactly (cone decomposition of the lead
// ideal's complement plus a sign/gcd analysis of the degree equation) and
// throws ResourceExhausted when the piece is infinite-dimensional or
// unreasonably large.
const std::vector<Exps>& std_monomials(const RingSpec& R, long wdeg);

// in-degree dimension of R itself (size of std_monomials)
long ring_piece_dim(const RingSpec& R, long wdeg);

std::string ring_str(const RingSpec& R);  // display form "k[vars]/(rels)"

// --- parsing --------------------------------------------------------------

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p) : std::runtime_error(msg), pos(p) {}
};

// +, -, *, ^, parentheses, integer or p/q coefficients, juxtaposition as
// multiplication; names must appear in vars
Poly parse_poly(const Field& F, const std::vector<std::string>& vars,
                const std::string& text);
Poly parse_poly(const RingSpec& R, const std::string& text);  // NF'd result

}  // namespace adict
