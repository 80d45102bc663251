#pragma once

#include "adict/derived.hpp"

namespace adict {

/* Weak proregularity of a finitely generated ideal: the telescope on any
 * generating sequence, tensored with an injective module, must be acyclic
 * away from index zero.  That condition quantifies over all injectives, so
 * it is never tested directly here.  Instead this layer proves it by
 * structure: a certificate is a finite proof tree whose leaves consume
 * explicitly recorded attestations (noetherian, flat, essentially formally
 * of finite type) and whose inner rules re-run machine checks — generator
 * images, Groebner containment, finite presentation of quotients — every
 * time the tree is built or re-verified.  A separate evidence mode computes
 * telescope towers against user-supplied test modules and reports exactly
 * what it saw, labeled as evidence, never as proof. */

// ---- subjects -------------------------------------------------------------

enum class DescKind { concrete, tensor_product, enlarged, flat_extension };

// facts supplied from outside the engine, recorded verbatim in certificates;
// "base" is the coefficient field for leaves and the named base otherwise
struct Attestations {
    bool noetherian = false;
    bool flat_over_base = false;
    bool eff_type_over_base = false;  // essentially formally of finite type
};

struct PreadicDescriptor;
using DescPtr = std::shared_ptr<const PreadicDescriptor>;

/* A ring presentation with a distinguished finitely generated ideal, plus
 * the construction it arose from.  Every kind carries the presented ring
 * and the ideal's generators; compound kinds also keep their parts so rules
 * can recurse. */
struct PreadicDescriptor {
    DescKind kind;
    RingPtr ring;
    ElemSeq ideal;
    Attestations att;

    DescPtr left, right;  // tensor_product factors
    TensorRing env;       // tensor_product: ring == env.ring
    DescPtr base;         // enlarged / flat_extension
    RingHom ext;          // flat_extension: base ring -> ring
};

DescPtr concrete_ring(RingPtr R, ElemSeq a, Attestations att = {});

/* left (x)_k right with the sum ideal generated by both images.  Flatness
 * and finite-type attestations propagate to the product when both factors
 * carry them; noetherian never propagates (that failure is the reason this
 * layer exists). */
DescPtr tensor_of(const DescPtr& L, const DescPtr& R, std::string name = "");

// same ring, a larger ideal; containment is checked at certification time
DescPtr enlarged(const DescPtr& base, ElemSeq bigger);

/* Push the base ideal forward along a ring map; the attached ideal is the
 * image ideal on generators.  Flatness of the map is taken from `att`, or
 * auto-attested when the map is syntactically a polynomial extension or a
 * single localization of its source. */
DescPtr flat_extension(const DescPtr& base, RingHom ext, Attestations att = {});

// ---- certificates ---------------------------------------------------------

struct SideCheck {
    std::string name;
    std::string detail;
    bool passed = false;
};

struct WPRCertificate;
using CertPtr = std::shared_ptr<const WPRCertificate>;

/* One rule application.  rule is the stable identifier used in serialized
 * trees; premises are fully formed sub-certificates.  attestations lists
 * every outside fact this node consumed, marked user-supplied or auto. */
struct WPRCertificate {
    std::string rule;       // "R1".."R4"
    std::string rule_name;  // "noetherian-ring", "flat-base-change",
                            // "ideal-enlargement", "tensor-of-adic-algebras"
    std::string conclusion;
    DescPtr subject;
    std::vector<CertPtr> premises;
    std::vector<SideCheck> side_checks;
    std::vector<std::string> attestations;

    bool all_checks_passed() const;  // this node and every premise
};

struct CertifyResult {
    CertPtr cert;  // null when no rule applies
    std::string unknown_reason;

    bool ok() const { return cert != nullptr; }
};

/* Deterministic proof search:
 *   R1  a noetherian ring (attested) makes every finitely generated ideal
 *       weakly proregular;
 *   R2  a flat ring map carries a weakly proregular ideal to its image
 *       ideal;
 *   R3  inside a ring whose completion along a certified ideal is
 *       noetherian, any larger finitely generated ideal inherits weak
 *       proregularity;
 *   R4  for a tensor product of two flat algebras over the field, one
 *       essentially formally of finite type and the other certifiable on
 *       its own ideal, the sum ideal is weakly proregular — proved by
 *       expanding into the R2 (extend one factor's ideal across the
 *       product) then R3 (enlarge to the sum ideal) chain, which appears
 *       as the premise tree. */
CertifyResult certify(const DescPtr& d);

// JSON proof tree: {conclusion, rule, rule_name, side_checks, premises,
// attestations} at every node, plus the full subject presentation at the
// root so the tree can be re-verified from the text alone
std::string cert_json(const CertPtr& c);

// rebuild the subject from a serialized tree
DescPtr descriptor_from_json(const std::string& text);

/* Re-verification: reconstruct the subject from the serialized tree, run
 * certify again from scratch, and require the freshly built tree to match
 * rule for rule, conclusion for conclusion, with every machine check
 * passing.  Any edit to the subject, the rules, or the recorded checks
 * makes this fail. */
bool reverify(const std::string& serialized, std::string* why = nullptr);

// ---- evidence mode --------------------------------------------------------

struct EvidenceLine {
    std::string test;  // display name of the test module
    int k = 0;         // cohomological index >= 1
    long deg = 0;
    std::vector<int> dims;  // dim H^k(Tel_j (x) E) per stage j = 1..J
    bool resolved = false;
    int stabilized_at = -1;
    long value = -1;  // stable colimit dimension; -1 unresolved
};

/* What the telescope towers actually did on the supplied modules.  This is
 * labeled evidence because the defining condition ranges over injective
 * modules, which are not finitely presentable here: nonvanishing on an
 * arbitrary test module contradicts nothing, and the report says so. */
struct EvidenceReport {
    std::string label = "EVIDENCE";
    std::string ring;
    std::string sequence;
    int k_max = 0, J = 0;
    long dlo = 0, dhi = 0;
    std::vector<EvidenceLine> lines;
    std::vector<std::string> notes;
    bool all_resolved = false;   // every line settled its tower
    bool all_vanished = false;   // ... and every stable value was zero
};

// throws std::invalid_argument when tests is empty or k_max < 1
EvidenceReport wpr_evidence(const RingPtr& A, const ElemSeq& a,
                            const std::vector<const FPModule*>& tests,
                            int k_max, int J, long dlo, long dhi);

std::string evidence_json(const EvidenceReport& r);
std::string evidence_table(const EvidenceReport& r);

}  // namespace adict
