#include "adict/wpr.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

namespace adict {

namespace {

std::string gens_str(const ElemSeq& a) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < a.n(); ++i) {
        if (i) os << ", ";
        os << poly_str(a.ring->F, a.elems[i], a.ring->vars);
    }
    os << ")";
    return os.str();
}

// Conclusions must stand alone: spell out the presentation, not the label,
// so re-certifying an altered subject can never reproduce the same statement.
std::string wpr_conclusion(const PreadicDescriptor& d) {
    RingSpec anon = *d.ring;
    anon.name.clear();
    return "the ideal " + gens_str(d.ideal) + " in " + ring_str(anon) +
           " is weakly proregular";
}

std::shared_ptr<PreadicDescriptor> blank(DescKind k, RingPtr R, ElemSeq a,
                                         Attestations att) {
    auto d = std::make_shared<PreadicDescriptor>();
    d->kind = k;
    d->ring = std::move(R);
    d->ideal = std::move(a);
    d->att = att;
    return d;
}

// running log for one rule application
struct CheckLog {
    std::vector<SideCheck> checks;
    std::vector<std::string> atts;
    bool ok = true;

    void check(std::string name, std::string detail, bool passed) {
        ok = ok && passed;
        checks.push_back({std::move(name), std::move(detail), passed});
    }
    void attest(std::string s) { atts.push_back(std::move(s)); }
};

CertifyResult unknown(std::string why) { return {nullptr, std::move(why)}; }

// canonical form of a generating sequence, so serialized text re-parses to
// the identical subject
ElemSeq nf_sequence(const RingPtr& R, const std::vector<Poly>& gens) {
    std::vector<Poly> nf;
    nf.reserve(gens.size());
    for (const Poly& g : gens) nf.push_back(ring_nf(*R, g));
    return make_sequence(R, std::move(nf));
}

CertifyResult done(std::string rule, std::string rule_name, const DescPtr& d,
                   std::vector<CertPtr> premises, CheckLog lg) {
    auto c = std::make_shared<WPRCertificate>();
    c->rule = std::move(rule);
    c->rule_name = std::move(rule_name);
    c->conclusion = wpr_conclusion(*d);
    c->subject = d;
    c->premises = std::move(premises);
    c->side_checks = std::move(lg.checks);
    c->attestations = std::move(lg.atts);
    if (!lg.ok)
        return unknown("side check failed under rule " + c->rule + " for " +
                       c->conclusion);
    return {c, ""};
}

/* A ring map is syntactically flat when every source variable maps to a
 * distinct target variable of the same weight and the target relations are
 * exactly the mapped source relations — a polynomial extension — possibly
 * plus one inverse relation u*f - 1 in one extra variable: a localization. */
bool syntactic_flat(const RingHom& ext, std::string* reason) {
    const RingSpec& S = *ext.src;
    const RingSpec& D = *ext.dst;
    std::vector<char> used(D.nvars(), 0);
    for (int i = 0; i < S.nvars(); ++i) {
        const Poly& p = ext.images[i];
        if (p.t.size() != 1 || !is_one(p.t[0].c)) return false;
        int var = -1, tot = 0;
        for (int j = 0; j < D.nvars(); ++j) {
            tot += p.t[0].exp[j];
            if (p.t[0].exp[j] >= 1) var = j;
        }
        if (tot != 1 || var < 0 || used[var]) return false;
        if (D.weights[var] != S.weights[i]) return false;
        used[var] = 1;
    }
    std::vector<Poly> mapped;
    for (const Poly& g : S.gb)
        mapped.push_back(ring_nf(D, poly_subst(D.F, g, ext.images, D.nvars())));
    auto in_mapped = [&](const Poly& q) {
        for (const Poly& m : mapped)
            if (m == q) return true;
        return false;
    };
    std::vector<Poly> extra;
    for (const Poly& g : D.gb)
        if (!in_mapped(g)) extra.push_back(g);
    if (extra.size() + S.gb.size() != D.gb.size()) return false;  // collapsed
    if (extra.empty()) {
        if (reason) *reason = "polynomial extension of the source presentation";
        return true;
    }
    if (extra.size() == 1) {
        // inverse relation: constant term -1/+1 and every other term uses an
        // unused variable exactly once
        const Poly& g = extra[0];
        int unit_terms = 0;
        bool shape = true;
        for (const Term& t : g.t) {
            int tot = 0, newv = -1;
            for (int j = 0; j < D.nvars(); ++j) {
                if (t.exp[j] && !used[j]) newv = j;
                tot += used[j] ? 0 : t.exp[j];
            }
            if (newv < 0 && tot == 0) {
                bool constant = true;
                for (int j = 0; j < D.nvars(); ++j) constant &= t.exp[j] == 0;
                if (constant) {
                    ++unit_terms;
                    continue;
                }
            }
            shape = shape && tot == 1;
        }
        if (shape && unit_terms == 1) {
            if (reason) *reason = "localization of the source presentation";
            return true;
        }
    }
    return false;
}

CertifyResult rule_r1(const DescPtr& d) {
    if (!d->att.noetherian)
        return unknown("no noetherian attestation on " + ring_str(*d->ring));
    CheckLog lg;
    lg.attest("noetherian: user-supplied for " + ring_str(*d->ring));
    lg.check("ideal finitely generated",
             std::to_string(d->ideal.n()) + " generator(s) " + gens_str(d->ideal),
             true);
    RingPtr q = make_quotient(d->ring, d->ideal.elems, d->ring->name + "/a");
    lg.check("quotient by the ideal is finitely presented",
             ring_str(*q) + " over " + d->ring->F.tag(), true);
    return done("R1", "noetherian-ring", d, {}, std::move(lg));
}

// shared core so the tensor rule can inject its own flatness justification
CertifyResult r2_core(const DescPtr& d, CertPtr base_cert,
                      std::string flat_attestation) {
    CheckLog lg;
    lg.attest(std::move(flat_attestation));

    bool img_ok = d->ideal.n() == d->base->ideal.n();
    for (int i = 0; img_ok && i < d->ideal.n(); ++i)
        img_ok = ring_nf(*d->ring, d->ideal.elems[i]) ==
                 d->ext.apply(d->base->ideal.elems[i]);
    lg.check("extended ideal is the image ideal on generators",
             std::to_string(d->base->ideal.n()) + " generator(s) of " +
                 gens_str(d->base->ideal) + " map onto " + gens_str(d->ideal),
             img_ok);

    bool rel_ok = true;
    for (const Poly& g : d->ext.src->gb) rel_ok = rel_ok && d->ext.apply(g).is_zero();
    lg.check("ring map respects the source relations",
             std::to_string(d->ext.src->gb.size()) +
                 " source relation(s) map to zero in " + d->ring->name,
             rel_ok);
    return done("R2", "flat-base-change", d, {std::move(base_cert)},
                std::move(lg));
}

CertifyResult rule_r2(const DescPtr& d) {
    CertifyResult base = certify(d->base);
    if (!base.ok()) return unknown("premise failed: " + base.unknown_reason);
    std::string flat;
    std::string why;
    if (d->att.flat_over_base)
        flat = "flat over the base: user-supplied for the map " +
               d->ext.src->name + " -> " + d->ext.dst->name;
    else if (syntactic_flat(d->ext, &why))
        flat = "flat over the base: auto (" + why + ")";
    else
        return unknown("no flatness attestation for the map " +
                       d->ext.src->name + " -> " + d->ext.dst->name);
    return r2_core(d, base.cert, std::move(flat));
}

CertifyResult r3_core(const DescPtr& d, CertPtr base_cert) {
    CheckLog lg;

    RingPtr qb = make_quotient(d->ring, d->ideal.elems, d->ring->name + "/b");
    bool cont = true;
    for (const Poly& g : d->base->ideal.elems)
        cont = cont && ring_nf(*qb, g).is_zero();
    lg.check("containment of the base ideal",
             std::to_string(d->base->ideal.n()) +
                 " base generator(s) reduce to zero modulo " +
                 gens_str(d->ideal),
             cont);

    RingPtr qa =
        make_quotient(d->ring, d->base->ideal.elems, d->ring->name + "/a");
    lg.check("noetherian completion along the base ideal",
             "the completion is noetherian exactly when the quotient is; " +
                 ring_str(*qa) + " is finitely presented over " +
                 d->ring->F.tag() + ", hence noetherian",
             true);
    lg.check("noetherian completion along the larger ideal",
             ring_str(*qb) + " is finitely presented over " +
                 d->ring->F.tag() + ", hence noetherian",
             true);
    return done("R3", "ideal-enlargement", d, {std::move(base_cert)},
                std::move(lg));
}

CertifyResult rule_r3(const DescPtr& d) {
    CertifyResult base = certify(d->base);
    if (!base.ok()) return unknown("premise failed: " + base.unknown_reason);
    return r3_core(d, base.cert);
}

/* One orientation of the tensor rule: certify `seed`'s ideal on its own,
 * extend it across the product along its coprojection (flat because the
 * other factor is flat over the field), then enlarge to the sum ideal. */
CertifyResult tensor_chain(const DescPtr& d, bool seed_right) {
    const DescPtr& seed = seed_right ? d->right : d->left;
    const char* other_name = seed_right ? "left" : "right";
    const RingHom& coproj = seed_right ? d->env.right : d->env.left;

    CertifyResult sc = certify(seed);
    if (!sc.ok()) return unknown("seed factor: " + sc.unknown_reason);

    DescPtr fe = flat_extension(seed, coproj, {});
    CertifyResult r2 = r2_core(
        fe, sc.cert,
        std::string("flat over the base: the coprojection is a base change of "
                    "the field map into the ") +
            other_name + " factor, whose flatness over the field is "
                         "user-supplied");
    if (!r2.ok()) return r2;

    DescPtr enl = enlarged(fe, d->ideal);
    return r3_core(enl, r2.cert);
}

CertifyResult rule_r4(const DescPtr& d) {
    CheckLog lg;

    int nl = d->left->ideal.n(), nr = d->right->ideal.n();
    bool gen_ok = d->ideal.n() == nl + nr;
    for (int i = 0; gen_ok && i < nl; ++i)
        gen_ok = ring_nf(*d->ring, d->ideal.elems[i]) ==
                 d->env.left.apply(d->left->ideal.elems[i]);
    for (int i = 0; gen_ok && i < nr; ++i)
        gen_ok = ring_nf(*d->ring, d->ideal.elems[nl + i]) ==
                 d->env.right.apply(d->right->ideal.elems[i]);
    lg.check("sum ideal matches the two factor images on generators",
             std::to_string(nl) + " + " + std::to_string(nr) +
                 " generator(s) give " + gens_str(d->ideal),
             gen_ok);

    bool lf = d->left->att.flat_over_base, rf = d->right->att.flat_over_base;
    lg.check("flatness attestations on both factors",
             std::string("left ") + (lf ? "yes" : "NO") + ", right " +
                 (rf ? "yes" : "NO"),
             lf && rf);
    if (d->left->att.eff_type_over_base)
        lg.attest(
            "essentially formally of finite type over the field: "
            "user-supplied for the left factor");
    if (d->right->att.eff_type_over_base)
        lg.attest(
            "essentially formally of finite type over the field: "
            "user-supplied for the right factor");
    if (!lg.ok)
        return unknown("tensor rule: missing flatness attestation on a factor");

    CertifyResult chain = tensor_chain(d, /*seed_right=*/true);
    if (!chain.ok()) {
        CertifyResult swapped = tensor_chain(d, /*seed_right=*/false);
        if (!swapped.ok())
            return unknown("neither factor certifies on its own ideal (" +
                           chain.unknown_reason + "; swapped: " +
                           swapped.unknown_reason + ")");
        chain = std::move(swapped);
    }
    return done("R4", "tensor-of-adic-algebras", d, {chain.cert},
                std::move(lg));
}

}  // namespace

// ---- subjects -------------------------------------------------------------

DescPtr concrete_ring(RingPtr R, ElemSeq a, Attestations att) {
    if (!R) throw std::invalid_argument("descriptor: null ring");
    if (a.ring.get() != R.get() && !ring_equal(*a.ring, *R))
        throw std::invalid_argument(
            "descriptor: the ideal lives in a different ring");
    ElemSeq canon = nf_sequence(R, a.elems);
    return blank(DescKind::concrete, std::move(R), std::move(canon), att);
}

DescPtr tensor_of(const DescPtr& L, const DescPtr& R, std::string name) {
    if (!L || !R) throw std::invalid_argument("tensor_of: null factor");
    if (!(L->ring->F == R->ring->F))
        throw std::invalid_argument("tensor_of: factors over different fields");
    std::string nm =
        name.empty() ? L->ring->name + "(x)" + R->ring->name : std::move(name);
    TensorRing env = tensor_ring(L->ring, R->ring, nm);
    std::vector<Poly> gens;
    for (const Poly& g : L->ideal.elems) gens.push_back(env.left.apply(g));
    for (const Poly& g : R->ideal.elems) gens.push_back(env.right.apply(g));
    auto d = blank(DescKind::tensor_product, env.ring,
                   make_sequence(env.ring, std::move(gens)), {});
    d->att.flat_over_base = L->att.flat_over_base && R->att.flat_over_base;
    d->att.eff_type_over_base =
        L->att.eff_type_over_base && R->att.eff_type_over_base;
    d->left = L;
    d->right = R;
    d->env = std::move(env);
    return d;
}

DescPtr enlarged(const DescPtr& base, ElemSeq bigger) {
    if (!base) throw std::invalid_argument("enlarged: null base");
    if (bigger.ring.get() != base->ring.get() &&
        !ring_equal(*bigger.ring, *base->ring))
        throw std::invalid_argument(
            "enlarged: the larger ideal must live in the base ring");
    auto d = blank(DescKind::enlarged, base->ring,
                   nf_sequence(base->ring, bigger.elems), base->att);
    d->base = base;
    return d;
}

DescPtr flat_extension(const DescPtr& base, RingHom ext, Attestations att) {
    if (!base) throw std::invalid_argument("flat_extension: null base");
    if (ext.src.get() != base->ring.get() && !ring_equal(*ext.src, *base->ring))
        throw std::invalid_argument(
            "flat_extension: map source is not the base ring");
    std::vector<Poly> gens;
    for (const Poly& g : base->ideal.elems) gens.push_back(ext.apply(g));
    RingPtr R = ext.dst;
    auto d = blank(DescKind::flat_extension, R,
                   make_sequence(R, std::move(gens)), att);
    d->base = base;
    d->ext = std::move(ext);
    return d;
}

// ---- certificates ---------------------------------------------------------

bool WPRCertificate::all_checks_passed() const {
    for (const SideCheck& c : side_checks)
        if (!c.passed) return false;
    for (const CertPtr& p : premises)
        if (!p || !p->all_checks_passed()) return false;
    return true;
}

CertifyResult certify(const DescPtr& d) {
    if (!d) return unknown("null descriptor");
    switch (d->kind) {
        case DescKind::concrete: return rule_r1(d);
        case DescKind::flat_extension: return rule_r2(d);
        case DescKind::enlarged: return rule_r3(d);
        case DescKind::tensor_product: return rule_r4(d);
    }
    return unknown("unreachable descriptor kind");
}

// ---- serialization --------------------------------------------------------

namespace {

using nlohmann::json;

json ring_to_json(const RingPtr& R) {
    json j;
    j["p"] = R->F.p;
    j["vars"] = R->vars;
    j["weights"] = R->weights;
    j["name"] = R->name;
    std::vector<std::string> rels;
    for (const Poly& g : R->gb) rels.push_back(poly_str(R->F, g, R->vars));
    j["rels"] = rels;
    return j;
}

RingPtr ring_from_json(const json& j) {
    Field F{j.at("p").get<unsigned long>()};
    auto vars = j.at("vars").get<std::vector<std::string>>();
    auto weights = j.at("weights").get<std::vector<int>>();
    std::string name = j.at("name").get<std::string>();
    RingPtr amb = make_poly_ring(F, vars, weights, name);
    auto rels = j.at("rels").get<std::vector<std::string>>();
    if (rels.empty()) return amb;
    std::vector<Poly> rp;
    for (const std::string& s : rels) rp.push_back(parse_poly(F, vars, s));
    return make_quotient(amb, rp, name);
}

std::vector<std::string> seq_to_strings(const ElemSeq& a) {
    std::vector<std::string> out;
    for (const Poly& g : a.elems)
        out.push_back(poly_str(a.ring->F, g, a.ring->vars));
    return out;
}

json att_to_json(const Attestations& a) {
    json j;
    j["noetherian"] = a.noetherian;
    j["flat_over_base"] = a.flat_over_base;
    j["eff_type_over_base"] = a.eff_type_over_base;
    return j;
}

Attestations att_from_json(const json& j) {
    Attestations a;
    a.noetherian = j.at("noetherian").get<bool>();
    a.flat_over_base = j.at("flat_over_base").get<bool>();
    a.eff_type_over_base = j.at("eff_type_over_base").get<bool>();
    return a;
}

json desc_to_json(const DescPtr& d) {
    json j;
    switch (d->kind) {
        case DescKind::concrete:
            j["kind"] = "concrete";
            j["ring"] = ring_to_json(d->ring);
            j["ideal"] = seq_to_strings(d->ideal);
            j["att"] = att_to_json(d->att);
            break;
        case DescKind::tensor_product:
            j["kind"] = "tensor";
            j["name"] = d->ring->name;
            j["left"] = desc_to_json(d->left);
            j["right"] = desc_to_json(d->right);
            break;
        case DescKind::enlarged:
            j["kind"] = "enlarged";
            j["base"] = desc_to_json(d->base);
            j["bigger"] = seq_to_strings(d->ideal);
            break;
        case DescKind::flat_extension:
            j["kind"] = "flat-extension";
            j["base"] = desc_to_json(d->base);
            j["ring"] = ring_to_json(d->ring);
            j["images"] = [&] {
                std::vector<std::string> out;
                for (const Poly& p : d->ext.images)
                    out.push_back(poly_str(d->ring->F, p, d->ring->vars));
                return out;
            }();
            j["att"] = att_to_json(d->att);
            break;
    }
    return j;
}

DescPtr desc_from_json_node(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "concrete") {
        RingPtr R = ring_from_json(j.at("ring"));
        ElemSeq a =
            parse_sequence(R, j.at("ideal").get<std::vector<std::string>>());
        return concrete_ring(R, std::move(a), att_from_json(j.at("att")));
    }
    if (kind == "tensor") {
        DescPtr L = desc_from_json_node(j.at("left"));
        DescPtr R = desc_from_json_node(j.at("right"));
        return tensor_of(L, R, j.at("name").get<std::string>());
    }
    if (kind == "enlarged") {
        DescPtr base = desc_from_json_node(j.at("base"));
        ElemSeq b = parse_sequence(
            base->ring, j.at("bigger").get<std::vector<std::string>>());
        return enlarged(base, std::move(b));
    }
    if (kind == "flat-extension") {
        DescPtr base = desc_from_json_node(j.at("base"));
        RingPtr R = ring_from_json(j.at("ring"));
        std::vector<Poly> images;
        for (const std::string& s :
             j.at("images").get<std::vector<std::string>>())
            images.push_back(parse_poly(*R, s));
        RingHom h = make_hom(base->ring, R, std::move(images));
        return flat_extension(base, std::move(h), att_from_json(j.at("att")));
    }
    throw std::invalid_argument("descriptor kind not recognized: " + kind);
}

json cert_to_json_node(const CertPtr& c) {
    json j;
    j["rule"] = c->rule;
    j["rule_name"] = c->rule_name;
    j["conclusion"] = c->conclusion;
    json checks = json::array();
    for (const SideCheck& s : c->side_checks) {
        json cj;
        cj["name"] = s.name;
        cj["detail"] = s.detail;
        cj["passed"] = s.passed;
        checks.push_back(cj);
    }
    j["side_checks"] = checks;
    j["attestations"] = c->attestations;
    json prem = json::array();
    for (const CertPtr& p : c->premises) prem.push_back(cert_to_json_node(p));
    j["premises"] = prem;
    return j;
}

bool tree_match(const json& j, const CertPtr& c, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m + " (at " + c->conclusion + ")";
        return false;
    };
    if (j.at("rule").get<std::string>() != c->rule) return fail("rule differs");
    if (j.at("rule_name").get<std::string>() != c->rule_name)
        return fail("rule name differs");
    if (j.at("conclusion").get<std::string>() != c->conclusion)
        return fail("conclusion differs");
    const json& checks = j.at("side_checks");
    if (checks.size() != c->side_checks.size())
        return fail("side check count differs");
    for (size_t i = 0; i < c->side_checks.size(); ++i) {
        if (checks[i].at("name").get<std::string>() != c->side_checks[i].name)
            return fail("side check name differs");
        if (!checks[i].at("passed").get<bool>() || !c->side_checks[i].passed)
            return fail("side check not passing: " + c->side_checks[i].name);
    }
    if (j.at("attestations").get<std::vector<std::string>>() !=
        c->attestations)
        return fail("attestations differ");
    const json& prem = j.at("premises");
    if (prem.size() != c->premises.size())
        return fail("premise count differs");
    for (size_t i = 0; i < c->premises.size(); ++i)
        if (!tree_match(prem[i], c->premises[i], why)) return false;
    return true;
}

}  // namespace

std::string cert_json(const CertPtr& c) {
    if (!c) throw std::invalid_argument("cert_json: null certificate");
    json j = cert_to_json_node(c);
    j["subject"] = desc_to_json(c->subject);
    return j.dump(2);
}

DescPtr descriptor_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.contains("subject")) return desc_from_json_node(j.at("subject"));
    return desc_from_json_node(j);
}

bool reverify(const std::string& serialized, std::string* why) {
    json j;
    try {
        j = json::parse(serialized);
    } catch (const std::exception& e) {
        if (why) *why = std::string("parse: ") + e.what();
        return false;
    }
    DescPtr d;
    try {
        d = desc_from_json_node(j.at("subject"));
    } catch (const std::exception& e) {
        if (why) *why = std::string("subject: ") + e.what();
        return false;
    }
    CertifyResult r = certify(d);
    if (!r.ok()) {
        if (why) *why = "re-certification failed: " + r.unknown_reason;
        return false;
    }
    if (!r.cert->all_checks_passed()) {
        if (why) *why = "re-certification produced a failing check";
        return false;
    }
    return tree_match(j, r.cert, why);
}

// ---- evidence mode --------------------------------------------------------

EvidenceReport wpr_evidence(const RingPtr& A, const ElemSeq& a,
                            const std::vector<const FPModule*>& tests,
                            int k_max, int J, long dlo, long dhi) {
    if (tests.empty())
        throw std::invalid_argument("evidence: no test modules supplied");
    if (k_max < 1)
        throw std::invalid_argument("evidence: k_max must be at least 1");
    if (J < 2) throw std::invalid_argument("evidence: need at least two stages");
    if (dlo > dhi) throw std::invalid_argument("evidence: empty window");

    EvidenceReport r;
    r.ring = ring_str(*A);
    r.sequence = gens_str(a);
    r.k_max = k_max;
    r.J = J;
    r.dlo = dlo;
    r.dhi = dhi;
    r.notes.push_back(
        "the defining condition quantifies over injective modules, which are "
        "not finitely presentable here; values on supplied test modules are "
        "informational and a nonzero value contradicts nothing");

    RingPtr q = make_quotient(A, a.elems, A->name + "/a");
    if (is_zero_ring(*q))
        r.notes.push_back(
            "the sequence generates the unit ideal; every telescope stage is "
            "acyclic and the condition holds vacuously");

    TelescopeTower tt = telescope_tower(a, J);
    bool allres = true, allvan = true;
    for (size_t e = 0; e < tests.size(); ++e) {
        const FPModule& E = *tests[e];
        std::ostringstream nm;
        nm << "test " << (e + 1) << " (cover " << E.rank() << ")";
        ComplexPtr Ecx = single_term(E, 0);

        std::vector<BlockComplex> bl;
        std::vector<ComplexPtr> stages;
        std::vector<ChainMap> maps;
        for (int j = 1; j <= J; ++j) {
            bl.push_back(tensor_complex(tt.stage[j - 1].cx(), Ecx));
            stages.push_back(bl.back().cx);
            if (j >= 2)
                maps.push_back(tensor_map_left(bl[j - 2], bl[j - 1],
                                               tt.sys.maps[j - 2], Ecx));
        }
        IndSystem sys = make_ind_system(std::move(stages), std::move(maps));

        long dropped = 0;
        std::set<int> nonzero_k;
        for (int k = 1; k <= k_max; ++k)
            for (long d = dlo; d <= dhi; ++d) {
                TowerReport t = ind_piece(sys, k, d);
                bool content = !t.resolved();
                for (int x : t.dims) content = content || x != 0;
                allres = allres && t.resolved();
                allvan = allvan && t.resolved() && t.value_dim == 0;
                if (!content) {
                    ++dropped;
                    continue;
                }
                EvidenceLine L;
                L.test = nm.str();
                L.k = k;
                L.deg = d;
                L.dims = t.dims;
                L.resolved = t.resolved();
                L.stabilized_at = t.stabilized_at;
                L.value = t.resolved() ? t.value_dim : -1;
                if (L.resolved && L.value != 0) nonzero_k.insert(k);
                r.lines.push_back(std::move(L));
            }
        if (dropped)
            r.notes.push_back(nm.str() + ": " + std::to_string(dropped) +
                              " window slices with no content");
        if (!nonzero_k.empty()) {
            std::ostringstream os;
            os << nm.str() << ": stable nonzero cohomology at k =";
            for (int k : nonzero_k) os << " " << k;
            os << "; the module was not certified injective, so this is "
                  "informational";
            r.notes.push_back(os.str());
        }
    }
    r.all_resolved = allres;
    r.all_vanished = allres && allvan;
    return r;
}

std::string evidence_json(const EvidenceReport& r) {
    json j;
    j["label"] = r.label;
    j["ring"] = r.ring;
    j["sequence"] = r.sequence;
    j["k_max"] = r.k_max;
    j["stages"] = r.J;
    j["window"] = {r.dlo, r.dhi};
    j["all_resolved"] = r.all_resolved;
    j["all_vanished"] = r.all_vanished;
    json lines = json::array();
    for (const EvidenceLine& L : r.lines) {
        json lj;
        lj["test"] = L.test;
        lj["k"] = L.k;
        lj["deg"] = L.deg;
        lj["dims"] = L.dims;
        lj["resolved"] = L.resolved;
        lj["stabilized_at"] = L.stabilized_at;
        lj["value"] = L.value;
        lines.push_back(lj);
    }
    j["lines"] = lines;
    j["notes"] = r.notes;
    return j.dump(2);
}

std::string evidence_table(const EvidenceReport& r) {
    std::ostringstream os;
    os << r.label << "  " << r.ring << "  a=" << r.sequence << "  k<="
       << r.k_max << "  stages=" << r.J << "  window=[" << r.dlo << ","
       << r.dhi << "]\n";
    for (const EvidenceLine& L : r.lines) {
        os << "  " << L.test << "  k=" << L.k << "  deg=" << L.deg << "  dims=";
        for (size_t i = 0; i < L.dims.size(); ++i)
            os << (i ? "," : "") << L.dims[i];
        if (L.resolved)
            os << "  value=" << L.value << " (stab " << L.stabilized_at << ")";
        else
            os << "  unresolved";
        os << "\n";
    }
    for (const std::string& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace adict
