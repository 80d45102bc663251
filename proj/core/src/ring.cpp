#include "adict/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace adict {

bool RingSpec::positively_weighted() const {
    for (int w : weights)
        if (w <= 0) return false;
    return true;
}

static void check_presentation(const Field& F, const std::vector<std::string>& vars,
                               const std::vector<int>& weights) {
    (void)F;
    if (vars.size() != weights.size())
        throw std::invalid_argument("ring: vars/weights size mismatch");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw std::invalid_argument("ring: empty variable name");
        if (!seen.insert(v).second)
            throw std::invalid_argument("ring: duplicate variable " + v);
    }
}

RingPtr make_poly_ring(const Field& F, std::vector<std::string> vars,
                       std::vector<int> weights, std::string name) {
    check_presentation(F, vars, weights);
    auto R = std::make_shared<RingSpec>();
    R->F = F;
    R->vars = std::move(vars);
    R->weights = std::move(weights);
    R->name = std::move(name);
    return R;
}

RingPtr make_quotient(const RingPtr& base, const std::vector<Poly>& rels,
                      std::string name) {
    std::vector<Poly> gens = base->gb;
    for (const auto& r : rels) {
        long d;
        if (!poly_homogeneous(r, base->weights, &d))
            throw std::invalid_argument("quotient: inhomogeneous relation " +
                                        poly_str(base->F, r, base->vars));
        if (!r.is_zero()) gens.push_back(r);
    }
    auto R = std::make_shared<RingSpec>();
    R->F = base->F;
    R->vars = base->vars;
    R->weights = base->weights;
    R->gb = ideal_gb(base->F, base->nvars(), gens);
    R->name = std::move(name);
    return R;
}

RingPtr localize_ring(const RingPtr& base, const Poly& f, std::string inv_name,
                      std::string name) {
    long w;
    if (!poly_homogeneous(f, base->weights, &w) || f.is_zero())
        throw std::invalid_argument("localize: element must be homogeneous nonzero");
    for (const auto& v : base->vars)
        if (v == inv_name)
            throw std::invalid_argument("localize: name " + inv_name + " already taken");
    int n = base->nvars();
    std::vector<std::string> vars = base->vars;
    vars.push_back(std::move(inv_name));
    std::vector<int> weights = base->weights;
    weights.push_back((int)-w);
    std::vector<Poly> gens;
    for (const auto& g : base->gb) {
        Poly h = g;
        for (auto& tm : h.t) tm.exp.push_back(0);
        gens.push_back(std::move(h));
    }
    Poly uf = f;  // inv * f - 1
    for (auto& tm : uf.t) tm.exp.push_back(1);
    Poly one = poly_const(base->F, base->F.from_long(1), n + 1);
    gens.push_back(poly_sub(base->F, uf, one));
    auto R = std::make_shared<RingSpec>();
    R->F = base->F;
    R->vars = std::move(vars);
    R->weights = std::move(weights);
    R->gb = ideal_gb(base->F, n + 1, gens);
    R->name = std::move(name);
    return R;
}

Poly RingHom::apply(const Poly& p) const {
    return ring_nf(*dst, poly_subst(dst->F, p, images, dst->nvars()));
}

RingHom make_hom(RingPtr src, RingPtr dst, std::vector<Poly> images, bool certify) {
    if ((int)images.size() != src->nvars())
        throw std::invalid_argument("hom: wrong number of variable images");
    RingHom h{std::move(src), std::move(dst), std::move(images)};
    if (certify) {
        for (int i = 0; i < h.src->nvars(); ++i) {
            long d;
            const Poly im = ring_nf(*h.dst, h.images[i]);
            if (!poly_homogeneous(im, h.dst->weights, &d))
                throw std::invalid_argument("hom: image of " + h.src->vars[i] +
                                            " not homogeneous");
            if (!im.is_zero() && d != h.src->weights[i])
                throw std::invalid_argument("hom: image of " + h.src->vars[i] +
                                            " has wrong weight");
        }
        for (const auto& g : h.src->gb)
            if (!h.apply(g).is_zero())
                throw std::invalid_argument("hom: relation not sent to zero: " +
                                            poly_str(h.src->F, g, h.src->vars));
    }
    return h;
}

TensorRing tensor_ring(const RingPtr& A, const RingPtr& B, std::string name) {
    if (!(A->F == B->F)) throw std::invalid_argument("tensor: field mismatch");
    int n = A->nvars(), m = B->nvars();
    std::vector<std::string> vars = A->vars;
    std::set<std::string> taken(vars.begin(), vars.end());
    for (const auto& v : B->vars) {
        std::string w = v + "'";
        while (taken.count(w)) w += "'";
        taken.insert(w);
        vars.push_back(w);
    }
    std::vector<int> weights = A->weights;
    weights.insert(weights.end(), B->weights.begin(), B->weights.end());
    std::vector<Poly> gens;
    for (const auto& g : A->gb) {
        Poly h = g;
        for (auto& tm : h.t) tm.exp.resize(n + m, 0);
        gens.push_back(std::move(h));
    }
    for (const auto& g : B->gb) {
        Poly h = g;
        for (auto& tm : h.t) {
            Exps e(n + m, 0);
            for (int i = 0; i < m; ++i) e[n + i] = tm.exp[i];
            tm.exp = std::move(e);
        }
        gens.push_back(std::move(h));
    }
    auto R = std::make_shared<RingSpec>();
    R->F = A->F;
    R->vars = std::move(vars);
    R->weights = std::move(weights);
    R->gb = ideal_gb(A->F, n + m, gens);
    R->name = std::move(name);
    TensorRing t;
    t.ring = R;
    std::vector<Poly> li, ri;
    for (int i = 0; i < n; ++i) li.push_back(poly_var(A->F, i, n + m));
    for (int i = 0; i < m; ++i) ri.push_back(poly_var(A->F, n + i, n + m));
    t.left = make_hom(A, R, std::move(li), false);
    t.right = make_hom(B, R, std::move(ri), false);
    return t;
}

RingHom mult_hom(const TensorRing& env, const RingPtr& A) {
    int n = A->nvars();
    if (env.ring->nvars() != 2 * n)
        throw std::invalid_argument("mult_hom: not a tensor square");
    std::vector<Poly> images;
    for (int i = 0; i < 2 * n; ++i) images.push_back(poly_var(A->F, i % n, n));
    return make_hom(env.ring, A, std::move(images));
}

bool ring_equal(const RingSpec& a, const RingSpec& b) {
    if (!(a.F == b.F) || a.vars != b.vars || a.weights != b.weights) return false;
    if (a.gb.size() != b.gb.size()) return false;
    for (size_t i = 0; i < a.gb.size(); ++i)
        if (!(a.gb[i] == b.gb[i])) return false;
    return true;
}

bool is_zero_ring(const RingSpec& R) {
    return R.gb.size() == 1 && R.gb[0].t.size() == 1 &&
           total_deg(R.gb[0].lt().exp) == 0;
}

Poly ring_nf(const RingSpec& R, const Poly& p) {
    if (R.gb.empty()) return p;
    return poly_nf(R.F, R.nvars(), p, R.gb);
}

Poly ring_mul(const RingSpec& R, const Poly& a, const Poly& b) {
    return ring_nf(R, poly_mul(R.F, a, b));
}

namespace {

constexpr size_t kPieceGuard = 200000;  // runaway-piece resource guard

struct MonoEnum {
    const RingSpec& R;
    int n;
    std::vector<Exps> out;
    Exps cur;

    explicit MonoEnum(const RingSpec& r) : R(r), n(r.nvars()), cur(r.nvars(), 0) {}

    [[noreturn]] void infinite(long wdeg) const {
        throw ResourceExhausted("graded piece in degree " + std::to_string(wdeg) +
                                " of " + ring_str(R) + " is not finite-dimensional");
    }

    void emit() {
        if (out.size() >= kPieceGuard)
            throw ResourceExhausted("graded piece enumeration in " + ring_str(R) +
                                    " exceeded " + std::to_string(kPieceGuard) +
                                    " monomials");
        out.push_back(cur);
    }

    // exponents over `free` with sum(e_i * w_i) = rem, all weights of one
    // strict sign (flip = -1 negates), enumerated depth-first
    void bounded(const std::vector<int>& free, size_t i, long rem, int flip) {
        if (i == free.size()) {
            if (rem == 0) emit();
            return;
        }
        int v = free[i];
        long w = (long)R.weights[v] * flip;  // > 0
        for (long e = 0; e * w <= rem; ++e) {
            cur[v] = (int)e;
            bounded(free, i + 1, rem - e * w, flip);
        }
        cur[v] = 0;
    }

    // does sum(e_i w_i) = rem have any nonnegative solution over `free`?
    bool solvable(const std::vector<int>& free, long rem, long wdeg) {
        std::vector<int> pos, neg;
        bool zero = false;
        for (int v : free) {
            if (R.weights[v] > 0) pos.push_back(v);
            else if (R.weights[v] < 0) neg.push_back(v);
            else zero = true;
        }
        if (zero) {
            std::vector<int> rest;
            for (int v : free)
                if (R.weights[v] != 0) rest.push_back(v);
            return solvable(rest, rem, wdeg) || rem == 0;
        }
        if (!pos.empty() && !neg.empty()) {
            long g = 0;
            for (int v : free) g = std::gcd(g, (long)std::abs(R.weights[v]));
            return rem % g == 0;
        }
        if (pos.empty() && neg.empty()) return rem == 0;
        int flip = pos.empty() ? -1 : 1;
        const std::vector<int>& vars = pos.empty() ? neg : pos;
        long r = rem * flip;
        if (r < 0) return false;
        size_t before = out.size();
        Exps save = cur;
        bounded(vars, 0, r, flip);
        bool any = out.size() > before;
        out.resize(before);
        cur = save;
        (void)wdeg;
        return any;
    }

    // leaf: no lead constrains `free`; enumerate the degree equation exactly
    void cone(const std::vector<int>& free, long rem, long wdeg) {
        std::vector<int> pos, neg, zero;
        for (int v : free) {
            if (R.weights[v] > 0) pos.push_back(v);
            else if (R.weights[v] < 0) neg.push_back(v);
            else zero.push_back(v);
        }
        if (!zero.empty()) {
            std::vector<int> rest;
            for (int v : free)
                if (R.weights[v] != 0) rest.push_back(v);
            if (solvable(rest, rem, wdeg) || rem == 0) infinite(wdeg);
            return;  // no solutions at all
        }
        if (!pos.empty() && !neg.empty()) {
            long g = 0;
            for (int v : free) g = std::gcd(g, (long)std::abs(R.weights[v]));
            if (rem % g == 0) infinite(wdeg);
            return;
        }
        if (pos.empty() && neg.empty()) {
            if (rem == 0) emit();
            return;
        }
        int flip = pos.empty() ? -1 : 1;
        long r = rem * flip;
        if (r < 0) return;
        bounded(pos.empty() ? neg : pos, 0, r, flip);
    }

    // complement of the monomial ideal gen. by `leads`, over variables
    // `active` (constrained) + `free` (no remaining lead support)
    void rec(std::vector<int> active, std::vector<int> free,
             std::vector<Exps> leads, long rem, long wdeg) {
        // drop leads that became unsupported; a unit lead kills the cone
        for (auto& L : leads) {
            bool unit = true;
            for (int v : active) unit = unit && L[v] == 0;
            if (unit) return;
        }
        if (active.empty()) {
            cone(free, rem, wdeg);
            return;
        }
        // split on the first active variable supported by some lead
        int x = -1;
        for (int v : active) {
            for (const auto& L : leads)
                if (L[v] > 0) {
                    x = v;
                    break;
                }
            if (x >= 0) break;
        }
        if (x < 0) {  // no lead touches the active set any more
            std::vector<int> all = free;
            all.insert(all.end(), active.begin(), active.end());
            std::sort(all.begin(), all.end());
            cone(all, rem, wdeg);
            return;
        }
        std::vector<int> rest;
        for (int v : active)
            if (v != x) rest.push_back(v);
        int D = 0;
        for (const auto& L : leads) D = std::max(D, L[x]);
        for (int e = 0; e < D; ++e) {
            cur[x] = e;
            std::vector<Exps> sub;
            for (const auto& L : leads)
                if (L[x] <= e) {
                    Exps M = L;
                    M[x] = 0;
                    sub.push_back(std::move(M));
                }
            rec(rest, free, std::move(sub), rem - (long)e * R.weights[x], wdeg);
        }
        cur[x] = 0;
        // e >= D: every lead's x-condition holds; x becomes a free variable
        // with base exponent D
        std::vector<Exps> sub;
        for (const auto& L : leads) {
            Exps M = L;
            M[x] = 0;
            sub.push_back(std::move(M));
        }
        std::vector<int> free2 = free;
        free2.push_back(x);
        cur[x] = D;
        rec_free_floor(rest, free2, std::move(sub), rem - (long)D * R.weights[x],
                       wdeg, x, D);
        cur[x] = 0;
    }

    // same as rec, but x contributes cur[x] = D + (extra enumerated as free);
    // bounded() writes the extra into cur[x], so add the floor afterwards
    void rec_free_floor(std::vector<int> active, std::vector<int> free,
                        std::vector<Exps> leads, long rem, long wdeg, int x, int D) {
        size_t before = out.size();
        int saved = cur[x];
        cur[x] = 0;
        rec(std::move(active), std::move(free), std::move(leads), rem, wdeg);
        for (size_t k = before; k < out.size(); ++k) out[k][x] += D;
        cur[x] = saved;
    }
};

}  // namespace

const std::vector<Exps>& std_monomials(const RingSpec& R, long wdeg) {
    auto it = R.mono_cache.find(wdeg);
    if (it != R.mono_cache.end()) return it->second;
    std::vector<Exps> out;
    if (!is_zero_ring(R)) {
        MonoEnum me(R);
        std::vector<int> active;
        for (int i = 0; i < me.n; ++i) active.push_back(i);
        std::vector<Exps> leads;
        for (const auto& g : R.gb) leads.push_back(g.lt().exp);
        me.rec(std::move(active), {}, std::move(leads), wdeg, wdeg);
        out = std::move(me.out);
        std::sort(out.begin(), out.end());  // lex by exponent vector
    }
    return R.mono_cache.emplace(wdeg, std::move(out)).first->second;
}

long ring_piece_dim(const RingSpec& R, long wdeg) {
    return (long)std_monomials(R, wdeg).size();
}

std::string ring_str(const RingSpec& R) {
    if (!R.name.empty()) return R.name;
    std::ostringstream os;
    os << R.F.tag() << "[";
    for (int i = 0; i < R.nvars(); ++i) {
        if (i) os << ",";
        os << R.vars[i];
    }
    os << "]";
    if (!R.gb.empty()) {
        os << "/(";
        for (size_t i = 0; i < R.gb.size(); ++i) {
            if (i) os << ", ";
            os << poly_str(R.F, R.gb[i], R.vars);
        }
        os << ")";
    }
    return os.str();
}

// --- polynomial parser ----------------------------------------------------

namespace {

struct Tok {
    enum Kind { Num, Ident, Plus, Minus, Star, Caret, LPar, RPar, End } kind;
    std::string text;
    size_t pos;
};

std::vector<Tok> lex(const std::string& s) {
    std::vector<Tok> toks;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit((unsigned char)c)) {
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            if (i < s.size() && s[i] == '/' && i + 1 < s.size() &&
                std::isdigit((unsigned char)s[i + 1])) {
                ++i;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            }
            toks.push_back({Tok::Num, s.substr(start, i - start), start});
        } else if (std::isalpha((unsigned char)c) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
                ++i;
            while (i < s.size() && s[i] == '\'') ++i;  // primed tensor variables
            toks.push_back({Tok::Ident, s.substr(start, i - start), start});
        } else {
            Tok::Kind k;
            switch (c) {
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Star; break;
                case '^': k = Tok::Caret; break;
                case '(': k = Tok::LPar; break;
                case ')': k = Tok::RPar; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", i);
            }
            toks.push_back({k, std::string(1, c), i});
            ++i;
        }
    }
    toks.push_back({Tok::End, "", s.size()});
    return toks;
}

struct Parser {
    const Field& F;
    const std::vector<std::string>& vars;
    std::vector<Tok> toks;
    size_t at = 0;

    const Tok& peek() const { return toks[at]; }
    Tok take() { return toks[at++]; }

    Poly expr() {
        Poly r = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool neg = take().kind == Tok::Minus;
            Poly t = term();
            r = neg ? poly_sub(F, r, t) : poly_add(F, r, t);
        }
        return r;
    }

    Poly term() {
        Poly r = factor();
        for (;;) {
            Tok::Kind k = peek().kind;
            if (k == Tok::Star) {
                take();
                r = poly_mul(F, r, factor());
            } else if (k == Tok::Num || k == Tok::Ident || k == Tok::LPar) {
                r = poly_mul(F, r, factor());  // juxtaposition
            } else {
                break;
            }
        }
        return r;
    }

    Poly factor() {
        Poly b = atom();
        while (peek().kind == Tok::Caret) {
            size_t cpos = take().pos;
            if (peek().kind != Tok::Num)
                throw ParseError("expected integer exponent", peek().pos);
            Tok t = take();
            if (t.text.find('/') != std::string::npos)
                throw ParseError("exponent must be an integer", t.pos);
            long e = 0;
            try {
                e = std::stol(t.text);
            } catch (...) {
                throw ParseError("exponent out of range", t.pos);
            }
            if (e < 0) throw ParseError("negative exponent", cpos);
            b = poly_pow(F, b, e);
        }
        return b;
    }

    Poly atom() {
        Tok t = take();
        switch (t.kind) {
            case Tok::Num:
                return poly_const(F, F.parse(t.text), (int)vars.size());
            case Tok::Ident: {
                for (size_t i = 0; i < vars.size(); ++i)
                    if (vars[i] == t.text)
                        return poly_var(F, (int)i, (int)vars.size());
                throw ParseError("unknown variable '" + t.text + "'", t.pos);
            }
            case Tok::Minus:
                return poly_neg(F, factor());
            case Tok::LPar: {
                Poly r = expr();
                if (peek().kind != Tok::RPar)
                    throw ParseError("expected ')'", peek().pos);
                take();
                return r;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }
};

}  // namespace

Poly parse_poly(const Field& F, const std::vector<std::string>& vars,
                const std::string& text) {
    Parser p{F, vars, lex(text)};
    Poly r = p.expr();
    if (p.peek().kind != Tok::End)
        throw ParseError("trailing input '" + p.peek().text + "'", p.peek().pos);
    return r;
}

Poly parse_poly(const RingSpec& R, const std::string& text) {
    return ring_nf(R, parse_poly(R.F, R.vars, text));
}

}  // namespace adict
