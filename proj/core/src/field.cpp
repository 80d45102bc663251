#include "adict/field.hpp"

namespace adict {

Scalar Field::norm(const Scalar& a) const {
    Scalar r = a;
    r.canonicalize();
    if (!is_fp()) return r;
    // reduce into [0, p): numerator * inverse(denominator) mod p
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = r.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = r.get_den() % pz;
    if (den != 1) {
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw std::domain_error("field: denominator not invertible mod p");
        num = (num * dinv) % pz;
    }
    return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    return is_fp() ? norm(Scalar(a + b)) : Scalar(a + b);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    return is_fp() ? norm(Scalar(a - b)) : Scalar(a - b);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    return is_fp() ? norm(Scalar(a * b)) : Scalar(a * b);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    if (is_zero(b)) throw std::domain_error("field: division by zero");
    return is_fp() ? mul(a, inv(b)) : Scalar(a / b);
}

Scalar Field::neg(const Scalar& a) const {
    return is_fp() ? norm(Scalar(-a)) : Scalar(-a);
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("field: inverse of zero");
    if (!is_fp()) return Scalar(1 / a);
    mpz_class pz(p), v = norm(a).get_num(), r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::domain_error("field: not invertible mod p");
    return Scalar(r);
}

Scalar Field::from_long(long num, long den) const {
    Scalar r(num, den);
    r.canonicalize();
    return norm(r);
}

Scalar Field::parse(const std::string& s) const {
    auto slash = s.find('/');
    Scalar r;
    if (slash == std::string::npos) {
        r = Scalar(mpz_class(s));
    } else {
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("field: zero denominator in literal");
        r = Scalar(num, den);
        r.canonicalize();
    }
    return norm(r);
}

std::string Field::str(const Scalar& a) const { return a.get_str(); }

std::string Field::tag() const {
    return is_fp() ? "F_" + std::to_string(p) : "Q";
}

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;  // exact for word-size inputs
}

}  // namespace adict
