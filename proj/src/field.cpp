#include "aralg/field.hpp"

#include "aralg/errors.hpp"

namespace aralg {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(std::int64_t p) {
    if (!is_prime(p)) throw ParseError("field characteristic " + std::to_string(p) + " is not prime");
    Field f;
    f.kind_ = Kind::Prime;
    f.p_ = p;
    return f;
}

Scalar Field::normalize(const Scalar& x) const {
    if (kind_ == Kind::Rationals) return x;
    mpz_class p(static_cast<long>(p_));
    mpz_class num = x.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = x.get_den() % p;
    if (den == 0) throw Error("denominator divisible by the characteristic");
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * dinv) % p;
    return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rationals) return a + b;
    mpz_class r = (a.get_num() + b.get_num()) % p_;
    return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rationals) return a - b;
    mpz_class r = (a.get_num() - b.get_num()) % p_;
    if (r < 0) r += p_;
    return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rationals) return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % p_;
    return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::Rationals) return -a;
    if (a == 0) return a;
    return Scalar(mpz_class(p_) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
    if (a == 0) throw Error("division by zero");
    if (kind_ == Kind::Rationals) return 1 / a;
    mpz_class r;
    mpz_class p(static_cast<long>(p_));
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
    return Scalar(r);
}

std::string Field::descriptor() const {
    return kind_ == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& d) {
    if (d == "Q") return rationals();
    if (d.rfind("Fp:", 0) == 0) {
        try {
            return prime(std::stoll(d.substr(3)));
        } catch (const std::logic_error&) {
            throw ParseError("bad field descriptor '" + d + "'");
        }
    }
    throw ParseError("bad field descriptor '" + d + "'");
}

Scalar Field::parse_scalar(const std::string& s) const {
    Scalar x;
    if (s.empty() || x.set_str(s, 10) != 0) throw ParseError("bad scalar '" + s + "'");
    x.canonicalize();
    if (x.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return normalize(x);
}

std::string Field::format(const Scalar& x) { return x.get_str(); }

}  // namespace aralg
