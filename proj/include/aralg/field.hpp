#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace aralg {

using Scalar = mpq_class;

// Ground field: the rationals or a prime field F_p. Prime-field elements are
// kept as canonical residues 0..p-1 stored in an mpq_class with denominator 1.
class Field {
public:
    enum class Kind { Rationals, Prime };

    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::int64_t p);

    Kind kind() const { return kind_; }
    std::int64_t characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }

    Scalar normalize(const Scalar& x) const;
    Scalar from_int(long v) const { return normalize(Scalar(v)); }
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    // "Q" or "Fp:<p>"
    std::string descriptor() const;
    static Field parse(const std::string& descriptor);
    // Accepts "3", "-2", "3/2"; output uses the same syntax.
    Scalar parse_scalar(const std::string& s) const;
    static std::string format(const Scalar& x);

    friend bool operator==(const Field& a, const Field& b) {
        return a.kind_ == b.kind_ && (a.kind_ == Kind::Rationals || a.p_ == b.p_);
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    Kind kind_ = Kind::Rationals;
    std::int64_t p_ = 0;
};

}  // namespace aralg
