#ifndef IGP2H10_SCALAR_HPP
#define IGP2H10_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

#include "igp2h10/errors.hpp"

namespace igp2h10 {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    BigInt g = big_gcd(a, b);
    BigInt l = (a / g) * b;
    return l < 0 ? BigInt(-l) : l;
}

// Exact coefficient: num/den with gcd(num,den)=1, den>0.
// In prime-field mode the invariant tightens to den==1 and 0<=num<p.
struct Scalar {
    BigInt num;
    BigInt den;

    Scalar() : num(0), den(1) {}
    Scalar(long v) : num(v), den(1) {}          // NOLINT(google-explicit-constructor)
    Scalar(BigInt v) : num(std::move(v)), den(1) {}
    Scalar(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {}

    bool is_zero() const { return num == 0; }
    bool is_one() const { return num == 1 && den == 1; }

    bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    }
};

// The coefficient domain of a polynomial registry: exact rationals (used for
// base rings Z and Q and their extensions) or a prime field F_p.
struct CoeffField {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    BigInt p = 0;

    static CoeffField rationals() { return CoeffField{}; }
    static CoeffField prime(BigInt prime_p) {
        CoeffField f;
        f.kind = Kind::Prime;
        f.p = std::move(prime_p);
        return f;
    }

    bool is_prime_field() const { return kind == Kind::Prime; }
    bool operator==(const CoeffField& o) const { return kind == o.kind && p == o.p; }

    Scalar canon(Scalar s) const {
        if (kind == Kind::Prime) {
            if (s.den != 1) {
                // a/b mod p: multiply by b^{-1}
                BigInt d = s.den % p;
                if (d < 0) d += p;
                Scalar inv_den = inv(Scalar(d));
                s.num *= inv_den.num;
                s.den = 1;
            }
            s.num %= p;
            if (s.num < 0) s.num += p;
            return s;
        }
        if (s.den == 0) throw structural_error("scalar with zero denominator");
        if (s.den < 0) {
            s.num = -s.num;
            s.den = -s.den;
        }
        BigInt g = big_gcd(s.num, s.den);
        if (g > 1) {
            s.num /= g;
            s.den /= g;
        }
        if (s.num == 0) s.den = 1;
        return s;
    }

    Scalar add(const Scalar& a, const Scalar& b) const {
        return canon(Scalar(a.num * b.den + b.num * a.den, a.den * b.den));
    }
    Scalar sub(const Scalar& a, const Scalar& b) const {
        return canon(Scalar(a.num * b.den - b.num * a.den, a.den * b.den));
    }
    Scalar mul(const Scalar& a, const Scalar& b) const {
        return canon(Scalar(a.num * b.num, a.den * b.den));
    }
    Scalar neg(const Scalar& a) const { return canon(Scalar(-a.num, a.den)); }

    Scalar inv(const Scalar& a) const {
        if (a.is_zero()) throw contract_violation("inverse of zero");
        if (kind == Kind::Prime) {
            // extended Euclid mod p
            BigInt t = 0, newt = 1, r = p, newr = a.num % p;
            if (newr < 0) newr += p;
            while (newr != 0) {
                BigInt q = r / newr;
                BigInt tmp = t - q * newt;
                t = newt;
                newt = tmp;
                tmp = r - q * newr;
                r = newr;
                newr = tmp;
            }
            if (r != 1) throw contract_violation("p not prime in CoeffField::inv");
            if (t < 0) t += p;
            return Scalar(t);
        }
        return canon(Scalar(a.den, a.num));
    }
};

inline bool is_probable_prime_small(const BigInt& n) {
    if (n < 2) return false;
    for (BigInt d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace igp2h10

#endif
