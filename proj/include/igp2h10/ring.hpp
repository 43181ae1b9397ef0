#ifndef IGP2H10_RING_HPP
#define IGP2H10_RING_HPP

#include <string>
#include <vector>

#include "igp2h10/multipoly.hpp"
#include "igp2h10/scalar.hpp"

namespace igp2h10 {

// Base ring R, its fraction field K, and the extension L = K(alpha) given by a
// monic integer minimal polynomial. Degree 1 means L = K and no alpha layer.
struct RingDescriptor {
    enum class Base { Integers, Rationals, PrimeField };

    Base base = Base::Rationals;
    BigInt p = 0;                       // prime-field characteristic
    std::vector<BigInt> alpha_minpoly;  // dense, low to high, monic, degree n
    int n = 1;

    static RingDescriptor rationals() { return with_base(Base::Rationals); }
    static RingDescriptor integers() { return with_base(Base::Integers); }

    static RingDescriptor prime_field(BigInt prime_p) {
        if (!is_probable_prime_small(prime_p))
            throw contract_violation("Fp characteristic must be prime, got " + prime_p.str());
        RingDescriptor r = with_base(Base::PrimeField);
        r.p = std::move(prime_p);
        return r;
    }

    static RingDescriptor number_field(std::vector<BigInt> minpoly) {
        RingDescriptor r = with_base(Base::Rationals);
        if (minpoly.size() < 2) throw contract_violation("number field minpoly needs degree >= 1");
        if (minpoly.back() != 1) throw contract_violation("number field minpoly must be monic");
        r.alpha_minpoly = std::move(minpoly);
        r.n = static_cast<int>(r.alpha_minpoly.size()) - 1;
        return r;
    }

    bool is_field() const { return base != Base::Integers; }
    bool is_prime_field() const { return base == Base::PrimeField; }

    CoeffField coeff_field() const {
        return is_prime_field() ? CoeffField::prime(p) : CoeffField::rationals();
    }

    MultiPoly minpoly_as_poly(const RegistryPtr& reg, const std::string& var) const {
        std::vector<MultiPoly::Term> terms;
        uint32_t idx = reg->index_of(var);
        for (size_t k = 0; k < alpha_minpoly.size(); ++k)
            terms.push_back(MultiPoly::Term{Monomial::var(idx, static_cast<uint32_t>(k)), Scalar(alpha_minpoly[k])});
        return MultiPoly::from_terms(reg, std::move(terms));
    }

    std::string spec_string() const {
        switch (base) {
            case Base::Rationals:
                if (n == 1) return "Q";
                break;
            case Base::Integers:
                return "Z";
            case Base::PrimeField:
                return "Fp p=" + p.str();
        }
        std::string s = "numberfield minpoly=";
        for (size_t k = 0; k < alpha_minpoly.size(); ++k) {
            if (k) s += ",";
            s += alpha_minpoly[k].str();
        }
        return s;
    }

    bool operator==(const RingDescriptor& o) const {
        return base == o.base && p == o.p && n == o.n && alpha_minpoly == o.alpha_minpoly;
    }

  private:
    static RingDescriptor with_base(Base b) {
        RingDescriptor r;
        r.base = b;
        r.alpha_minpoly = {BigInt(0), BigInt(1)}; // degree-1 placeholder, L = K
        r.n = 1;
        return r;
    }
};

// Mini-grammar: "Q" | "Z" | "Fp p=<prime>" | "numberfield minpoly=<c0,c1,...,1>"
inline RingDescriptor parse_ring_spec(const std::string& spec) {
    auto trim = [](std::string s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    };
    std::string s = trim(spec);
    if (s == "Q") return RingDescriptor::rationals();
    if (s == "Z") return RingDescriptor::integers();
    if (s.rfind("Fp", 0) == 0) {
        auto pos = s.find("p=");
        if (pos == std::string::npos) throw parse_error("ring spec: expected 'Fp p=<prime>', got " + spec);
        std::string num = trim(s.substr(pos + 2));
        if (num.empty()) throw parse_error("ring spec: missing prime in " + spec);
        try {
            return RingDescriptor::prime_field(BigInt(num));
        } catch (const contract_violation& e) {
            throw parse_error(std::string("ring spec: ") + e.what());
        }
    }
    if (s.rfind("numberfield", 0) == 0) {
        auto pos = s.find("minpoly=");
        if (pos == std::string::npos)
            throw parse_error("ring spec: expected 'numberfield minpoly=<coeffs>', got " + spec);
        std::string list = trim(s.substr(pos + 8));
        std::vector<BigInt> coeffs;
        size_t start = 0;
        while (start <= list.size()) {
            size_t comma = list.find(',', start);
            std::string tok = trim(list.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (tok.empty()) throw parse_error("ring spec: empty minpoly coefficient in " + spec);
            coeffs.emplace_back(tok);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        try {
            return RingDescriptor::number_field(std::move(coeffs));
        } catch (const contract_violation& e) {
            throw parse_error(std::string("ring spec: ") + e.what());
        }
    }
    throw parse_error("unrecognized ring spec: " + spec);
}

} // namespace igp2h10

#endif
