#ifndef IGP2H10_MULTIPOLY_HPP
#define IGP2H10_MULTIPOLY_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "igp2h10/errors.hpp"
#include "igp2h10/scalar.hpp"

namespace igp2h10 {

// Ordered variable universe shared by all polynomials of one system, plus the
// coefficient domain. Indices are stable; appending variables never reorders
// existing ones, so canonical term order is preserved under growth.
class VarRegistry {
  public:
    explicit VarRegistry(CoeffField field) : field_(std::move(field)) {}

    uint32_t add(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) throw structural_error("duplicate variable: " + name);
        names_.push_back(name);
        uint32_t idx = static_cast<uint32_t>(names_.size() - 1);
        index_.emplace(name, idx);
        return idx;
    }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    uint32_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw structural_error("unknown variable: " + name);
        return it->second;
    }

    const std::string& name_of(uint32_t idx) const { return names_.at(idx); }
    size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const CoeffField& field() const { return field_; }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, uint32_t> index_;
    CoeffField field_;
};

using RegistryPtr = std::shared_ptr<VarRegistry>;

inline RegistryPtr make_registry(CoeffField field) {
    return std::make_shared<VarRegistry>(std::move(field));
}

// Sparse exponent vector, entries sorted by variable index, exponents > 0.
struct Monomial {
    std::vector<std::pair<uint32_t, uint32_t>> factors;

    uint64_t total_degree() const {
        uint64_t d = 0;
        for (const auto& f : factors) d += f.second;
        return d;
    }

    uint32_t exponent_of(uint32_t idx) const {
        for (const auto& f : factors)
            if (f.first == idx) return f.second;
        return 0;
    }

    bool is_constant() const { return factors.empty(); }

    bool operator==(const Monomial& o) const { return factors == o.factors; }

    static Monomial var(uint32_t idx, uint32_t exp = 1) {
        Monomial m;
        if (exp > 0) m.factors.emplace_back(idx, exp);
        return m;
    }

    static Monomial mul(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors.reserve(a.factors.size() + b.factors.size());
        size_t i = 0, j = 0;
        while (i < a.factors.size() && j < b.factors.size()) {
            if (a.factors[i].first < b.factors[j].first)
                r.factors.push_back(a.factors[i++]);
            else if (a.factors[i].first > b.factors[j].first)
                r.factors.push_back(b.factors[j++]);
            else {
                r.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
                ++i;
                ++j;
            }
        }
        for (; i < a.factors.size(); ++i) r.factors.push_back(a.factors[i]);
        for (; j < b.factors.size(); ++j) r.factors.push_back(b.factors[j]);
        return r;
    }
};

// Graded lexicographic order: higher total degree first; ties broken by the
// exponent vector read along registry order (earlier variable, higher power wins).
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first != b.factors[j].first) {
            // the side owning the earlier variable has a positive exponent there
            return a.factors[i].first > b.factors[j].first;
        }
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second < b.factors[j].second;
        ++i;
        ++j;
    }
    if (i < a.factors.size()) return false; // a has an extra (earlier-ordered) factor tail
    if (j < b.factors.size()) return true;
    return false;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

// Exact multivariate polynomial in canonical form: no zero coefficients,
// terms sorted in descending graded-lex order.
class MultiPoly {
  public:
    struct Term {
        Monomial mono;
        Scalar coef;
    };

    MultiPoly() = default;
    explicit MultiPoly(RegistryPtr reg) : reg_(std::move(reg)) {}

    static MultiPoly zero(const RegistryPtr& reg) { return MultiPoly(reg); }

    static MultiPoly constant(const RegistryPtr& reg, Scalar c) {
        MultiPoly p(reg);
        c = reg->field().canon(std::move(c));
        if (!c.is_zero()) p.terms_.push_back(Term{Monomial{}, std::move(c)});
        return p;
    }

    static MultiPoly var(const RegistryPtr& reg, const std::string& name, uint32_t exp = 1) {
        MultiPoly p(reg);
        if (exp == 0) return constant(reg, Scalar(1));
        p.terms_.push_back(Term{Monomial::var(reg->index_of(name), exp), Scalar(1)});
        return p;
    }

    static MultiPoly from_terms(const RegistryPtr& reg, std::vector<Term> terms) {
        std::map<Monomial, Scalar, GrlexGreater> acc;
        const CoeffField& f = reg->field();
        for (auto& t : terms) {
            Scalar c = f.canon(std::move(t.coef));
            if (c.is_zero()) continue;
            auto [it, inserted] = acc.emplace(std::move(t.mono), c);
            if (!inserted) {
                it->second = f.add(it->second, c);
                if (it->second.is_zero()) acc.erase(it);
            }
        }
        MultiPoly p(reg);
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) p.terms_.push_back(Term{m, c});
        return p;
    }

    const RegistryPtr& registry() const { return reg_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant()); }

    Scalar constant_value() const {
        if (terms_.empty()) return Scalar(0);
        if (!is_constant()) throw contract_violation("polynomial is not constant");
        return terms_[0].coef;
    }

    bool operator==(const MultiPoly& o) const {
        if (reg_ != o.reg_) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a.reg_);
        r.terms_.reserve(a.terms_.size());
        const CoeffField& f = a.reg_->field();
        for (const auto& t : a.terms_) r.terms_.push_back(Term{t.mono, f.neg(t.coef)});
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_same_registry(a, b);
        const CoeffField& f = a.reg_->field();
        MultiPoly r(a.reg_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            const Monomial &ma = a.terms_[i].mono, &mb = b.terms_[j].mono;
            if (grlex_less(mb, ma)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (grlex_less(ma, mb)) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Scalar c = f.add(a.terms_[i].coef, b.terms_[j].coef);
                if (!c.is_zero()) r.terms_.push_back(Term{ma, std::move(c)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_same_registry(a, b);
        const CoeffField& f = a.reg_->field();
        std::map<Monomial, Scalar, GrlexGreater> acc;
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                Monomial m = Monomial::mul(ta.mono, tb.mono);
                Scalar c = f.mul(ta.coef, tb.coef);
                auto [it, inserted] = acc.emplace(std::move(m), c);
                if (!inserted) {
                    it->second = f.add(it->second, c);
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        MultiPoly r(a.reg_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) r.terms_.push_back(Term{m, c});
        return r;
    }

    MultiPoly scaled(const Scalar& s) const {
        const CoeffField& f = reg_->field();
        Scalar cs = f.canon(s);
        if (cs.is_zero()) return MultiPoly(reg_);
        MultiPoly r(reg_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, f.mul(t.coef, cs)});
        return r;
    }

    // multiply by a single monomial; grlex is multiplication-invariant so order holds
    MultiPoly shifted(const Monomial& m) const {
        if (m.is_constant()) return *this;
        MultiPoly r(reg_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term{Monomial::mul(t.mono, m), t.coef});
        return r;
    }

    int degree_in(uint32_t idx) const {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exponent_of(idx)));
        return d;
    }

    // coefficients with respect to one variable: result[k] has the variable stripped
    std::map<int, MultiPoly> coefficients_in(uint32_t idx) const {
        std::map<int, std::vector<Term>> buckets;
        for (const auto& t : terms_) {
            Monomial stripped;
            uint32_t e = 0;
            for (const auto& fct : t.mono.factors) {
                if (fct.first == idx)
                    e = fct.second;
                else
                    stripped.factors.push_back(fct);
            }
            buckets[static_cast<int>(e)].push_back(Term{std::move(stripped), t.coef});
        }
        std::map<int, MultiPoly> out;
        for (auto& [k, ts] : buckets) out.emplace(k, MultiPoly::from_terms(reg_, std::move(ts)));
        return out;
    }

    size_t max_term_estimate(const MultiPoly& o) const { return terms_.size() * o.terms_.size(); }

  private:
    static void check_same_registry(const MultiPoly& a, const MultiPoly& b) {
        if (a.reg_ != b.reg_) throw structural_error("registry mismatch between polynomials");
    }

    RegistryPtr reg_;
    std::vector<Term> terms_;
};

enum class PolyOp { Add, Mul, Neg };

inline MultiPoly poly_arith(PolyOp op, const MultiPoly& a, const MultiPoly& b) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Mul: return a * b;
        case PolyOp::Neg: return -a;
    }
    throw contract_violation("unknown op");
}

inline MultiPoly poly_pow(const MultiPoly& base, uint32_t e) {
    MultiPoly r = MultiPoly::constant(base.registry(), Scalar(1));
    for (uint32_t i = 0; i < e; ++i) r = r * base;
    return r;
}

// Simultaneous substitution variable -> polynomial; untouched variables persist.
inline MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
    const RegistryPtr& reg = p.registry();
    std::unordered_map<uint32_t, const MultiPoly*> by_idx;
    for (const auto& [name, poly] : bindings) {
        uint32_t idx = reg->index_of(name); // throws on unknown variable
        if (poly.registry() != reg) throw structural_error("binding registry mismatch for " + name);
        by_idx.emplace(idx, &poly);
    }
    MultiPoly acc = MultiPoly::zero(reg);
    for (const auto& t : p.terms()) {
        MultiPoly term_val = MultiPoly::constant(reg, t.coef);
        Monomial remaining;
        for (const auto& [idx, exp] : t.mono.factors) {
            auto it = by_idx.find(idx);
            if (it == by_idx.end())
                remaining.factors.emplace_back(idx, exp);
            else
                term_val = term_val * poly_pow(*it->second, exp);
        }
        acc = acc + term_val.shifted(remaining);
    }
    return acc;
}

// Full evaluation; every variable occurring in p must be bound.
inline Scalar evaluate(const MultiPoly& p, const std::map<std::string, Scalar>& values) {
    const RegistryPtr& reg = p.registry();
    const CoeffField& f = reg->field();
    std::unordered_map<uint32_t, Scalar> by_idx;
    for (const auto& [name, v] : values)
        if (reg->contains(name)) by_idx.emplace(reg->index_of(name), f.canon(v));
    Scalar acc(0);
    for (const auto& t : p.terms()) {
        Scalar tv = t.coef;
        for (const auto& [idx, exp] : t.mono.factors) {
            auto it = by_idx.find(idx);
            if (it == by_idx.end())
                throw structural_error("unbound variable in evaluation: " + reg->name_of(idx));
            for (uint32_t k = 0; k < exp; ++k) tv = f.mul(tv, it->second);
        }
        acc = f.add(acc, tv);
    }
    return acc;
}

// ---- canonical text form -------------------------------------------------
// Terms in descending graded-lex order, explicit integer (or num/den)
// coefficients, '^' powers, '*' products, " + " / " - " separators.

inline std::string poly_text(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    const RegistryPtr& reg = p.registry();
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool negative = t.coef.num < 0;
        Scalar mag = t.coef;
        if (negative) mag.num = -mag.num;
        std::string body;
        if (t.mono.is_constant()) {
            body = mag.str();
        } else {
            if (!mag.is_one()) body = mag.str() + "*";
            bool first_factor = true;
            for (const auto& [idx, exp] : t.mono.factors) {
                if (!first_factor) body += "*";
                body += reg->name_of(idx);
                if (exp != 1) body += "^" + std::to_string(exp);
                first_factor = false;
            }
        }
        if (first) {
            out = negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

inline MultiPoly parse_poly(const RegistryPtr& reg, const std::string& text) {
    std::vector<MultiPoly::Term> terms;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] { while (i < n && text[i] == ' ') ++i; };
    skip_ws();
    if (text.substr(i) == "0") return MultiPoly::zero(reg);
    bool neg = false;
    if (i < n && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    while (i < n) {
        skip_ws();
        // one term: factors separated by '*'
        Monomial mono;
        Scalar coef(1);
        bool saw_factor = false;
        while (i < n) {
            skip_ws();
            if (i >= n) break;
            char c = text[i];
            if (c == '+' || c == '-') break;
            if (c == '*') {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = i;
                while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                BigInt num(text.substr(i, j - i));
                i = j;
                BigInt den = 1;
                if (i < n && text[i] == '/') {
                    ++i;
                    size_t k = i;
                    while (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                    if (k == i) throw parse_error("malformed rational in polynomial: " + text);
                    den = BigInt(text.substr(i, k - i));
                    i = k;
                }
                coef = reg->field().mul(coef, reg->field().canon(Scalar(num, den)));
            } else {
                // variable name: run of chars excluding separators
                size_t j = i;
                while (j < n && text[j] != '*' && text[j] != '^' && text[j] != ' ' && text[j] != '+' &&
                       text[j] != '-')
                    ++j;
                std::string name = text.substr(i, j - i);
                i = j;
                uint32_t exp = 1;
                if (i < n && text[i] == '^') {
                    ++i;
                    size_t k = i;
                    while (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                    if (k == i) throw parse_error("malformed exponent in polynomial: " + text);
                    exp = static_cast<uint32_t>(std::stoul(text.substr(i, k - i)));
                    i = k;
                }
                if (!reg->contains(name)) throw parse_error("unknown variable in polynomial: " + name);
                mono = Monomial::mul(mono, Monomial::var(reg->index_of(name), exp));
            }
            saw_factor = true;
        }
        if (!saw_factor) throw parse_error("empty term in polynomial: " + text);
        if (neg) coef = reg->field().neg(coef);
        terms.push_back(MultiPoly::Term{std::move(mono), std::move(coef)});
        skip_ws();
        if (i >= n) break;
        if (text[i] == '+')
            neg = false;
        else if (text[i] == '-')
            neg = true;
        else
            throw parse_error("unexpected character in polynomial: " + text.substr(i));
        ++i;
    }
    return MultiPoly::from_terms(reg, std::move(terms));
}

} // namespace igp2h10

#endif
