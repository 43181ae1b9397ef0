#ifndef IGP2H10_ORACLE_HPP
#define IGP2H10_ORACLE_HPP

#include <complex>
#include <optional>
#include <sstream>

#include "igp2h10/encoder.hpp"

namespace igp2h10 {

// ---- dense univariate layer -------------------------------------------------

namespace uni {

using Dense = std::vector<Scalar>; // coefficients low to high, trimmed

inline void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int deg(const Dense& p) { return static_cast<int>(p.size()) - 1; }

inline Dense mul(const Dense& a, const Dense& b, const CoeffField& f) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    trim(r);
    return r;
}

inline Dense sub(Dense a, const Dense& b, const CoeffField& f) {
    if (a.size() < b.size()) a.resize(b.size(), Scalar(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(a);
    return a;
}

// division with remainder; divisor's leading coefficient must be invertible
inline std::pair<Dense, Dense> divmod(Dense a, const Dense& b, const CoeffField& f) {
    if (b.empty()) throw contract_violation("division by zero polynomial");
    Scalar lead_inv = f.inv(b.back());
    int db = deg(b);
    Dense q;
    while (deg(a) >= db) {
        int shift = deg(a) - db;
        Scalar c = f.mul(a.back(), lead_inv);
        if (static_cast<int>(q.size()) < shift + 1) q.resize(static_cast<size_t>(shift) + 1, Scalar(0));
        q[static_cast<size_t>(shift)] = c;
        for (int k = 0; k <= db; ++k) {
            size_t at = static_cast<size_t>(k + shift);
            a[at] = f.sub(a[at], f.mul(c, b[static_cast<size_t>(k)]));
        }
        trim(a);
    }
    trim(a);
    return {q, a};
}

inline Dense mod(const Dense& a, const Dense& b, const CoeffField& f) { return divmod(a, b, f).second; }

inline Dense pow_mod(Dense base, BigInt e, const Dense& m, const CoeffField& f) {
    Dense r{Scalar(1)};
    base = mod(base, m, f);
    while (e > 0) {
        if (e % 2 == 1) r = mod(mul(r, base, f), m, f);
        base = mod(mul(base, base, f), m, f);
        e /= 2;
    }
    return r;
}

inline Scalar eval(const Dense& p, const Scalar& x, const CoeffField& f) {
    Scalar acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
    return acc;
}

inline Dense from_multipoly(const MultiPoly& p, const std::string& var) {
    const RegistryPtr& reg = p.registry();
    uint32_t idx = reg->index_of(var);
    Dense out;
    for (const auto& t : p.terms()) {
        uint32_t e = 0;
        for (const auto& [vi, ve] : t.mono.factors) {
            if (vi != idx) throw contract_violation("polynomial is not univariate in " + var);
            e = ve;
        }
        if (out.size() < static_cast<size_t>(e) + 1) out.resize(static_cast<size_t>(e) + 1, Scalar(0));
        out[static_cast<size_t>(e)] = t.coef;
    }
    trim(out);
    return out;
}

inline MultiPoly to_multipoly(const RegistryPtr& reg, const std::string& var, const Dense& p) {
    std::vector<MultiPoly::Term> terms;
    uint32_t idx = reg->index_of(var);
    for (size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) terms.push_back(MultiPoly::Term{Monomial::var(idx, static_cast<uint32_t>(k)), p[k]});
    return MultiPoly::from_terms(reg, std::move(terms));
}

} // namespace uni

// ---- finite-field factorization ----------------------------------------------

namespace fpfactor {

// monic polynomials of the given degree in ascending coefficient-odometer order
inline uni::Dense nth_monic(BigInt index, int degree, const BigInt& p) {
    uni::Dense out(static_cast<size_t>(degree) + 1, Scalar(0));
    out[static_cast<size_t>(degree)] = Scalar(1);
    for (int k = 0; k < degree; ++k) {
        out[static_cast<size_t>(k)] = Scalar(index % p);
        index /= p;
    }
    return out;
}

inline BigInt monic_count(int degree, const BigInt& p) {
    BigInt c = 1;
    for (int k = 0; k < degree; ++k) c *= p;
    return c;
}

inline bool divides(const uni::Dense& t, const uni::Dense& g, const CoeffField& f) {
    return uni::mod(g, t, f).empty();
}

inline bool is_irreducible(const uni::Dense& g, const CoeffField& f) {
    int d = uni::deg(g);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int dt = 1; dt <= d / 2; ++dt) {
        BigInt count = monic_count(dt, f.p);
        for (BigInt i = 0; i < count; ++i)
            if (divides(nth_monic(i, dt, f.p), g, f)) return false;
    }
    return true;
}

} // namespace fpfactor

// Complete factorization by trial division against all monic polynomials of
// degree <= deg(f)/2, ascending; the product of factors re-multiplies to f.
inline std::vector<std::pair<MultiPoly, int>> factor_over_prime_field(const MultiPoly& fpoly, const BigInt& p,
                                                                      const std::string& var = "x") {
    if (!is_probable_prime_small(p)) throw contract_violation("factor_over_prime_field needs a prime");
    CoeffField f = CoeffField::prime(p);
    uni::Dense g = uni::from_multipoly(fpoly, var);
    for (auto& c : g) c = f.canon(c);
    uni::trim(g);
    int d = uni::deg(g);
    if (d < 1) throw contract_violation("factor_over_prime_field needs positive degree");
    if (d > 12) throw cap_exceeded("factor_over_prime_field degree cap is 12", std::to_string(d));
    if (!g.back().is_one()) throw contract_violation("factor_over_prime_field needs a monic input");

    std::vector<std::pair<uni::Dense, int>> found;
    for (int dt = 1; dt <= d / 2 && uni::deg(g) >= 2 * dt; ++dt) {
        BigInt count = fpfactor::monic_count(dt, p);
        for (BigInt i = 0; i < count && uni::deg(g) >= dt; ++i) {
            uni::Dense t = fpfactor::nth_monic(i, dt, p);
            int mult = 0;
            while (uni::deg(g) >= dt && fpfactor::divides(t, g, f)) {
                g = uni::divmod(g, t, f).first;
                ++mult;
            }
            if (mult > 0) found.emplace_back(t, mult);
        }
    }
    if (uni::deg(g) >= 1) found.emplace_back(g, 1); // the remaining cofactor is irreducible
    std::vector<std::pair<MultiPoly, int>> out;
    for (auto& [dense, mult] : found) out.emplace_back(uni::to_multipoly(fpoly.registry(), var, dense), mult);
    return out;
}

// ---- irreducibility over Q (rational roots + Kronecker interpolation) --------

struct RationalFactorResult {
    bool irreducible = false;
    std::optional<std::pair<MultiPoly, MultiPoly>> split; // (factor, cofactor) when reducible
};

namespace kron {

inline std::vector<BigInt> divisors_signed(BigInt v) {
    if (v < 0) v = -v;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v) out.push_back(v / d);
        }
    std::sort(out.begin(), out.end());
    std::vector<BigInt> both;
    for (const auto& d : out) {
        both.push_back(d);
        both.push_back(-d);
    }
    return both;
}

// Lagrange interpolation through (xs[i], ys[i]) over Q
inline uni::Dense interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
    CoeffField q = CoeffField::rationals();
    size_t n = xs.size();
    uni::Dense acc; // zero
    for (size_t i = 0; i < n; ++i) {
        uni::Dense basis{Scalar(1)};
        Scalar denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            basis = uni::mul(basis, uni::Dense{Scalar(-xs[j]), Scalar(1)}, q);
            denom = q.mul(denom, Scalar(xs[i] - xs[j]));
        }
        Scalar w = q.mul(Scalar(ys[i]), q.inv(denom));
        for (auto& c : basis) c = q.mul(c, w);
        acc = uni::sub(acc, basis, q);
        for (auto& c : acc) c = q.neg(c); // acc += basis
        uni::trim(acc);
    }
    return acc;
}

} // namespace kron

// Decides irreducibility over Q for monic integer polynomials of degree <= 6:
// rational-root test plus Kronecker interpolation factoring, all exact.
inline RationalFactorResult rational_factor_smalldeg(const MultiPoly& fpoly, const std::string& var = "x") {
    CoeffField q = CoeffField::rationals();
    uni::Dense f = uni::from_multipoly(fpoly, var);
    int d = uni::deg(f);
    if (d < 1) throw contract_violation("rational_factor_smalldeg needs positive degree");
    if (d > 6) throw cap_exceeded("rational_factor_smalldeg degree cap is 6", std::to_string(d));
    if (!f.back().is_one()) throw contract_violation("rational_factor_smalldeg needs a monic input");
    for (const auto& c : f)
        if (c.den != 1) throw contract_violation("rational_factor_smalldeg needs integer coefficients");

    const RegistryPtr& reg = fpoly.registry();
    RationalFactorResult res;
    auto emit_split = [&](const uni::Dense& factor) {
        auto [quot, rem] = uni::divmod(f, factor, q);
        if (!rem.empty()) throw contract_violation("internal: candidate factor does not divide");
        res.irreducible = false;
        res.split = std::make_pair(uni::to_multipoly(reg, var, factor), uni::to_multipoly(reg, var, quot));
    };

    if (d == 1) {
        res.irreducible = true;
        return res;
    }

    // monic + integer coefficients: any rational root is an integer dividing f(0)
    if (f[0].is_zero()) {
        emit_split(uni::Dense{Scalar(0), Scalar(1)}); // x divides
        return res;
    }
    for (const auto& r : kron::divisors_signed(f[0].num)) {
        if (uni::eval(f, Scalar(r), q).is_zero()) {
            emit_split(uni::Dense{Scalar(-r), Scalar(1)});
            return res;
        }
    }
    if (d <= 3) {
        res.irreducible = true; // no root and degree <= 3
        return res;
    }

    // Kronecker: a monic degree-g factor takes values dividing f(x_i) at g+1 points
    const std::vector<BigInt> points = {BigInt(0), BigInt(1), BigInt(-1), BigInt(2)};
    for (int fg = 2; fg <= d / 2; ++fg) {
        std::vector<BigInt> xs(points.begin(), points.begin() + fg + 1);
        std::vector<std::vector<BigInt>> value_choices;
        BigInt combos = 1;
        for (const auto& x : xs) {
            Scalar v = uni::eval(f, Scalar(x), q);
            auto divs = kron::divisors_signed(v.num);
            combos *= BigInt(static_cast<long>(divs.size()));
            value_choices.push_back(std::move(divs));
        }
        if (combos > 2000000) throw cap_exceeded("Kronecker divisor enumeration too large", combos.str());
        std::vector<size_t> pick(xs.size(), 0);
        while (true) {
            std::vector<BigInt> ys;
            for (size_t i = 0; i < xs.size(); ++i) ys.push_back(value_choices[i][pick[i]]);
            uni::Dense cand = kron::interpolate(xs, ys);
            if (uni::deg(cand) == fg && cand.back().is_one()) {
                bool integral = true;
                for (const auto& c : cand)
                    if (c.den != 1) integral = false;
                if (integral && uni::mod(f, cand, q).empty()) {
                    emit_split(cand);
                    return res;
                }
            }
            size_t at = 0;
            while (at < pick.size()) {
                if (++pick[at] < value_choices[at].size()) break;
                pick[at] = 0;
                ++at;
            }
            if (at == pick.size()) break;
        }
    }
    res.irreducible = true;
    return res;
}

// ---- Galois probe over Q ----------------------------------------------------
// Positive answers are produced by numeric root finding (80-bit floats),
// rational rounding, and exact verification via compose_mod; the numeric stage
// is untrusted and can never produce a wrong certificate.

struct GaloisProbeResult {
    enum class Verdict { GaloisWithWitness, NotGaloisCertified, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::vector<MultiPoly> conjugations; // h_2..h_d on success (h_1 = x implicit)
    std::string notes;
};

namespace probe {

using Cplx = std::complex<long double>;

inline std::vector<Cplx> aberth_roots(const std::vector<long double>& monic_coeffs) {
    int d = static_cast<int>(monic_coeffs.size()) - 1;
    auto eval = [&](Cplx z) {
        Cplx acc = 0;
        for (int i = d; i >= 0; --i) acc = acc * z + monic_coeffs[static_cast<size_t>(i)];
        return acc;
    };
    auto eval_d = [&](Cplx z) {
        Cplx acc = 0;
        for (int i = d; i >= 1; --i) acc = acc * z + monic_coeffs[static_cast<size_t>(i)] * static_cast<long double>(i);
        return acc;
    };
    long double radius = 1;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(monic_coeffs[static_cast<size_t>(i)]));
    radius += 1;
    std::vector<Cplx> z(static_cast<size_t>(d));
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int k = 0; k < d; ++k)
        z[static_cast<size_t>(k)] = std::polar(radius, 2 * pi * (k + 0.25L) / d);
    for (int iter = 0; iter < 400; ++iter) {
        long double worst = 0;
        for (int k = 0; k < d; ++k) {
            Cplx p = eval(z[static_cast<size_t>(k)]);
            worst = std::max(worst, std::abs(p));
            Cplx dp = eval_d(z[static_cast<size_t>(k)]);
            if (std::abs(dp) < 1e-30L) continue;
            Cplx w = p / dp;
            Cplx s = 0;
            for (int j = 0; j < d; ++j)
                if (j != k) s += Cplx(1) / (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
            z[static_cast<size_t>(k)] -= w / (Cplx(1) - w * s);
        }
        if (worst < 1e-17L) break;
    }
    std::sort(z.begin(), z.end(), [](const Cplx& a, const Cplx& b) {
        if (std::abs(a.real() - b.real()) > 1e-9L) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

// continued-fraction rounding with bounded denominator
inline std::optional<Scalar> round_rational(long double v, long denom_bound, long double tol) {
    long double x = v;
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        long double fl = std::floor(x);
        BigInt a(static_cast<long long>(fl));
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > denom_bound) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        long double frac = x - fl;
        if (frac < 1e-15L) break;
        x = 1 / frac;
    }
    if (q1 == 0) return std::nullopt;
    long double approx = static_cast<long double>(p1.convert_to<long long>()) /
                         static_cast<long double>(q1.convert_to<long long>());
    if (std::abs(approx - v) > tol) return std::nullopt;
    CoeffField q = CoeffField::rationals();
    return q.canon(Scalar(p1, q1));
}

// discriminant of x^3 + a x^2 + b x + c
inline BigInt cubic_discriminant(const BigInt& a, const BigInt& b, const BigInt& c) {
    return BigInt(18) * a * b * c - BigInt(4) * a * a * a * c + a * a * b * b - BigInt(4) * b * b * b -
           BigInt(27) * c * c;
}

inline bool is_perfect_square(const BigInt& v) {
    if (v < 0) return false;
    BigInt r = boost::multiprecision::sqrt(v);
    return r * r == v;
}

} // namespace probe

inline GaloisProbeResult galois_probe_rationals(const MultiPoly& fpoly, const std::string& var = "x",
                                                long denom_bound = 10000, long double round_tol = 1e-9L) {
    GaloisProbeResult out;
    uni::Dense f = uni::from_multipoly(fpoly, var);
    int d = uni::deg(f);
    if (d < 1 || d > 5)
        throw cap_exceeded("galois_probe_rationals degree cap is 5", std::to_string(d));
    auto irr = rational_factor_smalldeg(fpoly, var);
    if (!irr.irreducible) throw contract_violation("galois_probe_rationals requires an irreducible input");

    const RegistryPtr& reg = fpoly.registry();
    std::ostringstream notes;
    notes << "root-finding: 80-bit Aberth; rational rounding denominator bound " << denom_bound
          << "; exact gate: compose_mod";
    out.notes = notes.str();

    if (d == 1) {
        out.verdict = GaloisProbeResult::Verdict::GaloisWithWitness;
        return out;
    }
    if (d == 2) {
        // beta_2 = -c1 - beta: exact, no numerics needed
        MultiPoly x = MultiPoly::var(reg, var);
        MultiPoly h = -x - MultiPoly::constant(reg, f[1]);
        bool ok = true;
        for (const auto& c : compose_mod(fpoly, h, var))
            if (!c.is_zero()) ok = false;
        if (ok) {
            out.verdict = GaloisProbeResult::Verdict::GaloisWithWitness;
            out.conjugations = {h};
            return out;
        }
        out.verdict = GaloisProbeResult::Verdict::Unknown;
        return out;
    }

    // exact negative certificate for cubics: irreducible cubic is Galois iff
    // its discriminant is a rational square
    if (d == 3) {
        for (const auto& c : f)
            if (c.den != 1) throw contract_violation("probe expects integer coefficients (clear denominators first)");
        BigInt disc = probe::cubic_discriminant(f[2].num, f[1].num, f[0].num);
        if (!probe::is_perfect_square(disc)) {
            out.verdict = GaloisProbeResult::Verdict::NotGaloisCertified;
            out.notes += "; cubic discriminant " + disc.str() + " is not a square";
            return out;
        }
    }

    std::vector<long double> coeffs;
    for (const auto& c : f)
        coeffs.push_back(static_cast<long double>(c.num.convert_to<long long>()) /
                         static_cast<long double>(c.den.convert_to<long long>()));
    auto roots = probe::aberth_roots(coeffs);

    // candidate conjugation h for target root i: h interpolates root_k -> root_{pi(k)}
    // across a candidate permutation pi with pi(0) = i
    std::vector<MultiPoly> verified;
    std::vector<int> targets;
    for (int i = 1; i < d && static_cast<int>(verified.size()) < d - 1; ++i) {
        bool found = false;
        std::vector<int> perm(static_cast<size_t>(d));
        for (int k = 0; k < d; ++k) perm[static_cast<size_t>(k)] = k;
        std::sort(perm.begin(), perm.end());
        do {
            if (perm[0] != i) continue;
            // Lagrange through (roots[k], roots[perm[k]]) in complex arithmetic
            bool degenerate = false;
            std::vector<probe::Cplx> hc(static_cast<size_t>(d), 0);
            for (int k = 0; k < d && !degenerate; ++k) {
                std::vector<probe::Cplx> basis{1};
                probe::Cplx denom = 1;
                for (int j = 0; j < d; ++j) {
                    if (j == k) continue;
                    std::vector<probe::Cplx> nb(basis.size() + 1, 0);
                    for (size_t b = 0; b < basis.size(); ++b) {
                        nb[b] += basis[b] * (-roots[static_cast<size_t>(j)]);
                        nb[b + 1] += basis[b];
                    }
                    basis = std::move(nb);
                    denom *= roots[static_cast<size_t>(k)] - roots[static_cast<size_t>(j)];
                }
                if (std::abs(denom) < 1e-20L) {
                    degenerate = true;
                    break;
                }
                probe::Cplx w = roots[static_cast<size_t>(perm[static_cast<size_t>(k)])] / denom;
                for (size_t b = 0; b < basis.size(); ++b) hc[b] += basis[b] * w;
            }
            if (degenerate) continue;
            // round to rationals; imaginary parts must vanish
            std::vector<Scalar> hr;
            bool roundable = true;
            for (int b = 0; b < d && roundable; ++b) {
                if (std::abs(hc[static_cast<size_t>(b)].imag()) > round_tol) {
                    roundable = false;
                    break;
                }
                auto r = probe::round_rational(hc[static_cast<size_t>(b)].real(), denom_bound, round_tol);
                if (!r) {
                    roundable = false;
                    break;
                }
                hr.push_back(*r);
            }
            if (!roundable) continue;
            uni::Dense hd(hr.begin(), hr.end());
            uni::trim(hd);
            MultiPoly h = uni::to_multipoly(reg, var, hd);
            bool exact = true;
            for (const auto& c : compose_mod(fpoly, h, var))
                if (!c.is_zero()) exact = false;
            if (!exact) continue;
            bool duplicate = false;
            MultiPoly ident = MultiPoly::var(reg, var);
            if (h == ident) continue;
            for (const auto& v : verified)
                if (v == h) duplicate = true;
            if (duplicate) continue;
            verified.push_back(h);
            targets.push_back(i);
            found = true;
            break;
        } while (std::next_permutation(perm.begin(), perm.end()));
        (void)found;
    }

    if (static_cast<int>(verified.size()) == d - 1) {
        out.verdict = GaloisProbeResult::Verdict::GaloisWithWitness;
        out.conjugations = std::move(verified);
        return out;
    }
    if (d == 3) {
        // square discriminant but numerics failed to land a witness
        out.verdict = GaloisProbeResult::Verdict::Unknown;
        return out;
    }
    out.verdict = GaloisProbeResult::Verdict::Unknown;
    return out;
}

// ---- witnesses and verification ----------------------------------------------

struct Witness {
    std::map<std::string, Scalar> assignment;
};

inline std::string serialize_witness(const Witness& w) {
    std::string out = "witness v1\n";
    for (const auto& [name, v] : w.assignment)
        out += name + " = " + v.num.str() + "/" + v.den.str() + "\n";
    return out;
}

inline Witness parse_witness(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "witness v1") throw parse_error("missing 'witness v1' header");
    Witness w;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw parse_error("malformed witness line: " + line);
        auto trim = [](std::string s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
            return s;
        };
        std::string name = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        auto slash = val.find('/');
        try {
            if (slash == std::string::npos)
                w.assignment[name] = Scalar(BigInt(val));
            else
                w.assignment[name] = Scalar(BigInt(val.substr(0, slash)), BigInt(val.substr(slash + 1)));
        } catch (const std::exception&) {
            throw parse_error("malformed witness value: " + line);
        }
    }
    return w;
}

struct VerifyReport {
    struct Line {
        std::string label;
        std::string detail;
        bool ok = false;
    };
    bool accepted = false;
    std::vector<Line> equation_lines;
    std::vector<Line> disequation_lines;
    std::vector<Line> predicate_lines;

    std::string text() const {
        std::string out;
        for (const auto& l : equation_lines)
            out += l.label + ": residual = " + l.detail + (l.ok ? "" : "  [FAIL]") + "\n";
        for (const auto& l : disequation_lines) out += l.label + ": " + l.detail + (l.ok ? "" : "  [FAIL]") + "\n";
        for (const auto& l : predicate_lines) out += l.label + ": " + l.detail + (l.ok ? "" : "  [FAIL]") + "\n";
        out += accepted ? "accepted\n" : "rejected\n";
        return out;
    }
};

namespace oracle_detail {

// Reassembles the monic polynomial described by an irreducible(d) predicate
// from witness values, as a univariate over a scratch rational/Fp registry.
inline MultiPoly predicate_poly(const DiophSystem& sys, const PredicateConstraint& pred,
                                const std::map<std::string, Scalar>& vals, const RegistryPtr& scratch) {
    int d = pred.degree;
    int n = sys.ring.n;
    if (static_cast<int>(pred.vars.size()) != d * n)
        throw structural_error("irreducible predicate arity mismatch");
    if (n > 1)
        throw structural_error("irreducibility over extension fields is not realized by the oracle; "
                               "splice a definition instead");
    std::vector<MultiPoly::Term> terms;
    uint32_t xid = scratch->index_of("x");
    terms.push_back(MultiPoly::Term{Monomial::var(xid, static_cast<uint32_t>(d)), Scalar(1)});
    for (int k = 0; k < d; ++k) {
        auto it = vals.find(pred.vars[static_cast<size_t>(k)]);
        if (it == vals.end()) throw structural_error("witness missing variable " + pred.vars[static_cast<size_t>(k)]);
        if (!it->second.is_zero())
            terms.push_back(MultiPoly::Term{Monomial::var(xid, static_cast<uint32_t>(k)), it->second});
    }
    return MultiPoly::from_terms(scratch, std::move(terms));
}

inline bool check_irreducible_value(const DiophSystem& sys, const PredicateConstraint& pred,
                                    const std::map<std::string, Scalar>& vals, std::string& detail) {
    auto scratch = make_registry(sys.ring.coeff_field());
    scratch->add("x");
    MultiPoly f = predicate_poly(sys, pred, vals, scratch);
    if (pred.degree == 1) {
        detail = "degree 1 is irreducible";
        return true;
    }
    if (sys.ring.is_prime_field()) {
        bool irr = fpfactor::is_irreducible(uni::from_multipoly(f, "x"), sys.ring.coeff_field());
        detail = poly_text(f) + (irr ? " irreducible over F_p" : " reducible over F_p");
        return irr;
    }
    // rational/integer mode: clear denominators first (root scaling preserves
    // irreducibility), then the exact small-degree decision
    auto [cleared, b] = clear_denominators(f, "x");
    auto res = rational_factor_smalldeg(cleared, "x");
    detail = poly_text(cleared) + (res.irreducible ? " irreducible over Q" : " reducible over Q");
    if (!res.irreducible && res.split)
        detail += " (factor " + poly_text(res.split->first) + ")";
    return res.irreducible;
}

} // namespace oracle_detail

// Exact witness check: every equation's residual, disequation witnesses, and
// predicate verdicts under the oracle realization.
inline VerifyReport verify_witness(const DiophSystem& sys, const Witness& w) {
    const CoeffField fld = sys.ring.coeff_field();
    std::map<std::string, Scalar> vals;
    for (const auto& v : sys.variables) {
        auto it = w.assignment.find(v.name);
        if (it == w.assignment.end())
            throw structural_error("witness does not cover variable " + v.name);
        vals[v.name] = fld.canon(it->second);
    }
    VerifyReport rep;
    rep.accepted = true;
    for (size_t k = 0; k < sys.equations.size(); ++k) {
        Scalar r = evaluate(sys.equations[k], vals);
        bool ok = r.is_zero();
        rep.equation_lines.push_back({"eq[" + std::to_string(k) + "]", r.str(), ok});
        rep.accepted = rep.accepted && ok;
    }
    for (size_t k = 0; k < sys.disequations.size(); ++k) {
        const auto& dq = sys.disequations[k];
        bool differ = false;
        for (size_t j = 0; j < dq.lhs.size() && !differ; ++j)
            if (evaluate(dq.lhs[j], vals) != evaluate(dq.rhs[j], vals)) differ = true;
        rep.disequation_lines.push_back(
            {"diseq[" + std::to_string(k) + "]", differ ? "tuples differ" : "tuples equal", differ});
        rep.accepted = rep.accepted && differ;
    }
    for (size_t k = 0; k < sys.predicates.size(); ++k) {
        const auto& p = sys.predicates[k];
        bool ok = false;
        std::string detail;
        if (p.kind == PredicateConstraint::Kind::Nonzero) {
            if (p.vars.size() != 1) throw structural_error("nonzero predicate expects one variable");
            auto it = vals.find(p.vars[0]);
            if (it == vals.end()) throw structural_error("witness missing variable " + p.vars[0]);
            ok = !it->second.is_zero();
            detail = p.vars[0] + " = " + it->second.str();
        } else {
            ok = oracle_detail::check_irreducible_value(sys, p, vals, detail);
        }
        rep.predicate_lines.push_back({"pred[" + std::to_string(k) + "]", detail, ok});
        rep.accepted = rep.accepted && ok;
    }
    return rep;
}

// ---- solvers ------------------------------------------------------------------

struct SolveReport {
    enum class Status { SolvableWithWitness, UnsolvableProven, Unknown };
    Status status = Status::Unknown;
    std::vector<Witness> witnesses;
    BigInt search_space = 0;
    std::string method;
    std::string notes;

    std::string status_token() const {
        switch (status) {
            case Status::SolvableWithWitness: return "solvable-with-witness";
            case Status::UnsolvableProven: return "unsolvable-proven";
            case Status::Unknown: return "unknown";
        }
        return "unknown";
    }
};

// Exhaustive enumeration over F_p^vars; proves unsolvability at desk scale.
inline SolveReport brute_force_enumerate(const DiophSystem& sys, const BigInt& cap = BigInt(1000000)) {
    if (!sys.ring.is_prime_field())
        throw contract_violation("brute_force_enumerate requires a prime-field ring");
    const BigInt& p = sys.ring.p;
    BigInt space = 1;
    for (size_t i = 0; i < sys.variables.size(); ++i) {
        space *= p;
        if (space > cap) throw cap_exceeded("brute force space exceeds cap", space.str());
    }
    SolveReport rep;
    rep.method = "raw";
    rep.search_space = space;

    const CoeffField fld = sys.ring.coeff_field();
    size_t nv = sys.variables.size();
    std::vector<BigInt> cur(nv, 0);
    std::map<std::string, Scalar> vals;
    for (const auto& v : sys.variables) vals[v.name] = Scalar(0);

    std::map<std::vector<std::string>, std::map<std::string, bool>> memo; // predicate vars -> tuple -> verdict

    BigInt count = 0;
    while (true) {
        ++count;
        for (size_t i = 0; i < nv; ++i) vals[sys.variables[i].name] = Scalar(cur[i]);
        bool ok = true;
        for (const auto& eq : sys.equations)
            if (!evaluate(eq, vals).is_zero()) {
                ok = false;
                break;
            }
        if (ok)
            for (const auto& dq : sys.disequations) {
                bool differ = false;
                for (size_t j = 0; j < dq.lhs.size() && !differ; ++j)
                    if (evaluate(dq.lhs[j], vals) != evaluate(dq.rhs[j], vals)) differ = true;
                if (!differ) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            for (const auto& pr : sys.predicates) {
                if (pr.kind == PredicateConstraint::Kind::Nonzero) {
                    if (vals.at(pr.vars[0]).is_zero()) {
                        ok = false;
                        break;
                    }
                } else {
                    std::string key;
                    for (const auto& vn : pr.vars) key += vals.at(vn).num.str() + ",";
                    auto& slot = memo[pr.vars];
                    auto it = slot.find(key);
                    bool irr;
                    if (it != slot.end()) {
                        irr = it->second;
                    } else {
                        std::string detail;
                        irr = oracle_detail::check_irreducible_value(sys, pr, vals, detail);
                        slot.emplace(key, irr);
                    }
                    if (!irr) {
                        ok = false;
                        break;
                    }
                }
            }
        if (ok) {
            Witness w;
            w.assignment = vals;
            rep.witnesses.push_back(std::move(w));
            rep.status = SolveReport::Status::SolvableWithWitness;
            return rep;
        }
        // odometer, last variable fastest
        size_t at = nv;
        while (at > 0) {
            --at;
            cur[at] += 1;
            if (cur[at] < p) break;
            cur[at] = 0;
            if (at == 0) {
                rep.status = SolveReport::Status::UnsolvableProven;
                rep.notes = "exhausted " + count.str() + " assignments";
                return rep;
            }
        }
        if (nv == 0) {
            rep.status = SolveReport::Status::UnsolvableProven;
            rep.notes = "empty registry; equations are constants";
            for (const auto& eq : sys.equations)
                if (!eq.is_zero()) return rep;
            rep.status = SolveReport::Status::SolvableWithWitness;
            rep.witnesses.emplace_back();
            return rep;
        }
    }
}

// Structured decision for Theorem-2.9 instances over F_p: enumerate monic
// degree-d polynomials, filter by irreducibility, realize the conjugates as
// Frobenius iterates, and check the table. Witnesses verify against the
// disequation-encoded realization system.
inline SolveReport structured_solve_finite_field(const RingDescriptor& ring, const GroupTable& g,
                                                 const BigInt& cap = BigInt(1000000),
                                                 const DiophSystem* target_system = nullptr) {
    if (!ring.is_prime_field())
        throw contract_violation("structured_solve_finite_field requires a prime-field ring");
    const BigInt& p = ring.p;
    int d = g.order;
    BigInt space = fpfactor::monic_count(d, p);
    if (space > cap) throw cap_exceeded("structured search space exceeds cap", space.str());

    DiophSystem local;
    if (!target_system) local = encode_disequation(encode_group_realization(ring, g));
    const DiophSystem& sys = target_system ? *target_system : local;

    SolveReport rep;
    rep.method = "structured";
    rep.search_space = space;
    const CoeffField fld = ring.coeff_field();

    for (BigInt fi = 0; fi < space; ++fi) {
        uni::Dense f = fpfactor::nth_monic(fi, d, p);
        if (d >= 2 && !fpfactor::is_irreducible(f, fld)) continue;
        if (d == 1) {
            // linear polynomials generate the trivial extension; any coefficient works
            Witness w;
            w.assignment["a[0][0]"] = Scalar(0);
            auto vr = verify_witness(sys, w);
            if (vr.accepted) {
                rep.witnesses.push_back(std::move(w));
                rep.status = SolveReport::Status::SolvableWithWitness;
                return rep;
            }
            continue;
        }
        // Frobenius orbit: root_k = x^(p^k) mod f
        std::vector<uni::Dense> frob(static_cast<size_t>(d));
        frob[0] = uni::Dense{Scalar(0), Scalar(1)};
        for (int k = 1; k < d; ++k)
            frob[static_cast<size_t>(k)] = uni::pow_mod(frob[static_cast<size_t>(k - 1)], p, f, fld);

        // try index assignments i -> k_i with k_1 = 0: need k_i + k_j = k_{table(i,j)} mod d
        std::vector<int> ks(static_cast<size_t>(d + 1), 0);
        std::vector<int> perm(static_cast<size_t>(d - 1));
        for (int i = 0; i < d - 1; ++i) perm[static_cast<size_t>(i)] = i + 1;
        do {
            for (int i = 2; i <= d; ++i) ks[static_cast<size_t>(i)] = perm[static_cast<size_t>(i - 2)];
            bool homo = true;
            for (int i = 1; i <= d && homo; ++i)
                for (int j = 1; j <= d && homo; ++j)
                    if ((ks[static_cast<size_t>(i)] + ks[static_cast<size_t>(j)]) % d !=
                        ks[static_cast<size_t>(g.prod(i, j))])
                        homo = false;
            if (!homo) continue;

            Witness w;
            w.assignment["t"] = Scalar(1);
            for (int k = 0; k < d; ++k)
                w.assignment[enc::idx_name("", "a", {k, 0})] = f[static_cast<size_t>(k)];
            for (int i = 2; i <= d; ++i) {
                const uni::Dense& root = frob[static_cast<size_t>(ks[static_cast<size_t>(i)])];
                for (int j = 0; j < d; ++j)
                    w.assignment[enc::idx_name("", "b", {i, j, 0})] =
                        j < static_cast<int>(root.size()) ? root[static_cast<size_t>(j)] : Scalar(0);
            }
            // inverse witnesses for the lowered bundle distinctness products
            int wc = 0;
            for (int i = 1; i <= d; ++i)
                for (int r = i + 1; r <= d; ++r) {
                    // mirror the encoder's bundle tuples to locate the w variables
                    auto coord = [&](int bi, int j) -> Scalar {
                        if (bi == 1) return j == 1 ? Scalar(1) : Scalar(0);
                        return w.assignment.at(enc::idx_name("", "b", {bi, j, 0}));
                    };
                    bool fixed = false;
                    for (int j = 0; j < d; ++j) {
                        std::string wn = "w[" + std::to_string(wc++) + "]";
                        Scalar delta = fld.sub(coord(i, j), coord(r, j));
                        if (!fixed && !delta.is_zero()) {
                            w.assignment[wn] = fld.inv(delta);
                            fixed = true;
                        } else {
                            w.assignment[wn] = Scalar(0);
                        }
                    }
                }
            auto vr = verify_witness(sys, w);
            if (vr.accepted) {
                rep.witnesses.push_back(std::move(w));
                rep.status = SolveReport::Status::SolvableWithWitness;
                rep.notes = "f index " + fi.str();
                return rep;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    rep.status = SolveReport::Status::UnsolvableProven;
    rep.notes = "exhausted all monic polynomials of degree " + std::to_string(d);
    return rep;
}

} // namespace igp2h10

#endif

