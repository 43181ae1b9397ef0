#ifndef IGP2H10_POLYDIV_HPP
#define IGP2H10_POLYDIV_HPP

#include <map>
#include <string>
#include <vector>

#include "igp2h10/multipoly.hpp"

namespace igp2h10 {

// Division with remainder by a polynomial monic in one distinguished variable.
// The modulus's other coefficients (and the dividend's) may involve arbitrary
// further variables; monicity makes the division exact, no coefficient
// inversion ever happens.

struct DivModResult {
    MultiPoly quotient;
    MultiPoly remainder;
};

namespace detail {

// coefficient table of p in variable idx, padded to a dense vector
inline std::vector<MultiPoly> dense_coeffs_in(const MultiPoly& p, uint32_t idx, int min_size) {
    auto sparse = p.coefficients_in(idx);
    int deg = sparse.empty() ? 0 : sparse.rbegin()->first;
    int size = std::max(deg + 1, min_size);
    std::vector<MultiPoly> out(static_cast<size_t>(size), MultiPoly::zero(p.registry()));
    for (auto& [k, c] : sparse) out[static_cast<size_t>(k)] = std::move(c);
    return out;
}

inline MultiPoly assemble_in(const RegistryPtr& reg, uint32_t idx, const std::vector<MultiPoly>& coeffs) {
    MultiPoly acc = MultiPoly::zero(reg);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        acc = acc + coeffs[k].shifted(Monomial::var(idx, static_cast<uint32_t>(k)));
    }
    return acc;
}

} // namespace detail

// Checks f is monic of positive degree in var; returns (degree, low coefficients).
inline std::vector<MultiPoly> monic_modulus_coeffs(const MultiPoly& f, const std::string& var, int& degree_out) {
    const RegistryPtr& reg = f.registry();
    uint32_t idx = reg->index_of(var);
    auto coeffs = detail::dense_coeffs_in(f, idx, 1);
    degree_out = static_cast<int>(coeffs.size()) - 1;
    while (degree_out > 0 && coeffs[static_cast<size_t>(degree_out)].is_zero()) --degree_out;
    if (degree_out < 1) throw contract_violation("modulus has degree 0 in " + var);
    const MultiPoly& lead = coeffs[static_cast<size_t>(degree_out)];
    if (!(lead.is_constant() && lead.constant_value().is_one()))
        throw contract_violation("modulus is not monic in " + var);
    coeffs.resize(static_cast<size_t>(degree_out) + 1);
    return coeffs;
}

inline DivModResult divmod_monic(const MultiPoly& p, const MultiPoly& f, const std::string& var) {
    if (p.registry() != f.registry()) throw structural_error("registry mismatch in divmod_monic");
    const RegistryPtr& reg = p.registry();
    uint32_t idx = reg->index_of(var);
    int d = 0;
    auto fc = monic_modulus_coeffs(f, var, d);

    auto pc = detail::dense_coeffs_in(p, idx, d);
    int pdeg = static_cast<int>(pc.size()) - 1;
    std::vector<MultiPoly> qc(static_cast<size_t>(std::max(pdeg - d + 1, 0)), MultiPoly::zero(reg));
    for (int e = pdeg; e >= d; --e) {
        MultiPoly lead = pc[static_cast<size_t>(e)];
        if (lead.is_zero()) continue;
        qc[static_cast<size_t>(e - d)] = lead;
        pc[static_cast<size_t>(e)] = MultiPoly::zero(reg);
        for (int k = 0; k < d; ++k)
            pc[static_cast<size_t>(e - d + k)] = pc[static_cast<size_t>(e - d + k)] - lead * fc[static_cast<size_t>(k)];
    }
    pc.resize(static_cast<size_t>(d));
    return DivModResult{detail::assemble_in(reg, idx, qc), detail::assemble_in(reg, idx, pc)};
}

// p mod f with f monic in var; remainder has var-degree < deg(f).
inline MultiPoly reduce_mod_monic(const MultiPoly& p, const MultiPoly& f, const std::string& var) {
    return divmod_monic(p, f, var).remainder;
}

// Coefficients A_0..A_{d-1} of f(h(x)) reduced mod f(x). All-zero output means
// h maps the residue of x to another root of f.
inline std::vector<MultiPoly> compose_mod(const MultiPoly& f, const MultiPoly& h, const std::string& var) {
    if (f.registry() != h.registry()) throw structural_error("registry mismatch in compose_mod");
    const RegistryPtr& reg = f.registry();
    uint32_t idx = reg->index_of(var);
    int d = 0;
    auto fc = monic_modulus_coeffs(f, var, d);

    // Horner: acc = ((1*h + c_{d-1})*h + ... )*h + c_0, reducing each step
    MultiPoly acc = MultiPoly::constant(reg, Scalar(1));
    for (int i = d - 1; i >= 0; --i) {
        acc = acc * h + fc[static_cast<size_t>(i)];
        acc = reduce_mod_monic(acc, f, var);
    }
    auto out = detail::dense_coeffs_in(acc, idx, d);
    out.resize(static_cast<size_t>(d));
    return out;
}

// Lemma-style denominator clearing: for monic q of degree d, returns monic r with
// denominator-free coefficients and the scaling b, where r(W) = W^d + sum c_i b^{d-i} W^i,
// so a root w of r equals b*(root of q).
inline std::pair<MultiPoly, Scalar> clear_denominators(const MultiPoly& q, const std::string& var) {
    const RegistryPtr& reg = q.registry();
    uint32_t idx = reg->index_of(var);
    int d = 0;
    auto qc = monic_modulus_coeffs(q, var, d);

    BigInt b = 1;
    for (int i = 0; i < d; ++i)
        for (const auto& t : qc[static_cast<size_t>(i)].terms()) b = big_lcm(b, t.coef.den);
    Scalar bs(b);

    std::vector<MultiPoly> rc(static_cast<size_t>(d) + 1, MultiPoly::zero(reg));
    rc[static_cast<size_t>(d)] = MultiPoly::constant(reg, Scalar(1));
    Scalar pow(1);
    // walk i = d-1 down to 0 so pow = b^{d-i}
    for (int i = d - 1; i >= 0; --i) {
        pow = reg->field().mul(pow, bs);
        rc[static_cast<size_t>(i)] = qc[static_cast<size_t>(i)].scaled(pow);
    }
    return {detail::assemble_in(reg, idx, rc), bs};
}

} // namespace igp2h10

#endif
