#ifndef IGP2H10_ENCODER_HPP
#define IGP2H10_ENCODER_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "igp2h10/group.hpp"
#include "igp2h10/polydiv.hpp"
#include "igp2h10/system.hpp"

namespace igp2h10 {

struct EncodeOptions {
    int max_subgroup_parent_order = 12;
    int max_subgroup_h_order = 6;
    int max_automorphism_n = 4;
    size_t conjoin_term_cap = 5000000;         // term budget for anisotropic folding
    size_t automorphism_equation_cap = 300000; // projected equation budget per call
};

namespace enc {

inline std::string idx_name(const std::string& prefix, const std::string& stem, std::initializer_list<int> idx) {
    std::string s = prefix + stem;
    for (int i : idx) s += "[" + std::to_string(i) + "]";
    return s;
}

// Rebuilds p over dst, mapping each variable name through rename.
inline MultiPoly transplant(const MultiPoly& p, const RegistryPtr& dst,
                            const std::function<std::string(const std::string&)>& rename) {
    const RegistryPtr& src = p.registry();
    std::vector<MultiPoly::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (const auto& [idx, exp] : t.mono.factors)
            m = Monomial::mul(m, Monomial::var(dst->index_of(rename(src->name_of(idx))), exp));
        terms.push_back(MultiPoly::Term{std::move(m), t.coef});
    }
    return MultiPoly::from_terms(dst, std::move(terms));
}

// Variable stems and generator name used by a GaloisBuilder; the defaults are
// the Theorem-2.8 layer (f over a[i][j], bundles b, generator x). The
// automorphism encoder runs a second instance per branch with stems g/q over
// generator y, sharing the branch denominator t.
struct BuilderStems {
    std::string coeff = "a";
    std::string bundle = "b";
    std::string gen = "x";
    bool reuse_t = false;
};

// Shared construction for the Theorem-2.8 style lowering: coefficient
// variables a[i][j], conjugate-coordinate bundles b[i][j][r], denominator t,
// with beta (as x) and alpha reduced away before anything is emitted.
struct GaloisBuilder {
    const RingDescriptor& ring;
    int d;
    DiophSystem& sys;
    std::string prefix;
    const MultiPoly* gate; // optional selector; emitted equations are multiplied by it
    BuilderStems stems;

    int nA;
    bool has_alpha;
    uint32_t x_idx = 0, alpha_idx = 0;
    MultiPoly minpoly_alpha;
    MultiPoly t_poly;
    MultiPoly one;
    std::vector<MultiPoly> t_pow; // t^0 .. t^d

    GaloisBuilder(const RingDescriptor& r, int degree, DiophSystem& s, std::string pfx = "",
                  const MultiPoly* gate_poly = nullptr, BuilderStems st = {})
        : ring(r), d(degree), sys(s), prefix(std::move(pfx)), gate(gate_poly), stems(std::move(st)), nA(r.n),
          has_alpha(r.n > 1) {
        if (d < 1) throw contract_violation("degree must be >= 1");
        one = MultiPoly::constant(sys.registry, Scalar(1));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < nA; ++j)
                sys.add_variable(idx_name(prefix, stems.coeff, {i, j}), VarRole::PolyCoefficient);
        if (d >= 2) {
            for (int i = 2; i <= d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int r0 = 0; r0 < nA; ++r0)
                        sys.add_variable(idx_name(prefix, stems.bundle, {i, j, r0}), VarRole::ConjugateCoordinate);
            if (!stems.reuse_t) sys.add_variable(prefix + "t", VarRole::Denominator);
            t_poly = MultiPoly::var(sys.registry, prefix + "t");
        } else if (stems.reuse_t) {
            t_poly = MultiPoly::var(sys.registry, prefix + "t");
        } else {
            t_poly = one;
        }
        x_idx = ensure_internal(stems.gen);
        if (has_alpha) {
            alpha_idx = ensure_internal("alpha");
            minpoly_alpha = ring.minpoly_as_poly(sys.registry, "alpha");
        }
        t_pow.assign(static_cast<size_t>(d) + 1, one);
        for (int k = 1; k <= d; ++k) t_pow[static_cast<size_t>(k)] = t_pow[static_cast<size_t>(k - 1)] * t_poly;
    }

    uint32_t ensure_internal(const std::string& name) {
        if (!sys.registry->contains(name)) return sys.registry->add(name);
        return sys.registry->index_of(name);
    }

    MultiPoly var(const std::string& name) const { return MultiPoly::var(sys.registry, name); }

    // c_k = sum_j a[k][j] alpha^j
    MultiPoly coeff_poly(int k) const {
        MultiPoly acc = MultiPoly::zero(sys.registry);
        for (int j = 0; j < nA; ++j) {
            MultiPoly term = MultiPoly::var(sys.registry, idx_name(prefix, stems.coeff, {k, j}));
            if (j > 0) term = term.shifted(Monomial::var(alpha_idx, static_cast<uint32_t>(j)));
            acc = acc + term;
        }
        return acc;
    }

    // s_{i,j} in R[alpha]; bundle 1 is pinned to (0, t, 0, ..., 0)
    MultiPoly s_poly(int i, int j) const {
        if (i == 1) return j == 1 ? t_poly : MultiPoly::zero(sys.registry);
        MultiPoly acc = MultiPoly::zero(sys.registry);
        for (int r0 = 0; r0 < nA; ++r0) {
            MultiPoly term = MultiPoly::var(sys.registry, idx_name(prefix, stems.bundle, {i, j, r0}));
            if (r0 > 0) term = term.shifted(Monomial::var(alpha_idx, static_cast<uint32_t>(r0)));
            acc = acc + term;
        }
        return acc;
    }

    // S_i(x) = sum_j s_{i,j} x^j = t * h_i(x)
    MultiPoly big_s_poly(int i) const {
        MultiPoly acc = MultiPoly::zero(sys.registry);
        for (int j = 0; j < d; ++j) {
            MultiPoly c = s_poly(i, j);
            if (c.is_zero()) continue;
            acc = acc + c.shifted(Monomial::var(x_idx, static_cast<uint32_t>(j)));
        }
        return acc;
    }

    MultiPoly f_sym() const {
        MultiPoly acc = MultiPoly::var(sys.registry, stems.gen, static_cast<uint32_t>(d));
        for (int k = 0; k < d; ++k) {
            MultiPoly c = coeff_poly(k);
            if (k > 0) c = c.shifted(Monomial::var(x_idx, static_cast<uint32_t>(k)));
            acc = acc + c;
        }
        return acc;
    }

    // splits an x-reduced polynomial into its x- and alpha-coordinates,
    // appending each nonzero coordinate (gated if a gate is set)
    void split_emit(const MultiPoly& p, std::vector<MultiPoly>& sink) const {
        auto xc = p.coefficients_in(x_idx);
        for (int j = 0; j < d; ++j) {
            auto it = xc.find(j);
            if (it == xc.end() || it->second.is_zero()) continue;
            if (!has_alpha) {
                sink.push_back(it->second);
                continue;
            }
            MultiPoly red = reduce_mod_monic(it->second, minpoly_alpha, "alpha");
            auto ac = red.coefficients_in(alpha_idx);
            for (int r0 = 0; r0 < nA; ++r0) {
                auto jt = ac.find(r0);
                if (jt == ac.end() || jt->second.is_zero()) continue;
                sink.push_back(jt->second);
            }
        }
    }

    std::vector<MultiPoly> split_coords(const MultiPoly& p) const {
        std::vector<MultiPoly> out;
        split_emit(p, out);
        return out;
    }

    void emit(std::vector<MultiPoly> coords) {
        for (auto& e : coords) {
            if (e.is_zero()) continue;
            sys.equations.push_back(gate ? (*gate) * e : e);
        }
    }

    // A_{i,j} = 0 block: coordinates of t^d f(h_i) mod f, i in 2..d
    std::vector<MultiPoly> galois_coords(int i) const {
        MultiPoly f = f_sym();
        MultiPoly si = big_s_poly(i);
        MultiPoly acc = MultiPoly::zero(sys.registry);
        MultiPoly pw = one; // S_i^k mod f
        for (int k = 0; k <= d; ++k) {
            MultiPoly chat = k == d ? one : coeff_poly(k);
            acc = acc + chat * t_pow[static_cast<size_t>(d - k)] * pw;
            if (k < d) pw = reduce_mod_monic(pw * si, f, stems.gen);
        }
        acc = reduce_mod_monic(acc, f, stems.gen);
        std::vector<MultiPoly> out;
        split_emit(acc, out);
        return out;
    }

    void emit_galois_equations() {
        for (int i = 2; i <= d; ++i) emit(galois_coords(i));
    }

    // coordinates of t^d (h_i(h_j) - h_r) mod f: the table product sigma_i sigma_j = sigma_r
    std::vector<MultiPoly> composition_coords(int i, int j, int r) const {
        MultiPoly f = f_sym();
        MultiPoly sj = big_s_poly(j);
        MultiPoly acc = MultiPoly::zero(sys.registry);
        MultiPoly pw = one; // S_j^k mod f
        for (int k = 0; k < d; ++k) {
            MultiPoly sik = s_poly(i, k);
            if (!sik.is_zero()) acc = acc + sik * t_pow[static_cast<size_t>(d - 1 - k)] * pw;
            if (k < d - 1) pw = reduce_mod_monic(pw * sj, f, stems.gen);
        }
        acc = acc - t_pow[static_cast<size_t>(d - 1)] * big_s_poly(r);
        acc = reduce_mod_monic(acc, f, stems.gen);
        std::vector<MultiPoly> out;
        split_emit(acc, out);
        return out;
    }

    void emit_table_equations(const GroupTable& g) {
        // i = 1 or j = 1 reduces to an identity; only i,j >= 2 contribute
        for (int i = 2; i <= d; ++i)
            for (int j = 2; j <= d; ++j) emit(composition_coords(i, j, g.prod(i, j)));
    }

    // b-level coordinate tuple of bundle i, in (j, r) order
    std::vector<MultiPoly> bundle_tuple(int i) const {
        std::vector<MultiPoly> out;
        out.reserve(static_cast<size_t>(d) * static_cast<size_t>(nA));
        for (int j = 0; j < d; ++j)
            for (int r0 = 0; r0 < nA; ++r0) {
                if (i == 1) {
                    out.push_back(j == 1 && r0 == 0 ? t_poly : MultiPoly::zero(sys.registry));
                } else {
                    out.push_back(MultiPoly::var(sys.registry, idx_name(prefix, stems.bundle, {i, j, r0})));
                }
            }
        return out;
    }

    void add_distinctness_disequations() {
        for (int i = 1; i <= d; ++i)
            for (int r = i + 1; r <= d; ++r)
                sys.disequations.push_back(Disequation{bundle_tuple(i), bundle_tuple(r)});
    }

    std::vector<std::string> coefficient_names() const {
        std::vector<std::string> out;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < nA; ++j) out.push_back(idx_name(prefix, stems.coeff, {i, j}));
        return out;
    }

    void add_predicates() {
        PredicateConstraint irred;
        irred.kind = PredicateConstraint::Kind::Irreducible;
        irred.degree = d;
        irred.vars = coefficient_names();
        sys.predicates.push_back(std::move(irred));
        if (d >= 2) {
            PredicateConstraint nz;
            nz.kind = PredicateConstraint::Kind::Nonzero;
            nz.vars = {prefix + "t"};
            sys.predicates.push_back(std::move(nz));
        }
    }
};

inline int count_vars_with_stem(const DiophSystem& sys, const std::string& stem) {
    int n = 0;
    for (const auto& v : sys.variables)
        if (v.name.rfind(stem, 0) == 0) ++n;
    return n;
}

} // namespace enc

// ---------------------------------------------------------------------------
// encode_galois_set: solutions are the coefficient tuples of monic degree-d
// polynomials generating Galois extensions of L, with conjugate-coordinate
// witnesses. Beta and alpha are fully eliminated.
inline DiophSystem encode_galois_set(const RingDescriptor& ring, int d, const EncodeOptions& = {}) {
    if (d < 1) throw contract_violation("encode_galois_set requires d >= 1");
    DiophSystem sys;
    sys.ring = ring;
    sys.registry = make_registry(ring.coeff_field());
    enc::GaloisBuilder gb(ring, d, sys);
    gb.emit_galois_equations();
    gb.add_distinctness_disequations();
    gb.add_predicates();
    sys.provenance = {"galois-set"};
    return sys;
}

// encode_group_realization: the Galois-set system plus the multiplication
// table of g imposed on the conjugate bundles. Solvable over the ring iff L
// has a Galois extension with group isomorphic to g.
inline DiophSystem encode_group_realization(const RingDescriptor& ring, const GroupTable& g,
                                            const EncodeOptions& opts = {}) {
    DiophSystem sys;
    sys.ring = ring;
    sys.registry = make_registry(ring.coeff_field());
    enc::GaloisBuilder gb(ring, g.order, sys);
    gb.emit_galois_equations();
    gb.emit_table_equations(g);
    gb.add_distinctness_disequations();
    gb.add_predicates();
    sys.provenance = {"galois-set", "group-table"};
    (void)opts;
    return sys;
}

// ---------------------------------------------------------------------------
// encode_disequation: lowers every pending disequation. Over a field each
// bundle inequality becomes  prod_j (w_j (lhs_j - rhs_j) - 1) = 0  with fresh
// inverse witnesses. Over a non-field a nonzero predicate is emitted instead
// (single variable vs 0 directly; otherwise on a fresh linear-combination
// auxiliary), to be realized later by splice_definition.
inline DiophSystem encode_disequation(const DiophSystem& input) {
    DiophSystem sys = input;
    sys.disequations.clear();
    int wc = enc::count_vars_with_stem(sys, "w[");
    int auxblock = 0;
    for (const auto& v : sys.variables)
        if (v.name.rfind("aux[", 0) == 0) {
            size_t close = v.name.find(']');
            auxblock = std::max(auxblock, std::stoi(v.name.substr(4, close - 4)) + 1);
        }

    for (const auto& dq : input.disequations) {
        if (dq.lhs.size() != dq.rhs.size()) throw structural_error("disequation bundle size mismatch");
        std::vector<MultiPoly> deltas;
        for (size_t k = 0; k < dq.lhs.size(); ++k) deltas.push_back(dq.lhs[k] - dq.rhs[k]);
        if (sys.ring.is_field()) {
            MultiPoly prod = MultiPoly::constant(sys.registry, Scalar(1));
            for (const auto& delta : deltas) {
                std::string wn = "w[" + std::to_string(wc++) + "]";
                sys.add_variable(wn, VarRole::InverseWitness);
                MultiPoly w = MultiPoly::var(sys.registry, wn);
                prod = prod * (w * delta - MultiPoly::constant(sys.registry, Scalar(1)));
            }
            sys.equations.push_back(std::move(prod));
        } else {
            // u != 0 with u a witnessed combination of the coordinate differences
            if (deltas.size() == 1 && deltas[0].term_count() == 1 && deltas[0].terms()[0].coef.is_one() &&
                deltas[0].terms()[0].mono.factors.size() == 1 && deltas[0].terms()[0].mono.factors[0].second == 1) {
                PredicateConstraint nz;
                nz.kind = PredicateConstraint::Kind::Nonzero;
                nz.vars = {sys.registry->name_of(deltas[0].terms()[0].mono.factors[0].first)};
                sys.predicates.push_back(std::move(nz));
                continue;
            }
            MultiPoly comb = MultiPoly::zero(sys.registry);
            for (size_t k = 0; k < deltas.size(); ++k) {
                std::string wn = "w[" + std::to_string(wc++) + "]";
                sys.add_variable(wn, VarRole::InverseWitness);
                comb = comb + MultiPoly::var(sys.registry, wn) * deltas[k];
            }
            std::string un = "aux[" + std::to_string(auxblock++) + "][0]";
            sys.add_variable(un, VarRole::Auxiliary);
            sys.equations.push_back(MultiPoly::var(sys.registry, un) - comb);
            PredicateConstraint nz;
            nz.kind = PredicateConstraint::Kind::Nonzero;
            nz.vars = {un};
            sys.predicates.push_back(std::move(nz));
        }
    }
    sys.provenance.push_back("diseq-encode");
    return sys;
}

// ---------------------------------------------------------------------------
// eliminate_generator: replaces each equation  sum_j E_j gamma^j = 0  by the
// coefficient equations E_j = 0. If a modulus is supplied the equations are
// first reduced mod it; otherwise any gamma-degree >= d is a contract breach.
inline DiophSystem eliminate_generator(const DiophSystem& input, const std::string& gamma, int d,
                                       const MultiPoly* modulus = nullptr) {
    if (d < 1) throw contract_violation("generator degree must be >= 1");
    DiophSystem sys = input;
    sys.equations.clear();
    uint32_t gidx = input.registry->index_of(gamma);
    for (const auto& eq : input.equations) {
        MultiPoly e = eq;
        if (modulus) e = reduce_mod_monic(e, *modulus, gamma);
        if (e.degree_in(gidx) >= d)
            throw contract_violation("equation has unreduced degree in " + gamma);
        auto coeffs = e.coefficients_in(gidx);
        for (int j = 0; j < d; ++j) {
            auto it = coeffs.find(j);
            if (it == coeffs.end() || it->second.is_zero()) continue;
            sys.equations.push_back(it->second);
        }
    }
    // gamma leaves the visible registry
    std::vector<Variable> keep;
    for (const auto& v : sys.variables)
        if (v.name != gamma) keep.push_back(v);
    sys.variables = std::move(keep);
    sys.provenance.push_back("eliminate-" + gamma);
    return sys;
}

// ---------------------------------------------------------------------------
// conjoin_single: left-fold of the equation list under the anisotropic form.
// The zero set of the result over the base field equals the common zero set.
inline MultiPoly conjoin_single(const DiophSystem& sys, const ZeroForm& z, bool predicates_waived = false,
                                size_t term_cap = EncodeOptions{}.conjoin_term_cap) {
    if (!sys.disequations.empty())
        throw contract_violation("conjoin_single requires encode_disequation first");
    if (!sys.predicates.empty() && !predicates_waived)
        throw contract_violation("conjoin_single with unresolved predicates (not waived)");
    if (sys.equations.empty()) return MultiPoly::zero(sys.registry);
    MultiPoly g = sys.equations[0];
    for (size_t i = 1; i < sys.equations.size(); ++i) {
        size_t projected = g.term_count() * g.term_count() + sys.equations[i].term_count() * sys.equations[i].term_count();
        if (projected > term_cap)
            throw cap_exceeded("conjoin_single fold exceeds term budget", std::to_string(projected));
        g = z.combine(g, sys.equations[i]);
        if (g.term_count() > term_cap)
            throw cap_exceeded("conjoin_single fold exceeds term budget", std::to_string(g.term_count()));
    }
    return g;
}

// disjoin: the product, vanishing iff some factor vanishes.
inline MultiPoly disjoin(const std::vector<MultiPoly>& polys,
                         size_t term_cap = EncodeOptions{}.conjoin_term_cap) {
    if (polys.empty())
        throw contract_violation("disjoin of an empty list (use the {1=0} sentinel instead)");
    MultiPoly g = polys[0];
    for (size_t i = 1; i < polys.size(); ++i) {
        if (g.max_term_estimate(polys[i]) > term_cap)
            throw cap_exceeded("disjoin product exceeds term budget",
                               std::to_string(g.max_term_estimate(polys[i])));
        g = g * polys[i];
    }
    return g;
}

// ---------------------------------------------------------------------------
// encode_subgroup_problem: for each injective homomorphism candidate
// tau_u -> sigma_{i_u}, the realization system of g extended with the
// equations induced by h's table; multiple candidates are folded to one
// polynomial each and combined as a disjunction via disjoin. No candidate
// yields the {1=0} sentinel.
inline DiophSystem encode_subgroup_problem(const RingDescriptor& ring, const GroupTable& g,
                                           const GroupTable& h, const EncodeOptions& opts = {}) {
    if (g.order > opts.max_subgroup_parent_order)
        throw cap_exceeded("subgroup problem parent order cap", std::to_string(g.order));
    if (h.order > opts.max_subgroup_h_order)
        throw cap_exceeded("subgroup problem H order cap", std::to_string(h.order));

    std::vector<std::string> prov{"galois-set", "group-table", "subgroup-tuples"};
    auto candidates = enumerate_injections(h, g);
    if (candidates.empty()) return unsolvable_sentinel(ring, prov);

    DiophSystem sys;
    sys.ring = ring;
    sys.registry = make_registry(ring.coeff_field());
    enc::GaloisBuilder gb(ring, g.order, sys);
    gb.emit_galois_equations();
    gb.emit_table_equations(g);
    gb.add_distinctness_disequations();
    gb.add_predicates();
    sys.provenance = prov;

    // per-candidate equations from h's table: tau_u tau_v = tau_k becomes
    // sigma_{i_u} sigma_{i_v} = sigma_{i_k}
    auto tuple_equations = [&](const std::vector<int>& tuple) {
        auto image = [&](int idx) { return idx == 1 ? 1 : tuple[static_cast<size_t>(idx - 2)]; };
        std::vector<MultiPoly> eqs;
        for (int u = 2; u <= h.order; ++u)
            for (int v = 2; v <= h.order; ++v)
                for (auto& e : gb.composition_coords(image(u), image(v), image(h.prod(u, v))))
                    eqs.push_back(e);
        return eqs;
    };

    if (candidates.size() == 1) {
        for (auto& e : tuple_equations(candidates[0])) sys.equations.push_back(e);
        return sys;
    }
    ZeroForm z = ZeroForm::for_ring(ring);
    std::vector<MultiPoly> folded;
    for (const auto& tuple : candidates) {
        auto eqs = tuple_equations(tuple);
        if (eqs.empty()) {
            folded.push_back(MultiPoly::zero(sys.registry));
            continue;
        }
        MultiPoly acc = eqs[0];
        for (size_t i = 1; i < eqs.size(); ++i) {
            size_t projected = acc.term_count() * acc.term_count() +
                               eqs[i].term_count() * eqs[i].term_count();
            if (projected > opts.conjoin_term_cap)
                throw cap_exceeded("subgroup tuple fold exceeds term budget", std::to_string(projected));
            acc = z.combine(acc, eqs[i]);
        }
        folded.push_back(std::move(acc));
    }
    sys.equations.push_back(disjoin(folded, opts.conjoin_term_cap));
    return sys;
}

// ---------------------------------------------------------------------------
// splice_definition: replaces one named predicate by a supplied Diophantine
// definition. Parameters bind to the predicate's argument variables; the
// definition's auxiliaries are renamed fresh as aux[p][k].
struct DiophDefinition {
    std::vector<std::string> params; // designated parameter variables of `system`
    DiophSystem system;
};

inline DiophSystem splice_definition(const DiophSystem& outer, size_t predicate_index,
                                     const DiophDefinition& def) {
    if (predicate_index >= outer.predicates.size())
        throw structural_error("predicate index out of range");
    const PredicateConstraint& target = outer.predicates[predicate_index];
    if (target.vars.size() != def.params.size())
        throw structural_error("definition arity mismatch: predicate has " +
                               std::to_string(target.vars.size()) + " arguments, definition has " +
                               std::to_string(def.params.size()) + " parameters");

    DiophSystem sys = outer;
    sys.predicates.erase(sys.predicates.begin() + static_cast<long>(predicate_index));

    int auxblock = 0;
    for (const auto& v : sys.variables)
        if (v.name.rfind("aux[", 0) == 0) {
            size_t close = v.name.find(']');
            auxblock = std::max(auxblock, std::stoi(v.name.substr(4, close - 4)) + 1);
        }

    std::map<std::string, std::string> rename;
    for (size_t i = 0; i < def.params.size(); ++i) rename[def.params[i]] = target.vars[i];
    int k = 0;
    for (const auto& v : def.system.variables) {
        if (rename.count(v.name)) continue;
        std::string fresh = "aux[" + std::to_string(auxblock) + "][" + std::to_string(k++) + "]";
        rename[v.name] = fresh;
        sys.add_variable(fresh, VarRole::Auxiliary);
    }
    auto map_name = [&rename](const std::string& n) {
        auto it = rename.find(n);
        if (it == rename.end()) throw structural_error("definition uses unregistered variable: " + n);
        return it->second;
    };
    for (const auto& eq : def.system.equations)
        sys.equations.push_back(enc::transplant(eq, sys.registry, map_name));
    for (const auto& p : def.system.predicates) {
        PredicateConstraint q = p;
        for (auto& vn : q.vars) vn = map_name(vn);
        sys.predicates.push_back(std::move(q));
    }
    sys.provenance.push_back("splice");
    return sys;
}

// The field realization of nonzero: exists w with w*u = 1.
inline DiophDefinition nonzero_inverse_definition(const RingDescriptor& ring) {
    if (!ring.is_field())
        throw contract_violation("inverse-witness nonzero definition needs a field");
    DiophDefinition def;
    def.system.ring = ring;
    def.system.registry = make_registry(ring.coeff_field());
    def.system.add_variable("u", VarRole::Auxiliary);
    def.system.add_variable("w", VarRole::InverseWitness);
    def.params = {"u"};
    MultiPoly u = MultiPoly::var(def.system.registry, "u");
    MultiPoly w = MultiPoly::var(def.system.registry, "w");
    def.system.equations.push_back(w * u - MultiPoly::constant(def.system.registry, Scalar(1)));
    return def;
}

} // namespace igp2h10

#endif
