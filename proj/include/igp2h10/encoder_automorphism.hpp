#ifndef IGP2H10_ENCODER_AUTOMORPHISM_HPP
#define IGP2H10_ENCODER_AUTOMORPHISM_HPP

#include "igp2h10/encoder.hpp"

namespace igp2h10 {

// One disjunct of the automorphism encoding: a Galois closure degree ell
// (a multiple of n up to n!), the forced subgroup size |S| = ell/n, and the
// required conjugate count k = n/m. When ell == n the subgroup is trivial;
// that branch exists iff m == n and collapses to the realization of H.
struct AutoBranch {
    int ell = 0;
    bool degenerate = false;
    int subgroup_size = 0;
    int conj_count = 0;
};

inline std::vector<AutoBranch> automorphism_branches(const GroupTable& h, int n) {
    int m = h.order;
    if (m < 1 || n < 1 || n % m != 0)
        throw contract_violation("automorphism problem needs |H| dividing n");
    long long nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    std::vector<AutoBranch> out;
    for (long long ell = n; ell <= nfact; ell += n) {
        if (ell == n) {
            // trivial S has exactly one conjugate, so n/m must be 1
            if (m == n) out.push_back(AutoBranch{n, true, 1, 1});
            continue;
        }
        out.push_back(AutoBranch{static_cast<int>(ell), false, static_cast<int>(ell / n), n / m});
    }
    return out;
}

namespace autoenc {

// Boolean structure over conjunctions of polynomial equations and bundle
// inequalities, with group-cancellation pruning applied at build time.
struct Formula {
    enum class Kind { True, False, Eqs, Neq, And, Or };
    Kind kind = Kind::True;
    std::vector<MultiPoly> eqs;    // Eqs: all vanish
    std::vector<MultiPoly> deltas; // Neq: some entry nonzero
    std::vector<Formula> children;

    static Formula truth() { return Formula{}; }
    static Formula falsity() {
        Formula f;
        f.kind = Kind::False;
        return f;
    }
    static Formula of_eqs(std::vector<MultiPoly> v) {
        std::vector<MultiPoly> kept;
        for (auto& e : v)
            if (!e.is_zero()) kept.push_back(std::move(e));
        if (kept.empty()) return truth();
        Formula f;
        f.kind = Kind::Eqs;
        f.eqs = std::move(kept);
        return f;
    }
    static Formula of_neq(std::vector<MultiPoly> v) {
        std::vector<MultiPoly> kept;
        for (auto& e : v)
            if (!e.is_zero()) kept.push_back(std::move(e));
        if (kept.empty()) return falsity(); // identically equal tuples never differ
        Formula f;
        f.kind = Kind::Neq;
        f.deltas = std::move(kept);
        return f;
    }

    std::string key() const {
        switch (kind) {
            case Kind::True: return "T";
            case Kind::False: return "F";
            case Kind::Eqs: {
                std::string s = "E(";
                for (const auto& e : eqs) s += poly_text(e) + ";";
                return s + ")";
            }
            case Kind::Neq: {
                std::string s = "N(";
                for (const auto& e : deltas) s += poly_text(e) + ";";
                return s + ")";
            }
            case Kind::And:
            case Kind::Or: {
                std::string s = kind == Kind::And ? "A(" : "O(";
                for (const auto& c : children) s += c.key() + ";";
                return s + ")";
            }
        }
        return "?";
    }

    static Formula all_of(std::vector<Formula> ch) {
        std::vector<Formula> kept;
        std::set<std::string> seen;
        for (auto& c : ch) {
            if (c.kind == Kind::False) return falsity();
            if (c.kind == Kind::True) continue;
            std::string k = c.key();
            if (seen.insert(k).second) kept.push_back(std::move(c));
        }
        if (kept.empty()) return truth();
        if (kept.size() == 1) return kept[0];
        Formula f;
        f.kind = Kind::And;
        f.children = std::move(kept);
        return f;
    }

    static Formula any_of(std::vector<Formula> ch) {
        std::vector<Formula> kept;
        std::set<std::string> seen;
        for (auto& c : ch) {
            if (c.kind == Kind::True) return truth();
            if (c.kind == Kind::False) continue;
            std::string k = c.key();
            if (seen.insert(k).second) kept.push_back(std::move(c));
        }
        if (kept.empty()) return falsity();
        if (kept.size() == 1) return kept[0];
        Formula f;
        f.kind = Kind::Or;
        f.children = std::move(kept);
        return f;
    }
};

// Lowers a formula into flat equations. Disjunctions become 0/1 selector
// variables chained to their parent gate (sum of children = gate); bundle
// inequalities become witnessed combinations sum_j w_j delta_j = 1 over a
// field, or a nonzero-predicate auxiliary otherwise.
struct LoweringContext {
    DiophSystem& sys;
    std::string prefix;
    bool field_mode;
    int sel_counter = 0;
    int w_counter = 0;
    int u_counter = 0;

    MultiPoly fresh_selector() {
        std::string name = prefix + "sel[" + std::to_string(sel_counter++) + "]";
        sys.add_variable(name, VarRole::Auxiliary);
        return MultiPoly::var(sys.registry, name);
    }
    MultiPoly fresh_witness() {
        std::string name = prefix + "w[" + std::to_string(w_counter++) + "]";
        sys.add_variable(name, VarRole::InverseWitness);
        return MultiPoly::var(sys.registry, name);
    }
    MultiPoly fresh_aux() {
        std::string name = prefix + "u[" + std::to_string(u_counter++) + "]";
        sys.add_variable(name, VarRole::Auxiliary);
        return MultiPoly::var(sys.registry, name);
    }

    void emit(const MultiPoly& gate, const MultiPoly& eq) {
        if (eq.is_zero()) return;
        bool trivial_gate = gate.is_constant() && gate.constant_value().is_one();
        sys.equations.push_back(trivial_gate ? eq : gate * eq);
    }

    void lower(const Formula& f, const MultiPoly& gate) {
        const MultiPoly one = MultiPoly::constant(sys.registry, Scalar(1));
        switch (f.kind) {
            case Formula::Kind::True:
                return;
            case Formula::Kind::False:
                // gate itself must vanish; an ungated False is the {1=0} sentinel
                sys.equations.push_back(gate);
                return;
            case Formula::Kind::Eqs:
                for (const auto& e : f.eqs) emit(gate, e);
                return;
            case Formula::Kind::Neq: {
                MultiPoly comb = MultiPoly::zero(sys.registry);
                for (const auto& delta : f.deltas) comb = comb + fresh_witness() * delta;
                if (field_mode) {
                    emit(gate, comb - one);
                } else {
                    std::string uname = prefix + "u[" + std::to_string(u_counter++) + "]";
                    sys.add_variable(uname, VarRole::Auxiliary);
                    emit(gate, MultiPoly::var(sys.registry, uname) - comb);
                    PredicateConstraint nz;
                    nz.kind = PredicateConstraint::Kind::Nonzero;
                    nz.vars = {uname};
                    sys.predicates.push_back(std::move(nz));
                }
                return;
            }
            case Formula::Kind::And:
                for (const auto& c : f.children) lower(c, gate);
                return;
            case Formula::Kind::Or: {
                std::vector<MultiPoly> sels;
                for (size_t i = 0; i < f.children.size(); ++i) sels.push_back(fresh_selector());
                MultiPoly sum = MultiPoly::zero(sys.registry);
                for (const auto& s : sels) sum = sum + s;
                sys.equations.push_back(sum - gate);
                for (const auto& s : sels) sys.equations.push_back(s * s - s);
                for (size_t i = 0; i < f.children.size(); ++i) lower(f.children[i], sels[i]);
                return;
            }
        }
    }
};

inline size_t binom(size_t a, size_t b) {
    if (b > a) return 0;
    size_t r = 1;
    for (size_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}

// Coarse upper estimate of the flat equation count, used for the explicit
// size error before any construction starts.
inline size_t estimate_automorphism_equations(const RingDescriptor& ring, const GroupTable& h, int n,
                                              const std::vector<AutoBranch>& branches) {
    size_t total = 0;
    size_t nA = static_cast<size_t>(ring.n);
    size_t m = static_cast<size_t>(h.order);
    for (const auto& br : branches) {
        size_t ell = static_cast<size_t>(br.ell);
        size_t coords = ell * nA;
        if (br.degenerate) {
            total += (ell * ell + ell) * coords;
            continue;
        }
        size_t mp = static_cast<size_t>(br.subgroup_size);
        size_t k = static_cast<size_t>(br.conj_count);
        size_t nd = static_cast<size_t>(n);
        size_t subsets = binom(ell - 1, mp - 1);
        size_t tsets = binom(ell - 1, k - 1);
        size_t galois = (ell - 1) * (ell - 1) * coords + (ell - 1) * coords + ell * ell;
        size_t per_subset = (mp * mp + mp * mp * mp) * coords +
                            tsets * (ell * k * ell * 2 * coords + k * k * ell * (coords + mp * mp)) +
                            (m * mp + nd) * coords;
        size_t mu = nd * nd * coords + nd * nd * nd * nA + m * m * nd * nA + nd * coords;
        total += galois + mu + subsets * per_subset;
    }
    return total;
}

// Per-branch construction state for a non-degenerate branch.
struct BranchBuilder {
    DiophSystem& sys;
    const RingDescriptor& ring;
    const GroupTable& h;
    int n;      // target extension degree [M:L]
    AutoBranch br;
    std::string prefix;
    MultiPoly gate;
    LoweringContext& ctx;

    enc::GaloisBuilder gb;   // beta layer, degree ell, stems a/b/t
    enc::GaloisBuilder gq;   // mu layer, degree n, stems g/q sharing t
    MultiPoly fsym;
    std::vector<std::vector<MultiPoly>> P;  // P[j][k] = S_j^k mod f as x-polys
    std::vector<std::vector<MultiPoly>> PE; // PE[v][k] = E_v^k mod f

    BranchBuilder(DiophSystem& s, const RingDescriptor& r, const GroupTable& hh, int nn, AutoBranch b,
                  std::string pfx, MultiPoly g, LoweringContext& c)
        : sys(s), ring(r), h(hh), n(nn), br(b), prefix(pfx), gate(std::move(g)), ctx(c),
          gb(r, b.ell, s, pfx, nullptr),
          gq(r, nn, s, pfx, nullptr, enc::BuilderStems{"g", "q", "y", /*reuse_t=*/true}) {
        fsym = gb.f_sym();
    }

    void emit_gated(const std::vector<MultiPoly>& coords) {
        for (const auto& e : coords) ctx.emit(gate, e);
    }

    // ---- beta layer with power witnesses -----------------------------------

    void build_power_table() {
        int ell = br.ell;
        P.assign(static_cast<size_t>(ell) + 1, {});
        for (int j = 1; j <= ell; ++j) {
            auto& row = P[static_cast<size_t>(j)];
            row.assign(static_cast<size_t>(ell) + 1, gb.one);
            row[1] = gb.big_s_poly(j);
            for (int k = 2; k <= ell; ++k) {
                if (j == 1) {
                    // S_1 = t x, so the power is closed-form (reduced once at k = ell)
                    MultiPoly pw =
                        gb.t_pow[static_cast<size_t>(k)].shifted(Monomial::var(gb.x_idx, static_cast<uint32_t>(k)));
                    row[static_cast<size_t>(k)] = k < ell ? pw : reduce_mod_monic(pw, fsym, gb.stems.gen);
                    continue;
                }
                MultiPoly varpoly = MultiPoly::zero(sys.registry);
                for (int u = 0; u < ell; ++u)
                    for (int r0 = 0; r0 < gb.nA; ++r0) {
                        std::string vn = enc::idx_name(prefix, "p", {j, k, u, r0});
                        sys.add_variable(vn, VarRole::Auxiliary);
                        MultiPoly v = MultiPoly::var(sys.registry, vn);
                        Monomial mono = Monomial::var(gb.x_idx, static_cast<uint32_t>(u));
                        if (r0 > 0) mono = Monomial::mul(mono, Monomial::var(gb.alpha_idx, static_cast<uint32_t>(r0)));
                        varpoly = varpoly + v.shifted(mono);
                    }
                MultiPoly expansion = reduce_mod_monic(row[static_cast<size_t>(k - 1)] * row[1], fsym, gb.stems.gen);
                emit_gated(gb.split_coords(varpoly - expansion));
                row[static_cast<size_t>(k)] = std::move(varpoly);
            }
        }
        // closed-form powers of x^k for j = 1 above keep k <= ell - 1 usage; the
        // k = ell entry is only read for j >= 2 (the galois equations)
    }

    void build_galois_block() {
        int ell = br.ell;
        for (int i = 2; i <= ell; ++i) {
            MultiPoly acc = P[static_cast<size_t>(i)][static_cast<size_t>(ell)];
            for (int k = 0; k < ell; ++k) {
                MultiPoly chat = gb.coeff_poly(k) * gb.t_pow[static_cast<size_t>(ell - k)];
                acc = acc + chat * P[static_cast<size_t>(i)][static_cast<size_t>(k)];
            }
            emit_gated(gb.split_coords(acc));
        }
        // pairwise distinctness of the conjugate bundles
        std::vector<Formula> neqs;
        for (int i = 1; i <= ell; ++i)
            for (int r = i + 1; r <= ell; ++r) {
                auto lt = gb.bundle_tuple(i);
                auto rt = gb.bundle_tuple(r);
                std::vector<MultiPoly> deltas;
                for (size_t q = 0; q < lt.size(); ++q) deltas.push_back(lt[q] - rt[q]);
                neqs.push_back(Formula::of_neq(std::move(deltas)));
            }
        ctx.lower(Formula::all_of(std::move(neqs)), gate);
        // predicates stay ungated: a free branch can always satisfy them
        PredicateConstraint irred;
        irred.kind = PredicateConstraint::Kind::Irreducible;
        irred.degree = ell;
        irred.vars = gb.coefficient_names();
        sys.predicates.push_back(std::move(irred));
        PredicateConstraint nz;
        nz.kind = PredicateConstraint::Kind::Nonzero;
        nz.vars = {prefix + "t"};
        sys.predicates.push_back(std::move(nz));
    }

    // coordinates of t^ell (h_i . h_j - h_r) via the power table
    std::vector<MultiPoly> atom_coords(int i, int j, int r) {
        int ell = br.ell;
        MultiPoly acc = MultiPoly::zero(sys.registry);
        for (int k = 0; k < ell; ++k) {
            MultiPoly sik = gb.s_poly(i, k);
            if (sik.is_zero()) continue;
            acc = acc + sik * gb.t_pow[static_cast<size_t>(ell - 1 - k)] * P[static_cast<size_t>(j)][static_cast<size_t>(k)];
        }
        acc = acc - gb.t_pow[static_cast<size_t>(ell - 1)] * gb.big_s_poly(r);
        return gb.split_coords(acc);
    }

    // coordinates of t^ell (h_a . h_v - h_v . h_b)
    std::vector<MultiPoly> eqprod_coords(int a, int v, int b) {
        int ell = br.ell;
        MultiPoly acc = MultiPoly::zero(sys.registry);
        for (int k = 0; k < ell; ++k) {
            MultiPoly sak = gb.s_poly(a, k);
            if (!sak.is_zero())
                acc = acc + sak * gb.t_pow[static_cast<size_t>(ell - 1 - k)] * P[static_cast<size_t>(v)][static_cast<size_t>(k)];
            MultiPoly svk = gb.s_poly(v, k);
            if (!svk.is_zero())
                acc = acc - svk * gb.t_pow[static_cast<size_t>(ell - 1 - k)] * P[static_cast<size_t>(b)][static_cast<size_t>(k)];
        }
        return gb.split_coords(acc);
    }

    // group-cancellation pruned atoms; soundness rests on the branch-level
    // distinctness constraints (the bundles are the distinct roots, so the
    // root maps form a group and cancellation applies)
    Formula prod_atom(int i, int j, int r) {
        if (i == 1) return j == r ? Formula::truth() : Formula::falsity();
        if (j == 1) return i == r ? Formula::truth() : Formula::falsity();
        if (j == r || i == r) return Formula::falsity();
        return Formula::of_eqs(atom_coords(i, j, r));
    }
    Formula eqprod_atom(int a, int v, int b) {
        if (a == 1 && b == 1) return Formula::truth();
        if (a == 1 || b == 1) return Formula::falsity();
        if (v == 1) return a == b ? Formula::truth() : Formula::falsity();
        return Formula::of_eqs(eqprod_coords(a, v, b));
    }
    Formula neqprod_atom(int a, int v, int b) {
        if (a == 1 && b == 1) return Formula::falsity();
        if (a == 1 || b == 1) return Formula::truth();
        if (v == 1) return a == b ? Formula::falsity() : Formula::truth();
        return Formula::of_neq(eqprod_coords(a, v, b));
    }

    // ---- subgroup selection (sub1-sub4 with exactness) ----------------------

    Formula commutes_with_subgroup(const std::vector<int>& s, int v) {
        std::vector<Formula> per_a;
        for (size_t ai = 1; ai < s.size(); ++ai) {
            std::vector<Formula> per_b;
            for (size_t bi = 0; bi < s.size(); ++bi) per_b.push_back(eqprod_atom(s[ai], v, s[bi]));
            per_a.push_back(Formula::any_of(std::move(per_b)));
        }
        return Formula::all_of(std::move(per_a));
    }

    Formula not_commutes_with_subgroup(const std::vector<int>& s, int v) {
        std::vector<Formula> per_a;
        for (size_t ai = 1; ai < s.size(); ++ai) {
            std::vector<Formula> per_b;
            for (size_t bi = 0; bi < s.size(); ++bi) per_b.push_back(neqprod_atom(s[ai], v, s[bi]));
            per_a.push_back(Formula::all_of(std::move(per_b)));
        }
        return Formula::any_of(std::move(per_a));
    }

    Formula same_conjugate(const std::vector<int>& s, int r, int tau) {
        if (tau == r) return Formula::truth();
        std::vector<Formula> per_v;
        for (int v = 1; v <= br.ell; ++v)
            per_v.push_back(Formula::all_of({prod_atom(v, tau, r), commutes_with_subgroup(s, v)}));
        return Formula::any_of(std::move(per_v));
    }

    Formula different_conjugate(const std::vector<int>& s, int tau, int tau2) {
        std::vector<Formula> per_v;
        for (int v = 1; v <= br.ell; ++v)
            per_v.push_back(Formula::all_of({prod_atom(v, tau2, tau), not_commutes_with_subgroup(s, v)}));
        return Formula::any_of(std::move(per_v));
    }

    Formula subgroup_conditions(const std::vector<int>& s) {
        int mp = br.subgroup_size;
        std::vector<Formula> parts;
        // inverses inside the subset
        for (int j = 1; j < mp; ++j) {
            std::vector<Formula> alts;
            for (int r = 1; r < mp; ++r) alts.push_back(prod_atom(s[static_cast<size_t>(j)], s[static_cast<size_t>(r)], 1));
            parts.push_back(Formula::any_of(std::move(alts)));
        }
        // closure
        for (int j = 1; j < mp; ++j)
            for (int k2 = 1; k2 < mp; ++k2) {
                std::vector<Formula> alts;
                for (int r = 0; r < mp; ++r)
                    alts.push_back(prod_atom(s[static_cast<size_t>(j)], s[static_cast<size_t>(k2)], s[static_cast<size_t>(r)]));
                parts.push_back(Formula::any_of(std::move(alts)));
            }
        // exactly k conjugates: some k-set T of representatives covers the orbit
        // and its members are pairwise different conjugates
        std::vector<Formula> t_alts;
        auto emit_t = [&](const std::vector<int>& tset) {
            std::vector<Formula> parts_t;
            for (int r = 1; r <= br.ell; ++r) {
                std::vector<Formula> alts;
                for (int tau : tset) alts.push_back(same_conjugate(s, r, tau));
                parts_t.push_back(Formula::any_of(std::move(alts)));
            }
            for (size_t i = 0; i < tset.size(); ++i)
                for (size_t j = i + 1; j < tset.size(); ++j)
                    parts_t.push_back(different_conjugate(s, tset[i], tset[j]));
            t_alts.push_back(Formula::all_of(std::move(parts_t)));
        };
        auto rec = [&](auto&& self, int start, int need, std::vector<int>& acc) -> void {
            if (need == 0) {
                emit_t(acc);
                return;
            }
            for (int v = start; v <= br.ell - need + 1; ++v) {
                acc.push_back(v);
                self(self, v + 1, need - 1, acc);
                acc.pop_back();
            }
        };
        std::vector<int> acc{1};
        rec(rec, 2, br.conj_count - 1, acc);
        parts.push_back(Formula::any_of(std::move(t_alts)));
        return Formula::all_of(std::move(parts));
    }

    // ---- mu layer: generator of M, its roots, fixedness, H's table ----------

    MultiPoly e_coeff(int v, int u) {
        MultiPoly acc = MultiPoly::zero(sys.registry);
        for (int r0 = 0; r0 < gb.nA; ++r0) {
            MultiPoly term = MultiPoly::var(sys.registry, enc::idx_name(prefix, "e", {v, u, r0}));
            if (r0 > 0) term = term.shifted(Monomial::var(gb.alpha_idx, static_cast<uint32_t>(r0)));
            acc = acc + term;
        }
        return acc;
    }

    MultiPoly e_poly(int v) {
        MultiPoly acc = MultiPoly::zero(sys.registry);
        for (int u = 0; u < br.ell; ++u) {
            MultiPoly c = e_coeff(v, u);
            acc = acc + c.shifted(Monomial::var(gb.x_idx, static_cast<uint32_t>(u)));
        }
        return acc;
    }

    void build_mu_layer() {
        int ell = br.ell;
        for (int v = 1; v <= n; ++v)
            for (int u = 0; u < ell; ++u)
                for (int r0 = 0; r0 < gb.nA; ++r0)
                    sys.add_variable(enc::idx_name(prefix, "e", {v, u, r0}), VarRole::ConjugateCoordinate);

        PE.assign(static_cast<size_t>(n) + 1, {});
        for (int v = 1; v <= n; ++v) {
            auto& row = PE[static_cast<size_t>(v)];
            row.assign(static_cast<size_t>(n) + 1, gb.one);
            row[1] = e_poly(v);
            for (int k = 2; k <= n; ++k) {
                MultiPoly varpoly = MultiPoly::zero(sys.registry);
                for (int u = 0; u < ell; ++u)
                    for (int r0 = 0; r0 < gb.nA; ++r0) {
                        std::string vn = enc::idx_name(prefix, "pe", {v, k, u, r0});
                        sys.add_variable(vn, VarRole::Auxiliary);
                        MultiPoly vv = MultiPoly::var(sys.registry, vn);
                        Monomial mono = Monomial::var(gb.x_idx, static_cast<uint32_t>(u));
                        if (r0 > 0) mono = Monomial::mul(mono, Monomial::var(gb.alpha_idx, static_cast<uint32_t>(r0)));
                        varpoly = varpoly + vv.shifted(mono);
                    }
                MultiPoly expansion = reduce_mod_monic(row[static_cast<size_t>(k - 1)] * row[1], fsym, gb.stems.gen);
                emit_gated(gb.split_coords(varpoly - expansion));
                row[static_cast<size_t>(k)] = std::move(varpoly);
            }
        }

        // each mu_v is a root of g: t^n g(mu_v) = 0 in the quotient by f
        for (int v = 1; v <= n; ++v) {
            MultiPoly acc = PE[static_cast<size_t>(v)][static_cast<size_t>(n)];
            for (int i = 0; i < n; ++i) {
                MultiPoly gci = gq.coeff_poly(i) * gq.t_pow[static_cast<size_t>(n - i)];
                acc = acc + gci * PE[static_cast<size_t>(v)][static_cast<size_t>(i)];
            }
            emit_gated(gb.split_coords(acc));
        }

        // the n roots are pairwise distinct
        std::vector<Formula> neqs;
        for (int v = 1; v <= n; ++v)
            for (int v2 = v + 1; v2 <= n; ++v2) {
                std::vector<MultiPoly> deltas;
                for (int u = 0; u < ell; ++u)
                    for (int r0 = 0; r0 < gb.nA; ++r0)
                        deltas.push_back(MultiPoly::var(sys.registry, enc::idx_name(prefix, "e", {v, u, r0})) -
                                         MultiPoly::var(sys.registry, enc::idx_name(prefix, "e", {v2, u, r0})));
                neqs.push_back(Formula::of_neq(std::move(deltas)));
            }
        ctx.lower(Formula::all_of(std::move(neqs)), gate);

        // fixed roots mu_2..mu_m also live in M = L(mu): t^n mu_v = sum q_{v,j} mu^j
        for (int v = 2; v <= h.order; ++v) {
            MultiPoly acc = MultiPoly::zero(sys.registry);
            for (int j = 0; j < n; ++j) {
                MultiPoly qvj = gq.s_poly(v, j);
                if (qvj.is_zero()) continue;
                acc = acc + qvj * gq.t_pow[static_cast<size_t>(n - 1 - j)] * PE[1][static_cast<size_t>(j)];
            }
            acc = acc - gq.t_pow[static_cast<size_t>(n - 1)] * PE[static_cast<size_t>(v)][1];
            emit_gated(gb.split_coords(acc));
        }

        // H's multiplication table on the fixed-root automorphisms, in the
        // mu-basis modulo g(y)
        for (int i = 2; i <= h.order; ++i)
            for (int j = 2; j <= h.order; ++j) emit_gated(gq.composition_coords(i, j, h.prod(i, j)));

        PredicateConstraint irred;
        irred.kind = PredicateConstraint::Kind::Irreducible;
        irred.degree = n;
        irred.vars = gq.coefficient_names();
        sys.predicates.push_back(std::move(irred));
    }

    // sigma_{i_a}(mu_v) - mu_v, cleared by t^ell, as coordinate equations
    std::vector<MultiPoly> fixedness_coords(int v, int a) {
        int ell = br.ell;
        MultiPoly acc = MultiPoly::zero(sys.registry);
        for (int u = 0; u < ell; ++u) {
            MultiPoly evu = e_coeff(v, u);
            if (evu.is_zero()) continue;
            acc = acc + evu * gb.t_pow[static_cast<size_t>(ell - 1 - u)] * P[static_cast<size_t>(a)][static_cast<size_t>(u)];
        }
        acc = acc - gb.t_pow[static_cast<size_t>(ell - 1)] * PE[static_cast<size_t>(v)][1];
        return gb.split_coords(acc);
    }

    void build() {
        build_power_table();
        build_galois_block();
        build_mu_layer();

        // disjunction over candidate subsets S = {1, i_2, ..., i_{m'}}
        int mp = br.subgroup_size;
        std::vector<Formula> subset_alts;
        std::vector<int> acc{1};
        auto rec = [&](auto&& self, int start, int need) -> void {
            if (need == 0) {
                std::vector<Formula> parts;
                parts.push_back(subgroup_conditions(acc));
                // exactly m roots fixed by S: equalities for the first m,
                // a violated-fixedness witness for each of the rest
                std::vector<MultiPoly> fixed_eqs;
                for (int v = 1; v <= h.order; ++v)
                    for (size_t ai = 1; ai < acc.size(); ++ai)
                        for (auto& e : fixedness_coords(v, acc[ai])) fixed_eqs.push_back(e);
                parts.push_back(Formula::of_eqs(std::move(fixed_eqs)));
                for (int v = h.order + 1; v <= n; ++v) {
                    std::vector<MultiPoly> deltas;
                    for (size_t ai = 1; ai < acc.size(); ++ai)
                        for (auto& e : fixedness_coords(v, acc[ai])) deltas.push_back(e);
                    parts.push_back(Formula::of_neq(std::move(deltas)));
                }
                subset_alts.push_back(Formula::all_of(std::move(parts)));
                return;
            }
            for (int v = start; v <= br.ell - need + 1; ++v) {
                acc.push_back(v);
                self(self, v + 1, need - 1);
                acc.pop_back();
            }
        };
        rec(rec, 2, mp - 1);
        ctx.lower(Formula::any_of(std::move(subset_alts)), gate);
    }
};

} // namespace autoenc

// encode_automorphism_problem: a disjunction over closure degrees ell
// (multiples of n up to n!), each branch carrying the degree-ell Galois-set
// system, subgroup-selection equations forcing |S| = ell/n with exactly n/m
// conjugates, a degree-n generator of M with exactly m roots fixed by S, and
// H's table on the fixed-root automorphisms. Solvable over the ring iff an
// extension M/L of degree n with Aut(M/L) isomorphic to H exists.
inline DiophSystem encode_automorphism_problem(const RingDescriptor& ring, const GroupTable& h, int n,
                                               const EncodeOptions& opts = {}) {
    int m = h.order;
    if (n < 1 || n % m != 0) throw contract_violation("automorphism problem needs |H| dividing n");
    if (n > opts.max_automorphism_n)
        throw cap_exceeded("automorphism problem degree cap", std::to_string(n));

    auto branches = automorphism_branches(h, n);
    std::vector<std::string> prov{"galois-set", "group-table", "automorphism-branches", "diseq-encode"};
    if (branches.empty()) return unsolvable_sentinel(ring, prov);

    if (branches.size() == 1 && branches[0].degenerate) {
        // degree-n extensions with the full automorphism count are Galois;
        // the single branch is exactly the realization of H
        DiophSystem sys = encode_disequation(encode_group_realization(ring, h));
        sys.provenance = prov;
        return sys;
    }

    size_t est = autoenc::estimate_automorphism_equations(ring, h, n, branches);
    if (est > opts.automorphism_equation_cap)
        throw cap_exceeded("automorphism encoding exceeds the equation budget", std::to_string(est));

    DiophSystem sys;
    sys.ring = ring;
    sys.registry = make_registry(ring.coeff_field());
    MultiPoly one = MultiPoly::constant(sys.registry, Scalar(1));

    std::vector<MultiPoly> sels;
    if (branches.size() >= 2) {
        for (size_t i = 0; i < branches.size(); ++i) {
            std::string name = "sel[" + std::to_string(i) + "]";
            sys.add_variable(name, VarRole::Auxiliary);
            sels.push_back(MultiPoly::var(sys.registry, name));
        }
        MultiPoly sum = MultiPoly::zero(sys.registry);
        for (const auto& s : sels) sum = sum + s;
        sys.equations.push_back(sum - one);
        for (const auto& s : sels) sys.equations.push_back(s * s - s);
    }

    for (size_t bi = 0; bi < branches.size(); ++bi) {
        const auto& br = branches[bi];
        MultiPoly gate = branches.size() >= 2 ? sels[bi] : one;
        std::string prefix = "B" + std::to_string(br.ell) + ".";
        autoenc::LoweringContext ctx{sys, prefix, ring.is_field()};
        if (br.degenerate) {
            // realization of H, branch-scoped and gated
            enc::GaloisBuilder gb(ring, br.ell, sys, prefix, nullptr);
            std::vector<MultiPoly> coords;
            for (int i = 2; i <= br.ell; ++i)
                for (auto& e : gb.galois_coords(i)) coords.push_back(e);
            for (int i = 2; i <= br.ell; ++i)
                for (int j = 2; j <= br.ell; ++j)
                    for (auto& e : gb.composition_coords(i, j, h.prod(i, j))) coords.push_back(e);
            for (const auto& e : coords) ctx.emit(gate, e);
            std::vector<autoenc::Formula> neqs;
            for (int i = 1; i <= br.ell; ++i)
                for (int r = i + 1; r <= br.ell; ++r) {
                    auto lt = gb.bundle_tuple(i);
                    auto rt = gb.bundle_tuple(r);
                    std::vector<MultiPoly> deltas;
                    for (size_t q = 0; q < lt.size(); ++q) deltas.push_back(lt[q] - rt[q]);
                    neqs.push_back(autoenc::Formula::of_neq(std::move(deltas)));
                }
            ctx.lower(autoenc::Formula::all_of(std::move(neqs)), gate);
            PredicateConstraint irred;
            irred.kind = PredicateConstraint::Kind::Irreducible;
            irred.degree = br.ell;
            irred.vars = gb.coefficient_names();
            sys.predicates.push_back(std::move(irred));
            if (br.ell >= 2) {
                PredicateConstraint nz;
                nz.kind = PredicateConstraint::Kind::Nonzero;
                nz.vars = {prefix + "t"};
                sys.predicates.push_back(std::move(nz));
            }
        } else {
            autoenc::BranchBuilder bb(sys, ring, h, n, br, prefix, gate, ctx);
            bb.build();
        }
    }
    sys.provenance = prov;
    return sys;
}

} // namespace igp2h10

#endif
