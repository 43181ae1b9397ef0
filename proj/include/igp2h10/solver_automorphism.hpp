#ifndef IGP2H10_SOLVER_AUTOMORPHISM_HPP
#define IGP2H10_SOLVER_AUTOMORPHISM_HPP

#include "igp2h10/encoder_automorphism.hpp"
#include "igp2h10/oracle.hpp"

namespace igp2h10 {

namespace solver_detail {

// h_outer(h_inner(x)) mod f over F_p, densely
inline uni::Dense dense_compose_mod(const uni::Dense& outer, const uni::Dense& inner, const uni::Dense& f,
                                    const CoeffField& fld) {
    uni::Dense acc;
    for (size_t k = outer.size(); k-- > 0;) {
        acc = uni::mod(uni::mul(acc, inner, fld), f, fld);
        if (acc.empty()) acc = uni::Dense{};
        if (acc.size() < 1) acc.resize(1, Scalar(0));
        acc[0] = fld.add(acc[0], outer[k]);
        uni::trim(acc);
    }
    return acc;
}

// The Galois group of F_p[x]/(f) as a table over the Frobenius root maps,
// computed honestly by composing the maps and matching the results.
inline GroupTable frobenius_group_table(const uni::Dense& f, const CoeffField& fld) {
    int d = uni::deg(f);
    std::vector<uni::Dense> frob(static_cast<size_t>(d));
    frob[0] = uni::Dense{Scalar(0), Scalar(1)};
    for (int k = 1; k < d; ++k) frob[static_cast<size_t>(k)] = uni::pow_mod(frob[static_cast<size_t>(k - 1)], fld.p, f, fld);
    std::vector<std::vector<int>> table(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            uni::Dense comp = dense_compose_mod(frob[static_cast<size_t>(i)], frob[static_cast<size_t>(j)], f, fld);
            int r = -1;
            for (int c = 0; c < d; ++c)
                if (frob[static_cast<size_t>(c)] == comp) r = c;
            if (r < 0) throw contract_violation("composition of root maps left the Frobenius orbit");
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] = r + 1;
        }
    auto res = validate_group(d, table, "frobenius");
    if (!res.ok) throw contract_violation("frobenius maps do not form a group: " + res.diagnostic);
    return res.table;
}

} // namespace solver_detail

// Decides the automorphism problem over F_p by exhausting every closure
// degree ell: enumerate the irreducible monic polynomials of degree ell,
// realize the Galois group from Frobenius root maps, and scan its subgroups
// for the forced size and conjugate count with the quotient isomorphic to H.
inline SolveReport structured_solve_automorphism(const RingDescriptor& ring, const GroupTable& h, int n,
                                                 const BigInt& cap = BigInt(1000000)) {
    if (!ring.is_prime_field())
        throw contract_violation("structured_solve_automorphism requires a prime-field ring");
    int m = h.order;
    if (n < 1 || n % m != 0) throw contract_violation("automorphism problem needs |H| dividing n");

    SolveReport rep;
    rep.method = "structured";
    std::string notes;
    auto branches = automorphism_branches(h, n);
    if (branches.empty()) {
        rep.status = SolveReport::Status::UnsolvableProven;
        rep.notes = "no admissible closure degree: the trivial subgroup has exactly one conjugate, n/m > 1 required";
        return rep;
    }
    const CoeffField fld = ring.coeff_field();
    for (const auto& br : branches) {
        BigInt space = fpfactor::monic_count(br.ell, ring.p);
        if (space > cap) throw cap_exceeded("automorphism branch search space exceeds cap", space.str());
        rep.search_space += space;
    }

    for (const auto& br : branches) {
        if (br.degenerate) {
            auto sub = structured_solve_finite_field(ring, h, cap);
            notes += "ell=" + std::to_string(br.ell) + " (degenerate): " + sub.status_token() + "; ";
            if (sub.status == SolveReport::Status::SolvableWithWitness) {
                rep.status = sub.status;
                rep.witnesses = sub.witnesses;
                rep.notes = notes + "realization witness attached";
                return rep;
            }
            continue;
        }
        BigInt space = fpfactor::monic_count(br.ell, ring.p);
        BigInt tried = 0;
        bool found = false;
        for (BigInt fi = 0; fi < space && !found; ++fi) {
            uni::Dense f = fpfactor::nth_monic(fi, br.ell, ring.p);
            if (!fpfactor::is_irreducible(f, fld)) continue;
            ++tried;
            GroupTable g = solver_detail::frobenius_group_table(f, fld);
            for (const auto& s : subgroups_of_order(g, br.subgroup_size)) {
                if (conjugates_of_subgroup(g, s).first != br.conj_count) continue;
                auto norm = normalizer(g, s);
                GroupTable aut = quotient_table(g, norm, s.elements);
                if (aut.order != m || !groups_isomorphic(aut, h)) continue;
                found = true;
                Witness w;
                for (int k = 0; k < br.ell; ++k)
                    w.assignment[enc::idx_name("", "a", {k, 0})] =
                        k < static_cast<int>(f.size()) ? f[static_cast<size_t>(k)] : Scalar(0);
                rep.witnesses.push_back(std::move(w));
                std::string subset;
                for (int e : s.elements) subset += (subset.empty() ? "" : ",") + std::to_string(e);
                notes += "ell=" + std::to_string(br.ell) + ": solvable, f index " + fi.str() + ", S = {" + subset +
                         "}; ";
                break;
            }
        }
        if (found) {
            rep.status = SolveReport::Status::SolvableWithWitness;
            rep.notes = notes;
            return rep;
        }
        notes += "ell=" + std::to_string(br.ell) + ": exhausted " + tried.str() +
                 " irreducible polynomials, no qualifying subgroup; ";
    }
    rep.status = SolveReport::Status::UnsolvableProven;
    rep.notes = notes;
    return rep;
}

// Embeds a realization witness of H (the degenerate branch) into a witness of
// the full encoded automorphism system: the degenerate branch is selected,
// every other branch is switched off with its free variables pinned to
// predicate-satisfying values.
inline Witness automorphism_witness_from_degenerate(const DiophSystem& encoded, const RingDescriptor& ring,
                                                    const GroupTable& h, int n,
                                                    const Witness& realization_witness) {
    auto branches = automorphism_branches(h, n);
    size_t deg_index = branches.size();
    for (size_t i = 0; i < branches.size(); ++i)
        if (branches[i].degenerate) deg_index = i;
    if (deg_index == branches.size())
        throw contract_violation("no degenerate branch to embed the witness into");
    if (branches.size() == 1) return realization_witness; // the system is the realization itself

    const CoeffField fld = ring.coeff_field();
    Witness w;
    for (const auto& v : encoded.variables) w.assignment[v.name] = Scalar(0);

    // top selectors
    for (size_t i = 0; i < branches.size(); ++i)
        w.assignment["sel[" + std::to_string(i) + "]"] = Scalar(i == deg_index ? 1 : 0);

    // the chosen branch: realization values plus the linear-combination
    // distinctness witnesses in lowering order
    std::string pfx = "B" + std::to_string(n) + ".";
    for (const auto& [name, val] : realization_witness.assignment) {
        if (name.rfind("w[", 0) == 0) continue; // product-form witnesses do not transfer
        w.assignment[pfx + name] = val;
    }
    auto coord_value = [&](int i, int j, int r0) -> Scalar {
        if (i == 1) return j == 1 && r0 == 0 ? realization_witness.assignment.at("t") : Scalar(0);
        return realization_witness.assignment.at(enc::idx_name("", "b", {i, j, r0}));
    };
    int wc = 0;
    for (int i = 1; i <= n; ++i)
        for (int r = i + 1; r <= n; ++r) {
            bool fixed = false;
            for (int j = 0; j < n; ++j)
                for (int r0 = 0; r0 < ring.n; ++r0) {
                    std::string wn = pfx + "w[" + std::to_string(wc++) + "]";
                    Scalar delta = fld.sub(coord_value(i, j, r0), coord_value(r, j, r0));
                    if (!fixed && !delta.is_zero()) {
                        w.assignment[wn] = fld.inv(delta);
                        fixed = true;
                    } else {
                        w.assignment[wn] = Scalar(0);
                    }
                }
        }

    // switched-off branches still face their (ungated) predicates
    for (size_t i = 0; i < branches.size(); ++i) {
        if (i == deg_index) continue;
        const auto& br = branches[i];
        std::string bp = "B" + std::to_string(br.ell) + ".";
        if (ring.is_prime_field()) {
            BigInt count = fpfactor::monic_count(br.ell, ring.p);
            for (BigInt fi = 0; fi < count; ++fi) {
                uni::Dense f = fpfactor::nth_monic(fi, br.ell, ring.p);
                if (!fpfactor::is_irreducible(f, fld)) continue;
                for (int k = 0; k < br.ell; ++k)
                    w.assignment[bp + enc::idx_name("", "a", {k, 0})] =
                        k < static_cast<int>(f.size()) ? f[static_cast<size_t>(k)] : Scalar(0);
                break;
            }
            if (!br.degenerate) {
                BigInt gcount = fpfactor::monic_count(n, ring.p);
                for (BigInt fi = 0; fi < gcount; ++fi) {
                    uni::Dense f = fpfactor::nth_monic(fi, n, ring.p);
                    if (!fpfactor::is_irreducible(f, fld)) continue;
                    for (int k = 0; k < n; ++k)
                        w.assignment[bp + enc::idx_name("", "g", {k, 0})] =
                            k < static_cast<int>(f.size()) ? f[static_cast<size_t>(k)] : Scalar(0);
                    break;
                }
            }
        } else {
            // over Q/Z: x^ell - 2 and y^n - 2 are irreducible (Eisenstein at 2)
            w.assignment[bp + enc::idx_name("", "a", {0, 0})] = Scalar(-2);
            if (!br.degenerate) w.assignment[bp + enc::idx_name("", "g", {0, 0})] = Scalar(-2);
        }
        if (br.ell >= 2) w.assignment[bp + "t"] = Scalar(1);
    }
    return w;
}

} // namespace igp2h10

#endif
