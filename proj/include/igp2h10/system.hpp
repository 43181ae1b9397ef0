#ifndef IGP2H10_SYSTEM_HPP
#define IGP2H10_SYSTEM_HPP

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "igp2h10/multipoly.hpp"
#include "igp2h10/ring.hpp"

namespace igp2h10 {

enum class VarRole { PolyCoefficient, ConjugateCoordinate, Denominator, InverseWitness, Auxiliary };

inline std::string role_token(VarRole r) {
    switch (r) {
        case VarRole::PolyCoefficient: return "poly-coefficient";
        case VarRole::ConjugateCoordinate: return "conjugate-coordinate";
        case VarRole::Denominator: return "denominator";
        case VarRole::InverseWitness: return "inverse-witness";
        case VarRole::Auxiliary: return "aux";
    }
    throw contract_violation("unknown role");
}

inline VarRole role_from_token(const std::string& s) {
    if (s == "poly-coefficient") return VarRole::PolyCoefficient;
    if (s == "conjugate-coordinate") return VarRole::ConjugateCoordinate;
    if (s == "denominator") return VarRole::Denominator;
    if (s == "inverse-witness") return VarRole::InverseWitness;
    if (s == "aux") return VarRole::Auxiliary;
    throw parse_error("unknown variable role: " + s);
}

struct Variable {
    std::string name;
    VarRole role;
};

struct PredicateConstraint {
    enum class Kind { Irreducible, Nonzero };
    Kind kind = Kind::Nonzero;
    int degree = 0;                 // irreducible(d) only
    std::vector<std::string> vars;  // argument variables, in order
};

// Pre-encoding "not equal" between coordinate bundles; scalar case is size 1.
struct Disequation {
    std::vector<MultiPoly> lhs;
    std::vector<MultiPoly> rhs;
};

struct DiophSystem {
    RegistryPtr registry;                 // may contain internal generators beyond `variables`
    std::vector<Variable> variables;      // the emitted registry, in order
    std::vector<MultiPoly> equations;     // each asserted = 0
    std::vector<Disequation> disequations;
    std::vector<PredicateConstraint> predicates;
    RingDescriptor ring;
    std::vector<std::string> provenance;

    const Variable* find_variable(const std::string& name) const {
        for (const auto& v : variables)
            if (v.name == name) return &v;
        return nullptr;
    }

    uint32_t add_variable(const std::string& name, VarRole role) {
        variables.push_back(Variable{name, role});
        return registry->add(name);
    }
};

// Binary form vanishing only at the origin of the base field; the device that
// merges two equations into one. Defaults: Q/Z -> u^2+v^2, F_p (p odd) ->
// u^2 - g*v^2 with g the least quadratic non-residue, F_2 -> u^2+u*v+v^2.
struct ZeroForm {
    enum class Kind { SumOfSquares, NonResidue, Char2 };
    Kind kind = Kind::SumOfSquares;
    Scalar gamma = Scalar(0);

    static ZeroForm for_ring(const RingDescriptor& ring) {
        ZeroForm z;
        if (!ring.is_prime_field()) {
            z.kind = Kind::SumOfSquares;
            return z;
        }
        if (ring.p == 2) {
            z.kind = Kind::Char2;
            verify_anisotropic(z, ring);
            return z;
        }
        z.kind = Kind::NonResidue;
        // least quadratic non-residue mod p
        CoeffField f = CoeffField::prime(ring.p);
        for (BigInt c = 2; c < ring.p; ++c) {
            bool residue = false;
            for (BigInt u = 1; u < ring.p; ++u)
                if ((u * u) % ring.p == c) {
                    residue = true;
                    break;
                }
            if (!residue) {
                z.gamma = f.canon(Scalar(c));
                break;
            }
        }
        if (z.gamma.is_zero()) throw contract_violation("no quadratic non-residue found; p not prime?");
        verify_anisotropic(z, ring);
        return z;
    }

    MultiPoly combine(const MultiPoly& u, const MultiPoly& v) const {
        switch (kind) {
            case Kind::SumOfSquares: return u * u + v * v;
            case Kind::NonResidue: return u * u - (v * v).scaled(gamma);
            case Kind::Char2: return u * u + u * v + v * v;
        }
        throw contract_violation("unknown zero form");
    }

    Scalar combine_values(const CoeffField& f, const Scalar& u, const Scalar& v) const {
        switch (kind) {
            case Kind::SumOfSquares: return f.add(f.mul(u, u), f.mul(v, v));
            case Kind::NonResidue: return f.sub(f.mul(u, u), f.mul(gamma, f.mul(v, v)));
            case Kind::Char2: return f.add(f.add(f.mul(u, u), f.mul(u, v)), f.mul(v, v));
        }
        throw contract_violation("unknown zero form");
    }

  private:
    static void verify_anisotropic(const ZeroForm& z, const RingDescriptor& ring) {
        CoeffField f = CoeffField::prime(ring.p);
        for (BigInt u = 0; u < ring.p; ++u)
            for (BigInt v = 0; v < ring.p; ++v) {
                if (u == 0 && v == 0) continue;
                if (z.combine_values(f, Scalar(u), Scalar(v)).is_zero())
                    throw contract_violation("zero form is isotropic at (" + u.str() + "," + v.str() + ")");
            }
    }
};

// ---- diophsys v1 file format ------------------------------------------------
// header, ring line, one var line per registry entry, eq lines, pred lines,
// trailing provenance line. Serialization is canonical and byte-stable.

inline std::string serialize_system(const DiophSystem& sys) {
    if (!sys.disequations.empty())
        throw contract_violation("cannot serialize a system with unencoded disequations");
    std::string out = "diophsys v1\n";
    out += "ring " + sys.ring.spec_string() + "\n";
    for (const auto& v : sys.variables) out += "var " + v.name + " " + role_token(v.role) + "\n";
    for (const auto& e : sys.equations) out += "eq " + poly_text(e) + "\n";
    for (const auto& p : sys.predicates) {
        if (p.kind == PredicateConstraint::Kind::Irreducible) {
            out += "pred irreducible d=" + std::to_string(p.degree) + " vars=";
        } else {
            out += "pred nonzero vars=";
        }
        for (size_t i = 0; i < p.vars.size(); ++i) {
            if (i) out += ",";
            out += p.vars[i];
        }
        out += "\n";
    }
    out += "provenance";
    for (const auto& s : sys.provenance) out += " " + s;
    out += "\n";
    return out;
}

inline DiophSystem parse_system(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "diophsys v1") throw parse_error("missing 'diophsys v1' header");
    if (!std::getline(in, line) || line.rfind("ring ", 0) != 0) throw parse_error("missing ring line");

    DiophSystem sys;
    sys.ring = parse_ring_spec(line.substr(5));
    sys.registry = make_registry(sys.ring.coeff_field());

    bool saw_provenance = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("var ", 0) == 0) {
            std::istringstream ls(line.substr(4));
            std::string name, role;
            ls >> name >> role;
            if (name.empty() || role.empty()) throw parse_error("malformed var line: " + line);
            sys.add_variable(name, role_from_token(role));
        } else if (line.rfind("eq ", 0) == 0) {
            sys.equations.push_back(parse_poly(sys.registry, line.substr(3)));
        } else if (line.rfind("pred ", 0) == 0) {
            std::string rest = line.substr(5);
            PredicateConstraint p;
            if (rest.rfind("irreducible ", 0) == 0) {
                p.kind = PredicateConstraint::Kind::Irreducible;
                auto dpos = rest.find("d=");
                auto vpos = rest.find(" vars=");
                if (dpos == std::string::npos || vpos == std::string::npos)
                    throw parse_error("malformed pred line: " + line);
                p.degree = std::stoi(rest.substr(dpos + 2, vpos - dpos - 2));
                rest = rest.substr(vpos + 6);
            } else if (rest.rfind("nonzero ", 0) == 0) {
                p.kind = PredicateConstraint::Kind::Nonzero;
                auto vpos = rest.find("vars=");
                if (vpos == std::string::npos) throw parse_error("malformed pred line: " + line);
                rest = rest.substr(vpos + 5);
            } else {
                throw parse_error("unknown predicate kind in: " + line);
            }
            size_t start = 0;
            while (start <= rest.size() && !rest.empty()) {
                size_t comma = rest.find(',', start);
                std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                if (tok.empty()) throw parse_error("empty variable in pred line: " + line);
                if (!sys.registry->contains(tok)) throw parse_error("pred references unknown variable: " + tok);
                p.vars.push_back(tok);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            sys.predicates.push_back(std::move(p));
        } else if (line.rfind("provenance", 0) == 0) {
            std::istringstream ls(line);
            std::string kw, tok;
            ls >> kw;
            while (ls >> tok) sys.provenance.push_back(tok);
            saw_provenance = true;
        } else {
            throw parse_error("unrecognized line in system file: " + line);
        }
    }
    if (!saw_provenance) throw parse_error("missing provenance line");
    return sys;
}

// The canonical unsolvable system {1 = 0}.
inline DiophSystem unsolvable_sentinel(const RingDescriptor& ring, std::vector<std::string> provenance) {
    DiophSystem sys;
    sys.ring = ring;
    sys.registry = make_registry(ring.coeff_field());
    sys.equations.push_back(MultiPoly::constant(sys.registry, Scalar(1)));
    sys.provenance = std::move(provenance);
    return sys;
}

} // namespace igp2h10

#endif
