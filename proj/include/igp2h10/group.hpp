#ifndef IGP2H10_GROUP_HPP
#define IGP2H10_GROUP_HPP

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "igp2h10/errors.hpp"

namespace igp2h10 {

// Finite group by multiplication table, identity pinned at index 1.
// Entry (i,j) is the index r with sigma_i * sigma_j = sigma_r (all 1-based).
struct GroupTable {
    int order = 0;
    std::string name;
    std::vector<std::vector<int>> table; // table[i-1][j-1] in 1..order

    int prod(int i, int j) const { return table[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }

    int inverse_of(int i) const {
        for (int r = 1; r <= order; ++r)
            if (prod(i, r) == 1) return r;
        throw contract_violation("element without inverse in validated table");
    }
};

struct SubgroupRef {
    std::vector<int> elements; // sorted, contains 1
};

struct ValidationResult {
    bool ok = false;
    GroupTable table;
    std::string diagnostic;
};

// Returns a validated GroupTable or a diagnostic naming the first violated
// axiom in a fixed check order: range, identity, Latin rows/columns,
// associativity (with the witnessing triple), inverses.
inline ValidationResult validate_group(int order, const std::vector<std::vector<int>>& raw,
                                       const std::string& name = "") {
    ValidationResult res;
    auto fail = [&](const std::string& why) {
        res.ok = false;
        res.diagnostic = why;
        return res;
    };
    if (order < 1) return fail("order must be positive");
    if (static_cast<int>(raw.size()) != order) return fail("table must have " + std::to_string(order) + " rows");
    for (int i = 0; i < order; ++i)
        if (static_cast<int>(raw[static_cast<size_t>(i)].size()) != order)
            return fail("row " + std::to_string(i + 1) + " must have " + std::to_string(order) + " entries");
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j) {
            int v = raw[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            if (v < 1 || v > order)
                return fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        }

    GroupTable g;
    g.order = order;
    g.name = name;
    g.table = raw;

    for (int j = 1; j <= order; ++j)
        if (g.prod(1, j) != j)
            return fail("missing identity: row 1 is not the identity row at column " + std::to_string(j));
    for (int i = 1; i <= order; ++i)
        if (g.prod(i, 1) != i)
            return fail("missing identity: column 1 is not the identity column at row " + std::to_string(i));

    for (int i = 1; i <= order; ++i) {
        std::vector<bool> seen(static_cast<size_t>(order) + 1, false);
        for (int j = 1; j <= order; ++j) {
            int v = g.prod(i, j);
            if (seen[static_cast<size_t>(v)]) return fail("row " + std::to_string(i) + " is not a permutation");
            seen[static_cast<size_t>(v)] = true;
        }
    }
    for (int j = 1; j <= order; ++j) {
        std::vector<bool> seen(static_cast<size_t>(order) + 1, false);
        for (int i = 1; i <= order; ++i) {
            int v = g.prod(i, j);
            if (seen[static_cast<size_t>(v)]) return fail("column " + std::to_string(j) + " is not a permutation");
            seen[static_cast<size_t>(v)] = true;
        }
    }

    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j)
            for (int k = 1; k <= order; ++k)
                if (g.prod(g.prod(i, j), k) != g.prod(i, g.prod(j, k)))
                    return fail("associativity fails at triple (" + std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k) + ")");

    for (int i = 1; i <= order; ++i) {
        bool found = false;
        for (int r = 1; r <= order; ++r)
            if (g.prod(i, r) == 1) {
                found = true;
                break;
            }
        if (!found) return fail("element " + std::to_string(i) + " has no inverse");
    }

    res.ok = true;
    res.table = std::move(g);
    return res;
}

struct GroupEnumLimits {
    int max_order = 24;
    int max_subgroup_order = 12;
};

// All size-m subsets containing 1 that are closed under product and inverse,
// in canonical (lexicographic) order. Empty when m does not divide |G|.
inline std::vector<SubgroupRef> subgroups_of_order(const GroupTable& g, int m,
                                                   const GroupEnumLimits& limits = {}) {
    std::vector<SubgroupRef> out;
    if (m < 1) throw contract_violation("subgroup order must be positive");
    if (g.order % m != 0) return out; // Lagrange filter
    if (g.order > limits.max_order)
        throw cap_exceeded("group order exceeds enumeration cap", std::to_string(g.order));
    if (m > limits.max_subgroup_order)
        throw cap_exceeded("subgroup order exceeds enumeration cap", std::to_string(m));

    std::vector<int> subset;
    subset.reserve(static_cast<size_t>(m));
    subset.push_back(1);

    auto is_subgroup = [&](const std::vector<int>& s) {
        std::vector<bool> member(static_cast<size_t>(g.order) + 1, false);
        for (int x : s) member[static_cast<size_t>(x)] = true;
        for (int a : s)
            for (int b : s)
                if (!member[static_cast<size_t>(g.prod(a, b))]) return false;
        for (int a : s) {
            bool inv = false;
            for (int b : s)
                if (g.prod(a, b) == 1) {
                    inv = true;
                    break;
                }
            if (!inv) return false;
        }
        return true;
    };

    // lexicographic subsets of {2..order} of size m-1
    std::vector<int> pick(static_cast<size_t>(m - 1));
    auto rec = [&](auto&& self, int start, int need) -> void {
        if (need == 0) {
            std::vector<int> s = subset;
            s.insert(s.end(), pick.begin(), pick.begin() + (m - 1));
            if (is_subgroup(s)) out.push_back(SubgroupRef{s});
            return;
        }
        for (int v = start; v <= g.order - need + 1; ++v) {
            pick[static_cast<size_t>(m - 1 - need)] = v;
            self(self, v + 1, need - 1);
        }
    };
    if (m == 1) {
        out.push_back(SubgroupRef{{1}});
        return out;
    }
    rec(rec, 2, m - 1);
    return out;
}

inline SubgroupRef conjugate_subgroup(const GroupTable& g, const SubgroupRef& s, int tau) {
    int tinv = g.inverse_of(tau);
    std::set<int> conj;
    for (int x : s.elements) conj.insert(g.prod(g.prod(tinv, x), tau));
    return SubgroupRef{std::vector<int>(conj.begin(), conj.end())};
}

// Orbit {tau^{-1} S tau : tau in G} as a deduplicated list plus its size.
inline std::pair<int, std::vector<SubgroupRef>> conjugates_of_subgroup(const GroupTable& g, const SubgroupRef& s) {
    std::set<std::vector<int>> orbit;
    for (int tau = 1; tau <= g.order; ++tau) orbit.insert(conjugate_subgroup(g, s, tau).elements);
    std::vector<SubgroupRef> out;
    for (const auto& e : orbit) out.push_back(SubgroupRef{e});
    return {static_cast<int>(out.size()), out};
}

inline std::vector<int> normalizer(const GroupTable& g, const SubgroupRef& s) {
    std::vector<int> out;
    for (int tau = 1; tau <= g.order; ++tau)
        if (conjugate_subgroup(g, s, tau).elements == s.elements) out.push_back(tau);
    return out;
}

// All injective homomorphisms H -> G fixing the identity, each returned as the
// image tuple (phi(2), ..., phi(r)), in lexicographic order.
inline std::vector<std::vector<int>> enumerate_injections(const GroupTable& h, const GroupTable& g) {
    std::vector<std::vector<int>> out;
    if (h.order > g.order || g.order % h.order != 0) return out;
    std::vector<int> phi(static_cast<size_t>(h.order) + 1, 0);
    phi[1] = 1;
    std::vector<bool> used(static_cast<size_t>(g.order) + 1, false);
    used[1] = true;

    auto consistent = [&](int assigned_up_to) {
        for (int u = 1; u <= assigned_up_to; ++u)
            for (int v = 1; v <= assigned_up_to; ++v) {
                int w = h.prod(u, v);
                if (w <= assigned_up_to && g.prod(phi[static_cast<size_t>(u)], phi[static_cast<size_t>(v)]) !=
                                               phi[static_cast<size_t>(w)])
                    return false;
            }
        return true;
    };

    auto rec = [&](auto&& self, int next) -> void {
        if (next > h.order) {
            out.emplace_back(phi.begin() + 2, phi.end());
            return;
        }
        for (int cand = 2; cand <= g.order; ++cand) {
            if (used[static_cast<size_t>(cand)]) continue;
            phi[static_cast<size_t>(next)] = cand;
            used[static_cast<size_t>(cand)] = true;
            if (consistent(next)) self(self, next + 1);
            used[static_cast<size_t>(cand)] = false;
            phi[static_cast<size_t>(next)] = 0;
        }
    };
    if (h.order == 1) {
        out.emplace_back(); // unique empty tuple
        return out;
    }
    rec(rec, 2);
    return out;
}

inline bool groups_isomorphic(const GroupTable& a, const GroupTable& b) {
    if (a.order != b.order) return false;
    return !enumerate_injections(a, b).empty();
}

// Coset table N/S for S normal in the subgroup N of g (elements of N given
// 1-based in g). Cosets are labeled by their minimal representative; index 1
// is the coset of the identity.
inline GroupTable quotient_table(const GroupTable& g, const std::vector<int>& n_elems,
                                 const std::vector<int>& s_elems) {
    std::set<int> sset(s_elems.begin(), s_elems.end());
    std::vector<std::vector<int>> cosets;
    std::set<int> assigned;
    for (int x : n_elems) {
        if (assigned.count(x)) continue;
        std::set<int> coset;
        for (int s : s_elems) coset.insert(g.prod(x, s));
        for (int y : coset) assigned.insert(y);
        cosets.emplace_back(coset.begin(), coset.end());
    }
    std::sort(cosets.begin(), cosets.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    // identity coset (contains 1) first
    for (size_t i = 0; i < cosets.size(); ++i)
        if (std::find(cosets[i].begin(), cosets[i].end(), 1) != cosets[i].end()) {
            std::swap(cosets[0], cosets[i]);
            break;
        }
    auto coset_index = [&](int x) {
        for (size_t i = 0; i < cosets.size(); ++i)
            if (std::find(cosets[i].begin(), cosets[i].end(), x) != cosets[i].end())
                return static_cast<int>(i) + 1;
        throw contract_violation("element outside the given normalizer");
    };
    int q = static_cast<int>(cosets.size());
    std::vector<std::vector<int>> tbl(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j)
            tbl[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                coset_index(g.prod(cosets[static_cast<size_t>(i - 1)].front(), cosets[static_cast<size_t>(j - 1)].front()));
    auto res = validate_group(q, tbl, g.name + "-quotient");
    if (!res.ok) throw contract_violation("quotient is not a group: " + res.diagnostic + " (S not normal in N?)");
    return res.table;
}

// ---- group table file format ----------------------------------------------
// line 1: "group <name> order <d)", then d lines of d space-separated 1-based
// indices; blank lines and '#' comments ignored.

inline ValidationResult parse_group_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) lines.push_back(line);
    }
    if (lines.empty()) throw parse_error("empty group file");
    std::istringstream head(lines[0]);
    std::string kw, name, orderkw;
    int d = 0;
    head >> kw >> name >> orderkw >> d;
    if (kw != "group" || orderkw != "order" || d < 1)
        throw parse_error("group file header must be 'group <name> order <d>'");
    if (static_cast<int>(lines.size()) != d + 1)
        throw parse_error("group file: expected " + std::to_string(d) + " table rows");
    std::vector<std::vector<int>> raw;
    for (int i = 1; i <= d; ++i) {
        std::istringstream row(lines[static_cast<size_t>(i)]);
        std::vector<int> r;
        int v;
        while (row >> v) r.push_back(v);
        if (static_cast<int>(r.size()) != d)
            throw parse_error("group file: row " + std::to_string(i) + " has " + std::to_string(r.size()) +
                              " entries, expected " + std::to_string(d));
        raw.push_back(std::move(r));
    }
    return validate_group(d, raw, name);
}

inline std::string serialize_group(const GroupTable& g) {
    std::string out = "group " + g.name + " order " + std::to_string(g.order) + "\n";
    for (int i = 1; i <= g.order; ++i) {
        for (int j = 1; j <= g.order; ++j) {
            if (j > 1) out += " ";
            out += std::to_string(g.prod(i, j));
        }
        out += "\n";
    }
    return out;
}

inline GroupTable load_group_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open group file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    auto res = parse_group_text(buf.str());
    if (!res.ok) throw parse_error("invalid group table in " + path + ": " + res.diagnostic);
    return res.table;
}

} // namespace igp2h10

#endif
