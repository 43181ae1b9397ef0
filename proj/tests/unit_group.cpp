#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "igp2h10/group.hpp"

using namespace igp2h10;

namespace {

const std::vector<std::string> kBundled = {"C1",  "C2",  "C3",  "C4",    "C5", "C6", "C7", "C8", "C9",
                                           "C10", "C11", "C12", "C2xC2", "S3", "D4", "Q8", "A4", "D6"};

GroupTable bundled(const std::string& name) {
    return load_group_file(std::string(IGP2H10_DATA_DIR) + "/groups/" + name + ".grp");
}

// test-side oracle: first associativity failure in (i,j,k) scan order
std::array<int, 3> first_assoc_failure(int d, const std::vector<std::vector<int>>& t) {
    auto p = [&](int i, int j) { return t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; };
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int k = 1; k <= d; ++k)
                if (p(p(i, j), k) != p(i, p(j, k))) return {i, j, k};
    return {0, 0, 0};
}

} // namespace

TEST_CASE("validate_group accepts C2 and rejects the broken table") {
    auto ok = validate_group(2, {{1, 2}, {2, 1}}, "C2");
    REQUIRE(ok.ok);
    REQUIRE(ok.table.prod(2, 2) == 1);

    auto bad = validate_group(2, {{1, 2}, {2, 2}}, "broken");
    REQUIRE_FALSE(bad.ok);
    REQUIRE(bad.diagnostic.find("row 2") != std::string::npos);
    REQUIRE(bad.diagnostic.find("permutation") != std::string::npos);
}

TEST_CASE("non-associative order-5 quasigroup is rejected with the witnessing triple") {
    std::vector<std::vector<int>> t = {{1, 2, 3, 4, 5},
                                       {2, 1, 4, 5, 3},
                                       {3, 4, 5, 1, 2},
                                       {4, 5, 2, 3, 1},
                                       {5, 3, 1, 2, 4}};
    auto triple = first_assoc_failure(5, t);
    REQUIRE(triple[0] != 0); // the oracle says it is genuinely non-associative
    auto res = validate_group(5, t, "quasi5");
    REQUIRE_FALSE(res.ok);
    std::string expect = "associativity fails at triple (" + std::to_string(triple[0]) + "," +
                         std::to_string(triple[1]) + "," + std::to_string(triple[2]) + ")";
    REQUIRE(res.diagnostic == expect);
}

TEST_CASE("all bundled tables validate; any single-entry corruption is rejected") {
    for (const auto& name : kBundled) {
        GroupTable g = bundled(name);
        REQUIRE(g.name == name);
        auto res = validate_group(g.order, g.table, g.name);
        REQUIRE(res.ok);
        size_t rejected = 0, total = 0;
        for (int i = 1; i <= g.order; ++i)
            for (int j = 1; j <= g.order; ++j)
                for (int v = 1; v <= g.order; ++v) {
                    if (v == g.prod(i, j)) continue;
                    auto broken = g.table;
                    broken[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = v;
                    ++total;
                    if (!validate_group(g.order, broken, "fuzz").ok) ++rejected;
                }
        REQUIRE(rejected == total);
    }
}

TEST_CASE("subgroups_of_order") {
    GroupTable s3 = bundled("S3");
    auto subs2 = subgroups_of_order(s3, 2);
    REQUIRE(subs2.size() == 3);

    GroupTable c4 = bundled("C4");
    auto c4subs = subgroups_of_order(c4, 2);
    REQUIRE(c4subs.size() == 1);
    REQUIRE(c4subs[0].elements == std::vector<int>{1, 3});

    for (const auto& name : kBundled) {
        GroupTable g = bundled(name);
        auto trivial = subgroups_of_order(g, 1);
        REQUIRE(trivial.size() == 1);
        REQUIRE(trivial[0].elements == std::vector<int>{1});
        if (g.order > 1) REQUIRE(subgroups_of_order(g, g.order + 1).empty()); // Lagrange filter
    }
}

TEST_CASE("Lagrange invariant over all bundled groups") {
    for (const auto& name : kBundled) {
        GroupTable g = bundled(name);
        for (int m = 1; m <= g.order; ++m)
            for (const auto& s : subgroups_of_order(g, m)) {
                REQUIRE(static_cast<int>(s.elements.size()) == m);
                REQUIRE(g.order % m == 0);
            }
    }
}

TEST_CASE("conjugates_of_subgroup") {
    GroupTable s3 = bundled("S3");
    for (const auto& s : subgroups_of_order(s3, 2)) {
        auto [count, orbit] = conjugates_of_subgroup(s3, s);
        REQUIRE(count == 3);
        REQUIRE(orbit.size() == 3);
    }
    auto a3 = subgroups_of_order(s3, 3);
    REQUIRE(a3.size() == 1);
    REQUIRE(conjugates_of_subgroup(s3, a3[0]).first == 1); // normal
    auto whole = subgroups_of_order(s3, 6);
    REQUIRE(whole.size() == 1);
    REQUIRE(conjugates_of_subgroup(s3, whole[0]).first == 1);
}

TEST_CASE("enumerate_injections") {
    GroupTable c1 = bundled("C1"), c2 = bundled("C2"), c4 = bundled("C4"), v4 = bundled("C2xC2");
    auto inj_c2_c4 = enumerate_injections(c2, c4);
    REQUIRE(inj_c2_c4.size() == 1);
    REQUIRE(inj_c2_c4[0] == std::vector<int>{3}); // the order-2 element of C4

    REQUIRE(enumerate_injections(c2, v4).size() == 3);

    auto inj_triv = enumerate_injections(c1, c4);
    REQUIRE(inj_triv.size() == 1);
    REQUIRE(inj_triv[0].empty());

    // maps are homomorphisms and injective, against both tables
    GroupTable d4 = bundled("D4");
    auto v4_into_d4 = enumerate_injections(v4, d4);
    REQUIRE_FALSE(v4_into_d4.empty());
    for (const auto& tup : v4_into_d4) {
        std::vector<int> phi{0, 1};
        phi.insert(phi.end(), tup.begin(), tup.end());
        for (int u = 1; u <= v4.order; ++u)
            for (int v = 1; v <= v4.order; ++v)
                REQUIRE(d4.prod(phi[static_cast<size_t>(u)], phi[static_cast<size_t>(v)]) ==
                        phi[static_cast<size_t>(v4.prod(u, v))]);
        for (int u = 1; u <= v4.order; ++u)
            for (int v = u + 1; v <= v4.order; ++v)
                REQUIRE(phi[static_cast<size_t>(u)] != phi[static_cast<size_t>(v)]);
    }
    GroupTable s3 = bundled("S3");
    REQUIRE(enumerate_injections(s3, c4).empty()); // 6 does not divide 4
}

TEST_CASE("normalizer and quotient table") {
    GroupTable d4 = bundled("D4");
    // center of D4 is {1, r^2}; the quotient is the Klein four group
    SubgroupRef center{{1, 3}};
    auto n = normalizer(d4, center);
    REQUIRE(static_cast<int>(n.size()) == d4.order);
    GroupTable q = quotient_table(d4, n, center.elements);
    REQUIRE(q.order == 4);
    REQUIRE(groups_isomorphic(q, bundled("C2xC2")));
    REQUIRE_FALSE(groups_isomorphic(q, bundled("C4")));
}

TEST_CASE("group file io round trip") {
    GroupTable g = bundled("S3");
    std::string text = serialize_group(g);
    auto res = parse_group_text(text);
    REQUIRE(res.ok);
    REQUIRE(res.table.table == g.table);

    auto commented = parse_group_text("# a comment\n\ngroup C2 order 2\n1 2\n2 1  # trailing\n");
    REQUIRE(commented.ok);
    REQUIRE_THROWS_AS(parse_group_text("group X order 2\n1 2\n"), parse_error);
}
