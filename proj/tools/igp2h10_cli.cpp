// Command-line surface for the realizability-to-polynomial toolkit: encode
// inverse-Galois / subgroup / automorphism instances over a described base
// ring, verify witnesses exactly, and decide desk-scale systems.
//
// Exit codes: 0 success/accepted, 1 rejected/unsolvable, 2 parse error,
// 3 cap exceeded, 4 contract violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "igp2h10/solver_automorphism.hpp"

using namespace igp2h10;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw parse_error("cannot open output file: " + path);
    f << content;
}

struct EncodeArgs {
    std::string problem = "igp";
    std::string ring_spec;
    std::vector<std::string> group_files;
    int degree = 0;
    bool single_equation = false;
    bool splice_predicates = false;
    long cap = 0;
    std::string output;
};

DiophSystem run_encode(const EncodeArgs& args) {
    RingDescriptor ring = parse_ring_spec(args.ring_spec);
    EncodeOptions opts;
    if (args.cap > 0) opts.conjoin_term_cap = static_cast<size_t>(args.cap);

    DiophSystem sys;
    if (args.problem == "igp") {
        if (args.group_files.size() != 1) throw parse_error("igp expects exactly one group file");
        GroupTable g = load_group_file(args.group_files[0]);
        sys = encode_disequation(encode_group_realization(ring, g, opts));
    } else if (args.problem == "subgroup") {
        if (args.group_files.size() != 2) throw parse_error("subgroup expects <G.grp> <H.grp>");
        GroupTable g = load_group_file(args.group_files[0]);
        GroupTable h = load_group_file(args.group_files[1]);
        sys = encode_disequation(encode_subgroup_problem(ring, g, h, opts));
    } else if (args.problem == "automorphism") {
        if (args.group_files.size() != 1) throw parse_error("automorphism expects exactly one group file");
        if (args.degree < 1) throw parse_error("automorphism requires --degree n");
        GroupTable h = load_group_file(args.group_files[0]);
        sys = encode_automorphism_problem(ring, h, args.degree, opts);
    } else {
        throw parse_error("unknown problem: " + args.problem + " (igp | subgroup | automorphism)");
    }

    if (args.single_equation) {
        if (args.splice_predicates && ring.is_field()) {
            // realize nonzero predicates by inverse witnesses over a field
            bool again = true;
            while (again) {
                again = false;
                for (size_t i = 0; i < sys.predicates.size(); ++i)
                    if (sys.predicates[i].kind == PredicateConstraint::Kind::Nonzero) {
                        sys = splice_definition(sys, i, nonzero_inverse_definition(ring));
                        again = true;
                        break;
                    }
            }
        }
        ZeroForm z = ZeroForm::for_ring(ring);
        size_t cap = args.cap > 0 ? static_cast<size_t>(args.cap) : EncodeOptions{}.conjoin_term_cap;
        MultiPoly single = conjoin_single(sys, z, /*predicates_waived=*/true, cap);
        sys.equations.push_back(std::move(single));
        sys.provenance.push_back("conjoin-single");
    }
    return sys;
}

int cmd_validate(const std::string& path) {
    auto res = parse_group_text(read_file(path));
    if (res.ok) {
        std::cout << "valid: group " << res.table.name << " of order " << res.table.order << "\n";
        return 0;
    }
    std::cout << "invalid: " << res.diagnostic << "\n";
    return 1;
}

int cmd_verify(const std::string& system_path, const std::string& witness_path) {
    DiophSystem sys = parse_system(read_file(system_path));
    Witness w = parse_witness(read_file(witness_path));
    auto rep = verify_witness(sys, w);
    std::cout << rep.text();
    return rep.accepted ? 0 : 1;
}

int cmd_brute(const std::string& system_path, long cap) {
    DiophSystem sys = parse_system(read_file(system_path));
    auto rep = brute_force_enumerate(sys, cap > 0 ? BigInt(cap) : BigInt(1000000));
    std::cout << "status: " << rep.status_token() << "\n";
    std::cout << "method: " << rep.method << "\n";
    std::cout << "search-space: " << rep.search_space.str() << "\n";
    if (!rep.notes.empty()) std::cout << "notes: " << rep.notes << "\n";
    if (!rep.witnesses.empty()) std::cout << serialize_witness(rep.witnesses[0]);
    return rep.status == SolveReport::Status::SolvableWithWitness ? 0 : 1;
}

// End-to-end desk scenarios over the bundled data; prints one line each.
int cmd_demo(const std::string& data_dir, unsigned seed) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };
    auto grp = [&](const std::string& name) { return load_group_file(data_dir + "/groups/" + name + ".grp"); };
    auto wit = [&](const std::string& name) {
        return parse_witness(read_file(data_dir + "/witnesses/" + name + ".wit"));
    };

    // exact arithmetic spot fuzz (seeded)
    {
        std::mt19937 rng(seed);
        auto reg = make_registry(CoeffField::prime(5));
        reg->add("x");
        reg->add("y");
        bool ok = true;
        std::uniform_int_distribution<int> dc(-6, 6), de(0, 3);
        auto rnd = [&]() {
            std::vector<MultiPoly::Term> ts;
            for (int t = 0; t < 4; ++t)
                ts.push_back(MultiPoly::Term{Monomial::mul(Monomial::var(0, static_cast<uint32_t>(de(rng))),
                                                           Monomial::var(1, static_cast<uint32_t>(de(rng)))),
                                             Scalar(dc(rng))});
            return MultiPoly::from_terms(reg, std::move(ts));
        };
        for (int it = 0; it < 200 && ok; ++it) {
            MultiPoly a = rnd(), b = rnd(), c = rnd();
            ok = ok && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
        }
        check("ring-axioms seeded fuzz over F5", ok);
    }

    RingDescriptor q = RingDescriptor::rationals();
    RingDescriptor f5 = RingDescriptor::prime_field(5);

    // Q witnesses for C2, C3, C4
    for (const auto& [gname, wname] : std::vector<std::pair<std::string, std::string>>{
             {"C2", "c2_q"}, {"C3", "c3_q"}, {"C4", "c4_q"}}) {
        auto sys = encode_disequation(encode_group_realization(q, grp(gname)));
        std::string text = serialize_system(sys);
        auto reparsed = parse_system(text);
        bool round = serialize_system(reparsed) == text;
        auto rep = verify_witness(reparsed, wit(wname));
        check("igp " + gname + " over Q: round trip + bundled witness", round && rep.accepted);
    }

    // not-Galois certification
    {
        auto reg = make_registry(q.coeff_field());
        reg->add("x");
        MultiPoly x = MultiPoly::var(reg, "x");
        auto res = galois_probe_rationals(x * x * x - MultiPoly::constant(reg, Scalar(2)));
        check("x^3 - 2 certified not Galois", res.verdict == GaloisProbeResult::Verdict::NotGaloisCertified);
    }

    // F5 structured runs
    {
        auto rep = structured_solve_finite_field(f5, grp("C2"));
        auto sys = encode_disequation(encode_group_realization(f5, grp("C2")));
        check("igp C2 over F5: structured witness verifies",
              rep.status == SolveReport::Status::SolvableWithWitness &&
                  verify_witness(sys, rep.witnesses[0]).accepted);
        auto v4 = structured_solve_finite_field(f5, grp("C2xC2"));
        check("igp C2xC2 over F5: unsolvable, 625 quartics exhausted",
              v4.status == SolveReport::Status::UnsolvableProven && v4.search_space == 625);
    }
    {
        auto sys = encode_disequation(encode_subgroup_problem(f5, grp("C4"), grp("C2")));
        auto c4 = structured_solve_finite_field(f5, grp("C4"));
        check("subgroup C2 <= C4 over F5: embedding equations hold",
              c4.status == SolveReport::Status::SolvableWithWitness &&
                  verify_witness(sys, c4.witnesses[0]).accepted);
        auto sentinel = encode_subgroup_problem(q, grp("C4"), grp("C3"));
        check("subgroup C3 <= C4: Lagrange sentinel {1=0}",
              sentinel.equations.size() == 1 && poly_text(sentinel.equations[0]) == "1");
    }
    {
        auto rep2 = structured_solve_automorphism(f5, grp("C2"), 2);
        auto rep3 = structured_solve_automorphism(f5, grp("C3"), 3);
        check("automorphism (C2, n=2) over F5 solvable",
              rep2.status == SolveReport::Status::SolvableWithWitness);
        check("automorphism (C3, n=3) over F5 solvable",
              rep3.status == SolveReport::Status::SolvableWithWitness);
    }

    std::cout << (failures == 0 ? "demo: all scenarios passed\n"
                                : "demo: " + std::to_string(failures) + " scenario(s) failed\n");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"igp2h10: compile finite-group realizability problems to polynomial systems"};
    app.require_subcommand(1);

    std::string group_path;
    auto* validate = app.add_subcommand("validate-group", "validate a group table file");
    validate->add_option("file", group_path, "group table file")->required();

    EncodeArgs enc_args;
    auto* encode = app.add_subcommand("encode", "emit a diophsys v1 file for a realizability problem");
    encode->add_option("--problem", enc_args.problem, "igp | subgroup | automorphism")->required();
    encode->add_option("--ring", enc_args.ring_spec, "Q | Z | Fp p=<prime> | numberfield minpoly=<coeffs>")
        ->required();
    encode->add_option("--degree", enc_args.degree, "extension degree n (automorphism problem)");
    encode->add_flag("--single-equation", enc_args.single_equation,
                     "fold the equations into one polynomial (appended as the final eq)");
    encode->add_flag("--splice-predicates", enc_args.splice_predicates,
                     "realize nonzero predicates by inverse witnesses before folding");
    encode->add_option("--cap", enc_args.cap, "term budget override for folding passes");
    encode->add_option("--output", enc_args.output, "output path (default stdout)");
    encode->add_option("files", enc_args.group_files, "group table file(s)")->required();

    std::string sys_path, wit_path;
    auto* verify = app.add_subcommand("verify", "check a witness file against a system file");
    verify->add_option("system", sys_path, "diophsys v1 file")->required();
    verify->add_option("witness", wit_path, "witness v1 file")->required();

    std::string brute_path;
    long brute_cap = 0;
    auto* brute = app.add_subcommand("brute-force", "exhaustively decide a system over a prime field");
    brute->add_option("system", brute_path, "diophsys v1 file")->required();
    brute->add_option("--cap", brute_cap, "assignment cap (default 10^6)");

    std::string data_dir = "data";
    unsigned seed = 20260810;
    auto* demo = app.add_subcommand("demo", "run the bundled desk-scale scenarios");
    demo->add_option("--data", data_dir, "data directory (default ./data)");
    demo->add_option("--seed", seed, "seed for the randomized spot checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(group_path);
        if (encode->parsed()) {
            DiophSystem sys = run_encode(enc_args);
            write_output(enc_args.output, serialize_system(sys));
            return 0;
        }
        if (verify->parsed()) return cmd_verify(sys_path, wit_path);
        if (brute->parsed()) return cmd_brute(brute_path, brute_cap);
        if (demo->parsed()) return cmd_demo(data_dir, seed);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const contract_violation& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 4;
    } catch (const structural_error& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
