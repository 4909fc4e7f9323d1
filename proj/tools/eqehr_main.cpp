// Command-line interface: classical Ehrhart data, equivariant H*-series
// reports, and named two-route verification targets.
//
// Exit codes: 0 success; 1 verification mismatch; 2 malformed input;
// 3 internal cross-check failure; 4 polynomial-but-not-effective under
// --expect-effective.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "eqehr/eqehr.hpp"
#include "eqehr/json_io.hpp"

namespace {

using namespace eqehr;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitNotEffective = 4;

struct Options {
    std::string input_file;
    std::string family;
    unsigned d = 0;
    long k = 1;
    unsigned p = 3;
    unsigned ell = 1;
    unsigned axis = 0;
    std::string group = "dihedral";
    std::string format = "table";
    std::optional<long> order;
    bool expect_effective = false;
    bool seed_free = false;  // computation is deterministic; flag only asserts it
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

RationalPolytope resolve_polytope(const Options& opt) {
    if (!opt.input_file.empty()) {
        Json j = load_json(opt.input_file);
        if (j.contains("family")) return polytope_from_family_json(j);
        return polytope_from_json(j);
    }
    if (opt.family.empty())
        throw std::invalid_argument("need --input or --family");
    Json j{{"family", opt.family}, {"d", opt.d}, {"k", opt.k}};
    return polytope_from_family_json(j);
}

EquivariantSetup resolve_setup(const Options& opt) {
    if (!opt.input_file.empty()) {
        Json j = load_json(opt.input_file);
        if (j.contains("family")) return setup_from_family_json(j);
        RationalPolytope p = polytope_from_json(j.at("polytope"));
        SymmetryGroup g = symmetry_from_json(j.at("group"));
        return validate_setup(p, std::move(g));
    }
    if (opt.family.empty())
        throw std::invalid_argument("need --input or --family");
    Json j{{"family", opt.family}, {"d", opt.d}, {"k", opt.k}};
    if (opt.group.rfind("axis", 0) == 0)
        j["group"] = Json{{"axis", opt.axis}};
    else
        j["group"] = opt.group;
    return setup_from_family_json(j);
}

void print_ehrhart_table(const EhrhartData& e, std::ostream& os) {
    os << "dimension        " << e.dim << "\n";
    os << "denominator      " << e.denominator << "\n";
    os << "counts           ";
    for (std::size_t m = 0; m < e.counts.size(); ++m) os << (m ? " " : "") << e.counts[m];
    os << "\n";
    os << "h*               " << e.hstar.str() << "\n";
    os << "series           " << e.series.str() << "\n";
    os << "period           " << e.min_period << "\n";
    os << "pseudo-integral  " << (e.is_pip ? "yes" : "no") << "\n";
    os << "quasipolynomial  (residue: coefficients low to high)\n";
    for (long r = 0; r < e.quasi.period; ++r) {
        os << "  m = " << r << " mod " << e.quasi.period << ":";
        for (const auto& c : e.quasi.table[static_cast<std::size_t>(r)])
            os << " " << rat_to_string(c);
        os << "\n";
    }
}

void print_hstar_table(const HStarReport& r, std::ostream& os) {
    os << "classes          ";
    for (std::size_t c = 0; c < r.class_labels.size(); ++c)
        os << (c ? " | " : "") << r.class_labels[c];
    os << "\n";
    for (std::size_t c = 0; c < r.hstar_per_class.size(); ++c)
        os << "H*(" << r.class_labels[c] << ") = " << r.hstar_per_class[c].str() << "\n";
    os << "polynomial       " << (r.is_polynomial ? "yes" : "no") << "\n";
    if (r.order_truncated)
        os << "truncated to     t^" << *r.order_truncated << "\n";
    os << "coefficients (one row per degree, columns = irreducibles";
    os << ")\n";
    for (std::size_t j = 0; j < r.multiplicities.size(); ++j) {
        os << "  t^" << j << ":";
        for (std::size_t i = 0; i < r.multiplicities[j].mult.size(); ++i)
            os << " " << r.multiplicities[j].mult[i] << "*" << r.row_labels[i];
        os << "\n";
    }
    os << "effective        "
       << (r.is_effective ? (*r.is_effective ? "yes" : "no") : "not applicable (non-polynomial)")
       << "\n";
}

int run_ehrhart(const Options& opt) {
    EhrhartData e = ehrhart(resolve_polytope(opt));
    if (opt.format == "json")
        std::cout << ehrhart_json(e).dump(2) << "\n";
    else
        print_ehrhart_table(e, std::cout);
    return kExitOk;
}

int run_hstar(const Options& opt) {
    EquivariantSetup s = resolve_setup(opt);
    HStarReport r = hstar_series(s, opt.order);
    if (opt.format == "json")
        std::cout << hstar_report_json(r).dump(2) << "\n";
    else
        print_hstar_table(r, std::cout);
    if (opt.expect_effective && r.is_polynomial && r.is_effective && !*r.is_effective)
        return kExitNotEffective;
    return kExitOk;
}

// -- reproduction targets ---------------------------------------------------

struct Diff {
    bool identical = true;
    std::ostringstream log;

    template <typename T>
    void compare(const std::string& what, const T& pipeline, const T& closed) {
        bool same = pipeline == closed;
        if (!same) identical = false;
        log << (same ? "  ok   " : "  DIFF ") << what;
        if (!same) log << "\n    pipeline:    " << str_of(pipeline)
                       << "\n    closed form: " << str_of(closed);
        log << "\n";
    }

    static std::string str_of(const Int& v) { return v.str(); }
    static std::string str_of(const Rat& v) { return rat_to_string(v); }
    static std::string str_of(const Poly& v) { return v.str(); }
    static std::string str_of(const RationalGenFunction& v) { return v.str(); }
    static std::string str_of(const IVec& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
        return s + "]";
    }

    int finish(const std::string& target) {
        std::cout << "reproduce " << target << "\n" << log.str();
        std::cout << (identical ? "match: yes" : "match: NO") << "\n";
        return identical ? kExitOk : kExitMismatch;
    }
};

int reproduce_thm33(unsigned p) {
    Diff diff;
    auto setup = sep_cycle_setup(p, SepGroup::dihedral);
    auto rep = hstar_series(setup);
    auto oracle = prime_cycle_hstar(p);
    diff.compare("polynomial", Int(rep.is_polynomial), Int(1));
    diff.compare("degree count", Int(rep.multiplicities.size()), Int(oracle.size()));
    for (std::size_t j = 0; j < oracle.size() && j < rep.multiplicities.size(); ++j) {
        const auto& m = rep.multiplicities[j].mult;
        IVec expect{oracle[j].psi1, oracle[j].psi2};
        for (std::size_t i = 2; i < m.size(); ++i) expect.push_back(oracle[j].chi);
        diff.compare("degree " + std::to_string(j), m, expect);
    }
    diff.compare("effective", Int(rep.is_effective && *rep.is_effective), Int(1));
    return diff.finish("thm33 (p=" + std::to_string(p) + ")");
}

int reproduce_thm37(unsigned d) {
    Diff diff;
    auto setup = sep_cycle_setup(d, SepGroup::s_only);
    auto rep = hstar_series(setup);
    auto oracle = reflection_cycle_hstar(d);
    diff.compare("polynomial", Int(rep.is_polynomial), Int(1));
    diff.compare("degree count", Int(rep.multiplicities.size()), Int(oracle.size()));
    for (std::size_t j = 0; j < oracle.size() && j < rep.multiplicities.size(); ++j)
        diff.compare("degree " + std::to_string(j), rep.multiplicities[j].mult,
                     IVec{oracle[j].chi1, oracle[j].chi2});
    diff.compare("identity evaluation", rep.hstar_per_class[0],
                 RationalGenFunction(ohsugi_h(d), Poly::one()));
    diff.compare("effective", Int(rep.is_effective && *rep.is_effective), Int(1));
    return diff.finish("thm37 (d=" + std::to_string(d) + ")");
}

int reproduce_thm44(long k, unsigned d) {
    Diff diff;
    auto setup = cross_setup(k, d, CrossGroup::all_reflections);
    auto rep = hstar_series(setup);
    auto oracle = cross_reflection_coeffs(k, d);
    diff.compare("polynomial", Int(rep.is_polynomial), Int(1));
    diff.compare("degree count", Int(rep.multiplicities.size()), Int(oracle.size()));
    for (std::size_t j = 0; j < oracle.size() && j < rep.multiplicities.size(); ++j) {
        IVec expect(rep.multiplicities[j].mult.size(), Int(0));
        expect[0] = oracle[j].a;  // trivial character
        expect[1] = oracle[j].b;  // sign character of the last reflection
        diff.compare("degree " + std::to_string(j), rep.multiplicities[j].mult, expect);
    }
    return diff.finish("thm44 (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");
}

int reproduce_prop32(unsigned ell) {
    Diff diff;
    auto closed = half_cross_slice_series(ell);
    auto odd = sep_cycle_setup(2 * ell + 1, SepGroup::s_only);
    auto even = sep_cycle_setup(2 * ell + 2, SepGroup::s_only);
    diff.compare("odd cycle fixed series", ehrhart(fixed_polytope(odd, 1)).series, closed);
    diff.compare("even cycle fixed series", ehrhart(fixed_polytope(even, 1)).series, closed);
    return diff.finish("prop32 (l=" + std::to_string(ell) + ")");
}

int reproduce_prop41(long k, unsigned d) {
    Diff diff;
    diff.compare("series", ehrhart(cross_polytope_rational(k, d)).series, cross_family_series(k, d));
    return diff.finish("prop41 (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");
}

int reproduce_ex22() {
    Diff diff;
    std::vector<QVec> v;
    for (int i = 0; i < 4; ++i) {
        QVec e(4, Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        v.push_back(e);
    }
    IMat sigma(4, 4);
    sigma(0, 1) = 1;
    sigma(1, 0) = 1;
    sigma(2, 3) = 1;
    sigma(3, 2) = 1;
    auto setup = validate_setup(RationalPolytope::from_points(4, v), cyclic_symmetry(sigma, 2));
    auto rows = equivariant_series(setup, 10);
    for (long m = 0; m <= 10; ++m) {
        diff.compare("identity count m=" + std::to_string(m),
                     Rat(rows[static_cast<std::size_t>(m)].values[0]), Rat(binomial(m + 3, 3)));
        diff.compare("swap count m=" + std::to_string(m),
                     Rat(rows[static_cast<std::size_t>(m)].values[1]),
                     m % 2 == 0 ? Rat(m / 2 + 1) : Rat(0));
    }
    auto rep = hstar_series(setup);
    diff.compare("series numerator", rep.hstar_per_class[0], RationalGenFunction::one());
    diff.compare("multiplicities", rep.multiplicities[0].mult, IVec{1, 0});
    return diff.finish("ex22");
}

int reproduce_ex45() {
    Diff diff;
    auto setup = cross_setup(1, 2, CrossGroup::sigma_d);
    auto rep = hstar_series(setup);
    diff.compare("polynomial", Int(rep.is_polynomial), Int(1));
    diff.compare("degree 0", rep.multiplicities[0].mult, IVec{1, 0});
    diff.compare("degree 1", rep.multiplicities[1].mult, IVec{1, -1});
    diff.compare("degree 2", rep.multiplicities[2].mult, IVec{1, 0});
    diff.compare("not effective", Int(rep.is_effective && !*rep.is_effective), Int(1));
    auto e = ehrhart(setup.polytope);
    diff.compare("period one", Int(e.min_period), Int(1));
    diff.compare("denominator", e.denominator, Int(2));
    // the doubled polytope becomes effective
    auto twice = validate_setup(setup.polytope.dilate(2),
                                cyclic_symmetry(coordinate_reflection(2, 1), 2));
    auto rep2 = hstar_series(twice);
    diff.compare("2P degree 0", rep2.multiplicities[0].mult, IVec{1, 0});
    diff.compare("2P degree 1", rep2.multiplicities[1].mult, IVec{4, 0});
    diff.compare("2P degree 2", rep2.multiplicities[2].mult, IVec{3, 0});
    diff.compare("2P effective", Int(rep2.is_effective && *rep2.is_effective), Int(1));
    std::cout << "H*[t] = chi1 + (chi1 - chi2) t + chi1 t^2, polynomial, not effective\n";
    return diff.finish("ex45");
}

int reproduce_lemma34(unsigned d) {
    auto rec = cycle_inequality_check(d);
    std::cout << "reproduce lemma34 (d=" << d << ")\n";
    std::cout << "  j     h_j     d(g_j - 1) + 1     margin\n";
    for (const auto& row : rec)
        std::cout << "  " << row.j << "     " << row.h << "     " << row.bound << "     "
                  << row.margin << "\n";
    std::cout << "match: yes\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classical and equivariant lattice-point enumeration"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_group) {
        cmd->add_option("--input", opt.input_file, "JSON input file");
        cmd->add_option("--family", opt.family, "builtin family: sep-cycle | cross");
        cmd->add_option("--d", opt.d, "cycle length / cross dimension");
        cmd->add_option("--k", opt.k, "odd numerator of the rational cross vertex");
        cmd->add_option("--format", opt.format, "table | json")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_flag("--seed-free", opt.seed_free,
                      "assert deterministic computation (always on; no RNG exists)");
        if (with_group) {
            cmd->add_option("--group", opt.group,
                            "dihedral | s-only | sigma-d | all-reflections | axis");
            cmd->add_option("--axis", opt.axis, "reflection axis for --group axis (0-based)");
            cmd->add_option("--order", opt.order, "truncation order for non-polynomial series");
        }
    };

    auto* cmd_ehrhart = app.add_subcommand("ehrhart", "classical counting pipeline");
    add_common(cmd_ehrhart, false);

    auto* cmd_hstar = app.add_subcommand("hstar", "equivariant H*-series report");
    add_common(cmd_hstar, true);
    cmd_hstar->add_flag("--expect-effective", opt.expect_effective,
                        "exit 4 when the series is a polynomial but not effective");

    auto* cmd_repro = app.add_subcommand("reproduce", "two-route verification targets");
    std::string target;
    cmd_repro
        ->add_option("target", target,
                     "thm33 | thm37 | thm44 | prop32 | prop41 | ex22 | ex45 | lemma34")
        ->required();
    cmd_repro->add_option("--p", opt.p, "prime cycle length");
    cmd_repro->add_option("--d", opt.d, "cycle length / cross dimension");
    cmd_repro->add_option("--k", opt.k, "odd cross parameter");
    cmd_repro->add_option("--ell", opt.ell, "slice parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*cmd_ehrhart) return run_ehrhart(opt);
        if (*cmd_hstar) return run_hstar(opt);
        if (*cmd_repro) {
            if (target == "thm33") return reproduce_thm33(opt.p);
            if (target == "thm37") return reproduce_thm37(opt.d ? opt.d : 3);
            if (target == "thm44") return reproduce_thm44(opt.k, opt.d ? opt.d : 2);
            if (target == "prop32") return reproduce_prop32(opt.ell);
            if (target == "prop41") return reproduce_prop41(opt.k, opt.d ? opt.d : 2);
            if (target == "ex22") return reproduce_ex22();
            if (target == "ex45") return reproduce_ex45();
            if (target == "lemma34") return reproduce_lemma34(opt.d ? opt.d : 3);
            std::cerr << "unknown target: " << target << "\n";
            return kExitBadInput;
        }
    } catch (const CrossCheckError& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NonIntegralError& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NonRationalError& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
