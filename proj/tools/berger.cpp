// berger: command-line front end for the Eells-Kuiper computation of SO(5)/SO(3).
//
// Exit codes: 0 ok, 1 verification failure, 2 bad arguments.

#include "berger/assembly.hpp"
#include "berger/json.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace berger;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadArgs = 2;

// Argument errors are reported as std::invalid_argument and map to exit code 2.
using BadArgument = std::invalid_argument;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split(text, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw BadArgument("not an integer list: " + text);
        out.push_back(value);
    }
    return out;
}

std::string decimal(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(15) << r.to_double();
    return os.str();
}

RootSystem system_named(const std::string& name) {
    if (name == "A1") return RootSystem::A1();
    if (name == "B2") return RootSystem::B2();
    if (name == "G2") return RootSystem::G2();
    throw BadArgument("unknown root system " + name);
}

std::string kappa_list(const std::vector<int>& ks) {
    std::string s;
    for (int k : ks) s += (s.empty() ? "" : " + ") + std::string("kappa_") + std::to_string(k);
    return s.empty() ? "0" : s;
}

void print_report(const VerifyReport& report) {
    for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << "[" << c.module << "] " << c.name;
        if (!c.passed) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    std::cout << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
}

int run_ek(const std::string& orientation, bool json, int order) {
    const Orientation o = orientation == "reversed" ? Orientation::reversed : Orientation::standard;
    const EkReport r = compute_ek(o, order);
    if (json) {
        const VerifyReport v = verify(Suite::fast);
        nlohmann::json suites = nlohmann::json::array();
        for (const auto& m : v.modules()) suites.push_back({{"name", m}, {"passed", v.module_passed(m)}});
        nlohmann::json out = {{"ek", to_json(r.ek)},
                              {"eta_D", to_json(r.eta_D)},
                              {"eta_B", to_json(r.eta_B)},
                              {"h_D", to_json(r.h_D)},
                              {"secondary_integral", to_json(r.secondary_integral)},
                              {"intermediate", to_json(r.intermediate)},
                              {"ek_mod1", to_json(r.ek_mod1)},
                              {"s1_mod1", to_json(r.s1)},
                              {"orientation", orientation},
                              {"suites", suites}};
        std::cout << out.dump(2) << "\n";
        return v.passed() ? kOk : kVerifyFailed;
    }
    std::cout << "eta(D)              = " << r.eta_D.to_string() << "\n"
              << "eta(B)              = " << r.eta_B.to_string() << "\n"
              << "h(D)                = " << r.h_D.to_string() << "  (Casimir bound excludes harmonic spinors)\n"
              << "eta(B)/224 + eta(D)/2 = " << r.intermediate.to_string() << "\n"
              << "secondary integral  = " << r.secondary_integral.to_string() << "\n"
              << "ek(M)               = " << r.ek.to_string() << "  (" << orientation << " orientation)\n"
              << "ek(M) in Q/Z        = " << r.ek_mod1.to_string() << "\n"
              << "s1(M) = 28 ek in Q/Z = " << r.s1.to_string() << "\n";
    return kOk;
}

int run_eta(const std::string& term, const std::string& direction, int order) {
    const Direction dir = Direction::parse(direction);
    Rational value;
    if (term == "alpha0")
        value = eta_local(alpha0_term(), dir, order);
    else if (term == "alpha3")
        value = eta_local(alpha3_term(), dir, order);
    else if (term == "D")
        value = eta_local(alpha0_term(), dir, order);
    else if (term == "B")
        value = Rational(1) + eta_local(alpha0_term(), dir, order) + eta_local(alpha3_term(), dir, order);
    else
        throw BadArgument("unknown term " + term);
    std::cout << term << " = " << value.to_string() << " ~ " << decimal(value) << "\n";
    return kOk;
}

int run_spectrum(const std::string& mu_text) {
    const Operator64 b0 = build_B0();
    std::cout << "B0 on span{1(x)1, (1/sqrt7) sum e_i(x)e_i}:\n"
              << restrict_to(b0, trivial_block_basis()).to_string() << "\n\n"
              << "B0 on span{e1(x)1, 1(x)e1, (1/sqrt6) sum_{i>=2} e_i(x)(e1*e_i)}:\n"
              << restrict_to(b0, kappa3_block_basis()).to_string() << "\n\n";
    const Vector64 v10 = phi10_vector(), v02 = phi02_vector();
    std::cout << "B0 on phi_(1,0): " << (dot(v10, apply_operator(b0, v10)) / dot(v10, v10)).to_string() << "\n"
              << "B0 on phi_(0,2): " << (dot(v02, apply_operator(b0, v02)) / dot(v02, v02)).to_string() << "\n\n";
    std::cout << "spectrum of B0 (eigenvalue: multiplicity):\n";
    for (const auto& l : b0_eigenvalues()) std::cout << "  " << l.to_string() << ": " << eigenspace_dimension(b0, l) << "\n";
    std::cout << "minimal polynomial annihilates B0: " << (b0_minimal_polynomial_check(b0) ? "yes" : "NO") << "\n"
              << "spectral radius: " << spectral_radius(b0_eigenvalues()).to_string() << "\n";
    if (!mu_text.empty()) {
        const Rational mu = Rational::parse(mu_text);
        const auto m = trivial_rep_family(mu);
        std::cout << "\ntrivial family at mu = " << mu.to_string() << ":\n"
                  << m.to_string() << "\ndeterminant: " << m.determinant().to_string() << "\n";
    }
    return kOk;
}

int run_forms(const std::string& show, int sign) {
    const AltForm p = p1_form();
    if (show == "p1") {
        std::cout << "p1 = (" << proportionality(p, lambda4()).to_string() << ") lambda4\n" << p.to_string() << "\n";
    } else if (show == "h") {
        const AltForm h = solve_primitive(p, sign);
        std::cout << "h = (" << proportionality(h, lambda3()).to_string() << ") lambda3\n" << h.to_string() << "\n";
    } else if (show == "integral") {
        const AltForm h = solve_primitive(p, sign);
        std::cout << "p1 ^ h = " << wedge(p, h).to_string() << "\n"
                  << "int_M p1 ^ h = " << integrate_invariant(wedge(p, h)).to_string() << "\n"
                  << "secondary integral = " << secondary_integral(sign).to_string() << "\n";
    } else if (show == "volumes") {
        std::cout << "vol(SO(3)) = " << volume_SO3().to_string() << "\n"
                  << "vol(SO(5)) = " << volume_SO5().to_string() << "\n"
                  << "vol(H)     = " << volume_H().to_string() << "\n"
                  << "vol(M)     = " << volume_M().to_string() << "\n";
    } else {
        throw BadArgument("unknown form " + show);
    }
    return kOk;
}

HighestWeight weight_arg(const RootSystem& rs, const std::string& text) { return HighestWeight(rs, parse_ints(text)); }

int run_rep(const std::string& system, const std::string& dim, const std::string& tensor, const std::string& branch,
            const std::string& branch_so5, bool verify_decomposition) {
    const RootSystem rs = system_named(system);
    bool did = false;
    if (!dim.empty()) {
        const HighestWeight hw = weight_arg(rs, dim);
        std::cout << rs.name() << " " << hw.to_string() << ": dimension " << weyl_dimension(hw) << "\n";
        did = true;
    }
    if (!tensor.empty()) {
        const auto colon = tensor.find(':');
        if (colon == std::string::npos) throw BadArgument("--tensor expects a,b:c,d");
        const HighestWeight a = weight_arg(rs, tensor.substr(0, colon)), b = weight_arg(rs, tensor.substr(colon + 1));
        std::cout << a.to_string() << " (x) " << b.to_string() << " =";
        bool first = true;
        for (const auto& c : klimyk_tensor(a, b)) {
            std::cout << (first ? " " : " + ") << (c.multiplicity > 1 ? std::to_string(c.multiplicity) + " " : "")
                      << c.hw.to_string();
            first = false;
        }
        std::cout << "\n";
        did = true;
    }
    if (!branch.empty()) {
        const HighestWeight hw = weight_arg(RootSystem::G2(), branch);
        std::cout << "G2 " << hw.to_string() << " restricted to SO(3): " << kappa_list(branch_principal_sl2(hw)) << "\n";
        did = true;
    }
    if (!branch_so5.empty()) {
        const auto pq = parse_ints(branch_so5);
        if (pq.size() != 2) throw BadArgument("--branch-so5 expects p,q");
        std::cout << "gamma_(" << pq[0] << "," << pq[1]
                  << ") restricted to SO(3): " << kappa_list(branch_so5_to_so3(pq[0], pq[1])) << "\n";
        did = true;
    }
    if (verify_decomposition) {
        const RootSystem g2 = RootSystem::G2();
        const HighestWeight seven(g2, {0, 1});
        std::cout << "I (x) I as G2-representation:\n";
        for (const auto& c : klimyk_tensor(seven, seven))
            std::cout << "  phi" << c.hw.to_string() << "  dim " << weyl_dimension(c.hw) << "  ->  "
                      << kappa_list(branch_principal_sl2(c.hw)) << "\n";
        const auto d = spinor_square_decomposition();
        const bool agree = d.via_clebsch_gordan == d.via_g2;
        const bool disjoint = g2_summands_have_disjoint_h_content();
        std::cout << "S (x) S as H-representation: " << kappa_list(d.via_g2) << "\n"
                  << "Clebsch-Gordan route agrees: " << (agree ? "yes" : "NO") << "\n"
                  << "G2 summands share no H-type: " << (disjoint ? "yes" : "NO") << "\n";
        return agree && disjoint ? kOk : kVerifyFailed;
    }
    if (!did) throw BadArgument("rep: nothing to do (use --dim, --tensor, --branch, --branch-so5 or --verify-decomposition)");
    return kOk;
}

int run_classify() {
    const EkReport r = compute_ek();
    const Classification c = classify(r);
    auto list = [](const std::vector<int>& v) {
        std::string s;
        for (int x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
        return "{" + s + "}";
    };
    std::cout << "ek(M) = " << r.ek.to_string() << ", s1(M) = " << c.s1.to_string() << " in Q/Z\n"
              << "M is orientation preserving PL-equivalent to M_{m,10} iff m mod 10 in "
              << list(c.pl_preserving_mod10) << "\n"
              << "M is orientation reversing PL-equivalent to M_{m,10} iff m mod 10 in "
              << list(c.pl_reversing_mod10) << "\n"
              << "orientation reversing diffeomorphic to M_{m,10} iff m mod 140 in " << list(c.diffeo_mod140)
              << " = " << list(c.diffeo_mod140_residues) << "\n"
              << "headline: M is diffeomorphic to M_{" << c.headline_m << "," << c.headline_n
              << "}, an S^3-bundle over S^4 with Euler class " << c.euler_class << " and p1 = " << c.p1_multiple
              << " times the generator\n"
              << "M admits exactly " << c.vector_fields << " independent vector fields\n";
    return kOk;
}

int run_verify(const std::string& suite, const std::string& corrupt, int d_sign) {
    VerifyOptions opts;
    opts.d_sign = d_sign;
    if (!corrupt.empty()) {
        const auto parts = split(corrupt, ',');
        if (parts.size() != 4) throw BadArgument("--corrupt expects i,j,k,value");
        const auto idx = parse_ints(parts[0] + "," + parts[1] + "," + parts[2]);
        opts.corrupt_constant = ConstantFault{idx[0], idx[1], idx[2], SqrtField(Rational::parse(parts[3]))};
    }
    const VerifyReport report = verify(suite == "all" ? Suite::all : Suite::fast, opts);
    print_report(report);
    return report.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of the Eells-Kuiper invariant of the Berger space SO(5)/SO(3)"};
    app.require_subcommand(1);

    std::string orientation = "standard";
    bool json = false;
    int ek_order = kDefaultEtaOrder;
    auto* ek = app.add_subcommand("ek", "compute ek(M) and s1(M)");
    ek->add_option("--orientation", orientation, "orientation convention")->check(CLI::IsMember({"standard", "reversed"}));
    ek->add_flag("--json", json, "emit a JSON report");
    ek->add_option("--order", ek_order, "series truncation order")->check(CLI::Range(10, 64));

    std::string term, direction = "5,1";
    int eta_order = kDefaultEtaOrder;
    auto* eta = app.add_subcommand("eta", "evaluate a local eta term");
    eta->add_option("--term", term, "alpha0, alpha3, D or B")->required()->check(CLI::IsMember({"alpha0", "alpha3", "D", "B"}));
    eta->add_option("--direction", direction, "generic direction u,v");
    eta->add_option("--order", eta_order, "series truncation order")->check(CLI::Range(10, 64));

    std::string mu;
    auto* spectrum = app.add_subcommand("spectrum", "operator B0 and the trivial-representation family");
    spectrum->add_option("--mu", mu, "also print Btilde + mu B0 on the trivial block");

    std::string show = "p1";
    int d_sign = 1;
    auto* forms = app.add_subcommand("forms", "invariant characteristic forms");
    forms->add_option("--show", show, "p1, h, integral or volumes")->check(CLI::IsMember({"p1", "h", "integral", "volumes"}));
    forms->add_option("--d-sign", d_sign, "sign convention of the invariant exterior derivative")->check(CLI::IsMember({-1, 1}));

    std::string system = "G2", dim, tensor, branch, branch_so5;
    bool verify_decomposition = false;
    auto* rep = app.add_subcommand("rep", "representation theory of A1, B2, G2");
    rep->add_option("--system", system, "A1, B2 or G2")->check(CLI::IsMember({"A1", "B2", "G2"}));
    rep->add_option("--dim", dim, "highest weight a,b (Dynkin labels)");
    rep->add_option("--tensor", tensor, "a,b:c,d");
    rep->add_option("--branch", branch, "G2 highest weight to restrict to the principal SO(3)");
    rep->add_option("--branch-so5", branch_so5, "gamma_(p,q) to restrict to the irreducible SO(3)");
    rep->add_flag("--verify-decomposition,--verify-2.15", verify_decomposition, "re-derive the S (x) S decomposition");

    auto* cls = app.add_subcommand("classify", "classification consequences");

    std::string suite = "all", corrupt;
    int verify_sign = 1;
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    ver->add_option("--suite", suite, "fast or all")->check(CLI::IsMember({"fast", "all"}));
    ver->add_option("--corrupt", corrupt, "fault injection: overwrite structure constant i,j,k with value");
    ver->add_option("--d-sign", verify_sign, "sign convention handed to the forms pipeline")->check(CLI::IsMember({-1, 1}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadArgs;
    }

    try {
        if (*ek) return run_ek(orientation, json, ek_order);
        if (*eta) return run_eta(term, direction, eta_order);
        if (*spectrum) return run_spectrum(mu);
        if (*forms) return run_forms(show, d_sign);
        if (*rep) return run_rep(system, dim, tensor, branch, branch_so5, verify_decomposition);
        if (*cls) return run_classify();
        if (*ver) return run_verify(suite, corrupt, verify_sign);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kBadArgs;
}
