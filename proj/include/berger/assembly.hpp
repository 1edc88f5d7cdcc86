#pragma once

// Final assembly of the Eells-Kuiper invariant, the classification data it
// implies, and the verification driver that runs every module's checks.

#include "berger/eta.hpp"
#include "berger/forms.hpp"
#include "berger/liealg.hpp"
#include "berger/octonion.hpp"
#include "berger/operators.hpp"
#include "berger/rep.hpp"
#include "berger/roots.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace berger {

enum class Orientation { standard, reversed };

struct EkReport {
    Rational eta_D;
    Rational eta_B;
    Rational h_D;  // dimension of ker D, zero by the Casimir bound
    Rational secondary_integral;
    Rational intermediate;
    Rational ek;
    Rational ek_mod1;  // representative in (-1/2, 1/2]
    Rational s1;       // 28 ek in Q/Z, same representative
    Orientation orientation = Orientation::standard;
};

/// The square of D^(1/3) on the gamma-isotypic part is p^2 + 3p + q^2 + q + c,
/// so D has no kernel when this is positive for every gamma. Checked on the
/// sweep p + q <= bound together with monotonicity in p and q.
inline bool dirac_kernel_gate(int bound = 6) {
    for (auto piece : {SpinorPiece::real, SpinorPiece::imaginary})
        for (int p = 0; p <= bound; ++p)
            for (int q = 0; q <= p && p + q <= bound; ++q) {
                const Rational c = casimir_eigenvalue(p, q, piece);
                if (c <= 0) return false;
                if (p > q && casimir_eigenvalue(p - 1, q, piece) >= c) return false;
                if (q > 0 && casimir_eigenvalue(p, q - 1, piece) >= c) return false;
            }
    return true;
}

/// ek = eta(B)/(2^5 7) + (eta(D) + h(D))/2 - (1/(2^7 7)) int p1 ^ h.
inline EkReport compute_ek(Orientation orientation = Orientation::standard, int order = kDefaultEtaOrder) {
    if (!dirac_kernel_gate()) throw std::logic_error("compute_ek: Casimir bound does not exclude a Dirac kernel");
    EkReport r;
    r.orientation = orientation;
    r.eta_D = eta_D(order);
    r.eta_B = eta_B(order);
    r.h_D = 0;
    r.secondary_integral = secondary_integral();
    r.intermediate = r.eta_B / Rational(224) + (r.eta_D + r.h_D) / Rational(2);
    r.ek = r.intermediate + r.secondary_integral;
    if (orientation == Orientation::reversed) r.ek = -r.ek;
    r.ek_mod1 = centered_mod_one(r.ek);
    r.s1 = centered_mod_one(Rational(28) * r.ek);
    return r;
}

struct Classification {
    Rational s1;
    std::vector<int> pl_preserving_mod10{2, 8};    // m = +-2 mod 10
    std::vector<int> pl_reversing_mod10{1, 9};     // m = +-1 mod 10
    std::vector<int> diffeo_mod140{-1, -9, -29, 19};
    std::vector<int> diffeo_mod140_residues{139, 131, 111, 19};
    int headline_m = -1;
    int headline_n = 10;
    int euler_class = 10;
    int p1_multiple = 16;  // 2(n + 2m)
    int vector_fields = 4;
};

inline int positive_mod(int a, int n) { return ((a % n) + n) % n; }

/// Classification consequences for sphere bundles M_{m,10}; the congruence
/// sets are those stated for the Berger space, with internal consistency checked.
inline Classification classify(const EkReport& report) {
    Classification c;
    c.s1 = report.s1;
    for (std::size_t i = 0; i < c.diffeo_mod140.size(); ++i)
        if (positive_mod(c.diffeo_mod140[i], 140) != c.diffeo_mod140_residues[i])
            throw std::logic_error("classify: residue table is inconsistent");
    const int m = c.headline_m;
    if (2 * (c.headline_n + 2 * m) != c.p1_multiple) throw std::logic_error("classify: p1 of the headline bundle");
    const int r10 = positive_mod(m, 10);
    if (std::find(c.pl_reversing_mod10.begin(), c.pl_reversing_mod10.end(), r10) == c.pl_reversing_mod10.end())
        throw std::logic_error("classify: headline bundle outside the PL class");
    for (int d : c.diffeo_mod140_residues)
        if (std::find(c.pl_reversing_mod10.begin(), c.pl_reversing_mod10.end(), d % 10) == c.pl_reversing_mod10.end())
            throw std::logic_error("classify: diffeomorphism residue outside the PL class");
    return c;
}

// ---------------------------------------------------------------------------
// verification driver

enum class Suite { fast, all };

struct CheckResult {
    std::string module;
    std::string name;
    bool passed;
    std::string detail;
};

struct ConstantFault {
    int i, j, k;
    SqrtField value;
};

struct VerifyOptions {
    std::optional<ConstantFault> corrupt_constant;  // overwrites c(i,j,k) and c(j,i,k) -> -value
    int d_sign = 1;                                 // sign convention handed to the forms pipeline
    std::uint32_t seed = 20240601;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
    bool module_passed(const std::string& module) const {
        return std::all_of(checks.begin(), checks.end(),
                           [&](const CheckResult& c) { return c.module != module || c.passed; });
    }
    std::vector<std::string> modules() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (std::find(out.begin(), out.end(), c.module) == out.end()) out.push_back(c.module);
        return out;
    }
};

namespace detail {

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    return Rational(num(rng), den(rng));
}

inline SqrtField random_field(std::mt19937& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> count(1, max_terms), pick(0, 15);
    SqrtField x;
    for (int n = count(rng); n > 0; --n)
        x += SqrtField::radical(SqrtField::radicands()[pick(rng)], random_rational(rng));
    return x;
}

inline Octonion random_octonion(std::mt19937& rng) {
    std::array<SqrtField, 8> c;
    for (auto& x : c) x = random_field(rng, 1);
    return Octonion(c);
}

class Recorder {
public:
    explicit Recorder(VerifyReport& report) : report_(report) {}

    void check(const std::string& module, const std::string& name, const std::function<std::string()>& body) {
        try {
            const std::string failure = body();
            report_.checks.push_back({module, name, failure.empty(), failure});
        } catch (const std::exception& e) {
            report_.checks.push_back({module, name, false, std::string("exception: ") + e.what()});
        }
    }

private:
    VerifyReport& report_;
};

inline std::string expect_eq(const std::string& got, const std::string& want) {
    return got == want ? std::string() : "got " + got + ", expected " + want;
}

}  // namespace detail

inline VerifyReport verify(Suite suite = Suite::all, const VerifyOptions& opts = {}) {
    using detail::expect_eq;
    VerifyReport report;
    detail::Recorder rec(report);
    std::mt19937 rng(opts.seed);

    StructureConstants sc = structure_constants();
    if (opts.corrupt_constant) {
        const auto& f = *opts.corrupt_constant;
        sc.set(f.i, f.j, f.k, f.value);
        sc.set(f.j, f.i, f.k, -f.value);
    }

    // scalar
    rec.check("scalar", "field axioms on random samples", [&]() -> std::string {
        for (int n = 0; n < 50; ++n) {
            const SqrtField a = detail::random_field(rng), b = detail::random_field(rng), c = detail::random_field(rng);
            if (!((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c) || !(a * b == b * a))
                return "axiom violated for a = " + a.to_string();
        }
        return std::string();
    });
    rec.check("scalar", "inverse on random samples", [&]() -> std::string {
        for (int n = 0; n < 50; ++n) {
            const SqrtField a = detail::random_field(rng, 4);
            if (a.is_zero()) continue;
            if (!(a * a.inverse() == SqrtField(1))) return "a * a^-1 != 1 for a = " + a.to_string();
        }
        return std::string();
    });
    rec.check("scalar", "sign agrees with double evaluation", [&]() -> std::string {
        for (int n = 0; n < 100; ++n) {
            const SqrtField a = detail::random_field(rng, 4);
            const double d = a.to_double();
            if (std::abs(d) < 1e-6) continue;
            if ((d > 0) != (a.sign() == Sign::positive)) return "sign mismatch for " + a.to_string();
        }
        return std::string();
    });

    // series
    rec.check("series", "A-hat series is even with the known expansion", [&]() -> std::string {
        const LaurentSeries a = ahat_series(1, 8);
        for (int k = 1; k <= 7; k += 2)
            if (!a.coeff(k).is_zero()) return "odd coefficient at t^" + std::to_string(k);
        return expect_eq(a.coeff(2).to_string() + " " + a.coeff(4).to_string() + " " + a.coeff(6).to_string(),
                         "-1/24 7/5760 -31/967680");
    });
    rec.check("series", "reciprocal is an involution", [&]() -> std::string {
        const LaurentSeries s(1, 12, {1, 2, -1, 3, 0, 5, -7, 1, 1, 2, 3, 4});
        const LaurentSeries back = s.reciprocal().reciprocal();
        for (int k = 1; k <= back.order(); ++k)
            if (back.coeff(k) != s.coeff(k)) return "mismatch at t^" + std::to_string(k);
        return std::string();
    });
    rec.check("series", "exp is a homomorphism", [&]() -> std::string {
        const LaurentSeries a(1, 10, {1, Rational(1, 2), 0, 3, 0, 0, 0, 0, 0, 1});
        const LaurentSeries b(1, 10, {-2, 1, Rational(1, 3), 0, 0, 0, 0, 0, 0, 0});
        return (a + b).exp() == a.exp() * b.exp() ? std::string() : std::string("exp(a+b) != exp(a) exp(b)");
    });

    // liealg
    rec.check("liealg", "basis of p is orthonormal and orthogonal to h", [&]() -> std::string {
        for (int i = 1; i <= 10; ++i)
            for (int j = 1; j <= 10; ++j)
                if (inner(g_basis(i), g_basis(j)) != SqrtField(i == j ? 1 : 0))
                    return "<e" + std::to_string(i) + ", e" + std::to_string(j) + "> is wrong";
        return std::string();
    });
    rec.check("liealg", "Jacobi identity on the structure constants", [&]() -> std::string {
        const auto bad = jacobi_violations(sc);
        if (bad.empty()) return std::string();
        const auto& t = bad.front();
        return "Jacobi fails on (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) +
               ") and " + std::to_string(bad.size() - 1) + " more triples";
    });
    rec.check("liealg", "[e_i, e_j]_p = (1/sqrt5) Im(e_i * e_j) on all 21 pairs", [&]() -> std::string {
        const SqrtField s = SqrtField::sqrt(Rational(1, 5));
        for (int i = 1; i <= 7; ++i)
            for (int j = i + 1; j <= 7; ++j) {
                const Octonion prod = Octonion::unit(i) * Octonion::unit(j);
                for (int k = 1; k <= 7; ++k)
                    if (sc.tangential(i, j, k) != s * prod[k])
                        return "pair (" + std::to_string(i) + ", " + std::to_string(j) + ") disagrees";
            }
        return std::string();
    });
    rec.check("liealg", "[h, p] lies in p", [&]() -> std::string {
        for (int f = 8; f <= 10; ++f)
            for (int i = 1; i <= 7; ++i)
                if (!project_h(bracket(g_basis(f), g_basis(i))).is_zero()) return "[f, e_i] leaves p";
        return std::string();
    });
    rec.check("liealg", "c_124 = 1/sqrt5", [&]() -> std::string { return expect_eq(sc.tangential(1, 2, 4).to_string(), "1/5*sqrt(5)"); });

    // octonion
    rec.check("octonion", "alternativity and composition on 200 samples", [&]() -> std::string {
        for (int n = 0; n < 200; ++n) {
            const Octonion x = detail::random_octonion(rng), y = detail::random_octonion(rng);
            if (!((x * x) * y == x * (x * y))) return "left alternativity fails";
            if ((x * y).norm2() != x.norm2() * y.norm2()) return "composition law fails";
        }
        return std::string();
    });
    rec.check("octonion", "Clifford relations on all basis pairs", [&]() -> std::string {
        const auto id = Matrix<SqrtField>::identity(8);
        for (int i = 1; i <= 7; ++i)
            for (int j = i; j <= 7; ++j) {
                const auto anti = clifford_basis(i) * clifford_basis(j) + clifford_basis(j) * clifford_basis(i);
                if (!(anti == SqrtField(i == j ? -2 : 0) * id)) return "relation fails for (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            }
        return std::string();
    });
    rec.check("octonion", "c1 c2 ... c7 = Id", [&]() -> std::string {
        Matrix<SqrtField> w = Matrix<SqrtField>::identity(8);
        for (int i = 1; i <= 7; ++i) w = w * clifford_basis(i);
        return w == Matrix<SqrtField>::identity(8) ? std::string() : std::string("volume element is not the identity");
    });

    const Operator64 b0 = build_B0(sc);
    const SqrtField inv2r5 = SqrtField::sqrt(Rational(1, 20));
    rec.check("octonion", "B0 is symmetric", [&]() -> std::string {
        return b0.transpose() == b0 ? std::string() : std::string("B0 is not symmetric");
    });
    rec.check("octonion", "B0 on the trivial block", [&]() -> std::string {
        const SqrtField r7 = sqrt_of(7);
        const auto want = inv2r5 * Matrix<SqrtField>(2, 2, {7, SqrtField(-3) * r7, SqrtField(-3) * r7, 5});
        return expect_eq(restrict_to(b0, trivial_block_basis()).to_string(), want.to_string());
    });
    rec.check("octonion", "B0 on the kappa_3 block", [&]() -> std::string {
        const SqrtField r6 = sqrt_of(6);
        const auto want = inv2r5 * Matrix<SqrtField>(3, 3, {-1, 3, SqrtField(3) * r6, 3, 7, r6, SqrtField(3) * r6, r6, -4});
        return expect_eq(restrict_to(b0, kappa3_block_basis()).to_string(), want.to_string());
    });
    rec.check("octonion", "B0 = +-1/sqrt5 on phi_(1,0) and phi_(0,2)", [&]() -> std::string {
        const SqrtField s = SqrtField::sqrt(Rational(1, 5));
        const auto a = phi10_vector(), b = phi02_vector();
        for (std::size_t i = 0; i < 64; ++i)
            if (apply_operator(b0, a)[i] != s * a[i] || apply_operator(b0, b)[i] != -s * b[i]) return std::string("scalar action differs");
        return std::string();
    });
    rec.check("octonion", "B0 commutes with the isotropy action", [&]() -> std::string {
        for (int i = 8; i <= 10; ++i) {
            const Operator64 rho = on_first(ad_tilde(i, sc)) + on_second(ad_tilde(i, sc));
            if (!(b0 * rho == rho * b0)) return "fails for f" + std::to_string(i - 7);
        }
        return std::string();
    });
    rec.check("octonion", "eigenvalues of the 3x3 block are 1/sqrt5 and +-sqrt5", [&]() -> std::string {
        const auto m = restrict_to(b0, kappa3_block_basis());
        const SqrtField r5 = sqrt_of(5);
        for (const auto& l : {SqrtField(Rational(1, 5)) * r5, r5, -r5})
            if (!is_eigenvalue(m, l)) return "not an eigenvalue: " + l.to_string();
        return std::string();
    });
    if (suite == Suite::all) {
        rec.check("octonion", "minimal polynomial of B0 annihilates it", [&]() -> std::string {
            return b0_minimal_polynomial_check(b0) ? std::string() : std::string("product is not zero");
        });
        rec.check("octonion", "eigenspace dimensions 1, 28, 21, 7, 7", [&]() -> std::string {
            std::string dims;
            for (const auto& l : b0_eigenvalues()) dims += std::to_string(eigenspace_dimension(b0, l)) + " ";
            return expect_eq(dims, "1 28 21 7 7 ");
        });
    }
    rec.check("octonion", "trivial family closed form and signs", [&]() -> std::string {
        for (const Rational& mu : {Rational(0), Rational(1, 4), Rational(1, 2)}) {
            const auto m = trivial_rep_family(mu);
            if (!(m == trivial_rep_family_closed_form(mu))) return "matrix differs at mu = " + mu.to_string();
            const Rational two_mu_minus_one = Rational(2) * mu - Rational(1);
            if (m.determinant() != SqrtField(Rational(-7, 20) * two_mu_minus_one * two_mu_minus_one))
                return "determinant differs at mu = " + mu.to_string();
        }
        if (trivial_rep_family(0).determinant().sign() != Sign::negative ||
            trivial_rep_family(Rational(1, 4)).determinant().sign() != Sign::negative)
            return std::string("expected one positive and one negative eigenvalue");
        return std::string();
    });
    rec.check("octonion", "Casimir closed forms and the 81/20 minimum", [&]() -> std::string {
        Rational best = 1000;
        for (int p = 0; p <= 6; ++p)
            for (int q = 0; q <= p && p + q <= 6; ++q) {
                const Rational base = Rational(p * p + 3 * p + q * q + q);
                if (casimir_eigenvalue(p, q, SpinorPiece::real) != base + Rational(49, 20) ||
                    casimir_eigenvalue(p, q, SpinorPiece::imaginary) != base + Rational(1, 20))
                    return "closed form differs at (" + std::to_string(p) + ", " + std::to_string(q) + ")";
                if (p + q > 0) best = std::min(best, casimir_eigenvalue(p, q, SpinorPiece::imaginary));
            }
        return expect_eq(best.to_string(), "81/20");
    });
    rec.check("octonion", "Dirac kernel excluded (h(D) = 0)", [&]() -> std::string {
        return dirac_kernel_gate() ? std::string() : std::string("Casimir bound fails");
    });

    // roots
    rec.check("roots", "Weyl group of order 8, closed, sign multiplicative", [&]() -> std::string {
        const auto w = weyl_group();
        if (w.size() != 8) return std::string("wrong order");
        for (const auto& a : w)
            for (const auto& b : w) {
                if (std::find(w.begin(), w.end(), a * b) == w.end()) return std::string("not closed");
                if ((a * b).sign() != a.sign() * b.sign()) return std::string("sign not multiplicative");
            }
        return std::string();
    });
    rec.check("roots", "rho_G, rho_H and kappa_3 + rho_H norms", [&]() -> std::string {
        Weight sum{0, 0};
        for (const auto& b : positive_roots()) sum = sum + b;
        return expect_eq(sum.to_string() + " " + rho_H().norm2().to_string() + " " + kappa_plus_rho_H(3).norm2().to_string(),
                         "(3, 1) 1/20 49/20");
    });
    rec.check("roots", "alpha_0 and alpha_3", [&]() -> std::string {
        return expect_eq(determine_alpha(0).to_string() + " " + determine_alpha(3).to_string(), "(1/2, -1/2) (3/2, 1/2)");
    });

    // eta
    std::vector<int> orders{12};
    if (suite == Suite::all) orders.push_back(16);
    for (int order : orders)
        for (const auto& dir : default_directions()) {
            const std::string where = " at " + dir.vector().to_string() + ", order " + std::to_string(order);
            rec.check("eta", "alpha_0 term" + where,
                      [&]() -> std::string { return expect_eq(eta_local(alpha0_term(), dir, order).to_string(), "-12923/281250"); });
            rec.check("eta", "alpha_3 term" + where,
                      [&]() -> std::string { return expect_eq(eta_local(alpha3_term(), dir, order).to_string(), "-277961/281250"); });
        }
    rec.check("eta", "eta(B) = -4817/140625", [&]() -> std::string { return expect_eq(eta_B(12).to_string(), "-4817/140625"); });
    rec.check("eta", "unsigned Weyl sum keeps a pole", [&]() -> std::string {
        const LaurentSeries s = eta_weyl_series(alpha0_term(), Direction(5, 1), 12, false);
        for (int k = s.lowest(); k < 0; ++k)
            if (!s.coeff(k).is_zero()) return std::string();
        return std::string("polar part cancelled without signs");
    });

    // forms
    const AltForm p1 = p1_form();
    rec.check("forms", "p1 = (21/(25 pi^2)) lambda4", [&]() -> std::string {
        return expect_eq(proportionality(p1, lambda4()).to_string(), "21/25 * pi^-2");
    });
    rec.check("forms", "lambda3 ^ lambda4 = 7 vol", [&]() -> std::string {
        return wedge(lambda3(), lambda4()) == PiScalar(7) * AltForm::volume() ? std::string() : std::string("wrong multiple");
    });
    rec.check("forms", "d(d lambda3) = 0", [&]() -> std::string {
        return invariant_d(invariant_d(lambda3(), opts.d_sign), opts.d_sign).is_zero() ? std::string() : std::string("dd != 0");
    });
    rec.check("forms", "p1, lambda3, lambda4 are H-invariant", [&]() -> std::string {
        return is_h_invariant(p1) && is_h_invariant(lambda3()) && is_h_invariant(lambda4()) ? std::string()
                                                                                          : std::string("not invariant");
    });
    rec.check("forms", "vol(M) = 16 pi^4 / (3 5^(3/2))", [&]() -> std::string {
        return expect_eq(volume_M().to_string(), PiScalar::monomial(SqrtField::radical(5, Rational(16, 75)), 4).to_string());
    });
    rec.check("forms", "secondary integral = -49/50000", [&]() -> std::string {
        return expect_eq(secondary_integral(opts.d_sign).to_string(), "-49/50000");
    });

    // rep
    rec.check("rep", "G2 (0,1) (x) (0,1) = (0,0) + (0,1) + (1,0) + (0,2)", [&]() -> std::string {
        const RootSystem g2 = RootSystem::G2();
        std::string got;
        for (const auto& c : klimyk_tensor(HighestWeight(g2, {0, 1}), HighestWeight(g2, {0, 1})))
            got += c.hw.to_string() + "x" + std::to_string(c.multiplicity) + " ";
        return expect_eq(got, "(0,0)x1 (0,1)x1 (0,2)x1 (1,0)x1 ");
    });
    rec.check("rep", "principal branchings of (0,1), (1,0), (0,2)", [&]() -> std::string {
        const RootSystem g2 = RootSystem::G2();
        std::string got;
        for (const DynkinWeight& w : {DynkinWeight{0, 1}, DynkinWeight{1, 0}, DynkinWeight{0, 2}}) {
            for (int k : branch_principal_sl2(HighestWeight(g2, w))) got += std::to_string(k);
            got += " ";
        }
        return expect_eq(got, "3 15 246 ");
    });
    rec.check("rep", "S (x) S decomposes the same way by both routes", [&]() -> std::string {
        const auto d = spinor_square_decomposition();
        return d.via_clebsch_gordan == d.via_g2 ? std::string() : std::string("routes disagree");
    });
    rec.check("rep", "G2 summands have disjoint H-content", [&]() -> std::string {
        return g2_summands_have_disjoint_h_content() ? std::string() : std::string("common kappa");
    });

    // assembly
    rec.check("assembly", "ek = -27/1120, s1 = 13/40", [&]() -> std::string {
        const EkReport r = compute_ek(Orientation::standard, 12);
        return expect_eq(r.intermediate.to_string() + " " + r.ek.to_string() + " " + r.s1.to_string(),
                         "-16189/700000 -27/1120 13/40");
    });
    rec.check("assembly", "Q/Z representative", [&]() -> std::string {
        for (const Rational& x : {Rational(-27, 1120), Rational(13, 40), Rational(1, 2), Rational(-1, 2), Rational(7, 3)}) {
            const Rational r = centered_mod_one(x);
            if (!(r > Rational(-1, 2) && r <= Rational(1, 2)) || centered_mod_one(x + Rational(5)) != r)
                return "bad representative for " + x.to_string();
        }
        return std::string();
    });

    return report;
}

}  // namespace berger
