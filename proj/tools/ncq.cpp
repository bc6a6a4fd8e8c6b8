// Command-line front end: exact computations in NCQSym, the peak algebra in
// noncommuting variables, NCSym and the Schur Q layer, plus the identity
// verifiers and conjecture scanners.
//
// Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ncq/identities.hpp"
#include "ncq/io.hpp"
#include "ncq/matrix.hpp"
#include "ncq/ncpeak.hpp"
#include "ncq/ncqsym.hpp"
#include "ncq/ncsym.hpp"
#include "ncq/poset.hpp"
#include "ncq/theta.hpp"
#include "ncq/word.hpp"

using namespace ncq;

namespace {

bool g_json = false;

Elem load_elem(const std::string& arg) {
    std::ifstream in(arg);
    if (in.good()) {
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        if (!text.empty() && text.find('{') != std::string::npos) return elem_from_json(text);
        return parse_elem(text);
    }
    if (!arg.empty() && arg.front() == '{') return elem_from_json(arg);
    return parse_elem(arg);
}

void print_elem(const Elem& e) {
    std::cout << (g_json ? elem_to_json(e) : to_text(e)) << "\n";
}

void print_tensor(const TensorElem& t) {
    std::cout << (g_json ? tensor_to_json(t) : to_text(t)) << "\n";
}

Elem convert_to(const Elem& e, const std::string& target) {
    Basis to = basis_from_name(target);
    if (basis_uses_subset(e.basis())) {
        if (to == Basis::QSymM) return qsym_to_M(e);
        throw domain_error("convert: QSym elements only convert to QSymM");
    }
    if (to == e.basis()) return e;
    switch (to) {
        case Basis::M: return to_M(e);
        case Basis::F: return M_to_F(to_M(e));
        case Basis::Eta:
            if (e.basis() == Basis::K) return eta_K_convert(e);
            return to_eta_basis(to_M(e));
        case Basis::K:
            if (e.basis() == Basis::Eta) return eta_K_convert(e);
            return to_K_basis(to_M(e));
        case Basis::m: return membership_ncsym(to_M(e));
        case Basis::p:
            if (e.basis() == Basis::e) {
                Elem out(Basis::p, e.degree());
                for (const auto& [k, c] : e.terms()) {
                    Elem part = e_to_p(k.setpartition());
                    part *= c;
                    out += part;
                }
                return out;
            }
            if (e.basis() == Basis::h) {
                Elem out(Basis::p, e.degree());
                for (const auto& [k, c] : e.terms()) {
                    Elem part = h_to_p(k.setpartition());
                    part *= c;
                    out += part;
                }
                return out;
            }
            return m_basis_to_p(membership_ncsym(to_M(e)));
        case Basis::QSymM: return rho(e);
        default: throw domain_error("convert: unsupported target basis '" + target + "'");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact Hopf-algebra computations for quasisymmetric functions in noncommuting "
                 "variables, the peak algebra, and Schur Q-functions"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "emit JSON instead of text");

    // dim
    std::string dim_space;
    int dim_n = 0;
    auto* dim = app.add_subcommand("dim", "dimension of a graded component");
    dim->add_option("space", dim_space, "ncqsym|ncpeak|ncsym|ncomega|qsym-peak")->required();
    dim->add_option("--n", dim_n, "degree")->required();

    // enumerate
    std::string enum_kind;
    int enum_n = 0;
    auto* enu = app.add_subcommand("enumerate", "list combinatorial objects in canonical order");
    enu->add_option("kind", enum_kind,
                    "set_compositions|odd_set_compositions|set_partitions|odd_set_partitions|"
                    "compositions|odd_compositions|peak_sets|subsets")
        ->required();
    enu->add_option("--n", enum_n, "ground-set size")->required();

    // convert
    std::string conv_from, conv_to, conv_elem;
    auto* conv = app.add_subcommand("convert", "change of basis");
    conv->add_option("--from", conv_from, "source basis (validated against the element)")->required();
    conv->add_option("--to", conv_to, "target basis")->required();
    conv->add_option("--elem", conv_elem, "inline element or file (text or JSON)")->required();

    // product / coproduct / internal
    std::string prod_a, prod_b;
    auto* prod = app.add_subcommand("product", "product of two elements (M-basis output)");
    prod->add_option("--elem", prod_a)->required();
    prod->add_option("--elem2", prod_b)->required();

    std::string cop_elem;
    auto* cop = app.add_subcommand("coproduct", "graded coproduct (M (x) M output)");
    cop->add_option("--elem", cop_elem)->required();

    std::string int_elem;
    auto* intc = app.add_subcommand("internal", "internal coproduct (M (x) M output)");
    intc->add_option("--elem", int_elem)->required();

    // theta / rho / omega
    std::string theta_elem;
    auto* th = app.add_subcommand("theta", "labelled descent-to-peak map (Eta-basis output)");
    th->add_option("--elem", theta_elem)->required();

    std::string rho_elem;
    auto* rh = app.add_subcommand("rho", "commute the variables (QSym output)");
    rh->add_option("--elem", rho_elem)->required();

    std::string om_elem;
    auto* om = app.add_subcommand("omega", "fundamental involution on p/h/e");
    om->add_option("--elem", om_elem)->required();

    // digraph expand
    std::string dig_triple;
    bool dig_enriched = false;
    int dig_realize = 0;
    auto* dig = app.add_subcommand("digraph", "labelled edge-coloured digraph operations");
    auto* dex = dig->add_subcommand("expand", "expansion of the (enriched) chromatic function");
    dex->add_option("--triple", dig_triple, "triple/digraph JSON (inline or file)")->required();
    dex->add_flag("--enriched", dig_enriched, "enriched colourings (peak side)");
    dex->add_option("--realize", dig_realize, "also print the word realization over [m]");

    // verify
    std::string ver_name;
    int ver_n = 0;
    bool ver_all = false;
    auto* ver = app.add_subcommand("verify", "run an identity verifier");
    ver->add_option("name", ver_name,
                    "case1|int1|main|int2|internal|theta-diagram|ncsym-theta-p|lem-odd-set|special-even")
        ->required();
    ver->add_option("--n", ver_n, "degree")->required();
    ver->add_flag("--all", ver_all, "all degrees up through --n");

    // scan
    std::string scan_name;
    int scan_nmax = 0, scan_jobs = 1;
    auto* sca = app.add_subcommand("scan", "conjecture scans (report only)");
    sca->add_option("name", scan_name, "euler|c-nonneg")->required();
    sca->add_option("--n-max", scan_nmax)->required();
    sca->add_option("--jobs", scan_jobs, "parallel workers");

    // coeff-c
    std::string cc_phi, cc_psi, cc_phiprime;
    auto* cc = app.add_subcommand("coeff-c", "internal-coproduct structure constant");
    cc->add_option("--phi", cc_phi)->required();
    cc->add_option("--psi", cc_psi)->required();
    cc->add_option("--phiprime", cc_phiprime)->required();

    // realize
    std::string rz_elem;
    int rz_m = 0;
    long long rz_cap = kDefaultOracleCap;
    auto* rz = app.add_subcommand("realize", "word realization over a finite alphabet");
    rz->add_option("--elem", rz_elem)->required();
    rz->add_option("--m", rz_m, "alphabet size")->required();
    rz->add_option("--cap", rz_cap, "guard on m^n (default 10^7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (dim->parsed()) {
        BigInt d;
        if (dim_space == "ncqsym") d = dim_ncqsym(dim_n);
        else if (dim_space == "ncpeak") d = dim_ncpeak(dim_n);
        else if (dim_space == "ncsym") d = dim_ncsym(dim_n);
        else if (dim_space == "ncomega") d = dim_ncomega(dim_n);
        else if (dim_space == "qsym-peak") d = dim_qsym_peak(dim_n);
        else throw domain_error("dim: unknown space '" + dim_space + "'");
        std::cout << d.to_string() << "\n";
    } else if (enu->parsed()) {
        if (enum_kind == "set_compositions" || enum_kind == "odd_set_compositions") {
            const auto& v = enum_kind == "set_compositions" ? set_compositions(enum_n)
                                                            : odd_set_compositions(enum_n);
            for (const auto& x : v) std::cout << to_text(x) << "\n";
        } else if (enum_kind == "set_partitions" || enum_kind == "odd_set_partitions") {
            const auto& v =
                enum_kind == "set_partitions" ? set_partitions(enum_n) : odd_set_partitions(enum_n);
            for (const auto& x : v) std::cout << to_text(x) << "\n";
        } else if (enum_kind == "compositions" || enum_kind == "odd_compositions") {
            for (const auto& x :
                 enum_kind == "compositions" ? compositions(enum_n) : odd_compositions(enum_n))
                std::cout << to_text(x) << "\n";
        } else if (enum_kind == "peak_sets") {
            for (const auto& x : peak_sets(enum_n)) std::cout << to_text(x, 'B') << "\n";
        } else if (enum_kind == "subsets") {
            for (const auto& x : subsets(enum_n)) std::cout << to_text(x) << "\n";
        } else {
            throw domain_error("enumerate: unknown kind '" + enum_kind + "'");
        }
    } else if (conv->parsed()) {
        Elem e = load_elem(conv_elem);
        if (!e.is_zero() && basis_name(e.basis()) != conv_from)
            throw domain_error("convert: element is tagged " + std::string(basis_name(e.basis())) +
                               ", not " + conv_from);
        print_elem(convert_to(e, conv_to));
    } else if (prod->parsed()) {
        print_elem(product(load_elem(prod_a), load_elem(prod_b)));
    } else if (cop->parsed()) {
        print_tensor(coproduct(load_elem(cop_elem)));
    } else if (intc->parsed()) {
        print_tensor(internal_coproduct(load_elem(int_elem)));
    } else if (th->parsed()) {
        print_elem(theta_eta(load_elem(theta_elem)));
    } else if (rh->parsed()) {
        print_elem(rho(load_elem(rho_elem)));
    } else if (om->parsed()) {
        print_elem(omega(load_elem(om_elem)));
    } else if (dex->parsed()) {
        std::string text = dig_triple;
        std::ifstream in(dig_triple);
        if (in.good()) {
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        LabelledPoset t = triple_from_json(text);
        Elem e = dig_enriched ? Fcal_expansion(t) : Y_expansion(t);
        print_elem(e);
        if (dig_realize > 0)
            std::cout << word_poly_to_text(realize(e, dig_realize)) << "\n";
    } else if (ver->parsed()) {
        bool ok = true;
        std::string detail;
        auto over_degrees = [&](int lo, const std::function<bool(int)>& f) {
            for (int n = ver_all ? lo : ver_n; n <= ver_n; ++n)
                if (!f(n)) return false;
            return true;
        };
        if (ver_name == "case1") {
            ok = over_degrees(1, verify_case1);
        } else if (ver_name == "int1" || ver_name == "main" || ver_name == "int2") {
            ok = over_degrees(1, [&](int n) {
                for (const auto& phi : odd_set_compositions(n))
                    for (const auto& psi : coarsenings(phi)) {
                        bool good = ver_name == "int1"  ? verify_int1(phi, psi)
                                    : ver_name == "main" ? verify_main(phi, psi)
                                                         : verify_int2_all(phi, psi);
                        if (!good) {
                            detail = "phi=" + to_text(phi) + " psi=" + to_text(psi);
                            return false;
                        }
                    }
                return true;
            });
        } else if (ver_name == "internal") {
            ok = over_degrees(1, [&](int n) {
                for (const auto& phi : odd_set_compositions(n))
                    if (!verify_internal(phi)) {
                        detail = "phi=" + to_text(phi);
                        return false;
                    }
                return true;
            });
        } else if (ver_name == "theta-diagram") {
            ok = over_degrees(1, [&](int n) {
                auto bad = check_diagram(n);
                if (!bad.empty()) detail = "M key " + to_text(bad.front());
                return bad.empty();
            });
        } else if (ver_name == "ncsym-theta-p") {
            ok = over_degrees(1, [&](int n) {
                for (const auto& pi : set_partitions(n)) {
                    Elem img = theta_p(pi);
                    Elem expect(Basis::p, n);
                    if (pi.is_odd())
                        expect.add(key_setpartition(Basis::p, pi),
                                   Rational(BigInt::two_pow(static_cast<unsigned>(pi.length()))));
                    if (!(img == expect)) {
                        detail = "pi=" + to_text(pi);
                        return false;
                    }
                }
                return true;
            });
        } else if (ver_name == "lem-odd-set") {
            ok = over_degrees(1, [&](int n) {
                for (const auto& pi : odd_set_partitions(n)) {
                    std::vector<SetComposition> candidates;
                    for (const auto& phi : set_compositions(n))
                        if (partition_leq(underlying_partition(phi), pi)) candidates.push_back(phi);
                    for (const auto& psi : candidates) {
                        BigInt sum(0);
                        for (const auto& phi : candidates) {
                            if (phi.blocks.back().size() % 2 == 0) continue;
                            if (!refines(psi, odd_merge(phi))) continue;
                            sum += (phi.length() % 2) ? BigInt(-1) : BigInt(1);
                        }
                        BigInt expect =
                            BigInt::two_pow(static_cast<unsigned>(pi.length() - psi.length()));
                        if (pi.length() % 2) expect = -expect;
                        if (!(sum == expect)) {
                            detail = "pi=" + to_text(pi) + " psi=" + to_text(psi);
                            return false;
                        }
                    }
                }
                return true;
            });
        } else if (ver_name == "special-even") {
            ok = over_degrees(2, [&](int n) { return n % 2 == 1 || verify_special_even(n); });
        } else {
            throw domain_error("verify: unknown identity '" + ver_name + "'");
        }
        IdentityReport rep{ver_name, ver_n, ok, detail};
        if (g_json)
            std::cout << report_to_json(rep) << "\n";
        else
            std::cout << (ok ? "ok" : "counterexample: " + detail) << "\n";
    } else if (sca->parsed()) {
        if (scan_name == "euler") {
            for (const auto& row : scan_conjecture_euler(scan_nmax, scan_jobs)) {
                if (g_json)
                    std::cout << "{\"identity\": \"euler\", \"n\": " << row.n << ", \"status\": \""
                              << (row.equal ? "ok" : "counterexample")
                              << "\", \"detail\": {\"lhs\": \"" << row.lhs.to_string()
                              << "\", \"rhs\": \"" << row.rhs.to_string() << "\"}}\n";
                else
                    std::cout << "n=" << row.n << " lhs=" << row.lhs.to_string()
                              << " rhs=" << row.rhs.to_string()
                              << (row.equal ? " equal" : " UNEQUAL") << "\n";
            }
        } else if (scan_name == "c-nonneg") {
            long long scanned = 0;
            auto hits = scan_C_nonneg(scan_nmax, &scanned, scan_jobs);
            if (hits.empty()) {
                std::cout << "no negative coefficients among " << scanned << " scanned\n";
            } else {
                for (const auto& h : hits)
                    std::cout << "NEGATIVE phi=" << to_text(h.phi) << " psi=" << to_text(h.psi)
                              << " phiprime=" << to_text(h.phiprime) << " C=" << h.value.to_string()
                              << "\n";
            }
        } else {
            throw domain_error("scan: unknown scan '" + scan_name + "'");
        }
    } else if (cc->parsed()) {
        Rational c = coeff_C(parse_setcomp(cc_phi), parse_setcomp(cc_psi), parse_setcomp(cc_phiprime));
        std::cout << c.to_string() << "\n";
    } else if (rz->parsed()) {
        std::cout << word_poly_to_text(realize(load_elem(rz_elem), rz_m, rz_cap)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
