// Acceptance suite: every structural claim the library is contracted to
// satisfy, one pass/fail line each, all in exact arithmetic. Runs in a few
// minutes on a laptop.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

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

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& fn) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        error = e.what();
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                secs, error.empty() ? "" : " exception: ", error.c_str());
    if (!ok) ++failures;
}

SetComposition sc(const std::string& s) { return parse_setcomp(s); }
Elem el(const std::string& s) { return parse_elem(s); }

// n! [x^n] 1/(1 - sinh x), exactly.
std::vector<BigInt> egf_inv_one_minus_sinh(int nmax) {
    int terms = nmax + 1;
    std::vector<Rational> s(terms, Rational(0));  // sinh x truncated
    for (int k = 1; k < terms; k += 2)
        s[k] = Rational(BigInt(1), BigInt::factorial(static_cast<unsigned>(k)));
    std::vector<Rational> b(terms, Rational(0));
    b[0] = Rational(1);
    for (int it = 0; it < terms; ++it) {
        // b <- 1 + s * b  (converges since s has no constant term)
        std::vector<Rational> nb(terms, Rational(0));
        nb[0] = Rational(1);
        for (int i = 1; i < terms; ++i)
            for (int j = 1; j <= i; ++j) nb[i] += s[j] * b[i - j];
        b = std::move(nb);
    }
    std::vector<BigInt> out;
    for (int n = 0; n < terms; ++n) {
        Rational an = b[n] * Rational(BigInt::factorial(static_cast<unsigned>(n)));
        if (!an.is_integer()) throw domain_error("EGF coefficient not integral");
        out.push_back(an.num());
    }
    return out;
}

std::vector<std::vector<std::pair<int, int>>> poset_representatives(int n) {
    std::vector<std::vector<std::pair<int, int>>> reps;
    std::vector<std::pair<int, int>> arcs;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) arcs.push_back({a, b});
    std::set<std::set<std::pair<int, int>>> seen;
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    for (unsigned mask = 0; mask < (1u << arcs.size()); ++mask) {
        std::vector<std::pair<int, int>> covers;
        for (size_t i = 0; i < arcs.size(); ++i)
            if (mask & (1u << i)) covers.push_back(arcs[i]);
        try {
            make_triple(verts, covers, id, id);
        } catch (const domain_error&) {
            continue;
        }
        std::vector<int> perm = id;
        bool dup = false;
        do {
            std::set<std::pair<int, int>> mapped;
            for (auto [a, b] : covers) mapped.insert({perm[a - 1], perm[b - 1]});
            if (seen.count(mapped)) {
                dup = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!dup) {
            seen.insert(std::set<std::pair<int, int>>(covers.begin(), covers.end()));
            reps.push_back(std::move(covers));
        }
    }
    return reps;
}

std::vector<Rational> m_row(const Elem& e, const std::vector<SetComposition>& all,
                            const std::map<SetComposition, size_t, SetCompLess>& col) {
    std::vector<Rational> row(all.size());
    for (const auto& [k, c] : e.terms()) row[col.at(k.setcomp())] = c;
    return row;
}

bool crit1_dims() {
    std::vector<long long> expected{1, 1, 2, 7, 32, 181};
    for (int n = 0; n <= 5; ++n)
        if (!(dim_ncpeak(n) == BigInt(expected[n]))) return false;
    // degree 6 two independent ways
    BigInt direct = dim_ncpeak(6);
    BigInt by_shape(0);
    for (const auto& alpha : odd_compositions(6)) by_shape += multinomial(alpha);
    if (!(direct == by_shape)) return false;
    auto egf = egf_inv_one_minus_sinh(6);
    for (int n = 0; n <= 6; ++n)
        if (!(egf[n] == dim_ncpeak(n))) return false;
    return true;
}

bool crit2_fibonacci() {
    std::vector<long long> fib{1, 1, 2, 3, 5, 8, 13};
    for (int n = 1; n <= 7; ++n)
        if (!(dim_qsym_peak(n) == BigInt(fib[n - 1]))) return false;
    return true;
}

bool crit3_bases() {
    for (int n = 1; n <= 5; ++n) {
        const auto& all = set_compositions(n);
        std::map<SetComposition, size_t, SetCompLess> col;
        for (size_t i = 0; i < all.size(); ++i) col.emplace(all[i], i);
        const auto& odd = odd_set_compositions(n);
        std::vector<std::vector<Rational>> krows, erows, frows;
        for (const auto& phi : odd) {
            krows.push_back(m_row(K_to_M(K_of(phi)), all, col));
            erows.push_back(m_row(eta_to_M(eta_of(phi)), all, col));
        }
        if (matrix_rank(krows) != static_cast<int>(odd.size())) return false;
        if (matrix_rank(erows) != static_cast<int>(odd.size())) return false;
        for (const auto& phi : all) frows.push_back(m_row(F_to_M(F_of(phi)), all, col));
        if (matrix_rank(frows) != static_cast<int>(all.size())) return false;
    }
    return true;
}

bool crit4_oracles() {
    std::mt19937_64 rng(2024);
    // product
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n1 + n2 <= 4; ++n2) {
            int m = std::max(n1 + n2, 1);
            for (const auto& phi : set_compositions(n1))
                for (const auto& psi : set_compositions(n2))
                    if (!(realize(product_M(phi, psi), m) ==
                          word_product(realize_M(phi, m), realize_M(psi, m))))
                        return false;
        }
    for (int trial = 0; trial < 20; ++trial) {
        int n1 = 1 + static_cast<int>(rng() % 4), n2 = 5 - n1;
        const auto& a = set_compositions(n1);
        const auto& b = set_compositions(n2);
        const auto& phi = a[rng() % a.size()];
        const auto& psi = b[rng() % b.size()];
        if (!(realize(product_M(phi, psi), 5) ==
              word_product(realize_M(phi, 5), realize_M(psi, 5))))
            return false;
    }
    // graded coproduct against the bi-alphabet split: every nontrivial cut
    // matches the packed subword pairs, plus the two trivial cuts
    for (int n = 1; n <= 4; ++n)
        for (const auto& phi : set_compositions(n)) {
            TensorElem got = coproduct_M(phi);
            TensorElem want(Basis::M, Basis::M);
            WordPoly big = realize_M(phi, 2 * n);
            for (const auto& [w, c] : big.words) {
                std::vector<int> xs, ys;
                for (int letter : w) (letter <= n ? xs : ys).push_back(letter);
                SetComposition lp = word_pattern(xs), rp = word_pattern(ys);
                std::vector<int> canon_l(xs.size()), canon_r(ys.size());
                for (int b = 0; b < lp.length(); ++b)
                    for (int pos : lp.blocks[b]) canon_l[pos - 1] = b + 1;
                for (int b = 0; b < rp.length(); ++b)
                    for (int pos : rp.blocks[b]) canon_r[pos - 1] = b + 1 + n;
                if (xs == canon_l && ys == canon_r)
                    want.add(key_setcomp(Basis::M, lp), key_setcomp(Basis::M, rp), c);
            }
            bool found_left = false, found_right = false;
            for (const auto& [k, c] : got.terms()) {
                if (k.first.n == 0 && k.second.setcomp() == phi) found_left = true;
                if (k.second.n == 0 && k.first.setcomp() == phi) found_right = true;
            }
            if (!found_left || !found_right) return false;
            for (const auto& [k, c] : want.terms())
                if (!(got.terms().count(k) && got.terms().at(k) == c)) return false;
            for (const auto& [k, c] : got.terms()) {
                if (k.first.n == 0 || k.second.n == 0) continue;
                if (!(want.terms().count(k) && want.terms().at(k) == c)) return false;
            }
        }
    // internal coproduct against lexicographic pair packing
    for (int n = 1; n <= 4; ++n)
        for (const auto& phi : set_compositions(n)) {
            TensorElem got = internal_coproduct_M(phi);
            for (const auto& psi : set_compositions(n))
                for (const auto& phiprime : set_compositions(n)) {
                    std::vector<int> u(n), v(n);
                    for (int b = 0; b < psi.length(); ++b)
                        for (int pos : psi.blocks[b]) u[pos - 1] = b + 1;
                    for (int b = 0; b < phiprime.length(); ++b)
                        for (int pos : phiprime.blocks[b]) v[pos - 1] = b + 1;
                    std::vector<long long> pair(n);
                    for (int j = 0; j < n; ++j)
                        pair[j] = static_cast<long long>(u[j]) * 1000 + v[j];
                    std::vector<long long> sorted = pair;
                    std::sort(sorted.begin(), sorted.end());
                    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                    std::vector<Block> blocks(sorted.size());
                    for (int j = 0; j < n; ++j) {
                        size_t b =
                            std::lower_bound(sorted.begin(), sorted.end(), pair[j]) - sorted.begin();
                        blocks[b].push_back(j + 1);
                    }
                    Rational want(SetComposition{blocks} == phi ? 1 : 0);
                    BKey lk = key_setcomp(Basis::M, psi), rk = key_setcomp(Basis::M, phiprime);
                    Rational have =
                        got.terms().count({lk, rk}) ? got.terms().at({lk, rk}) : Rational(0);
                    if (!(have == want)) return false;
                }
        }
    // K expansions against enriched chain colourings
    for (int n = 1; n <= 4; ++n)
        for (const auto& phi : odd_set_compositions(n)) {
            EnrichedStandardPair ep = pair_of_odd_setcomp(phi);
            LabelledPoset chain = chain_of_standard_pair(ep.B, ep.sigma);
            if (!(realize(K_to_M(K_of(phi)), n) == enumerate_colourings(chain, n, true)))
                return false;
        }
    {
        const auto& odd5 = odd_set_compositions(5);
        for (int trial = 0; trial < 15; ++trial) {
            const auto& phi = odd5[rng() % odd5.size()];
            EnrichedStandardPair ep = pair_of_odd_setcomp(phi);
            LabelledPoset chain = chain_of_standard_pair(ep.B, ep.sigma);
            if (!(realize(K_to_M(K_of(phi)), 5) == enumerate_colourings(chain, 5, true)))
                return false;
        }
    }
    // digraph expansions over all labelled posets (representatives up to
    // relabelling; gamma and sigma range over all labellings)
    for (int n = 0; n <= 4; ++n) {
        auto reps = poset_representatives(n);
        std::vector<int> verts(n);
        std::iota(verts.begin(), verts.end(), 1);
        int m = std::max(n, 1);
        for (const auto& covers : reps)
            for (const auto& gamma : permutations(n))
                for (const auto& sigma : permutations(n)) {
                    LabelledPoset t = make_triple(verts, covers, gamma.img, sigma.img);
                    if (!(realize(Y_expansion_M(t), m) == enumerate_colourings(t, m, false)))
                        return false;
                    if (!(realize(Fcal_expansion_M(t), m) == enumerate_colourings(t, m, true)))
                        return false;
                }
    }
    for (int trial = 0; trial < 10; ++trial) {
        int n = 5;
        std::vector<std::pair<int, int>> covers;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (rng() % 3 == 0) covers.push_back({a, b});
        std::vector<int> verts(n);
        std::iota(verts.begin(), verts.end(), 1);
        const auto& perms = permutations(n);
        LabelledPoset t;
        try {
            t = make_triple(verts, covers, perms[rng() % perms.size()].img,
                            perms[rng() % perms.size()].img);
        } catch (const domain_error&) {
            continue;
        }
        if (!(realize(Y_expansion_M(t), n) == enumerate_colourings(t, n, false))) return false;
        if (!(realize(Fcal_expansion_M(t), n) == enumerate_colourings(t, n, true))) return false;
    }
    return true;
}

bool crit5_theta() {
    auto strip = [](const Subset& A) {
        Subset B;
        B.n = A.n;
        for (int a : A.elems)
            if (a != 1 && !A.contains(a - 1)) B.elems.push_back(a);
        return B;
    };
    // Theta(F_(A,sigma)) = K_(A\((A+1) u {1}), sigma) for every pair, n <= 4
    for (int n = 1; n <= 4; ++n)
        for (const auto& A : subsets(n))
            for (const auto& s : permutations(n))
                if (!(theta(F_function_M(A, s)) == K_function_M(strip(A), s))) return false;
    // the M closed form agrees with the F-route definition, n <= 5
    for (int n = 1; n <= 5; ++n)
        for (const auto& phi : set_compositions(n)) {
            Elem closed = theta_M_closed(phi);
            Elem want = closed.is_zero() ? Elem(Basis::M, n) : eta_to_M(closed);
            if (!(theta(M_of(phi)) == want)) return false;
        }
    // algebra morphism on every basis pair of total degree <= 5
    for (int n1 = 0; n1 <= 5; ++n1)
        for (int n2 = 0; n1 + n2 <= 5; ++n2)
            for (const auto& phi : set_compositions(n1))
                for (const auto& psi : set_compositions(n2))
                    if (!(theta(product_M(phi, psi)) ==
                          product(theta(M_of(phi)), theta(M_of(psi)))))
                        return false;
    // coalgebra morphism at degree <= 4
    for (int n = 0; n <= 4; ++n)
        for (const auto& phi : set_compositions(n)) {
            TensorElem lhs = coproduct(theta(M_of(phi)));
            TensorElem rhs(Basis::M, Basis::M);
            TensorElem d = coproduct_M(phi);
            for (const auto& [k, c] : d.terms()) {
                Elem tl = theta(M_of(k.first.setcomp()));
                Elem tr = theta(M_of(k.second.setcomp()));
                for (const auto& [lk, lc] : tl.terms())
                    for (const auto& [rk, rc] : tr.terms()) rhs.add(lk, rk, c * lc * rc);
            }
            if (!(lhs == rhs)) return false;
        }
    // the commuting square with the commutative shadow, n <= 4
    for (int n = 1; n <= 4; ++n)
        if (!check_diagram(n).empty()) return false;
    return true;
}

bool crit6_theta_powersums() {
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : set_partitions(n)) {
            Elem img = theta_p(pi);
            Elem expect(Basis::p, n);
            if (pi.is_odd())
                expect.add(key_setpartition(Basis::p, pi),
                           Rational(BigInt::two_pow(static_cast<unsigned>(pi.length()))));
            if (!(img == expect)) return false;
            // Theta . omega = omega . Theta on the p span
            Elem lhs = theta(ncsym_to_M(omega(p_of_partition(pi))));
            Elem rhs = img.is_zero() ? Elem(Basis::M, n) : ncsym_to_M(omega(img));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool crit7_ncomega() {
    std::vector<long long> expected{1, 1, 1, 2, 5, 12};
    for (int n = 0; n <= 5; ++n)
        if (!(dim_ncomega(n) == BigInt(expected[n]))) return false;
    for (int n = 1; n <= 5; ++n) {
        for (const auto& pi : set_partitions(n))
            if (!(theta(ncsym_to_M(h_of(pi))) == theta(ncsym_to_M(e_of(pi))))) return false;
        const auto& all = set_compositions(n);
        std::map<SetComposition, size_t, SetCompLess> col;
        for (size_t i = 0; i < all.size(); ++i) col.emplace(all[i], i);
        const auto& odd = odd_set_partitions(n);
        std::vector<std::vector<Rational>> qrows, nrows, both, sym_rows, peak_rows, union_rows;
        for (const auto& pi : odd) {
            Elem q = q_to_M(pi);
            Elem nb = eta_to_M(n_elem(pi));
            // omega(q) = q via the p expansion
            Elem qp = m_basis_to_p(membership_ncsym(q));
            if (!(ncsym_to_M(omega(qp)) == q)) return false;
            // membership on both sides of the intersection
            if (!in_peak_algebra(q) || !try_to_m_basis(q).has_value()) return false;
            if (!try_to_m_basis(nb).has_value()) return false;
            qrows.push_back(m_row(q, all, col));
            nrows.push_back(m_row(nb, all, col));
        }
        int dim = static_cast<int>(odd.size());
        if (matrix_rank(qrows) != dim || matrix_rank(nrows) != dim) return false;
        both = qrows;
        both.insert(both.end(), nrows.begin(), nrows.end());
        if (matrix_rank(both) != dim) return false;
        for (const auto& pi : set_partitions(n)) sym_rows.push_back(m_row(m_to_M(pi), all, col));
        for (const auto& phi : odd_set_compositions(n))
            peak_rows.push_back(m_row(eta_to_M(eta_of(phi)), all, col));
        union_rows = sym_rows;
        union_rows.insert(union_rows.end(), peak_rows.begin(), peak_rows.end());
        int inter = matrix_rank(sym_rows) + matrix_rank(peak_rows) - matrix_rank(union_rows);
        if (inter != dim) return false;
    }
    return true;
}

bool crit8_section9() {
    for (int n = 1; n <= 14; ++n)
        if (!verify_case1(n)) return false;
    // recursive Moebius of the odd sub-poset vs the signed-Catalan closed
    // forms, for every interval shape with l(phi) <= 9: blockwise product in
    // general, the single Catalan when the bottom has one block
    for (int l = 1; l <= 9; ++l) {
        Composition top;
        top.parts.assign(l, 1);
        for (const auto& beta : odd_compositions(l)) {
            BigInt mu = mobius_odd_comp(beta, top);
            BigInt closed(1);
            for (int part : beta.parts) {
                int d = (part - 1) / 2;
                BigInt f = catalan(d);
                if (d % 2) f = -f;
                closed *= f;
            }
            if (!(mu == closed)) return false;
            if (beta.length() == 1) {
                int d = (l - 1) / 2;
                BigInt single = catalan(d);
                if (d % 2) single = -single;
                if (!(mu == single)) return false;
            }
        }
    }
    // spot-check the set-composition-level recursion against the shape level
    for (int n = 1; n <= 5; ++n)
        for (const auto& phi : odd_set_compositions(n))
            for (const auto& psi : coarsenings(phi)) {
                if (!psi.is_odd()) continue;
                Composition beta;
                size_t j = 0;
                for (const auto& pb : psi.blocks) {
                    size_t got = 0;
                    int cnt = 0;
                    while (got < pb.size()) got += phi.blocks[j++].size(), ++cnt;
                    beta.parts.push_back(cnt);
                }
                Composition top;
                top.parts.assign(phi.length(), 1);
                if (!(mobius_odd(psi, phi) == mobius_odd_comp(beta, top))) return false;
            }
    // int1 / main / int2 exhaustively for n <= 5
    for (int n = 1; n <= 5; ++n)
        for (const auto& phi : odd_set_compositions(n))
            for (const auto& psi : coarsenings(phi)) {
                if (!verify_int1(phi, psi)) return false;
                if (!verify_main(phi, psi)) return false;
                if (!verify_int2_all(phi, psi)) return false;
            }
    // sampled at n = 6
    std::mt19937_64 rng(99);
    const auto& odd6 = odd_set_compositions(6);
    for (int trial = 0; trial < 12; ++trial) {
        const auto& phi = odd6[rng() % odd6.size()];
        auto coars = coarsenings(phi);
        const auto& psi = coars[rng() % coars.size()];
        if (!verify_int1(phi, psi)) return false;
        if (!verify_main(phi, psi)) return false;
        if (!verify_int2_all(phi, psi)) return false;
    }
    return true;
}

bool crit9_internal() {
    for (int n = 1; n <= 4; ++n)
        for (const auto& phi : odd_set_compositions(n))
            if (!verify_internal(phi)) return false;
    // golden: the M_{3|124} component of the internal coproduct of eta_{3|1|4|2}
    {
        TensorElem d = internal_coproduct(eta_to_M(eta_of(sc("3|1|4|2"))));
        auto legs = d.right_legs();
        Elem leg = legs.at(key_setcomp(Basis::M, sc("3|1,2,4")));
        Elem expect = eta_to_M(el("1*Eta:3|1|4|2 + 1*Eta:1|3|4|2 + 1*Eta:1|4|3|2 + "
                                  "1*Eta:1|4|2|3 + 1*Eta:1,3,4|2 + 1*Eta:1|2,3,4"));
        if (!(leg == expect)) return false;
    }
    // golden: the full internal coproduct of K_(empty,12), with the right
    // co-ideal failure witness
    {
        TensorElem d = internal_coproduct(K_to_M(K_of(sc("1|2"))));
        TensorElem expect(Basis::M, Basis::M);
        auto addp = [&](const char* l, const char* r, long long c) {
            expect.add(key_setcomp(Basis::M, sc(l)), key_setcomp(Basis::M, sc(r)), Rational(c));
        };
        addp("1,2", "1,2", 2);
        addp("1|2", "1,2", 4);
        addp("1,2", "1|2", 4);
        addp("1|2", "1|2", 4);
        addp("1|2", "2|1", 4);
        if (!(d == expect)) return false;
        auto cols = d.left_legs();
        if (!in_peak_algebra(cols.at(key_setcomp(Basis::M, sc("1,2"))))) return false;
        if (in_peak_algebra(cols.at(key_setcomp(Basis::M, sc("1|2"))))) return false;
        if (in_peak_algebra(cols.at(key_setcomp(Basis::M, sc("2|1"))))) return false;
        for (const auto& [lk, leg] : d.right_legs())
            if (!in_peak_algebra(leg)) return false;
    }
    return true;
}

bool crit10_golden() {
    if (!(set_comp(make_subset({2, 5, 6}, 8), parse_permutation("67325841")) ==
          sc("6,7|2,3,5|8|1,4")))
        return false;
    if (!(std_pair(make_subset({3, 5}, 8), parse_permutation("37284516")).sigma ==
          parse_permutation("23748156")))
        return false;
    if (!(estd_pair(make_subset({2, 5, 7}, 9), parse_permutation("287134659")).sigma ==
          parse_permutation("278134569")))
        return false;
    if (!(odd_of_peak(make_subset({2, 5, 7, 10}, 11)).elems == std::vector<int>{3, 8}))
        return false;
    if (!(comp_odd(make_subset({2, 5, 7, 10}, 11)).parts == std::vector<int>{3, 5, 3}))
        return false;
    if (!(odiff(make_subset({1, 3, 4, 8}, 9)).elems == std::vector<int>{1, 4})) return false;
    if (!(odd_merge(sc("1|5,8|6,9|4|2,3|7")) == sc("1|4,5,6,8,9|2,3,7"))) return false;
    {
        SetComposition raw{{{2, 5, 6}, {1, 4}, {3, 8, 9}}};
        if (!(underlying_partition(raw).blocks ==
              std::vector<Block>{{1, 4}, {2, 5, 6}, {3, 8, 9}}))
            return false;
    }
    {
        auto C = script_C(sc("3|1|4|2"), sc("3|1,2,4"));
        std::set<std::string> cset, dset;
        for (const auto& x : C) cset.insert(to_text(x));
        if (cset != std::set<std::string>{"3|1|4|2", "1|3|4|2", "1|4|3|2", "1|4|2|3"}) return false;
        for (const auto& x : script_D(sc("3|1|4|2"), sc("3|1,2,4"))) dset.insert(to_text(x));
        if (dset != std::set<std::string>{"3|1|4|2", "1|3|4|2", "1|4|3|2", "1|4|2|3", "1,3,4|2",
                                          "3|1,2,4", "1|2,3,4", "1,2,4|3"})
            return false;
        if (!(coeff_C(sc("3|1|4|2"), sc("3|1,2,4"), sc("1,3,4|2")) == Rational(1))) return false;
        if (!(coeff_C(sc("3|1|4|2"), sc("3|1,2,4"), sc("1,2,4|3")) == Rational(0))) return false;
        if (!(coeff_C(sc("3|1|4|2"), sc("3|1,2,4"), sc("3|1,2,4")) == Rational(0))) return false;
        if (!(coeff_C(sc("3|1|4|2"), sc("3|1,2,4"), sc("1|2,3,4")) == Rational(1))) return false;
    }
    return true;
}

bool crit11_conjectures() {
    for (const auto& row : scan_conjecture_euler(13, 2))
        if (!row.equal) return false;
    long long scanned = 0;
    auto hits = scan_C_nonneg(5, &scanned, 2);
    if (!hits.empty() || scanned == 0) return false;
    for (int n = 2; n <= 16; n += 2)
        if (!verify_special_even(n)) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "dim NCPi = 1,1,2,7,32,181; degree 6 two ways; EGF 1/(1-sinh x)", crit1_dims);
    criterion(2, "commutative peak dimensions are Fibonacci (n = 1..7)", crit2_fibonacci);
    criterion(3, "K and eta families independent, F spans NCQSym (n <= 5)", crit3_bases);
    criterion(4, "word-realization oracle: product, coproducts, K, digraphs", crit4_oracles);
    criterion(5, "theta: F-to-K rule, M closed form, Hopf morphism, rho square", crit5_theta);
    criterion(6, "theta on power sums is 2^l or 0; theta commutes with omega", crit6_theta_powersums);
    criterion(7, "Schur Q layer: q = theta(h) = theta(e), spans, dimensions", crit7_ncomega);
    criterion(8, "odd-poset identities: case1, Moebius forms, int1/main/int2", crit8_section9);
    criterion(9, "internal coproduct of eta; left co-ideal; golden tensors", crit9_internal);
    criterion(10, "golden combinatorics match the worked examples verbatim", crit10_golden);
    criterion(11, "conjecture evidence: euler scan, C >= 0, special even case", crit11_conjectures);
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
