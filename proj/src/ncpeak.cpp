#include "ncq/ncpeak.hpp"

#include <algorithm>

#include "ncq/ncqsym.hpp"

namespace ncq {

Elem K_of(const SetComposition& odd_phi) { return Elem::single(key_setcomp(Basis::K, odd_phi)); }
Elem eta_of(const SetComposition& odd_phi) { return Elem::single(key_setcomp(Basis::Eta, odd_phi)); }

Elem K_function_M(const Subset& B, const Permutation& sigma) {
    if (!is_peak_set(B)) throw domain_error("K_function_M: not a peak set");
    if (B.n != sigma.n()) throw domain_error("K_function_M: size mismatch");
    int n = sigma.n();
    Elem out(Basis::M, n);
    // All A in [n-1] with B <= A u (A+1), weight 2^(|A|+1).
    int m = std::max(n - 1, 0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Subset A;
        A.n = n;
        for (int i = 1; i <= m; ++i)
            if (mask & (1u << (i - 1))) A.elems.push_back(i);
        bool covered = true;
        for (int b : B.elems)
            if (!A.contains(b) && !A.contains(b - 1)) {
                covered = false;
                break;
            }
        if (!covered) continue;
        unsigned blocks = n == 0 ? 0 : static_cast<unsigned>(A.size()) + 1;
        out.add(key_setcomp(Basis::M, set_comp(A, sigma)), Rational(BigInt::two_pow(blocks)));
    }
    return out;
}

Elem eta_function_M(const Subset& B, const Permutation& sigma) {
    if (!is_peak_set(B)) throw domain_error("eta_function_M: not a peak set");
    Subset odd = odd_of_peak(B);
    int k = odd.size();
    Elem out(Basis::M, sigma.n());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Subset A;
        A.n = sigma.n();
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) A.elems.push_back(odd.elems[i]);
        unsigned blocks = sigma.n() == 0 ? 0 : static_cast<unsigned>(A.size()) + 1;
        Rational c(BigInt::two_pow(blocks));
        if (B.size() % 2) c = -c;
        out.add(key_setcomp(Basis::M, set_comp(A, sigma)), c);
    }
    return out;
}

Elem eta_odd_M(const SetComposition& odd_phi) {
    if (!odd_phi.is_odd()) throw domain_error("eta_odd_M: not an odd set composition");
    Elem out(Basis::M, odd_phi.degree());
    for (const auto& psi : coarsenings(odd_phi)) {
        Rational c(BigInt::two_pow(static_cast<unsigned>(psi.length())));
        if (p_of(odd_phi) % 2) c = -c;
        out.add(key_setcomp(Basis::M, psi), c);
    }
    return out;
}

Elem K_to_M(const Elem& k_elem) {
    Elem out(Basis::M, k_elem.degree());
    for (const auto& [key, c] : k_elem.terms()) {
        EnrichedStandardPair ep = pair_of_odd_setcomp(key.setcomp());
        Elem part = K_function_M(ep.B, ep.sigma);
        part *= c;
        out += part;
    }
    return out;
}

Elem eta_to_M(const Elem& eta_elem) {
    Elem out(Basis::M, eta_elem.degree());
    for (const auto& [key, c] : eta_elem.terms()) {
        Elem part = eta_odd_M(key.setcomp());
        part *= c;
        out += part;
    }
    return out;
}

Elem eta_K_convert(const Elem& elem) {
    Basis from = elem.basis();
    if (from != Basis::Eta && from != Basis::K)
        throw domain_error("eta_K_convert: element must be K or Eta tagged");
    Basis to = from == Basis::Eta ? Basis::K : Basis::Eta;
    Elem out(to, elem.degree());
    for (const auto& [key, c] : elem.terms()) {
        EnrichedStandardPair ep = pair_of_odd_setcomp(key.setcomp());
        int k = ep.B.size();
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Subset C;
            C.n = ep.B.n;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) C.elems.push_back(ep.B.elems[i]);
            Rational t = c;
            // eta_B = sum_C (-1)^(|B|-|C|) K_C;  K_B = sum_C eta_C.
            if (from == Basis::Eta && (k - C.size()) % 2) t = -t;
            out.add(key_setcomp(to, setcomp_odd(C, ep.sigma)), t);
        }
    }
    return out;
}

std::optional<Elem> try_to_eta_basis(const Elem& m_elem) {
    if (m_elem.basis() != Basis::M && !m_elem.is_zero())
        throw domain_error("to_eta_basis: element must be in the M basis");
    int n = m_elem.degree();
    Elem rest = m_elem;
    Elem out(Basis::Eta, n);
    // Odd keys from finest (longest) to coarsest; triangularity makes the
    // order within a length class irrelevant, canonical order fixes it.
    std::vector<SetComposition> odd = odd_set_compositions(n);
    std::stable_sort(odd.begin(), odd.end(), [](const SetComposition& a, const SetComposition& b) {
        return a.length() > b.length();
    });
    for (const auto& phi : odd) {
        Rational c = rest.coeff(key_setcomp(Basis::M, phi));
        if (c.is_zero()) continue;
        Rational lead(BigInt::two_pow(static_cast<unsigned>(phi.length())));
        if (p_of(phi) % 2) lead = -lead;
        Rational coeff = c / lead;
        Elem part = eta_odd_M(phi);
        part *= coeff;
        rest -= part;
        out.add(key_setcomp(Basis::Eta, phi), coeff);
    }
    if (!rest.is_zero()) return std::nullopt;
    return out;
}

Elem to_eta_basis(const Elem& m_elem) {
    auto r = try_to_eta_basis(m_elem);
    if (!r) throw NotInPeakAlgebra("element is not in the peak algebra");
    return *r;
}

Elem to_K_basis(const Elem& m_elem) {
    Elem eta = to_eta_basis(m_elem);
    if (eta.is_zero()) return Elem(Basis::K, m_elem.degree());
    return eta_K_convert(eta);
}

bool in_peak_algebra(const Elem& m_elem) { return try_to_eta_basis(m_elem).has_value(); }

BigInt dim_ncpeak(int n) {
    if (n < 0) throw domain_error("dim_ncpeak: negative degree");
    // ordered set partitions into odd blocks: condition on the first block
    std::vector<BigInt> a(n + 1);
    a[0] = BigInt(1);
    for (int m = 1; m <= n; ++m) {
        BigInt s(0);
        for (int k = 1; k <= m; k += 2) s += BigInt::binomial(m, k) * a[m - k];
        a[m] = s;
    }
    return a[n];
}

}  // namespace ncq
