#include "ncq/theta.hpp"

#include <algorithm>
#include <functional>

#include "ncq/ncpeak.hpp"
#include "ncq/ncqsym.hpp"

namespace ncq {

namespace {

// A \ ((A+1) u {1}): the peak-set index attached to a descent set.
Subset descent_to_peak_index(const Subset& A) {
    Subset B;
    B.n = A.n;
    for (int a : A.elems)
        if (a != 1 && !A.contains(a - 1)) B.elems.push_back(a);
    return B;
}

void for_each_superset(const Subset& A, const std::function<void(const Subset&)>& fn) {
    std::vector<int> comp;
    for (int x = 1; x <= A.n - 1; ++x)
        if (!A.contains(x)) comp.push_back(x);
    int k = static_cast<int>(comp.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Subset C = A;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) C.elems.push_back(comp[i]);
        std::sort(C.elems.begin(), C.elems.end());
        fn(C);
    }
}

}  // namespace

Elem theta_F_function_M(const Subset& A, const Permutation& sigma) {
    // Theta is defined on the F basis; an arbitrary F-function is pushed
    // through its M expansion and the inclusion-exclusion back to basis F's.
    return theta(F_function_M(A, sigma));
}

Elem theta_M_closed(const SetComposition& phi) {
    StandardPair sp = pair_of_setcomp(phi);
    int n = phi.degree();
    if ((n - max_or_zero(sp.A)) % 2 == 0) return Elem(Basis::Eta, n);
    Subset B = peak_of_odd(odiff(sp.A));
    Rational sign(1);
    if ((n - 1 - B.size() - sp.A.size()) % 2) sign = Rational(-1);
    EnrichedStandardPair ep = estd_pair(B, sp.sigma);
    Elem out(Basis::Eta, n);
    out.add(key_setcomp(Basis::Eta, setcomp_odd(ep.B, ep.sigma)), sign);
    return out;
}

Elem theta(const Elem& elem) {
    Elem m = to_M(elem);
    int n = m.degree();
    Elem out(Basis::M, n);
    for (const auto& [key, c] : m.terms()) {
        // M_(A,sigma) = sum_{A<=C} (-1)^(|C|-|A|) F_(C,sigma); apply the
        // defining rule F_(C,sigma) -> K_(C\((C+1) u {1}), sigma) termwise.
        StandardPair sp = pair_of_setcomp(key.setcomp());
        for_each_superset(sp.A, [&](const Subset& C) {
            Elem part = K_function_M(descent_to_peak_index(C), sp.sigma);
            Rational t = c;
            if ((C.size() - sp.A.size()) % 2) t = -t;
            part *= t;
            out += part;
        });
    }
    return out;
}

Elem theta_eta(const Elem& elem) { return to_eta_basis(theta(elem)); }

Elem theta_F(const SetComposition& phi) {
    StandardPair sp = pair_of_setcomp(phi);
    return to_K_basis(K_function_M(descent_to_peak_index(sp.A), sp.sigma));
}

// ---------------------------------------------------------------------------
// Commutative shadow

Elem qsym_M_of(const Subset& A) { return Elem::single(key_subset(Basis::QSymM, A)); }
Elem qsym_F_of(const Subset& A) { return Elem::single(key_subset(Basis::QSymF, A)); }

Elem qsym_F_to_M(const Subset& A) {
    Elem out(Basis::QSymM, A.n);
    for_each_superset(A, [&](const Subset& C) { out.add(key_subset(Basis::QSymM, C), Rational(1)); });
    return out;
}

Elem qsym_M_to_F(const Subset& A) {
    // M_A = sum over supersets A <= C of (-1)^(|C|-|A|) F_C.
    Elem out(Basis::QSymF, A.n);
    for_each_superset(A, [&](const Subset& C) {
        Rational t(1);
        if ((C.size() - A.size()) % 2) t = -t;
        out.add(key_subset(Basis::QSymF, C), t);
    });
    return out;
}

Elem qsym_K_to_M(const Subset& B) {
    if (!is_peak_set(B)) throw domain_error("qsym_K_to_M: not a peak set");
    Elem out(Basis::QSymM, B.n);
    int m = std::max(B.n - 1, 0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Subset A;
        A.n = B.n;
        for (int i = 1; i <= m; ++i)
            if (mask & (1u << (i - 1))) A.elems.push_back(i);
        bool covered = true;
        for (int b : B.elems)
            if (!A.contains(b) && !A.contains(b - 1)) {
                covered = false;
                break;
            }
        if (!covered) continue;
        unsigned blocks = B.n == 0 ? 0 : static_cast<unsigned>(A.size()) + 1;
        out.add(key_subset(Basis::QSymM, A), Rational(BigInt::two_pow(blocks)));
    }
    return out;
}

Elem qsym_eta_to_M(const Subset& B) {
    if (!is_peak_set(B)) throw domain_error("qsym_eta_to_M: not a peak set");
    Subset odd = odd_of_peak(B);
    int k = odd.size();
    Elem out(Basis::QSymM, B.n);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Subset A;
        A.n = B.n;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) A.elems.push_back(odd.elems[i]);
        unsigned blocks = B.n == 0 ? 0 : static_cast<unsigned>(A.size()) + 1;
        Rational c(BigInt::two_pow(blocks));
        if (B.size() % 2) c = -c;
        out.add(key_subset(Basis::QSymM, A), c);
    }
    return out;
}

Elem qsym_to_M(const Elem& elem) {
    switch (elem.basis()) {
        case Basis::QSymM: return elem;
        case Basis::QSymF: {
            Elem out(Basis::QSymM, elem.degree());
            for (const auto& [k, c] : elem.terms()) {
                Elem part = qsym_F_to_M(k.subset());
                part *= c;
                out += part;
            }
            return out;
        }
        case Basis::QSymK: {
            Elem out(Basis::QSymM, elem.degree());
            for (const auto& [k, c] : elem.terms()) {
                Elem part = qsym_K_to_M(k.subset());
                part *= c;
                out += part;
            }
            return out;
        }
        case Basis::QSymEta: {
            Elem out(Basis::QSymM, elem.degree());
            for (const auto& [k, c] : elem.terms()) {
                Elem part = qsym_eta_to_M(k.subset());
                part *= c;
                out += part;
            }
            return out;
        }
        default: throw domain_error("qsym_to_M: not a QSym basis tag");
    }
}

Elem theta_qsym(const Elem& qsym_elem) {
    Elem out(Basis::QSymM, qsym_elem.degree());
    if (qsym_elem.basis() == Basis::QSymF) {
        for (const auto& [k, c] : qsym_elem.terms()) {
            Elem part = qsym_K_to_M(descent_to_peak_index(k.subset()));
            part *= c;
            out += part;
        }
        return out;
    }
    if (qsym_elem.basis() == Basis::QSymM) {
        for (const auto& [k, c] : qsym_elem.terms()) {
            for_each_superset(k.subset(), [&](const Subset& C) {
                Elem part = theta_qsym(qsym_F_of(C));
                Rational t = c;
                if ((C.size() - k.subset().size()) % 2) t = -t;
                part *= t;
                out += part;
            });
        }
        return out;
    }
    throw domain_error("theta_qsym: element must be QSymM or QSymF tagged");
}

BigInt dim_qsym_peak(int n) {
    return BigInt(static_cast<long long>(odd_compositions(n).size()));
}

std::vector<SetComposition> check_diagram(int n) {
    std::vector<SetComposition> bad;
    for (const auto& phi : set_compositions(n)) {
        Elem lhs = rho(theta(M_of(phi)));
        Elem rhs = theta_qsym(rho(M_of(phi)));
        if (!(lhs == rhs)) bad.push_back(phi);
    }
    return bad;
}

}  // namespace ncq
