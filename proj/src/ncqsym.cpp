#include "ncq/ncqsym.hpp"

#include <functional>

#include "ncq/ncpeak.hpp"
#include "ncq/ncsym.hpp"

namespace ncq {

Elem M_of(const SetComposition& phi) { return Elem::single(key_setcomp(Basis::M, phi)); }
Elem F_of(const SetComposition& phi) { return Elem::single(key_setcomp(Basis::F, phi)); }

Elem M_of_pair(const Subset& A, const Permutation& sigma) {
    return M_of(set_comp(A, sigma));
}

namespace {

// Supersets A <= C <= [n-1], as subsets.
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

Elem F_function_M(const Subset& A, const Permutation& sigma) {
    if (A.n != sigma.n()) throw domain_error("F_function_M: size mismatch");
    Elem out(Basis::M, sigma.n());
    for_each_superset(A, [&](const Subset& C) {
        out.add(key_setcomp(Basis::M, set_comp(C, sigma)), Rational(1));
    });
    return out;
}

Elem F_to_M(const Elem& f_elem) {
    Elem out(Basis::M, f_elem.degree());
    for (const auto& [key, c] : f_elem.terms()) {
        StandardPair sp = pair_of_setcomp(key.setcomp());
        Elem part = F_function_M(sp.A, sp.sigma);
        part *= c;
        out += part;
    }
    return out;
}

Elem M_to_F(const Elem& m_elem) {
    Elem out(Basis::F, m_elem.degree());
    for (const auto& [key, c] : m_elem.terms()) {
        // M_(A,sigma) = sum over supersets A <= C of (-1)^(|C|-|A|) F_(C,sigma);
        // every (C,sigma) with C containing Des(sigma) is standard, so the F
        // keys are basis keys as they stand.
        StandardPair sp = pair_of_setcomp(key.setcomp());
        for_each_superset(sp.A, [&](const Subset& C) {
            Rational t = c;
            if ((C.size() - sp.A.size()) % 2) t = -t;
            out.add(key_setcomp(Basis::F, set_comp(C, sp.sigma)), t);
        });
    }
    return out;
}

Elem product_M(const SetComposition& phi, const SetComposition& psi) {
    int n1 = phi.degree();
    Elem out(Basis::M, n1 + psi.degree());
    std::vector<Block> shifted = psi.blocks;
    for (auto& b : shifted)
        for (int& x : b) x += n1;
    std::vector<Block> cur;
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == phi.blocks.size() && j == shifted.size()) {
            out.add(key_setcomp(Basis::M, SetComposition{cur}), Rational(1));
            return;
        }
        if (i < phi.blocks.size()) {
            cur.push_back(phi.blocks[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < shifted.size()) {
            cur.push_back(shifted[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
        if (i < phi.blocks.size() && j < shifted.size()) {
            Block merged;
            std::merge(phi.blocks[i].begin(), phi.blocks[i].end(), shifted[j].begin(),
                       shifted[j].end(), std::back_inserter(merged));
            cur.push_back(std::move(merged));
            rec(i + 1, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

Elem product(const Elem& a, const Elem& b) {
    Elem ma = to_M(a), mb = to_M(b);
    Elem out(Basis::M, ma.degree() + mb.degree());
    for (const auto& [ka, ca] : ma.terms())
        for (const auto& [kb, cb] : mb.terms()) {
            Elem part = product_M(ka.setcomp(), kb.setcomp());
            part *= ca * cb;
            out += part;
        }
    return out;
}

TensorElem coproduct_M(const SetComposition& phi) {
    TensorElem out(Basis::M, Basis::M);
    int l = phi.length();
    for (int i = 0; i <= l; ++i) {
        std::vector<Block> left(phi.blocks.begin(), phi.blocks.begin() + i);
        std::vector<Block> right(phi.blocks.begin() + i, phi.blocks.end());
        SetComposition lc = standardize_to_initial_segment(left);
        SetComposition rc = standardize_to_initial_segment(right);
        out.add(key_setcomp(Basis::M, lc), key_setcomp(Basis::M, rc), Rational(1));
    }
    return out;
}

TensorElem coproduct(const Elem& a) {
    Elem ma = to_M(a);
    TensorElem out(Basis::M, Basis::M);
    for (const auto& [k, c] : ma.terms()) {
        TensorElem part = coproduct_M(k.setcomp());
        for (const auto& [kk, cc] : part.terms()) out.add(kk.first, kk.second, c * cc);
    }
    return out;
}

TensorElem internal_coproduct_M(const SetComposition& phi) {
    TensorElem out(Basis::M, Basis::M);
    int n = phi.degree();
    for (const auto& psi : coarsenings(phi)) {
        BKey lk = key_setcomp(Basis::M, psi);
        for (const auto& phiprime : set_compositions(n)) {
            if (meet(psi, phiprime) == phi)
                out.add(lk, key_setcomp(Basis::M, phiprime), Rational(1));
        }
    }
    return out;
}

TensorElem internal_coproduct(const Elem& a) {
    Elem ma = to_M(a);
    TensorElem out(Basis::M, Basis::M);
    for (const auto& [k, c] : ma.terms()) {
        TensorElem part = internal_coproduct_M(k.setcomp());
        for (const auto& [kk, cc] : part.terms()) out.add(kk.first, kk.second, c * cc);
    }
    return out;
}

Elem rho(const Elem& a) {
    if (a.basis() != Basis::M && a.basis() != Basis::F)
        throw domain_error("rho: element must be in the M or F basis");
    Basis target = a.basis() == Basis::M ? Basis::QSymM : Basis::QSymF;
    Elem out(target, a.degree());
    for (const auto& [k, c] : a.terms()) {
        StandardPair sp = pair_of_setcomp(k.setcomp());
        out.add(key_subset(target, sp.A), c);
    }
    return out;
}

Elem to_M(const Elem& a) {
    switch (a.basis()) {
        case Basis::M: return a;
        case Basis::F: return F_to_M(a);
        case Basis::K: return K_to_M(a);
        case Basis::Eta: return eta_to_M(a);
        case Basis::m:
        case Basis::p:
        case Basis::e:
        case Basis::h:
        case Basis::q:
        case Basis::nbasis: return ncsym_to_M(a);
        default: throw domain_error("to_M: QSym elements have no noncommutative M expansion");
    }
}

BigInt dim_ncqsym(int n) { return ordered_bell(n); }

}  // namespace ncq
