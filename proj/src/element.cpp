#include "ncq/element.hpp"

namespace ncq {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::F: return "F";
        case Basis::K: return "K";
        case Basis::Eta: return "Eta";
        case Basis::m: return "m";
        case Basis::p: return "p";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::q: return "q";
        case Basis::nbasis: return "nbasis";
        case Basis::QSymM: return "QSymM";
        case Basis::QSymF: return "QSymF";
        case Basis::QSymK: return "QSymK";
        case Basis::QSymEta: return "QSymEta";
    }
    return "?";
}

Basis basis_from_name(const std::string& s) {
    static const std::map<std::string, Basis> names = {
        {"M", Basis::M},         {"F", Basis::F},
        {"K", Basis::K},         {"Eta", Basis::Eta},
        {"m", Basis::m},         {"p", Basis::p},
        {"e", Basis::e},         {"h", Basis::h},
        {"q", Basis::q},         {"nbasis", Basis::nbasis},
        {"QSymM", Basis::QSymM}, {"QSymF", Basis::QSymF},
        {"QSymK", Basis::QSymK}, {"QSymEta", Basis::QSymEta},
    };
    auto it = names.find(s);
    if (it == names.end()) throw domain_error("unknown basis '" + s + "'");
    return it->second;
}

bool basis_uses_setcomp(Basis b) {
    return b == Basis::M || b == Basis::F || b == Basis::K || b == Basis::Eta;
}

bool basis_uses_setpartition(Basis b) {
    return b == Basis::m || b == Basis::p || b == Basis::e || b == Basis::h || b == Basis::q ||
           b == Basis::nbasis;
}

bool basis_uses_subset(Basis b) {
    return b == Basis::QSymM || b == Basis::QSymF || b == Basis::QSymK || b == Basis::QSymEta;
}

bool operator==(const BKey& a, const BKey& b) {
    return a.basis == b.basis && a.n == b.n && a.index == b.index;
}

bool operator<(const BKey& a, const BKey& b) {
    if (a.basis != b.basis) return static_cast<int>(a.basis) < static_cast<int>(b.basis);
    if (a.n != b.n) return a.n < b.n;
    if (a.index.index() != b.index.index()) return a.index.index() < b.index.index();
    if (const auto* sc = std::get_if<SetComposition>(&a.index))
        return setcomp_less(*sc, std::get<SetComposition>(b.index));
    if (const auto* sp = std::get_if<SetPartition>(&a.index))
        return setpartition_less(*sp, std::get<SetPartition>(b.index));
    return std::get<Subset>(a.index) < std::get<Subset>(b.index);
}

BKey key_setcomp(Basis b, SetComposition phi) {
    if (!basis_uses_setcomp(b)) throw domain_error("basis does not take a set composition key");
    if ((b == Basis::K || b == Basis::Eta) && !phi.is_odd())
        throw domain_error("K/Eta keys must be odd set compositions");
    int n = phi.degree();
    return BKey{b, n, KeyIndex{std::move(phi)}};
}

BKey key_setpartition(Basis b, SetPartition pi) {
    if (!basis_uses_setpartition(b)) throw domain_error("basis does not take a set partition key");
    if ((b == Basis::q || b == Basis::nbasis) && !pi.is_odd())
        throw domain_error("q/n keys must be odd set partitions");
    int n = pi.degree();
    return BKey{b, n, KeyIndex{std::move(pi)}};
}

BKey key_subset(Basis b, Subset A) {
    if (!basis_uses_subset(b)) throw domain_error("basis does not take a subset key");
    if ((b == Basis::QSymK || b == Basis::QSymEta) && !is_peak_set(A))
        throw domain_error("QSymK/QSymEta keys must be peak sets");
    int n = A.n;
    return BKey{b, n, KeyIndex{std::move(A)}};
}

void Elem::add(const BKey& key, const Rational& c) {
    if (c.is_zero()) return;
    if (terms_.empty()) {
        basis_ = key.basis;
        n_ = key.n;
    } else if (key.basis != basis_ || key.n != n_) {
        throw domain_error("element: mixed basis tag or degree");
    }
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Elem::coeff(const BKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

Elem& Elem::operator+=(const Elem& o) {
    if (!o.is_zero() && !is_zero() && (o.basis_ != basis_ || o.n_ != n_))
        throw domain_error("element addition: mixed basis tag or degree");
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

Elem& Elem::operator-=(const Elem& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

Elem& Elem::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Elem& a, const Elem& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.basis_ == b.basis_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

Elem Elem::single(BKey key, Rational c) {
    Elem e(key.basis, key.n);
    e.add(key, c);
    return e;
}

void TensorElem::add(const BKey& l, const BKey& r, const Rational& c) {
    if (c.is_zero()) return;
    if (terms_.empty()) {
        lbasis_ = l.basis;
        rbasis_ = r.basis;
    } else if (l.basis != lbasis_ || r.basis != rbasis_) {
        throw domain_error("tensor: mixed basis tags");
    }
    auto [it, inserted] = terms_.emplace(std::make_pair(l, r), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

bool operator==(const TensorElem& a, const TensorElem& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.lbasis_ == b.lbasis_ && a.rbasis_ == b.rbasis_ && a.terms_ == b.terms_;
}

std::map<BKey, Elem> TensorElem::right_legs() const {
    std::map<BKey, Elem> out;
    for (const auto& [k, c] : terms_) out[k.first].add(k.second, c);
    return out;
}

std::map<BKey, Elem> TensorElem::left_legs() const {
    std::map<BKey, Elem> out;
    for (const auto& [k, c] : terms_) out[k.second].add(k.first, c);
    return out;
}

TensorElem tensor(const Elem& a, const Elem& b) {
    TensorElem t(a.basis(), b.basis());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) t.add(ka, kb, ca * cb);
    return t;
}

}  // namespace ncq
