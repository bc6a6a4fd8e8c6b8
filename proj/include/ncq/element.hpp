#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>

#include "ncq/combinatorics.hpp"
#include "ncq/rational.hpp"

namespace ncq {

enum class Basis {
    M,
    F,
    K,
    Eta,
    m,
    p,
    e,
    h,
    q,
    nbasis,
    QSymM,
    QSymF,
    QSymK,
    QSymEta,
};

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// Which index type a basis tag carries: set compositions for the NCQSym/NCPi
// families, set partitions for the NCSym families, subsets for QSym.
bool basis_uses_setcomp(Basis b);
bool basis_uses_setpartition(Basis b);
bool basis_uses_subset(Basis b);

using KeyIndex = std::variant<SetComposition, SetPartition, Subset>;

struct BKey {
    Basis basis;
    int n;  // degree
    KeyIndex index;

    const SetComposition& setcomp() const { return std::get<SetComposition>(index); }
    const SetPartition& setpartition() const { return std::get<SetPartition>(index); }
    const Subset& subset() const { return std::get<Subset>(index); }
};

bool operator==(const BKey& a, const BKey& b);
bool operator<(const BKey& a, const BKey& b);

BKey key_setcomp(Basis b, SetComposition phi);
BKey key_setpartition(Basis b, SetPartition pi);
BKey key_subset(Basis b, Subset A);

// Sparse linear combination over one basis tag, homogeneous of one degree.
// Zero coefficients are never stored.
class Elem {
public:
    Elem() = default;
    Elem(Basis basis, int n) : basis_(basis), n_(n) {}

    Basis basis() const { return basis_; }
    int degree() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<BKey, Rational>& terms() const { return terms_; }

    void add(const BKey& key, const Rational& c);
    Rational coeff(const BKey& key) const;

    Elem& operator+=(const Elem& o);
    Elem& operator-=(const Elem& o);
    Elem& operator*=(const Rational& c);
    friend Elem operator+(Elem a, const Elem& b) { return a += b; }
    friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
    friend Elem operator*(const Rational& c, Elem a) { return a *= c; }

    friend bool operator==(const Elem& a, const Elem& b);

    static Elem single(BKey key, Rational c = Rational(1));

private:
    Basis basis_ = Basis::M;
    int n_ = 0;
    std::map<BKey, Rational> terms_;
};

// Sparse tensor combination; the two legs may have different degrees (the
// graded coproduct splits the degree) but each side has a uniform basis tag.
class TensorElem {
public:
    TensorElem() = default;
    TensorElem(Basis lb, Basis rb) : lbasis_(lb), rbasis_(rb) {}

    Basis lbasis() const { return lbasis_; }
    Basis rbasis() const { return rbasis_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<BKey, BKey>, Rational>& terms() const { return terms_; }

    void add(const BKey& l, const BKey& r, const Rational& c);
    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
    friend bool operator==(const TensorElem& a, const TensorElem& b);

    // Group by left key: the right-leg element attached to each left key.
    std::map<BKey, Elem> right_legs() const;
    std::map<BKey, Elem> left_legs() const;  // grouped by right key

private:
    Basis lbasis_ = Basis::M;
    Basis rbasis_ = Basis::M;
    std::map<std::pair<BKey, BKey>, Rational> terms_;
};

TensorElem tensor(const Elem& a, const Elem& b);

}  // namespace ncq
