#pragma once

#include <map>
#include <vector>

#include "ncq/element.hpp"

namespace ncq {

// Exact multiset of length-n words over the alphabet [m]: the truncation of a
// degree-n power series in noncommuting variables to m of them. Injective on
// degree-n elements once m >= n, which makes it the brute-force oracle for
// every algebraic operation in the project.
struct WordPoly {
    int n = 0;  // word length
    int m = 0;  // alphabet size
    std::map<std::vector<int>, Rational> words;

    bool is_zero() const { return words.empty(); }
    void add(const std::vector<int>& w, const Rational& c);
    friend bool operator==(const WordPoly&, const WordPoly&) = default;
};

// Guard for the m^n blowup; callers may widen it explicitly.
inline constexpr long long kDefaultOracleCap = 10'000'000;

// Words w with w_j = w_k iff j,k share a block of phi and w_j < w_k iff j's
// block comes first; all coefficients 1.
WordPoly realize_M(const SetComposition& phi, int m, long long cap = kDefaultOracleCap);

// Linear extension of realize_M to any element convertible to the M basis.
WordPoly realize(const Elem& elem, int m, long long cap = kDefaultOracleCap);

WordPoly word_product(const WordPoly& p, const WordPoly& q);

// The packing of a word: positions grouped by equal letters, groups ordered by
// letter value.
SetComposition word_pattern(const std::vector<int>& w);

// Commutative shadow: exponent vectors over [m]; oracle for the QSym layer.
struct CommPoly {
    int m = 0;
    std::map<std::vector<int>, Rational> monomials;  // exponent vectors, length m
    void add(const std::vector<int>& expo, const Rational& c);
    friend bool operator==(const CommPoly&, const CommPoly&) = default;
};

CommPoly commutative_realize(const Elem& qsym_elem, int m);
CommPoly commute_words(const WordPoly& p);

}  // namespace ncq
