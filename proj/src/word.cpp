#include "ncq/word.hpp"

#include <algorithm>
#include <functional>

#include "ncq/ncqsym.hpp"
#include "ncq/theta.hpp"

namespace ncq {

void WordPoly::add(const std::vector<int>& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = words.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) words.erase(it);
    }
}

namespace {

void check_cap(int n, int m, long long cap) {
    long long size = 1;
    for (int i = 0; i < n; ++i) {
        size *= m;
        if (size > cap) throw domain_error("word oracle: m^n exceeds the configured cap");
    }
}

}  // namespace

WordPoly realize_M(const SetComposition& phi, int m, long long cap) {
    if (m < 1) throw domain_error("realize_M: alphabet must be nonempty");
    int n = phi.degree();
    check_cap(n, m, cap);
    WordPoly out;
    out.n = n;
    out.m = m;
    int l = phi.length();
    if (l > m) return out;
    // Choose the l strictly increasing letter values and write them into the
    // block positions.
    std::vector<int> letters(l);
    std::function<void(int, int)> rec = [&](int idx, int low) {
        if (idx == l) {
            std::vector<int> w(n);
            for (int b = 0; b < l; ++b)
                for (int pos : phi.blocks[b]) w[pos - 1] = letters[b];
            out.add(w, Rational(1));
            return;
        }
        for (int v = low; v <= m - (l - idx - 1); ++v) {
            letters[idx] = v;
            rec(idx + 1, v + 1);
        }
    };
    rec(0, 1);
    return out;
}

WordPoly realize(const Elem& elem, int m, long long cap) {
    if (basis_uses_subset(elem.basis()))
        throw domain_error("realize: QSym elements use commutative_realize");
    Elem me = to_M(elem);
    WordPoly out;
    out.n = me.degree();
    out.m = m;
    for (const auto& [k, c] : me.terms()) {
        WordPoly part = realize_M(k.setcomp(), m, cap);
        for (const auto& [w, cc] : part.words) out.add(w, c * cc);
    }
    return out;
}

WordPoly word_product(const WordPoly& p, const WordPoly& q) {
    if (p.m != q.m) throw domain_error("word_product: alphabet mismatch");
    WordPoly out;
    out.n = p.n + q.n;
    out.m = p.m;
    for (const auto& [wp, cp] : p.words)
        for (const auto& [wq, cq] : q.words) {
            std::vector<int> w = wp;
            w.insert(w.end(), wq.begin(), wq.end());
            out.add(w, cp * cq);
        }
    return out;
}

SetComposition word_pattern(const std::vector<int>& w) {
    std::vector<int> letters = w;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    std::vector<Block> blocks(letters.size());
    for (size_t pos = 0; pos < w.size(); ++pos) {
        size_t b = std::lower_bound(letters.begin(), letters.end(), w[pos]) - letters.begin();
        blocks[b].push_back(static_cast<int>(pos) + 1);
    }
    return SetComposition{std::move(blocks)};
}

void CommPoly::add(const std::vector<int>& expo, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = monomials.emplace(expo, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) monomials.erase(it);
    }
}

CommPoly commutative_realize(const Elem& qsym_elem, int m) {
    Elem me = qsym_to_M(qsym_elem);
    CommPoly out;
    out.m = m;
    for (const auto& [k, c] : me.terms()) {
        Composition alpha = comp_of_subset(k.subset());
        int l = alpha.length();
        if (l > m) continue;
        std::vector<int> support(l);
        std::function<void(int, int)> rec = [&](int idx, int low) {
            if (idx == l) {
                std::vector<int> expo(m, 0);
                for (int i = 0; i < l; ++i) expo[support[i] - 1] = alpha.parts[i];
                out.add(expo, c);
                return;
            }
            for (int v = low; v <= m - (l - idx - 1); ++v) {
                support[idx] = v;
                rec(idx + 1, v + 1);
            }
        };
        rec(0, 1);
    }
    return out;
}

CommPoly commute_words(const WordPoly& p) {
    CommPoly out;
    out.m = p.m;
    for (const auto& [w, c] : p.words) {
        std::vector<int> expo(p.m, 0);
        for (int letter : w) ++expo[letter - 1];
        out.add(expo, c);
    }
    return out;
}

}  // namespace ncq
