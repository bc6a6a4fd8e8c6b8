#include "ncq/ncsym.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ncq/ncpeak.hpp"
#include "ncq/ncqsym.hpp"
#include "ncq/theta.hpp"

namespace ncq {

Elem m_of(const SetPartition& pi) { return Elem::single(key_setpartition(Basis::m, pi)); }
Elem p_of_partition(const SetPartition& pi) { return Elem::single(key_setpartition(Basis::p, pi)); }
Elem e_of(const SetPartition& pi) { return Elem::single(key_setpartition(Basis::e, pi)); }
Elem h_of(const SetPartition& pi) { return Elem::single(key_setpartition(Basis::h, pi)); }

Elem m_to_M(const SetPartition& pi) {
    Elem out(Basis::M, pi.degree());
    std::vector<int> order(pi.length());
    std::iota(order.begin(), order.end(), 0);
    do {
        std::vector<Block> blocks;
        for (int i : order) blocks.push_back(pi.blocks[i]);
        out.add(key_setcomp(Basis::M, SetComposition{std::move(blocks)}), Rational(1));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

std::vector<SetPartition> partition_coarsenings(const SetPartition& pi) {
    // Merge pi's blocks along any set partition of the block index set.
    std::vector<SetPartition> out;
    int k = pi.length();
    std::vector<std::vector<int>> groups;
    std::function<void(int)> rec = [&](int next) {
        if (next == k) {
            std::vector<Block> blocks;
            for (const auto& g : groups) {
                Block b;
                for (int i : g) b.insert(b.end(), pi.blocks[i].begin(), pi.blocks[i].end());
                std::sort(b.begin(), b.end());
                blocks.push_back(std::move(b));
            }
            std::sort(blocks.begin(), blocks.end(),
                      [](const Block& a, const Block& b) { return a.front() < b.front(); });
            out.push_back(SetPartition{std::move(blocks)});
            return;
        }
        size_t existing = groups.size();
        for (size_t i = 0; i < existing; ++i) {
            groups[i].push_back(next);
            rec(next + 1);
            groups[i].pop_back();
        }
        groups.push_back({next});
        rec(next + 1);
        groups.pop_back();
    };
    rec(0);
    if (k == 0) out.push_back(pi);
    std::sort(out.begin(), out.end(), setpartition_less);
    return out;
}

std::vector<SetPartition> partition_refinements(const SetPartition& pi) {
    // Partition each block independently and combine.
    std::vector<std::vector<std::vector<Block>>> per_block;
    for (const auto& b : pi.blocks) {
        std::vector<std::vector<Block>> ways;
        std::vector<Block> cur;
        std::function<void(size_t)> rec = [&](size_t idx) {
            if (idx == b.size()) {
                ways.push_back(cur);
                return;
            }
            size_t existing = cur.size();
            for (size_t i = 0; i < existing; ++i) {
                cur[i].push_back(b[idx]);
                rec(idx + 1);
                cur[i].pop_back();
            }
            cur.push_back({b[idx]});
            rec(idx + 1);
            cur.pop_back();
        };
        rec(0);
        per_block.push_back(std::move(ways));
    }
    std::vector<SetPartition> out;
    std::vector<size_t> idx(per_block.size(), 0);
    while (true) {
        std::vector<Block> blocks;
        for (size_t i = 0; i < per_block.size(); ++i)
            for (const auto& b : per_block[i][idx[i]]) blocks.push_back(b);
        std::sort(blocks.begin(), blocks.end(),
                  [](const Block& a, const Block& b) { return a.front() < b.front(); });
        out.push_back(SetPartition{std::move(blocks)});
        size_t g = 0;
        while (g < idx.size() && ++idx[g] == per_block[g].size()) idx[g++] = 0;
        if (g == idx.size()) break;
    }
    std::sort(out.begin(), out.end(), setpartition_less);
    return out;
}

Elem p_to_m(const SetPartition& pi) {
    Elem out(Basis::m, pi.degree());
    for (const auto& tau : partition_coarsenings(pi))
        out.add(key_setpartition(Basis::m, tau), Rational(1));
    return out;
}

Elem e_to_p(const SetPartition& pi) {
    Elem out(Basis::p, pi.degree());
    for (const auto& tau : partition_refinements(pi))
        out.add(key_setpartition(Basis::p, tau), Rational(mobius_zerohat(tau)));
    return out;
}

Elem h_to_p(const SetPartition& pi) {
    Elem out(Basis::p, pi.degree());
    for (const auto& tau : partition_refinements(pi))
        out.add(key_setpartition(Basis::p, tau), Rational(mobius_zerohat(tau).abs()));
    return out;
}

Elem omega(const Elem& elem) {
    Basis b = elem.basis();
    if (b == Basis::h || b == Basis::e) {
        Elem out(b == Basis::h ? Basis::e : Basis::h, elem.degree());
        for (const auto& [k, c] : elem.terms())
            out.add(key_setpartition(b == Basis::h ? Basis::e : Basis::h, k.setpartition()), c);
        return out;
    }
    if (b == Basis::p) {
        Elem out(Basis::p, elem.degree());
        for (const auto& [k, c] : elem.terms()) {
            Rational t = c;
            if ((k.n - k.setpartition().length()) % 2) t = -t;
            out.add(k, t);
        }
        return out;
    }
    throw domain_error("omega: element must be tagged p, h or e");
}

namespace {

Elem p_to_M(const SetPartition& pi) {
    Elem out(Basis::M, pi.degree());
    for (const auto& tau : partition_coarsenings(pi)) out += m_to_M(tau);
    return out;
}

}  // namespace

Elem ncsym_to_M(const Elem& elem) {
    Elem out(Basis::M, elem.degree());
    for (const auto& [k, c] : elem.terms()) {
        Elem part;
        switch (elem.basis()) {
            case Basis::m: part = m_to_M(k.setpartition()); break;
            case Basis::p: part = p_to_M(k.setpartition()); break;
            case Basis::e: {
                part = Elem(Basis::M, elem.degree());
                Elem pexp = e_to_p(k.setpartition());
                for (const auto& [pk, pc] : pexp.terms()) {
                    Elem t = p_to_M(pk.setpartition());
                    t *= pc;
                    part += t;
                }
                break;
            }
            case Basis::h: {
                part = Elem(Basis::M, elem.degree());
                Elem pexp = h_to_p(k.setpartition());
                for (const auto& [pk, pc] : pexp.terms()) {
                    Elem t = p_to_M(pk.setpartition());
                    t *= pc;
                    part += t;
                }
                break;
            }
            case Basis::q: part = q_to_M(k.setpartition()); break;
            case Basis::nbasis: part = eta_to_M(n_elem(k.setpartition())); break;
            default: throw domain_error("ncsym_to_M: not an NCSym basis tag");
        }
        part *= c;
        out += part;
    }
    return out;
}

std::optional<Elem> try_to_m_basis(const Elem& m_elem) {
    if (m_elem.basis() != Basis::M && !m_elem.is_zero())
        throw domain_error("to_m_basis: element must be in the M basis");
    int n = m_elem.degree();
    Elem rest = m_elem;
    Elem out(Basis::m, n);
    while (!rest.is_zero()) {
        const auto& [key, c] = *rest.terms().begin();
        SetPartition pi = underlying_partition(key.setcomp());
        Elem fiber = m_to_M(pi);
        fiber *= c;
        Elem next = rest - fiber;
        // The subtraction must clear the whole fiber, otherwise the
        // coefficient was not constant on it.
        for (const auto& [k2, c2] : next.terms())
            if (underlying_partition(k2.setcomp()) == pi) return std::nullopt;
        out.add(key_setpartition(Basis::m, pi), c);
        rest = std::move(next);
    }
    return out;
}

Elem membership_ncsym(const Elem& m_elem) {
    auto r = try_to_m_basis(m_elem);
    if (!r) throw NotSymmetric("element is not symmetric");
    return *r;
}

Elem m_basis_to_p(const Elem& m_tagged) {
    if (m_tagged.basis() != Basis::m && !m_tagged.is_zero())
        throw domain_error("m_basis_to_p: element must be in the m basis");
    int n = m_tagged.degree();
    Elem rest = m_tagged;
    Elem out(Basis::p, n);
    // p_pi = m_pi + coarser terms, so eliminate from the finest keys down.
    std::vector<SetPartition> parts = set_partitions(n);
    std::stable_sort(parts.begin(), parts.end(),
                     [](const SetPartition& a, const SetPartition& b) { return a.length() > b.length(); });
    for (const auto& pi : parts) {
        Rational c = rest.coeff(key_setpartition(Basis::m, pi));
        if (c.is_zero()) continue;
        Elem part = p_to_m(pi);
        part *= c;
        rest -= part;
        out.add(key_setpartition(Basis::p, pi), c);
    }
    if (!rest.is_zero()) throw domain_error("m_basis_to_p: elimination failed");
    return out;
}

Elem q_to_M(const SetPartition& pi) {
    Elem h_M = ncsym_to_M(h_of(pi));
    return theta(h_M);
}

Elem q_elem(const SetPartition& pi) { return q_to_M(pi); }

Elem n_elem(const SetPartition& pi) {
    if (!pi.is_odd()) throw domain_error("n_elem: partition must be odd");
    Elem out(Basis::Eta, pi.degree());
    std::vector<int> order(pi.length());
    std::iota(order.begin(), order.end(), 0);
    Rational sign(1);
    if (((pi.degree() - pi.length()) / 2) % 2) sign = Rational(-1);
    do {
        std::vector<Block> blocks;
        for (int i : order) blocks.push_back(pi.blocks[i]);
        out.add(key_setcomp(Basis::Eta, SetComposition{std::move(blocks)}), sign);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

Elem theta_p(const SetPartition& pi) {
    Elem image = theta(p_to_M(pi));
    if (image.is_zero()) return Elem(Basis::p, pi.degree());
    return m_basis_to_p(membership_ncsym(image));
}

bool is_connected_partition(const SetPartition& pi) {
    int n = pi.degree();
    if (n == 0) return false;
    for (int k = 1; k < n; ++k) {
        bool splits = true;
        for (const auto& b : pi.blocks) {
            bool low = b.back() <= k, high = b.front() > k;
            if (!low && !high) {
                splits = false;
                break;
            }
        }
        if (splits) return false;
    }
    return true;
}

BigInt dim_ncsym(int n) { return bell(n); }

BigInt dim_ncomega(int n) {
    if (n < 0) throw domain_error("dim_ncomega: negative degree");
    // set partitions into odd blocks: condition on the block containing n
    std::vector<BigInt> a(n + 1);
    a[0] = BigInt(1);
    for (int m = 1; m <= n; ++m) {
        BigInt s(0);
        for (int k = 1; k <= m; k += 2) s += BigInt::binomial(m - 1, k - 1) * a[m - k];
        a[m] = s;
    }
    return a[n];
}

}  // namespace ncq
