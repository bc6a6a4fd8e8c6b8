#include "ncq/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ncq/ncpeak.hpp"
#include "ncq/ncqsym.hpp"

namespace ncq {

int LabelledPoset::index_of(int v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw domain_error("poset: unknown vertex");
    return static_cast<int>(it - vertices.begin());
}

namespace {

std::vector<std::vector<bool>> reachability(int n, const std::vector<std::pair<int, int>>& edges,
                                            const std::function<int(int)>& idx) {
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto [a, b] : edges) reach[idx(a)][idx(b)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    return reach;
}

void check_bijection(const std::vector<int>& lab, int n, const char* what) {
    std::vector<bool> seen(n, false);
    if (static_cast<int>(lab.size()) != n) throw domain_error(std::string(what) + ": wrong size");
    for (int v : lab) {
        if (v < 1 || v > n || seen[v - 1]) throw domain_error(std::string(what) + ": not a bijection");
        seen[v - 1] = true;
    }
}

}  // namespace

LabelledPoset make_triple(std::vector<int> vertices, std::vector<std::pair<int, int>> covers,
                          std::vector<int> gamma, std::vector<int> sigma) {
    std::sort(vertices.begin(), vertices.end());
    int n = static_cast<int>(vertices.size());
    auto idx = [&](int v) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) throw domain_error("poset: cover uses unknown vertex");
        return static_cast<int>(it - vertices.begin());
    };
    auto reach = reachability(n, covers, idx);
    for (int i = 0; i < n; ++i)
        if (reach[i][i]) throw domain_error("poset: covers contain a cycle");
    // Transitive reduction: a cover must not be implied by a 2-step path.
    for (auto [a, b] : covers)
        for (int k = 0; k < n; ++k)
            if (k != idx(a) && k != idx(b) && reach[idx(a)][k] && reach[k][idx(b)])
                throw domain_error("poset: covers are not transitively reduced");
    check_bijection(gamma, n, "gamma");
    check_bijection(sigma, n, "sigma");
    return LabelledPoset{std::move(vertices), std::move(covers), std::move(gamma), std::move(sigma)};
}

EdgeColouredDigraph digraph_of_triple(const LabelledPoset& t) {
    EdgeColouredDigraph g;
    for (int v : t.vertices) g.vertices.push_back(t.sigma_of(v));
    std::sort(g.vertices.begin(), g.vertices.end());
    for (auto [a, b] : t.covers) {
        std::pair<int, int> e{t.sigma_of(a), t.sigma_of(b)};
        (t.gamma_of(a) > t.gamma_of(b) ? g.solid : g.twin).push_back(e);
    }
    std::sort(g.solid.begin(), g.solid.end());
    std::sort(g.twin.begin(), g.twin.end());
    return g;
}

LabelledPoset triple_of_digraph(const EdgeColouredDigraph& g) {
    std::vector<int> vertices = g.vertices;
    std::sort(vertices.begin(), vertices.end());
    int n = static_cast<int>(vertices.size());
    auto idx = [&](int v) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) throw domain_error("digraph: unknown vertex in edge");
        return static_cast<int>(it - vertices.begin());
    };
    std::vector<std::pair<int, int>> covers = g.solid;
    covers.insert(covers.end(), g.twin.begin(), g.twin.end());

    // gamma must decrease along solid edges and increase along double ones;
    // topologically sort that constraint graph.
    std::vector<std::vector<int>> smaller(n);  // gamma(u) < gamma(v): u -> v
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : g.twin) {
        smaller[idx(a)].push_back(idx(b));
        ++indeg[idx(b)];
    }
    for (auto [a, b] : g.solid) {
        smaller[idx(b)].push_back(idx(a));
        ++indeg[idx(a)];
    }
    std::vector<int> order;
    std::vector<int> queue;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    while (!queue.empty()) {
        // smallest available index first, for a deterministic gamma
        std::sort(queue.begin(), queue.end());
        int v = queue.front();
        queue.erase(queue.begin());
        order.push_back(v);
        for (int w : smaller[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    if (static_cast<int>(order.size()) != n)
        throw domain_error("digraph: edge-type constraints admit no labelling gamma");
    std::vector<int> gamma(n);
    for (int r = 0; r < n; ++r) gamma[order[r]] = r + 1;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);  // vertex names, ranked
    return make_triple(vertices, covers, gamma, sigma);
}

void for_each_linear_extension(const LabelledPoset& t,
                               const std::function<void(const std::vector<int>&)>& fn) {
    int n = t.size();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> up(n);
    for (auto [a, b] : t.covers) {
        up[t.index_of(a)].push_back(t.index_of(b));
        ++indeg[t.index_of(b)];
    }
    std::vector<int> word;
    std::vector<bool> used(n, false);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(word.size()) == n) {
            fn(word);
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (used[i] || indeg[i] != 0) continue;
            used[i] = true;
            for (int j : up[i]) --indeg[j];
            word.push_back(t.vertices[i]);
            rec();
            word.pop_back();
            for (int j : up[i]) ++indeg[j];
            used[i] = false;
        }
    };
    rec();
}

std::vector<std::vector<int>> linear_extensions(const LabelledPoset& t) {
    std::vector<std::vector<int>> out;
    for_each_linear_extension(t, [&](const std::vector<int>& w) { out.push_back(w); });
    return out;
}

namespace {

Subset descents_along(const LabelledPoset& t, const std::vector<int>& w) {
    Subset d;
    d.n = t.size();
    for (int i = 1; i < t.size(); ++i)
        if (t.gamma_of(w[i - 1]) > t.gamma_of(w[i])) d.elems.push_back(i);
    return d;
}

Subset peaks_along(const LabelledPoset& t, const std::vector<int>& w) {
    Subset p;
    p.n = t.size();
    for (int i = 1; i + 1 < t.size(); ++i)
        if (t.gamma_of(w[i - 1]) < t.gamma_of(w[i]) && t.gamma_of(w[i]) > t.gamma_of(w[i + 1]))
            p.elems.push_back(i + 1);
    return p;
}

Permutation tau_of(const LabelledPoset& t, const std::vector<int>& w) {
    Permutation tau;
    for (int v : w) tau.img.push_back(t.sigma_of(v));
    return tau;
}

}  // namespace

Elem Y_expansion_M(const LabelledPoset& t) {
    Elem out(Basis::M, t.size());
    for_each_linear_extension(t, [&](const std::vector<int>& w) {
        out += F_function_M(descents_along(t, w), tau_of(t, w));
    });
    return out;
}

Elem Y_expansion(const LabelledPoset& t) { return M_to_F(Y_expansion_M(t)); }

Elem Fcal_expansion_M(const LabelledPoset& t) {
    Elem out(Basis::M, t.size());
    for_each_linear_extension(t, [&](const std::vector<int>& w) {
        out += K_function_M(peaks_along(t, w), tau_of(t, w));
    });
    return out;
}

Elem Fcal_expansion(const LabelledPoset& t) { return to_eta_basis(Fcal_expansion_M(t)); }

WordPoly enumerate_colourings(const LabelledPoset& t, int m, bool enriched) {
    int n = t.size();
    WordPoly out;
    out.n = n;
    out.m = m;
    // Constraints only need checking on covers; chains propagate them. Covers
    // may point either way relative to the assignment order, so each edge is
    // checked as soon as both endpoints have colours.
    std::vector<std::vector<std::pair<int, bool>>> pending(n);  // at max(i,j): (other, gamma up)
    for (auto [a, b] : t.covers) {
        int ia = t.index_of(a), ib = t.index_of(b);
        bool up = t.gamma_of(a) < t.gamma_of(b);
        // store at the later index; positive partner index means it is the source
        if (ia < ib)
            pending[ib].push_back({ia + 1, up});
        else
            pending[ia].push_back({-(ib + 1), up});
    }

    // Enriched values are encoded 0,1,...,2m-1 for -1,1,-2,2,...; proper
    // colourings use 1..m directly.
    int vals = enriched ? 2 * m : m;
    std::vector<int> colour(n, -1);
    std::vector<int> sigma_inv(n);
    for (int v : t.vertices) sigma_inv[t.sigma_of(v) - 1] = t.index_of(v);

    auto edge_ok = [&](int csrc, int ctgt, bool up) {
        if (!enriched) return up ? csrc <= ctgt : csrc < ctgt;
        if (csrc > ctgt) return false;
        if (csrc < ctgt) return true;
        // order -1 < 1 < -2 < 2 < ...; equal positives need gamma increasing,
        // equal negatives need gamma decreasing
        bool positive = ctgt % 2 == 1;
        return positive == up;
    };

    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<int> word(n);
            for (int pos = 0; pos < n; ++pos) {
                int c = colour[sigma_inv[pos]];
                word[pos] = enriched ? c / 2 + 1 : c + 1;
            }
            out.add(word, Rational(1));
            return;
        }
        for (int c = 0; c < vals; ++c) {
            bool ok = true;
            for (auto [other, up] : pending[i]) {
                int j = other > 0 ? other - 1 : -other - 1;
                bool i_is_target = other > 0;
                int csrc = i_is_target ? colour[j] : c;
                int ctgt = i_is_target ? c : colour[j];
                if (!edge_ok(csrc, ctgt, up)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colour[i] = c;
            rec(i + 1);
            colour[i] = -1;
        }
    };
    rec(0);
    return out;
}

LabelledPoset disjoint_union_shifted(const LabelledPoset& a, const LabelledPoset& b) {
    int na = a.size();
    int shift_v = a.vertices.empty() ? 0 : *std::max_element(a.vertices.begin(), a.vertices.end());
    std::vector<int> vertices = a.vertices;
    std::vector<std::pair<int, int>> covers = a.covers;
    std::vector<int> gamma, sigma;
    for (int v : a.vertices) {
        gamma.push_back(a.gamma_of(v));
        sigma.push_back(a.sigma_of(v));
    }
    std::vector<int> bverts;
    for (int v : b.vertices) {
        vertices.push_back(v + shift_v);
        gamma.push_back(b.gamma_of(v) + na);
        sigma.push_back(b.sigma_of(v) + na);
    }
    for (auto [x, y] : b.covers) covers.push_back({x + shift_v, y + shift_v});
    return make_triple(std::move(vertices), std::move(covers), std::move(gamma), std::move(sigma));
}

LabelledPoset chain_of_standard_pair(const Subset& A, const Permutation& sigma) {
    int n = sigma.n();
    // Chain 1 < 2 < ... < n of positions; gamma realizes descent set A.
    std::vector<int> vertices(n);
    std::iota(vertices.begin(), vertices.end(), 1);
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < n; ++i) covers.push_back({i, i + 1});
    // gamma with Des(gamma) = A: fill runs between descents with increasing
    // values from the top down.
    std::vector<int> gamma(n);
    std::vector<int> cuts = A.elems;
    cuts.push_back(n);
    int prev = 0;
    int next_val = n;
    std::vector<std::pair<int, int>> runs;
    for (int c : cuts) {
        runs.push_back({prev + 1, c});
        prev = c;
    }
    for (auto [lo, hi] : runs) {
        int start = next_val - (hi - lo);
        for (int pos = lo; pos <= hi; ++pos) gamma[pos - 1] = start + (pos - lo);
        next_val -= hi - lo + 1;
    }
    return make_triple(std::move(vertices), std::move(covers), std::move(gamma),
                       std::vector<int>(sigma.img));
}

std::vector<std::vector<int>> upward_closed_sets(const LabelledPoset& t) {
    int n = t.size();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool closed = true;
        for (auto [a, b] : t.covers) {
            if ((mask & (1u << t.index_of(a))) && !(mask & (1u << t.index_of(b)))) {
                closed = false;
                break;
            }
        }
        if (!closed) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(t.vertices[i]);
        out.push_back(std::move(s));
    }
    return out;
}

LabelledPoset induced_subtriple(const LabelledPoset& t, const std::vector<int>& vertex_subset) {
    std::vector<int> vs = vertex_subset;
    std::sort(vs.begin(), vs.end());
    auto in = [&](int v) { return std::binary_search(vs.begin(), vs.end(), v); };
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : t.covers)
        if (in(a) && in(b)) covers.push_back({a, b});
    // Collapse gamma and sigma order-preservingly onto [k].
    std::vector<std::pair<int, int>> gs, ss;
    for (int v : vs) {
        gs.push_back({t.gamma_of(v), v});
        ss.push_back({t.sigma_of(v), v});
    }
    std::sort(gs.begin(), gs.end());
    std::sort(ss.begin(), ss.end());
    std::map<int, int> grank, srank;
    for (size_t i = 0; i < gs.size(); ++i) grank[gs[i].second] = static_cast<int>(i) + 1;
    for (size_t i = 0; i < ss.size(); ++i) srank[ss[i].second] = static_cast<int>(i) + 1;
    std::vector<int> gamma, sigma;
    for (int v : vs) {
        gamma.push_back(grank[v]);
        sigma.push_back(srank[v]);
    }
    return make_triple(vs, std::move(covers), std::move(gamma), std::move(sigma));
}

}  // namespace ncq
