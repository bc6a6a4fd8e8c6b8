#include "ncq/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace ncq {

// ---------------------------------------------------------------------------
// Basic object methods and validation

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Composition::is_odd() const {
    for (int p : parts)
        if (p % 2 == 0) return false;
    return true;
}

bool Subset::contains(int x) const { return std::binary_search(elems.begin(), elems.end(), x); }

Permutation Permutation::inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (int i = 1; i <= n(); ++i) r.img[img[i - 1] - 1] = i;
    return r;
}

Permutation Permutation::identity(int n) {
    Permutation r;
    r.img.resize(n);
    std::iota(r.img.begin(), r.img.end(), 1);
    return r;
}

int SetComposition::degree() const {
    int s = 0;
    for (const auto& b : blocks) s += static_cast<int>(b.size());
    return s;
}

bool SetComposition::is_odd() const {
    for (const auto& b : blocks)
        if (b.size() % 2 == 0) return false;
    return true;
}

int SetPartition::degree() const {
    int s = 0;
    for (const auto& b : blocks) s += static_cast<int>(b.size());
    return s;
}

bool SetPartition::is_odd() const {
    for (const auto& b : blocks)
        if (b.size() % 2 == 0) return false;
    return true;
}

Composition SetPartition::block_sizes() const {
    std::vector<int> sz;
    for (const auto& b : blocks) sz.push_back(static_cast<int>(b.size()));
    std::sort(sz.rbegin(), sz.rend());
    return Composition{sz};
}

bool setcomp_less(const SetComposition& a, const SetComposition& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.length() != b.length()) return a.length() < b.length();
    return a.blocks < b.blocks;
}

bool setpartition_less(const SetPartition& a, const SetPartition& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.length() != b.length()) return a.length() < b.length();
    return a.blocks < b.blocks;
}

namespace {

void check_blocks(const std::vector<Block>& blocks, const char* what) {
    std::vector<int> all;
    for (const auto& b : blocks) {
        if (b.empty()) throw domain_error(std::string(what) + ": empty block");
        for (size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i] >= b[i + 1]) throw domain_error(std::string(what) + ": block not strictly ascending");
        all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1)
            throw domain_error(std::string(what) + ": blocks must partition [n]");
}

}  // namespace

SetComposition make_set_composition(std::vector<Block> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    check_blocks(blocks, "set composition");
    return SetComposition{std::move(blocks)};
}

SetPartition make_set_partition(std::vector<Block> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    check_blocks(blocks, "set partition");
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return SetPartition{std::move(blocks)};
}

Subset make_subset(std::vector<int> elems, int n) {
    std::sort(elems.begin(), elems.end());
    for (size_t i = 0; i + 1 < elems.size(); ++i)
        if (elems[i] == elems[i + 1]) throw domain_error("subset: repeated element");
    if (!elems.empty() && (elems.front() < 1 || elems.back() > n - 1))
        throw domain_error("subset: element outside [n-1]");
    return Subset{std::move(elems), n};
}

Permutation make_permutation(std::vector<int> img) {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        if (v < 1 || v > static_cast<int>(img.size()) || seen[v - 1])
            throw domain_error("permutation: not a bijection on [n]");
        seen[v - 1] = true;
    }
    return Permutation{std::move(img)};
}

// ---------------------------------------------------------------------------
// Subsets, compositions, peak sets

Composition comp_of_subset(const Subset& A) {
    if (A.n < 1) throw domain_error("comp_of_subset: n must be positive");
    if (!A.elems.empty() && (A.elems.front() < 1 || A.elems.back() > A.n - 1))
        throw domain_error("comp_of_subset: element outside [n-1]");
    Composition alpha;
    int prev = 0;
    for (int a : A.elems) {
        alpha.parts.push_back(a - prev);
        prev = a;
    }
    alpha.parts.push_back(A.n - prev);
    return alpha;
}

Subset subset_of_comp(const Composition& alpha) {
    Subset A;
    A.n = alpha.size();
    int run = 0;
    for (size_t i = 0; i + 1 < alpha.parts.size(); ++i) {
        run += alpha.parts[i];
        A.elems.push_back(run);
    }
    return A;
}

bool is_peak_set(const Subset& B) {
    for (size_t i = 0; i < B.elems.size(); ++i) {
        if (B.elems[i] < 2 || B.elems[i] > B.n - 1) return false;
        if (i + 1 < B.elems.size() && B.elems[i + 1] == B.elems[i] + 1) return false;
    }
    return true;
}

bool is_odd_set(const Subset& A) {
    int prev = 0;
    for (int a : A.elems) {
        if ((a - prev) % 2 == 0) return false;
        prev = a;
    }
    return (A.n - prev) % 2 == 1;
}

Subset odd_of_peak(const Subset& B) {
    if (!is_peak_set(B)) throw domain_error("odd_of_peak: not a peak set");
    Subset A;
    A.n = B.n;
    for (int x = 1; x <= B.n - 1; ++x)
        if (!B.contains(x) && !B.contains(x + 1)) A.elems.push_back(x);
    return A;
}

Subset peak_of_odd(const Subset& A) {
    if (!is_odd_set(A)) throw domain_error("peak_of_odd: not an odd set");
    // Between consecutive elements of A u {0, n} the gap is even; it is filled
    // alternately by B-1 and B, so B picks every second value starting two
    // past the lower endpoint.
    Subset B;
    B.n = A.n;
    std::vector<int> fences = A.elems;
    fences.insert(fences.begin(), 0);
    fences.push_back(A.n);
    for (size_t i = 0; i + 1 < fences.size(); ++i)
        for (int b = fences[i] + 2; b <= fences[i + 1] - 1; b += 2) B.elems.push_back(b);
    return B;
}

Composition comp_odd(const Subset& B) { return comp_of_subset(odd_of_peak(B)); }

Subset descent_set(const Permutation& sigma) {
    Subset D;
    D.n = sigma.n();
    for (int i = 1; i <= sigma.n() - 1; ++i)
        if (sigma(i) > sigma(i + 1)) D.elems.push_back(i);
    return D;
}

Subset peak_set(const Permutation& sigma) {
    Subset P;
    P.n = sigma.n();
    for (int i = 2; i <= sigma.n() - 1; ++i)
        if (sigma(i - 1) < sigma(i) && sigma(i) > sigma(i + 1)) P.elems.push_back(i);
    return P;
}

Subset odiff(const Subset& A) {
    if ((A.n - max_or_zero(A)) % 2 == 0)
        throw domain_error("odiff: n - max(A) must be odd");
    Subset R;
    R.n = A.n;
    int prev = 0;
    for (int a : A.elems) {
        if ((a - prev) % 2 == 1) R.elems.push_back(a);
        prev = a;
    }
    return R;
}

int max_or_zero(const Subset& A) { return A.elems.empty() ? 0 : A.elems.back(); }

// ---------------------------------------------------------------------------
// Set compositions and standard pairs

SetComposition set_comp(const Subset& A, const Permutation& sigma) {
    if (!A.elems.empty() && (A.elems.front() < 1 || A.elems.back() > sigma.n() - 1))
        throw domain_error("set_comp: A not a subset of [n-1]");
    if (A.n != sigma.n()) throw domain_error("set_comp: size mismatch");
    std::vector<Block> blocks;
    std::vector<int> cuts = A.elems;
    cuts.push_back(sigma.n());
    int pos = 1;
    for (int c : cuts) {
        Block b;
        for (; pos <= c; ++pos) b.push_back(sigma(pos));
        std::sort(b.begin(), b.end());
        if (!b.empty()) blocks.push_back(std::move(b));
    }
    return SetComposition{std::move(blocks)};
}

bool is_standard(const Subset& A, const Permutation& sigma) {
    Subset d = descent_set(sigma);
    return std::includes(A.elems.begin(), A.elems.end(), d.elems.begin(), d.elems.end());
}

StandardPair std_pair(const Subset& A, const Permutation& sigma) {
    SetComposition phi = set_comp(A, sigma);
    Permutation out;
    for (const auto& b : phi.blocks) out.img.insert(out.img.end(), b.begin(), b.end());
    return StandardPair{A, std::move(out)};
}

bool is_enriched_standard(const Subset& B, const Permutation& sigma) {
    if (!is_peak_set(B)) return false;
    return is_standard(odd_of_peak(B), sigma);
}

EnrichedStandardPair estd_pair(const Subset& B, const Permutation& sigma) {
    if (!is_peak_set(B)) throw domain_error("estd_pair: not a peak set");
    StandardPair s = std_pair(odd_of_peak(B), sigma);
    return EnrichedStandardPair{B, std::move(s.sigma)};
}

StandardPair pair_of_setcomp(const SetComposition& phi) {
    StandardPair p;
    p.A.n = phi.degree();
    int run = 0;
    for (int i = 0; i + 1 < phi.length(); ++i) {
        run += static_cast<int>(phi.blocks[i].size());
        p.A.elems.push_back(run);
    }
    for (const auto& b : phi.blocks) p.sigma.img.insert(p.sigma.img.end(), b.begin(), b.end());
    return p;
}

SetComposition setcomp_odd(const Subset& B, const Permutation& sigma) {
    if (!is_enriched_standard(B, sigma)) throw domain_error("setcomp_odd: pair not enriched standard");
    return set_comp(odd_of_peak(B), sigma);
}

EnrichedStandardPair pair_of_odd_setcomp(const SetComposition& phi) {
    if (!phi.is_odd()) throw domain_error("pair_of_odd_setcomp: not an odd set composition");
    StandardPair s = pair_of_setcomp(phi);
    return EnrichedStandardPair{peak_of_odd(s.A), std::move(s.sigma)};
}

// ---------------------------------------------------------------------------
// Refinement order, meet, Odd(phi)

bool refines(const SetComposition& psi, const SetComposition& phi) {
    if (psi.degree() != phi.degree()) throw domain_error("refines: ground-set mismatch");
    size_t j = 0;
    for (const auto& pb : psi.blocks) {
        Block acc;
        while (acc.size() < pb.size()) {
            if (j >= phi.blocks.size()) return false;
            acc.insert(acc.end(), phi.blocks[j].begin(), phi.blocks[j].end());
            ++j;
        }
        std::sort(acc.begin(), acc.end());
        if (acc != pb) return false;
    }
    return j == phi.blocks.size();
}

SetComposition meet(const SetComposition& phi, const SetComposition& psi) {
    if (phi.degree() != psi.degree()) throw domain_error("meet: ground-set mismatch");
    std::vector<Block> blocks;
    for (const auto& a : phi.blocks) {
        for (const auto& b : psi.blocks) {
            Block inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
            if (!inter.empty()) blocks.push_back(std::move(inter));
        }
    }
    return SetComposition{std::move(blocks)};
}

SetComposition odd_merge(const SetComposition& phi) {
    if (phi.length() == 0) return phi;
    if (phi.blocks.back().size() % 2 == 0)
        throw domain_error("odd_merge: last block has even size");
    std::vector<Block> out;
    Block acc;
    for (const auto& b : phi.blocks) {
        acc.insert(acc.end(), b.begin(), b.end());
        if (b.size() % 2 == 1) {
            std::sort(acc.begin(), acc.end());
            out.push_back(std::move(acc));
            acc.clear();
        }
    }
    return SetComposition{std::move(out)};
}

SetPartition underlying_partition(const SetComposition& phi) {
    std::vector<Block> blocks = phi.blocks;
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return SetPartition{std::move(blocks)};
}

SetPartition shifted_concat(const SetPartition& pi, const SetPartition& tau) {
    int shift = pi.degree();
    std::vector<Block> blocks = pi.blocks;
    for (const auto& b : tau.blocks) {
        Block s = b;
        for (int& x : s) x += shift;
        blocks.push_back(std::move(s));
    }
    return SetPartition{std::move(blocks)};
}

std::vector<SetComposition> coarsenings(const SetComposition& phi) {
    std::vector<SetComposition> out;
    int l = phi.length();
    if (l == 0) return {phi};
    // A coarsening corresponds to a subset of the l-1 gluing positions.
    for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
        std::vector<Block> blocks;
        Block acc = phi.blocks[0];
        for (int i = 1; i < l; ++i) {
            if (mask & (1u << (i - 1))) {
                acc.insert(acc.end(), phi.blocks[i].begin(), phi.blocks[i].end());
            } else {
                std::sort(acc.begin(), acc.end());
                blocks.push_back(std::move(acc));
                acc = phi.blocks[i];
            }
        }
        std::sort(acc.begin(), acc.end());
        blocks.push_back(std::move(acc));
        out.push_back(SetComposition{std::move(blocks)});
    }
    std::sort(out.begin(), out.end(), setcomp_less);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::vector<SetComposition> build_set_compositions(int n) {
    std::vector<SetComposition> out;
    std::vector<Block> cur;
    std::vector<int> rest(n);
    std::iota(rest.begin(), rest.end(), 1);
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& remaining) {
        if (remaining.empty()) {
            out.push_back(SetComposition{cur});
            return;
        }
        int m = static_cast<int>(remaining.size());
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            Block b;
            std::vector<int> next;
            for (int i = 0; i < m; ++i)
                (mask & (1u << i)) ? b.push_back(remaining[i]) : next.push_back(remaining[i]);
            cur.push_back(std::move(b));
            rec(next);
            cur.pop_back();
        }
    };
    rec(rest);
    std::sort(out.begin(), out.end(), setcomp_less);
    return out;
}

std::vector<SetPartition> build_set_partitions(int n) {
    std::vector<SetPartition> out;
    std::vector<Block> cur;
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            out.push_back(SetPartition{cur});
            return;
        }
        size_t existing = cur.size();  // deeper calls grow cur; index, don't iterate
        for (size_t i = 0; i < existing; ++i) {
            cur[i].push_back(next);
            rec(next + 1);
            cur[i].pop_back();
        }
        cur.push_back({next});
        rec(next + 1);
        cur.pop_back();
    };
    rec(1);
    std::sort(out.begin(), out.end(), setpartition_less);
    return out;
}

std::mutex cache_mutex;

}  // namespace

namespace {

void check_enumeration_degree(int n) {
    if (n < 0) throw domain_error("enumeration: negative degree");
    if (n > 12) throw domain_error("enumeration: degree cap is 12 (exhaustive lists blow up)");
}

}  // namespace

const std::vector<SetComposition>& set_compositions(int n) {
    check_enumeration_degree(n);
    static std::map<int, std::vector<SetComposition>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_set_compositions(n)).first;
    return it->second;
}

const std::vector<SetComposition>& odd_set_compositions(int n) {
    check_enumeration_degree(n);
    static std::map<int, std::vector<SetComposition>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<SetComposition> odd;
        for (const auto& phi : build_set_compositions(n))
            if (phi.is_odd()) odd.push_back(phi);
        it = cache.emplace(n, std::move(odd)).first;
    }
    return it->second;
}

const std::vector<SetPartition>& set_partitions(int n) {
    check_enumeration_degree(n);
    static std::map<int, std::vector<SetPartition>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_set_partitions(n)).first;
    return it->second;
}

const std::vector<SetPartition>& odd_set_partitions(int n) {
    check_enumeration_degree(n);
    static std::map<int, std::vector<SetPartition>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<SetPartition> odd;
        for (const auto& pi : build_set_partitions(n))
            if (pi.is_odd()) odd.push_back(pi);
        it = cache.emplace(n, std::move(odd)).first;
    }
    return it->second;
}

std::vector<Composition> compositions(int n) {
    if (n < 0) throw domain_error("enumeration: negative degree");
    std::vector<Composition> out;
    std::function<void(int, Composition&)> rec = [&](int rest, Composition& cur) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.parts.push_back(p);
            rec(rest - p, cur);
            cur.parts.pop_back();
        }
    };
    Composition cur;
    rec(n, cur);
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.parts < b.parts;
    });
    return out;
}

std::vector<Composition> odd_compositions(int n) {
    std::vector<Composition> out;
    for (auto& a : compositions(n))
        if (a.is_odd()) out.push_back(std::move(a));
    return out;
}

std::vector<Subset> subsets(int n) {
    if (n < 0 || n > 25) throw domain_error("enumeration: subset degree out of range");
    std::vector<Subset> out;
    int m = std::max(n - 1, 0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Subset s;
        s.n = n;
        for (int i = 1; i <= m; ++i)
            if (mask & (1u << (i - 1))) s.elems.push_back(i);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elems < b.elems;
    });
    return out;
}

std::vector<Subset> peak_sets(int n) {
    std::vector<Subset> out;
    for (auto& s : subsets(n))
        if (is_peak_set(s)) out.push_back(std::move(s));
    return out;
}

std::vector<Permutation> permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.img.begin(), p.img.end()));
    return out;
}

BigInt count_objects(const std::string& kind, int n) {
    if (kind == "set_compositions") return BigInt(static_cast<long long>(set_compositions(n).size()));
    if (kind == "odd_set_compositions") return BigInt(static_cast<long long>(odd_set_compositions(n).size()));
    if (kind == "set_partitions") return BigInt(static_cast<long long>(set_partitions(n).size()));
    if (kind == "odd_set_partitions") return BigInt(static_cast<long long>(odd_set_partitions(n).size()));
    if (kind == "compositions") return BigInt(static_cast<long long>(compositions(n).size()));
    if (kind == "odd_compositions") return BigInt(static_cast<long long>(odd_compositions(n).size()));
    if (kind == "peak_sets") return BigInt(static_cast<long long>(peak_sets(n).size()));
    if (kind == "subsets") return BigInt(static_cast<long long>(subsets(n).size()));
    throw domain_error("count_objects: unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Partition lattice

bool partition_leq(const SetPartition& pi, const SetPartition& tau) {
    if (pi.degree() != tau.degree()) throw domain_error("partition_leq: ground-set mismatch");
    // Every block of tau must sit inside a block of pi.
    std::vector<int> owner(pi.degree() + 1, -1);
    for (size_t i = 0; i < pi.blocks.size(); ++i)
        for (int x : pi.blocks[i]) owner[x] = static_cast<int>(i);
    for (const auto& b : tau.blocks)
        for (int x : b)
            if (owner[x] != owner[b.front()]) return false;
    return true;
}

SetPartition singletons_partition(int n) {
    std::vector<Block> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return SetPartition{std::move(blocks)};
}

SetPartition single_block_partition(int n) {
    Block b(n);
    std::iota(b.begin(), b.end(), 1);
    return SetPartition{{std::move(b)}};
}

namespace {

// Partitions rho with pi <= rho <= tau: rho coarsens tau while refining...
// concretely, rho's blocks are unions of tau-blocks staying inside pi-blocks.
std::vector<SetPartition> interval_partitions(const SetPartition& pi, const SetPartition& tau) {
    // Group tau's blocks by the pi-block containing them, partition each group
    // (as a set of tau-blocks), and take all combinations.
    std::vector<int> owner(pi.degree() + 1, -1);
    for (size_t i = 0; i < pi.blocks.size(); ++i)
        for (int x : pi.blocks[i]) owner[x] = static_cast<int>(i);
    std::vector<std::vector<Block>> groups(pi.blocks.size());
    for (const auto& b : tau.blocks) groups[owner[b.front()]].push_back(b);

    std::vector<std::vector<std::vector<Block>>> group_opts;  // per group: ways to merge
    for (auto& g : groups) {
        std::vector<std::vector<Block>> opts;
        int k = static_cast<int>(g.size());
        // Set partitions of the k tau-blocks in this group, via growth strings.
        std::vector<int> assign(k, 0);
        std::function<void(int, int)> rec = [&](int i, int maxc) {
            if (i == k) {
                std::vector<Block> merged(maxc);
                for (int j = 0; j < k; ++j)
                    merged[assign[j]].insert(merged[assign[j]].end(), g[j].begin(), g[j].end());
                for (auto& b : merged) std::sort(b.begin(), b.end());
                opts.push_back(std::move(merged));
                return;
            }
            for (int c = 0; c <= maxc; ++c) {
                assign[i] = c;
                rec(i + 1, std::max(maxc, c + 1));
            }
        };
        if (k == 0)
            opts.push_back({});
        else
            rec(0, 0);
        group_opts.push_back(std::move(opts));
    }

    std::vector<SetPartition> out;
    std::vector<size_t> idx(group_opts.size(), 0);
    while (true) {
        std::vector<Block> blocks;
        for (size_t gi = 0; gi < group_opts.size(); ++gi)
            for (const auto& b : group_opts[gi][idx[gi]]) blocks.push_back(b);
        std::sort(blocks.begin(), blocks.end(),
                  [](const Block& a, const Block& b) { return a.front() < b.front(); });
        out.push_back(SetPartition{std::move(blocks)});
        size_t g = 0;
        while (g < idx.size() && ++idx[g] == group_opts[g].size()) idx[g++] = 0;
        if (g == idx.size()) break;
    }
    return out;
}

}  // namespace

BigInt mobius_partition(const SetPartition& pi, const SetPartition& tau) {
    if (!partition_leq(pi, tau)) throw domain_error("mobius_partition: pair not comparable");
    // Per-invocation memo keyed inside the interval; pure and thread-safe.
    std::map<SetPartition, BigInt, SetPartLess> memo;
    std::function<BigInt(const SetPartition&)> mu = [&](const SetPartition& rho) -> BigInt {
        auto it = memo.find(rho);
        if (it != memo.end()) return it->second;
        BigInt v(1);
        if (!(rho == pi)) {
            v = BigInt(0);
            for (const auto& s : interval_partitions(pi, rho))
                if (!(s == rho)) v -= mu(s);
        }
        memo.emplace(rho, v);
        return v;
    };
    return mu(tau);
}

BigInt mobius_zerohat(const SetPartition& pi) {
    BigInt v(1);
    for (const auto& b : pi.blocks) {
        BigInt f = BigInt::factorial(static_cast<unsigned>(b.size()) - 1);
        if (b.size() % 2 == 0) f = -f;
        v *= f;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Odd sub-poset

namespace {

// Odd compositions beta <= gamma <= alpha, where alpha refines beta by
// consecutive sums. Represented by the per-part split pattern.
std::vector<Composition> odd_interval_comps(const Composition& beta, const Composition& alpha);

std::vector<std::vector<Composition>> odd_comps_of_parts(const Composition& beta,
                                                         const Composition& alpha) {
    // Split alpha's parts into segments matching beta's parts.
    std::vector<std::vector<Composition>> per_part;
    size_t j = 0;
    for (int part : beta.parts) {
        Composition seg;
        int acc = 0;
        while (acc < part) {
            acc += alpha.parts[j];
            seg.parts.push_back(alpha.parts[j]);
            ++j;
        }
        if (acc != part) throw domain_error("odd interval: incomparable compositions");
        // All odd compositions of the segment's length give the middle layers.
        std::vector<Composition> ways;
        for (const auto& merge : odd_compositions(seg.length())) {
            Composition merged;
            size_t t = 0;
            for (int cnt : merge.parts) {
                int s = 0;
                for (int q = 0; q < cnt; ++q) s += seg.parts[t + q];
                t += cnt;
                merged.parts.push_back(s);
            }
            ways.push_back(std::move(merged));
        }
        per_part.push_back(std::move(ways));
    }
    return per_part;
}

std::vector<Composition> odd_interval_comps(const Composition& beta, const Composition& alpha) {
    auto per_part = odd_comps_of_parts(beta, alpha);
    std::vector<Composition> out;
    std::vector<size_t> idx(per_part.size(), 0);
    while (true) {
        Composition gamma;
        for (size_t i = 0; i < per_part.size(); ++i)
            gamma.parts.insert(gamma.parts.end(), per_part[i][idx[i]].parts.begin(),
                               per_part[i][idx[i]].parts.end());
        out.push_back(std::move(gamma));
        size_t g = 0;
        while (g < idx.size() && ++idx[g] == per_part[g].size()) idx[g++] = 0;
        if (g == idx.size()) break;
    }
    return out;
}

bool comp_refines(const Composition& beta, const Composition& gamma) {
    // beta <= gamma: parts of beta are sums of consecutive parts of gamma.
    size_t j = 0;
    for (int part : beta.parts) {
        int acc = 0;
        while (acc < part) {
            if (j >= gamma.parts.size()) return false;
            acc += gamma.parts[j++];
        }
        if (acc != part) return false;
    }
    return j == gamma.parts.size();
}

}  // namespace

BigInt mobius_odd_comp(const Composition& beta, const Composition& alpha) {
    if (!beta.is_odd() || !alpha.is_odd()) throw domain_error("mobius_odd: arguments must be odd");
    if (!comp_refines(beta, alpha)) throw domain_error("mobius_odd: pair not comparable");
    std::map<std::vector<int>, BigInt> memo;
    std::function<BigInt(const Composition&)> mu = [&](const Composition& gamma) -> BigInt {
        auto it = memo.find(gamma.parts);
        if (it != memo.end()) return it->second;
        BigInt v(1);
        if (!(gamma == beta)) {
            v = BigInt(0);
            for (const auto& mid : odd_interval_comps(beta, gamma))
                if (!(mid == gamma)) v -= mu(mid);
        }
        memo.emplace(gamma.parts, v);
        return v;
    };
    return mu(alpha);
}

BigInt mobius_odd(const SetComposition& psi, const SetComposition& phi) {
    if (!psi.is_odd() || !phi.is_odd()) throw domain_error("mobius_odd: arguments must be odd");
    if (!refines(psi, phi)) throw domain_error("mobius_odd: psi is not below phi");
    // The interval [psi, phi] only depends on how many phi-blocks merge into
    // each psi-block, so compute at composition level.
    Composition beta, alpha;
    size_t j = 0;
    for (const auto& pb : psi.blocks) {
        size_t got = 0;
        int cnt = 0;
        while (got < pb.size()) {
            got += phi.blocks[j].size();
            ++cnt;
            ++j;
        }
        beta.parts.push_back(cnt);
    }
    alpha.parts.assign(phi.length(), 1);
    return mobius_odd_comp(beta, alpha);
}

BigInt mu_ell(int l) {
    if (l < 1) throw domain_error("mu_ell: l must be positive");
    if (l == 1) return BigInt(1);
    if (l % 2 == 1) return BigInt(0);
    BigInt c = catalan(l / 2 - 1);
    return ((l / 2 - 1) % 2 == 0) ? c : -c;
}

BigInt catalan(int k) {
    if (k < 0) throw domain_error("catalan: negative index");
    return BigInt::binomial(2 * k, k) / BigInt(k + 1);
}

BigInt eulerian(int n, int k) {
    if (n < 0 || k < 0 || k > std::max(n - 1, 0)) throw domain_error("eulerian: index out of range");
    if (n == 0) return BigInt(1);
    // E(n,k) = (k+1) E(n-1,k) + (n-k) E(n-1,k-1)
    std::vector<BigInt> row{BigInt(1)};
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(m);
        for (int j = 0; j < m; ++j) {
            BigInt v(0);
            if (j < m - 1) v += BigInt(j + 1) * row[j];
            if (j >= 1) v += BigInt(m - j) * row[j - 1];
            next[j] = v;
        }
        row = std::move(next);
    }
    return row[k];
}

BigInt ordered_bell(int n) {
    std::vector<BigInt> a(n + 1);
    a[0] = BigInt(1);
    for (int m = 1; m <= n; ++m) {
        BigInt s(0);
        for (int k = 1; k <= m; ++k) s += BigInt::binomial(m, k) * a[m - k];
        a[m] = s;
    }
    return a[n];
}

BigInt bell(int n) {
    std::vector<BigInt> a(n + 1);
    a[0] = BigInt(1);
    for (int m = 1; m <= n; ++m) {
        BigInt s(0);
        for (int k = 1; k <= m; ++k) s += BigInt::binomial(m - 1, k - 1) * a[m - k];
        a[m] = s;
    }
    return a[n];
}

BigInt multinomial(const Composition& alpha) {
    BigInt v = BigInt::factorial(static_cast<unsigned>(alpha.size()));
    for (int p : alpha.parts) v = v / BigInt::factorial(static_cast<unsigned>(p));
    return v;
}

// ---------------------------------------------------------------------------
// Section-9 machinery

int p_of(const SetComposition& phi) {
    if (!phi.is_odd()) throw domain_error("p_of: not an odd set composition");
    return (phi.degree() - phi.length()) / 2;
}

std::vector<SetComposition> script_C(const SetComposition& phi, const SetComposition& psi) {
    if (!refines(psi, phi)) throw domain_error("script_C: psi is not below phi");
    std::vector<SetComposition> out;
    std::vector<int> order(phi.length());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end());
    do {
        std::vector<Block> blocks;
        for (int i : order) blocks.push_back(phi.blocks[i]);
        SetComposition xi{std::move(blocks)};
        if (meet(psi, xi) == phi) out.push_back(std::move(xi));
    } while (std::next_permutation(order.begin(), order.end()));
    std::sort(out.begin(), out.end(), setcomp_less);
    return out;
}

std::vector<SetComposition> script_D(const SetComposition& phi, const SetComposition& psi) {
    if (!refines(psi, phi)) throw domain_error("script_D: psi is not below phi");
    std::vector<SetComposition> out;
    for (const auto& chi : odd_set_compositions(phi.degree()))
        if (refines(meet(psi, chi), phi)) out.push_back(chi);
    return out;
}

namespace {

// true iff chi <= xi for some xi in C.
bool below_some(const SetComposition& chi, const std::vector<SetComposition>& C) {
    for (const auto& xi : C)
        if (refines(chi, xi)) return true;
    return false;
}

}  // namespace

std::map<SetComposition, Rational, SetCompLess> coeff_C_table(const SetComposition& phi,
                                                              const SetComposition& psi) {
    if (!phi.is_odd()) throw domain_error("coeff_C: phi must be odd");
    auto C = script_C(phi, psi);
    auto D = script_D(phi, psi);
    // D = {odd chi : meet(psi,chi) <= phi} = {odd chi below some member of C}.
    std::sort(D.begin(), D.end(), [](const SetComposition& a, const SetComposition& b) {
        if (a.length() != b.length()) return a.length() > b.length();
        return setcomp_less(a, b);
    });
    int pphi = p_of(phi);
    std::map<SetComposition, Rational, SetCompLess> table;
    for (const auto& chi : D) {
        // sum over admissible odd zeta >= chi of (-1)^p(zeta) C_zeta
        //   = (-1)^p(phi) 2^(l(psi ^ chi) - l(chi)).
        Rational rhs(BigInt::two_pow(static_cast<unsigned>(meet(psi, chi).length() - chi.length())));
        if (pphi % 2) rhs = -rhs;
        Rational acc(0);
        for (const auto& [zeta, c] : table) {
            if (zeta.length() <= chi.length()) continue;
            if (!refines(chi, zeta)) continue;
            Rational t = c;
            if (p_of(zeta) % 2) t = -t;
            acc += t;
        }
        Rational val = rhs - acc;
        if (p_of(chi) % 2) val = -val;
        table.emplace(chi, std::move(val));
    }
    return table;
}

Rational coeff_C(const SetComposition& phi, const SetComposition& psi, const SetComposition& phiprime) {
    auto table = coeff_C_table(phi, psi);
    auto it = table.find(phiprime);
    if (it == table.end()) throw domain_error("coeff_C: phiprime not admissible for (phi, psi)");
    return it->second;
}

Rational coeff_C_mobius(const SetComposition& phi, const SetComposition& psi,
                        const SetComposition& phiprime) {
    auto C = script_C(phi, psi);
    if (!phiprime.is_odd() || !below_some(phiprime, C))
        throw domain_error("coeff_C_mobius: phiprime not admissible");
    Rational acc(0);
    for (const auto& zeta : script_D(phi, psi)) {
        if (!refines(phiprime, zeta)) continue;
        BigInt mu = mobius_odd(phiprime, zeta);
        Rational t(mu * BigInt::two_pow(static_cast<unsigned>(meet(psi, zeta).length() - zeta.length())));
        acc += t;
    }
    if ((p_of(phiprime) + p_of(phi)) % 2) acc = -acc;
    return acc;
}

namespace {

// std(-) on a family of blocks: renumber the union order-preservingly to an
// initial segment, keeping the block structure.
std::vector<Block> collapse_blocks(const std::vector<Block>& blocks) {
    std::vector<int> all;
    for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    std::map<int, int> rank;
    for (size_t i = 0; i < all.size(); ++i) rank[all[i]] = static_cast<int>(i) + 1;
    std::vector<Block> out;
    for (const auto& b : blocks) {
        Block nb;
        for (int x : b) nb.push_back(rank[x]);
        out.push_back(std::move(nb));
    }
    return out;
}

// Restriction chi|_S: intersect chi's blocks with S, drop empties, renumber.
SetComposition restrict_setcomp(const SetComposition& chi, const Block& S) {
    std::vector<Block> blocks;
    for (const auto& b : chi.blocks) {
        Block inter;
        std::set_intersection(b.begin(), b.end(), S.begin(), S.end(), std::back_inserter(inter));
        if (!inter.empty()) blocks.push_back(std::move(inter));
    }
    return SetComposition{collapse_blocks(blocks)};
}

}  // namespace

SetComposition standardize_to_initial_segment(const std::vector<Block>& blocks) {
    return SetComposition{collapse_blocks(blocks)};
}

Rational coeff_C_product_formula(const SetComposition& phi, const SetComposition& psi,
                                 const SetComposition& phiprime) {
    // Per-block product of sums 2^(l(psi_j ^ chi) - l(chi)) mu_(l(chi)+1) over
    // odd chi admissible for the restricted data (phi_j, psi_j).
    auto C = script_C(phi, psi);
    if (!below_some(phiprime, C)) throw domain_error("coeff_C_product_formula: phiprime not admissible");
    Rational prod(1);
    for (const auto& vb : phiprime.blocks) {
        SetComposition phi_j = restrict_setcomp(phi, vb);
        SetComposition psi_j = restrict_setcomp(psi, vb);
        auto Cj = script_C(phi_j, psi_j);
        Rational s(0);
        for (const auto& chi : odd_set_compositions(phi_j.degree())) {
            if (!below_some(chi, Cj)) continue;
            Rational t(mu_ell(chi.length() + 1) *
                       BigInt::two_pow(static_cast<unsigned>(meet(psi_j, chi).length() - chi.length())));
            s += t;
        }
        prod *= s;
    }
    if (!phiprime.is_odd()) throw domain_error("coeff_C_product_formula: phiprime must be odd");
    if ((p_of(phi) + p_of(phiprime)) % 2) prod = -prod;
    return prod;
}

}  // namespace ncq
