#pragma once

#include <functional>
#include <vector>

#include "ncq/element.hpp"
#include "ncq/word.hpp"

namespace ncq {

// A finite poset with two bijective labellings gamma and sigma. Vertices are
// positive integers (often [n] but Q_{3,5,8}-style vertex sets are allowed);
// the canonical object is the triple, the edge-coloured digraph is a view.
struct LabelledPoset {
    std::vector<int> vertices;                 // ascending
    std::vector<std::pair<int, int>> covers;   // (a, b) with b covering a
    std::vector<int> gamma;                    // gamma[i] labels vertices[i]
    std::vector<int> sigma;                    // sigma[i] positions vertices[i]

    int size() const { return static_cast<int>(vertices.size()); }
    int index_of(int v) const;
    int gamma_of(int v) const { return gamma[index_of(v)]; }
    int sigma_of(int v) const { return sigma[index_of(v)]; }
};

struct EdgeColouredDigraph {
    std::vector<int> vertices;                // ascending
    std::vector<std::pair<int, int>> solid;   // gamma decreases along the edge
    std::vector<std::pair<int, int>> twin;    // double edge: gamma increases
};

// Validates shape (acyclic, transitively reduced, bijective labellings).
LabelledPoset make_triple(std::vector<int> vertices, std::vector<std::pair<int, int>> covers,
                          std::vector<int> gamma, std::vector<int> sigma);

// Vertex a is named sigma(a); cover a -> b becomes a solid edge when gamma
// decreases and a double edge when it increases.
EdgeColouredDigraph digraph_of_triple(const LabelledPoset& t);

// Reconstructs a triple on the digraph's vertex set: sigma ranks the vertex
// names, gamma is any labelling consistent with the edge types (error if the
// constraints are unsatisfiable or the digraph is not a Hasse diagram).
LabelledPoset triple_of_digraph(const EdgeColouredDigraph& g);

// Streams every linear extension (as vertex sequences) in lexicographic order
// of the chosen vertices; memory stays linear in n.
void for_each_linear_extension(const LabelledPoset& t,
                               const std::function<void(const std::vector<int>&)>& fn);
std::vector<std::vector<int>> linear_extensions(const LabelledPoset& t);

// Y_(P,gamma,sigma) = sum over linear extensions w of F_(Des(w,gamma), tau_w)
// with tau_w(i) = sigma(w_i); returned as an M expansion.
Elem Y_expansion_M(const LabelledPoset& t);
// Same element in the F basis.
Elem Y_expansion(const LabelledPoset& t);

// K_(P,gamma,sigma) = sum over linear extensions of K_(Peak(w,gamma), tau_w).
Elem Fcal_expansion_M(const LabelledPoset& t);
// Same element re-expressed in the Eta basis of NCPi.
Elem Fcal_expansion(const LabelledPoset& t);

// Brute-force colouring enumeration: proper colourings f: X -> [m], or
// enriched colourings with values -1 < 1 < -2 < 2 < ... < -m < m. Emits the
// word x_{f(sigma^-1(1))} ... x_{f(sigma^-1(n))} (absolute values when
// enriched). Equals realize(Y/Fcal expansion, m) by the fundamental theorems.
WordPoly enumerate_colourings(const LabelledPoset& t, int m, bool enriched);

// Digraph combinators used by the product/coproduct laws.
LabelledPoset disjoint_union_shifted(const LabelledPoset& a, const LabelledPoset& b);
LabelledPoset chain_of_standard_pair(const Subset& A, const Permutation& sigma);

// Vertex subsets closed under outgoing edges (filters of the poset).
std::vector<std::vector<int>> upward_closed_sets(const LabelledPoset& t);
// Induced sub-triple on a filter or ideal, labels collapsed order-preservingly.
LabelledPoset induced_subtriple(const LabelledPoset& t, const std::vector<int>& vertex_subset);

}  // namespace ncq
