#pragma once

#include <string>

#include "ncq/element.hpp"
#include "ncq/poset.hpp"

namespace ncq {

// Shared text formats. Set composition: blocks joined by '|', elements
// comma-separated ascending ("2,5,6|1,3|4"); set partition uses '/'. The
// empty (degree-0) object prints as "e". Permutations print comma-separated;
// the single-string digit form is accepted on input for n <= 9. QSym keys
// carry their degree: "A={2,4};n=5" (peak-set keys print "B=...").

std::string to_text(const SetComposition& phi);
std::string to_text(const SetPartition& pi);
std::string to_text(const Subset& A, char name = 'A');
std::string to_text(const Permutation& sigma);
std::string to_text(const Composition& alpha);
std::string to_text(const BKey& key);
std::string to_text(const Elem& elem);
std::string to_text(const TensorElem& t);

SetComposition parse_setcomp(const std::string& s);
SetPartition parse_setpartition(const std::string& s);
Subset parse_subset(const std::string& s);  // "A={..};n=.." or "B={..};n=.."
Permutation parse_permutation(const std::string& s);

// Inline element grammar: "<coeff>*<basis>:<key> [+ ...]" with rational
// coefficients "p/q"; "0" is the zero element. K/Eta keys also accept the
// pair form "B={2,5};sigma=278134569".
Elem parse_elem(const std::string& s);

// JSON element schema:
//   {"n": int, "basis": "M"|..., "terms": [{"key": "...", "num": "...",
//    "den": "..."}]}
// with terms sorted by canonical key order and integers as decimal strings.
std::string elem_to_json(const Elem& elem);
Elem elem_from_json(const std::string& json_text);

std::string tensor_to_json(const TensorElem& t);

// Triple/digraph JSON: {"vertices":[...], "solid":[[a,b],...],
// "double":[...]} plus optional "gamma" and "sigma" (images in vertex order).
LabelledPoset triple_from_json(const std::string& json_text);
std::string triple_to_json(const LabelledPoset& t);

std::string word_poly_to_text(const WordPoly& p);

}  // namespace ncq
