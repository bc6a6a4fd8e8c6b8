#include "ncq/io.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "ncq/ncpeak.hpp"

namespace ncq {

namespace {

std::string join_ints(const std::vector<int>& xs, char sep) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::vector<int> split_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

std::string join_blocks(const std::vector<Block>& blocks, char sep) {
    if (blocks.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += sep;
        s += join_ints(blocks[i], ',');
    }
    return s;
}

std::vector<Block> split_blocks(const std::string& s, char sep) {
    if (s == "e" || s.empty()) return {};
    std::vector<Block> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(split_ints(cur, ','));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(split_ints(cur, ','));
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string to_text(const SetComposition& phi) { return join_blocks(phi.blocks, '|'); }
std::string to_text(const SetPartition& pi) { return join_blocks(pi.blocks, '/'); }

std::string to_text(const Subset& A, char name) {
    return std::string(1, name) + "={" + join_ints(A.elems, ',') + "};n=" + std::to_string(A.n);
}

std::string to_text(const Permutation& sigma) { return join_ints(sigma.img, ','); }

std::string to_text(const Composition& alpha) { return "(" + join_ints(alpha.parts, ',') + ")"; }

std::string to_text(const BKey& key) {
    if (basis_uses_setcomp(key.basis)) return to_text(key.setcomp());
    if (basis_uses_setpartition(key.basis)) return to_text(key.setpartition());
    char name = (key.basis == Basis::QSymK || key.basis == Basis::QSymEta) ? 'B' : 'A';
    return to_text(key.subset(), name);
}

std::string to_text(const Elem& elem) {
    if (elem.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : elem.terms()) {
        if (!first) s += " + ";
        first = false;
        s += c.to_string() + "*" + basis_name(k.basis) + ":" + to_text(k);
    }
    return s;
}

std::string to_text(const TensorElem& t) {
    if (t.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
        if (!first) s += " + ";
        first = false;
        s += c.to_string() + "*(" + basis_name(k.first.basis) + ":" + to_text(k.first) + " (x) " +
             basis_name(k.second.basis) + ":" + to_text(k.second) + ")";
    }
    return s;
}

SetComposition parse_setcomp(const std::string& s) {
    return make_set_composition(split_blocks(trim(s), '|'));
}

SetPartition parse_setpartition(const std::string& s) {
    return make_set_partition(split_blocks(trim(s), '/'));
}

Subset parse_subset(const std::string& s) {
    std::string t = trim(s);
    auto brace = t.find('{');
    auto close = t.find('}');
    auto npos = t.find(";n=");
    if (brace == std::string::npos || close == std::string::npos || npos == std::string::npos)
        throw domain_error("subset: expected 'A={..};n=..', got '" + s + "'");
    std::vector<int> elems = split_ints(t.substr(brace + 1, close - brace - 1), ',');
    int n = std::stoi(t.substr(npos + 3));
    return make_subset(std::move(elems), n);
}

Permutation parse_permutation(const std::string& s) {
    std::string t = trim(s);
    if (t.find(',') == std::string::npos && t.size() > 1) {
        std::vector<int> img;
        for (char c : t) {
            if (c < '1' || c > '9') throw domain_error("permutation: bad digit form '" + s + "'");
            img.push_back(c - '0');
        }
        return make_permutation(std::move(img));
    }
    return make_permutation(split_ints(t, ','));
}

namespace {

BKey parse_key(Basis basis, const std::string& text) {
    if (basis_uses_setcomp(basis)) {
        // K/Eta keys accept the pair form "B={..};sigma=..".
        if ((basis == Basis::K || basis == Basis::Eta) && text.find("sigma=") != std::string::npos) {
            auto semi = text.find(";sigma=");
            if (semi == std::string::npos) throw domain_error("key: expected 'B={..};sigma=..'");
            Permutation sigma = parse_permutation(text.substr(semi + 7));
            std::string bpart = text.substr(0, semi) + ";n=" + std::to_string(sigma.n());
            Subset B = parse_subset(bpart);
            EnrichedStandardPair ep = estd_pair(B, sigma);
            return key_setcomp(basis, setcomp_odd(ep.B, ep.sigma));
        }
        return key_setcomp(basis, parse_setcomp(text));
    }
    if (basis_uses_setpartition(basis)) return key_setpartition(basis, parse_setpartition(text));
    // QSym keys: subset form "A={..};n=..", or a composition "(2,1,3)"
    if (!text.empty() && text.front() == '(') {
        Composition alpha{split_ints(text.substr(1, text.size() - 2), ',')};
        return key_subset(basis, subset_of_comp(alpha));
    }
    return key_subset(basis, parse_subset(text));
}

}  // namespace

Elem parse_elem(const std::string& s) {
    std::string t = trim(s);
    if (t == "0" || t.empty()) return Elem();
    Elem out;
    size_t pos = 0;
    while (pos < t.size()) {
        size_t next = t.find(" + ", pos);
        std::string term = trim(next == std::string::npos ? t.substr(pos) : t.substr(pos, next - pos));
        pos = next == std::string::npos ? t.size() : next + 3;
        auto star = term.find('*');
        auto colon = term.find(':', star == std::string::npos ? 0 : star);
        if (colon == std::string::npos) throw domain_error("element: expected 'coeff*basis:key' in '" + term + "'");
        Rational coeff(1);
        std::string bname;
        if (star == std::string::npos) {
            bname = trim(term.substr(0, colon));
        } else {
            coeff = Rational(trim(term.substr(0, star)));
            bname = trim(term.substr(star + 1, colon - star - 1));
        }
        Basis basis = basis_from_name(bname);
        out.add(parse_key(basis, trim(term.substr(colon + 1))), coeff);
    }
    return out;
}

std::string elem_to_json(const Elem& elem) {
    nlohmann::ordered_json j;
    j["n"] = elem.degree();
    j["basis"] = basis_name(elem.basis());
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [k, c] : elem.terms()) {
        nlohmann::ordered_json term;
        term["key"] = to_text(k);
        term["num"] = c.num().to_string();
        term["den"] = c.den().to_string();
        j["terms"].push_back(std::move(term));
    }
    return j.dump();
}

Elem elem_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Basis basis = basis_from_name(j.at("basis").get<std::string>());
    Elem out;
    for (const auto& term : j.at("terms")) {
        Rational c(BigInt(term.at("num").get<std::string>()),
                   BigInt(term.at("den").get<std::string>()));
        out.add(parse_key(basis, term.at("key").get<std::string>()), c);
    }
    if (out.is_zero() && j.contains("n")) out = Elem(basis, j.at("n").get<int>());
    return out;
}

std::string tensor_to_json(const TensorElem& t) {
    nlohmann::ordered_json j;
    j["basis_left"] = basis_name(t.lbasis());
    j["basis_right"] = basis_name(t.rbasis());
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [k, c] : t.terms()) {
        nlohmann::ordered_json term;
        term["key_left"] = to_text(k.first);
        term["n_left"] = k.first.n;
        term["key_right"] = to_text(k.second);
        term["n_right"] = k.second.n;
        term["num"] = c.num().to_string();
        term["den"] = c.den().to_string();
        j["terms"].push_back(std::move(term));
    }
    return j.dump();
}

LabelledPoset triple_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
    std::vector<std::pair<int, int>> covers;
    std::vector<std::pair<int, int>> solid, twin;
    for (const auto& e : j.value("solid", nlohmann::json::array()))
        solid.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    for (const auto& e : j.value("double", nlohmann::json::array()))
        twin.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    if (j.contains("gamma")) {
        covers = solid;
        covers.insert(covers.end(), twin.begin(), twin.end());
        std::vector<int> gamma = j.at("gamma").get<std::vector<int>>();
        std::vector<int> sigma;
        if (j.contains("sigma")) {
            sigma = j.at("sigma").get<std::vector<int>>();
        } else {
            sigma.resize(vertices.size());
            std::iota(sigma.begin(), sigma.end(), 1);
        }
        return make_triple(std::move(vertices), std::move(covers), std::move(gamma), std::move(sigma));
    }
    EdgeColouredDigraph g{std::move(vertices), std::move(solid), std::move(twin)};
    return triple_of_digraph(g);
}

std::string triple_to_json(const LabelledPoset& t) {
    EdgeColouredDigraph g = digraph_of_triple(t);
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices;
    j["solid"] = nlohmann::ordered_json::array();
    for (auto [a, b] : g.solid) j["solid"].push_back({a, b});
    j["double"] = nlohmann::ordered_json::array();
    for (auto [a, b] : g.twin) j["double"].push_back({a, b});
    std::vector<int> gamma, sigma;
    for (int v : t.vertices) {
        gamma.push_back(t.gamma_of(v));
        sigma.push_back(t.sigma_of(v));
    }
    j["gamma"] = gamma;
    j["sigma"] = sigma;
    return j.dump();
}

std::string word_poly_to_text(const WordPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : p.words) {
        if (!first) s += " + ";
        first = false;
        s += c.to_string() + "*x[" + join_ints(w, ',') + "]";
    }
    return s;
}

}  // namespace ncq
