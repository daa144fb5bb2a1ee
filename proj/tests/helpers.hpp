// Shared conveniences for the test binaries: parse a single polynomial
// through the document grammar, load corpus entries, multiply small
// rational matrices (the library itself only needs matrix-vector
// products, so the product lives here).
#pragma once

#include <string>
#include <vector>

#include "fixlocus/corpus.hpp"
#include "fixlocus/dsl.hpp"
#include "fixlocus/linalg.hpp"

namespace testutil {

using fixlocus::LoadedEntry;
using fixlocus::Polynomial;
using fixlocus::Rational;
using fixlocus::RationalMatrix;

inline Polynomial parse_poly(const std::string& expr, const std::vector<std::string>& names) {
    std::string doc = "ring ";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) doc += ", ";
        doc += names[i];
    }
    doc += "\nmap p0 = (" + expr;
    for (std::size_t i = 1; i < names.size(); ++i) doc += ", 0";
    doc += ")\n";
    return fixlocus::parse_document(doc).maps.front().map.components.front();
}

inline Polynomial pxyz(const std::string& expr) { return parse_poly(expr, {"x", "y", "z"}); }
inline Polynomial pxy(const std::string& expr) { return parse_poly(expr, {"x", "y"}); }
inline Polynomial px(const std::string& expr) { return parse_poly(expr, {"x"}); }

inline LoadedEntry corpus_entry(const std::string& name) {
    const fixlocus::CorpusEntry* e = fixlocus::find_corpus_entry(name);
    if (!e) throw std::runtime_error("missing corpus entry " + name);
    return fixlocus::load_corpus_entry(*e);
}

inline RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational acc(0);
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

}  // namespace testutil
