// dsl.hpp
// The map-definition language: a ring declaration, named map tuples,
// optional inverse tuples and witness blocks.
//
//   ring x, y, z
//   map f = (x + (x^2 - y*z)*z, ...)
//   inverse f = (...)
//   witness w for f params t, s = (t*s, s^2, t^2)
//
// Operators: ^ binds tightest, then *, then + and -; rational literals are
// written p/q (the only place '/' is allowed); '#' starts a line comment.
// Every error carries a 1-based line:column position.
#pragma once

#include <string>
#include <vector>

#include "fixlocus/autmap.hpp"
#include "fixlocus/polynomial.hpp"

namespace fixlocus {

struct NamedMap {
    std::string name;
    PolynomialMap map;

    bool operator==(const NamedMap&) const = default;
};

struct WitnessDecl {
    std::string name;
    std::string map_name;
    std::vector<std::string> params;  // parameter variable names; params[0] is t
    std::vector<Polynomial> psi;      // components over the parameter ring

    bool operator==(const WitnessDecl&) const = default;
};

struct MapDocument {
    std::vector<std::string> ring;     // ambient variable names, in order
    std::vector<NamedMap> maps;        // declaration order
    std::vector<NamedMap> inverses;    // each name refers to a declared map
    std::vector<WitnessDecl> witnesses;

    bool operator==(const MapDocument&) const = default;

    const PolynomialMap* find_map(const std::string& name) const;
    const PolynomialMap* find_inverse(const std::string& name) const;
};

// Parses a document; ParseError (with line:column) on any lexical, syntax
// or semantic problem (unknown identifier, arity mismatch, duplicate
// names, division outside integer literals).
MapDocument parse_document(const std::string& text);

// Canonical rendering; parse(print_document(parse(text))) == parse(text).
std::string print_document(const MapDocument& doc);

}  // namespace fixlocus
