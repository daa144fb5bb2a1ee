// corpus.hpp
// Built-in example automorphisms, written in the map-definition language.
// Each entry carries a note and, where the fixed locus has a hypersurface
// part covered by rational curves, a stored witness parametrization.
#pragma once

#include <string>
#include <vector>

#include "fixlocus/autmap.hpp"
#include "fixlocus/dsl.hpp"
#include "fixlocus/theorems.hpp"

namespace fixlocus {

struct CorpusEntry {
    std::string name;
    std::string note;
    std::string dsl;
};

// All built-in entries, sorted by name.
const std::vector<CorpusEntry>& corpus();

// Lookup by name; nullptr when absent.
const CorpusEntry* find_corpus_entry(const std::string& name);

struct LoadedEntry {
    std::string name;
    std::string note;
    MapDocument doc;
    Automorphism aut;
    std::vector<std::string> var_names;
    std::vector<RuledWitness> witnesses;  // target_h filled from the fixed locus
};

// Parses the entry, certifies the automorphism from its declared inverse
// and resolves witness targets against the fixed hypersurface part.
LoadedEntry load_corpus_entry(const CorpusEntry& entry);

// Same loading path for user documents: the document must declare exactly
// one map together with its inverse.
LoadedEntry load_document(const MapDocument& doc, const std::string& fallback_name);

}  // namespace fixlocus
