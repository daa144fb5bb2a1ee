// Built-in corpus of example automorphisms.

#include "fixlocus/corpus.hpp"

#include <algorithm>

#include "fixlocus/errors.hpp"

namespace fixlocus {

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"example2_f",
         "triangular-type map whose fixed locus is the plane curve y^2 - x^3 + 1 = 0 pushed "
         "into codimension two; no hypersurface part",
         "ring x, y, z\n"
         "map example2_f = (x, y + z + (y^2 - x^3 + 1), z + (y^2 - x^3 + 1))\n"
         "inverse example2_f = (x, y - z, z - ((y - z)^2 - x^3 + 1))\n"},

        {"example2_g",
         "the previous map extended by a doubled fourth coordinate: non-special with a "
         "codimension-two fixed locus",
         "ring x, y, z, w\n"
         "map example2_g = (x, y + z + (y^2 - x^3 + 1), z + (y^2 - x^3 + 1), 2*w)\n"
         "inverse example2_g = (x, y - z, z - ((y - z)^2 - x^3 + 1), 1/2*w)\n"},

        {"identity", "the identity map: every point is fixed",
         "ring x, y, z\n"
         "map identity = (x, y, z)\n"
         "inverse identity = (x, y, z)\n"},

        {"linear_eps",
         "order-2 linear map negating the first coordinate; fixes the hyperplane x = 0",
         "ring x, y, z\n"
         "map linear_eps = (-x, y, z)\n"
         "inverse linear_eps = (-x, y, z)\n"},

        {"nagata_v1",
         "degree-5 special automorphism fixing the quadric cone x^2 - y*z = 0 pointwise",
         "ring x, y, z\n"
         "map nagata_v1 = (x + (x^2 - y*z)*z, y + 2*(x^2 - y*z)*x + (x^2 - y*z)^2*z, z)\n"
         "inverse nagata_v1 = (x - (x^2 - y*z)*z, y - 2*(x^2 - y*z)*x + (x^2 - y*z)^2*z, z)\n"
         "witness cone for nagata_v1 params t, s = (t*s, s^2, t^2)\n"},

        {"nagata_v2",
         "mirror presentation of the degree-5 special automorphism; fixes the quadric cone "
         "x*z + y^2 = 0 pointwise",
         "ring x, y, z\n"
         "map nagata_v2 = (x - 2*y*(x*z + y^2) - z*(x*z + y^2)^2, y + z*(x*z + y^2), z)\n"
         "inverse nagata_v2 = (x + 2*y*(x*z + y^2) - z*(x*z + y^2)^2, y - z*(x*z + y^2), z)\n"
         "witness cone for nagata_v2 params t, s = (s^2, t*s, -t^2)\n"},

        {"scale_z", "diagonal map doubling the last coordinate; fixes the hyperplane z = 0",
         "ring x, y, z\n"
         "map scale_z = (x, y, 2*z)\n"
         "inverse scale_z = (x, y, 1/2*z)\n"},

        {"shear4",
         "four-variable shear, often quoted with a three-variable argument list; its fixed "
         "locus is the hyperplane z = 0 together with the extra plane y = w = 0",
         "ring x, y, z, w\n"
         "map shear4 = (x + z*y, y + z*w, z, w)\n"
         "inverse shear4 = (x - z*y + z^2*w, y - z*w, z, w)\n"},

        {"triangular_r1",
         "one-factor triangular shear along the smooth parabolic cylinder z^2 - y = 0",
         "ring x, y, z\n"
         "map triangular_r1 = (x + y - z^2, y, z)\n"
         "inverse triangular_r1 = (x - y + z^2, y, z)\n"
         "witness cylinder for triangular_r1 params t, s = (t, s^2, s)\n"},

        {"triangular_r2",
         "two-factor triangular shear along the singular reducible surface y*z = 0",
         "ring x, y, z\n"
         "map triangular_r2 = (x + y*z, y, z)\n"
         "inverse triangular_r2 = (x - y*z, y, z)\n"
         "witness plane for triangular_r2 params t, s = (t, 0, s)\n"},
    };
    return entries;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return &e;
    return nullptr;
}

LoadedEntry load_document(const MapDocument& doc, const std::string& fallback_name) {
    if (doc.maps.size() != 1)
        throw ContractError("expected exactly one map definition, got " +
                            std::to_string(doc.maps.size()));
    const NamedMap& named = doc.maps.front();
    const PolynomialMap* inv = doc.find_inverse(named.name);
    if (!inv)
        throw ContractError("map '" + named.name +
                            "' has no declared inverse; certification needs one");

    LoadedEntry out{fallback_name.empty() ? named.name : fallback_name,
                    "",
                    doc,
                    Automorphism::from_pair(named.map, *inv),
                    doc.ring,
                    {}};

    if (!doc.witnesses.empty()) {
        FixedLocus fl = fixed_hypersurface_part(out.aut);
        for (const WitnessDecl& w : doc.witnesses) {
            if (w.map_name != named.name) continue;
            if (fl.kind != FixedLocusKind::Hypersurface)
                throw ContractError("witness '" + w.name +
                                    "' declared although the fixed locus has no hypersurface part");
            out.witnesses.push_back(RuledWitness{*fl.h, w.psi});
        }
    }
    return out;
}

LoadedEntry load_corpus_entry(const CorpusEntry& entry) {
    LoadedEntry out = load_document(parse_document(entry.dsl), entry.name);
    out.note = entry.note;
    return out;
}

}  // namespace fixlocus
