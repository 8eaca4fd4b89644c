#ifndef KNOTPAIRS_PRESENTATION_HPP
#define KNOTPAIRS_PRESENTATION_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotpairs/word.hpp"

namespace knotpairs {

// Input validation failure (duplicate generator, undeclared symbol, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A finite presentation: ordered generators plus cyclically reduced relators.
class Presentation {
public:
    Presentation() = default;
    // Validates names, uniqueness, and relator symbols; stores relators
    // cyclically reduced.
    Presentation(std::vector<GeneratorSymbol> generators, std::vector<Word> relators);

    const std::vector<GeneratorSymbol>& generators() const { return generators_; }
    const std::vector<Word>& relators() const { return relators_; }

    bool has_generator(const GeneratorSymbol& g) const;
    int generator_index(const GeneratorSymbol& g) const;  // -1 if absent

    long deficiency() const {
        return static_cast<long>(generators_.size()) - static_cast<long>(relators_.size());
    }

    void validate_word(const Word& w) const;  // throws ValidationError on undeclared symbol

    bool operator==(const Presentation&) const = default;

private:
    std::vector<GeneratorSymbol> generators_;
    std::vector<Word> relators_;
};

// Translation of generator names, as produced by collision-resolving renames.
using Renaming = std::map<GeneratorSymbol, GeneratorSymbol>;

Word rename_word(const Word& w, const Renaming& renaming);

// A homomorphism given on generators; targets are reduced words.
struct GroupMap {
    Presentation source;
    Presentation target;
    std::map<GeneratorSymbol, Word> images;

    // Validates totality and that images are words over target generators.
    static GroupMap make(Presentation source, Presentation target,
                         std::map<GeneratorSymbol, Word> images);
    static GroupMap identity(const Presentation& p);
};

// Substitutes generator images and freely reduces.
Word apply_map(const GroupMap& f, const Word& w);

struct ProductResult {
    Presentation presentation;
    Renaming second_renaming;  // applied to the second operand's generators
};

// Disjoint union of generators and relators. Name clashes in the second
// operand get deterministic suffixes "_2", "_3", ...
ProductResult free_product(const Presentation& p, const Presentation& q);

// free_product plus one commutator relator [x, y] per (x in p, y in q).
ProductResult direct_product(const Presentation& p, const Presentation& q);

// Appends ws as relators.
Presentation quotient_by_normal_closure(const Presentation& p, const std::vector<Word>& ws);

struct TietzeResult {
    Presentation presentation;
    bool fully_simplified = true;
    // Images of the input generators in the simplified presentation, so
    // callers can translate distinguished words.
    std::map<GeneratorSymbol, Word> images;
};

// Safe simplification moves only: delete trivial relators, eliminate a
// generator occurring exactly once in some relator, dedupe relators up to
// rotation and inversion. Never increases generator count.
TietzeResult tietze_simplify(const Presentation& p, long budget = 1000);

Word translate(const TietzeResult& t, const Word& w);

}  // namespace knotpairs

#endif
