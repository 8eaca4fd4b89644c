#ifndef KNOTPAIRS_WORD_HPP
#define KNOTPAIRS_WORD_HPP

#include <string>
#include <vector>

namespace knotpairs {

// Generator symbols are tokens: first char a letter, rest letters/digits/underscores.
using GeneratorSymbol = std::string;

bool is_valid_generator_name(const std::string& name);

// A single signed occurrence of a generator.
struct Letter {
    GeneratorSymbol gen;
    int sign = 1;  // +1 or -1

    bool operator==(const Letter&) const = default;
};

// A word in a free group: a finite sequence of signed generator symbols.
// The empty word is the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static Word generator(const GeneratorSymbol& g, int sign = 1) {
        return Word({Letter{g, sign}});
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    Word inverse() const;
    Word operator*(const Word& rhs) const;  // concatenation, no reduction
    Word pow(int k) const;

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

// Unique reduced word freely equal to w (no adjacent g g^-1 pairs). Idempotent.
Word free_reduce(const Word& w);

// Minimal-length representative under free reduction plus deletion of
// matched first/last letters.
Word cyclically_reduce(const Word& w);

bool is_freely_reduced(const Word& w);

// All cyclic rotations of w (used for relator dedup).
std::vector<Word> cyclic_rotations(const Word& w);

}  // namespace knotpairs

#endif
