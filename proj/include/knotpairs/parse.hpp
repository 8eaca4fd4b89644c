#ifndef KNOTPAIRS_PARSE_HPP
#define KNOTPAIRS_PARSE_HPP

#include <stdexcept>
#include <string>

#include "knotpairs/presentation.hpp"

namespace knotpairs {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Grammar:
//   Presentation := "<" GenList "|" RelList ">"
//   GenList      := name ("," name)* | eps
//   RelList      := Rel ("," Rel)* | eps
//   Rel          := Word | Word "=" Word          (L = R stored as L R^-1)
//   Word         := (name ("^" integer)? | name "'")+
// Juxtaposition is the product; "x'" and "x^-1" both mean the inverse.
// Identifier runs like "aba" split greedily into declared generator names.
Presentation parse_presentation(const std::string& text);

// Parses a word over the generators of p (same word syntax as above).
Word parse_word(const std::string& text, const Presentation& p);

// Emits "< a, b | a b a b^-1 a^-1 b^-1 >"; runs collapse to exponents.
std::string serialize_presentation(const Presentation& p);
std::string serialize_word(const Word& w);

}  // namespace knotpairs

#endif
