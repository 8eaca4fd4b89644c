#include "knotpairs/parse.hpp"

#include <cctype>
#include <set>

namespace knotpairs {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum Kind { Lt, Gt, Bar, Comma, Eq, Caret, Quote, Name, Int, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, current_.line, current_.col);
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) bump();
        current_.line = line_;
        current_.col = col_;
        if (i_ >= s_.size()) {
            current_.kind = Token::End;
            current_.text.clear();
            return;
        }
        char c = s_[i_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
                name += s_[i_];
                bump();
            }
            current_ = Token{Token::Name, name, current_.line, current_.col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            std::string num(1, c);
            bump();
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                num += s_[i_];
                bump();
            }
            if (num == "-") throw ParseError("expected digits after '-'", current_.line, current_.col);
            current_ = Token{Token::Int, num, current_.line, current_.col};
            return;
        }
        Token::Kind kind;
        switch (c) {
            case '<': kind = Token::Lt; break;
            case '>': kind = Token::Gt; break;
            case '|': kind = Token::Bar; break;
            case ',': kind = Token::Comma; break;
            case '=': kind = Token::Eq; break;
            case '^': kind = Token::Caret; break;
            case '\'': kind = Token::Quote; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        bump();
        current_ = Token{kind, std::string(1, c), current_.line, current_.col};
    }

    void bump() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token current_;
};

// Splits an identifier run like "aba" into declared generator names,
// greedily matching the longest declared prefix.
std::vector<GeneratorSymbol> split_run(const Token& tok,
                                       const std::vector<GeneratorSymbol>& gens) {
    std::vector<GeneratorSymbol> out;
    std::size_t pos = 0;
    const std::string& text = tok.text;
    while (pos < text.size()) {
        std::size_t best = 0;
        for (const auto& g : gens) {
            if (g.size() > best && text.compare(pos, g.size(), g) == 0) best = g.size();
        }
        if (best == 0) {
            throw ParseError("undeclared symbol '" + text.substr(pos) + "'", tok.line,
                             tok.col + static_cast<int>(pos));
        }
        out.push_back(text.substr(pos, best));
        pos += best;
    }
    return out;
}

Word parse_word_tokens(Lexer& lex, const std::vector<GeneratorSymbol>& gens) {
    std::vector<Letter> letters;
    bool saw_atom = false;
    while (lex.peek().kind == Token::Name) {
        Token tok = lex.next();
        std::vector<GeneratorSymbol> run = split_run(tok, gens);
        saw_atom = true;
        // A trailing ^k or ' binds to the last name of the run.
        int exponent = 1;
        if (lex.peek().kind == Token::Caret) {
            lex.next();
            if (lex.peek().kind != Token::Int) lex.fail("expected integer exponent");
            exponent = std::stoi(lex.next().text);
        } else if (lex.peek().kind == Token::Quote) {
            lex.next();
            exponent = -1;
        }
        for (std::size_t i = 0; i + 1 < run.size(); ++i) {
            letters.push_back(Letter{run[i], 1});
        }
        const GeneratorSymbol& last = run.back();
        int sign = exponent >= 0 ? 1 : -1;
        for (int i = 0; i < std::abs(exponent); ++i) letters.push_back(Letter{last, sign});
    }
    if (!saw_atom) lex.fail("expected a word");
    return Word(std::move(letters));
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Lexer lex(text);
    if (lex.peek().kind != Token::Lt) lex.fail("expected '<'");
    lex.next();

    std::vector<GeneratorSymbol> gens;
    while (lex.peek().kind == Token::Name) {
        Token tok = lex.next();
        for (const auto& g : gens) {
            if (g == tok.text) {
                throw ParseError("duplicate generator '" + tok.text + "'", tok.line, tok.col);
            }
        }
        gens.push_back(tok.text);
        if (lex.peek().kind == Token::Comma) {
            lex.next();
            if (lex.peek().kind != Token::Name) lex.fail("expected generator name");
        }
    }
    if (lex.peek().kind != Token::Bar) lex.fail("expected '|'");
    lex.next();

    std::vector<Word> relators;
    while (lex.peek().kind != Token::Gt) {
        Token at = lex.peek();
        Word left = parse_word_tokens(lex, gens);
        if (lex.peek().kind == Token::Eq) {
            lex.next();
            Word right = parse_word_tokens(lex, gens);
            left = left * right.inverse();
        }
        (void)at;
        relators.push_back(free_reduce(left));
        if (lex.peek().kind == Token::Comma) {
            lex.next();
        } else if (lex.peek().kind != Token::Gt) {
            lex.fail("expected ',' or '>'");
        }
    }
    lex.next();
    if (lex.peek().kind != Token::End) lex.fail("trailing input after '>'");
    return Presentation(std::move(gens), std::move(relators));
}

Word parse_word(const std::string& text, const Presentation& p) {
    Lexer lex(text);
    Word w = parse_word_tokens(lex, p.generators());
    if (lex.peek().kind != Token::End) lex.fail("trailing input after word");
    return free_reduce(w);
}

std::string serialize_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    const auto& ls = w.letters();
    std::size_t i = 0;
    while (i < ls.size()) {
        std::size_t j = i;
        while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].sign == ls[i].sign) ++j;
        long run = static_cast<long>(j - i) * ls[i].sign;
        if (!out.empty()) out += ' ';
        out += ls[i].gen;
        if (run != 1) out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

std::string serialize_presentation(const Presentation& p) {
    std::string out = "<";
    for (std::size_t i = 0; i < p.generators().size(); ++i) {
        out += (i ? ", " : " ") + p.generators()[i];
    }
    out += " |";
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
        out += (i ? ", " : " ") + serialize_word(p.relators()[i]);
    }
    out += " >";
    return out;
}

}  // namespace knotpairs
