#include "knotpairs/word.hpp"

#include <cctype>
#include <cstdlib>

namespace knotpairs {

bool is_valid_generator_name(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.push_back(Letter{it->gen, -it->sign});
    }
    return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
}

Word Word::pow(int k) const {
    const Word base = k >= 0 ? *this : inverse();
    Word out;
    for (int i = 0; i < std::abs(k); ++i) out = out * base;
    return out;
}

Word free_reduce(const Word& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (const Letter& l : w.letters()) {
        if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return Word(std::move(stack));
}

Word cyclically_reduce(const Word& w) {
    std::vector<Letter> ls = free_reduce(w).letters();
    std::size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen && ls[lo].sign == -ls[hi - 1].sign) {
        ++lo;
        --hi;
    }
    return Word(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
}

bool is_freely_reduced(const Word& w) {
    const auto& ls = w.letters();
    for (std::size_t i = 1; i < ls.size(); ++i) {
        if (ls[i].gen == ls[i - 1].gen && ls[i].sign == -ls[i - 1].sign) return false;
    }
    return true;
}

std::vector<Word> cyclic_rotations(const Word& w) {
    std::vector<Word> out;
    const auto& ls = w.letters();
    if (ls.empty()) return {w};
    for (std::size_t k = 0; k < ls.size(); ++k) {
        std::vector<Letter> rot(ls.begin() + k, ls.end());
        rot.insert(rot.end(), ls.begin(), ls.begin() + k);
        out.emplace_back(std::move(rot));
    }
    return out;
}

}  // namespace knotpairs
