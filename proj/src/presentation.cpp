#include "knotpairs/presentation.hpp"

#include <algorithm>
#include <set>

namespace knotpairs {

Presentation::Presentation(std::vector<GeneratorSymbol> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (!is_valid_generator_name(g)) {
            throw ValidationError("invalid generator name: '" + g + "'");
        }
        if (!seen.insert(g).second) {
            throw ValidationError("duplicate generator: '" + g + "'");
        }
    }
    relators_.reserve(relators.size());
    for (const auto& r : relators) {
        validate_word(r);
        Word reduced = cyclically_reduce(r);
        if (!reduced.empty()) relators_.push_back(std::move(reduced));
    }
}

bool Presentation::has_generator(const GeneratorSymbol& g) const {
    return generator_index(g) >= 0;
}

int Presentation::generator_index(const GeneratorSymbol& g) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == g) return static_cast<int>(i);
    }
    return -1;
}

void Presentation::validate_word(const Word& w) const {
    for (const Letter& l : w.letters()) {
        if (!has_generator(l.gen)) {
            throw ValidationError("undeclared symbol '" + l.gen + "'");
        }
    }
}

Word rename_word(const Word& w, const Renaming& renaming) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters()) {
        auto it = renaming.find(l.gen);
        out.push_back(Letter{it == renaming.end() ? l.gen : it->second, l.sign});
    }
    return Word(std::move(out));
}

GroupMap GroupMap::make(Presentation source, Presentation target,
                        std::map<GeneratorSymbol, Word> images) {
    for (const auto& g : source.generators()) {
        auto it = images.find(g);
        if (it == images.end()) {
            throw ValidationError("map has no image for generator '" + g + "'");
        }
        target.validate_word(it->second);
        it->second = free_reduce(it->second);
    }
    if (images.size() != source.generators().size()) {
        throw ValidationError("map assigns images to symbols not in the source");
    }
    return GroupMap{std::move(source), std::move(target), std::move(images)};
}

GroupMap GroupMap::identity(const Presentation& p) {
    std::map<GeneratorSymbol, Word> images;
    for (const auto& g : p.generators()) images[g] = Word::generator(g);
    return GroupMap{p, p, std::move(images)};
}

Word apply_map(const GroupMap& f, const Word& w) {
    f.source.validate_word(w);
    Word out;
    for (const Letter& l : w.letters()) {
        const Word& img = f.images.at(l.gen);
        out = out * (l.sign > 0 ? img : img.inverse());
    }
    return free_reduce(out);
}

namespace {

Renaming resolve_collisions(const std::vector<GeneratorSymbol>& taken_list,
                            const std::vector<GeneratorSymbol>& incoming) {
    std::set<std::string> taken(taken_list.begin(), taken_list.end());
    Renaming renaming;
    for (const auto& g : incoming) {
        std::string name = g;
        int suffix = 2;
        while (taken.count(name)) {
            name = g + "_" + std::to_string(suffix++);
        }
        if (name != g) renaming[g] = name;
        taken.insert(name);
    }
    return renaming;
}

}  // namespace

ProductResult free_product(const Presentation& p, const Presentation& q) {
    Renaming renaming = resolve_collisions(p.generators(), q.generators());
    std::vector<GeneratorSymbol> gens = p.generators();
    for (const auto& g : q.generators()) {
        auto it = renaming.find(g);
        gens.push_back(it == renaming.end() ? g : it->second);
    }
    std::vector<Word> rels = p.relators();
    for (const auto& r : q.relators()) rels.push_back(rename_word(r, renaming));
    return ProductResult{Presentation(std::move(gens), std::move(rels)), std::move(renaming)};
}

ProductResult direct_product(const Presentation& p, const Presentation& q) {
    ProductResult out = free_product(p, q);
    std::vector<Word> rels = out.presentation.relators();
    for (const auto& x : p.generators()) {
        for (const auto& y0 : q.generators()) {
            auto it = out.second_renaming.find(y0);
            const GeneratorSymbol& y = it == out.second_renaming.end() ? y0 : it->second;
            Word wx = Word::generator(x), wy = Word::generator(y);
            rels.push_back(wx * wy * wx.inverse() * wy.inverse());
        }
    }
    out.presentation = Presentation(out.presentation.generators(), std::move(rels));
    return out;
}

Presentation quotient_by_normal_closure(const Presentation& p, const std::vector<Word>& ws) {
    std::vector<Word> rels = p.relators();
    for (const auto& w : ws) {
        p.validate_word(w);
        rels.push_back(w);
    }
    return Presentation(p.generators(), std::move(rels));
}

namespace {

Word substitute(const Word& w, const GeneratorSymbol& g, const Word& replacement) {
    Word out;
    for (const Letter& l : w.letters()) {
        if (l.gen == g) {
            out = out * (l.sign > 0 ? replacement : replacement.inverse());
        } else {
            out = out * Word::generator(l.gen, l.sign);
        }
    }
    return free_reduce(out);
}

// Canonical key of a relator up to rotation and inversion.
std::vector<std::pair<std::string, int>> relator_key(const Word& w) {
    std::vector<std::vector<std::pair<std::string, int>>> candidates;
    for (const Word& base : {w, w.inverse()}) {
        for (const Word& rot : cyclic_rotations(base)) {
            std::vector<std::pair<std::string, int>> key;
            for (const Letter& l : rot.letters()) key.emplace_back(l.gen, l.sign);
            candidates.push_back(std::move(key));
        }
    }
    return *std::min_element(candidates.begin(), candidates.end());
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, long budget) {
    std::vector<GeneratorSymbol> gens = p.generators();
    std::vector<Word> rels;
    for (const auto& r : p.relators()) rels.push_back(cyclically_reduce(r));
    std::map<GeneratorSymbol, Word> images;
    for (const auto& g : gens) images[g] = Word::generator(g);

    bool out_of_budget = false;
    auto spend = [&]() {
        if (budget <= 0) {
            out_of_budget = true;
            return false;
        }
        --budget;
        return true;
    };

    bool changed = true;
    while (changed && !out_of_budget) {
        changed = false;

        // Drop trivial relators.
        for (std::size_t i = 0; i < rels.size();) {
            if (rels[i].empty()) {
                if (!spend()) break;
                rels.erase(rels.begin() + i);
                changed = true;
            } else {
                ++i;
            }
        }
        if (out_of_budget) break;

        // Dedupe up to rotation and inversion.
        std::set<std::vector<std::pair<std::string, int>>> seen;
        for (std::size_t i = 0; i < rels.size();) {
            if (!seen.insert(relator_key(rels[i])).second) {
                if (!spend()) break;
                rels.erase(rels.begin() + i);
                changed = true;
            } else {
                ++i;
            }
        }
        if (out_of_budget) break;

        // Eliminate a generator with a single occurrence in some relator.
        bool eliminated = false;
        for (std::size_t ri = 0; ri < rels.size() && !eliminated; ++ri) {
            const auto& ls = rels[ri].letters();
            for (std::size_t pos = 0; pos < ls.size() && !eliminated; ++pos) {
                const GeneratorSymbol g = ls[pos].gen;
                int occurrences = 0;
                for (const Letter& l : ls) {
                    if (l.gen == g) ++occurrences;
                }
                if (occurrences != 1) continue;
                if (!spend()) break;
                // r = a g^e b  =>  g^e = a^-1 b^-1.
                Word a(std::vector<Letter>(ls.begin(), ls.begin() + pos));
                Word b(std::vector<Letter>(ls.begin() + pos + 1, ls.end()));
                Word image = free_reduce(a.inverse() * b.inverse());
                if (ls[pos].sign < 0) image = image.inverse();

                rels.erase(rels.begin() + ri);
                for (auto& r : rels) r = cyclically_reduce(substitute(r, g, image));
                for (auto& [orig, w] : images) w = substitute(w, g, image);
                gens.erase(std::find(gens.begin(), gens.end(), g));
                eliminated = true;
                changed = true;
            }
        }
    }

    TietzeResult result;
    result.presentation = Presentation(std::move(gens), std::move(rels));
    result.fully_simplified = !out_of_budget;
    result.images = std::move(images);
    return result;
}

Word translate(const TietzeResult& t, const Word& w) {
    Word out;
    for (const Letter& l : w.letters()) {
        const Word& img = t.images.at(l.gen);
        out = out * (l.sign > 0 ? img : img.inverse());
    }
    return free_reduce(out);
}

}  // namespace knotpairs
