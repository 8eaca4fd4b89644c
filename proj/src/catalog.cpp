#include "knotpairs/catalog.hpp"

#include <numeric>

#include "knotpairs/parse.hpp"

namespace knotpairs {

namespace {

CatalogEntry validated(std::string name, Presentation p, Word meridian) {
    CatalogEntry e{std::move(name), std::move(p), std::move(meridian), {}};
    e.validation.abelianization = abelianization(e.presentation).describe();
    e.validation.weight_one = check_weight_one(e.presentation, e.meridian).verdict;
    e.validation.h2 = check_h2(e.presentation).verdict;
    if (e.validation.abelianization != "Z" || e.validation.weight_one != Verdict::Satisfied) {
        throw ValidationError("catalog entry '" + e.name + "' failed validation");
    }
    return e;
}

Word find_torus_meridian(const Presentation& p) {
    // Candidates a^x b^y with small exponents, abelianized image +-1, and a
    // completing index-1 enumeration of the meridian quotient.
    for (int radius = 1; radius <= 8; ++radius) {
        for (int x = -radius; x <= radius; ++x) {
            for (int y = -radius; y <= radius; ++y) {
                if (std::max(std::abs(x), std::abs(y)) != radius) continue;
                Word w = free_reduce(Word::generator("a").pow(x) * Word::generator("b").pow(y));
                if (w.empty()) continue;
                if (abs(abelianized_image_in_z(p, w)) != 1) continue;
                if (check_weight_one(p, w).verdict == Verdict::Satisfied) return w;
            }
        }
    }
    throw ValidationError("no validated meridian found");
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    {
        Presentation p = parse_presentation("< a | >");
        out.push_back(validated("unknot", p, parse_word("a", p)));
    }
    {
        Presentation p = parse_presentation("< a, b | aba = bab >");
        out.push_back(validated("trefoil", p, parse_word("a", p)));
    }
    for (int q = 3; q <= 7; ++q) {
        for (int pp = 2; pp < q; ++pp) {
            if (std::gcd(pp, q) != 1) continue;
            Presentation pres = parse_presentation(
                "< a, b | a^" + std::to_string(pp) + " = b^" + std::to_string(q) + " >");
            std::string name = "torus(" + std::to_string(pp) + "," + std::to_string(q) + ")";
            out.push_back(validated(std::move(name), pres, find_torus_meridian(pres)));
        }
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog()) {
        if (e.name == name) return e;
    }
    throw ValidationError("unknown catalog entry '" + name + "'");
}

}  // namespace knotpairs
