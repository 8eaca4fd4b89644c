#ifndef KNOTPAIRS_CATALOG_HPP
#define KNOTPAIRS_CATALOG_HPP

#include <string>
#include <vector>

#include "knotpairs/kervaire.hpp"
#include "knotpairs/presentation.hpp"

namespace knotpairs {

struct CatalogValidation {
    std::string abelianization;  // e.g. "Z"
    Verdict weight_one = Verdict::Inconclusive;
    Verdict h2 = Verdict::Inconclusive;
};

struct CatalogEntry {
    std::string name;
    Presentation presentation;
    Word meridian;
    CatalogValidation validation;
};

// Shipped groups: unknot <a|>, trefoil <a,b|aba=bab>, and the torus-knot
// family <a,b|a^p=b^q> for coprime 2 <= p < q <= 7. Torus-knot meridians are
// found by a search over short words a^x b^y with abelianized image +-1 whose
// weight-one enumeration completes; the search result lands in the validation
// record. The list is computed once and cached.
const std::vector<CatalogEntry>& catalog();

// Throws ValidationError when the name is unknown.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace knotpairs

#endif
