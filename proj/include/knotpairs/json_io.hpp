#ifndef KNOTPAIRS_JSON_IO_HPP
#define KNOTPAIRS_JSON_IO_HPP

#include <json.hpp>

#include "knotpairs/alexander.hpp"
#include "knotpairs/catalog.hpp"
#include "knotpairs/constructions.hpp"
#include "knotpairs/coset.hpp"
#include "knotpairs/homology.hpp"
#include "knotpairs/intmat.hpp"
#include "knotpairs/kervaire.hpp"
#include "knotpairs/presentation.hpp"

namespace knotpairs {

using nlohmann::json;

// Words and presentations: relators/words are arrays of [name, +-1] pairs.
json word_to_json(const Word& w);
Word word_from_json(const json& j);

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

// Matrices as arrays of arrays of decimal strings.
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json invariants_to_json(const AbelianGroupInvariants& inv);
json graded_to_json(const GradedAbelian& g);

json map_to_json(const GroupMap& f);
GroupMap map_from_json(const json& j);

json pair_to_json(const KnotGroupPair& pair);
KnotGroupPair pair_from_json(const json& j);

json condition_to_json(const ConditionStatus& c);
json kervaire_to_json(const KervaireReport& r);
json pair_report_to_json(const PairReport& r);

json coset_table_to_json(const CosetTable& t);
json enumeration_to_json(const EnumerationOutcome& o);

// Complex files: a JSON array of maximal simplices as vertex-id arrays.
SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& k);

json stratum_to_json(const StratumReport& r);
json pcomplex_to_json(const PComplexReport& r);
json catalog_entry_to_json(const CatalogEntry& e);

}  // namespace knotpairs

#endif
