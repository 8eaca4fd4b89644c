#ifndef KNOTPAIRS_COSET_HPP
#define KNOTPAIRS_COSET_HPP

#include <cstdint>
#include <vector>

#include "knotpairs/presentation.hpp"

namespace knotpairs {

// Completed coset action table: row per coset, one column per generator and
// per inverse generator (column 2g for x_g, 2g+1 for x_g^-1).
struct CosetTable {
    std::size_t num_generators = 0;
    std::vector<std::vector<long>> rows;  // entries are coset ids, 0-based

    long act(long coset, std::size_t gen, int sign) const {
        return rows[coset][2 * gen + (sign > 0 ? 0 : 1)];
    }
};

struct EnumerationStats {
    long definitions = 0;
    long coincidences = 0;
    long live_cosets = 0;
};

struct EnumerationOutcome {
    bool completed = false;
    long index = 0;             // valid when completed
    long cosets_defined = 0;    // valid when exhausted
    long budget = 0;
    EnumerationStats stats;
    CosetTable table;           // compacted; populated only when completed
};

// Todd-Coxeter enumeration of the cosets of <subgroup> in the group presented
// by p. Deduction-driven: relator scans are exhausted before each new coset
// definition; coincidences are processed immediately with the smaller id
// surviving. Completed(k) is a proof that the index is exactly k; Exhausted
// carries no mathematical verdict.
EnumerationOutcome enumerate_cosets(const Presentation& p, const std::vector<Word>& subgroup,
                                    long budget = 100000);

struct TrivialityVerdict {
    bool trivial = false;  // false means inconclusive, never "nontrivial"
    EnumerationOutcome evidence;
};

TrivialityVerdict is_trivial_group(const Presentation& p, long budget = 100000);

}  // namespace knotpairs

#endif
