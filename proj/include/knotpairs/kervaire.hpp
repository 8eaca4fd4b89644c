#ifndef KNOTPAIRS_KERVAIRE_HPP
#define KNOTPAIRS_KERVAIRE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "knotpairs/coset.hpp"
#include "knotpairs/intmat.hpp"
#include "knotpairs/presentation.hpp"

namespace knotpairs {

enum class Verdict { Satisfied, Violated, Inconclusive };

std::string to_string(Verdict v);

struct ConditionStatus {
    Verdict verdict = Verdict::Inconclusive;
    std::string detail;        // human-readable witness / reason
    nlohmann::json evidence;   // machine-checkable data (SNF diagonal, stats, ...)
};

// The four necessary conditions on a knot group:
// finitely presentable, abelianization Z, H2 = 0, weight-one element.
struct KervaireReport {
    ConditionStatus finitely_presentable;
    ConditionStatus abelianization_z;
    ConditionStatus h2_zero;
    ConditionStatus weight_one;

    bool all_satisfied() const;
};

struct PairReport {
    KervaireReport report_g;
    KervaireReport report_gbar;
    ConditionStatus map_consistency;
    ConditionStatus meridian_match;
    bool map_synthesized = false;  // true when the canonical map g -> gbar was built

    bool all_satisfied() const;
};

ConditionStatus check_abelianization_Z(const Presentation& p);

// Deficiency-1 shortcut: a presentation with one more generator than relator
// and H1 = Z presents a group with H2 = 0 (the presentation 2-complex has
// Euler characteristic 0 and H1 rank 1, so its H2, which surjects onto
// H2 of the group, has rank 0). Anything else is Inconclusive.
ConditionStatus check_h2(const Presentation& p);

// Satisfied iff killing g provably trivializes the group; Violated iff the
// quotient has nontrivial abelianization; otherwise Inconclusive.
ConditionStatus check_weight_one(const Presentation& p, const Word& g, long budget = 100000);

KervaireReport kervaire_report(const Presentation& p, const Word& g, long budget = 100000);

// Pair conditions: both single reports, the abelianized map consistency of
// phi, and the meridian compatibility phi(g) = gbar (abelianized). When phi
// is absent, the canonical map through the abelianization (g -> gbar) is
// synthesized, provided G abelianizes to Z with g of abelianized image +-1.
PairReport pair_report(const Presentation& g_pres, const Word& g, const Presentation& gbar_pres,
                       const Word& gbar, const std::optional<GroupMap>& phi,
                       long budget = 100000);

// Image of w under the projection to the infinite cyclic abelianization of p.
// Requires abelianization(p) = Z.
mpz_class abelianized_image_in_z(const Presentation& p, const Word& w);

}  // namespace knotpairs

#endif
