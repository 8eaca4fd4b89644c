#ifndef KNOTPAIRS_CONSTRUCTIONS_HPP
#define KNOTPAIRS_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <vector>

#include "knotpairs/kervaire.hpp"
#include "knotpairs/presentation.hpp"

namespace knotpairs {

// A boundary/ambient group pair with the inclusion-induced map and
// distinguished meridian words on both sides.
struct KnotGroupPair {
    Presentation boundary;       // G
    Presentation ambient;        // Gbar
    GroupMap inclusion;          // phi: G -> Gbar
    Word meridian_boundary;      // g
    Word meridian_ambient;       // gbar

    void validate() const;
};

struct SpinInput {
    KnotGroupPair pair;
    Presentation m_group;                     // pi_1(M)
    std::map<GeneratorSymbol, long> tau_degrees;  // deg(tau(x)) per m_group generator
};

struct SpinResult {
    Presentation knot_group;      // (pi_1(M) x Gbar) / (x^-1 gbar^deg(tau(x)))
    Presentation boundary_group;  // pi_1(M) x G
    GroupMap inclusion;           // boundary_group -> knot_group
    Word knot_meridian;           // image of gbar
    Word boundary_meridian;       // image of g
};

// Classical amalgamation over the meridian: free product plus one relator
// identifying the two meridians.
std::pair<Presentation, Word> knot_sum(const Presentation& p1, const Word& m1,
                                       const Presentation& p2, const Word& m2);

SpinResult frame_twist_spin(const SpinInput& input);

// Free product of the individual spin knot groups with consecutive central
// meridians identified.
Presentation multi_component_spin(const std::vector<SpinInput>& inputs);

struct SuspensionResult {
    Presentation knot_group;      // the ambient presentation, unchanged
    Presentation boundary_group;  // Gbar * Gbar amalgamated over G
    GroupMap inclusion;
};

SuspensionResult suspension(const KnotGroupPair& pair);

enum class StratumConnectivity { SimplyConnected, TwoConnected, General };

struct StratumReport {
    StratumConnectivity connectivity;
    std::string kind;  // "isomorphism", "surjection", or "exact_sequence"
    std::optional<Presentation> boundary_group;   // two-connected case only
    std::optional<KervaireReport> kervaire;       // two-connected case only
    std::vector<std::string> constraints;         // textual exactness statement
};

// Single-stratum consequences: with a 2-connected stratum the boundary group
// is the link knot group itself; simply connected gives only a surjection
// certificate; in general only the three-term exact sequence is reported.
StratumReport single_stratum_report(const Presentation& link_knot_group, const Word& lambda,
                                    const Presentation& m_group,
                                    StratumConnectivity connectivity, long budget = 100000);

}  // namespace knotpairs

#endif
