#include "knotpairs/constructions.hpp"

namespace knotpairs {

void KnotGroupPair::validate() const {
    if (inclusion.source != boundary || inclusion.target != ambient) {
        throw ValidationError("inclusion endpoints do not match the pair presentations");
    }
    if (meridian_boundary.empty() || meridian_ambient.empty()) {
        throw ValidationError("meridian words must be nonempty");
    }
    boundary.validate_word(meridian_boundary);
    ambient.validate_word(meridian_ambient);
}

std::pair<Presentation, Word> knot_sum(const Presentation& p1, const Word& m1,
                                       const Presentation& p2, const Word& m2) {
    if (m1.empty() || m2.empty()) throw ValidationError("meridian words must be nonempty");
    p1.validate_word(m1);
    p2.validate_word(m2);
    ProductResult fp = free_product(p1, p2);
    Word m2_renamed = rename_word(m2, fp.second_renaming);
    std::vector<Word> rels = fp.presentation.relators();
    rels.push_back(free_reduce(m1 * m2_renamed.inverse()));
    return {Presentation(fp.presentation.generators(), std::move(rels)), m1};
}

SpinResult frame_twist_spin(const SpinInput& input) {
    input.pair.validate();
    for (const auto& x : input.m_group.generators()) {
        if (!input.tau_degrees.count(x)) {
            throw ValidationError("missing degree assignment for generator '" + x + "'");
        }
    }

    // Boundary group: pi_1(M) x G.
    ProductResult bdry = direct_product(input.m_group, input.pair.boundary);
    Word boundary_meridian =
        rename_word(input.pair.meridian_boundary, bdry.second_renaming);

    // Knot group: pi_1(M) x Gbar with one twist relator per m_group generator.
    ProductResult knot = direct_product(input.m_group, input.pair.ambient);
    Word gbar = rename_word(input.pair.meridian_ambient, knot.second_renaming);
    std::vector<Word> rels = knot.presentation.relators();
    for (const auto& x : input.m_group.generators()) {
        long deg = input.tau_degrees.at(x);
        rels.push_back(free_reduce(Word::generator(x, -1) * gbar.pow(static_cast<int>(deg))));
    }
    Presentation knot_group(knot.presentation.generators(), std::move(rels));

    // Inclusion: identity on the m_group factor, phi on the boundary factor,
    // composed into the quotient.
    std::map<GeneratorSymbol, Word> images;
    for (const auto& x : input.m_group.generators()) images[x] = Word::generator(x);
    for (const auto& y : input.pair.boundary.generators()) {
        auto it = bdry.second_renaming.find(y);
        const GeneratorSymbol& named = it == bdry.second_renaming.end() ? y : it->second;
        Word phi_y = apply_map(input.pair.inclusion, Word::generator(y));
        images[named] = rename_word(phi_y, knot.second_renaming);
    }
    GroupMap inclusion = GroupMap::make(bdry.presentation, knot_group, std::move(images));

    return SpinResult{std::move(knot_group), std::move(bdry.presentation),
                      std::move(inclusion), gbar, boundary_meridian};
}

Presentation multi_component_spin(const std::vector<SpinInput>& inputs) {
    if (inputs.empty()) throw ValidationError("multi-component spin needs at least one input");
    SpinResult first = frame_twist_spin(inputs[0]);
    Presentation acc = first.knot_group;
    Word prev_meridian = first.knot_meridian;
    for (std::size_t i = 1; i < inputs.size(); ++i) {
        SpinResult next = frame_twist_spin(inputs[i]);
        ProductResult fp = free_product(acc, next.knot_group);
        Word next_meridian = rename_word(next.knot_meridian, fp.second_renaming);
        std::vector<Word> rels = fp.presentation.relators();
        rels.push_back(free_reduce(prev_meridian * next_meridian.inverse()));
        acc = Presentation(fp.presentation.generators(), std::move(rels));
        prev_meridian = next_meridian;
    }
    return acc;
}

SuspensionResult suspension(const KnotGroupPair& pair) {
    pair.validate();
    ProductResult fp = free_product(pair.ambient, pair.ambient);
    std::vector<Word> rels = fp.presentation.relators();
    for (const auto& gamma : pair.boundary.generators()) {
        Word plus = apply_map(pair.inclusion, Word::generator(gamma));
        Word minus = rename_word(plus, fp.second_renaming);
        rels.push_back(free_reduce(plus * minus.inverse()));
    }
    Presentation boundary_group(fp.presentation.generators(), std::move(rels));

    // Projection Gbar * Gbar -> Gbar, identity on each factor.
    std::map<GeneratorSymbol, Word> images;
    for (const auto& x : pair.ambient.generators()) {
        images[x] = Word::generator(x);
        auto it = fp.second_renaming.find(x);
        const GeneratorSymbol& copy = it == fp.second_renaming.end() ? x : it->second;
        images[copy] = Word::generator(x);
    }
    GroupMap inclusion = GroupMap::make(boundary_group, pair.ambient, std::move(images));
    return SuspensionResult{pair.ambient, std::move(boundary_group), std::move(inclusion)};
}

StratumReport single_stratum_report(const Presentation& link_knot_group, const Word& lambda,
                                    const Presentation& m_group,
                                    StratumConnectivity connectivity, long budget) {
    link_knot_group.validate_word(lambda);
    StratumReport r;
    r.connectivity = connectivity;
    switch (connectivity) {
        case StratumConnectivity::TwoConnected:
            r.kind = "isomorphism";
            r.boundary_group = link_knot_group;
            r.kervaire = kervaire_report(link_knot_group, lambda, budget);
            r.constraints = {"boundary group = link knot group",
                             "image of lambda remains weight one"};
            break;
        case StratumConnectivity::SimplyConnected:
            r.kind = "surjection";
            r.constraints = {"boundary group is a quotient of the link knot group",
                             "no presentation of the boundary group is computable"};
            break;
        case StratumConnectivity::General:
            r.kind = "exact_sequence";
            r.constraints = {
                "pi_1(link knot complement) -> boundary group -> pi_1(stratum) -> 1 is exact",
                "the image of lambda generates an infinite cyclic subgroup",
                "pi_1(stratum) presented by: " + std::to_string(m_group.generators().size()) +
                    " generators, " + std::to_string(m_group.relators().size()) + " relators"};
            break;
    }
    return r;
}

}  // namespace knotpairs
