#include "knotpairs/kervaire.hpp"

namespace knotpairs {

using nlohmann::json;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Satisfied: return "satisfied";
        case Verdict::Violated: return "violated";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool KervaireReport::all_satisfied() const {
    return finitely_presentable.verdict == Verdict::Satisfied &&
           abelianization_z.verdict == Verdict::Satisfied &&
           h2_zero.verdict == Verdict::Satisfied && weight_one.verdict == Verdict::Satisfied;
}

bool PairReport::all_satisfied() const {
    return report_g.all_satisfied() && report_gbar.all_satisfied() &&
           map_consistency.verdict == Verdict::Satisfied &&
           meridian_match.verdict == Verdict::Satisfied;
}

namespace {

json invariants_json(const AbelianGroupInvariants& inv) {
    json torsion = json::array();
    for (const auto& d : inv.torsion) torsion.push_back(d.get_str());
    return json{{"free_rank", inv.free_rank}, {"torsion", torsion}};
}

json stats_json(const EnumerationOutcome& o) {
    return json{{"completed", o.completed},
                {"index", o.index},
                {"cosets_defined", o.cosets_defined},
                {"budget", o.budget},
                {"definitions", o.stats.definitions},
                {"coincidences", o.stats.coincidences}};
}

}  // namespace

ConditionStatus check_abelianization_Z(const Presentation& p) {
    AbelianGroupInvariants inv = abelianization(p);
    ConditionStatus s;
    s.evidence = invariants_json(inv);
    if (inv.is_infinite_cyclic()) {
        s.verdict = Verdict::Satisfied;
        s.detail = "abelianization is Z";
    } else {
        s.verdict = Verdict::Violated;
        s.detail = "abelianization is " + inv.describe();
    }
    return s;
}

ConditionStatus check_h2(const Presentation& p) {
    ConditionStatus s;
    long def = p.deficiency();
    AbelianGroupInvariants inv = abelianization(p);
    s.evidence = json{{"deficiency", def}, {"abelianization", invariants_json(inv)}};
    if (def >= 1 && inv.is_infinite_cyclic()) {
        s.verdict = Verdict::Satisfied;
        s.detail = "deficiency-1 presentation with H1 = Z forces H2 = 0";
        s.evidence["euler_characteristic"] =
            1 - static_cast<long>(p.generators().size()) + static_cast<long>(p.relators().size());
    } else {
        s.verdict = Verdict::Inconclusive;
        s.detail = "H2 of the group is not decidable from this presentation";
    }
    return s;
}

ConditionStatus check_weight_one(const Presentation& p, const Word& g, long budget) {
    p.validate_word(g);
    Presentation quotient = quotient_by_normal_closure(p, {g});
    AbelianGroupInvariants inv = abelianization(quotient);
    ConditionStatus s;
    if (!inv.is_trivial()) {
        s.verdict = Verdict::Violated;
        s.detail = "quotient by the normal closure has abelianization " + inv.describe();
        s.evidence = json{{"quotient_abelianization", invariants_json(inv)}};
        return s;
    }
    TrivialityVerdict t = is_trivial_group(quotient, budget);
    s.evidence = json{{"quotient_abelianization", invariants_json(inv)},
                      {"enumeration", stats_json(t.evidence)}};
    if (t.trivial) {
        s.verdict = Verdict::Satisfied;
        s.detail = "coset enumeration of the quotient completed with index 1";
    } else {
        s.verdict = Verdict::Inconclusive;
        s.detail = "enumeration budget exhausted; no verdict";
    }
    return s;
}

KervaireReport kervaire_report(const Presentation& p, const Word& g, long budget) {
    KervaireReport r;
    r.finitely_presentable.verdict = Verdict::Satisfied;
    r.finitely_presentable.detail =
        "finite presentation with " + std::to_string(p.generators().size()) + " generators, " +
        std::to_string(p.relators().size()) + " relators";
    r.abelianization_z = check_abelianization_Z(p);
    r.h2_zero = check_h2(p);
    r.weight_one = check_weight_one(p, g, budget);
    return r;
}

mpz_class abelianized_image_in_z(const Presentation& p, const Word& w) {
    AbelianGroupInvariants inv = abelianization(p);
    if (!inv.is_infinite_cyclic()) {
        throw ValidationError("abelianization is not infinite cyclic");
    }
    SmithResult snf = smith_normal_form(relator_matrix(p));
    std::size_t n = p.generators().size();
    std::size_t diag = std::min(relator_matrix(p).rows(), n);
    std::size_t free_col = n;
    for (std::size_t j = 0; j < n; ++j) {
        if (j >= diag || snf.d.at(j, j) == 0) {
            free_col = j;
            break;
        }
    }
    std::vector<mpz_class> v = exponent_vector(w, p);
    mpz_class image = 0;
    for (std::size_t i = 0; i < n; ++i) image += v[i] * snf.v.at(i, free_col);
    return image;
}

namespace {

// Corollary-style canonical map: G -> Z (abelianization, normalized so that
// g -> +1) followed by k -> gbar^k.
std::optional<GroupMap> synthesize_map(const Presentation& g_pres, const Word& g,
                                       const Presentation& gbar_pres, const Word& gbar) {
    AbelianGroupInvariants inv = abelianization(g_pres);
    if (!inv.is_infinite_cyclic()) return std::nullopt;
    mpz_class gs = abelianized_image_in_z(g_pres, g);
    if (gs != 1 && gs != -1) return std::nullopt;
    int orient = gs == 1 ? 1 : -1;
    std::map<GeneratorSymbol, Word> images;
    for (const auto& x : g_pres.generators()) {
        mpz_class k = orient * abelianized_image_in_z(g_pres, Word::generator(x));
        if (!k.fits_slong_p()) return std::nullopt;
        images[x] = free_reduce(gbar.pow(static_cast<long>(k.get_si())));
    }
    return GroupMap::make(g_pres, gbar_pres, std::move(images));
}

}  // namespace

PairReport pair_report(const Presentation& g_pres, const Word& g, const Presentation& gbar_pres,
                       const Word& gbar, const std::optional<GroupMap>& phi, long budget) {
    PairReport r;
    r.report_g = kervaire_report(g_pres, g, budget);
    r.report_gbar = kervaire_report(gbar_pres, gbar, budget);

    std::optional<GroupMap> map = phi;
    if (!map) {
        map = synthesize_map(g_pres, g, gbar_pres, gbar);
        r.map_synthesized = true;
        if (!map) {
            r.map_consistency.verdict = Verdict::Inconclusive;
            r.map_consistency.detail =
                "no map supplied and the canonical map requires abelianization Z "
                "with g of abelianized image +-1";
            r.meridian_match = r.map_consistency;
            return r;
        }
    } else {
        if (map->source != g_pres || map->target != gbar_pres) {
            throw ValidationError("map endpoints do not match the given presentations");
        }
    }

    MapConsistency mc = verify_map_abelianized(*map);
    if (mc.consistent) {
        r.map_consistency.verdict = Verdict::Satisfied;
        r.map_consistency.detail = "every source relator maps into the target relation lattice";
    } else {
        r.map_consistency.verdict = Verdict::Violated;
        r.map_consistency.detail =
            "relator " + std::to_string(mc.violated_relator) + " has nonzero abelianized image";
        r.map_consistency.evidence = json{{"violated_relator", mc.violated_relator}};
    }

    // phi(g) = gbar checked at the abelianized level (necessary condition).
    Word image = apply_map(*map, g);
    std::vector<mpz_class> vi = exponent_vector(image, gbar_pres);
    std::vector<mpz_class> vg = exponent_vector(free_reduce(gbar), gbar_pres);
    std::vector<mpz_class> diff(vi.size());
    for (std::size_t i = 0; i < vi.size(); ++i) diff[i] = vi[i] - vg[i];
    bool match = in_row_space(relator_matrix(gbar_pres), diff);
    r.meridian_match.verdict = match ? Verdict::Satisfied : Verdict::Violated;
    r.meridian_match.detail = match
        ? "abelianized phi(g) equals abelianized gbar"
        : "abelianized phi(g) differs from abelianized gbar";
    r.meridian_match.evidence = json{{"check", "abelianized"},
                                     {"synthesized_map", r.map_synthesized}};
    return r;
}

}  // namespace knotpairs
