#include "knotpairs/json_io.hpp"

#include "knotpairs/parse.hpp"

namespace knotpairs {

json word_to_json(const Word& w) {
    json out = json::array();
    for (const auto& l : w.letters()) out.push_back(json::array({l.gen, l.sign}));
    return out;
}

Word word_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("word must be a JSON array");
    std::vector<Letter> letters;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer()) {
            throw ValidationError("word letter must be [name, sign]");
        }
        int sign = e[1].get<int>();
        if (sign != 1 && sign != -1) throw ValidationError("letter sign must be +-1");
        letters.push_back(Letter{e[0].get<std::string>(), sign});
    }
    return Word(std::move(letters));
}

json presentation_to_json(const Presentation& p) {
    json rels = json::array();
    for (const auto& r : p.relators()) rels.push_back(word_to_json(r));
    return json{{"generators", p.generators()}, {"relators", rels}};
}

Presentation presentation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("relators")) {
        throw ValidationError("presentation must have 'generators' and 'relators'");
    }
    std::vector<GeneratorSymbol> gens = j.at("generators").get<std::vector<std::string>>();
    std::vector<Word> rels;
    for (const auto& r : j.at("relators")) rels.push_back(word_from_json(r));
    return Presentation(std::move(gens), std::move(rels));
}

json matrix_to_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        out.push_back(std::move(row));
    }
    return out;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("matrix must be a JSON array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw ValidationError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            m.at(i, c) = mpz_class(j[i][c].get<std::string>());
        }
    }
    return m;
}

json invariants_to_json(const AbelianGroupInvariants& inv) {
    json torsion = json::array();
    for (const auto& t : inv.torsion) torsion.push_back(t.get_str());
    return json{{"free_rank", inv.free_rank},
                {"torsion", torsion},
                {"description", inv.describe()}};
}

json graded_to_json(const GradedAbelian& g) {
    json out = json::array();
    for (const auto& inv : g.groups) out.push_back(invariants_to_json(inv));
    return out;
}

json map_to_json(const GroupMap& f) {
    json images = json::object();
    for (const auto& [g, w] : f.images) images[g] = word_to_json(w);
    return json{{"source", presentation_to_json(f.source)},
                {"target", presentation_to_json(f.target)},
                {"images", images}};
}

GroupMap map_from_json(const json& j) {
    Presentation source = presentation_from_json(j.at("source"));
    Presentation target = presentation_from_json(j.at("target"));
    std::map<GeneratorSymbol, Word> images;
    for (const auto& [g, w] : j.at("images").items()) images[g] = word_from_json(w);
    return GroupMap::make(std::move(source), std::move(target), std::move(images));
}

json pair_to_json(const KnotGroupPair& pair) {
    return json{{"boundary", presentation_to_json(pair.boundary)},
                {"ambient", presentation_to_json(pair.ambient)},
                {"inclusion", map_to_json(pair.inclusion)},
                {"meridian_boundary", word_to_json(pair.meridian_boundary)},
                {"meridian_ambient", word_to_json(pair.meridian_ambient)}};
}

KnotGroupPair pair_from_json(const json& j) {
    KnotGroupPair pair{presentation_from_json(j.at("boundary")),
                       presentation_from_json(j.at("ambient")),
                       map_from_json(j.at("inclusion")),
                       word_from_json(j.at("meridian_boundary")),
                       word_from_json(j.at("meridian_ambient"))};
    pair.validate();
    return pair;
}

json condition_to_json(const ConditionStatus& c) {
    return json{{"status", to_string(c.verdict)},
                {"detail", c.detail},
                {"evidence", c.evidence}};
}

json kervaire_to_json(const KervaireReport& r) {
    return json{{"finitely_presentable", condition_to_json(r.finitely_presentable)},
                {"abelianization_z", condition_to_json(r.abelianization_z)},
                {"h2_zero", condition_to_json(r.h2_zero)},
                {"weight_one", condition_to_json(r.weight_one)},
                {"all_satisfied", r.all_satisfied()}};
}

json pair_report_to_json(const PairReport& r) {
    return json{{"boundary", kervaire_to_json(r.report_g)},
                {"ambient", kervaire_to_json(r.report_gbar)},
                {"map_consistency", condition_to_json(r.map_consistency)},
                {"meridian_match", condition_to_json(r.meridian_match)},
                {"map_synthesized", r.map_synthesized},
                {"all_satisfied", r.all_satisfied()}};
}

json coset_table_to_json(const CosetTable& t) {
    return json{{"num_generators", t.num_generators}, {"rows", t.rows}};
}

json enumeration_to_json(const EnumerationOutcome& o) {
    json out{{"completed", o.completed},
             {"budget", o.budget},
             {"definitions", o.stats.definitions},
             {"coincidences", o.stats.coincidences}};
    if (o.completed) {
        out["index"] = o.index;
        out["table"] = coset_table_to_json(o.table);
    } else {
        out["cosets_defined"] = o.cosets_defined;
    }
    return out;
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("complex must be a JSON array of simplices");
    std::vector<std::vector<int>> maximal;
    for (const auto& s : j) maximal.push_back(s.get<std::vector<int>>());
    return SimplicialComplex::from_maximal(maximal);
}

json complex_to_json(const SimplicialComplex& k) {
    json out = json::array();
    for (int d = 0; d <= k.dimension(); ++d) {
        for (const auto& s : k.simplices(d)) out.push_back(s);
    }
    return out;
}

json stratum_to_json(const StratumReport& r) {
    json out{{"kind", r.kind}, {"constraints", r.constraints}};
    switch (r.connectivity) {
        case StratumConnectivity::SimplyConnected: out["connectivity"] = "simply_connected"; break;
        case StratumConnectivity::TwoConnected: out["connectivity"] = "two_connected"; break;
        case StratumConnectivity::General: out["connectivity"] = "general"; break;
    }
    if (r.boundary_group) {
        out["boundary_group"] = presentation_to_json(*r.boundary_group);
        out["boundary_group_text"] = serialize_presentation(*r.boundary_group);
    }
    if (r.kervaire) out["kervaire"] = kervaire_to_json(*r.kervaire);
    return out;
}

json pcomplex_to_json(const PComplexReport& r) {
    return json{{"cover_homology", json::array({r.cover_h0, r.cover_h1, r.cover_h2, r.cover_h3})},
                {"quotient_homology", graded_to_json(r.quotient_homology)},
                {"milnor_consistent", r.milnor_consistent},
                {"homology_circle", r.homology_circle},
                {"p_at_one", r.p_at_one.get_str()}};
}

json catalog_entry_to_json(const CatalogEntry& e) {
    return json{{"name", e.name},
                {"presentation", presentation_to_json(e.presentation)},
                {"presentation_text", serialize_presentation(e.presentation)},
                {"meridian", word_to_json(e.meridian)},
                {"meridian_text", serialize_word(e.meridian)},
                {"validation",
                 json{{"abelianization", e.validation.abelianization},
                      {"weight_one", to_string(e.validation.weight_one)},
                      {"h2", to_string(e.validation.h2)}}}};
}

}  // namespace knotpairs
