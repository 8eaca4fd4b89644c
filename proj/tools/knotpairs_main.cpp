#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "knotpairs/json_io.hpp"
#include "knotpairs/parse.hpp"

using namespace knotpairs;

namespace {

struct Options {
    bool json = false;
    bool strict = false;
    bool strict_inconclusive = false;
    bool simplify = false;
    long budget = 100000;
};

std::string load_text(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw ValidationError("cannot read file '" + arg.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("invalid JSON in '" + path + "': " + e.what());
    }
}

// A presentation argument is inline grammar text, @file, or a catalog name.
struct ResolvedGroup {
    Presentation presentation;
    std::optional<Word> default_meridian;
};

ResolvedGroup resolve_group(const std::string& arg) {
    std::string text = load_text(arg);
    std::string stripped = text;
    stripped.erase(0, stripped.find_first_not_of(" \t\r\n"));
    if (!stripped.empty() && stripped[0] == '<') {
        return {parse_presentation(text), std::nullopt};
    }
    if (!stripped.empty() && stripped[0] == '{') {
        return {presentation_from_json(json::parse(text)), std::nullopt};
    }
    const CatalogEntry& e = catalog_entry(stripped.substr(0, stripped.find_last_not_of(" \t\r\n") + 1));
    return {e.presentation, e.meridian};
}

Word require_meridian(const ResolvedGroup& g, const std::string& meridian_arg,
                      const std::string& role) {
    if (!meridian_arg.empty()) return parse_word(meridian_arg, g.presentation);
    if (g.default_meridian) return *g.default_meridian;
    throw ValidationError("no meridian given for " + role +
                          " and the presentation is not a catalog entry");
}

std::map<GeneratorSymbol, long> parse_tau(const std::string& arg, const Presentation& m) {
    std::map<GeneratorSymbol, long> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("--tau entries must look like g=k");
        std::string gen = item.substr(0, eq);
        if (!m.has_generator(gen)) throw ValidationError("unknown --tau generator '" + gen + "'");
        try {
            out[gen] = std::stol(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ValidationError("invalid --tau degree in '" + item + "'");
        }
    }
    return out;
}

int verdict_exit(const Options& opt, const std::vector<Verdict>& verdicts) {
    for (Verdict v : verdicts) {
        if (opt.strict && v == Verdict::Violated) return 1;
        if (opt.strict_inconclusive && v == Verdict::Inconclusive) return 1;
    }
    return 0;
}

std::vector<Verdict> report_verdicts(const KervaireReport& r) {
    return {r.finitely_presentable.verdict, r.abelianization_z.verdict, r.h2_zero.verdict,
            r.weight_one.verdict};
}

void print_condition(const std::string& name, const ConditionStatus& c) {
    std::cout << "  " << name << ": " << to_string(c.verdict);
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
}

void print_report(const KervaireReport& r) {
    print_condition("finitely presentable", r.finitely_presentable);
    print_condition("abelianization = Z", r.abelianization_z);
    print_condition("H2 = 0", r.h2_zero);
    print_condition("weight one", r.weight_one);
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

Presentation maybe_simplify(const Options& opt, const Presentation& p, Word* carried = nullptr) {
    if (!opt.simplify) return p;
    TietzeResult t = tietze_simplify(p);
    if (carried) *carried = translate(t, *carried);
    return t.presentation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calculus of knot-group pairs: presentations, coset enumeration, "
                 "necessary-condition checkers, constructions, homology"};
    app.require_subcommand(1);

    Options opt;
    std::string presentation_arg, presentation2_arg, meridian_arg, meridian2_arg;
    std::string pair_path, m_arg, tau_spec, complex_path, poly_text, connectivity = "two";
    std::string catalog_name;
    int ambient = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json, "emit JSON");
        cmd->add_option("--budget", opt.budget, "coset enumeration budget")->check(CLI::PositiveNumber);
        cmd->add_flag("--strict", opt.strict, "exit 1 on Violated verdicts");
        cmd->add_flag("--strict-inconclusive", opt.strict_inconclusive,
                      "exit 1 on Inconclusive verdicts too");
    };

    auto* cmd_parse = app.add_subcommand("parse", "parse and echo a presentation");
    cmd_parse->add_option("--presentation", presentation_arg, "grammar text, @file, or catalog name")
        ->required();
    cmd_parse->add_flag("--simplify", opt.simplify, "apply safe Tietze moves");
    add_common(cmd_parse);

    auto* cmd_ab = app.add_subcommand("abelianize", "invariant factors of the abelianization");
    cmd_ab->add_option("--presentation", presentation_arg)->required();
    add_common(cmd_ab);

    auto* cmd_kerv = app.add_subcommand("kervaire", "necessary-condition report for one group");
    cmd_kerv->add_option("--presentation", presentation_arg)->required();
    cmd_kerv->add_option("--meridian", meridian_arg, "distinguished weight-one candidate");
    add_common(cmd_kerv);

    auto* cmd_pair = app.add_subcommand("pair", "condition report for a boundary/ambient pair");
    cmd_pair->add_option("--pair", pair_path, "pair JSON file");
    cmd_pair->add_option("--presentation", presentation_arg, "boundary group");
    cmd_pair->add_option("--meridian", meridian_arg, "boundary meridian");
    cmd_pair->add_option("--presentation2", presentation2_arg, "ambient group");
    cmd_pair->add_option("--meridian2", meridian2_arg, "ambient meridian");
    add_common(cmd_pair);

    auto* cmd_sum = app.add_subcommand("sum", "knot sum of two groups along meridians");
    cmd_sum->add_option("--presentation", presentation_arg)->required();
    cmd_sum->add_option("--meridian", meridian_arg);
    cmd_sum->add_option("--presentation2", presentation2_arg)->required();
    cmd_sum->add_option("--meridian2", meridian2_arg);
    cmd_sum->add_flag("--simplify", opt.simplify);
    add_common(cmd_sum);

    auto* cmd_spin = app.add_subcommand("spin", "frame twist-spin of a pair");
    cmd_spin->add_option("--pair", pair_path, "pair JSON file")->required();
    cmd_spin->add_option("--m", m_arg, "presentation of pi_1 of the spinning manifold")->required();
    cmd_spin->add_option("--tau", tau_spec, "framing degrees g=k[,g=k]*");
    cmd_spin->add_flag("--simplify", opt.simplify);
    add_common(cmd_spin);

    auto* cmd_susp = app.add_subcommand("suspend", "suspension of a pair");
    cmd_susp->add_option("--pair", pair_path)->required();
    cmd_susp->add_flag("--simplify", opt.simplify);
    add_common(cmd_susp);

    auto* cmd_stratum = app.add_subcommand("stratum", "single-stratum boundary-group report");
    cmd_stratum->add_option("--presentation", presentation_arg, "link knot group")->required();
    cmd_stratum->add_option("--meridian", meridian_arg, "link meridian lambda")->required();
    cmd_stratum->add_option("--m", m_arg, "pi_1 of the stratum")->required();
    cmd_stratum->add_option("--connectivity", connectivity, "simply | two | general")
        ->check(CLI::IsMember({"simply", "two", "general"}));
    add_common(cmd_stratum);

    auto* cmd_hom = app.add_subcommand("homology", "simplicial homology tools");
    cmd_hom->require_subcommand(1);
    auto* cmd_simp = cmd_hom->add_subcommand("simplicial", "homology of a complex file");
    cmd_simp->add_option("--complex", complex_path, "JSON list of maximal simplices")->required();
    add_common(cmd_simp);
    auto* cmd_pred = cmd_hom->add_subcommand("predict", "boundary homology from the singular set");
    cmd_pred->add_option("--sigma", complex_path, "singular-set complex file")->required();
    cmd_pred->add_option("--ambient", ambient, "ambient sphere dimension n")->required();
    add_common(cmd_pred);

    auto* cmd_alex = app.add_subcommand("alexander", "Laurent-polynomial calculus");
    cmd_alex->require_subcommand(1);
    auto* cmd_typek = cmd_alex->add_subcommand("typek", "is Z[t,1/t]/(p) type K");
    cmd_typek->add_option("--poly", poly_text, "Laurent polynomial, e.g. 't^-1 - 1 + t'")->required();
    add_common(cmd_typek);
    auto* cmd_pcx = cmd_alex->add_subcommand("pcomplex", "homology of the one-cell-per-dim complex");
    cmd_pcx->add_option("--poly", poly_text)->required();
    add_common(cmd_pcx);

    auto* cmd_cat = app.add_subcommand("catalog", "shipped validated knot groups");
    cmd_cat->require_subcommand(1);
    auto* cmd_cat_list = cmd_cat->add_subcommand("list", "list entry names");
    add_common(cmd_cat_list);
    auto* cmd_cat_show = cmd_cat->add_subcommand("show", "show one entry with validation record");
    cmd_cat_show->add_option("name", catalog_name, "entry name")->required();
    add_common(cmd_cat_show);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_parse) {
            ResolvedGroup g = resolve_group(presentation_arg);
            Presentation p = maybe_simplify(opt, g.presentation);
            emit(opt, presentation_to_json(p), serialize_presentation(p) + "\n");
            return 0;
        }
        if (*cmd_ab) {
            ResolvedGroup g = resolve_group(presentation_arg);
            AbelianGroupInvariants inv = abelianization(g.presentation);
            emit(opt, invariants_to_json(inv), inv.describe() + "\n");
            return 0;
        }
        if (*cmd_kerv) {
            ResolvedGroup g = resolve_group(presentation_arg);
            Word m = require_meridian(g, meridian_arg, "the group");
            KervaireReport r = kervaire_report(g.presentation, m, opt.budget);
            if (opt.json) {
                std::cout << kervaire_to_json(r).dump(2) << "\n";
            } else {
                std::cout << "report for " << serialize_presentation(g.presentation)
                          << ", meridian " << serialize_word(m) << ":\n";
                print_report(r);
            }
            return verdict_exit(opt, report_verdicts(r));
        }
        if (*cmd_pair) {
            std::optional<GroupMap> phi;
            Presentation gp, gbarp;
            Word gm, gbarm;
            if (!pair_path.empty()) {
                KnotGroupPair pair = pair_from_json(load_json_file(pair_path));
                gp = pair.boundary;
                gbarp = pair.ambient;
                gm = pair.meridian_boundary;
                gbarm = pair.meridian_ambient;
                phi = pair.inclusion;
            } else {
                if (presentation_arg.empty() || presentation2_arg.empty()) {
                    throw ValidationError("pair needs --pair or both --presentation and --presentation2");
                }
                ResolvedGroup g = resolve_group(presentation_arg);
                ResolvedGroup gbar = resolve_group(presentation2_arg);
                gp = g.presentation;
                gbarp = gbar.presentation;
                gm = require_meridian(g, meridian_arg, "the boundary group");
                gbarm = require_meridian(gbar, meridian2_arg, "the ambient group");
            }
            PairReport r = pair_report(gp, gm, gbarp, gbarm, phi, opt.budget);
            if (opt.json) {
                std::cout << pair_report_to_json(r).dump(2) << "\n";
            } else {
                std::cout << "boundary group:\n";
                print_report(r.report_g);
                std::cout << "ambient group:\n";
                print_report(r.report_gbar);
                print_condition("map consistency", r.map_consistency);
                print_condition("meridian match", r.meridian_match);
                if (r.map_synthesized) std::cout << "  (canonical map synthesized)\n";
            }
            std::vector<Verdict> vs = report_verdicts(r.report_g);
            for (Verdict v : report_verdicts(r.report_gbar)) vs.push_back(v);
            vs.push_back(r.map_consistency.verdict);
            vs.push_back(r.meridian_match.verdict);
            return verdict_exit(opt, vs);
        }
        if (*cmd_sum) {
            ResolvedGroup g1 = resolve_group(presentation_arg);
            ResolvedGroup g2 = resolve_group(presentation2_arg);
            Word m1 = require_meridian(g1, meridian_arg, "the first summand");
            Word m2 = require_meridian(g2, meridian2_arg, "the second summand");
            auto [p, m] = knot_sum(g1.presentation, m1, g2.presentation, m2);
            p = maybe_simplify(opt, p, &m);
            json out{{"presentation", presentation_to_json(p)}, {"meridian", word_to_json(m)}};
            emit(opt, out,
                 serialize_presentation(p) + "\nmeridian: " + serialize_word(m) + "\n");
            return 0;
        }
        if (*cmd_spin) {
            KnotGroupPair pair = pair_from_json(load_json_file(pair_path));
            Presentation m_group = parse_presentation(load_text(m_arg));
            SpinInput in{pair, m_group, parse_tau(tau_spec, m_group)};
            for (const auto& x : m_group.generators()) in.tau_degrees.emplace(x, 0);
            SpinResult r = frame_twist_spin(in);
            Word km = r.knot_meridian, bm = r.boundary_meridian;
            Presentation knot = maybe_simplify(opt, r.knot_group, &km);
            Presentation bdry = maybe_simplify(opt, r.boundary_group, &bm);
            json out{{"knot_group", presentation_to_json(knot)},
                     {"boundary_group", presentation_to_json(bdry)},
                     {"knot_meridian", word_to_json(km)},
                     {"boundary_meridian", word_to_json(bm)},
                     {"inclusion", map_to_json(r.inclusion)}};
            emit(opt, out,
                 "knot group:     " + serialize_presentation(knot) + "\n" +
                     "  meridian:     " + serialize_word(km) + "\n" +
                     "boundary group: " + serialize_presentation(bdry) + "\n" +
                     "  meridian:     " + serialize_word(bm) + "\n");
            return 0;
        }
        if (*cmd_susp) {
            KnotGroupPair pair = pair_from_json(load_json_file(pair_path));
            SuspensionResult r = suspension(pair);
            Presentation bdry = maybe_simplify(opt, r.boundary_group);
            json out{{"knot_group", presentation_to_json(r.knot_group)},
                     {"boundary_group", presentation_to_json(bdry)},
                     {"inclusion", map_to_json(r.inclusion)}};
            emit(opt, out,
                 "knot group:     " + serialize_presentation(r.knot_group) + "\n" +
                     "boundary group: " + serialize_presentation(bdry) + "\n");
            return 0;
        }
        if (*cmd_stratum) {
            ResolvedGroup g = resolve_group(presentation_arg);
            Word lambda = parse_word(meridian_arg, g.presentation);
            Presentation m_group = parse_presentation(load_text(m_arg));
            StratumConnectivity c = connectivity == "simply" ? StratumConnectivity::SimplyConnected
                                    : connectivity == "two" ? StratumConnectivity::TwoConnected
                                                            : StratumConnectivity::General;
            StratumReport r = single_stratum_report(g.presentation, lambda, m_group, c, opt.budget);
            if (opt.json) {
                std::cout << stratum_to_json(r).dump(2) << "\n";
            } else {
                std::cout << "relationship: " << r.kind << "\n";
                for (const auto& s : r.constraints) std::cout << "  - " << s << "\n";
                if (r.boundary_group) {
                    std::cout << "boundary group: " << serialize_presentation(*r.boundary_group)
                              << "\n";
                }
                if (r.kervaire) print_report(*r.kervaire);
            }
            if (r.kervaire) return verdict_exit(opt, report_verdicts(*r.kervaire));
            return 0;
        }
        if (*cmd_simp) {
            SimplicialComplex k = complex_from_json(load_json_file(complex_path));
            GradedAbelian h = simplicial_homology(k);
            std::string text;
            for (std::size_t i = 0; i < h.groups.size(); ++i) {
                text += "H_" + std::to_string(i) + " = " + h.groups[i].describe() + "\n";
            }
            emit(opt, graded_to_json(h), text);
            return 0;
        }
        if (*cmd_pred) {
            SimplicialComplex k = complex_from_json(load_json_file(complex_path));
            GradedAbelian h = predict_boundary_homology(simplicial_homology(k), ambient);
            std::string text;
            for (std::size_t i = 0; i < h.groups.size(); ++i) {
                text += "H_" + std::to_string(i) + " = " + h.groups[i].describe() + "\n";
            }
            emit(opt, graded_to_json(h), text);
            return 0;
        }
        if (*cmd_typek) {
            TypeKResult r = is_type_K_cyclic(parse_laurent(poly_text));
            json out{{"type_k", r.type_k}, {"p_at_one", r.p_at_one.get_str()}};
            emit(opt, out,
                 std::string(r.type_k ? "type K" : "not type K") + " (p(1) = " +
                     r.p_at_one.get_str() + ")\n");
            return 0;
        }
        if (*cmd_pcx) {
            PComplexReport r = p_complex_homology(parse_laurent(poly_text));
            std::string text;
            for (std::size_t i = 0; i < r.quotient_homology.groups.size(); ++i) {
                text += "H_" + std::to_string(i) + " = " +
                        r.quotient_homology.groups[i].describe() + "\n";
            }
            text += std::string("milnor consistent: ") + (r.milnor_consistent ? "yes" : "no") + "\n";
            text += std::string("homology of a circle: ") + (r.homology_circle ? "yes" : "no") + "\n";
            emit(opt, pcomplex_to_json(r), text);
            return 0;
        }
        if (*cmd_cat_list) {
            json names = json::array();
            std::string text;
            for (const auto& e : catalog()) {
                names.push_back(e.name);
                text += e.name + "\n";
            }
            emit(opt, names, text);
            return 0;
        }
        if (*cmd_cat_show) {
            const CatalogEntry& e = catalog_entry(catalog_name);
            std::string text = e.name + ": " + serialize_presentation(e.presentation) +
                               "\nmeridian: " + serialize_word(e.meridian) +
                               "\nabelianization: " + e.validation.abelianization +
                               "\nweight one: " + to_string(e.validation.weight_one) +
                               "\nH2: " + to_string(e.validation.h2) + "\n";
            emit(opt, catalog_entry_to_json(e), text);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
