#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nodal/classifier.hpp"
#include "nodal/f2.hpp"
#include "nodal/invariants.hpp"
#include "nodal/json_io.hpp"
#include "nodal/lattice.hpp"
#include "nodal/report.hpp"
#include "nodal/singularities.hpp"

namespace {

using nodal::Json;

std::string read_stdin() {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

// --gram takes inline JSON, or "-" to read the document from stdin.
nodal::GramMatrix gram_from_arg(const std::string& arg) {
    const std::string text = (arg == "-") ? read_stdin() : arg;
    Json parsed;
    try {
        parsed = Json::parse(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("gram must be a JSON array of arrays");
    }
    return nodal::gram_from_json(parsed);
}

std::vector<long long> parse_chain(const std::string& arg) {
    std::vector<long long> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("chain must be comma-separated integers");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty resolution chain");
    return out;
}

void emit(const Json& result, const std::string& format) {
    if (format == "text") {
        for (const auto& [key, value] : result.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << "\n";
    } else {
        std::cout << result.dump() << "\n";
    }
}

void emit_verdict(const nodal::ClassificationVerdict& v, const std::string& format) {
    if (format == "text") {
        std::cout << "cases:\n";
        for (const nodal::CaseLabel& c : v.cases) {
            std::cout << "  - " << to_string(c.tag);
            if (c.ksq) std::cout << " K^2=" << *c.ksq;
            std::cout << " (" << to_string(existence_status(c)) << ")";
            if (!c.note.empty()) std::cout << "  " << c.note;
            std::cout << "\n";
        }
        std::cout << "\n" << nodal::render_trace_text(v.trace);
    } else {
        std::cout << nodal::verdict_to_json(v).dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact obstruction calculus for surfaces with many disjoint nodal curves"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    // Deferred actions: options bind during parse, the chosen callback runs
    // afterwards so every failure mode maps to one exit path.
    std::function<void()> action;

    std::string gram_arg;
    std::string ade_label;
    auto* lattice = app.add_subcommand("lattice", "exact Gram-matrix computations");
    lattice->require_subcommand(1);
    lattice->fallthrough();
    {
        auto* det = lattice->add_subcommand("det", "determinant");
        det->fallthrough();
        det->add_option("--gram", gram_arg, "Gram matrix JSON, or - for stdin")->required();
        det->callback([&] {
            action = [&] {
                const nodal::GramMatrix g = gram_from_arg(gram_arg);
                emit(Json{{"det", nodal::int_to_string(determinant(g))}}, format);
            };
        });

        auto* sig = lattice->add_subcommand("signature", "Sylvester inertia");
        sig->fallthrough();
        sig->add_option("--gram", gram_arg, "Gram matrix JSON, or - for stdin")->required();
        sig->callback([&] {
            action = [&] { emit(nodal::signature_to_json(signature(gram_from_arg(gram_arg))), format); };
        });

        auto* smith = lattice->add_subcommand("smith", "Smith normal form");
        smith->fallthrough();
        smith->add_option("--gram", gram_arg, "Gram matrix JSON, or - for stdin")->required();
        smith->callback([&] {
            action = [&] {
                emit(nodal::smith_to_json(smith_normal_form(gram_from_arg(gram_arg))), format);
            };
        });

        auto* square = lattice->add_subcommand("square-test", "is |det| a perfect square");
        square->fallthrough();
        square->add_option("--gram", gram_arg, "Gram matrix JSON, or - for stdin")->required();
        square->callback([&] {
            action = [&] {
                const nodal::GramMatrix g = gram_from_arg(gram_arg);
                emit(Json{{"det", nodal::int_to_string(determinant(g))},
                          {"square", nodal::square_discriminant_test(g)}},
                     format);
            };
        });

        auto* ade = lattice->add_subcommand("ade", "negative-definite root lattice");
        ade->fallthrough();
        ade->add_option("--type", ade_label, "ADE label, e.g. A1, D4, E8")->required();
        ade->callback([&] {
            action = [&] {
                const nodal::GramMatrix g = nodal::ade_gram(ade_label);
                emit(Json{{"type", ade_label},
                          {"gram", nodal::gram_to_json(g)},
                          {"det", nodal::int_to_string(determinant(g))}},
                     format);
            };
        });
    }

    long long hj_n = 0, hj_q = 0;
    std::string chain_arg;
    long long euler_smooth = 0, min_order = 2;
    int nodes = 0;
    std::string ksq_arg;
    std::string canonical_arg;
    auto* sing = app.add_subcommand("sing", "quotient singularity resolutions");
    sing->require_subcommand(1);
    sing->fallthrough();
    {
        auto* resolve = sing->add_subcommand("resolve", "Hirzebruch-Jung resolution of 1/n(1, q)");
        resolve->fallthrough();
        resolve->add_option("--n", hj_n, "order of the cyclic group")->required();
        resolve->add_option("--q", hj_q, "weight, 1 <= q < n, coprime to n")->required();
        resolve->callback([&] {
            action = [&] {
                const auto chain = nodal::hj_string(hj_n, hj_q);
                Json j = nodal::resolution_to_json(nodal::solve_discrepancies(chain));
                Json out{{"n", hj_n}, {"q", hj_q}};
                out.update(j);
                emit(out, format);
            };
        });

        auto* disc = sing->add_subcommand("discrepancy", "discrepancies of an exceptional chain");
        disc->fallthrough();
        disc->add_option("--chain", chain_arg, "comma-separated self-intersections, e.g. -3,-2")
            ->required();
        disc->callback([&] {
            action = [&] {
                emit(nodal::resolution_to_json(nodal::solve_discrepancies(parse_chain(chain_arg))),
                     format);
            };
        });

        auto* euler = sing->add_subcommand("euler", "orbifold Euler number of a nodal surface");
        euler->fallthrough();
        euler->add_option("--euler-smooth", euler_smooth, "topological Euler number")->required();
        euler->add_option("--nodes", nodes, "number of nodes")->required();
        euler->callback([&] {
            action = [&] {
                const auto s = nodal::make_nodal_orbifold(euler_smooth, nodes, nodal::Rat(0));
                emit(Json{{"euler_smooth", euler_smooth},
                          {"nodes", nodes},
                          {"e_orb", nodal::rat_to_string(orbifold_euler(s))}},
                     format);
            };
        });

        auto* bmy = sing->add_subcommand("bmy", "orbifold Bogomolov-Miyaoka-Yau check");
        bmy->fallthrough();
        bmy->add_option("--ksq", ksq_arg, "K^2 as integer or p/q")->required();
        bmy->add_option("--euler-smooth", euler_smooth, "topological Euler number")->required();
        bmy->add_option("--nodes", nodes, "number of nodes")->required();
        bmy->add_option("--canonical", canonical_arg, "nef or anti-nef")
            ->required()
            ->check(CLI::IsMember({"nef", "anti-nef"}));
        bmy->callback([&] {
            action = [&] {
                const auto s =
                    nodal::make_nodal_orbifold(euler_smooth, nodes, nodal::rat_from_string(ksq_arg));
                const auto canonical = canonical_arg == "nef" ? nodal::CanonicalClass::nef
                                                              : nodal::CanonicalClass::anti_nef;
                emit(Json{{"ksq", nodal::rat_to_string(s.ksq)},
                          {"euler_smooth", euler_smooth},
                          {"nodes", nodes},
                          {"canonical", canonical_arg},
                          {"e_orb", nodal::rat_to_string(orbifold_euler(s))},
                          {"verdict", to_string(bmy_check(s, canonical))}},
                     format);
            };
        });

        auto* maxpts = sing->add_subcommand("max-points", "singular point count filter");
        maxpts->fallthrough();
        maxpts->add_option("--euler-smooth", euler_smooth, "topological Euler number")->required();
        maxpts->add_option("--min-order", min_order, "least local group order (default 2)");
        maxpts->callback([&] {
            action = [&] {
                emit(Json{{"euler_smooth", euler_smooth},
                          {"min_group_order", min_order},
                          {"max_points", nodal::max_singular_points_filter(euler_smooth, min_order)}},
                     format);
            };
        });
    }

    int q = 0, pg = 0, h11 = 1;
    std::string bound_arg;
    int h11_min = 1;
    auto* invariants = app.add_subcommand("invariants", "smooth surface invariants");
    invariants->require_subcommand(1);
    invariants->fallthrough();
    {
        auto* noether = invariants->add_subcommand("noether", "derive K^2 and e from (q, pg, h11)");
        noether->fallthrough();
        noether->add_option("--q", q, "irregularity")->required();
        noether->add_option("--pg", pg, "geometric genus")->required();
        noether->add_option("--h11", h11, "middle Hodge number")->required();
        noether->callback([&] {
            action = [&] { emit(nodal::invariants_to_json(nodal::noether(q, pg, h11)), format); };
        });

        auto* enumerate = invariants->add_subcommand("enumerate", "solve 4q + 4pg + h11/2 <= bound");
        enumerate->fallthrough();
        enumerate->add_option("--bound", bound_arg, "right-hand side, integer or p/q")->required();
        enumerate->add_option("--h11-min", h11_min, "least admissible h11 (default 1)");
        enumerate->callback([&] {
            action = [&] {
                const auto sols =
                    nodal::bmy_solution_enumerator(nodal::rat_from_string(bound_arg), h11_min);
                Json list = Json::array();
                for (const auto& s : sols) list.push_back(nodal::invariants_to_json(s));
                emit(Json{{"bound", bound_arg}, {"h11_min", h11_min}, {"solutions", list}}, format);
            };
        });
    }

    int mu = 0, dim = 0;
    auto* obstruct = app.add_subcommand("obstruct", "mod-2 nodal embedding obstruction");
    obstruct->require_subcommand(1);
    obstruct->fallthrough();
    {
        auto* mod2 = obstruct->add_subcommand("mod2", "kernel bound plus doubly-even search");
        mod2->fallthrough();
        mod2->add_option("--mu", mu, "number of disjoint nodal curves")->required();
        mod2->add_option("--h11", h11, "ambient unimodular rank (= h11 when pg = 0)")->required();
        mod2->callback([&] {
            action = [&] {
                emit(nodal::obstruction_to_json(nodal::nodal_embedding_obstruction(mu, h11)), format);
            };
        });

        auto* search = obstruct->add_subcommand("search", "doubly-even subspace of given dimension");
        search->fallthrough();
        search->add_option("--mu", mu, "ambient F_2 dimension")->required();
        search->add_option("--dim", dim, "target dimension")->required();
        search->callback([&] {
            action = [&] {
                const auto found = nodal::doubly_even_subspace_search(mu, dim);
                emit(Json{{"mu", mu},
                          {"dim", dim},
                          {"found", found.has_value()},
                          {"basis", found ? nodal::subspace_to_json(*found) : Json(nullptr)}},
                     format);
            };
        });
    }

    bool nef = true;
    int total_euler = 0, nodal_demand = 0;
    auto* classify = app.add_subcommand("classify", "case analysis for nodal configurations");
    classify->require_subcommand(1);
    classify->fallthrough();
    {
        auto* max = classify->add_subcommand("max-nodal", "surfaces with h11 - 1 nodal curves");
        max->fallthrough();
        max->add_option("--nef", nef, "is the canonical class nef (true/false)")->required();
        max->callback([&] {
            action = [&] { emit_verdict(nodal::classify_max_nodal(nef), format); };
        });

        auto* near = classify->add_subcommand("near-max", "surfaces with h11 - 2 nodal curves");
        near->fallthrough();
        near->add_option("--q", q, "irregularity")->required();
        near->add_option("--pg", pg, "geometric genus")->required();
        near->add_option("--h11", h11, "middle Hodge number")->required();
        near->add_option("--nef", nef, "is the canonical class nef (true/false)")->required();
        near->callback([&] {
            action = [&] { emit_verdict(nodal::classify_near_max(q, pg, h11, nef), format); };
        });

        auto* fibres = classify->add_subcommand("fibres", "singular fibre multisets by Euler budget");
        fibres->fallthrough();
        fibres->add_option("--euler", total_euler, "total Euler number of the singular fibres")
            ->required();
        fibres->add_option("--nodal", nodal_demand, "required disjoint (-2)-curve capacity")
            ->required();
        fibres->callback([&] {
            action = [&] {
                const auto multisets = nodal::elliptic_fibre_search(total_euler, nodal_demand);
                emit(Json{{"total_euler", total_euler},
                          {"nodal_demand", nodal_demand},
                          {"multisets", nodal::fibre_multisets_to_json(multisets)}},
                     format);
            };
        });
    }

    std::string replay_token;
    auto* replay_cmd = app.add_subcommand("replay", "replay a full case analysis as a report");
    replay_cmd->fallthrough();
    replay_cmd->add_option("id", replay_token, "theorem-1.3, theorem-1.4, or cor-1.2")->required();
    replay_cmd->callback([&] {
        action = [&] {
            const auto id = nodal::parse_replay_id(replay_token);
            if (!id) throw std::invalid_argument("unknown replay id: " + replay_token);
            const nodal::Report report = nodal::replay(*id);
            if (format == "text")
                std::cout << render_report_text(report);
            else
                std::cout << nodal::report_to_json(report).dump() << "\n";
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
