// Command line front end: analyze degree sequences, classify vertex pairs
// that are forced across all realizations, build threshold envelopes, and
// walk the dominance order on partitions.
//
// Exit codes: 0 success, 1 parse or validation error, 2 sequence not
// graphic where graphicality is required, 3 size cap exceeded.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degseq/classification.hpp"
#include "degseq/dominance.hpp"
#include "degseq/envelope.hpp"
#include "degseq/graph.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/parse.hpp"
#include "degseq/realization.hpp"
#include "degseq/sequence.hpp"

namespace {

using json = nlohmann::ordered_json;

struct options {
    std::string sequence_text;
    std::string second_text; // dominance only
    bool normalize = false;
    bool json_output = false;
    std::string method = "delta";
    std::string which;
    std::string format = "edges";
    int cap = 10;
};

degseq::int_list load_terms(const std::string& text, bool normalize) {
    degseq::int_list terms = degseq::parse_sequence(text);
    if (normalize)
        std::sort(terms.begin(), terms.end(), std::greater<int>());
    return terms;
}

degseq::degree_sequence load_sequence(const options& opt) {
    return degseq::validate_sequence(load_terms(opt.sequence_text, opt.normalize));
}

const char* status_name(degseq::pair_class c) {
    switch (c) {
    case degseq::pair_class::forced_edge:
        return "forced_edge";
    case degseq::pair_class::forced_non_edge:
        return "forced_non_edge";
    default:
        return "unforced";
    }
}

json sequence_header(const degseq::degree_sequence& d) {
    json doc;
    doc["n"] = d.n();
    doc["sequence"] = d.terms();
    return doc;
}

json pairs_to_json(const degseq::classification_matrix& matrix) {
    json out = json::array();
    for (int i = 1; i <= matrix.n(); ++i)
        for (int j = i + 1; j <= matrix.n(); ++j)
            out.push_back(json{{"i", i}, {"j", j}, {"status", status_name(matrix.at(i, j))}});
    return out;
}

json edges_to_json(const degseq::labeled_graph& g) {
    json out = json::array();
    for (const auto& [i, j] : g.edges())
        out.push_back(json::array({i, j}));
    return out;
}

void print_pair_list(const degseq::classification_matrix& matrix, degseq::pair_class wanted,
                     const char* label) {
    std::cout << label << ":";
    for (int i = 1; i <= matrix.n(); ++i)
        for (int j = i + 1; j <= matrix.n(); ++j)
            if (matrix.at(i, j) == wanted)
                std::cout << " {" << i << "," << j << "}";
    std::cout << "\n";
}

void print_matrix_grid(const degseq::classification_matrix& matrix) {
    std::cout << "matrix:\n";
    for (int i = 1; i <= matrix.n(); ++i) {
        std::cout << i << " |";
        for (int j = 1; j <= matrix.n(); ++j) {
            char symbol = '-';
            if (j != i)
                switch (matrix.at(i, j)) {
                case degseq::pair_class::forced_edge:
                    symbol = 'E';
                    break;
                case degseq::pair_class::forced_non_edge:
                    symbol = 'N';
                    break;
                default:
                    symbol = '.';
                }
            std::cout << ' ' << symbol;
        }
        std::cout << "\n";
    }
}

int run_analyze(const options& opt) {
    const degseq::degree_sequence d = load_sequence(opt);
    const degseq::eg_profile prof = degseq::compute_eg_profile(d);
    const bool graphic = degseq::is_graphic(d);

    if (opt.json_output) {
        json doc = sequence_header(d);
        doc["graphic"] = graphic;
        doc["m"] = prof.m;
        doc["delta"] = prof.delta;
        if (graphic) {
            doc["eg_zeros"] = prof.eg_zeros;
            doc["split"] = degseq::is_split_sequence(d);
            doc["threshold"] = degseq::is_threshold_sequence(d);
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "sequence: " << degseq::format_sequence(d.terms()) << "\n";
    std::cout << "n: " << d.n() << "\n";
    std::cout << "graphic: " << (graphic ? "yes" : "no") << "\n";
    std::cout << "m: " << prof.m << "\n";
    std::cout << "k lhs rhs delta\n";
    for (int k = 0; k <= d.n(); ++k)
        std::cout << k << " " << prof.lhs[static_cast<size_t>(k)] << " "
                  << prof.rhs[static_cast<size_t>(k)] << " " << prof.delta[static_cast<size_t>(k)]
                  << "\n";
    if (graphic) {
        std::cout << "eg zeros:";
        for (int z : prof.eg_zeros)
            std::cout << " " << z;
        std::cout << "\n";
        std::cout << "split: " << (degseq::is_split_sequence(d) ? "yes" : "no") << "\n";
        std::cout << "threshold: " << (degseq::is_threshold_sequence(d) ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_pairs(const options& opt) {
    const degseq::degree_sequence d = load_sequence(opt);
    degseq::classification_matrix matrix(0);
    if (opt.method == "oracle")
        matrix = degseq::forced_pairs_oracle(d, opt.cap).matrix;
    else
        matrix = degseq::classify_pairs(d, opt.method == "graphic"
                                               ? degseq::classify_method::graphicality
                                               : degseq::classify_method::deltas);

    if (opt.json_output) {
        json doc = sequence_header(d);
        doc["method"] = opt.method;
        doc["pairs"] = pairs_to_json(matrix);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "sequence: " << degseq::format_sequence(d.terms()) << "\n";
    std::cout << "method: " << opt.method << "\n";
    print_pair_list(matrix, degseq::pair_class::forced_edge, "forced edges");
    print_pair_list(matrix, degseq::pair_class::forced_non_edge, "forced non-edges");
    print_pair_list(matrix, degseq::pair_class::unforced, "unforced");
    print_matrix_grid(matrix);
    return 0;
}

int run_envelope(const options& opt) {
    const degseq::degree_sequence d = load_sequence(opt);
    const degseq::envelope_result env = opt.which == "I" ? degseq::intersection_envelope(d)
                                                         : degseq::union_envelope(d);

    if (opt.json_output) {
        json doc = sequence_header(d);
        doc["envelope"] = json{{"which", opt.which},
                               {"edges", edges_to_json(env.graph)},
                               {"creation", degseq::to_string(env.creation)}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    if (opt.format == "creation") {
        std::cout << degseq::to_string(env.creation) << "\n";
    } else if (opt.format == "dot") {
        std::cout << degseq::write_dot(env.graph);
    } else {
        for (const auto& [i, j] : env.graph.edges())
            std::cout << i << " -- " << j << "\n";
    }
    return 0;
}

json set_to_json(const std::vector<int>& v) {
    return json(v);
}

void print_set(const std::vector<int>& v) {
    std::cout << "{";
    for (size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? "," : "") << v[i];
    std::cout << "}";
}

int run_decompose(const options& opt) {
    const degseq::degree_sequence d = load_sequence(opt);
    const degseq::canonical_skeleton sk = degseq::compute_skeleton(d);

    if (opt.json_output) {
        json doc = sequence_header(d);
        json blocks = json::array();
        for (const degseq::skeleton_component& b : sk.blocks)
            blocks.push_back(json{{"clique", set_to_json(b.clique)},
                                  {"independent", set_to_json(b.independent)}});
        json skel;
        skel["split"] = sk.split;
        skel["p"] = sk.p;
        skel["q"] = sk.q;
        skel["blocks"] = blocks;
        if (!sk.split)
            skel["tail"] = json{{"vertices", set_to_json(sk.tail_vertices)},
                                {"intersection_clique", set_to_json(sk.tail_intersection_clique)},
                                {"intersection_independent",
                                 set_to_json(sk.tail_intersection_independent)},
                                {"union_clique", set_to_json(sk.tail_union_clique)},
                                {"union_independent", set_to_json(sk.tail_union_independent)}};
        doc["skeleton"] = skel;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "sequence: " << degseq::format_sequence(d.terms()) << "\n";
    std::cout << "split: " << (sk.split ? "yes" : "no") << "\n";
    std::cout << "p: " << sk.p << "\n";
    std::cout << "q: " << sk.q << "\n";
    for (size_t i = 0; i < sk.blocks.size(); ++i) {
        std::cout << "component " << (i + 1) << ": clique ";
        print_set(sk.blocks[i].clique);
        std::cout << " independent ";
        print_set(sk.blocks[i].independent);
        std::cout << "\n";
    }
    if (!sk.split) {
        std::cout << "tail: vertices ";
        print_set(sk.tail_vertices);
        std::cout << "\n  intersection clique ";
        print_set(sk.tail_intersection_clique);
        std::cout << " independent ";
        print_set(sk.tail_intersection_independent);
        std::cout << "\n  union clique ";
        print_set(sk.tail_union_clique);
        std::cout << " independent ";
        print_set(sk.tail_union_independent);
        std::cout << "\n";
    }
    return 0;
}

int run_dominance(const options& opt) {
    const degseq::int_list a = load_terms(opt.sequence_text, opt.normalize);
    const degseq::int_list b = load_terms(opt.second_text, opt.normalize);
    long long sum_a = 0, sum_b = 0;
    for (int t : a)
        sum_a += t;
    for (int t : b)
        sum_b += t;

    std::string relation;
    if (a.size() != b.size() || sum_a != sum_b)
        relation = "mismatch";
    else {
        const bool ab = degseq::majorizes(a, b);
        const bool ba = degseq::majorizes(b, a);
        relation = ab && ba ? "equal" : ab ? "majorizes" : ba ? "majorized-by" : "incomparable";
    }

    if (opt.json_output) {
        json doc;
        doc["a"] = a;
        doc["b"] = b;
        doc["relation"] = relation;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "a: " << degseq::format_sequence(a) << "\n";
    std::cout << "b: " << degseq::format_sequence(b) << "\n";
    std::cout << "relation: " << relation << "\n";
    return 0;
}

int run_covers(const options& opt) {
    const degseq::int_list b = load_terms(opt.sequence_text, opt.normalize);
    const std::vector<degseq::cover_step> covers = degseq::elementary_covers(b);

    if (opt.json_output) {
        json doc;
        doc["sequence"] = b;
        json list = json::array();
        for (const degseq::cover_step& c : covers)
            list.push_back(json{{"sequence", c.sequence}, {"p", c.p}, {"q", c.q}});
        doc["covers"] = list;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "sequence: " << degseq::format_sequence(b) << "\n";
    std::cout << "covers:\n";
    for (const degseq::cover_step& c : covers)
        std::cout << degseq::format_sequence(c.sequence) << "  (p=" << c.p << ", q=" << c.q
                  << ")\n";
    return 0;
}

int run_lift(const options& opt) {
    const degseq::degree_sequence d = load_sequence(opt);
    const degseq::lift_result result = degseq::lift_to_decomposable(d);

    if (opt.json_output) {
        json doc = sequence_header(d);
        json steps = json::array();
        for (const degseq::lift_step& s : result.steps)
            steps.push_back(json{{"p", s.p}, {"q", s.q}});
        doc["lift"] = json{{"target", result.target.terms()}, {"steps", steps}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "sequence: " << degseq::format_sequence(d.terms()) << "\n";
    std::cout << "target: " << degseq::format_sequence(result.target.terms()) << "\n";
    std::cout << "steps: " << result.steps.size() << "\n";
    for (size_t i = 0; i < result.steps.size(); ++i)
        std::cout << "step " << (i + 1) << ": p=" << result.steps[i].p
                  << ", q=" << result.steps[i].q << "\n";
    return 0;
}

int run_oracle(const options& opt) {
    const degseq::degree_sequence d = load_sequence(opt);
    const degseq::oracle_classification oracle = degseq::forced_pairs_oracle(d, opt.cap);
    const degseq::envelope_result formula_i = degseq::intersection_envelope(d);
    const degseq::envelope_result formula_u = degseq::union_envelope(d);
    const bool match_i = oracle.intersection == formula_i.graph;
    const bool match_u = oracle.union_graph == formula_u.graph;

    if (opt.json_output) {
        json doc = sequence_header(d);
        doc["realizations"] = oracle.realization_count;
        doc["pairs"] = pairs_to_json(oracle.matrix);
        doc["envelope_match"] = json{{"intersection", match_i}, {"union", match_u}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "sequence: " << degseq::format_sequence(d.terms()) << "\n";
    std::cout << "realizations: " << oracle.realization_count << "\n";
    print_pair_list(oracle.matrix, degseq::pair_class::forced_edge, "forced edges");
    print_pair_list(oracle.matrix, degseq::pair_class::forced_non_edge, "forced non-edges");
    print_pair_list(oracle.matrix, degseq::pair_class::unforced, "unforced");
    std::cout << "intersection envelope matches formula: " << (match_i ? "yes" : "no") << "\n";
    std::cout << "union envelope matches formula: " << (match_u ? "yes" : "no") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree sequence toolkit: forced pairs, threshold envelopes, dominance order"};
    app.require_subcommand(1);

    options opt;

    auto add_common = [&](CLI::App* cmd, bool with_sequence = true) {
        if (with_sequence)
            cmd->add_option("sequence", opt.sequence_text,
                            "degree sequence, e.g. 2,2,1,1,0 or 15^5,6^7,3^7")
                ->required();
        cmd->add_flag("--normalize", opt.normalize, "sort the input nonincreasing first");
        cmd->add_flag("--json", opt.json_output, "emit a JSON document");
        return cmd;
    };

    CLI::App* analyze = add_common(app.add_subcommand(
        "analyze", "graphicality, Erdos-Gallai profile, split/threshold flags"));
    CLI::App* pairs = add_common(
        app.add_subcommand("pairs", "classify every vertex pair as forced or unforced"));
    pairs->add_option("--method", opt.method, "classification method")
        ->check(CLI::IsMember({"delta", "graphic", "oracle"}))
        ->capture_default_str();
    CLI::App* envelope =
        add_common(app.add_subcommand("envelope", "intersection or union threshold envelope"));
    envelope->add_option("--which", opt.which, "I = intersection, U = union")
        ->check(CLI::IsMember({"I", "U"}))
        ->required();
    envelope->add_option("--format", opt.format, "text representation")
        ->check(CLI::IsMember({"edges", "creation", "dot"}))
        ->capture_default_str();
    CLI::App* decompose = add_common(
        app.add_subcommand("decompose", "canonical component skeleton from the zero list"));
    CLI::App* dominance =
        app.add_subcommand("dominance", "compare two partitions in the dominance order");
    dominance->add_option("a", opt.sequence_text, "first partition")->required();
    dominance->add_option("b", opt.second_text, "second partition")->required();
    dominance->add_flag("--normalize", opt.normalize, "sort both inputs nonincreasing first");
    dominance->add_flag("--json", opt.json_output, "emit a JSON document");
    CLI::App* covers =
        add_common(app.add_subcommand("covers", "elementary covers in the dominance order"));
    CLI::App* lift = add_common(app.add_subcommand(
        "lift", "nearest split-or-decomposable sequence, at most three covers up"));
    CLI::App* oracle = add_common(app.add_subcommand(
        "oracle", "exhaustive realization enumeration with envelope cross-check"));
    oracle->add_option("--cap", opt.cap, "largest allowed n")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (analyze->parsed())
            return run_analyze(opt);
        if (pairs->parsed())
            return run_pairs(opt);
        if (envelope->parsed())
            return run_envelope(opt);
        if (decompose->parsed())
            return run_decompose(opt);
        if (dominance->parsed())
            return run_dominance(opt);
        if (covers->parsed())
            return run_covers(opt);
        if (lift->parsed())
            return run_lift(opt);
        if (oracle->parsed())
            return run_oracle(opt);
    } catch (const degseq::not_graphic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const degseq::too_large& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const degseq::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
