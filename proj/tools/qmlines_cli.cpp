// qmlines: lines, betweenness and realizability of finite quasi-metric spaces.
//
// Exit status: 0 success or positive verdict, 1 negative verdict, 2 bad input.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmlines/core.hpp"
#include "qmlines/enumeration.hpp"
#include "qmlines/fixtures.hpp"
#include "qmlines/io.hpp"
#include "qmlines/isomorphism.hpp"
#include "qmlines/claims.hpp"
#include "qmlines/realizability.hpp"

using nlohmann::json;
using namespace qmlines;

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Relation {
    Betweenness betweenness;
    std::vector<std::string> labels;
};

Relation load_triples(const std::string& path, const std::string& labels_flag) {
    std::string text = read_file(path);
    std::vector<std::string> labels = labels_flag.empty() ? infer_labels(text) : parse_label_list(labels_flag);
    if (labels.size() < 2) throw InputError("need at least two labels; pass --labels");
    return {parse_triples(text, labels), std::move(labels)};
}

json label_list(PointSet s, const std::vector<std::string>& labels) {
    json out = json::array();
    for (int p : s.points()) out.push_back(labels[static_cast<std::size_t>(p)]);
    return out;
}

json triple_list(const Betweenness& b, const std::vector<std::string>& labels) {
    json out = json::array();
    b.for_each([&](Triple t) {
        out.push_back({labels[static_cast<std::size_t>(t.x)], labels[static_cast<std::size_t>(t.y)],
                       labels[static_cast<std::size_t>(t.z)]});
    });
    return out;
}

json matrix_json(const DistanceMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return {{"labels", m.labels()}, {"rows", rows}};
}

std::string indent(const std::string& text, const std::string& pad) {
    std::string out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out += pad + line + "\n";
    return out;
}

const char* kind_name(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::NonzeroDiagonal: return "nonzero_diagonal";
        case Violation::Kind::NonPositive: return "non_positive";
        case Violation::Kind::Triangle: return "triangle";
    }
    return "";
}

struct Options {
    bool json = false;
    int threads = 1;
};

int emit(const Options& opt, const json& j, const std::string& text, int code) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    return code;
}

int cmd_validate(const Options& opt, const std::string& path) {
    DistanceMatrix m = parse_matrix(read_file(path));
    ValidationResult v = validate_quasi_metric(m);
    json violations = json::array();
    std::string text = v.ok() ? "ok: quasi-metric on " + std::to_string(m.n()) + " points\n" : "";
    for (const auto& viol : v.violations) {
        std::vector<int> pts = viol.kind == Violation::Kind::Triangle ? std::vector<int>{viol.i, viol.j, viol.k}
                             : viol.kind == Violation::Kind::NonPositive ? std::vector<int>{viol.i, viol.j}
                                                                          : std::vector<int>{viol.i};
        json names = json::array();
        for (int p : pts) names.push_back(m.labels()[static_cast<std::size_t>(p)]);
        violations.push_back({{"kind", kind_name(viol.kind)}, {"points", names}, {"message", viol.describe(m)}});
        text += "violation: " + viol.describe(m) + "\n";
    }
    json j = {{"command", "validate"}, {"ok", v.ok()}, {"violations", violations}};
    return emit(opt, j, text, v.ok() ? kExitPositive : kExitNegative);
}

int cmd_betweenness(const Options& opt, const std::string& path) {
    DistanceMatrix m = parse_matrix(read_file(path));
    if (!validate_quasi_metric(m).ok()) throw InputError("input is not a quasi-metric; run 'validate' for details");
    Betweenness b = betweenness_of(m);
    json j = {{"command", "betweenness"}, {"labels", m.labels()}, {"count", b.size()}, {"triples", triple_list(b, m.labels())}};
    return emit(opt, j, format_triples(b, m.labels()), kExitPositive);
}

// Either a matrix file (positional) or a triples file with labels.
Relation load_relation(const std::string& matrix, const std::string& triples, const std::string& labels) {
    if (!matrix.empty() && !triples.empty()) throw InputError("give either a matrix file or --triples, not both");
    if (!triples.empty()) return load_triples(triples, labels);
    if (matrix.empty()) throw InputError("missing input: a matrix file or --triples");
    DistanceMatrix m = parse_matrix(read_file(matrix));
    if (!validate_quasi_metric(m).ok()) throw InputError("input is not a quasi-metric; run 'validate' for details");
    return {betweenness_of(m), m.labels()};
}

int cmd_lines(const Options& opt, const Relation& rel) {
    LineSet ls = line_set(rel.betweenness);
    const auto& L = rel.labels;
    json lines = json::array();
    std::string text = "lines: " + std::to_string(ls.size()) + "\n";
    for (PointSet l : ls.lines()) {
        lines.push_back(label_list(l, L));
        text += "  " + format_point_set(l, L) + "\n";
    }
    json pairs = json::array();
    text += "pairs:\n";
    for (int x = 0; x < ls.n(); ++x)
        for (int y = 0; y < ls.n(); ++y) {
            if (x == y) continue;
            const auto& lx = L[static_cast<std::size_t>(x)];
            const auto& ly = L[static_cast<std::size_t>(y)];
            pairs.push_back({{"pair", {lx, ly}}, {"line", label_list(ls.line(x, y), L)}});
            text += "  " + lx + " " + ly + ": " + format_point_set(ls.line(x, y), L) + "\n";
        }
    json j = {{"command", "lines"}, {"labels", L}, {"line_count", ls.size()}, {"lines", lines}, {"pairs", pairs}};
    return emit(opt, j, text, kExitPositive);
}

int cmd_dbe(const Options& opt, const Relation& rel) {
    DbeVerdict v = dbe_verdict(rel.betweenness);
    auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
    json j = {{"command", "dbe"},
              {"n", rel.betweenness.n()},
              {"line_count", v.line_count},
              {"has_universal", v.has_universal},
              {"satisfies_dbe", v.satisfies_dbe}};
    std::string text = "n: " + std::to_string(rel.betweenness.n()) + "\nline_count: " + std::to_string(v.line_count) +
                       "\nhas_universal: " + yn(v.has_universal) + "\nsatisfies_dbe: " + yn(v.satisfies_dbe) + "\n";
    return emit(opt, j, text, v.satisfies_dbe ? kExitPositive : kExitNegative);
}

std::string encoding_text(const Betweenness& b) {
    if (b.words().size() <= 1) return std::to_string(b.words().empty() ? 0 : b.words()[0]);
    std::ostringstream os;
    os << "0x" << std::hex;
    for (std::size_t i = b.words().size(); i-- > 0;) os << std::setw(16) << std::setfill('0') << b.words()[i];
    return os.str();
}

int cmd_canon(const Options& opt, const Relation& rel) {
    CanonicalForm c = canonical_form(rel.betweenness);
    std::vector<std::string> slots;
    for (int i = 0; i < rel.betweenness.n(); ++i) slots.push_back(std::to_string(i));
    json mapping = json::object();
    std::string text = "encoding: " + encoding_text(c.form) + "\nrelabeling:";
    for (int i = 0; i < rel.betweenness.n(); ++i) {
        mapping[rel.labels[static_cast<std::size_t>(i)]] = c.relabeling(i);
        text += " " + rel.labels[static_cast<std::size_t>(i)] + "->" + std::to_string(c.relabeling(i));
    }
    text += "\ntriples:\n" + indent(format_triples(c.form, slots), "  ");
    json j = {{"command", "canon"},
              {"n", c.form.n()},
              {"encoding", encoding_text(c.form)},
              {"relabeling", mapping},
              {"triples", triple_list(c.form, slots)}};
    return emit(opt, j, text, kExitPositive);
}

int cmd_iso(const Options& opt, const Relation& a, const Relation& b) {
    if (a.betweenness.n() != b.betweenness.n()) throw InputError("relations have different point counts");
    auto w = isomorphism_witness(a.betweenness, b.betweenness);
    json j = {{"command", "iso"}, {"isomorphic", w.has_value()}};
    std::string text = std::string("isomorphic: ") + (w ? "yes" : "no") + "\n";
    if (w) {
        json mapping = json::object();
        for (int i = 0; i < w->size(); ++i) {
            const auto& from = a.labels[static_cast<std::size_t>(i)];
            const auto& to = b.labels[static_cast<std::size_t>((*w)(i))];
            mapping[from] = to;
            text += "  " + from + " -> " + to + "\n";
        }
        j["mapping"] = mapping;
    }
    return emit(opt, j, text, w ? kExitPositive : kExitNegative);
}

int cmd_realize(const Options& opt, const Relation& rel, const std::string& variant) {
    if (!consistency_check(rel.betweenness)) throw InputError("relation violates the exclusion rule (xyz excludes yxz and xzy)");
    json j = {{"command", "realize"}, {"variant", variant}};
    std::string text;
    bool ok = false;
    if (variant == "quasi" || variant == "metric") {
        FeasibilityOutcome o = realize(rel.betweenness, variant == "quasi" ? Variant::Quasi : Variant::Metric, rel.labels);
        ok = o.realizable();
        j["status"] = o.status == FeasibilityStatus::Feasible ? "feasible" : "infeasible";
        j["optimal_slack"] = o.optimal_slack ? json(o.optimal_slack->str()) : json(nullptr);
        text = std::string("status: ") + (o.status == FeasibilityStatus::Feasible ? "feasible" : "infeasible") +
               "\noptimal_slack: " + (o.optimal_slack ? o.optimal_slack->str() : "-") + "\n";
        if (o.witness) {
            j["witness"] = matrix_json(*o.witness);
            text += "witness:\n" + indent(format_matrix(*o.witness), "  ");
        }
    } else if (variant.rfind("int:", 0) == 0) {
        int kmax = 0;
        try {
            kmax = std::stoi(variant.substr(4));
        } catch (const std::exception&) {
            throw InputError("bad variant '" + variant + "'");
        }
        if (kmax < 1) throw InputError("int:K needs K >= 1");
        auto m = realize_bounded_integer(rel.betweenness, kmax, rel.labels);
        ok = m.has_value();
        j["kmax"] = kmax;
        if (m) {
            j["witness"] = matrix_json(*m);
            text = "witness:\n" + indent(format_matrix(*m), "  ");
        }
    } else if (variant == "digraph") {
        if (rel.betweenness.n() > kMaxDigraphPoints) throw InputError("digraph search supports at most 5 points");
        auto g = realize_digraph(rel.betweenness);
        ok = g.has_value();
        if (g) {
            json arcs = json::array();
            text = "arcs:";
            for (auto [x, y] : g->arcs()) {
                const auto& lx = rel.labels[static_cast<std::size_t>(x)];
                const auto& ly = rel.labels[static_cast<std::size_t>(y)];
                arcs.push_back({lx, ly});
                text += " " + lx + "->" + ly;
            }
            DistanceMatrix d = g->distance_matrix().to_distance_matrix(rel.labels);
            j["arcs"] = arcs;
            j["witness"] = matrix_json(d);
            text += "\nwitness:\n" + indent(format_matrix(d), "  ");
        }
    } else {
        throw InputError("unknown variant '" + variant + "' (quasi, metric, int:K, digraph)");
    }
    j["realizable"] = ok;
    text = std::string("realizable: ") + (ok ? "yes" : "no") + "\n" + text;
    return emit(opt, j, text, ok ? kExitPositive : kExitNegative);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            int k = std::stoi(item);
            if (k < 1) throw InputError("kmax must be positive");
            out.push_back(k);
        } catch (const std::invalid_argument&) {
            throw InputError("bad integer list '" + s + "'");
        }
    }
    return out;
}

int cmd_enumerate(const Options& opt, int n, const std::string& int_list) {
    if (n != 3 && n != 4) throw InputError("--n must be 3 or 4");
    std::vector<int> kmaxes = int_list.empty() ? std::vector<int>{} : parse_int_list(int_list);
    auto records = classify(n, kmaxes, opt.threads);
    const auto labels = default_labels(n);
    auto yn = [](bool b) { return std::string(b ? "y" : "n"); };

    std::size_t raw = 0;
    json rows = json::array();
    std::ostringstream text;
    text << "# encoding class_size lines universal dbe quasi metric";
    for (int k : kmaxes) text << " int:" << k;
    text << " digraph relation\n";
    for (const auto& r : records) {
        raw += r.class_size;
        json ints = json::object();
        for (const auto& [k, v] : r.realizable_int) ints[std::to_string(k)] = v;
        json row = {{"encoding", r.canonical.encoding()},
                    {"triples", triple_list(r.canonical, labels)},
                    {"class_size", r.class_size},
                    {"line_count", r.line_count},
                    {"has_universal", r.has_universal},
                    {"satisfies_dbe", r.satisfies_dbe},
                    {"realizable_quasi", r.realizable_quasi},
                    {"realizable_metric", r.realizable_metric},
                    {"quasi_slack", r.quasi_slack ? json(r.quasi_slack->str()) : json(nullptr)},
                    {"metric_slack", r.metric_slack ? json(r.metric_slack->str()) : json(nullptr)},
                    {"realizable_int", ints},
                    {"realizable_digraph", r.realizable_digraph}};
        if (r.witness) row["witness"] = matrix_json(*r.witness);
        rows.push_back(row);

        text << r.canonical.encoding() << ' ' << r.class_size << ' ' << r.line_count << ' ' << yn(r.has_universal) << ' '
             << yn(r.satisfies_dbe) << ' ' << yn(r.realizable_quasi) << ' ' << yn(r.realizable_metric);
        for (int k : kmaxes) text << ' ' << yn(r.realizable_int.at(k));
        text << ' ' << yn(r.realizable_digraph) << ' ' << format_relation(r.canonical, labels) << '\n';
    }
    text << "# n=" << n << " raw=" << raw << " classes=" << records.size() << '\n';
    json j = {{"command", "enumerate"}, {"n", n}, {"raw_candidates", raw}, {"class_count", records.size()}, {"classes", rows}};
    return emit(opt, j, text.str(), kExitPositive);
}

int cmd_verify(const Options& opt, const std::string& q4_path, const std::string& q4_triples,
               const std::vector<std::string>& only) {
    ClaimInputs in = default_claim_inputs();
    if (!q4_path.empty()) in.q4 = parse_matrix(read_file(q4_path));
    if (in.q4.n() != 4) throw InputError("the four-point fixture must have four points");
    in.q4_betweenness = q4_triples.empty() ? parse_triples(format_triples(fixtures::q4_betweenness(), fixtures::q4().labels()), in.q4.labels())
                                           : parse_triples(read_file(q4_triples), in.q4.labels());
    in.threads = opt.threads;
    in.only = only;

    std::vector<ClaimCheck> checks;
    try {
        checks = verify_claims(in);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    json arr = json::array();
    std::string text;
    for (const auto& c : checks) {
        json facts = json::array();
        text += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.id + "  " + c.claim + "\n";
        for (const auto& [k, v] : c.facts) {
            facts.push_back({{"key", k}, {"value", v}});
            if (v.find('\n') != std::string::npos)
                text += "      " + k + ":\n" + indent(v, "        ");
            else
                text += "      " + k + ": " + v + "\n";
        }
        arr.push_back({{"id", c.id}, {"claim", c.claim}, {"pass", c.pass}, {"facts", facts}});
    }
    bool ok = all_pass(checks);
    text += std::string(ok ? "all claims verified" : "some claims FAILED") + "\n";
    json j = {{"command", "verify-paper"}, {"all_pass", ok}, {"checks", arr}};
    return emit(opt, j, text, ok ? kExitPositive : kExitNegative);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lines, betweenness and realizability of finite quasi-metric spaces"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "Emit one JSON object instead of text");

    std::string matrix, matrix_b, triples, labels, labels_b, variant = "quasi", int_list, q4_path, q4_triples;
    std::vector<std::string> only;
    int n = 4;

    auto* validate = app.add_subcommand("validate", "Check the quasi-metric axioms of a matrix file");
    validate->add_option("matrix", matrix, "Matrix file")->required();
    auto* between = app.add_subcommand("betweenness", "Print the betweenness of a matrix file as triples");
    between->add_option("matrix", matrix, "Matrix file")->required();

    auto add_relation_input = [&](CLI::App* sub) {
        sub->add_option("matrix", matrix, "Matrix file");
        sub->add_option("--triples", triples, "Triples file");
        sub->add_option("--labels", labels, "Point labels, e.g. p,q,r,s (default: order of appearance)");
    };
    auto* lines = app.add_subcommand("lines", "Lines of a space or of a betweenness relation");
    add_relation_input(lines);
    auto* dbe = app.add_subcommand("dbe", "DBE verdict: universal line or at least n lines");
    add_relation_input(dbe);

    auto* canon = app.add_subcommand("canon", "Canonical form of a betweenness relation");
    canon->add_option("--triples", triples, "Triples file")->required();
    canon->add_option("--labels", labels, "Point labels");

    auto* iso = app.add_subcommand("iso", "Isomorphism test between two triples files");
    iso->add_option("file_a", matrix, "First triples file")->required();
    iso->add_option("file_b", matrix_b, "Second triples file")->required();
    iso->add_option("--labels-a", labels, "Labels of the first file");
    iso->add_option("--labels-b", labels_b, "Labels of the second file");

    auto* realize_cmd = app.add_subcommand("realize", "Find a realizing space for a betweenness relation");
    realize_cmd->add_option("--variant", variant, "quasi | metric | int:K | digraph");
    realize_cmd->add_option("--triples", triples, "Triples file")->required();
    realize_cmd->add_option("--labels", labels, "Point labels");

    auto* enumerate = app.add_subcommand("enumerate", "Classify every consistent relation on 3 or 4 points");
    enumerate->add_option("--n", n, "Point count (3 or 4)");
    enumerate->add_option("--int", int_list, "Comma-separated integer bounds, e.g. 2,3");
    enumerate->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify-paper", "Check every claim about the four-point space");
    verify->add_option("--q4", q4_path, "Override the four-point matrix");
    verify->add_option("--q4-triples", q4_triples, "Override its expected betweenness");
    verify->add_option("--only", only, "Run only these check ids");
    verify->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*validate) return cmd_validate(opt, matrix);
        if (*between) return cmd_betweenness(opt, matrix);
        if (*lines) return cmd_lines(opt, load_relation(matrix, triples, labels));
        if (*dbe) return cmd_dbe(opt, load_relation(matrix, triples, labels));
        if (*canon) return cmd_canon(opt, load_triples(triples, labels));
        if (*iso) return cmd_iso(opt, load_triples(matrix, labels), load_triples(matrix_b, labels_b));
        if (*realize_cmd) return cmd_realize(opt, load_triples(triples, labels), variant);
        if (*enumerate) return cmd_enumerate(opt, n, int_list);
        if (*verify) return cmd_verify(opt, q4_path, q4_triples, only);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
