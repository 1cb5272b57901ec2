#include "qmlines/claims.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qmlines/core.hpp"
#include "qmlines/enumeration.hpp"
#include "qmlines/fixtures.hpp"
#include "qmlines/io.hpp"
#include "qmlines/isomorphism.hpp"
#include "qmlines/realizability.hpp"

namespace qmlines {

ClaimInputs default_claim_inputs() { return {fixtures::q4(), fixtures::q4_betweenness(), 1, {}}; }

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string slack_text(const FeasibilityOutcome& o) {
    return o.optimal_slack ? o.optimal_slack->str() : std::string("infeasible");
}

std::string lines_text(const LineSet& ls, const std::vector<std::string>& labels) {
    std::string out;
    for (PointSet l : ls.lines()) out += (out.empty() ? "" : " ") + format_point_set(l, labels);
    return out;
}

PointSet named_set(const std::string& names, const std::vector<std::string>& labels, bool* ok) {
    PointSet s;
    for (char c : names) {
        auto it = std::find(labels.begin(), labels.end(), std::string(1, c));
        if (it == labels.end()) {
            *ok = false;
            return s;
        }
        s.insert(static_cast<int>(it - labels.begin()));
    }
    return s;
}

ClaimCheck check_quasi_metric(const ClaimInputs& in) {
    ClaimCheck c{"q4-quasi-metric", "the four-point table is a quasi-metric", false, {}};
    ValidationResult v = validate_quasi_metric(in.q4);
    c.pass = v.ok();
    c.facts.emplace_back("violations", std::to_string(v.violations.size()));
    for (const auto& viol : v.violations) c.facts.emplace_back("violation", viol.describe(in.q4));
    return c;
}

ClaimCheck check_betweenness(const ClaimInputs& in) {
    ClaimCheck c{"q4-betweenness", "its betweenness is {pqr, rpq, sqp, qps}", false, {}};
    Betweenness b = betweenness_of(in.q4);
    c.pass = b == in.q4_betweenness;
    c.facts.emplace_back("computed", format_relation(b, in.q4.labels()));
    c.facts.emplace_back("expected", format_relation(in.q4_betweenness, in.q4.labels()));
    return c;
}

ClaimCheck check_lines(const ClaimInputs& in) {
    ClaimCheck c{"q4-lines", "it has exactly three lines {p,q,r}, {p,q,s}, {r,s}, none universal, so DBE fails", false, {}};
    Betweenness b = betweenness_of(in.q4);
    LineSet ls = line_set(b);
    DbeVerdict v = dbe_verdict(b);
    bool labels_ok = true;
    std::vector<PointSet> expected = {named_set("pqr", in.q4.labels(), &labels_ok),
                                      named_set("pqs", in.q4.labels(), &labels_ok),
                                      named_set("rs", in.q4.labels(), &labels_ok)};
    std::sort(expected.begin(), expected.end());
    c.pass = labels_ok && ls.lines() == expected && !v.has_universal && !v.satisfies_dbe;
    c.facts.emplace_back("lines", lines_text(ls, in.q4.labels()));
    c.facts.emplace_back("line_count", std::to_string(v.line_count));
    c.facts.emplace_back("has_universal", yes_no(v.has_universal));
    c.facts.emplace_back("satisfies_dbe", yes_no(v.satisfies_dbe));
    return c;
}

ClaimCheck check_quasi_realizable(const ClaimInputs& in) {
    ClaimCheck c{"q4-lp-realizable", "the relation is realizable by a quasi-metric (exact LP)", false, {}};
    if (!consistency_check(in.q4_betweenness)) {
        c.facts.emplace_back("error", "relation violates the exclusion rule");
        return c;
    }
    FeasibilityOutcome o = realize(in.q4_betweenness, Variant::Quasi, in.q4.labels());
    c.pass = o.realizable();
    c.facts.emplace_back("optimal_slack", slack_text(o));
    if (o.witness) c.facts.emplace_back("witness", format_matrix(*o.witness));
    return c;
}

ClaimCheck check_metric_refutation(const ClaimInputs& in) {
    ClaimCheck c{"metric-refutation", "the relation is not the betweenness of any metric space", false, {}};
    if (!consistency_check(in.q4_betweenness)) {
        c.facts.emplace_back("error", "relation violates the exclusion rule");
        return c;
    }
    FeasibilityOutcome o = realize(in.q4_betweenness, Variant::Metric, in.q4.labels());
    c.pass = !o.realizable();
    c.facts.emplace_back("optimal_slack", slack_text(o));
    return c;
}

ClaimCheck check_integer_refutation(const ClaimInputs& in) {
    ClaimCheck c{"integer-refutation",
                 "no quasi-metric with distances in {0,1,2} has an isomorphic betweenness; {0,1,2,3} does", false, {}};
    if (!consistency_check(in.q4_betweenness)) {
        c.facts.emplace_back("error", "relation violates the exclusion rule");
        return c;
    }
    std::size_t valid2 = 0;
    for_each_bounded_integer_quasi_metric(in.q4.n(), 2, [&](const IntegerMatrix&) { return ++valid2, true; });
    auto with2 = realize_bounded_integer(in.q4_betweenness, 2, in.q4.labels());
    auto with3 = realize_bounded_integer(in.q4_betweenness, 3, in.q4.labels());
    bool verified3 = with3 && verify_witness(*with3, in.q4_betweenness);
    c.pass = !with2 && verified3;
    c.facts.emplace_back("kmax2_quasi_metrics_scanned", std::to_string(valid2));
    c.facts.emplace_back("kmax2_found", yes_no(with2.has_value()));
    c.facts.emplace_back("kmax3_found", yes_no(with3.has_value()));
    if (with3) c.facts.emplace_back("kmax3_witness", format_matrix(*with3));
    return c;
}

ClaimCheck check_digraph_refutation(const ClaimInputs& in) {
    ClaimCheck c{"digraph-refutation", "no strongly connected digraph on four vertices induces an isomorphic betweenness",
                 false, {}};
    if (!consistency_check(in.q4_betweenness) || in.q4.n() > kMaxDigraphPoints) {
        c.facts.emplace_back("error", "relation is inconsistent or too large for exhaustive search");
        return c;
    }
    std::size_t strong = 0;
    for_each_strong_digraph(in.q4.n(), [&](const Digraph&) { return ++strong, true; });
    auto g = realize_digraph(in.q4_betweenness);
    c.pass = !g.has_value();
    c.facts.emplace_back("strong_digraphs_scanned", std::to_string(strong));
    c.facts.emplace_back("found", yes_no(g.has_value()));
    return c;
}

ClaimCheck check_three_points(int threads) {
    ClaimCheck c{"three-point-classification",
                 "five classes on three points with the tabulated lines; only {} and {abc,cba} are metric", false, {}};
    const auto labels = default_labels(3);
    auto records = classify(3, {2}, threads);
    auto table = fixtures::three_point_table();
    bool ok = true;

    std::vector<const ClassificationRecord*> realizable;
    for (const auto& r : records)
        if (r.realizable_quasi) realizable.push_back(&r);
    c.facts.emplace_back("canonical_classes", std::to_string(records.size()));
    c.facts.emplace_back("quasi_realizable_classes", std::to_string(realizable.size()));
    ok = ok && realizable.size() == table.size();

    std::string counts;
    std::set<const ClassificationRecord*> matched;
    for (const auto& row : table) {
        Betweenness canon = canonical_form(row.relation).form;
        auto it = std::find_if(records.begin(), records.end(), [&](const auto& r) { return r.canonical == canon; });
        bool found = it != records.end() && it->realizable_quasi;
        LineSet ls = line_set(row.relation);
        bool cells = true;
        const std::pair<int, int> pairs[6] = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
        for (int k = 0; k < 6; ++k) {
            bool lok = true;
            PointSet want = named_set(row.lines[static_cast<std::size_t>(k)], labels, &lok);
            cells = cells && lok && ls.line(pairs[k].first, pairs[k].second) == want;
        }
        bool count_ok = found && it->line_count == row.line_count && static_cast<int>(ls.size()) == row.line_count;
        bool metric_ok = found && it->realizable_metric == row.metric;
        bool digraph_ok = found && it->realizable_digraph;
        if (found) matched.insert(&*it);
        ok = ok && found && cells && count_ok && metric_ok && digraph_ok;
        counts += (counts.empty() ? "" : ",") + std::to_string(found ? it->line_count : -1);
        c.facts.emplace_back(row.name, std::string("lines ") + (cells ? "match" : "MISMATCH") + ", |L|=" +
                                           std::to_string(ls.size()) + ", metric=" +
                                           yes_no(found && it->realizable_metric) + ", digraph=" +
                                           yes_no(found && it->realizable_digraph));
    }
    ok = ok && matched.size() == table.size();
    c.facts.emplace_back("line_counts", counts);
    c.pass = ok;
    return c;
}

ClaimCheck check_theorem(const ClaimInputs& in) {
    ClaimCheck c{"theorem-four-points",
                 "every quasi-realizable relation on four points without universal line and with fewer than four "
                 "lines is isomorphic to the reference relation",
                 false, {}};
    TheoremReport t = verify_theorem_four_points(in.q4_betweenness, in.threads);
    const auto labels = default_labels(4);
    c.pass = t.matches_q4;
    c.facts.emplace_back("raw_candidates", std::to_string(t.raw_candidates));
    c.facts.emplace_back("canonical_classes", std::to_string(t.canonical_classes));
    c.facts.emplace_back("line_filter_survivors", std::to_string(t.line_filter_survivors));
    c.facts.emplace_back("exceptional_classes", std::to_string(t.exceptional_classes.size()));
    for (const auto& r : t.exceptional_classes)
        c.facts.emplace_back("exceptional", format_relation(r.canonical, labels) + " lines=" + std::to_string(r.line_count) +
                                                " metric=" + yes_no(r.realizable_metric) + " int2=" +
                                                yes_no(r.realizable_int.at(2)) + " digraph=" + yes_no(r.realizable_digraph));
    c.facts.emplace_back("expected", format_relation(t.expected, labels));
    return c;
}

ClaimCheck check_corollary(int threads) {
    ClaimCheck c{"corollary-four-points",
                 "every metric, {0,1,2}-valued or digraph-induced space on four points has the DBE property", false, {}};
    auto records = classify(4, {2}, threads);
    std::size_t metric = 0, int2 = 0, digraph = 0, quasi = 0, counterexamples = 0;
    const auto labels = default_labels(4);
    for (const auto& r : records) {
        metric += r.realizable_metric;
        int2 += r.realizable_int.at(2);
        digraph += r.realizable_digraph;
        quasi += r.realizable_quasi;
        bool restricted = r.realizable_metric || r.realizable_int.at(2) || r.realizable_digraph;
        if (restricted && !r.satisfies_dbe) {
            ++counterexamples;
            c.facts.emplace_back("counterexample", format_relation(r.canonical, labels));
        }
    }
    c.pass = counterexamples == 0;
    c.facts.emplace_back("canonical_classes", std::to_string(records.size()));
    c.facts.emplace_back("quasi_realizable", std::to_string(quasi));
    c.facts.emplace_back("metric_realizable", std::to_string(metric));
    c.facts.emplace_back("int2_realizable", std::to_string(int2));
    c.facts.emplace_back("digraph_realizable", std::to_string(digraph));
    c.facts.emplace_back("counterexamples", std::to_string(counterexamples));
    return c;
}

}  // namespace

namespace {

struct Entry {
    const char* id;
    ClaimCheck (*run)(const ClaimInputs&);
};

const Entry kChecks[] = {
    {"q4-quasi-metric", check_quasi_metric},
    {"q4-betweenness", check_betweenness},
    {"q4-lines", check_lines},
    {"q4-lp-realizable", check_quasi_realizable},
    {"metric-refutation", check_metric_refutation},
    {"integer-refutation", check_integer_refutation},
    {"digraph-refutation", check_digraph_refutation},
    {"three-point-classification", [](const ClaimInputs& in) { return check_three_points(in.threads); }},
    {"theorem-four-points", check_theorem},
    {"corollary-four-points", [](const ClaimInputs& in) { return check_corollary(in.threads); }},
};

}  // namespace

std::vector<std::string> claim_ids() {
    std::vector<std::string> out;
    for (const auto& e : kChecks) out.emplace_back(e.id);
    return out;
}

std::vector<ClaimCheck> verify_claims(const ClaimInputs& in) {
    if (in.q4.n() != 4 || in.q4_betweenness.n() != 4)
        throw std::invalid_argument("the four-point fixture must have four points");
    const auto ids = claim_ids();
    for (const auto& id : in.only)
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw std::invalid_argument("unknown check '" + id + "'");
    std::vector<ClaimCheck> out;
    for (const auto& e : kChecks)
        if (in.only.empty() || std::find(in.only.begin(), in.only.end(), e.id) != in.only.end()) out.push_back(e.run(in));
    return out;
}

}  // namespace qmlines
