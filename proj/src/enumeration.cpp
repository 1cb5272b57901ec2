#include "qmlines/enumeration.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "parallel.hpp"
#include "qmlines/core.hpp"
#include "qmlines/isomorphism.hpp"
#include "qmlines/realizability.hpp"

namespace qmlines {

std::vector<Betweenness> consistent_patterns_on_support() {
    std::vector<Betweenness> out;
    for (std::uint64_t bits = 0; bits < (1U << triple_count(3)); ++bits) {
        Betweenness b = Betweenness::from_encoding(3, bits);
        if (consistency_check(b)) out.push_back(std::move(b));
    }
    return out;
}

namespace {

void check_supported(int n) {
    if (n != 3 && n != 4) throw std::invalid_argument("enumeration supports n = 3 or 4, got " + std::to_string(n));
}

// For each 3-point support of n points, the consistent patterns lifted to
// n-point encodings.
std::vector<std::vector<std::uint64_t>> lifted_patterns(int n) {
    std::vector<Betweenness> patterns = consistent_patterns_on_support();
    std::vector<std::vector<std::uint64_t>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const int support[3] = {a, b, c};
                std::vector<std::uint64_t> lifted;
                for (const auto& p : patterns) {
                    Betweenness l(n);
                    p.for_each([&](Triple t) { l.insert({support[t.x], support[t.y], support[t.z]}); });
                    lifted.push_back(l.encoding());
                }
                out.push_back(std::move(lifted));
            }
    return out;
}

// Visits every combination whose first support uses pattern `first`.
template <typename Visit>
void for_each_with_first(const std::vector<std::vector<std::uint64_t>>& lifted, std::size_t first, Visit&& visit) {
    const std::size_t supports = lifted.size();
    std::vector<std::size_t> choice(supports, 0);
    choice[0] = first;
    for (;;) {
        std::uint64_t bits = 0;
        for (std::size_t s = 0; s < supports; ++s) bits |= lifted[s][choice[s]];
        visit(bits);
        std::size_t s = supports;
        while (s-- > 1) {
            if (++choice[s] < lifted[s].size()) break;
            choice[s] = 0;
        }
        if (s == 0) return;
    }
}

}  // namespace

void for_each_consistent(int n, const std::function<void(const Betweenness&)>& visit) {
    check_supported(n);
    auto lifted = lifted_patterns(n);
    for (std::size_t first = 0; first < lifted[0].size(); ++first)
        for_each_with_first(lifted, first, [&](std::uint64_t bits) { visit(Betweenness::from_encoding(n, bits)); });
}

Enumeration enumerate_consistent(int n, int threads) {
    check_supported(n);
    auto lifted = lifted_patterns(n);
    const std::size_t chunks = lifted[0].size();
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> partial(chunks);
    detail::parallel_for(chunks, threads, [&](std::size_t first) {
        auto& counts = partial[first];
        for_each_with_first(lifted, first, [&](std::uint64_t bits) {
            ++counts[canonical_form(Betweenness::from_encoding(n, bits)).form.encoding()];
        });
    });

    std::map<std::uint64_t, std::size_t> merged;
    Enumeration out;
    out.n = n;
    for (const auto& counts : partial)
        for (const auto& [code, size] : counts) {
            merged[code] += size;
            out.raw_count += size;
        }
    for (const auto& [code, size] : merged) out.classes.push_back({Betweenness::from_encoding(n, code), size});
    return out;
}

namespace {

struct Searches {
    std::map<int, std::map<Betweenness, DistanceMatrix>> integer;
    std::map<Betweenness, Digraph> digraph;
};

ClassificationRecord classify_one(const CanonicalClass& cls, const Searches& searches) {
    ClassificationRecord r;
    r.canonical = cls.canonical;
    r.class_size = cls.class_size;
    DbeVerdict v = dbe_verdict(cls.canonical);
    r.line_count = v.line_count;
    r.has_universal = v.has_universal;
    r.satisfies_dbe = v.satisfies_dbe;

    FeasibilityOutcome quasi = realize(cls.canonical, Variant::Quasi);
    r.quasi_slack = quasi.optimal_slack;
    r.realizable_quasi = quasi.realizable();
    r.witness = quasi.witness;

    FeasibilityOutcome metric = realize(cls.canonical, Variant::Metric);
    r.metric_slack = metric.optimal_slack;
    r.realizable_metric = metric.realizable();

    for (const auto& [kmax, index] : searches.integer) r.realizable_int[kmax] = index.contains(cls.canonical);
    r.realizable_digraph = searches.digraph.contains(cls.canonical);
    return r;
}

}  // namespace

std::vector<ClassificationRecord> classify(int n, const std::vector<int>& kmax_list, int threads) {
    check_supported(n);
    Enumeration e = enumerate_consistent(n, threads);

    Searches searches;
    for (int kmax : kmax_list) searches.integer.emplace(kmax, bounded_integer_index(n, kmax));
    searches.digraph = digraph_index(n);

    std::vector<ClassificationRecord> records(e.classes.size());
    detail::parallel_for(e.classes.size(), threads,
                         [&](std::size_t i) { records[i] = classify_one(e.classes[i], searches); });
    return records;
}

TheoremReport verify_theorem_four_points(const Betweenness& reference, int threads) {
    constexpr int n = 4;
    if (reference.n() != n) throw std::invalid_argument("reference relation must live on four points");
    TheoremReport report;
    report.expected = canonical_form(reference).form;

    Enumeration e = enumerate_consistent(n, threads);
    report.raw_candidates = e.raw_count;
    report.canonical_classes = e.classes.size();

    std::vector<const CanonicalClass*> survivors;
    for (const auto& cls : e.classes) {
        DbeVerdict v = dbe_verdict(cls.canonical);
        if (!v.has_universal && v.line_count < n) survivors.push_back(&cls);
    }
    report.line_filter_survivors = survivors.size();
    report.lp_calls = survivors.size();

    std::vector<char> realizable(survivors.size(), 0);
    detail::parallel_for(survivors.size(), threads, [&](std::size_t i) {
        realizable[i] = realize(survivors[i]->canonical, Variant::Quasi).realizable();
    });

    for (std::size_t i = 0; i < survivors.size(); ++i) {
        if (!realizable[i]) continue;
        const CanonicalClass& cls = *survivors[i];
        Searches single;  // per-record exhaustive searches; exceptional classes are rare
        ClassificationRecord r = classify_one(cls, single);
        for (int kmax : {2, 3}) r.realizable_int[kmax] = realize_bounded_integer(cls.canonical, kmax).has_value();
        r.realizable_digraph = realize_digraph(cls.canonical).has_value();
        report.lp_calls += 2;  // classify_one reruns quasi and adds metric
        report.exceptional_classes.push_back(std::move(r));
    }

    report.matches_q4 = report.exceptional_classes.size() == 1 &&
                        report.exceptional_classes.front().canonical == report.expected;
    return report;
}

}  // namespace qmlines
