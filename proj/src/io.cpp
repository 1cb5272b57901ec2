#include "qmlines/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qmlines/rational.hpp"

namespace qmlines {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    int column;
};

struct Line {
    int number;
    std::vector<Token> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            if (i >= raw.size()) break;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
        }
        if (line.tokens.empty() || line.tokens.front().text.front() == '#') continue;
        out.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return out;
}

}  // namespace

DistanceMatrix parse_matrix(std::string_view text) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) throw ParseError("missing label header", 0, 0);

    const Line& header = lines.front();
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const Token& t : header.tokens) {
        if (!seen.insert(t.text).second) throw ParseError("duplicate label '" + t.text + "'", header.number, t.column);
        labels.push_back(t.text);
    }
    const std::size_t n = labels.size();
    if (n < 2 || n > kMaxPoints) throw ParseError("need between 2 and 64 labels", header.number, 1);

    if (lines.size() - 1 != n)
        throw ParseError("expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1),
                         lines.size() > n + 1 ? lines[n + 1].number : 0, 0);

    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 1; r <= n; ++r) {
        const Line& line = lines[r];
        if (line.tokens.size() != n)
            throw ParseError("row has " + std::to_string(line.tokens.size()) + " entries, expected " + std::to_string(n),
                             line.number, 1);
        std::vector<Rational> row;
        for (const Token& t : line.tokens) {
            Rational v;
            if (!Rational::parse(t.text, &v))
                throw ParseError("'" + t.text + "' is not an integer or fraction", line.number, t.column);
            if (v.sign() < 0) throw ParseError("negative distance '" + t.text + "'", line.number, t.column);
            row.push_back(std::move(v));
        }
        rows.push_back(std::move(row));
    }
    return DistanceMatrix(std::move(labels), rows);
}

std::string format_matrix(const DistanceMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.n(); ++i) os << (i ? " " : "") << m.labels()[static_cast<std::size_t>(i)];
    os << '\n';
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) os << (j ? " " : "") << m(i, j);
        os << '\n';
    }
    return os.str();
}

Betweenness parse_triples(std::string_view text, const std::vector<std::string>& labels) {
    Betweenness b(static_cast<int>(labels.size()));
    auto index = [&](const Token& t, int line) {
        auto it = std::find(labels.begin(), labels.end(), t.text);
        if (it == labels.end()) throw ParseError("unknown label '" + t.text + "'", line, t.column);
        return static_cast<int>(it - labels.begin());
    };
    for (const Line& line : significant_lines(text)) {
        if (line.tokens.size() != 3)
            throw ParseError("expected three labels, found " + std::to_string(line.tokens.size()), line.number, 1);
        Triple t{index(line.tokens[0], line.number), index(line.tokens[1], line.number), index(line.tokens[2], line.number)};
        if (t.x == t.y || t.y == t.z || t.x == t.z) throw ParseError("repeated point within a triple", line.number, 1);
        b.insert(t);
    }
    return b;
}

std::string format_triples(const Betweenness& b, const std::vector<std::string>& labels) {
    std::ostringstream os;
    b.for_each([&](Triple t) {
        os << labels[static_cast<std::size_t>(t.x)] << ' ' << labels[static_cast<std::size_t>(t.y)] << ' '
           << labels[static_cast<std::size_t>(t.z)] << '\n';
    });
    return os.str();
}

std::vector<std::string> infer_labels(std::string_view triples_text) {
    std::vector<std::string> out;
    for (const Line& line : significant_lines(triples_text))
        for (const Token& t : line.tokens)
            if (std::find(out.begin(), out.end(), t.text) == out.end()) out.push_back(t.text);
    return out;
}

std::vector<std::string> parse_label_list(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    std::set<std::string> seen(out.begin(), out.end());
    if (seen.size() != out.size()) throw ParseError("duplicate label in label list", 0, 0);
    return out;
}

std::string format_relation(const Betweenness& b, const std::vector<std::string>& labels) {
    bool short_labels = std::all_of(labels.begin(), labels.end(), [](const std::string& l) { return l.size() == 1; });
    std::string out = "{";
    bool first = true;
    b.for_each([&](Triple t) {
        if (!first) out += ", ";
        first = false;
        const auto& x = labels[static_cast<std::size_t>(t.x)];
        const auto& y = labels[static_cast<std::size_t>(t.y)];
        const auto& z = labels[static_cast<std::size_t>(t.z)];
        out += short_labels ? x + y + z : "(" + x + "," + y + "," + z + ")";
    });
    return out + "}";
}

std::string format_point_set(PointSet s, const std::vector<std::string>& labels) {
    std::string out = "{";
    bool first = true;
    for (int p : s.points()) {
        if (!first) out += ",";
        first = false;
        out += labels[static_cast<std::size_t>(p)];
    }
    return out + "}";
}

}  // namespace qmlines
