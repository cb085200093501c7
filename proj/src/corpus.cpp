#include "reslat/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace reslat {

namespace {

using Rows = std::vector<std::vector<std::string>>;

Rows rows_from(std::initializer_list<const char*> flat, int n) {
    Rows rows;
    auto it = flat.begin();
    for (int a = 0; a < n; ++a) {
        std::vector<std::string> row;
        for (int b = 0; b < n; ++b) row.emplace_back(*it++);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Builds join/meet tables from a covering relation; every corpus order is
/// a lattice, which the lub/glb search double-checks.
struct OrderTables {
    Rows join, meet;
};

OrderTables order_tables(const std::vector<std::string>& elements,
                         const std::vector<std::pair<const char*, const char*>>& covers) {
    const int n = static_cast<int>(elements.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[elements[static_cast<size_t>(i)]] = i;

    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i) * n + i] = 1;
    for (const auto& [lo, hi] : covers) leq[static_cast<size_t>(index.at(lo)) * n + index.at(hi)] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (leq[static_cast<size_t>(a) * n + b] && leq[static_cast<size_t>(b) * n + c] &&
                        !leq[static_cast<size_t>(a) * n + c]) {
                        leq[static_cast<size_t>(a) * n + c] = 1;
                        changed = true;
                    }
    }

    auto bound = [&](int a, int b, bool upper) {
        int best = -1;
        for (int c = 0; c < n; ++c) {
            const bool is_bound = upper
                                      ? leq[static_cast<size_t>(a) * n + c] &&
                                            leq[static_cast<size_t>(b) * n + c]
                                      : leq[static_cast<size_t>(c) * n + a] &&
                                            leq[static_cast<size_t>(c) * n + b];
            if (!is_bound) continue;
            if (best < 0)
                best = c;
            else if (upper ? leq[static_cast<size_t>(c) * n + best]
                           : leq[static_cast<size_t>(best) * n + c])
                best = c;
        }
        // best must compare with every bound
        for (int c = 0; c < n; ++c) {
            const bool is_bound = upper
                                      ? leq[static_cast<size_t>(a) * n + c] &&
                                            leq[static_cast<size_t>(b) * n + c]
                                      : leq[static_cast<size_t>(c) * n + a] &&
                                            leq[static_cast<size_t>(c) * n + b];
            if (is_bound && !(upper ? leq[static_cast<size_t>(best) * n + c]
                                    : leq[static_cast<size_t>(c) * n + best]))
                throw Error("corpus order is not a lattice");
        }
        return best;
    };

    OrderTables t;
    for (int a = 0; a < n; ++a) {
        std::vector<std::string> jrow, mrow;
        for (int b = 0; b < n; ++b) {
            jrow.push_back(elements[static_cast<size_t>(bound(a, b, true))]);
            mrow.push_back(elements[static_cast<size_t>(bound(a, b, false))]);
        }
        t.join.push_back(std::move(jrow));
        t.meet.push_back(std::move(mrow));
    }
    return t;
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> corpus;

    {
        CorpusEntry e;
        e.key = "RL6D";
        e.provenance = "six elements, 0 < a < b < {c,d} < 1; a local MTL-algebra that is not IMTL";
        e.spec.name = "RL6D";
        e.spec.elements = {"0", "a", "b", "c", "d", "1"};
        auto t = order_tables(e.spec.elements,
                              {{"0", "a"}, {"a", "b"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
        e.spec.join = t.join;
        e.spec.meet = t.meet;
        e.spec.prod = rows_from({"0", "0", "0", "0", "0", "0",  //
                                 "0", "0", "0", "a", "0", "a",  //
                                 "0", "0", "b", "b", "b", "b",  //
                                 "0", "a", "b", "c", "b", "c",  //
                                 "0", "0", "b", "b", "d", "d",  //
                                 "0", "a", "b", "c", "d", "1"},
                                6);
        e.spec.imp = rows_from({"1", "1", "1", "1", "1", "1",  //
                                "d", "1", "1", "1", "1", "1",  //
                                "a", "a", "1", "1", "1", "1",  //
                                "0", "a", "d", "1", "d", "1",  //
                                "a", "a", "c", "c", "1", "1",  //
                                "0", "a", "b", "c", "d", "1"},
                               6);
        e.spec.bottom = "0";
        e.spec.top = "1";
        corpus.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.key = "RL6C";
        e.provenance = "six-element chain 0 < a < b < c < d < 1; an IMTL-algebra that is not BL";
        e.spec.name = "RL6C";
        e.spec.elements = {"0", "a", "b", "c", "d", "1"};
        auto t = order_tables(e.spec.elements,
                              {{"0", "a"}, {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "1"}});
        e.spec.join = t.join;
        e.spec.meet = t.meet;
        e.spec.prod = rows_from({"0", "0", "0", "0", "0", "0",  //
                                 "0", "0", "0", "0", "0", "a",  //
                                 "0", "0", "0", "0", "b", "b",  //
                                 "0", "0", "0", "b", "c", "c",  //
                                 "0", "0", "b", "c", "d", "d",  //
                                 "0", "a", "b", "c", "d", "1"},
                                6);
        e.spec.imp = rows_from({"1", "1", "1", "1", "1", "1",  //
                                "d", "1", "1", "1", "1", "1",  //
                                "c", "c", "1", "1", "1", "1",  //
                                "b", "b", "c", "1", "1", "1",  //
                                "a", "a", "b", "c", "1", "1",  //
                                "0", "a", "b", "c", "d", "1"},
                               6);
        e.spec.bottom = "0";
        e.spec.top = "1";
        corpus.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.key = "RL7Q";
        e.provenance =
            "seven elements, 0 < a < b < e < 1 and 0 < c < d < e; the quotient by its dense "
            "filter is quasi-local while the algebra itself is not";
        e.spec.name = "RL7Q";
        e.spec.elements = {"0", "a", "b", "c", "d", "e", "1"};
        auto t = order_tables(e.spec.elements, {{"0", "a"},
                                                {"a", "b"},
                                                {"b", "e"},
                                                {"0", "c"},
                                                {"c", "d"},
                                                {"d", "e"},
                                                {"e", "1"}});
        e.spec.join = t.join;
        e.spec.meet = t.meet;
        e.spec.prod = rows_from({"0", "0", "0", "0", "0", "0", "0",  //
                                 "0", "a", "a", "0", "0", "a", "a",  //
                                 "0", "a", "a", "0", "0", "a", "b",  //
                                 "0", "0", "0", "c", "c", "c", "c",  //
                                 "0", "0", "0", "c", "c", "c", "d",  //
                                 "0", "a", "a", "c", "c", "e", "e",  //
                                 "0", "a", "b", "c", "d", "e", "1"},
                                7);
        e.spec.imp = rows_from({"1", "1", "1", "1", "1", "1", "1",  //
                                "d", "1", "1", "d", "d", "1", "1",  //
                                "d", "e", "1", "d", "d", "1", "1",  //
                                "b", "b", "b", "1", "1", "1", "1",  //
                                "b", "b", "b", "e", "1", "1", "1",  //
                                "0", "b", "b", "d", "d", "1", "1",  //
                                "0", "a", "b", "c", "d", "e", "1"},
                               7);
        e.spec.bottom = "0";
        e.spec.top = "1";
        corpus.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.key = "BOOL2";
        e.provenance = "two-element Boolean algebra; the smallest residuated lattice with 0 != 1";
        e.spec.name = "BOOL2";
        e.spec.elements = {"0", "1"};
        e.spec.join = rows_from({"0", "1", "1", "1"}, 2);
        e.spec.meet = rows_from({"0", "0", "0", "1"}, 2);
        e.spec.prod = rows_from({"0", "0", "0", "1"}, 2);
        e.spec.imp = rows_from({"1", "1", "0", "1"}, 2);
        e.spec.bottom = "0";
        e.spec.top = "1";
        corpus.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.key = "BOOL4";
        e.provenance = "four-element Boolean algebra (two incomparable atoms)";
        e.spec.name = "BOOL4";
        e.spec.elements = {"0", "x", "y", "1"};
        auto t = order_tables(e.spec.elements, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
        e.spec.join = t.join;
        e.spec.meet = t.meet;
        e.spec.prod = t.meet; // Boolean: product is meet
        e.spec.bottom = "0";
        e.spec.top = "1";
        corpus.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.key = "CHAIN3_LUK";
        e.provenance = "three-element Lukasiewicz chain (an MV-algebra)";
        e.spec.name = "CHAIN3_LUK";
        e.spec.elements = {"0", "h", "1"};
        auto t = order_tables(e.spec.elements, {{"0", "h"}, {"h", "1"}});
        e.spec.join = t.join;
        e.spec.meet = t.meet;
        e.spec.prod = rows_from({"0", "0", "0", "0", "0", "h", "0", "h", "1"}, 3);
        e.spec.bottom = "0";
        e.spec.top = "1";
        corpus.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.key = "CHAIN3_GODEL";
        e.provenance = "three-element Godel chain (a BL-algebra that is not MV)";
        e.spec.name = "CHAIN3_GODEL";
        e.spec.elements = {"0", "h", "1"};
        auto t = order_tables(e.spec.elements, {{"0", "h"}, {"h", "1"}});
        e.spec.join = t.join;
        e.spec.meet = t.meet;
        e.spec.prod = t.meet;
        e.spec.bottom = "0";
        e.spec.top = "1";
        corpus.push_back(std::move(e));
    }

    return corpus;
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

} // namespace

std::vector<std::string> corpus_keys() {
    std::vector<std::string> keys;
    for (const auto& e : corpus()) keys.push_back(e.key);
    return keys;
}

const CorpusEntry& builtin(const std::string& key) {
    for (const auto& e : corpus())
        if (e.key == key) return e;
    throw UnknownKey("no built-in algebra named '" + key + "'");
}

ResiduatedLattice builtin_algebra(const std::string& key) {
    return ResiduatedLattice::validate(builtin(key).spec);
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

} // namespace

AlgebraSpec parse_spec(const std::string& text, const std::string& origin) {
    const std::vector<Line> lines = tokenize(text);
    AlgebraSpec spec;
    bool have_name = false, have_elements = false, have_bottom = false, have_top = false;

    auto fail = [&](int line, const std::string& msg) -> void {
        throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
    };

    size_t i = 0;
    auto read_table = [&](const std::string& which, int header_line) {
        const int n = static_cast<int>(spec.elements.size());
        Rows rows;
        for (int r = 0; r < n; ++r) {
            if (i >= lines.size())
                fail(header_line, which + " table is truncated: expected " + std::to_string(n) +
                                      " rows, got " + std::to_string(r));
            if (static_cast<int>(lines[i].tokens.size()) != n)
                fail(lines[i].number, which + " table row " + std::to_string(r + 1) + " has " +
                                          std::to_string(lines[i].tokens.size()) +
                                          " entries, expected " + std::to_string(n));
            rows.push_back(lines[i].tokens);
            ++i;
        }
        return rows;
    };

    while (i < lines.size()) {
        const Line& line = lines[i];
        const std::string& head = line.tokens[0];
        if (head == "name") {
            if (line.tokens.size() != 2) fail(line.number, "'name' takes one value");
            spec.name = line.tokens[1];
            have_name = true;
            ++i;
        } else if (head == "elements") {
            spec.elements.assign(line.tokens.begin() + 1, line.tokens.end());
            if (spec.elements.empty()) fail(line.number, "'elements' needs at least one name");
            have_elements = true;
            ++i;
        } else if (head == "bottom" || head == "top") {
            if (line.tokens.size() != 2) fail(line.number, "'" + head + "' takes one value");
            (head == "bottom" ? spec.bottom : spec.top) = line.tokens[1];
            (head == "bottom" ? have_bottom : have_top) = true;
            ++i;
        } else if (head == "join" || head == "meet" || head == "prod" || head == "imp") {
            if (!have_elements) fail(line.number, "table '" + head + "' before 'elements'");
            const int header_line = line.number;
            ++i;
            Rows rows = read_table(head, header_line);
            if (head == "join")
                spec.join = std::move(rows);
            else if (head == "meet")
                spec.meet = std::move(rows);
            else if (head == "prod")
                spec.prod = std::move(rows);
            else
                spec.imp = std::move(rows);
        } else {
            fail(line.number, "unknown field '" + head + "'");
        }
    }

    if (!have_name) throw ParseError(origin + ": missing 'name'");
    if (!have_elements) throw ParseError(origin + ": missing 'elements'");
    if (!have_bottom || !have_top) throw ParseError(origin + ": missing 'bottom' or 'top'");
    if (spec.join.empty() || spec.meet.empty() || spec.prod.empty())
        throw ParseError(origin + ": missing 'join', 'meet' or 'prod' table");
    return spec;
}

AlgebraSpec load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str(), path);
}

std::string format_spec(const AlgebraSpec& spec) {
    std::ostringstream out;
    out << "name " << spec.name << "\n";
    out << "elements";
    for (const auto& e : spec.elements) out << " " << e;
    out << "\nbottom " << spec.bottom << "\ntop " << spec.top << "\n";
    auto table = [&](const std::string& which, const Rows& rows) {
        out << which << "\n";
        for (const auto& row : rows) {
            for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
            out << "\n";
        }
    };
    table("join", spec.join);
    table("meet", spec.meet);
    table("prod", spec.prod);
    if (spec.imp) table("imp", *spec.imp);
    return out.str();
}

void save(const std::string& path, const AlgebraSpec& spec) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << format_spec(spec);
    if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<std::pair<int, int>> covering_pairs(const ResiduatedLattice& l) {
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b) {
            if (a == b || !l.leq(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < l.size(); ++c)
                if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) { direct = false; break; }
            if (direct) covers.emplace_back(a, b);
        }
    return covers;
}

std::string hasse_dot(const ResiduatedLattice& l) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    out << "  {rank=source; \"" << l.name_of(l.bottom()) << "\";}\n";
    for (int a = 0; a < l.size(); ++a) out << "  \"" << l.name_of(a) << "\";\n";
    for (const auto& [lo, hi] : covering_pairs(l))
        out << "  \"" << l.name_of(lo) << "\" -> \"" << l.name_of(hi) << "\";\n";
    out << "}\n";
    return out.str();
}

void export_hasse(const ResiduatedLattice& l, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << hasse_dot(l);
    if (!out) throw IoError("write to '" + path + "' failed");
}

} // namespace reslat
