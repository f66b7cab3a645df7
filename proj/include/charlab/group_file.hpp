#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "charlab/errors.hpp"
#include "charlab/permutation.hpp"
#include "charlab/recipes.hpp"

namespace charlab {

// Text format for user-supplied groups:
//   # comment lines and blank lines are ignored
//   name: <display name>        (optional)
//   format: perm                (or: format: cayley)
//   degree: <d>                 (perm only)
//   (1 2 3)(4 5)                one generator per line, 1-based points
// or, after "format: cayley":
//   order: <n>
//   <n> lines of <n> space-separated 0-based indices
namespace gfdetail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

struct Line {
    int number;
    std::string text;
};

inline std::vector<Line> significant_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#') continue;
        out.push_back({number, t});
    }
    return out;
}

inline Permutation parse_generator(const Line& line, int degree) {
    std::vector<std::vector<int>> cycles;
    const std::string& s = line.text;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] != '(')
            throw ParseError(line.number, "expected '(' but found '" + s.substr(i) + "'");
        std::size_t start = i;
        ++i;
        std::vector<int> cycle;
        while (true) {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
            if (i >= s.size())
                throw ParseError(line.number, "unclosed cycle '" + s.substr(start) + "'");
            if (s[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError(line.number,
                                 "expected a point or ')' but found '" + s.substr(i, 1) + "'");
            std::size_t tok = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            int point = std::stoi(s.substr(tok, i - tok));
            if (point < 1 || point > degree)
                throw ParseError(line.number, "point '" + s.substr(tok, i - tok) +
                                                  "' outside 1.." + std::to_string(degree));
            cycle.push_back(point);
        }
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
    }
    try {
        return Permutation::from_cycles(cycles, degree);
    } catch (const InvalidPermutation& e) {
        throw ParseError(line.number, std::string(e.what()) + " in '" + s + "'");
    }
}

inline long long parse_header_int(const Line& line, const std::string& key) {
    std::string rest = trim(line.text.substr(key.size()));
    try {
        std::size_t used = 0;
        long long v = std::stoll(rest, &used);
        if (used != rest.size() || v < 1) throw std::invalid_argument(rest);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line.number, "bad value '" + rest + "' for " + key);
    }
}

}  // namespace gfdetail

inline GroupRecipe parse_group_file(std::istream& in) {
    auto lines = gfdetail::significant_lines(in);
    GroupRecipe recipe;
    recipe.name = "file-group";

    std::size_t pos = 0;
    while (pos < lines.size() && lines[pos].text.rfind("name:", 0) == 0) {
        recipe.name = gfdetail::trim(lines[pos].text.substr(5));
        ++pos;
    }
    if (pos >= lines.size())
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "missing 'format:' header");
    if (lines[pos].text == "format: perm") {
        recipe.kind = GroupRecipe::Kind::perm_gens;
        ++pos;
        if (pos >= lines.size() || lines[pos].text.rfind("degree:", 0) != 0)
            throw ParseError(pos < lines.size() ? lines[pos].number : lines.back().number,
                             pos < lines.size()
                                 ? "expected 'degree:' but found '" + lines[pos].text + "'"
                                 : "missing 'degree:' header");
        recipe.degree = static_cast<int>(gfdetail::parse_header_int(lines[pos], "degree:"));
        ++pos;
        for (; pos < lines.size(); ++pos)
            recipe.gens.push_back(gfdetail::parse_generator(lines[pos], recipe.degree));
        return recipe;
    }
    if (lines[pos].text == "format: cayley") {
        recipe.kind = GroupRecipe::Kind::cayley;
        ++pos;
        if (pos >= lines.size() || lines[pos].text.rfind("order:", 0) != 0)
            throw ParseError(pos < lines.size() ? lines[pos].number : lines.back().number,
                             pos < lines.size()
                                 ? "expected 'order:' but found '" + lines[pos].text + "'"
                                 : "missing 'order:' header");
        long long n = gfdetail::parse_header_int(lines[pos], "order:");
        ++pos;
        for (long long row = 0; row < n; ++row, ++pos) {
            if (pos >= lines.size())
                throw ParseError(lines.back().number,
                                 "expected " + std::to_string(n) + " table rows, found " +
                                     std::to_string(row));
            std::istringstream rowin(lines[pos].text);
            std::vector<int> entries;
            std::string tok;
            while (rowin >> tok) {
                try {
                    std::size_t used = 0;
                    int v = std::stoi(tok, &used);
                    if (used != tok.size() || v < 0 || v >= n) throw std::invalid_argument(tok);
                    entries.push_back(v);
                } catch (const std::exception&) {
                    throw ParseError(lines[pos].number, "bad table entry '" + tok + "'");
                }
            }
            if (static_cast<long long>(entries.size()) != n)
                throw ParseError(lines[pos].number,
                                 "expected " + std::to_string(n) + " entries, found " +
                                     std::to_string(entries.size()) + " in '" + lines[pos].text +
                                     "'");
            recipe.cayley_table.push_back(std::move(entries));
        }
        if (pos < lines.size())
            throw ParseError(lines[pos].number,
                             "unexpected content after table: '" + lines[pos].text + "'");
        return recipe;
    }
    throw ParseError(lines[pos].number,
                     "expected 'format: perm' or 'format: cayley' but found '" +
                         lines[pos].text + "'");
}

inline GroupRecipe parse_group_string(const std::string& text) {
    std::istringstream in(text);
    return parse_group_file(in);
}

inline GroupRecipe load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file '" + path + "'");
    return parse_group_file(in);
}

inline std::string serialize_group_file(const GroupRecipe& r) {
    std::ostringstream out;
    out << "name: " << r.name << "\n";
    if (r.kind == GroupRecipe::Kind::perm_gens) {
        out << "format: perm\n";
        out << "degree: " << r.degree << "\n";
        for (const auto& g : r.gens) out << g.to_cycle_string() << "\n";
        return out.str();
    }
    if (r.kind == GroupRecipe::Kind::cayley) {
        out << "format: cayley\n";
        out << "order: " << r.cayley_table.size() << "\n";
        for (const auto& row : r.cayley_table) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
            out << "\n";
        }
        return out.str();
    }
    throw BadRecipe("only perm and cayley recipes serialize to the group file format");
}

}  // namespace charlab
