#include "ntc/io.hpp"

#include <fstream>
#include <sstream>

namespace ntc {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw error(errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

/// Strips comments and returns the next nonempty line; false at EOF.
bool next_line(std::istream& in, std::string& out, int& lineno) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto end = raw.find_last_not_of(" \t\r");
        if (end == std::string::npos) continue;
        raw.erase(end + 1);
        out = raw;
        return true;
    }
    return false;
}

std::vector<int> parse_ints(const std::string& text, int lineno) {
    std::istringstream is(text);
    std::vector<int> out;
    int v;
    while (is >> v) out.push_back(v);
    if (!is.eof()) parse_fail(lineno, "expected integers");
    return out;
}

}  // namespace

Permutation parse_permutation(const std::string& text, int degree) {
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '(') {
        std::vector<std::vector<int>> cycles;
        std::vector<int> cur;
        std::string num;
        bool open = false;
        auto flush_num = [&] {
            if (num.empty()) return;
            cur.push_back(std::stoi(num));
            num.clear();
        };
        for (char ch : text) {
            if (ch == '(') {
                if (open) throw error(errc::parse_error, "nested cycle");
                open = true;
                cur.clear();
            } else if (ch == ')') {
                if (!open) throw error(errc::parse_error, "unbalanced cycle");
                flush_num();
                if (!cur.empty()) cycles.push_back(cur);
                open = false;
            } else if (ch >= '0' && ch <= '9') {
                num += ch;
            } else if (ch == ' ' || ch == ',' || ch == '\t') {
                flush_num();
            } else {
                throw error(errc::parse_error, std::string("bad character in cycle: ") + ch);
            }
        }
        if (open) throw error(errc::parse_error, "unbalanced cycle");
        return Permutation::from_cycles(degree, cycles);
    }
    std::istringstream is(text);
    std::vector<int> images;
    int v;
    while (is >> v) images.push_back(v);
    if (!is.eof() || static_cast<int>(images.size()) != degree)
        throw error(errc::parse_error, "expected " + std::to_string(degree) + " images");
    return Permutation(std::move(images));
}

namespace {

PermGroup read_group_body(std::istream& in, int& lineno, std::vector<std::string>* extra_lines) {
    std::string line;
    if (!next_line(in, line, lineno)) parse_fail(lineno, "missing degree header");
    std::istringstream head(line);
    std::string kw;
    int degree;
    if (!(head >> kw >> degree) || kw != "degree" || degree < 1)
        parse_fail(lineno, "expected `degree n`");
    std::vector<Permutation> gens;
    while (next_line(in, line, lineno)) {
        if (extra_lines && line.rfind("map", 0) == 0) {
            extra_lines->push_back(line);
            continue;
        }
        try {
            gens.push_back(parse_permutation(line, degree));
        } catch (const error& e) {
            parse_fail(lineno, e.what());
        }
    }
    return PermGroup(degree, std::move(gens));
}

}  // namespace

PermGroup read_group(std::istream& in) {
    int lineno = 0;
    return read_group_body(in, lineno, nullptr);
}

void write_group(std::ostream& out, const PermGroup& g) {
    out << "degree " << g.degree() << "\n";
    for (const auto& p : g.generators()) out << p.to_cycle_string() << "\n";
}

Code read_code(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_line(in, line, lineno)) parse_fail(lineno, "missing `m q` header");
    auto head = parse_ints(line, lineno);
    if (head.size() != 2 || head[0] < 1 || head[1] < 2) parse_fail(lineno, "expected `m q`");
    int m = head[0], q = head[1];
    std::vector<Vertex> words;
    while (next_line(in, line, lineno)) {
        auto symbols = parse_ints(line, lineno);
        if (static_cast<int>(symbols.size()) != m)
            parse_fail(lineno, "expected " + std::to_string(m) + " symbols");
        try {
            words.emplace_back(std::move(symbols), q);
        } catch (const error& e) {
            parse_fail(lineno, e.what());
        }
    }
    if (words.empty()) parse_fail(lineno, "code file has no words");
    return Code(m, q, std::move(words));
}

void write_code(std::ostream& out, const Code& c) {
    out << c.length() << " " << c.alphabet() << "\n";
    for (const auto& w : c.words()) {
        for (int i = 0; i < c.length(); ++i) out << (i ? " " : "") << w[i];
        out << "\n";
    }
}

PairedAction read_paired_action(std::istream& in) {
    int lineno = 0;
    std::vector<std::string> map_lines;
    PermGroup g = read_group_body(in, lineno, &map_lines);
    if (map_lines.size() != g.generators().size())
        throw error(errc::parse_error, "expected one `map` line per generator");
    std::vector<Permutation> images(g.generators().size(), Permutation(g.degree()));
    std::vector<char> seen(g.generators().size(), 0);
    for (const auto& line : map_lines) {
        std::istringstream is(line);
        std::string kw, arrow;
        std::size_t idx;
        if (!(is >> kw >> idx >> arrow) || arrow != "->")
            throw error(errc::parse_error, "expected `map i -> <perm>`");
        if (idx >= images.size() || seen[idx])
            throw error(errc::parse_error, "bad or repeated map index");
        std::string rest;
        std::getline(is, rest);
        images[idx] = parse_permutation(rest, g.degree());
        seen[idx] = 1;
    }
    return PairedAction{std::move(g), std::move(images)};
}

void write_paired_action(std::ostream& out, const PairedAction& pa) {
    write_group(out, pa.group1);
    for (std::size_t i = 0; i < pa.group2_images.size(); ++i)
        out << "map " << i << " -> " << pa.group2_images[i].to_cycle_string() << "\n";
}

nlohmann::json wreath_element_json(const WreathElement& x) {
    nlohmann::json bottom = nlohmann::json::array();
    for (const auto& b : x.bottom()) bottom.push_back(b.images());
    return nlohmann::json{{"m", x.m()}, {"q", x.q()}, {"bottom", bottom},
                          {"top", x.top().images()}};
}

WreathElement wreath_element_from_json(const nlohmann::json& j) {
    try {
        int m = j.at("m").get<int>();
        int q = j.at("q").get<int>();
        std::vector<Permutation> bottom;
        for (const auto& b : j.at("bottom")) bottom.emplace_back(b.get<std::vector<int>>());
        Permutation top(j.at("top").get<std::vector<int>>());
        if (static_cast<int>(bottom.size()) != m || (m > 0 && bottom[0].degree() != q))
            throw error(errc::parse_error, "wreath element context mismatch");
        return WreathElement(std::move(bottom), std::move(top));
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, std::string("bad wreath element JSON: ") + e.what());
    }
}

WreathGroup read_wreath_group(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_line(in, line, lineno)) parse_fail(lineno, "missing `m q` header");
    auto head = parse_ints(line, lineno);
    if (head.size() != 2 || head[0] < 1 || head[1] < 2) parse_fail(lineno, "expected `m q`");
    std::vector<WreathElement> gens;
    while (next_line(in, line, lineno)) {
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) parse_fail(lineno, "invalid JSON");
        try {
            gens.push_back(wreath_element_from_json(j));
        } catch (const error& e) {
            parse_fail(lineno, e.what());
        }
        if (gens.back().m() != head[0] || gens.back().q() != head[1])
            parse_fail(lineno, "element context does not match header");
    }
    return WreathGroup(head[0], head[1], std::move(gens));
}

void write_wreath_group(std::ostream& out, const WreathGroup& x) {
    out << x.m() << " " << x.q() << "\n";
    for (const auto& g : x.generators()) out << wreath_element_json(g).dump() << "\n";
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error(errc::invalid_argument, "cannot write " + path);
    return out;
}

}  // namespace

PermGroup read_group_file(const std::string& path) {
    auto in = open_in(path);
    return read_group(in);
}
Code read_code_file(const std::string& path) {
    auto in = open_in(path);
    return read_code(in);
}
PairedAction read_paired_action_file(const std::string& path) {
    auto in = open_in(path);
    return read_paired_action(in);
}
WreathGroup read_wreath_group_file(const std::string& path) {
    auto in = open_in(path);
    return read_wreath_group(in);
}
void write_group_file(const std::string& path, const PermGroup& g) {
    auto out = open_out(path);
    write_group(out, g);
}
void write_code_file(const std::string& path, const Code& c) {
    auto out = open_out(path);
    write_code(out, c);
}
void write_paired_action_file(const std::string& path, const PairedAction& pa) {
    auto out = open_out(path);
    write_paired_action(out, pa);
}
void write_wreath_group_file(const std::string& path, const WreathGroup& x) {
    auto out = open_out(path);
    write_wreath_group(out, x);
}

}  // namespace ntc
