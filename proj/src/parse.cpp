#include "lyucalc/parse.hpp"

#include <cctype>
#include <sstream>

namespace lyu {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    int line;
    int col0; // column of s[0] in the original source line

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    int col() const { return col0 + static_cast<int>(i); }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col()); }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

u64 parse_nat(Cursor& cur) {
    cur.skip_ws();
    if (cur.i >= cur.s.size() || !std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
        cur.fail("expected a number");
    u64 v = 0;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
        v = v * 10 + static_cast<u64>(cur.s[cur.i] - '0');
        if (v > 1000000000) cur.fail("number too large");
        ++cur.i;
    }
    return v;
}

Poly parse_expr(Cursor& cur, const Ring& ring);

Poly parse_factor(Cursor& cur, const Ring& ring) {
    char c = cur.peek();
    Poly base;
    if (c == '(') {
        ++cur.i;
        base = parse_expr(cur, ring);
        if (cur.peek() != ')') cur.fail("expected ')'");
        ++cur.i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
        base = Poly::constant(ring, parse_nat(cur) % ring->p);
    } else if (ident_start(c)) {
        std::size_t start = cur.i;
        while (cur.i < cur.s.size() && ident_char(cur.s[cur.i])) ++cur.i;
        std::string name = cur.s.substr(start, cur.i - start);
        std::size_t vi = ring->nvars();
        for (std::size_t k = 0; k < ring->nvars(); ++k)
            if (ring->var_names[k] == name) { vi = k; break; }
        if (vi == ring->nvars()) {
            cur.i = start;
            cur.fail("unknown variable '" + name + "'");
        }
        base = Poly::variable(ring, vi);
    } else if (c == '\0') {
        cur.fail("unexpected end of expression");
    } else {
        cur.fail(std::string("unexpected character '") + c + "'");
    }
    if (cur.peek() == '^') {
        ++cur.i;
        u64 e = parse_nat(cur);
        if (e > 100000) cur.fail("exponent too large");
        Poly out = Poly::constant(base.ring(), 1);
        // binary powering keeps parenthesized bases cheap
        Poly b = base;
        u64 k = e;
        while (k) {
            if (k & 1) out = out * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return out;
    }
    return base;
}

Poly parse_term(Cursor& cur, const Ring& ring) {
    Poly f = parse_factor(cur, ring);
    while (cur.peek() == '*') {
        ++cur.i;
        f = f * parse_factor(cur, ring);
    }
    return f;
}

Poly parse_expr(Cursor& cur, const Ring& ring) {
    bool neg = false;
    char c = cur.peek();
    if (c == '+' || c == '-') {
        neg = (c == '-');
        ++cur.i;
    }
    Poly acc = parse_term(cur, ring);
    if (neg) acc = acc.negate();
    while (true) {
        c = cur.peek();
        if (c != '+' && c != '-') break;
        ++cur.i;
        Poly t = parse_term(cur, ring);
        acc = (c == '+') ? acc + t : acc - t;
    }
    return acc;
}

} // namespace

Poly parse_poly(const Ring& ring, const std::string& text, int line, int col) {
    Cursor cur{text, 0, line, col};
    if (cur.eof()) throw ParseError("empty polynomial", line, col);
    Poly f = parse_expr(cur, ring);
    if (!cur.eof()) cur.fail("trailing input after polynomial");
    return f;
}

std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        } else if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        }
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

Problem parse_problem(const std::string& text) {
    Problem pb;
    bool saw_p = false, saw_vars = false, saw_gens = false;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value", line, 1);
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key == "p") {
            Cursor cur{val, 0, line, static_cast<int>(eq) + 2};
            pb.p = parse_nat(cur);
            if (!cur.eof()) cur.fail("trailing input after prime");
            saw_p = true;
        } else if (key == "vars") {
            for (auto& piece : split_top_level(val)) {
                std::string name = trim(piece);
                if (name.empty())
                    throw ParseError("empty variable name", line, 1);
                if (!ident_start(name[0]))
                    throw ParseError("bad variable name '" + name + "'", line, 1);
                for (char c : name)
                    if (!ident_char(c))
                        throw ParseError("bad variable name '" + name + "'", line, 1);
                pb.vars.push_back(name);
            }
            saw_vars = true;
        } else if (key == "gens") {
            // column of val[0] inside the original (untrimmed) source line
            std::size_t lead = raw.find_first_not_of(" \t\r");
            std::size_t vstart = raw.find('=', lead) + 1;
            while (vstart < raw.size() && (raw[vstart] == ' ' || raw[vstart] == '\t'))
                ++vstart;
            int depth = 0;
            std::size_t start = 0;
            for (std::size_t i = 0; i <= val.size(); ++i) {
                if (i == val.size() || (val[i] == ',' && depth == 0)) {
                    std::string piece = val.substr(start, i - start);
                    std::size_t ws = piece.find_first_not_of(" \t\r");
                    std::string g = trim(piece);
                    if (!g.empty()) {
                        pb.gen_text.push_back(g);
                        pb.gen_pos.emplace_back(
                            line, static_cast<int>(vstart + start + ws) + 1);
                    }
                    start = i + 1;
                } else if (val[i] == '(') {
                    ++depth;
                } else if (val[i] == ')') {
                    --depth;
                }
            }
            saw_gens = true;
        } else if (key == "label") {
            pb.label = val;
        } else {
            throw ParseError("unknown key '" + key + "'", line, 1);
        }
    }
    if (!saw_p) throw ParseError("missing 'p=' line", line ? line : 1, 1);
    if (!saw_vars) throw ParseError("missing 'vars=' line", line ? line : 1, 1);
    if (!saw_gens) throw ParseError("missing 'gens=' line (use 'gens=' for the zero ideal)",
                                    line ? line : 1, 1);
    if (pb.p < 2 || pb.p > kMaxPrime || !is_prime_u64(pb.p))
        throw ParseError("p must be a prime < 2^31", 1, 1);
    return pb;
}

Ring problem_ring(const Problem& pb) { return make_ring(pb.p, pb.vars); }

std::vector<Poly> problem_gens(const Problem& pb, const Ring& ring) {
    std::vector<Poly> gens;
    for (std::size_t k = 0; k < pb.gen_text.size(); ++k) {
        int line = 1, col = 1;
        if (k < pb.gen_pos.size()) {
            line = pb.gen_pos[k].first;
            col = pb.gen_pos[k].second;
        }
        Poly f = parse_poly(ring, pb.gen_text[k], line, col);
        if (!f.is_zero()) gens.push_back(f);
    }
    return gens;
}

} // namespace lyu
