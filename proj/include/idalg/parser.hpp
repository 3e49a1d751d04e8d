#ifndef IDALG_PARSER_HPP
#define IDALG_PARSER_HPP

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "prime_field.hpp"
#include "ratfun.hpp"
#include "rational.hpp"

namespace idalg {

// Recursive-descent parser for the expression grammar
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' natural)?
//   base   := rational | 'z' | 't' | '(' expr ')'
// over a generic field context.  Both ASCII '-' and U+2212 are accepted.
// Division folds into rational-function normalization.
template <class F>
class ExprParser {
  public:
    ExprParser(const F& K, std::string text) : K_(K), s_(std::move(text)) {}

    RatFun<F> parse() {
        skip_ws();
        auto e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error(pos_, "unexpected trailing input");
        return e;
    }

  private:
    RatFun<F> expr() {
        RatFun<F> acc;
        if (eat_minus()) acc = rf_neg(K_, term());
        else acc = term();
        for (;;) {
            skip_ws();
            if (eat('+')) acc = rf_add(K_, acc, term());
            else if (eat_minus()) acc = rf_sub(K_, acc, term());
            else return acc;
        }
    }

    RatFun<F> term() {
        auto acc = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) acc = rf_mul(K_, acc, factor());
            else if (eat('/')) {
                std::size_t at = pos_;
                auto d = factor();
                if (d.is_zero()) throw parse_error(at, "division by zero");
                acc = rf_div(K_, acc, d);
            } else
                return acc;
        }
    }

    RatFun<F> factor() {
        auto b = base();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw parse_error(at, "exponent must be a natural number");
            long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 100000) throw parse_error(at, "exponent too large");
                ++pos_;
            }
            auto acc = rf_from_int(K_, 1);
            for (long i = 0; i < e; ++i) acc = rf_mul(K_, acc, b);
            return acc;
        }
        return b;
    }

    RatFun<F> base() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error(pos_, "unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = expr();
            skip_ws();
            if (!eat(')')) throw parse_error(pos_, "expected ')'");
            return e;
        }
        if (c == 'z' || c == 't') {
            ++pos_;
            return rf_from_poly(K_, p_monomial(K_, K_.one(), 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            long n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                n = n * 10 + (s_[pos_] - '0');
                if (n > 1000000000L) throw parse_error(at, "integer literal too large");
                ++pos_;
            }
            return rf_from_int(K_, n);
        }
        throw parse_error(pos_, "expected a number, variable, or '('");
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    // ASCII '-' or UTF-8 U+2212 (e2 88 92)
    bool eat_minus() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '-') { ++pos_; return true; }
        if (s_.size() - pos_ >= 3 &&
            static_cast<unsigned char>(s_[pos_]) == 0xe2 &&
            static_cast<unsigned char>(s_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(s_[pos_ + 2]) == 0x92) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    const F& K_;
    std::string s_;
    std::size_t pos_ = 0;
};

template <class F>
RatFun<F> parse_expr(const F& K, const std::string& text) {
    return ExprParser<F>(K, text).parse();
}

// Canonical text rendering that round-trips through parse_expr.
template <class F>
std::string render_poly(const F& K, const Poly<F>& f, const std::string& var = "z") {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        if (K.is_zero(f.c[i])) continue;
        std::string lit = K.literal(f.c[i]);
        bool neg = !lit.empty() && lit[0] == '-';
        if (neg) lit = lit.substr(1);
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (i == 0) { s += lit; continue; }
        if (lit != "1") s += lit + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

template <class F>
std::string render_ratfun(const F& K, const RatFun<F>& f, const std::string& var = "z") {
    if (f.is_poly()) return render_poly(K, f.num, var);
    return "(" + render_poly(K, f.num, var) + ")/(" + render_poly(K, f.den, var) + ")";
}

// Line-oriented system file: `key = value` header lines followed by
// `Name[i][j] = <expr>` matrix entries with 1-based indices.
struct SystemFile {
    std::map<std::string, std::string> header;
    // matrices[name][(i,j)] = expression text, 1-based indices
    std::map<std::string, std::map<std::pair<long, long>, std::string>> matrices;

    std::string header_or(const std::string& key, const std::string& dflt) const {
        auto it = header.find(key);
        return it == header.end() ? dflt : it->second;
    }
    std::string header_req(const std::string& key) const {
        auto it = header.find(key);
        if (it == header.end()) throw parameter_error("missing required header: " + key);
        return it->second;
    }
};

inline std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline SystemFile parse_system_file(std::istream& in) {
    SystemFile sf;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw parse_error(lineno, "expected 'key = value' on line " + std::to_string(lineno));
        auto key = strip(t.substr(0, eq));
        auto val = strip(t.substr(eq + 1));
        auto br = key.find('[');
        if (br == std::string::npos) {
            sf.header[key] = val;
            continue;
        }
        auto name = key.substr(0, br);
        long i = 0, j = 0;
        if (std::sscanf(key.c_str() + br, "[%ld][%ld]", &i, &j) != 2 || i < 1 || j < 1)
            throw parse_error(lineno, "bad matrix index on line " + std::to_string(lineno));
        sf.matrices[name][{i, j}] = val;
    }
    return sf;
}

inline SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open file: " + path);
    return parse_system_file(in);
}

} // namespace idalg

#endif
