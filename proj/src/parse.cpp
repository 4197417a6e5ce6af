// parse.cpp - recursive-descent expression parser and ideal file reader.
#include "elim/parse.hpp"

#include <cctype>
#include <sstream>

namespace elim {

namespace {

class expr_parser {
public:
    expr_parser(const ctx_ptr& ctx, const std::string& s, int line) : ctx_(ctx), s_(s), line_(line) {}

    multi_poly parse() {
        multi_poly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, static_cast<int>(pos_) + 1); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    multi_poly constant(const scalar& c) const { return multi_poly::constant(ctx_, uni_poly::constant(c)); }

    multi_poly expr() {
        multi_poly acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    multi_poly term() {
        multi_poly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                multi_poly d = unary();
                if (!d.is_univariate() || d.is_zero() || !d.lc().is_constant()) {
                    pos_ = at;
                    fail("division is only allowed by a nonzero constant");
                }
                acc = acc.mul_coeff(uni_poly::constant(d.lc().lead().inverse()));
            } else {
                return acc;
            }
        }
    }

    multi_poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    multi_poly power() {
        multi_poly base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            if (pos_ - start > 5) fail("exponent too large");
            unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
            multi_poly r = constant(scalar(ctx_->k, 1));
            multi_poly b = base;
            while (e) {
                if (e & 1) r = r * b;
                e >>= 1;
                if (e) b = b * b;
            }
            return r;
        }
        return base;
    }

    multi_poly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            multi_poly r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class v(s_.substr(start, pos_ - start));
            return constant(scalar(ctx_->k, mpq_class(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == ctx_->x1) return multi_poly::constant(ctx_, uni_poly::variable(ctx_->k));
            for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
                if (ctx_->xt[i] == name) {
                    return multi_poly::from_terms(ctx_, {{monomial::var(i), uni_poly::constant(ctx_->k, 1)}});
                }
            }
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const ctx_ptr& ctx_;
    const std::string& s_;
    int line_;
    std::size_t pos_ = 0;
};

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string drop_comment(const std::string& s) {
    std::size_t h = s.find('#');
    return h == std::string::npos ? s : s.substr(0, h);
}

} // namespace

multi_poly parse_poly(const ctx_ptr& ctx, const std::string& text, int line) {
    return expr_parser(ctx, text, line).parse();
}

uni_poly parse_uni(const ctx_ptr& ctx, const std::string& text, int line) {
    multi_poly f = parse_poly(ctx, text, line);
    if (!f.is_univariate()) throw parse_error("expected a polynomial in " + ctx->x1 + " only", line, 1);
    return f.is_zero() ? uni_poly(ctx->k) : f.lc();
}

ideal_input parse_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool have_field = false, in_ideal = false;
    field k;
    std::vector<std::string> vars;
    mono_order order = mono_order::lex;
    ideal_input out;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = strip(drop_comment(raw));
        if (s.empty()) continue;
        if (in_ideal) {
            if (s.back() == ',') s.pop_back();
            out.generators.push_back(parse_poly(out.ctx, s, line));
            continue;
        }
        std::istringstream words(s);
        std::string key;
        words >> key;
        if (key == "field") {
            std::string rest;
            std::getline(words, rest);
            rest = strip(rest);
            if (rest == "Q") {
                k = field::rationals();
            } else {
                std::string digits;
                for (char c : rest) {
                    if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
                    else if (c != 'G' && c != 'F' && c != '(' && c != ')' && c != ' ') throw parse_error("bad field '" + rest + "'", line, 1);
                }
                if (rest.rfind("GF", 0) != 0 || digits.empty() || digits.size() > 19) throw parse_error("bad field '" + rest + "'", line, 1);
                try {
                    k = field::prime(std::stoull(digits));
                } catch (const domain_error& e) {
                    throw parse_error(e.what(), line, 1);
                }
            }
            have_field = true;
        } else if (key == "vars") {
            std::string tok;
            bool expect_name = true;
            while (words >> tok) {
                if (expect_name) {
                    if (tok == "<") throw parse_error("expected a variable name", line, 1);
                    vars.push_back(tok);
                } else if (tok != "<") {
                    throw parse_error("expected '<' between variables", line, 1);
                }
                expect_name = !expect_name;
            }
            if (vars.size() < 2 || expect_name) throw parse_error("need at least two variables separated by '<'", line, 1);
        } else if (key == "order") {
            std::string o;
            words >> o;
            if (o == "lex") order = mono_order::lex;
            else if (o == "grevlex") order = mono_order::grevlex;
            else throw parse_error("unknown order '" + o + "'", line, 1);
        } else if (key == "ideal:") {
            if (!have_field) throw parse_error("missing 'field' directive", line, 1);
            if (vars.empty()) throw parse_error("missing 'vars' directive", line, 1);
            std::vector<std::string> xt(vars.begin() + 1, vars.end());
            try {
                out.ctx = make_ctx(k, vars[0], xt, order);
            } catch (const domain_error& e) {
                throw parse_error(e.what(), line, 1);
            }
            in_ideal = true;
        } else {
            throw parse_error("unknown directive '" + key + "'", line, 1);
        }
    }
    if (!in_ideal) throw parse_error("missing 'ideal:' section", line, 1);
    if (out.generators.empty()) throw parse_error("the ideal has no generators", line, 1);
    return out;
}

std::vector<multi_poly> parse_poly_lines(const ctx_ptr& ctx, const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::vector<multi_poly> out;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = strip(drop_comment(raw));
        if (s.empty()) continue;
        out.push_back(parse_poly(ctx, s, line));
    }
    return out;
}

} // namespace elim
