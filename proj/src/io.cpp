#include "puiseux/io.hpp"

#include <cctype>
#include <set>

namespace puiseux {

namespace {

enum class Tok { number, name, plus, minus, star, caret, lparen, rparen, semicolon, end };

struct Token {
    Tok kind;
    std::string text;
    size_t col; // 1-based
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            size_t col = pos_ + 1;
            if (pos_ >= s_.size()) {
                out.push_back({Tok::end, "", col});
                break;
            }
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back({Tok::number, lex_number(), col});
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                out.push_back({Tok::name, lex_name(), col});
            } else {
                ++pos_;
                switch (c) {
                    case '+': out.push_back({Tok::plus, "+", col}); break;
                    case '-': out.push_back({Tok::minus, "-", col}); break;
                    case '*': out.push_back({Tok::star, "*", col}); break;
                    case '^': out.push_back({Tok::caret, "^", col}); break;
                    case '(': out.push_back({Tok::lparen, "(", col}); break;
                    case ')': out.push_back({Tok::rparen, ")", col}); break;
                    case ';': out.push_back({Tok::semicolon, ";", col}); break;
                    default:
                        fail(Errc::parse, "unexpected character '" + std::string(1, c) +
                                              "' at column " + std::to_string(col));
                }
            }
        }
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string lex_number() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            } else {
                pos_ = save;
            }
        }
        return std::string(s_.substr(start, pos_ - start));
    }
    std::string lex_name() {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    size_t pos_ = 0;
};

class PolyParser {
public:
    PolyParser(std::vector<Token> toks, VarRegistry::Ptr reg) : toks_(std::move(toks)), reg_(std::move(reg)) {}

    MultiPoly<Rational> parse() {
        auto p = expr();
        expect(Tok::end, "end of input");
        return p;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }
    void expect(Tok k, const std::string& what) {
        if (peek().kind != k)
            fail(Errc::parse, "expected " + what + " at column " + std::to_string(peek().col));
        take();
    }

    MultiPoly<Rational> expr() {
        int sign = 1;
        if (peek().kind == Tok::plus) take();
        else if (peek().kind == Tok::minus) { take(); sign = -1; }
        auto acc = term();
        if (sign < 0) acc = -acc;
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            bool neg = take().kind == Tok::minus;
            auto t = term();
            if (neg) acc -= t;
            else acc += t;
        }
        return acc;
    }

    MultiPoly<Rational> term() {
        auto acc = factor();
        while (peek().kind == Tok::star) {
            take();
            acc *= factor();
        }
        return acc;
    }

    MultiPoly<Rational> factor() {
        auto base = atom();
        if (peek().kind == Tok::caret) {
            take();
            if (peek().kind != Tok::number)
                fail(Errc::parse, "expected exponent at column " + std::to_string(peek().col));
            auto t = take();
            if (t.text.find('/') != std::string::npos)
                fail(Errc::parse, "exponent must be an integer at column " + std::to_string(t.col));
            base = base.pow(std::stol(t.text));
        }
        return base;
    }

    MultiPoly<Rational> atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                auto tok = take();
                return MultiPoly<Rational>::constant(reg_, Rational::from_string(tok.text));
            }
            case Tok::name: {
                auto tok = take();
                auto idx = reg_->index_of_name(tok.text);
                if (!idx)
                    fail(Errc::parse,
                         "unknown variable '" + tok.text + "' at column " + std::to_string(tok.col));
                return MultiPoly<Rational>::variable(reg_, *idx, Rational(1));
            }
            case Tok::minus: {
                take();
                return -factor();
            }
            case Tok::lparen: {
                take();
                auto p = expr();
                expect(Tok::rparen, "')'");
                return p;
            }
            default:
                fail(Errc::parse, "unexpected token at column " + std::to_string(t.col));
        }
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
    VarRegistry::Ptr reg_;
};

VarRegistry::Ptr registry_from_tokens(const std::vector<Token>& toks) {
    std::set<VarDescriptor> seen;
    for (const auto& t : toks) {
        if (t.kind != Tok::name) continue;
        auto d = VarDescriptor::parse(t.text);
        if (!d)
            fail(Errc::parse, "unknown variable '" + t.text + "' at column " + std::to_string(t.col));
        seen.insert(*d);
    }
    // canonical order: A-vars ascending, then C-vars, then structural X, Y, T, z
    std::vector<VarDescriptor> vars;
    for (const auto& d : seen)
        if (d.kind == VarKind::A) vars.push_back(d);
    for (const auto& d : seen)
        if (d.kind == VarKind::C) vars.push_back(d);
    for (char tag : {'X', 'Y', 'T', 'z'}) {
        auto d = VarDescriptor::structural(tag);
        if (seen.count(d)) vars.push_back(d);
    }
    return VarRegistry::make(std::move(vars));
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    return Rational::from_string(t);
}

std::pair<MultiPoly<Rational>, VarRegistry::Ptr> parse_poly_auto(std::string_view text) {
    auto toks = Lexer(text).run();
    auto reg = registry_from_tokens(toks);
    PolyParser p(std::move(toks), reg);
    return {p.parse(), reg};
}

MultiPoly<Rational> parse_poly(std::string_view text, const VarRegistry::Ptr& reg) {
    auto toks = Lexer(text).run();
    PolyParser p(std::move(toks), reg);
    return p.parse();
}

PuiseuxParam parse_parametrisation(std::string_view text, std::optional<long> truncation) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos)
        fail(Errc::parse, "parametrisation needs 't^n; series' with a semicolon");
    auto head = text.substr(0, semi);
    auto tail = text.substr(semi + 1);

    auto treg = VarRegistry::make({VarDescriptor::structural('T')});
    auto hp = parse_poly(head, treg);
    if (hp.term_count() != 1) fail(Errc::parse, "left of ';' must be a single power of t");
    const auto& [he, hc] = *hp.terms().begin();
    if (!hc.is_one() || he[0] < 1) fail(Errc::parse, "left of ';' must be t^n with n >= 1");
    PuiseuxParam out;
    out.n = he[0];

    auto sp = parse_poly(tail, treg);
    long maxi = 0;
    for (const auto& [e, c] : sp.terms()) {
        if (e[0] < 1) fail(Errc::parse, "parametrisation series must have no constant term");
        out.coeffs[e[0]] = c;
        maxi = std::max(maxi, e[0]);
    }
    out.truncation = truncation ? *truncation : maxi;
    if (out.truncation < maxi) fail(Errc::usage, "truncation below the highest support index");
    out.validate();
    return out;
}

nlohmann::json poly_to_json(const MultiPoly<Rational>& p) {
    nlohmann::json j;
    j["vars"] = nlohmann::json::array();
    for (const auto& d : p.reg()->vars()) j["vars"].push_back(d.name());
    j["terms"] = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        nlohmann::json term;
        term["exp"] = it->first;
        term["coef"] = it->second.str();
        j["terms"].push_back(std::move(term));
    }
    return j;
}

MultiPoly<Rational> poly_from_json(const nlohmann::json& j) {
    std::vector<VarDescriptor> vars;
    for (const auto& v : j.at("vars")) {
        auto d = VarDescriptor::parse(v.get<std::string>());
        if (!d) fail(Errc::parse, "bad variable name in JSON: " + v.get<std::string>());
        vars.push_back(*d);
    }
    auto reg = VarRegistry::make(std::move(vars));
    MultiPoly<Rational> p(reg);
    for (const auto& t : j.at("terms")) {
        ExpVec e = t.at("exp").get<ExpVec>();
        if (e.size() != reg->size()) fail(Errc::parse, "exponent vector length mismatch in JSON");
        p.add_term(e, Rational::from_string(t.at("coef").get<std::string>()));
    }
    return p;
}

nlohmann::json param_to_json(const PuiseuxParam& p) {
    nlohmann::json j;
    j["n"] = p.n;
    j["coeffs"] = nlohmann::json::object();
    for (const auto& [i, c] : p.coeffs)
        if (!c.is_zero()) j["coeffs"][std::to_string(i)] = c.str();
    j["truncation"] = p.truncation;
    return j;
}

PuiseuxParam param_from_json(const nlohmann::json& j) {
    PuiseuxParam p;
    p.n = j.at("n").get<long>();
    p.truncation = j.at("truncation").get<long>();
    for (const auto& [key, val] : j.at("coeffs").items())
        p.coeffs[std::stol(key)] = Rational::from_string(val.get<std::string>());
    p.validate();
    return p;
}

nlohmann::json yseries_to_json(const YSeriesPoly<Rational>& f) {
    nlohmann::json j;
    j["degree"] = f.y_degree();
    j["x_precision"] = f.prec();
    j["y_coefficients"] = nlohmann::json::array();
    for (long d = 0; d <= f.y_degree(); ++d) {
        nlohmann::json row = nlohmann::json::array();
        for (long i = 0; i <= f.prec(); ++i) row.push_back(f.coeff(d).at(i).str());
        j["y_coefficients"].push_back(std::move(row));
    }
    return j;
}

YSeriesPoly<Rational> yseries_from_json(const nlohmann::json& j) {
    long deg = j.at("degree").get<long>();
    long prec = j.at("x_precision").get<long>();
    YSeriesPoly<Rational> f(deg, prec, Rational(0));
    const auto& rows = j.at("y_coefficients");
    if (static_cast<long>(rows.size()) != deg + 1) fail(Errc::parse, "y_coefficients size mismatch");
    for (long d = 0; d <= deg; ++d) {
        auto s = rational_series(SeriesVar::X, prec);
        const auto& row = rows[static_cast<size_t>(d)];
        if (static_cast<long>(row.size()) != prec + 1) fail(Errc::parse, "coefficient row size mismatch");
        for (long i = 0; i <= prec; ++i)
            s.set(i, Rational::from_string(row[static_cast<size_t>(i)].get<std::string>()));
        f.set_coeff(d, std::move(s));
    }
    return f;
}

std::string yseries_to_text(const YSeriesPoly<Rational>& f, char xtag) {
    auto reg = make_xy_registry(xtag);
    return f.to_multipoly(reg).str();
}

} // namespace puiseux
