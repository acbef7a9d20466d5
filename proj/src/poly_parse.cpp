#include "wavecoh/poly_parse.hpp"

#include <cctype>
#include <vector>

#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {

struct Token {
    enum class Kind { Num, X, P, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    Rat value;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto read_int = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_int(i);
            std::string den = "1";
            // greedy rational literal INT/INT
            if (i < text.size() && text[i] == '/' && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                ++i;
                den = read_int(i);
            }
            Rat q(num + "/" + den);
            if (q.get_den() == 0) throw ParseError("zero denominator in literal");
            q.canonicalize();
            out.push_back({Token::Kind::Num, q});
            continue;
        }
        switch (c) {
            case 'x': out.push_back({Token::Kind::X, Rat(0)}); break;
            case 'p': out.push_back({Token::Kind::P, Rat(0)}); break;
            case '+': out.push_back({Token::Kind::Plus, Rat(0)}); break;
            case '-': out.push_back({Token::Kind::Minus, Rat(0)}); break;
            case '*': out.push_back({Token::Kind::Star, Rat(0)}); break;
            case '^': out.push_back({Token::Kind::Caret, Rat(0)}); break;
            case '/': out.push_back({Token::Kind::Slash, Rat(0)}); break;
            case '(': out.push_back({Token::Kind::LParen, Rat(0)}); break;
            case ')': out.push_back({Token::Kind::RParen, Rat(0)}); break;
            case '.': throw ParseError("floating literals are rejected: use exact rationals p/q");
            default: throw ParseError(std::string("unexpected character '") + c + "' in polynomial literal");
        }
        ++i;
    }
    out.push_back({Token::Kind::End, Rat(0)});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const Poly<Cplx>& p, const PrecisionContext& ctx)
        : tokens_(std::move(tokens)), p_(p), ctx_(ctx) {}

    Poly<Cplx> parse_expr_all(bool& uses_p) {
        Poly<Cplx> e = expr();
        if (peek() != Token::Kind::End) throw ParseError("trailing tokens in polynomial literal");
        uses_p = uses_p_;
        return e;
    }

private:
    Token::Kind peek() const { return tokens_[pos_].kind; }
    Token take() { return tokens_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek() == k) { ++pos_; return true; }
        return false;
    }

    Cplx cx(const Rat& q) const { return to_cplx(q, ctx_); }

    Poly<Cplx> expr() {
        bool negate = false;
        if (accept(Token::Kind::Minus)) negate = true;
        else accept(Token::Kind::Plus);
        Poly<Cplx> acc = term();
        if (negate) acc = -acc;
        while (peek() == Token::Kind::Plus || peek() == Token::Kind::Minus) {
            bool minus = take().kind == Token::Kind::Minus;
            Poly<Cplx> t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Poly<Cplx> term() {
        Poly<Cplx> acc = factor();
        while (accept(Token::Kind::Star)) acc = acc * factor();
        return acc;
    }

    Poly<Cplx> factor() {
        Poly<Cplx> base = atom();
        if (accept(Token::Kind::Caret)) {
            if (peek() != Token::Kind::Num) throw ParseError("exponent must be an integer");
            Rat e = take().value;
            if (e.get_den() != 1 || e < 0) throw ParseError("exponent must be a nonnegative integer");
            long n = static_cast<long>(e.get_num().get_si());
            Poly<Cplx> acc = Poly<Cplx>::constant(Cplx(1.0, 0.0, ctx_.mantissa_bits));
            for (long i = 0; i < n; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly<Cplx> atom() {
        switch (peek()) {
            case Token::Kind::Num: return Poly<Cplx>::constant(cx(take().value));
            case Token::Kind::X:
                take();
                return Poly<Cplx>::monomial(Cplx(1.0, 0.0, ctx_.mantissa_bits), 1);
            case Token::Kind::P:
                take();
                uses_p_ = true;
                return p_;
            case Token::Kind::LParen: {
                take();
                Poly<Cplx> inner = expr();
                if (!accept(Token::Kind::RParen)) throw ParseError("missing ')'");
                return inner;
            }
            default: throw ParseError("expected a number, x, p or '('");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    bool uses_p_ = false;
    const Poly<Cplx>& p_;
    const PrecisionContext& ctx_;
};

} // namespace

ParsedRational parse_rational_function(const std::string& text, const Poly<Cplx>& p,
                                       const PrecisionContext& ctx) {
    std::vector<Token> tokens = lex(text);

    // split at the single top-level slash
    long depth = 0;
    std::size_t slash_pos = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].kind == Token::Kind::LParen) ++depth;
        if (tokens[i].kind == Token::Kind::RParen) --depth;
        if (tokens[i].kind == Token::Kind::Slash && depth == 0) {
            if (slash_pos != tokens.size())
                throw ParseError("more than one top-level '/' in rational function literal");
            slash_pos = i;
        }
    }

    ParsedRational out;
    bool uses_num = false, uses_den = false;
    if (slash_pos == tokens.size()) {
        Parser parser(tokens, p, ctx);
        out.numerator = parser.parse_expr_all(uses_num);
        out.denominator = Poly<Cplx>::constant(Cplx(1.0, 0.0, ctx.mantissa_bits));
    } else {
        std::vector<Token> num_tokens(tokens.begin(), tokens.begin() + static_cast<long>(slash_pos));
        num_tokens.push_back({Token::Kind::End, Rat(0)});
        std::vector<Token> den_tokens(tokens.begin() + static_cast<long>(slash_pos) + 1, tokens.end());
        Parser np(num_tokens, p, ctx), dp(den_tokens, p, ctx);
        out.numerator = np.parse_expr_all(uses_num);
        out.denominator = dp.parse_expr_all(uses_den);
        if (out.denominator.is_zero()) throw ParseError("zero denominator");
    }
    out.uses_p = uses_num || uses_den;
    return out;
}

} // namespace wavecoh
