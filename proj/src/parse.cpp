#include "wavecoh/rational.hpp"

#include <cctype>
#include <cstddef>

namespace wavecoh {

namespace {

bool valid_int(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rat(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw ParseError("expected integer or p/q rational, got '" + text + "'");
    if (num[0] == '+') num = num.substr(1); // mpq_set_str rejects a leading '+'
    if (den[0] == '+') den = den.substr(1);
    Rat q(num + "/" + den);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

GaussRat parse_gauss_rat(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw ParseError("empty scalar literal");
    if (text.find('.') != std::string::npos)
        throw ParseError("floating literal '" + raw + "' rejected: use an exact rational p/q");

    // Split into signed terms.
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if ((c == '+' || c == '-') && i > 0 && text[i - 1] != '/' && text[i - 1] != '*' &&
            text[i - 1] != '+' && text[i - 1] != '-') {
            terms.push_back(cur);
            cur.clear();
        }
        cur += c;
    }
    terms.push_back(cur);

    GaussRat out;
    for (auto& t : terms) {
        if (t.empty()) throw ParseError("malformed scalar literal '" + raw + "'");
        bool imag = false;
        std::string body = t;
        if (body.back() == 'i' || body.back() == 'I') {
            imag = true;
            body.pop_back();
            if (!body.empty() && body.back() == '*') body.pop_back();
            if (body.empty() || body == "+") body = "1";
            else if (body == "-") body = "-1";
        }
        Rat v = parse_rat(body);
        if (imag) out.im += v;
        else out.re += v;
    }
    return out;
}

} // namespace wavecoh
