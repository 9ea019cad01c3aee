#include "binform/parse.hpp"

#include "binform/errors.hpp"

#include <cctype>
#include <map>

namespace binform {

namespace {

// Sparse bivariate polynomial keyed by (x-exponent, y-exponent).
using Poly2 = std::map<std::pair<int, int>, Rat>;

Poly2 constant(const Rat& c) {
    Poly2 p;
    if (c != 0) p[{0, 0}] = c;
    return p;
}

Poly2 add(const Poly2& a, const Poly2& b) {
    Poly2 out = a;
    for (const auto& [k, v] : b) {
        Rat& slot = out[k];
        slot += v;
        if (slot == 0) out.erase(k);
    }
    return out;
}

Poly2 neg(const Poly2& a) {
    Poly2 out = a;
    for (auto& [k, v] : out) v = -v;
    return out;
}

Poly2 mul(const Poly2& a, const Poly2& b, std::size_t guard_offset) {
    Poly2 out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            if (k.first + k.second > 64) throw SyntaxError("degree too large", guard_offset);
            Rat& slot = out[k];
            slot += va * vb;
            if (slot == 0) out.erase(k);
        }
    return out;
}

struct Token {
    enum Kind { Number, VarX, VarY, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    Rat value;
    std::size_t offset;
};

class Lexer {
public:
    Lexer(const std::string& s, std::string vx, std::string vy)
        : s_(s), vx_(std::move(vx)), vy_(std::move(vy)) {
        next();
    }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        next();
        return t;
    }

private:
    void next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::size_t at = pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::End, 0, at};
            return;
        }
        char c = s_[pos_];
        switch (c) {
            case '+': ++pos_; tok_ = {Token::Plus, 0, at}; return;
            case '-': ++pos_; tok_ = {Token::Minus, 0, at}; return;
            case '*': ++pos_; tok_ = {Token::Star, 0, at}; return;
            case '^': ++pos_; tok_ = {Token::Caret, 0, at}; return;
            case '(': ++pos_; tok_ = {Token::LParen, 0, at}; return;
            case ')': ++pos_; tok_ = {Token::RParen, 0, at}; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = read_uint();
            Int d = 1;
            if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                d = read_uint();
                if (d == 0) throw SyntaxError("zero denominator", at);
            }
            tok_ = {Token::Number, Rat(n, d), at};
            return;
        }
        if (match(vx_)) {
            tok_ = {Token::VarX, 0, at};
            return;
        }
        if (match(vy_)) {
            tok_ = {Token::VarY, 0, at};
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", at);
    }

    bool match(const std::string& name) {
        if (s_.compare(pos_, name.size(), name) == 0) {
            pos_ += name.size();
            return true;
        }
        return false;
    }

    Int read_uint() {
        Int n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            n = n * 10 + (s_[pos_++] - '0');
        return n;
    }

    const std::string& s_;
    std::string vx_, vy_;
    std::size_t pos_ = 0;
    Token tok_{Token::End, 0, 0};
};

class Parser {
public:
    explicit Parser(Lexer& lex) : lex_(lex) {}

    Poly2 expr() {
        bool negate = false;
        if (lex_.peek().kind == Token::Plus) lex_.take();
        else if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            negate = true;
        }
        Poly2 acc = term();
        if (negate) acc = neg(acc);
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            Poly2 rhs = term();
            acc = add(acc, minus ? neg(rhs) : rhs);
        }
        return acc;
    }

private:
    static bool starts_factor(Token::Kind k) {
        return k == Token::Number || k == Token::VarX || k == Token::VarY || k == Token::LParen;
    }

    Poly2 term() {
        Poly2 acc = factor();
        while (true) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Star) {
                std::size_t at = lex_.take().offset;
                acc = mul(acc, factor(), at);
            } else if (starts_factor(k)) {
                acc = mul(acc, factor(), lex_.peek().offset);  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    Poly2 factor() {
        Poly2 base = primary();
        if (lex_.peek().kind == Token::Caret) {
            std::size_t at = lex_.take().offset;
            Token e = lex_.take();
            if (e.kind != Token::Number || den(e.value) != 1 || e.value < 0)
                throw SyntaxError("exponent must be a non-negative integer", at);
            Int n = num(e.value);
            if (n > 64) throw SyntaxError("exponent too large", at);
            Poly2 acc = constant(1);
            for (Int i = 0; i < n; ++i) acc = mul(acc, base, at);
            return acc;
        }
        return base;
    }

    Poly2 primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Number:
                return constant(t.value);
            case Token::VarX: {
                Poly2 p;
                p[{1, 0}] = 1;
                return p;
            }
            case Token::VarY: {
                Poly2 p;
                p[{0, 1}] = 1;
                return p;
            }
            case Token::LParen: {
                Poly2 inner = expr();
                Token close = lex_.take();
                if (close.kind != Token::RParen) throw SyntaxError("expected ')'", close.offset);
                return inner;
            }
            case Token::Minus:  // unary minus inside a term, e.g. "(-x)"
                return neg(primary());
            default:
                throw SyntaxError("expected a number, variable or '('", t.offset);
        }
    }

    Lexer& lex_;
};

}  // namespace

FormInput parse_form(const std::string& text, const std::string& var_x, const std::string& var_y) {
    Lexer lex(text, var_x, var_y);
    Parser parser(lex);
    Poly2 poly = parser.expr();
    if (lex.peek().kind != Token::End) throw SyntaxError("trailing input", lex.peek().offset);

    if (poly.empty()) throw UnsupportedDegree("the zero form is not accepted");
    int degree = -1;
    for (const auto& [k, v] : poly) {
        int total = k.first + k.second;
        if (degree < 0) degree = total;
        else if (degree != total) throw NotHomogeneous();
    }
    if (degree < 2 || degree > 6)
        throw UnsupportedDegree("degree " + std::to_string(degree) + " outside 2..6");

    std::vector<Rat> coeffs(static_cast<std::size_t>(degree) + 1, Rat(0));
    for (const auto& [k, v] : poly) coeffs[static_cast<std::size_t>(k.second)] = v;
    return FormInput{text, BinaryForm(std::move(coeffs)), {var_x, var_y}};
}

BinaryForm parse_coeff_list(const std::string& text) {
    std::vector<Rat> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw SyntaxError("empty coefficient", pos);
        item = item.substr(a, b - a + 1);
        std::size_t slash = item.find('/');
        try {
            if (slash == std::string::npos)
                coeffs.emplace_back(Int(item));
            else
                coeffs.emplace_back(Int(item.substr(0, slash)), Int(item.substr(slash + 1)));
        } catch (const std::exception&) {
            throw SyntaxError("bad coefficient '" + item + "'", pos);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (coeffs.size() < 3 || coeffs.size() > 7)
        throw UnsupportedDegree("coefficient list length " + std::to_string(coeffs.size()) +
                                " outside 3..7");
    return BinaryForm(std::move(coeffs));
}

}  // namespace binform
