#include "qho/expr.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "qho/errors.hpp"

namespace qho::expr {

namespace {

struct Token {
    enum class Kind { Ident, Number, Symbol, End };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        if (pos_ >= text_.size()) {
            current_ = {Token::Kind::End, "", line_, col_};
            return;
        }
        const char c = text_[pos_];
        const std::size_t line = line_;
        const std::size_t col = col_;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                word += text_[pos_++];
                ++col_;
            }
            current_ = {Token::Kind::Ident, std::move(word), line, col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
            (c == '-' && pos_ + 1 < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
              text_[pos_ + 1] == '.'))) {
            std::string num;
            auto eat = [&] { num += text_[pos_++]; ++col_; };
            auto digits = [&] {
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    eat();
                }
            };
            if (text_[pos_] == '-') eat();
            digits();
            if (pos_ < text_.size() && text_[pos_] == '.') {
                eat();
                digits();
            }
            if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
                eat();
                if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) eat();
                digits();
            }
            current_ = {Token::Kind::Number, std::move(num), line, col};
            return;
        }
        current_ = {Token::Kind::Symbol, std::string(1, c), line, col};
        ++pos_;
        ++col_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    Token current_{Token::Kind::End, "", 1, 1};
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Expr parse() {
        Expr e = sequence();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End) {
            throw SyntaxError("unexpected '" + t.text + "'", t.line, t.column);
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) {
        const Token& t = lex_.peek();
        throw SyntaxError(message, t.line, t.column);
    }

    void expect_symbol(const std::string& sym) {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Symbol || t.text != sym) {
            fail("expected '" + sym + "'");
        }
        lex_.take();
    }

    bool try_symbol(const std::string& sym) {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Symbol && t.text == sym) {
            lex_.take();
            return true;
        }
        return false;
    }

    std::string expect_ident(const std::string& what) {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Ident) fail("expected " + what);
        return lex_.take().text;
    }

    double expect_number() {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Number) fail("expected a number");
        return std::stod(lex_.take().text);
    }

    std::size_t expect_integer() {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Number ||
            t.text.find_first_not_of("0123456789") != std::string::npos) {
            fail("expected a non-negative integer");
        }
        return static_cast<std::size_t>(std::stoull(lex_.take().text));
    }

    Expr sequence() {
        Expr first = summand();
        if (lex_.peek().kind != Token::Kind::Symbol || lex_.peek().text != ";") return first;
        Expr node;
        node.op = Expr::Op::Compose;
        node.line = first.line;
        node.column = first.column;
        node.children.push_back(std::move(first));
        while (try_symbol(";")) node.children.push_back(summand());
        return node;
    }

    Expr summand() {
        Expr first = tensorand();
        if (lex_.peek().kind != Token::Kind::Symbol || lex_.peek().text != "+") return first;
        Expr node;
        node.op = Expr::Op::Add;
        node.line = first.line;
        node.column = first.column;
        node.children.push_back(std::move(first));
        while (try_symbol("+")) node.children.push_back(tensorand());
        return node;
    }

    Expr tensorand() {
        Expr first = atom();
        if (lex_.peek().kind != Token::Kind::Symbol || lex_.peek().text != "*") return first;
        Expr node;
        node.op = Expr::Op::Tensor;
        node.line = first.line;
        node.column = first.column;
        node.children.push_back(std::move(first));
        while (try_symbol("*")) node.children.push_back(atom());
        return node;
    }

    Expr atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Symbol && t.text == "(") {
            lex_.take();
            Expr inner = sequence();
            expect_symbol(")");
            return inner;
        }
        if (t.kind != Token::Kind::Ident) {
            fail("expected an expression");
        }
        const Token head = lex_.take();
        Expr node;
        node.line = head.line;
        node.column = head.column;
        const std::string& w = head.text;

        if (w == "dag") {
            expect_symbol("(");
            node.op = Expr::Op::Dag;
            node.children.push_back(sequence());
            expect_symbol(")");
            return node;
        }
        if (w == "scale") {
            expect_symbol("(");
            node.op = Expr::Op::Scale;
            const double re = expect_number();
            expect_symbol(",");
            const double im = expect_number();
            expect_symbol(",");
            node.factor = {re, im};
            node.children.push_back(sequence());
            expect_symbol(")");
            return node;
        }
        if (w == "name") {
            expect_symbol("(");
            node.op = Expr::Op::Name;
            node.children.push_back(sequence());
            expect_symbol(")");
            return node;
        }
        if (w == "with") {
            expect_symbol("(");
            node.op = Expr::Op::With;
            while (true) {
                const std::string key = expect_ident("'d' or 'N'");
                expect_symbol("=");
                const std::size_t value = expect_integer();
                if (key == "d") {
                    node.with_dim = value;
                } else if (key == "N") {
                    node.with_cutoff = value;
                } else {
                    throw SyntaxError("unknown context key '" + key + "'", node.line,
                                      node.column);
                }
                if (!try_symbol(",")) break;
            }
            expect_symbol(")");
            expect_symbol("{");
            node.children.push_back(sequence());
            expect_symbol("}");
            return node;
        }
        if (w == "raise" || w == "lower" || w == "coh") {
            expect_symbol("(");
            node.op = w == "raise" ? Expr::Op::Raise
                      : w == "lower" ? Expr::Op::Lower
                                     : Expr::Op::Coh;
            node.ident = expect_ident("a bound state name");
            expect_symbol(")");
            return node;
        }
        if (w == "sym" || w == "proj" || w == "inj") {
            expect_symbol("(");
            node.op = w == "sym" ? Expr::Op::Sym : w == "proj" ? Expr::Op::Proj : Expr::Op::Inj;
            node.index = expect_integer();
            expect_symbol(")");
            return node;
        }
        if (w == "d") {
            node.op = Expr::Op::Comult;
            if (try_symbol("[")) {
                node.index = expect_integer();
                expect_symbol("]");
            }
            return node;
        }
        if (w == "e") {
            node.op = Expr::Op::Counit;
            return node;
        }
        if (w == "eps") {
            node.op = Expr::Op::Eps;
            return node;
        }
        if (w == "eta") {
            node.op = Expr::Op::Eta;
            return node;
        }
        if (w == "vac") {
            node.op = Expr::Op::Vac;
            return node;
        }
        if (w == "swap") {
            node.op = Expr::Op::Swap;
            return node;
        }
        if (w == "zeta") {
            node.op = Expr::Op::Zeta;
            return node;
        }
        if (w == "theta") {
            node.op = Expr::Op::Theta;
            return node;
        }
        node.op = Expr::Op::Ident;
        node.ident = w;
        return node;
    }

    Lexer lex_;
};

std::string number_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) {
        // prefer the shortest representation that still round-trips
        for (int precision = 1; precision < 17; ++precision) {
            char shorter[32];
            std::snprintf(shorter, sizeof shorter, "%.*g", precision, v);
            std::sscanf(shorter, "%lf", &back);
            if (back == v) return shorter;
        }
    }
    return buf;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
    if (a.op != b.op || a.ident != b.ident || a.factor != b.factor || a.index != b.index ||
        a.with_dim != b.with_dim || a.with_cutoff != b.with_cutoff ||
        a.children.size() != b.children.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!(a.children[i] == b.children[i])) return false;
    }
    return true;
}

Expr parse_expr(const std::string& text) {
    return Parser(text).parse();
}

namespace {

struct Context {
    const Environment* env;
    std::size_t dim;
    std::size_t cutoff;

    SpaceObject base() const { return SpaceObject::base(dim); }
    FockSpace fock(std::size_t n) const { return fock_space(base(), n); }
};

[[noreturn]] void type_fail(const Expr& e, const std::string& message) {
    throw TypeError("in '" + pretty_print(e) + "': " + message);
}

const Morphism& lookup(const Expr& e, const Context& ctx) {
    auto it = ctx.env->bindings.find(e.ident);
    if (it == ctx.env->bindings.end()) {
        type_fail(e, "unbound identifier '" + e.ident + "'");
    }
    return it->second;
}

void check_state_binding(const Expr& e, const Context& ctx) {
    const Morphism& m = lookup(e, ctx);
    if (m.dom != SpaceObject::unit() || m.cod != ctx.base()) {
        type_fail(e, "'" + e.ident + "' has type " + m.cod.describe() + " <- " +
                         m.dom.describe() + " but a state I -> " + ctx.base().describe() +
                         " is required");
    }
}

void typecheck_node(Expr& e, Context ctx) {
    switch (e.op) {
        case Expr::Op::Ident: {
            const Morphism& m = lookup(e, ctx);
            e.dom = m.dom;
            e.cod = m.cod;
            return;
        }
        case Expr::Op::Compose: {
            for (auto& c : e.children) typecheck_node(c, ctx);
            for (std::size_t i = 0; i + 1 < e.children.size(); ++i) {
                const Expr& lhs = e.children[i];
                const Expr& rhs = e.children[i + 1];
                if (lhs.cod != rhs.dom) {
                    throw TypeError("cannot pipe '" + pretty_print(lhs) + "' (giving " +
                                    lhs.cod.describe() + ") into '" + pretty_print(rhs) +
                                    "' (expecting " + rhs.dom.describe() + ")");
                }
            }
            e.dom = e.children.front().dom;
            e.cod = e.children.back().cod;
            return;
        }
        case Expr::Op::Tensor: {
            std::vector<SpaceObject> doms, cods;
            for (auto& c : e.children) {
                typecheck_node(c, ctx);
                doms.push_back(c.dom);
                cods.push_back(c.cod);
            }
            e.dom = SpaceObject::tensor_list(std::move(doms));
            e.cod = SpaceObject::tensor_list(std::move(cods));
            return;
        }
        case Expr::Op::Add: {
            for (auto& c : e.children) typecheck_node(c, ctx);
            for (std::size_t i = 1; i < e.children.size(); ++i) {
                if (e.children[i].dom != e.children[0].dom ||
                    e.children[i].cod != e.children[0].cod) {
                    throw TypeError("cannot add '" + pretty_print(e.children[0]) + "' of type " +
                                    e.children[0].cod.describe() + " <- " +
                                    e.children[0].dom.describe() + " and '" +
                                    pretty_print(e.children[i]) + "' of type " +
                                    e.children[i].cod.describe() + " <- " +
                                    e.children[i].dom.describe());
                }
            }
            e.dom = e.children[0].dom;
            e.cod = e.children[0].cod;
            return;
        }
        case Expr::Op::Dag:
            typecheck_node(e.children[0], ctx);
            e.dom = e.children[0].cod;
            e.cod = e.children[0].dom;
            return;
        case Expr::Op::Scale:
            typecheck_node(e.children[0], ctx);
            e.dom = e.children[0].dom;
            e.cod = e.children[0].cod;
            return;
        case Expr::Op::Name:
            typecheck_node(e.children[0], ctx);
            e.dom = SpaceObject::unit();
            e.cod = SpaceObject::tensor(e.children[0].cod, SpaceObject::dual(e.children[0].dom));
            return;
        case Expr::Op::With: {
            if (e.with_dim) ctx.dim = *e.with_dim;
            if (e.with_cutoff) ctx.cutoff = *e.with_cutoff;
            typecheck_node(e.children[0], ctx);
            e.dom = e.children[0].dom;
            e.cod = e.children[0].cod;
            return;
        }
        case Expr::Op::Comult: {
            const FockSpace f = ctx.fock(e.index.value_or(ctx.cutoff));
            e.dom = f.object;
            e.cod = SpaceObject::tensor(f.object, f.object);
            return;
        }
        case Expr::Op::Counit:
            e.dom = ctx.fock(ctx.cutoff).object;
            e.cod = SpaceObject::unit();
            return;
        case Expr::Op::Eps:
            if (ctx.cutoff < 1) type_fail(e, "eps needs cutoff N >= 1");
            e.dom = ctx.fock(ctx.cutoff).object;
            e.cod = ctx.base();
            return;
        case Expr::Op::Eta:
            e.dom = ctx.base();
            e.cod = ctx.fock(ctx.cutoff).object;
            return;
        case Expr::Op::Vac:
            e.dom = SpaceObject::unit();
            e.cod = ctx.fock(ctx.cutoff).object;
            return;
        case Expr::Op::Swap:
            e.dom = SpaceObject::tensor(ctx.base(), ctx.base());
            e.cod = e.dom;
            return;
        case Expr::Op::Zeta:
            e.dom = SpaceObject::unit();
            e.cod = SpaceObject::tensor(ctx.base(), SpaceObject::dual(ctx.base()));
            return;
        case Expr::Op::Theta:
            e.dom = SpaceObject::tensor(SpaceObject::dual(ctx.base()), ctx.base());
            e.cod = SpaceObject::unit();
            return;
        case Expr::Op::Raise:
        case Expr::Op::Lower:
            check_state_binding(e, ctx);
            e.dom = ctx.fock(ctx.cutoff).object;
            e.cod = e.dom;
            return;
        case Expr::Op::Coh:
            check_state_binding(e, ctx);
            e.dom = SpaceObject::unit();
            e.cod = ctx.fock(ctx.cutoff).object;
            return;
        case Expr::Op::Sym: {
            const std::size_t n = *e.index;
            e.dom = tensor_power_space(ctx.base(), n);
            e.cod = symmetric_space(ctx.base(), n).object;
            return;
        }
        case Expr::Op::Proj:
        case Expr::Op::Inj: {
            const std::size_t n = *e.index;
            if (n > ctx.cutoff) {
                type_fail(e, "sector " + std::to_string(n) + " above cutoff " +
                                 std::to_string(ctx.cutoff));
            }
            const FockSpace f = ctx.fock(ctx.cutoff);
            if (e.op == Expr::Op::Proj) {
                e.dom = f.object;
                e.cod = f.sector_object(n);
            } else {
                e.dom = f.sector_object(n);
                e.cod = f.object;
            }
            return;
        }
    }
}

Morphism eval_node(const Expr& e, Context ctx) {
    switch (e.op) {
        case Expr::Op::Ident:
            return lookup(e, ctx);
        case Expr::Op::Compose: {
            Morphism acc = eval_node(e.children[0], ctx);
            for (std::size_t i = 1; i < e.children.size(); ++i) {
                acc = compose(eval_node(e.children[i], ctx), acc);
            }
            return acc;
        }
        case Expr::Op::Tensor: {
            Morphism acc = eval_node(e.children[0], ctx);
            for (std::size_t i = 1; i < e.children.size(); ++i) {
                acc = tensor(acc, eval_node(e.children[i], ctx));
            }
            return acc;
        }
        case Expr::Op::Add: {
            Morphism acc = eval_node(e.children[0], ctx);
            for (std::size_t i = 1; i < e.children.size(); ++i) {
                acc = add(acc, eval_node(e.children[i], ctx));
            }
            return acc;
        }
        case Expr::Op::Dag:
            return dagger(eval_node(e.children[0], ctx));
        case Expr::Op::Scale:
            return scalar_mul(e.factor, eval_node(e.children[0], ctx));
        case Expr::Op::Name:
            return name_of(eval_node(e.children[0], ctx));
        case Expr::Op::With:
            if (e.with_dim) ctx.dim = *e.with_dim;
            if (e.with_cutoff) ctx.cutoff = *e.with_cutoff;
            return eval_node(e.children[0], ctx);
        case Expr::Op::Comult:
            return comultiplication(ctx.fock(e.index.value_or(ctx.cutoff)),
                                    ctx.env->coefficients);
        case Expr::Op::Counit:
            return counit_e(ctx.fock(ctx.cutoff), ctx.env->coefficients);
        case Expr::Op::Eps:
            return epsilon_single(ctx.fock(ctx.cutoff), ctx.env->coefficients);
        case Expr::Op::Eta:
            return eta_comonoid(copy_comonoid(ctx.base()), ctx.cutoff, ctx.env->coefficients);
        case Expr::Op::Vac:
            return vacuum_state(ctx.fock(ctx.cutoff), ctx.env->coefficients);
        case Expr::Op::Swap:
            return swap_morphism(ctx.base(), ctx.base());
        case Expr::Op::Zeta:
            return duality_pair(ctx.base()).first;
        case Expr::Op::Theta:
            return duality_pair(ctx.base()).second;
        case Expr::Op::Raise:
            return raising(ctx.fock(ctx.cutoff), lookup(e, ctx), ctx.env->coefficients);
        case Expr::Op::Lower:
            return lowering(ctx.fock(ctx.cutoff), lookup(e, ctx), ctx.env->coefficients);
        case Expr::Op::Coh:
            return coherent_state(ctx.fock(ctx.cutoff), lookup(e, ctx), ctx.env->coefficients);
        case Expr::Op::Sym:
            return sym_isometry(ctx.base(), *e.index);
        case Expr::Op::Proj:
            return sector_projection(ctx.fock(ctx.cutoff), *e.index);
        case Expr::Op::Inj:
            return sector_injection(ctx.fock(ctx.cutoff), *e.index);
    }
    throw Error("unreachable expression op");
}

int precedence(Expr::Op op) {
    switch (op) {
        case Expr::Op::Compose:
            return 0;
        case Expr::Op::Add:
            return 1;
        case Expr::Op::Tensor:
            return 2;
        default:
            return 3;
    }
}

void print_node(std::ostringstream& out, const Expr& e, int parent_level) {
    const int level = precedence(e.op);
    const bool wrap = level < 3 && level <= parent_level;
    if (wrap) out << "(";
    switch (e.op) {
        case Expr::Op::Compose:
        case Expr::Op::Add:
        case Expr::Op::Tensor: {
            const char* sep = e.op == Expr::Op::Compose ? " ; "
                              : e.op == Expr::Op::Add   ? " + "
                                                        : " * ";
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out << sep;
                print_node(out, e.children[i], level);
            }
            break;
        }
        case Expr::Op::Ident:
            out << e.ident;
            break;
        case Expr::Op::Dag:
            out << "dag(";
            print_node(out, e.children[0], -1);
            out << ")";
            break;
        case Expr::Op::Scale: {
            out << "scale(" << number_text(e.factor.real()) << ", "
                << number_text(e.factor.imag()) << ", ";
            print_node(out, e.children[0], -1);
            out << ")";
            break;
        }
        case Expr::Op::Name:
            out << "name(";
            print_node(out, e.children[0], -1);
            out << ")";
            break;
        case Expr::Op::With: {
            out << "with(";
            bool first = true;
            if (e.with_dim) {
                out << "d=" << *e.with_dim;
                first = false;
            }
            if (e.with_cutoff) {
                if (!first) out << ", ";
                out << "N=" << *e.with_cutoff;
            }
            out << "){";
            print_node(out, e.children[0], -1);
            out << "}";
            break;
        }
        case Expr::Op::Comult:
            out << "d";
            if (e.index) out << "[" << *e.index << "]";
            break;
        case Expr::Op::Counit:
            out << "e";
            break;
        case Expr::Op::Eps:
            out << "eps";
            break;
        case Expr::Op::Eta:
            out << "eta";
            break;
        case Expr::Op::Vac:
            out << "vac";
            break;
        case Expr::Op::Swap:
            out << "swap";
            break;
        case Expr::Op::Zeta:
            out << "zeta";
            break;
        case Expr::Op::Theta:
            out << "theta";
            break;
        case Expr::Op::Raise:
            out << "raise(" << e.ident << ")";
            break;
        case Expr::Op::Lower:
            out << "lower(" << e.ident << ")";
            break;
        case Expr::Op::Coh:
            out << "coh(" << e.ident << ")";
            break;
        case Expr::Op::Sym:
            out << "sym(" << *e.index << ")";
            break;
        case Expr::Op::Proj:
            out << "proj(" << *e.index << ")";
            break;
        case Expr::Op::Inj:
            out << "inj(" << *e.index << ")";
            break;
    }
    if (wrap) out << ")";
}

}  // namespace

void typecheck(Expr& e, const Environment& env) {
    typecheck_node(e, Context{&env, env.dim, env.cutoff});
}

Morphism eval_expr(const Expr& e, const Environment& env) {
    return eval_node(e, Context{&env, env.dim, env.cutoff});
}

std::string pretty_print(const Expr& e) {
    std::ostringstream out;
    print_node(out, e, -1);
    return out.str();
}

}  // namespace qho::expr
