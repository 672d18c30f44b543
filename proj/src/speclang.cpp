/*
 * Copyright 2026 The hypersynth authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hsyn/speclang.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

namespace hsyn {

// ---------------------------------------------------------------------------
// Formula

Formula Formula::make(Kind k, std::uint32_t prop, std::vector<Formula> args)
{
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->prop = prop;
    n->args = std::move(args);
    return Formula(std::move(n));
}

Formula Formula::top()
{
    static const Formula f = make(Kind::tt, 0, {});
    return f;
}

Formula Formula::bottom()
{
    static const Formula f = make(Kind::ff, 0, {});
    return f;
}

Formula Formula::atom(std::uint32_t prop) { return make(Kind::atom, prop, {}); }
Formula Formula::not_atom(std::uint32_t prop) { return make(Kind::not_atom, prop, {}); }
Formula Formula::conj(Formula lhs, Formula rhs) { return make(Kind::conj, 0, {std::move(lhs), std::move(rhs)}); }
Formula Formula::disj(Formula lhs, Formula rhs) { return make(Kind::disj, 0, {std::move(lhs), std::move(rhs)}); }
Formula Formula::conj(std::vector<Formula> args) { return make(Kind::conj, 0, std::move(args)); }
Formula Formula::disj(std::vector<Formula> args) { return make(Kind::disj, 0, std::move(args)); }
Formula Formula::next(Formula arg) { return make(Kind::next, 0, {std::move(arg)}); }
Formula Formula::until(Formula lhs, Formula rhs) { return make(Kind::until, 0, {std::move(lhs), std::move(rhs)}); }
Formula Formula::eventually(Formula arg) { return make(Kind::eventually, 0, {std::move(arg)}); }

int compare(const Formula &a, const Formula &b)
{
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    if (a.prop() != b.prop()) return a.prop() < b.prop() ? -1 : 1;
    auto la = a.args(), lb = b.args();
    for (std::size_t i = 0; i < la.size() && i < lb.size(); ++i) {
        if (int c = compare(la[i], lb[i]); c != 0) return c;
    }
    if (la.size() != lb.size()) return la.size() < lb.size() ? -1 : 1;
    return 0;
}

std::string Formula::to_string(std::span<const std::string> props) const
{
    auto name = [&](std::uint32_t p) { return p < props.size() ? props[p] : "p" + std::to_string(p); };
    auto join = [&](const char *sep) {
        std::string s = "(";
        for (std::size_t i = 0; i < args().size(); ++i) {
            if (i) s += sep;
            s += args()[i].to_string(props);
        }
        return s + ")";
    };
    switch (kind()) {
    case Kind::tt: return "true";
    case Kind::ff: return "false";
    case Kind::atom: return name(prop());
    case Kind::not_atom: return "!" + name(prop());
    case Kind::conj: return join(" & ");
    case Kind::disj: return join(" | ");
    case Kind::next: return "X " + arg(0).to_string(props);
    case Kind::eventually: return "F " + arg(0).to_string(props);
    case Kind::until: return "(" + arg(0).to_string(props) + " U " + arg(1).to_string(props) + ")";
    }
    return "?";
}

std::size_t Formula::depth() const
{
    std::size_t d = 0;
    for (const auto &a : args()) d = std::max(d, a.depth());
    return args().empty() ? 0 : d + 1;
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string &msg)
    : Error(ErrorKind::input, msg), position_(position), expected_(std::move(expected))
{
}

namespace {

enum class Tok { end, ident, kw_true, kw_false, bang, amp, bar, kw_x, kw_f, kw_u, lparen, rparen };

struct Token
{
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        switch (c) {
        case '!': out.push_back({Tok::bang, "!", start}); ++i; continue;
        case '&': out.push_back({Tok::amp, "&", start}); ++i; continue;
        case '|': out.push_back({Tok::bar, "|", start}); ++i; continue;
        case '(': out.push_back({Tok::lparen, "(", start}); ++i; continue;
        case ')': out.push_back({Tok::rparen, ")", start}); ++i; continue;
        default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            std::string word(text.substr(start, i - start));
            Tok k = Tok::ident;
            if (word == "true") k = Tok::kw_true;
            else if (word == "false") k = Tok::kw_false;
            else if (word == "X") k = Tok::kw_x;
            else if (word == "F") k = Tok::kw_f;
            else if (word == "U") k = Tok::kw_u;
            out.push_back({k, std::move(word), start});
            continue;
        }
        throw ParseError(start, {"atom", "true", "false", "!", "X", "F", "("},
                         "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(start));
    }
    out.push_back({Tok::end, "", text.size()});
    return out;
}

class Parser
{
  public:
    Parser(std::string_view text, std::span<const std::string> props) : toks_(tokenize(text)), props_(props) {}

    Formula parse()
    {
        Formula f = parse_disj();
        if (peek().kind != Tok::end) fail({"&", "|", "U", "end of input"});
        return f;
    }

  private:
    const Token &peek() const { return toks_[pos_]; }
    const Token &take() { return toks_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const Token &t = peek();
        std::string msg = "syntax error at position " + std::to_string(t.pos) + ": found "
                          + (t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'") + ", expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
        throw ParseError(t.pos, std::move(expected), msg);
    }

    std::uint32_t lookup_atom(const Token &t) const
    {
        auto it = std::find(props_.begin(), props_.end(), t.text);
        if (it == props_.end())
            throw ParseError(t.pos, {}, "undeclared atom '" + t.text + "' at position " + std::to_string(t.pos));
        return static_cast<std::uint32_t>(it - props_.begin());
    }

    Formula parse_disj()
    {
        Formula f = parse_conj();
        while (peek().kind == Tok::bar) {
            take();
            f = Formula::disj(f, parse_conj());
        }
        return f;
    }

    Formula parse_conj()
    {
        Formula f = parse_until();
        while (peek().kind == Tok::amp) {
            take();
            f = Formula::conj(f, parse_until());
        }
        return f;
    }

    Formula parse_until()
    {
        Formula lhs = parse_unary();
        if (peek().kind == Tok::kw_u) {
            take();
            return Formula::until(lhs, parse_until());
        }
        return lhs;
    }

    Formula parse_unary()
    {
        const Token &t = peek();
        switch (t.kind) {
        case Tok::kw_true: take(); return Formula::top();
        case Tok::kw_false: take(); return Formula::bottom();
        case Tok::ident: take(); return Formula::atom(lookup_atom(t));
        case Tok::bang: {
            take();
            const Token &a = peek();
            if (a.kind != Tok::ident)
                throw ParseError(a.pos, {"atom"},
                                 "negation applied to a non-atom at position " + std::to_string(a.pos));
            take();
            return Formula::not_atom(lookup_atom(a));
        }
        case Tok::kw_x: take(); return Formula::next(parse_unary());
        case Tok::kw_f: take(); return Formula::eventually(parse_unary());
        case Tok::lparen: {
            take();
            Formula f = parse_disj();
            if (peek().kind != Tok::rparen) fail({")", "&", "|", "U"});
            take();
            return f;
        }
        default: fail({"atom", "true", "false", "!", "X", "F", "("});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::span<const std::string> props_;
};

}  // namespace

Formula parse_formula(std::string_view text, std::span<const std::string> props)
{
    return Parser(text, props).parse();
}

// ---------------------------------------------------------------------------
// Normalization and progression

namespace {

using Kind = Formula::Kind;

Formula normalize_junction(Kind kind, std::span<const Formula> raw)
{
    const Kind absorbing = kind == Kind::conj ? Kind::ff : Kind::tt;
    const Kind neutral = kind == Kind::conj ? Kind::tt : Kind::ff;
    std::vector<Formula> flat;
    for (const auto &a : raw) {
        Formula n = normalize(a);
        if (n.is(absorbing)) return n;
        if (n.is(neutral)) continue;
        if (n.is(kind)) {
            for (const auto &sub : n.args()) flat.push_back(sub);
        } else {
            flat.push_back(std::move(n));
        }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return kind == Kind::conj ? Formula::top() : Formula::bottom();
    if (flat.size() == 1) return flat.front();
    return kind == Kind::conj ? Formula::conj(std::move(flat)) : Formula::disj(std::move(flat));
}

Formula normalize_until(const Formula &lhs, const Formula &rhs)
{
    Formula r = normalize(rhs);
    if (r.is(Kind::tt) || r.is(Kind::ff)) return r;
    Formula l = normalize(lhs);
    if (l.is(Kind::ff)) return r;
    return Formula::until(std::move(l), std::move(r));
}

}  // namespace

Formula normalize(const Formula &f)
{
    switch (f.kind()) {
    case Kind::tt:
    case Kind::ff:
    case Kind::atom:
    case Kind::not_atom: return f;
    case Kind::conj:
    case Kind::disj: return normalize_junction(f.kind(), f.args());
    case Kind::next: {
        Formula a = normalize(f.arg(0));
        if (a.is(Kind::ff)) return a;
        return Formula::next(std::move(a));
    }
    case Kind::until: return normalize_until(f.arg(0), f.arg(1));
    case Kind::eventually: return normalize_until(Formula::top(), f.arg(0));
    }
    return f;
}

namespace {

Formula progress_raw(const Formula &f, Symbol sigma)
{
    switch (f.kind()) {
    case Kind::tt:
    case Kind::ff: return f;
    case Kind::atom: return (sigma >> f.prop()) & 1u ? Formula::top() : Formula::bottom();
    case Kind::not_atom: return (sigma >> f.prop()) & 1u ? Formula::bottom() : Formula::top();
    case Kind::conj:
    case Kind::disj: {
        std::vector<Formula> parts;
        parts.reserve(f.args().size());
        for (const auto &a : f.args()) parts.push_back(progress_raw(a, sigma));
        return f.is(Kind::conj) ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
    }
    case Kind::next: return f.arg(0);
    case Kind::until:
        // psi now, or phi now and the same obligation from the next step
        return Formula::disj(progress_raw(f.arg(1), sigma), Formula::conj(progress_raw(f.arg(0), sigma), f));
    case Kind::eventually: return Formula::disj(progress_raw(f.arg(0), sigma), f);
    }
    return f;
}

}  // namespace

Formula progress(const Formula &f, Symbol sigma) { return normalize(progress_raw(f, sigma)); }

// ---------------------------------------------------------------------------
// DFA

std::uint32_t Dfa::run(std::span<const Symbol> word) const
{
    std::uint32_t q = initial;
    for (Symbol s : word) q = step(q, s);
    return q;
}

namespace {

void check_props(std::span<const std::string> props)
{
    if (props.size() > kMaxPropositions)
        throw input_error("at most " + std::to_string(kMaxPropositions) + " atomic propositions are supported, got "
                          + std::to_string(props.size()));
}

}  // namespace

Dfa compile_to_dfa(const Formula &f, std::span<const std::string> props, std::size_t state_cap)
{
    check_props(props);
    Dfa d;
    d.props.assign(props.begin(), props.end());
    const std::size_t alpha = d.alphabet_size();

    std::vector<Formula> residuals;
    std::unordered_map<std::string, std::uint32_t> index;
    auto intern = [&](const Formula &r) -> std::uint32_t {
        auto key = r.to_string(props);
        auto [it, fresh] = index.try_emplace(std::move(key), static_cast<std::uint32_t>(residuals.size()));
        if (fresh) {
            if (residuals.size() >= state_cap)
                throw Error(ErrorKind::resource, "DFA construction exceeded the state cap of "
                                                     + std::to_string(state_cap));
            residuals.push_back(r);
        }
        return it->second;
    };

    d.initial = intern(normalize(f));
    for (std::size_t q = 0; q < residuals.size(); ++q) {
        d.delta.resize((q + 1) * alpha);
        const Formula cur = residuals[q];
        for (Symbol s = 0; s < alpha; ++s) d.delta[q * alpha + s] = intern(progress(cur, s));
    }

    d.state_names.reserve(residuals.size());
    d.accepting.reserve(residuals.size());
    for (std::size_t q = 0; q < residuals.size(); ++q) {
        d.state_names.push_back("q" + std::to_string(q));
        d.accepting.push_back(residuals[q].is(Kind::tt));
    }
    return d;
}

void validate_dfa(const Dfa &d)
{
    check_props(d.props);
    const std::size_t n = d.num_states();
    if (n == 0) throw input_error("DFA has no states");
    if (d.accepting.size() != n) throw input_error("DFA accepting vector has the wrong size");
    if (d.initial >= n) throw input_error("DFA initial state out of range");
    if (d.delta.size() != n * d.alphabet_size()) throw input_error("DFA transition table is not total");
    for (std::size_t q = 0; q < n; ++q) {
        for (Symbol s = 0; s < d.alphabet_size(); ++s) {
            const auto t = d.step(static_cast<std::uint32_t>(q), s);
            if (t >= n) throw input_error("DFA transition target out of range");
            if (d.accepting[q] && !d.accepting[t])
                throw input_error("accepting DFA state '" + d.state_names[q] + "' is not absorbing");
        }
    }
}

bool accepts(const Dfa &d, std::span<const Symbol> word)
{
    const Symbol limit = static_cast<Symbol>(d.alphabet_size());
    std::uint32_t q = d.initial;
    bool seen = d.is_accepting(q);
    for (Symbol s : word) {
        if (s >= limit) throw input_error("word symbol is not a subset of the proposition set");
        q = d.step(q, s);
        seen = seen || d.is_accepting(q);
    }
    return seen;
}

Symbol symbol_of(std::span<const std::string> names, std::span<const std::string> props)
{
    Symbol s = 0;
    for (const auto &n : names) {
        auto it = std::find(props.begin(), props.end(), n);
        if (it == props.end()) throw input_error("undeclared proposition '" + n + "'");
        s |= Symbol{1} << (it - props.begin());
    }
    return s;
}

std::vector<std::string> names_of(Symbol sigma, std::span<const std::string> props)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < props.size(); ++i)
        if ((sigma >> i) & 1u) out.push_back(props[i]);
    return out;
}

}  // namespace hsyn
