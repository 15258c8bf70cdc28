#include "offsearch/code_model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace offsearch {

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

SourceUnit SourceUnit::from_text(std::string path, std::string text) {
    SourceUnit u;
    u.path = std::move(path);
    u.text = std::move(text);
    u.checksum = fnv1a64(u.text);
    return u;
}

const LoopStatement& LoopInventory::loop(int id) const {
    std::size_t idx = static_cast<std::size_t>(id);
    if (idx < loops.size() && loops[idx].id == id)
        return loops[idx];
    for (const auto& l : loops)
        if (l.id == id)
            return l;
    throw std::out_of_range("no loop with id " + std::to_string(id));
}

SourceUnit SourceUnit::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ScanError("cannot read source file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_text(path, ss.str());
}

namespace {

const std::unordered_set<std::string>& keywords() {
    static const std::unordered_set<std::string> kw = {
        "auto", "break", "case", "char", "const", "continue", "default", "do",
        "double", "else", "enum", "extern", "float", "for", "goto", "if",
        "inline", "int", "long", "register", "restrict", "return", "short",
        "signed", "sizeof", "static", "struct", "switch", "typedef", "union",
        "unsigned", "void", "volatile", "while", "size_t", "bool"};
    return kw;
}

bool is_type_keyword(const std::string& s) {
    static const std::unordered_set<std::string> ty = {
        "void", "char", "short", "int", "long", "float", "double", "signed",
        "unsigned", "size_t", "bool", "const", "static", "register", "struct",
        "union", "enum", "volatile"};
    return ty.count(s) > 0;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
            ++i;
            continue;
        }
        // Preprocessor line: only when '#' starts a line (modulo whitespace).
        if (c == '#') {
            std::size_t ls = text.rfind('\n', i == 0 ? 0 : i - 1);
            std::size_t from = (ls == std::string::npos) ? 0 : ls + 1;
            bool line_start = true;
            for (std::size_t k = from; k < i; ++k)
                if (text[k] != ' ' && text[k] != '\t') { line_start = false; break; }
            if (line_start) {
                while (i < n && text[i] != '\n') {
                    if (text[i] == '\\' && i + 1 < n && text[i + 1] == '\n')
                        ++i; // continued directive line
                    ++i;
                }
                continue;
            }
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
            while (i < n && text[i] != '\n')
                ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '*') {
            std::size_t close = text.find("*/", i + 2);
            if (close == std::string::npos)
                throw ScanError("unterminated block comment", i);
            i = close + 2;
            continue;
        }
        if (c == '"' || c == '\'') {
            char quote = c;
            std::size_t start = i++;
            while (i < n && text[i] != quote) {
                if (text[i] == '\\')
                    ++i;
                ++i;
            }
            if (i >= n)
                throw ScanError("unterminated literal", start);
            ++i;
            out.push_back({Token::String, text.substr(start, i - start), start});
            continue;
        }
        if (ident_start(c)) {
            std::size_t start = i;
            while (i < n && ident_char(text[i]))
                ++i;
            std::string s = text.substr(start, i - start);
            out.push_back({keywords().count(s) ? Token::Keyword : Token::Ident, std::move(s), start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            std::size_t start = i;
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '.' ||
                             ((text[i] == '+' || text[i] == '-') && i > start &&
                              (text[i - 1] == 'e' || text[i - 1] == 'E'))))
                ++i;
            out.push_back({Token::Number, text.substr(start, i - start), start});
            continue;
        }
        // Punctuation, longest match first.
        static const std::array<const char*, 3> three = {{"<<=", ">>=", "..."}};
        static const std::array<const char*, 19> two = {{"++", "--", "+=", "-=", "*=", "/=", "%=",
                                                         "==", "!=", "<=", ">=", "&&", "||", "->",
                                                         "<<", ">>", "&=", "|=", "^="}};
        std::string tok;
        for (const char* t : three) {
            if (text.compare(i, 3, t) == 0) { tok = t; break; }
        }
        if (tok.empty()) {
            for (const char* t : two) {
                if (text.compare(i, 2, t) == 0) { tok = t; break; }
            }
        }
        if (tok.empty())
            tok = std::string(1, c);
        out.push_back({Token::Punct, tok, i});
        i += tok.size();
    }
    return out;
}

std::vector<std::string> canonical_tokens(const std::string& code) {
    std::vector<Token> toks = tokenize(code);
    std::vector<std::string> out;
    out.reserve(toks.size());
    std::unordered_map<std::string, std::string> renames;
    for (const auto& t : toks) {
        if (t.kind == Token::Ident) {
            auto it = renames.find(t.text);
            if (it == renames.end())
                it = renames.emplace(t.text, "id" + std::to_string(renames.size())).first;
            out.push_back(it->second);
        } else {
            out.push_back(t.text);
        }
    }
    return out;
}

namespace {

// Token-stream statement parser for the C subset the scanner understands.
struct Parser {
    const std::vector<Token>& t;
    const std::string& text;

    std::size_t match_group(std::size_t i) const {
        // t[i] is '(' '{' or '['; returns index one past the matching closer.
        const std::string& open = t[i].text;
        const char* close = open == "(" ? ")" : open == "{" ? "}" : "]";
        int depth = 0;
        for (std::size_t k = i; k < t.size(); ++k) {
            if (t[k].kind == Token::Punct) {
                if (t[k].text == open)
                    ++depth;
                else if (t[k].text == close && --depth == 0)
                    return k + 1;
            }
        }
        throw ScanError("unbalanced '" + open + "'", t[i].offset);
    }

    bool is(std::size_t i, const char* s) const {
        return i < t.size() && t[i].text == s;
    }

    // Returns index one past the end of the statement starting at i.
    std::size_t statement_end(std::size_t i) const {
        if (i >= t.size())
            throw ScanError("unexpected end of input");
        if (is(i, "{"))
            return match_group(i);
        if (is(i, ";"))
            return i + 1;
        const std::string& s = t[i].text;
        if (t[i].kind == Token::Keyword) {
            if (s == "for" || s == "while" || s == "switch") {
                std::size_t j = i + 1;
                if (!is(j, "("))
                    throw ScanError("expected '(' after " + s, t[i].offset);
                j = match_group(j);
                if (s == "while" && is(j, ";"))
                    return j + 1; // do-while tail handled below; bare while(...)...
                return statement_end(j);
            }
            if (s == "do") {
                std::size_t j = statement_end(i + 1);
                if (!is(j, "while"))
                    throw ScanError("expected 'while' after do-body", t[i].offset);
                j = match_group(j + 1);
                if (!is(j, ";"))
                    throw ScanError("expected ';' after do-while", t[i].offset);
                return j + 1;
            }
            if (s == "if") {
                std::size_t j = match_group(i + 1);
                j = statement_end(j);
                if (is(j, "else"))
                    j = statement_end(j + 1);
                return j;
            }
        }
        // Plain statement or declaration: scan to ';' at group depth 0.
        std::size_t k = i;
        while (k < t.size()) {
            if (t[k].kind == Token::Punct) {
                if (t[k].text == "(" || t[k].text == "[" || t[k].text == "{") {
                    k = match_group(k);
                    continue;
                }
                if (t[k].text == ";")
                    return k + 1;
                if (t[k].text == "}")
                    throw ScanError("statement runs into '}'", t[k].offset);
            }
            ++k;
        }
        throw ScanError("unterminated statement", t[i].offset);
    }
};

struct FunctionDef {
    std::string name;
    std::size_t body_tok_begin = 0; // index of '{'
    std::size_t body_tok_end = 0;   // one past matching '}'
    ByteSpan body_span;
};

struct RawLoop {
    std::size_t for_tok = 0;      // index of 'for'
    std::size_t header_end = 0;   // one past ')'
    std::size_t body_tok_end = 0; // one past body
    int nest_depth = 0;
    std::size_t func_index = 0;
};

struct ScanContext {
    const std::vector<Token>& toks;
    const std::string& text;
    Parser p;
    std::vector<FunctionDef> funcs;
    std::vector<RawLoop> loops;

    explicit ScanContext(const std::vector<Token>& t, const std::string& s)
        : toks(t), text(s), p{t, s} {}

    std::size_t token_end_offset(std::size_t i) const {
        if (i >= toks.size())
            return text.size();
        return toks[i].offset;
    }

    void find_functions() {
        std::size_t i = 0;
        while (i < toks.size()) {
            if (toks[i].kind == Token::Punct && (toks[i].text == "{" || toks[i].text == "(")) {
                i = p.match_group(i);
                continue;
            }
            if (toks[i].kind == Token::Ident && i + 1 < toks.size() && p.is(i + 1, "(")) {
                std::size_t after = p.match_group(i + 1);
                if (p.is(after, "{")) {
                    FunctionDef f;
                    f.name = toks[i].text;
                    f.body_tok_begin = after;
                    f.body_tok_end = p.match_group(after);
                    f.body_span = {toks[after].offset,
                                   toks[f.body_tok_end - 1].offset + 1};
                    funcs.push_back(std::move(f));
                    i = funcs.back().body_tok_end;
                    continue;
                }
            }
            ++i;
        }
    }

    void find_loops() {
        for (std::size_t fi = 0; fi < funcs.size(); ++fi)
            collect_loops(funcs[fi].body_tok_begin + 1, funcs[fi].body_tok_end - 1, 0, fi);
        std::sort(loops.begin(), loops.end(),
                  [&](const RawLoop& a, const RawLoop& b) {
                      return toks[a.for_tok].offset < toks[b.for_tok].offset;
                  });
    }

    void collect_loops(std::size_t begin, std::size_t end, int depth, std::size_t fi) {
        std::size_t i = begin;
        while (i < end) {
            if (toks[i].kind == Token::Keyword && toks[i].text == "for" && p.is(i + 1, "(")) {
                RawLoop l;
                l.for_tok = i;
                l.header_end = p.match_group(i + 1);
                l.body_tok_end = p.statement_end(l.header_end);
                l.nest_depth = depth;
                l.func_index = fi;
                loops.push_back(l);
                collect_loops(l.header_end, l.body_tok_end, depth + 1, fi);
                i = l.body_tok_end;
                continue;
            }
            ++i;
        }
    }
};

// Identifiers declared by statements in [begin, end): plain declarations and
// for-init declarations.
void collect_declared(const std::vector<Token>& toks, std::size_t begin, std::size_t end,
                      std::set<std::string>& out) {
    for (std::size_t i = begin; i < end; ++i) {
        if (toks[i].kind != Token::Keyword || !is_type_keyword(toks[i].text))
            continue;
        if (toks[i].text == "struct" || toks[i].text == "union" || toks[i].text == "enum")
            ++i; // skip the tag
        std::size_t j = i + 1;
        while (j < end && toks[j].kind == Token::Keyword && is_type_keyword(toks[j].text))
            ++j;
        bool expecting_name = true;
        while (j < end) {
            const Token& tk = toks[j];
            if (tk.kind == Token::Punct && tk.text == "*") { ++j; continue; }
            if (expecting_name && tk.kind == Token::Ident) {
                out.insert(tk.text);
                expecting_name = false;
                ++j;
                continue;
            }
            if (tk.kind == Token::Punct && tk.text == ",") { expecting_name = true; ++j; continue; }
            if (tk.kind == Token::Punct && (tk.text == ";" || tk.text == ")"))
                break;
            if (tk.kind == Token::Punct && tk.text == "=") {
                // skip initializer to ',' or ';' at depth 0
                int d = 0;
                ++j;
                while (j < end) {
                    const std::string& s = toks[j].text;
                    if (toks[j].kind == Token::Punct) {
                        if (s == "(" || s == "[" || s == "{") ++d;
                        else if (s == ")" || s == "]" || s == "}") --d;
                        else if (d == 0 && (s == "," || s == ";")) break;
                    }
                    ++j;
                }
                continue;
            }
            break; // not a declaration after all
        }
        i = j;
    }
}

bool is_assignment_op(const std::string& s) {
    return s == "=" || s == "+=" || s == "-=" || s == "*=" || s == "/=" ||
           s == "%=" || s == "&=" || s == "|=" || s == "^=" || s == "<<=" || s == ">>=";
}

} // namespace

ScanOptions ScanOptions::defaults() {
    ScanOptions o;
    o.pure_functions = {"sqrt",  "sqrtf", "sin",  "sinf",  "cos",   "cosf", "tan",
                        "exp",   "expf",  "log",  "logf",  "pow",   "powf", "fabs",
                        "fabsf", "floor", "ceil", "fmod",  "abs",   "fmin", "fmax",
                        "atan",  "atan2", "sinh", "cosh",  "tanh",  "log2", "log10"};
    return o;
}

bool ScanOptions::is_pure(const std::string& name) const {
    return std::find(pure_functions.begin(), pure_functions.end(), name) != pure_functions.end();
}

LoopInventory scan_loops(const SourceUnit& unit, const ScanOptions& opts) {
    std::vector<Token> toks = tokenize(unit.text);
    ScanContext ctx(toks, unit.text);
    ctx.find_functions();
    ctx.find_loops();

    LoopInventory inv;
    inv.unit_path = unit.path;
    inv.unit_checksum = unit.checksum;

    for (std::size_t li = 0; li < ctx.loops.size(); ++li) {
        const RawLoop& raw = ctx.loops[li];
        LoopStatement ls;
        ls.id = static_cast<int>(li);
        std::size_t span_end = (raw.body_tok_end < toks.size())
                                   ? toks[raw.body_tok_end - 1].offset + toks[raw.body_tok_end - 1].text.size()
                                   : unit.text.size();
        ls.span = {toks[raw.for_tok].offset, span_end};
        ls.nest_depth = raw.nest_depth;
        {
            std::size_t hdr_end = toks[raw.header_end - 1].offset + toks[raw.header_end - 1].text.size();
            ls.header_text = unit.text.substr(ls.span.begin, hdr_end - ls.span.begin);
        }

        const std::size_t body_begin = raw.header_end;
        const std::size_t body_end = raw.body_tok_end;

        // Token index ranges of nested for-headers inside this body; induction
        // updates there are private to the nested loop, not loop-carried writes.
        std::vector<std::pair<std::size_t, std::size_t>> nested_headers;
        for (const RawLoop& other : ctx.loops) {
            if (other.for_tok > raw.for_tok && other.for_tok < body_end)
                nested_headers.emplace_back(other.for_tok, other.header_end);
        }
        auto in_nested_header = [&](std::size_t i) {
            for (const auto& [b, e] : nested_headers)
                if (i >= b && i < e)
                    return true;
            return false;
        };

        std::set<std::string> declared_inside;
        collect_declared(toks, body_begin, body_end, declared_inside);
        // The loop's own init declaration ('for (int i = ...)') is private too.
        collect_declared(toks, raw.for_tok + 2, raw.header_end, declared_inside);

        bool candidate = true;
        long long ops = 0;
        long long subs = 0;

        // break binding: a break inside a nested breakable construct exits
        // that construct, not this loop.
        std::vector<std::size_t> breakable_ends;
        for (std::size_t i = body_begin; i < body_end && candidate; ++i) {
            while (!breakable_ends.empty() && i >= breakable_ends.back())
                breakable_ends.pop_back();
            const Token& tk = toks[i];
            if (tk.kind == Token::Keyword) {
                if (tk.text == "for" || tk.text == "while" || tk.text == "switch") {
                    if (ctx.p.is(i + 1, "(")) {
                        std::size_t he = ctx.p.match_group(i + 1);
                        breakable_ends.push_back(tk.text == "while" && ctx.p.is(he, ";")
                                                     ? he + 1 // do-while tail
                                                     : ctx.p.statement_end(he));
                    }
                } else if (tk.text == "do") {
                    breakable_ends.push_back(ctx.p.statement_end(i + 1));
                } else if (tk.text == "break") {
                    if (breakable_ends.empty())
                        candidate = false;
                } else if (tk.text == "return" || tk.text == "goto") {
                    candidate = false;
                }
            }
        }

        // Calls to functions not on the pure list.
        if (candidate) {
            for (std::size_t i = body_begin; i < body_end; ++i) {
                if (toks[i].kind == Token::Ident && ctx.p.is(i + 1, "(") &&
                    !opts.is_pure(toks[i].text)) {
                    candidate = false;
                    break;
                }
            }
        }

        // Loop-carried scalar writes read after the loop.
        if (candidate) {
            const FunctionDef& fn = ctx.funcs[raw.func_index];
            auto scalar_lvalue = [&](std::size_t ident_idx) -> bool {
                if (toks[ident_idx].kind != Token::Ident)
                    return false;
                if (ident_idx > 0) {
                    const Token& prev = toks[ident_idx - 1];
                    if (prev.kind == Token::Punct &&
                        (prev.text == "." || prev.text == "->" || prev.text == "*" ||
                         prev.text == "]"))
                        return false;
                }
                return true;
            };
            auto read_after_loop = [&](const std::string& name) -> bool {
                for (std::size_t i = body_end; i < fn.body_tok_end; ++i)
                    if (toks[i].kind == Token::Ident && toks[i].text == name)
                        return true;
                return false;
            };
            for (std::size_t i = body_begin; i < body_end && candidate; ++i) {
                if (in_nested_header(i))
                    continue;
                const Token& tk = toks[i];
                std::string written;
                if (tk.kind == Token::Punct && is_assignment_op(tk.text) && i > body_begin) {
                    // 'a[i] = x' leaves ']' before '='; only bare identifiers count.
                    if (scalar_lvalue(i - 1))
                        written = toks[i - 1].text;
                } else if (tk.kind == Token::Punct && (tk.text == "++" || tk.text == "--")) {
                    if (i > body_begin && scalar_lvalue(i - 1))
                        written = toks[i - 1].text;
                    else if (i + 1 < body_end && toks[i + 1].kind == Token::Ident)
                        written = toks[i + 1].text;
                }
                if (!written.empty() && !declared_inside.count(written) &&
                    read_after_loop(written))
                    candidate = false;
            }
        }

        for (std::size_t i = body_begin; i < body_end; ++i) {
            if (toks[i].kind != Token::Punct)
                continue;
            const std::string& s = toks[i].text;
            if (s == "+" || s == "-" || s == "*" || s == "/" || s == "%")
                ++ops;
            else if (s == "[")
                ++subs;
        }
        ls.static_op_count = ops;
        ls.static_mem_bytes = subs * 8;
        ls.parallel_candidate = candidate;

        inv.loops.push_back(std::move(ls));
    }

    for (const auto& l : inv.loops)
        if (l.parallel_candidate)
            inv.candidates.push_back(l.id);
    return inv;
}

std::vector<FunctionBlockSite>
scan_function_blocks(const SourceUnit& unit, const std::vector<std::string>& interest_list) {
    std::vector<Token> toks = tokenize(unit.text);
    ScanContext ctx(toks, unit.text);
    ctx.find_functions();

    std::unordered_map<std::string, const FunctionDef*> defs;
    for (const auto& f : ctx.funcs)
        defs.emplace(f.name, &f);
    std::unordered_set<std::string> interest(interest_list.begin(), interest_list.end());

    std::vector<FunctionBlockSite> sites;
    for (const auto& fn : ctx.funcs) {
        for (std::size_t i = fn.body_tok_begin + 1; i + 1 < fn.body_tok_end; ++i) {
            if (toks[i].kind != Token::Ident || !ctx.p.is(i + 1, "("))
                continue;
            std::size_t close = ctx.p.match_group(i + 1);
            if (ctx.p.is(close, "{"))
                continue; // a nested definition, not a call
            auto def = defs.find(toks[i].text);
            if (def == defs.end() && !interest.count(toks[i].text))
                continue;
            FunctionBlockSite site;
            site.id = static_cast<int>(sites.size());
            site.callee_name = toks[i].text;
            std::size_t close_off = toks[close - 1].offset + 1;
            site.span = {toks[i].offset, close_off};
            std::size_t args_begin = toks[i + 1].offset + 1;
            site.call_args = unit.text.substr(args_begin, toks[close - 1].offset - args_begin);
            if (def != defs.end()) {
                site.callee_body_span = def->second->body_span;
                site.body_tokens = canonical_tokens(unit.text.substr(
                    site.callee_body_span.begin, site.callee_body_span.size()));
            }
            sites.push_back(std::move(site));
        }
    }
    return sites;
}

SourceUnit insert_parallel_directives(const SourceUnit& unit, const LoopInventory& inventory,
                                      const Gene& bits, const std::string& directive_line) {
    if (bits.size() != inventory.candidates.size())
        throw LengthMismatch("gene length " + std::to_string(bits.size()) +
                             " != candidate count " + std::to_string(inventory.candidates.size()));

    std::vector<std::size_t> insert_at;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (!bits[k])
            continue;
        const LoopStatement& l = inventory.loop(inventory.candidates[k]);
        std::size_t line_start = unit.text.rfind('\n', l.span.begin == 0 ? 0 : l.span.begin - 1);
        line_start = (line_start == std::string::npos) ? 0 : line_start + 1;
        insert_at.push_back(line_start);
    }
    std::sort(insert_at.begin(), insert_at.end());

    std::string out;
    out.reserve(unit.text.size() + insert_at.size() * (directive_line.size() + 1));
    std::size_t prev = 0;
    for (std::size_t pos : insert_at) {
        out.append(unit.text, prev, pos - prev);
        std::size_t ws = pos;
        while (ws < unit.text.size() && (unit.text[ws] == ' ' || unit.text[ws] == '\t'))
            ++ws;
        out.append(unit.text, pos, ws - pos);
        out += directive_line;
        out += '\n';
        prev = pos;
    }
    out.append(unit.text, prev, unit.text.size() - prev);
    SourceUnit res = SourceUnit::from_text(unit.path, std::move(out));
    res.replaced_spans = unit.replaced_spans;
    return res;
}

SubstitutionResult substitute_function_block(const SourceUnit& unit,
                                             const LoopInventory& inventory,
                                             const FunctionBlockSite& site,
                                             const std::string& entry_point) {
    for (const ByteSpan& prior : unit.replaced_spans)
        if (prior.overlaps(site.span))
            throw SpanConflict("site '" + site.callee_name + "' overlaps a prior substitution");

    std::string call_text = entry_point;
    if (std::size_t p = call_text.find("{args}"); p != std::string::npos)
        call_text.replace(p, 6, site.call_args);

    std::string new_text = unit.text.substr(0, site.span.begin) + call_text +
                           unit.text.substr(site.span.end);
    const long long delta = static_cast<long long>(call_text.size()) -
                            static_cast<long long>(site.span.size());

    SourceUnit out = SourceUnit::from_text(unit.path, std::move(new_text));
    out.replaced_spans = unit.replaced_spans;
    out.replaced_spans.push_back({site.span.begin, site.span.begin + call_text.size()});

    auto shift = [&](std::size_t off) -> std::size_t {
        return off >= site.span.end ? static_cast<std::size_t>(static_cast<long long>(off) + delta)
                                    : off;
    };

    LoopInventory residual;
    residual.unit_path = out.path;
    residual.unit_checksum = out.checksum;
    for (const LoopStatement& l : inventory.loops) {
        if (site.callee_body_span.size() > 0 && site.callee_body_span.contains(l.span))
            continue;
        LoopStatement moved = l;
        moved.span = {shift(l.span.begin), shift(l.span.end)};
        residual.loops.push_back(std::move(moved));
    }
    for (const LoopStatement& l : residual.loops)
        if (l.parallel_candidate)
            residual.candidates.push_back(l.id);
    return {std::move(out), std::move(residual)};
}

} // namespace offsearch
