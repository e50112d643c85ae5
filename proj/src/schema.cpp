// Copyright 2026 lgmvu contributors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "lgmvu/schema.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lgmvu/bytes.hpp"

namespace lgmvu {

namespace {

const char* prim_name(Prim p) {
    switch (p) {
    case Prim::Bool: return "Bool";
    case Prim::Int64: return "Int64";
    case Prim::Float64: return "Float64";
    case Prim::Str: return "String";
    }
    return "?";
}

std::optional<Prim> parse_prim(std::string_view s) {
    if (s == "Bool") return Prim::Bool;
    if (s == "Int64") return Prim::Int64;
    if (s == "Float64") return Prim::Float64;
    if (s == "String") return Prim::Str;
    return std::nullopt;
}

} // namespace

std::string TypeRef::to_text() const {
    return is_primitive ? prim_name(prim) : name;
}

SchemaError::SchemaError(Kind kind, std::string detail, std::string name, int line, int col)
    : std::runtime_error([&] {
          std::string what;
          switch (kind) {
          case Kind::Syntax:
              what = "syntax error at " + std::to_string(line) + ":" + std::to_string(col);
              break;
          case Kind::UnresolvedType: what = "unresolved type " + name; break;
          case Kind::MissingRoot: what = "missing root " + name; break;
          case Kind::IllegalRecursion: what = "illegal recursion through " + name; break;
          }
          if (!detail.empty()) what += ": " + detail;
          return what;
      }()),
      kind(kind), name(std::move(name)), line(line), col(col) {}

const TypeDef* Schema::find(std::string_view name) const {
    for (const auto& d : defs) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

TypeRef Schema::resolve(TypeRef ref) const {
    // alias chains are acyclic after validation
    while (!ref.is_primitive) {
        const TypeDef* d = find(ref.name);
        if (!d || d->kind != TypeDef::Kind::Alias) break;
        ref = d->target;
    }
    return ref;
}

// ---------------------------------------------------------------------------
// Parser
//
// The source is split into logical declarations first (newline or ';' at
// brace/paren depth zero), then each declaration is parsed on its own.

namespace {

struct RawDecl {
    std::string text;
    int line; // 1-based line of first char
    int col;
};

std::vector<RawDecl> split_declarations(std::string_view src) {
    std::vector<RawDecl> decls;
    std::string cur;
    int line = 1, col = 1;
    int cur_line = 1, cur_col = 1;
    int depth = 0;
    bool in_comment = false;

    auto flush = [&] {
        // drop blank declarations
        if (cur.find_first_not_of(" \t\r") != std::string::npos)
            decls.push_back({cur, cur_line, cur_col});
        cur.clear();
    };

    for (char c : src) {
        if (c == '\n') {
            in_comment = false;
            if (depth == 0) {
                flush();
            } else {
                cur += ' ';
            }
            ++line;
            col = 1;
            continue;
        }
        if (in_comment) {
            ++col;
            continue;
        }
        if (c == '#') {
            in_comment = true;
            ++col;
            continue;
        }
        if (c == ';' && depth == 0) {
            flush();
            ++col;
            continue;
        }
        if (c == '{' || c == '(') ++depth;
        if (c == '}' || c == ')') --depth;
        if (cur.empty() || cur.find_first_not_of(" \t\r") == std::string::npos) {
            cur_line = line;
            cur_col = col;
        }
        cur += c;
        ++col;
    }
    flush();
    return decls;
}

class DeclParser {
  public:
    DeclParser(const RawDecl& d) : decl_(d), s_(d.text) {}

    [[noreturn]] void fail(const std::string& why) {
        throw SchemaError(SchemaError::Kind::Syntax, why, "", decl_.line,
                          decl_.col + static_cast<int>(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r'))
            ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected identifier");
        if (std::isdigit(static_cast<unsigned char>(s_[start]))) fail("identifier starts with digit");
        return std::string(s_.substr(start, pos_ - start));
    }

    TypeRef type_ref() {
        std::string n = ident();
        if (auto p = parse_prim(n)) return TypeRef::primitive(*p);
        if (n == "List") fail("List(...) is only allowed as a type definition body");
        return TypeRef::named(std::move(n));
    }

    std::vector<VariantDef> sum_body(std::string first_name) {
        std::vector<VariantDef> variants;
        std::string name = std::move(first_name);
        for (;;) {
            VariantDef v;
            v.name = name;
            if (eat('(')) {
                if (!eat(')')) {
                    v.payload = type_ref();
                    expect(')');
                }
            }
            variants.push_back(std::move(v));
            if (!eat('|')) break;
            name = ident();
        }
        if (variants.size() > 256) fail("sum exceeds 256 variants");
        return variants;
    }

    std::vector<FieldDef> record_body() {
        std::vector<FieldDef> fields;
        expect('{');
        if (!eat('}')) {
            for (;;) {
                FieldDef f;
                f.name = ident();
                expect(':');
                f.type = type_ref();
                fields.push_back(std::move(f));
                if (eat('}')) break;
                expect(',');
            }
        }
        return fields;
    }

    // Body of `type NAME = ...`.
    TypeDef type_body(std::string name) {
        TypeDef def;
        def.name = std::move(name);
        if (peek() == '{') {
            def.kind = TypeDef::Kind::Record;
            def.fields = record_body();
            return def;
        }
        std::string first = ident();
        if (first == "List" && peek() == '(') {
            expect('(');
            def.kind = TypeDef::Kind::List;
            def.target = type_ref();
            expect(')');
            return def;
        }
        if (peek() == '(' || peek() == '|') {
            def.kind = TypeDef::Kind::Sum;
            def.variants = sum_body(std::move(first));
            return def;
        }
        def.kind = TypeDef::Kind::Alias;
        if (auto p = parse_prim(first)) {
            def.target = TypeRef::primitive(*p);
        } else {
            def.target = TypeRef::named(std::move(first));
        }
        return def;
    }

    const RawDecl& decl_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

// Reserved name for inline `global msg` sums.
constexpr const char* kInlineMsgName = "GlobalMsg";

} // namespace

Schema parse_schema(std::string_view text) {
    if (!valid_utf8(text))
        throw SchemaError(SchemaError::Kind::Syntax, "input is not valid UTF-8", "", 1, 1);

    Schema schema;
    bool have_model = false, have_msg = false;

    for (const RawDecl& raw : split_declarations(text)) {
        DeclParser p(raw);
        std::string head = p.ident();
        if (head == "type") {
            std::string name = p.ident();
            if (parse_prim(name)) p.fail("cannot redefine primitive " + name);
            if (name == "List") p.fail("cannot redefine List");
            p.expect('=');
            TypeDef def = p.type_body(name);
            if (!p.done()) p.fail("unexpected trailing input");
            for (const auto& d : schema.defs)
                if (d.name == def.name) p.fail("duplicate type " + def.name);
            schema.defs.push_back(std::move(def));
        } else if (head == "global") {
            std::string which = p.ident();
            if (which == "model") {
                if (have_model) p.fail("duplicate global model declaration");
                schema.global_model = p.type_ref();
                if (!p.done()) p.fail("unexpected trailing input");
                have_model = true;
            } else if (which == "msg") {
                if (have_msg) p.fail("duplicate global msg declaration");
                std::string first = p.ident();
                if (p.peek() == '(' || p.peek() == '|') {
                    // inline sum, hoisted to a definition named GlobalMsg
                    TypeDef def;
                    def.kind = TypeDef::Kind::Sum;
                    def.name = kInlineMsgName;
                    def.variants = p.sum_body(std::move(first));
                    if (!p.done()) p.fail("unexpected trailing input");
                    for (const auto& d : schema.defs)
                        if (d.name == def.name)
                            p.fail(std::string("inline global msg collides with type ") +
                                   kInlineMsgName);
                    schema.defs.push_back(std::move(def));
                    schema.global_msg = TypeRef::named(kInlineMsgName);
                } else {
                    if (!p.done()) p.fail("unexpected trailing input");
                    if (auto prim = parse_prim(first))
                        schema.global_msg = TypeRef::primitive(*prim);
                    else
                        schema.global_msg = TypeRef::named(std::move(first));
                }
                have_msg = true;
            } else {
                p.fail("expected 'model' or 'msg' after 'global'");
            }
        } else {
            p.fail("expected 'type' or 'global'");
        }
    }

    if (!have_model)
        throw SchemaError(SchemaError::Kind::MissingRoot, "", "globalModelType", 0, 0);
    if (!have_msg)
        throw SchemaError(SchemaError::Kind::MissingRoot, "", "globalMsgType", 0, 0);

    // resolution
    auto check_ref = [&](const TypeRef& r) {
        if (!r.is_primitive && !schema.find(r.name))
            throw SchemaError(SchemaError::Kind::UnresolvedType, "", r.name, 0, 0);
    };
    for (const auto& d : schema.defs) {
        switch (d.kind) {
        case TypeDef::Kind::Record:
            for (const auto& f : d.fields) check_ref(f.type);
            break;
        case TypeDef::Kind::Sum:
            for (const auto& v : d.variants)
                if (v.payload) check_ref(*v.payload);
            break;
        case TypeDef::Kind::List:
        case TypeDef::Kind::Alias:
            check_ref(d.target);
            break;
        }
    }
    check_ref(schema.global_model);
    check_ref(schema.global_msg);

    // Recursion is legal only when every cycle passes through a Sum payload
    // or a List element (those consume input while decoding). Cycles made of
    // record fields and aliases alone are rejected.
    std::map<std::string, std::vector<std::string>> unguarded;
    for (const auto& d : schema.defs) {
        auto& edges = unguarded[d.name];
        if (d.kind == TypeDef::Kind::Record) {
            for (const auto& f : d.fields)
                if (!f.type.is_primitive) edges.push_back(f.type.name);
        } else if (d.kind == TypeDef::Kind::Alias) {
            if (!d.target.is_primitive) edges.push_back(d.target.name);
        }
    }
    for (const auto& d : schema.defs) {
        // DFS from d over unguarded edges; a path back to d is a cycle
        std::set<std::string> visited;
        std::vector<std::string> stack = unguarded[d.name];
        while (!stack.empty()) {
            std::string n = stack.back();
            stack.pop_back();
            if (n == d.name)
                throw SchemaError(SchemaError::Kind::IllegalRecursion, "", d.name, 0, 0);
            if (!visited.insert(n).second) continue;
            for (const auto& m : unguarded[n]) stack.push_back(m);
        }
    }

    return schema;
}

// ---------------------------------------------------------------------------
// Fingerprint

namespace {

void write_ref(ByteWriter& w, const TypeRef& r) {
    if (r.is_primitive) {
        w.u8(static_cast<std::uint8_t>(0x10 + static_cast<std::uint8_t>(r.prim)));
    } else {
        w.u8(0x20);
        w.string(r.name);
    }
}

void write_def(ByteWriter& w, const TypeDef& d) {
    w.u8(static_cast<std::uint8_t>(d.kind));
    w.string(d.name);
    switch (d.kind) {
    case TypeDef::Kind::Record:
        w.u32(static_cast<std::uint32_t>(d.fields.size()));
        for (const auto& f : d.fields) {
            w.string(f.name);
            write_ref(w, f.type);
        }
        break;
    case TypeDef::Kind::Sum:
        w.u32(static_cast<std::uint32_t>(d.variants.size()));
        for (const auto& v : d.variants) {
            w.string(v.name);
            w.u8(v.payload ? 1 : 0);
            if (v.payload) write_ref(w, *v.payload);
        }
        break;
    case TypeDef::Kind::List:
    case TypeDef::Kind::Alias:
        write_ref(w, d.target);
        break;
    }
}

} // namespace

Digest fingerprint(const Schema& schema) {
    ByteWriter w;
    w.raw(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>("lgm1"), 4));
    w.u8(0xF0);
    write_ref(w, schema.global_model);
    w.u8(0xF1);
    write_ref(w, schema.global_msg);

    std::vector<const TypeDef*> sorted;
    sorted.reserve(schema.defs.size());
    for (const auto& d : schema.defs) sorted.push_back(&d);
    std::sort(sorted.begin(), sorted.end(),
              [](const TypeDef* a, const TypeDef* b) { return a->name < b->name; });
    for (const TypeDef* d : sorted) write_def(w, *d);

    return sha256(w.bytes());
}

std::string fingerprint_hex(const Schema& schema) {
    return digest_hex(fingerprint(schema));
}

} // namespace lgmvu
