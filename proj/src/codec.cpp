// Copyright 2026 lgmvu contributors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "lgmvu/codec.hpp"

namespace lgmvu {

namespace {

// Guards against stack exhaustion on adversarial input; recursive types
// consume at least one byte per level, so this bounds legal nesting too.
constexpr int kMaxDepth = 4096;

[[noreturn]] void mismatch(const std::string& path, const std::string& why) {
    throw WireError(WireErrorKind::TypeMismatch, path.empty() ? why : path + ": " + why);
}

class Encoder {
  public:
    Encoder(ByteWriter& w, const Schema& schema) : w_(w), schema_(schema) {}

    void value(const TypeRef& type, const Value& v, std::string& path, int depth) {
        if (depth > kMaxDepth) throw WireError(WireErrorKind::DepthExceeded, path);
        TypeRef ref = schema_.resolve(type);
        if (ref.is_primitive) {
            primitive(ref.prim, v, path);
            return;
        }
        const TypeDef* def = schema_.find(ref.name);
        if (!def) mismatch(path, "unknown type " + ref.name);
        switch (def->kind) {
        case TypeDef::Kind::Record: record(*def, v, path, depth); break;
        case TypeDef::Kind::Sum: sum(*def, v, path, depth); break;
        case TypeDef::Kind::List: list(*def, v, path, depth); break;
        case TypeDef::Kind::Alias: break; // unreachable after resolve
        }
    }

  private:
    void primitive(Prim p, const Value& v, std::string& path) {
        switch (p) {
        case Prim::Bool:
            if (!v.is(ValueKind::Bool)) mismatch(path, "expected bool");
            w_.u8(v.as_bool() ? 1 : 0);
            break;
        case Prim::Int64:
            if (!v.is(ValueKind::Int)) mismatch(path, "expected int");
            w_.i64(v.as_int());
            break;
        case Prim::Float64:
            if (!v.is(ValueKind::Float)) mismatch(path, "expected float");
            w_.f64(v.as_real());
            break;
        case Prim::Str:
            if (!v.is(ValueKind::Str)) mismatch(path, "expected string");
            if (!valid_utf8(v.as_str())) mismatch(path, "string is not valid UTF-8");
            w_.string(v.as_str());
            break;
        }
    }

    void record(const TypeDef& def, const Value& v, std::string& path, int depth) {
        if (!v.is(ValueKind::Record)) mismatch(path, "expected record " + def.name);
        const auto& fields = v.fields();
        if (fields.size() != def.fields.size())
            mismatch(path, "record " + def.name + " expects " +
                               std::to_string(def.fields.size()) + " fields, got " +
                               std::to_string(fields.size()));
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (fields[i].name != def.fields[i].name)
                mismatch(path, "field " + std::to_string(i) + " should be " +
                                   def.fields[i].name + ", got " + fields[i].name);
            std::size_t mark = path.size();
            path += "." + fields[i].name;
            value(def.fields[i].type, fields[i].value, path, depth + 1);
            path.resize(mark);
        }
    }

    void sum(const TypeDef& def, const Value& v, std::string& path, int depth) {
        if (!v.is(ValueKind::Variant)) mismatch(path, "expected variant of " + def.name);
        for (std::size_t i = 0; i < def.variants.size(); ++i) {
            if (def.variants[i].name != v.variant_name()) continue;
            w_.u8(static_cast<std::uint8_t>(i));
            const auto& decl = def.variants[i];
            if (decl.payload.has_value() != v.has_payload())
                mismatch(path, "variant " + decl.name +
                                   (decl.payload ? " requires a payload" : " takes no payload"));
            if (decl.payload) {
                std::size_t mark = path.size();
                path += "." + decl.name;
                value(*decl.payload, v.payload(), path, depth + 1);
                path.resize(mark);
            }
            return;
        }
        mismatch(path, "no variant " + v.variant_name() + " in " + def.name);
    }

    void list(const TypeDef& def, const Value& v, std::string& path, int depth) {
        if (!v.is(ValueKind::List)) mismatch(path, "expected list " + def.name);
        const auto& elems = v.elements();
        w_.u32(static_cast<std::uint32_t>(elems.size()));
        for (std::size_t i = 0; i < elems.size(); ++i) {
            std::size_t mark = path.size();
            path += "[" + std::to_string(i) + "]";
            value(def.target, elems[i], path, depth + 1);
            path.resize(mark);
        }
    }

    ByteWriter& w_;
    const Schema& schema_;
};

class Decoder {
  public:
    Decoder(ByteReader& r, const Schema& schema) : r_(r), schema_(schema) {}

    Value value(const TypeRef& type, int depth) {
        if (depth > kMaxDepth) throw WireError(WireErrorKind::DepthExceeded, "");
        TypeRef ref = schema_.resolve(type);
        if (ref.is_primitive) return primitive(ref.prim);
        const TypeDef* def = schema_.find(ref.name);
        if (!def) throw WireError(WireErrorKind::TypeMismatch, "unknown type " + ref.name);
        switch (def->kind) {
        case TypeDef::Kind::Record: {
            Value::Fields fields;
            fields.reserve(def->fields.size());
            for (const auto& f : def->fields)
                fields.push_back({f.name, value(f.type, depth + 1)});
            return Value::record(std::move(fields));
        }
        case TypeDef::Kind::Sum: {
            std::uint8_t idx = r_.u8();
            if (idx >= def->variants.size())
                throw WireError(WireErrorKind::BadVariantIndex,
                                def->name + " index " + std::to_string(idx));
            const auto& v = def->variants[idx];
            if (v.payload) return Value::variant(v.name, value(*v.payload, depth + 1));
            return Value::variant(v.name);
        }
        case TypeDef::Kind::List: {
            std::uint32_t n = r_.u32();
            Value::List elems;
            // cap the reserve; n is attacker-controlled
            elems.reserve(std::min<std::uint32_t>(n, 4096));
            for (std::uint32_t i = 0; i < n; ++i) elems.push_back(value(def->target, depth + 1));
            return Value::list(std::move(elems));
        }
        case TypeDef::Kind::Alias: break; // unreachable after resolve
        }
        throw WireError(WireErrorKind::TypeMismatch, "unresolvable type");
    }

  private:
    Value primitive(Prim p) {
        switch (p) {
        case Prim::Bool: {
            std::uint8_t b = r_.u8();
            if (b > 1) throw WireError(WireErrorKind::BadBool, std::to_string(b));
            return Value::boolean(b == 1);
        }
        case Prim::Int64: return Value::integer(r_.i64());
        case Prim::Float64: return Value::real(r_.f64());
        case Prim::Str: return Value::str(r_.string());
        }
        throw WireError(WireErrorKind::TypeMismatch, "unknown primitive");
    }

    ByteReader& r_;
    const Schema& schema_;
};

} // namespace

void encode_into(ByteWriter& w, const Schema& schema, const TypeRef& type, const Value& value) {
    Encoder enc(w, schema);
    std::string path;
    enc.value(type, value, path, 0);
}

Bytes encode(const Schema& schema, const TypeRef& type, const Value& value) {
    ByteWriter w;
    encode_into(w, schema, type, value);
    return w.take();
}

Value decode_from(ByteReader& r, const Schema& schema, const TypeRef& type) {
    Decoder dec(r, schema);
    return dec.value(type, 0);
}

Value decode(const Schema& schema, const TypeRef& type, std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    Value v = decode_from(r, schema, type);
    r.expect_done();
    return v;
}

} // namespace lgmvu
