// Copyright 2026 lgmvu contributors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "lgmvu/value.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <utility>

namespace lgmvu {

std::string_view kind_name(ValueKind k) {
    switch (k) {
    case ValueKind::Bool: return "bool";
    case ValueKind::Int: return "int";
    case ValueKind::Float: return "float";
    case ValueKind::Str: return "string";
    case ValueKind::List: return "list";
    case ValueKind::Record: return "record";
    case ValueKind::Variant: return "variant";
    }
    return "?";
}

Value::Value() : rep_(false) {}
Value::~Value() = default;
Value::Value(const Value&) = default;
Value::Value(Value&&) noexcept = default;
Value& Value::operator=(const Value&) = default;
Value& Value::operator=(Value&&) noexcept = default;
Value::Value(Rep rep) : rep_(std::move(rep)) {}

Value Value::boolean(bool b) { return Value(Rep(b)); }
Value Value::integer(std::int64_t i) { return Value(Rep(i)); }
Value Value::real(double d) { return Value(Rep(d)); }
Value Value::str(std::string s) { return Value(Rep(std::move(s))); }
Value Value::list(List elems) { return Value(Rep(std::move(elems))); }
Value Value::record(Fields fields) { return Value(Rep(std::move(fields))); }

Value Value::variant(std::string name) {
    return Value(Rep(VariantVal{std::move(name), {}}));
}

Value Value::variant(std::string name, Value payload) {
    VariantVal v{std::move(name), {}};
    v.payload.push_back(std::move(payload));
    return Value(Rep(std::move(v)));
}

ValueKind Value::kind() const {
    return static_cast<ValueKind>(rep_.index());
}

namespace {

[[noreturn]] void bad_access(const Value& v, const char* wanted) {
    throw ValueError(std::string("value is ") + std::string(kind_name(v.kind())) +
                     ", not " + wanted);
}

} // namespace

bool Value::as_bool() const {
    if (auto* p = std::get_if<bool>(&rep_)) return *p;
    bad_access(*this, "bool");
}

std::int64_t Value::as_int() const {
    if (auto* p = std::get_if<std::int64_t>(&rep_)) return *p;
    bad_access(*this, "int");
}

double Value::as_real() const {
    if (auto* p = std::get_if<double>(&rep_)) return *p;
    bad_access(*this, "float");
}

const std::string& Value::as_str() const {
    if (auto* p = std::get_if<std::string>(&rep_)) return *p;
    bad_access(*this, "string");
}

const Value::List& Value::elements() const {
    if (auto* p = std::get_if<List>(&rep_)) return *p;
    bad_access(*this, "list");
}

const Value::Fields& Value::fields() const {
    if (auto* p = std::get_if<Fields>(&rep_)) return *p;
    bad_access(*this, "record");
}

const std::string& Value::variant_name() const {
    if (auto* p = std::get_if<VariantVal>(&rep_)) return p->name;
    bad_access(*this, "variant");
}

bool Value::has_payload() const {
    if (auto* p = std::get_if<VariantVal>(&rep_)) return !p->payload.empty();
    bad_access(*this, "variant");
}

const Value& Value::payload() const {
    if (auto* p = std::get_if<VariantVal>(&rep_)) {
        if (p->payload.empty()) throw ValueError("variant " + p->name + " has no payload");
        return p->payload.front();
    }
    bad_access(*this, "variant");
}

const Value& Value::field(std::string_view name) const {
    for (const auto& f : fields()) {
        if (f.name == name) return f.value;
    }
    throw ValueError("record has no field '" + std::string(name) + "'");
}

bool Value::has_field(std::string_view name) const {
    for (const auto& f : fields()) {
        if (f.name == name) return true;
    }
    return false;
}

bool Value::operator==(const Value& other) const {
    if (rep_.index() != other.rep_.index()) return false;
    if (kind() == ValueKind::Float) {
        // bit equality, so NaN == NaN and +0 != -0
        return std::bit_cast<std::uint64_t>(std::get<double>(rep_)) ==
               std::bit_cast<std::uint64_t>(std::get<double>(other.rep_));
    }
    if (kind() == ValueKind::Variant) {
        const auto& a = std::get<VariantVal>(rep_);
        const auto& b = std::get<VariantVal>(other.rep_);
        return a.name == b.name && a.payload == b.payload;
    }
    return rep_ == other.rep_;
}

std::string format_float(double d) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
    std::string s(buf, end);
    bool plain = true;
    for (char c : s) {
        if (c != '-' && (c < '0' || c > '9')) plain = false;
    }
    if (plain) s += ".0";
    return s;
}

namespace {

void append_quoted(std::string& out, const std::string& s) {
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\x%02x", c);
                out += buf;
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    out += '"';
}

void append_text(std::string& out, const Value& v) {
    switch (v.kind()) {
    case ValueKind::Bool:
        out += v.as_bool() ? "true" : "false";
        break;
    case ValueKind::Int:
        out += std::to_string(v.as_int());
        break;
    case ValueKind::Float:
        out += format_float(v.as_real());
        break;
    case ValueKind::Str:
        append_quoted(out, v.as_str());
        break;
    case ValueKind::List: {
        out += '[';
        bool first = true;
        for (const auto& e : v.elements()) {
            if (!first) out += ", ";
            first = false;
            append_text(out, e);
        }
        out += ']';
        break;
    }
    case ValueKind::Record: {
        out += '{';
        bool first = true;
        for (const auto& f : v.fields()) {
            if (!first) out += ", ";
            first = false;
            out += f.name;
            out += ": ";
            append_text(out, f.value);
        }
        out += '}';
        break;
    }
    case ValueKind::Variant:
        out += v.variant_name();
        if (v.has_payload()) {
            out += '(';
            append_text(out, v.payload());
            out += ')';
        }
        break;
    }
}

} // namespace

std::string Value::to_text() const {
    std::string out;
    append_text(out, *this);
    return out;
}

Value with_field(const Value& rec, std::string_view name, Value v) {
    Value::Fields fields = rec.fields();
    for (auto& f : fields) {
        if (f.name == name) {
            f.value = std::move(v);
            return Value::record(std::move(fields));
        }
    }
    throw ValueError("record has no field '" + std::string(name) + "'");
}

} // namespace lgmvu
