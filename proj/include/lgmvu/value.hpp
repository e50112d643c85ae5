// Copyright 2026 lgmvu contributors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lgmvu {

enum class ValueKind { Bool, Int, Float, Str, List, Record, Variant };

std::string_view kind_name(ValueKind k);

class ValueError : public std::runtime_error {
  public:
    explicit ValueError(const std::string& what) : std::runtime_error(what) {}
};

// Dynamic value for schema-typed data: the runtime representation of
// everything that crosses the wire, plus the (untyped) local models and
// local message payloads of applications.
//
// Equality is structural; floats compare by bit pattern so that equality
// is a total relation and byte encodings of equal values are identical.
class Value {
  public:
    struct Field;
    using List = std::vector<Value>;
    using Fields = std::vector<Field>;
    struct VariantVal {
        std::string name;
        List payload; // empty or exactly one element
    };

    Value();
    ~Value();
    Value(const Value&);
    Value(Value&&) noexcept;
    Value& operator=(const Value&);
    Value& operator=(Value&&) noexcept;

    static Value boolean(bool b);
    static Value integer(std::int64_t i);
    static Value real(double d);
    static Value str(std::string s);
    static Value list(List elems);
    static Value record(Fields fields);
    static Value variant(std::string name);
    static Value variant(std::string name, Value payload);

    ValueKind kind() const;
    bool is(ValueKind k) const { return kind() == k; }

    bool as_bool() const;
    std::int64_t as_int() const;
    double as_real() const;
    const std::string& as_str() const;
    const List& elements() const;
    const Fields& fields() const;
    const std::string& variant_name() const;
    bool has_payload() const;
    const Value& payload() const;

    // Record access by field name; throws ValueError when absent.
    const Value& field(std::string_view name) const;
    bool has_field(std::string_view name) const;

    bool operator==(const Value& other) const;
    bool operator!=(const Value& other) const { return !(*this == other); }

    // Deterministic, locale-independent rendering used in dumps and
    // state digests.
    std::string to_text() const;

  private:
    using Rep =
        std::variant<bool, std::int64_t, double, std::string, List, Fields, VariantVal>;
    explicit Value(Rep rep);
    Rep rep_;
};

struct Value::Field {
    std::string name;
    Value value;
    bool operator==(const Field& o) const { return name == o.name && value == o.value; }
};

// Copy of `rec` with the named field replaced; throws when absent.
Value with_field(const Value& rec, std::string_view name, Value v);

// Deterministic float formatting (shortest round-trip form, always
// containing '.' or an exponent so it is distinguishable from an int).
std::string format_float(double d);

} // namespace lgmvu
