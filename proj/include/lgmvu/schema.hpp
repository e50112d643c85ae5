// Copyright 2026 lgmvu contributors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgmvu/digest.hpp"

namespace lgmvu {

// Schema declaration language, one declaration per line (or `;`-separated):
//
//   type Shape = Circle | Square          sum type
//   type Msg   = Set(Shape)               sum variants may carry one payload
//   type Pt    = { x: Int64, y: Int64 }   record (may span lines inside {})
//   type Pts   = List(Pt)                 list
//   type Id    = Int64                    alias
//   global model Shape                    designated global-model type
//   global msg Set(Shape) | Clear         designated global-message type;
//                                         inline sums are named GlobalMsg
//
// Primitives: Bool, Int64, Float64, String. `#` starts a comment.
// Field and payload positions take a type NAME (primitive or declared),
// never an inline expression.

enum class Prim : std::uint8_t { Bool = 0, Int64 = 1, Float64 = 2, Str = 3 };

struct TypeRef {
    static TypeRef primitive(Prim p) { return TypeRef{true, p, {}}; }
    static TypeRef named(std::string n) { return TypeRef{false, Prim::Bool, std::move(n)}; }

    bool is_primitive = true;
    Prim prim = Prim::Bool;
    std::string name;

    bool operator==(const TypeRef&) const = default;
    std::string to_text() const;
};

struct FieldDef {
    std::string name;
    TypeRef type;
};

struct VariantDef {
    std::string name;
    std::optional<TypeRef> payload;
};

struct TypeDef {
    enum class Kind : std::uint8_t { Record = 1, Sum = 2, List = 3, Alias = 4 };
    Kind kind;
    std::string name;
    std::vector<FieldDef> fields;     // Record
    std::vector<VariantDef> variants; // Sum
    TypeRef target;                   // List element / Alias target
};

class SchemaError : public std::runtime_error {
  public:
    enum class Kind { Syntax, UnresolvedType, MissingRoot, IllegalRecursion };

    SchemaError(Kind kind, std::string detail, std::string name, int line, int col);

    Kind kind;
    std::string name; // offending type name or missing root ("globalModelType"/"globalMsgType")
    int line = 0;     // 1-based, Syntax only
    int col = 0;
};

struct Schema {
    std::vector<TypeDef> defs; // declaration order
    TypeRef global_model;
    TypeRef global_msg;

    const TypeDef* find(std::string_view name) const;
    // Follows aliases until a primitive ref or a non-alias definition.
    TypeRef resolve(TypeRef ref) const;
};

// Parses and validates; throws SchemaError. Any byte sequence either
// yields a valid Schema or a SchemaError.
Schema parse_schema(std::string_view text);

// Digest of the canonical form: magic, both roots, then definitions
// sorted by name, each node as kind byte + name + children. Fields and
// variants stay in declaration order.
Digest fingerprint(const Schema& schema);
std::string fingerprint_hex(const Schema& schema);

} // namespace lgmvu
