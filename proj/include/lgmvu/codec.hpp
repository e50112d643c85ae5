// Copyright 2026 lgmvu contributors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <span>

#include "lgmvu/bytes.hpp"
#include "lgmvu/schema.hpp"
#include "lgmvu/value.hpp"

namespace lgmvu {

// Canonical byte encoding, bit-exact:
//   Bool    1 byte, 0x00 / 0x01
//   Int64   8 bytes, big-endian two's complement
//   Float64 8 bytes, big-endian IEEE-754
//   String  4-byte big-endian length + UTF-8 bytes
//   List    4-byte big-endian count + elements
//   Record  fields concatenated in declaration order
//   Sum     1-byte variant index (declaration order) + payload if present
//
// encode throws WireError(TypeMismatch) with a path into the value when the
// value does not conform to the type. decode is safe on arbitrary bytes and
// throws WireError(Truncated / TrailingBytes / BadVariantIndex / BadUtf8 /
// BadBool / DepthExceeded); a full-input decode of encode(v) returns v.

Bytes encode(const Schema& schema, const TypeRef& type, const Value& value);
Value decode(const Schema& schema, const TypeRef& type, std::span<const std::uint8_t> bytes);

// Variants used by the protocol layer: encode into an existing writer /
// decode from a reader without the all-bytes-consumed check.
void encode_into(ByteWriter& w, const Schema& schema, const TypeRef& type, const Value& value);
Value decode_from(ByteReader& r, const Schema& schema, const TypeRef& type);

} // namespace lgmvu
