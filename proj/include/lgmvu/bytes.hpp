// Copyright 2026 lgmvu contributors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgmvu {

using Bytes = std::vector<std::uint8_t>;

enum class WireErrorKind {
    Truncated,
    TrailingBytes,
    BadVariantIndex,
    BadUtf8,
    BadBool,
    UnknownTag,
    DepthExceeded,
    TypeMismatch,
};

std::string_view wire_error_name(WireErrorKind k);

class WireError : public std::runtime_error {
  public:
    WireError(WireErrorKind kind, std::string detail)
        : std::runtime_error(std::string(wire_error_name(kind)) +
                             (detail.empty() ? "" : ": " + detail)),
          kind(kind), detail(std::move(detail)) {}
    WireErrorKind kind;
    std::string detail;
};

// All multi-byte integers on the wire are big-endian.
class ByteWriter {
  public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u16(std::uint16_t v);
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void i64(std::int64_t v);
    void f64(double v);
    void raw(std::span<const std::uint8_t> b);
    // 4-byte length prefix + raw bytes
    void blob(std::span<const std::uint8_t> b);
    void string(std::string_view s);

    const Bytes& bytes() const { return out_; }
    Bytes take() { return std::move(out_); }

  private:
    Bytes out_;
};

// Bounds-checked sequential reader; throws WireError(Truncated) past the end.
class ByteReader {
  public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8();
    std::uint16_t u16();
    std::uint32_t u32();
    std::uint64_t u64();
    std::int64_t i64();
    double f64();
    Bytes blob();
    std::string string(); // validates UTF-8
    void raw(std::span<std::uint8_t> into);

    std::size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }
    // Throws WireError(TrailingBytes) unless the input is fully consumed.
    void expect_done() const;

  private:
    void need(std::size_t n) const;
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

bool valid_utf8(std::string_view s);

std::string to_hex(std::span<const std::uint8_t> b);
Bytes from_hex(std::string_view s); // throws std::invalid_argument

} // namespace lgmvu
