// Copyright 2026 lgmvu contributors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace lgmvu {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);
Digest sha256(std::string_view data);

std::string digest_hex(const Digest& d);
// First 16 hex chars, used for compact state digests in traces.
std::string digest_hex16(std::string_view data);

} // namespace lgmvu
