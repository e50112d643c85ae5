// Copyright 2026 lgmvu contributors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "lgmvu/digest.hpp"

#include <openssl/evp.h>

#include <stdexcept>

#include "lgmvu/bytes.hpp"

namespace lgmvu {

Digest sha256(std::span<const std::uint8_t> data) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size())
        throw std::runtime_error("sha256 failed");
    return out;
}

Digest sha256(std::string_view data) {
    return sha256(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

std::string digest_hex(const Digest& d) { return to_hex(d); }

std::string digest_hex16(std::string_view data) {
    return digest_hex(sha256(data)).substr(0, 16);
}

} // namespace lgmvu
