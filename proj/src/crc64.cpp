// Copyright (c) 2026 evoprune contributors
// SPDX-License-Identifier: Apache-2.0

#include "evoprune/crc64.hpp"

#include <array>

namespace evoprune {

namespace {

constexpr std::uint64_t kPoly = 0xC96C5795D7870F42ULL;  // reflected ECMA-182

std::array<std::uint64_t, 256> make_table() {
    std::array<std::uint64_t, 256> table{};
    for (std::uint64_t i = 0; i < 256; ++i) {
        std::uint64_t crc = i;
        for (int bit = 0; bit < 8; ++bit) {
            crc = (crc & 1) ? (crc >> 1) ^ kPoly : crc >> 1;
        }
        table[static_cast<std::size_t>(i)] = crc;
    }
    return table;
}

const std::array<std::uint64_t, 256> kTable = make_table();

}  // namespace

std::uint64_t crc64(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t crc = ~seed;
    for (std::size_t i = 0; i < len; ++i) {
        crc = kTable[(crc ^ bytes[i]) & 0xFF] ^ (crc >> 8);
    }
    return ~crc;
}

}  // namespace evoprune
