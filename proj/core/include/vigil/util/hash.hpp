#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace vigil {

// FNV-1a, 64 bit. Alert ids, pseudonyms, config hashes and replay digests all
// need a hash that is stable across platforms and runs; std::hash gives no
// such guarantee.
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

constexpr std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = kFnvOffset) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

std::string to_hex(std::uint64_t value);

// 16-char lowercase hex digest of the FNV-1a hash.
std::string stable_digest(std::string_view data);

}  // namespace vigil
