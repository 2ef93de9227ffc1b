#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kgsynth {

// 64-bit FNV-1a. Used for deterministic record ids and for the hashed
// bag-of-words embedder; must stay stable across platforms and runs.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t value);

// Record ids are content hashes so that rebuilding from identical inputs
// yields byte-identical stores.
std::string chunk_id_for(const std::string& doc_id, int index);
std::string entity_id_for(const std::string& normalized_name);
std::string proposition_id_for(const std::string& chunk_id, int ordinal);
std::string quadruplet_id_for(const std::string& chunk_id, int ordinal);

} // namespace kgsynth
