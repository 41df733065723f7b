#include "reconf/state_store.hpp"

#include "reconf/errors.hpp"

#include <algorithm>
#include <bit>

namespace reconf {

std::vector<std::uint64_t> encode_set(std::span<const Vertex> s, int n) {
    std::vector<std::uint64_t> key(state_words(n), 0);
    for (Vertex v : s) key[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    return key;
}

VertexSet decode_set(std::span<const std::uint64_t> key) {
    VertexSet s;
    for (std::size_t w = 0; w < key.size(); ++w) {
        std::uint64_t bits = key[w];
        while (bits != 0) {
            s.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return s;
}

namespace {

std::size_t hash_key(std::span<const std::uint64_t> key) {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (std::uint64_t w : key) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0xBF58476D1CE4E5B9ull;
        h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace

StateStore::StateStore(std::size_t words) : words_(words == 0 ? 1 : words), table_(1024, kEmpty) {}

std::size_t StateStore::slot_of(std::span<const std::uint64_t> key) const {
    const std::size_t mask = table_.size() - 1;
    std::size_t slot = hash_key(key) & mask;
    while (table_[slot] != kEmpty) {
        auto stored = this->key(table_[slot]);
        if (std::equal(stored.begin(), stored.end(), key.begin())) return slot;
        slot = (slot + 1) & mask;
    }
    return slot;
}

void StateStore::grow() {
    std::vector<std::uint32_t> old(table_.size() * 2, kEmpty);
    old.swap(table_);
    const std::size_t mask = table_.size() - 1;
    for (std::uint32_t idx : old) {
        if (idx == kEmpty) continue;
        std::size_t slot = hash_key(key(idx)) & mask;
        while (table_[slot] != kEmpty) slot = (slot + 1) & mask;
        table_[slot] = idx;
    }
}

std::pair<std::uint32_t, bool> StateStore::insert(std::span<const std::uint64_t> key) {
    if (key.size() != words_) throw PreconditionError("state key width mismatch");
    std::size_t slot = slot_of(key);
    if (table_[slot] != kEmpty) return {table_[slot], false};
    if (count_ >= kEmpty - 1) throw ResourceLimit("state index exhausted");
    auto idx = static_cast<std::uint32_t>(count_++);
    pool_.insert(pool_.end(), key.begin(), key.end());
    table_[slot] = idx;
    if (count_ * 2 > table_.size()) grow();
    return {idx, true};
}

bool StateStore::contains(std::span<const std::uint64_t> key) const {
    return table_[slot_of(key)] != kEmpty;
}

}  // namespace reconf
