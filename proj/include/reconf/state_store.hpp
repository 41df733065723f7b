#pragma once

#include "reconf/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace reconf {

/// Fixed-width bit-vector encoding of vertex sets over [0, n).
inline std::size_t state_words(int n) { return n <= 0 ? 1 : (static_cast<std::size_t>(n) + 63) / 64; }
std::vector<std::uint64_t> encode_set(std::span<const Vertex> s, int n);
VertexSet decode_set(std::span<const std::uint64_t> key);

/// Interning table for fixed-width state keys: a flat key pool plus an
/// open-addressing index, so that each visited state costs `words` 64-bit
/// words plus one 32-bit slot. States are numbered in insertion order.
class StateStore {
public:
    explicit StateStore(std::size_t words);

    /// Index of `key`, inserting it if absent; `second` is true on insertion.
    std::pair<std::uint32_t, bool> insert(std::span<const std::uint64_t> key);
    bool contains(std::span<const std::uint64_t> key) const;
    std::span<const std::uint64_t> key(std::uint32_t index) const {
        return {pool_.data() + static_cast<std::size_t>(index) * words_, words_};
    }
    std::size_t size() const { return count_; }
    std::size_t words() const { return words_; }

private:
    static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

    std::size_t slot_of(std::span<const std::uint64_t> key) const;
    void grow();

    std::size_t words_;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> pool_;
    std::vector<std::uint32_t> table_;
};

}  // namespace reconf
