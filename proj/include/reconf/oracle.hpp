#pragma once

#include "reconf/model.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace reconf {

/// Extra restriction on the states a search may visit. Receives a canonical
/// (sorted) vertex set.
using StateFilter = std::function<bool(std::span<const Vertex>)>;

struct OracleOptions {
    std::size_t max_states = 5'000'000;
};

struct OracleResult {
    bool reachable = false;
    std::optional<MoveSequence> witness;  // shortest, present iff reachable
    std::size_t states_explored = 0;
};

/// Breadth-first search from S over rule-legal, c-colorable, filter-accepted
/// states. Throws ResourceLimit once more than `max_states` states are
/// stored, PreconditionError if the instance or the filter rejects S or T.
OracleResult reconfig_oracle(const ReconfigInstance& inst, const StateFilter& filter = {},
                             const OracleOptions& options = {});

/// Every state reachable from inst.source (the target is ignored), in BFS
/// order. Used to answer many targets with one search.
std::vector<VertexSet> reconfig_reachable_states(const ReconfigInstance& inst, const StateFilter& filter = {},
                                                 const OracleOptions& options = {});

struct NclOracleOptions {
    int max_edges = 24;
    std::size_t max_states = std::size_t{1} << 24;
};

struct NclOracleResult {
    bool reachable = false;
    std::optional<std::vector<Flip>> witness;
    std::size_t states_explored = 0;
};

/// BFS over valid orientations under single-edge flips.
NclOracleResult ncl_oracle(const NclInstance& ncl, const NclOracleOptions& options = {});

/// BFS over dominating sets: of size at most k under TAR, of size |S| under TJ.
OracleResult ds_oracle(const DsInstance& ds, const OracleOptions& options = {});

/// Rejects any state holding both vertices of one of `pairs`.
StateFilter no_both_filter(std::vector<std::pair<Vertex, Vertex>> pairs);

}  // namespace reconf
