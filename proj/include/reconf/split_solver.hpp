#pragma once

#include "reconf/model.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace reconf {

/// A TS instance on a split graph together with the four clique/independent
/// intersections of S and T. Non-owning: `instance` must outlive the view.
struct SplitInstanceView {
    const ReconfigInstance* instance = nullptr;
    SplitPartition partition;
    VertexSet source_clique;       // S ∩ K
    VertexSet source_independent;  // S ∩ I
    VertexSet target_clique;       // T ∩ K
    VertexSet target_independent;  // T ∩ I
};

SplitInstanceView make_split_view(const ReconfigInstance& inst, SplitPartition partition);

/// Constructive routing between two sets that each hold at most c-1 clique
/// tokens. Such sets are always mutually reachable in a connected split graph
/// when c >= 2; throws PreconditionError when the preconditions fail.
MoveSequence reachable_small(const SplitInstanceView& view);

/// Shortest rigid transformation (every move slides inside K, the independent
/// part stays S_I throughout), or nullopt when none exists. Requires S_I = T_I.
std::optional<MoveSequence> rigid_reach(const SplitInstanceView& view);

struct SolveOptions {
    /// Worker threads for the bridge-candidate scan. With more than one job
    /// the reported witness is still deterministic, but the whole rigid
    /// component is explored before scanning.
    int jobs = 1;
};

struct SolveStats {
    std::size_t components = 0;       // components that needed solving
    std::size_t rigid_states = 0;     // secondary-graph nodes visited, summed
    std::size_t candidate_pairs = 0;  // (T_{i-1}, T_i) pairs examined, summed
    /// Largest number of candidate pairs examined by a single enumeration.
    std::size_t max_candidates_per_enumeration = 0;
};

struct SolveResult {
    bool reachable = false;
    std::optional<MoveSequence> witness;
    SolveStats stats;
};

/// Decides c-colorable TS reconfiguration on split graphs for c >= 2 in time
/// n^{O(c)} and returns a witness for YES answers. Witnesses are not
/// necessarily shortest.
///
/// Throws RuleMismatch for non-TS rules, UnsupportedColorBound for c < 2,
/// NotSplit when the graph is not split, PreconditionError for malformed
/// instances.
SolveResult solve(const ReconfigInstance& inst, const SolveOptions& options = {});

struct IsolatedTokenCheck {
    /// False when some token sits on an isolated vertex outside S ∩ T.
    bool feasible = true;
    ReconfigInstance reduced;
    SplitPartition partition;
    /// original_ids[i] is the vertex of the input that became vertex i.
    std::vector<Vertex> original_ids;
};

/// Removes isolated vertices. A token on an isolated vertex can never move,
/// so such a vertex must lie in both S and T or the answer is NO.
IsolatedTokenCheck isolated_token_check(const ReconfigInstance& inst, const SplitPartition& partition);

}  // namespace reconf
