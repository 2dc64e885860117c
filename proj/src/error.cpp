#include "commrank/error.hpp"

namespace commrank {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::unknown_endpoint: return "UnknownEndpoint";
    case Errc::non_positive_weight: return "NonPositiveWeight";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::universe_mismatch: return "UniverseMismatch";
    case Errc::node_set_mismatch: return "NodeSetMismatch";
    case Errc::too_large: return "TooLarge";
    case Errc::both_empty: return "BothEmpty";
    case Errc::empty_universe: return "EmptyUniverse";
    case Errc::empty_block: return "EmptyBlock";
    case Errc::zero_variance: return "ZeroVariance";
    case Errc::disconnected: return "Disconnected";
    case Errc::degenerate_reference: return "DegenerateReference";
    case Errc::no_reachable_pairs: return "NoReachablePairs";
    case Errc::too_many_edges: return "TooManyEdges";
    case Errc::bad_k: return "BadK";
    case Errc::bad_attach: return "BadAttach";
    case Errc::not_enough_non_edges: return "NotEnoughNonEdges";
    case Errc::bad_block_count: return "BadBlockCount";
    case Errc::bad_fraction: return "BadFraction";
    case Errc::bad_resolution: return "BadResolution";
    case Errc::malformed: return "Malformed";
    case Errc::not_square: return "NotSquare";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::nonzero_diagonal: return "NonzeroDiagonal";
    case Errc::negative_entry: return "NegativeEntry";
    case Errc::missing_node: return "MissingNode";
    case Errc::internal: return "Internal";
    }
    return "Unknown";
}

} // namespace commrank
