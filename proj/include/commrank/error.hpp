#ifndef COMMRANK_ERROR_HPP
#define COMMRANK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace commrank {

/// Machine-checkable reason attached to every commrank::Error.
enum class Errc {
    // graph construction
    self_loop,
    duplicate_edge,
    unknown_endpoint,
    non_positive_weight,
    // community / metrics
    empty_graph,
    universe_mismatch,
    node_set_mismatch,
    too_large,
    both_empty,
    empty_universe,
    empty_block,
    // centrality
    zero_variance,
    disconnected,
    degenerate_reference,
    no_reachable_pairs,
    // generators
    too_many_edges,
    bad_k,
    bad_attach,
    not_enough_non_edges,
    bad_block_count,
    bad_fraction,
    bad_resolution,
    // io
    malformed,
    not_square,
    not_symmetric,
    nonzero_diagonal,
    negative_entry,
    missing_node,
    internal
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace commrank

#endif // COMMRANK_ERROR_HPP
