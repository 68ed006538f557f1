#pragma once

#include <stdexcept>
#include <string>

namespace sgc {

// Every failure mode the library reports. The CLI maps these onto exit codes;
// tests assert on them directly.
enum class Errc {
    duplicate_edge,
    self_loop,
    vertex_out_of_range,
    domain_mismatch,
    not_a_cycle,
    underlying_graph_mismatch,
    not_regular,
    invalid_coloring,
    invalid_decomposition,
    not_a_path,
    anchor_not_in_pair,
    not_a_cactus,
    is_a_cycle,
    disconnected,
    not_a_wheel,
    not_a_necklace,
    not_complete_bipartite,
    equal_parts,
    budget_exceeded,
    index_out_of_range,
    invalid_spec,
    syntax_error,
    header_mismatch,
    bad_sign,
    invalid_argument,
    internal_error,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

const char* errc_name(Errc code);

}  // namespace sgc
