#pragma once

#include <stdexcept>
#include <string>

namespace pathdec {

enum class errc {
  endpoint_out_of_range,
  self_loop,
  empty_factor,
  edge_not_present,
  invalid_params,
  generation_failed,
  parse_error,
  host_mismatch,
  trivial_path,
  budget_exhausted,
  not_odd_graph,
  not_connected,
  edgeless_graph,
  invariant_violation,
  not_a_tree,
  bad_order,
  too_small,
  not_even_graph,
  not_tight_decomposition,
  odd_vertex_not_an_end,
  correspondence_mismatch,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace pathdec
