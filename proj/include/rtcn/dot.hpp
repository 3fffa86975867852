#pragma once

// Graphviz output. Node names depend only on the object, never on memory
// layout, so repeated runs produce identical text.

#include <string>

#include "rtcn/codec.hpp"
#include "rtcn/network_dag.hpp"

namespace rtcn {

// Root `root`, leaves `L<label>`, events `t<rank>`; a reticulation event at
// rank k is drawn as tree nodes `t<k>a`, `t<k>b` and a filled box `h<k>`.
std::string export_dot(const EventCode& code);
// Renders the network's code, so isomorphic DAGs give identical output.
std::string export_dot(const NetworkDag& dag);
std::string export_dot(const PhyloTree& tree);
std::string export_dot(const LabeledHistoryTree& tau);

// Boats and tree/permutation pairs are drawn as their networks, decision
// vectors as their labeled history tree, permutations as their cycle graph.
std::string export_dot(const TextObject& object);

}  // namespace rtcn
