#pragma once

// Canonical one-line text forms.
//
//   rtcn 4: R 1 3 2; B 1 2; B 1 2        events bottom-up
//   boat 3: send 1,2 1,3 ; back 1        "back" list empty for two people
//   perm 5: 5 2 4 1 3                    sigma(1) .. sigma(n)
//   ((1,3),2);                           Newick, children by smallest leaf
//   dec 4: K (1,L) K                     decisions for ranks 1..l-1
//   rtcn 3: B 1 2; B 1 2 | perm 2: 2 1   a ranked tree with a permutation
//
// Parsers accept any amount of blank space between tokens; formatters emit
// single spaces. Syntax errors raise ParseError, which records the offset
// of the offending character; well-formed text describing an invalid object
// raises plain InvalidInput.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "rtcn/boat_sequence.hpp"
#include "rtcn/containment.hpp"
#include "rtcn/event_code.hpp"
#include "rtcn/permutation.hpp"
#include "rtcn/phylo_tree.hpp"
#include "rtcn/treeperm.hpp"

namespace rtcn {

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

EventCode parse_rtcn(std::string_view text);
std::string format_rtcn(const EventCode& code);
// As parse_rtcn, additionally rejecting reticulation events.
EventCode parse_ranked_tree(std::string_view text);

BoatSequence parse_boat(std::string_view text);
std::string format_boat(const BoatSequence& boat);

Permutation parse_perm(std::string_view text);
std::string format_perm(const Permutation& sigma);

PhyloTree parse_newick(std::string_view text);
std::string format_newick(const PhyloTree& tree);

DecisionVector parse_decisions(std::string_view text);
std::string format_decisions(const DecisionVector& d);

TreePerm parse_treeperm(std::string_view text);
std::string format_treeperm(const TreePerm& tp);

using TextObject = std::variant<EventCode, BoatSequence, Permutation, PhyloTree, DecisionVector, TreePerm>;

// Dispatches on the leading keyword (or '(' for Newick).
TextObject parse_object(std::string_view text);
std::string format_object(const TextObject& object);

}  // namespace rtcn
