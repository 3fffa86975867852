#pragma once

// Event-sequence encoding of a ranked tree-child network.
//
// A network on `leaves` leaves has leaves-1 events. Events are indexed
// bottom-up, i = 1..leaves-1, so event 1 sits directly above the leaves and
// event leaves-1 is the first (topmost) branching below the root edge. The
// top-down rank of event i is leaves - i.
//
// Just below event i there are leaves-i+1 lineages, labeled 1..leaves-i+1
// from left to right; just below event 1 these labels are the leaf labels.
// Labels above an event are derived from the labels below it:
//   * Branch{c1,c2}: lineages c1 < c2 merge; the parent takes label c1 and
//     every other lineage x becomes x - [x > c2].
//   * Retic{c1,c2;h}: c1 < c2 are the two non-hybrid children, h the hybrid
//     child. The parent of c1 (resp. c2) takes label c1 - [h < c1]
//     (resp. c2 - [h < c2]) and every other lineage x becomes x - [x > h].

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtcn {

// Thrown when an object violates the invariants an operation requires.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class EventKind : std::uint8_t { Branch, Retic };

struct Event {
  EventKind kind = EventKind::Branch;
  int c1 = 1;
  int c2 = 2;
  int h = 0;  // hybrid child, Retic only

  static Event branch(int c1, int c2) { return {EventKind::Branch, c1, c2, 0}; }
  static Event retic(int c1, int c2, int h) { return {EventKind::Retic, c1, c2, h}; }

  bool is_branch() const { return kind == EventKind::Branch; }
  bool is_retic() const { return kind == EventKind::Retic; }

  // Branch < Retic, then (c1, c2, h).
  auto operator<=>(const Event&) const = default;
};

class EventCode {
 public:
  EventCode() = default;
  // No validation here; see validate_code / require_valid.
  EventCode(int leaves, std::vector<Event> events)
      : leaves_(leaves), events_(std::move(events)) {}

  int leaves() const { return leaves_; }
  std::span<const Event> events() const { return events_; }

  // Bottom-up index, 1-based.
  const Event& event(int i) const { return events_.at(static_cast<std::size_t>(i - 1)); }
  // Top-down rank, 1-based.
  const Event& at_rank(int k) const { return event(leaves_ - k); }

  int reticulation_count() const;
  bool is_ranked_tree() const { return reticulation_count() == 0; }

  // Lexicographic: leaf count, then events bottom-up.
  auto operator<=>(const EventCode&) const = default;

 private:
  int leaves_ = 0;
  std::vector<Event> events_;
};

// Empty iff the code is a valid RTCN encoding.
std::vector<std::string> validate_code(const EventCode& code);
// Throws InvalidInput carrying the first violation.
void require_valid(const EventCode& code);

struct Profile {
  std::vector<int> bits;                // q_1..q_{l-1}; 1 marks a reticulation
  std::vector<int> retic_positions;     // indices i with q_i = 1, increasing
  int branching_count = 0;
  int retic_count = 0;
};

Profile profile(const EventCode& code);

// The unique network on two leaves.
EventCode cherry();

}  // namespace rtcn
