#include "rtcn/event_code.hpp"

#include <algorithm>

namespace rtcn {

int EventCode::reticulation_count() const {
  return static_cast<int>(std::count_if(events_.begin(), events_.end(),
                                        [](const Event& e) { return e.is_retic(); }));
}

std::vector<std::string> validate_code(const EventCode& code) {
  std::vector<std::string> violations;
  const int leaves = code.leaves();
  if (leaves < 2) {
    violations.push_back("leaf count must be at least 2, got " + std::to_string(leaves));
    return violations;
  }
  if (static_cast<int>(code.events().size()) != leaves - 1) {
    violations.push_back("expected " + std::to_string(leaves - 1) + " events, got " +
                         std::to_string(code.events().size()));
    return violations;
  }
  for (int i = 1; i < leaves; ++i) {
    const Event& e = code.event(i);
    const int width = leaves - i + 1;
    const std::string where = "event " + std::to_string(i) + ": ";
    if (!(1 <= e.c1 && e.c1 < e.c2 && e.c2 <= width)) {
      violations.push_back(where + "need 1 <= c1 < c2 <= " + std::to_string(width));
    }
    if (e.is_retic()) {
      if (e.h < 1 || e.h > width) {
        violations.push_back(where + "hybrid label out of range 1.." + std::to_string(width));
      } else if (e.h == e.c1 || e.h == e.c2) {
        violations.push_back(where + "hybrid label must differ from c1 and c2");
      }
    }
  }
  const Event& top = code.event(leaves - 1);
  if (top != Event::branch(1, 2)) {
    violations.push_back("event l-1 must be Branch{1,2}");
  }
  return violations;
}

void require_valid(const EventCode& code) {
  auto violations = validate_code(code);
  if (!violations.empty()) throw InvalidInput("invalid RTCN code: " + violations.front());
}

Profile profile(const EventCode& code) {
  Profile p;
  p.bits.reserve(code.events().size());
  int i = 1;
  for (const Event& e : code.events()) {
    p.bits.push_back(e.is_retic() ? 1 : 0);
    if (e.is_retic()) {
      p.retic_positions.push_back(i);
      ++p.retic_count;
    } else {
      ++p.branching_count;
    }
    ++i;
  }
  return p;
}

EventCode cherry() { return EventCode(2, {Event::branch(1, 2)}); }

}  // namespace rtcn
