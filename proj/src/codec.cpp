#include "rtcn/codec.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace rtcn {

ParseError::ParseError(const std::string& what, std::size_t position)
    : InvalidInput("parse error at column " + std::to_string(position + 1) + ": " + what),
      position_(position) {}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError("expected " + expected + ", found " + found, base_ + pos_);
  }

  void skip_blank() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_blank();
    return pos_ == text_.size();
  }

  char peek() {
    skip_blank();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  bool accept(std::string_view token) {
    skip_blank();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("'" + std::string(token) + "'");
  }

  int integer() {
    if (!peek_digit()) fail("a number");
    long long value = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw ParseError("number too large", base_ + start);
      }
      ++pos_;
    }
    return static_cast<int>(value);
  }

  void finish() {
    if (!at_end()) fail("end of input");
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

template <class Validator, class T>
void check(const Validator& validate, const T& value, const char* what) {
  if (auto v = validate(value); !v.empty()) throw InvalidInput(std::string("invalid ") + what + ": " + v.front());
}

}  // namespace

EventCode parse_rtcn(std::string_view text) {
  Cursor in(text);
  in.expect("rtcn");
  const int l = in.integer();
  in.expect(":");
  std::vector<Event> events;
  do {
    if (in.accept("B")) {
      const int c1 = in.integer();
      const int c2 = in.integer();
      events.push_back(Event::branch(c1, c2));
    } else if (in.accept("R")) {
      const int c1 = in.integer();
      const int c2 = in.integer();
      const int h = in.integer();
      events.push_back(Event::retic(c1, c2, h));
    } else {
      in.fail("'B' or 'R'");
    }
  } while (in.accept(";"));
  in.finish();
  EventCode code(l, std::move(events));
  check(validate_code, code, "network");
  return code;
}

std::string format_rtcn(const EventCode& code) {
  std::string out = "rtcn " + std::to_string(code.leaves()) + ":";
  bool first = true;
  for (const Event& e : code.events()) {
    out += first ? " " : "; ";
    first = false;
    out += e.is_branch() ? "B " : "R ";
    out += std::to_string(e.c1) + " " + std::to_string(e.c2);
    if (e.is_retic()) out += " " + std::to_string(e.h);
  }
  return out;
}

EventCode parse_ranked_tree(std::string_view text) {
  EventCode code = parse_rtcn(text);
  if (!code.is_ranked_tree()) throw InvalidInput("expected a ranked tree, got a network with reticulations");
  return code;
}

BoatSequence parse_boat(std::string_view text) {
  Cursor in(text);
  in.expect("boat");
  BoatSequence boat;
  boat.people = in.integer();
  in.expect(":");
  in.expect("send");
  do {
    const int a = in.integer();
    in.expect(",");
    const int b = in.integer();
    boat.sends.emplace_back(a, b);
  } while (in.peek_digit());
  in.expect(";");
  in.expect("back");
  while (in.peek_digit()) boat.returns.push_back(in.integer());
  in.finish();
  check(validate_boat, boat, "boat sequence");
  return boat;
}

std::string format_boat(const BoatSequence& boat) {
  std::string out = "boat " + std::to_string(boat.people) + ": send";
  for (const auto& [a, b] : boat.sends) out += " " + std::to_string(a) + "," + std::to_string(b);
  out += " ; back";
  for (int x : boat.returns) out += " " + std::to_string(x);
  return out;
}

Permutation parse_perm(std::string_view text) {
  Cursor in(text);
  in.expect("perm");
  const int n = in.integer();
  in.expect(":");
  std::vector<int> image;
  while (in.peek_digit()) image.push_back(in.integer());
  in.finish();
  if (n < 1) throw InvalidInput("permutation size must be positive");
  if (static_cast<int>(image.size()) != n) {
    throw InvalidInput("permutation of size " + std::to_string(n) + " needs " + std::to_string(n) + " entries");
  }
  return Permutation(std::move(image));
}

std::string format_perm(const Permutation& sigma) {
  std::string out = "perm " + std::to_string(sigma.size()) + ":";
  for (int v : sigma.image()) out += " " + std::to_string(v);
  return out;
}

PhyloTree parse_newick(std::string_view text) {
  Cursor in(text);
  // Internal nodes get temporary ids in order of appearance; leaves are kept
  // apart until the leaf count is known.
  std::vector<int> internal_parent;
  std::vector<int> internal_kids;
  std::vector<std::pair<int, int>> leaf_parent;  // (label, internal parent)
  std::vector<int> open;

  while (true) {
    // Start of a subtree.
    const int up = open.empty() ? -1 : open.back();
    if (up >= 0) ++internal_kids[static_cast<std::size_t>(up)];
    if (in.accept("(")) {
      internal_parent.push_back(up);
      internal_kids.push_back(0);
      open.push_back(static_cast<int>(internal_parent.size()) - 1);
      continue;
    }
    leaf_parent.emplace_back(in.integer(), up);
    // Close every subtree that is now complete.
    while (!open.empty() && internal_kids[static_cast<std::size_t>(open.back())] == 2) {
      in.expect(")");
      open.pop_back();
    }
    if (open.empty()) break;
    in.expect(",");
  }
  in.expect(";");
  in.finish();

  const int l = static_cast<int>(leaf_parent.size());
  if (l < 2) throw InvalidInput("phylogenetic tree needs at least 2 leaves");
  std::vector<int> parent(static_cast<std::size_t>(2 * l - 1), -2);
  for (const auto& [label, up] : leaf_parent) {
    if (label < 1 || label > l) {
      throw InvalidInput("leaf label " + std::to_string(label) + " outside 1.." + std::to_string(l));
    }
    int& slot = parent[static_cast<std::size_t>(label - 1)];
    if (slot != -2) throw InvalidInput("leaf label " + std::to_string(label) + " repeated");
    slot = up < 0 ? -1 : l + up;
  }
  for (std::size_t j = 0; j < internal_parent.size(); ++j) {
    const int up = internal_parent[j];
    parent[static_cast<std::size_t>(l) + j] = up < 0 ? -1 : l + up;
  }
  return PhyloTree::from_parents(l, parent);
}

std::string format_newick(const PhyloTree& tree) {
  std::string out;
  auto emit = [&](auto&& self, int v) -> void {
    if (tree.is_leaf(v)) {
      out += std::to_string(v + 1);
      return;
    }
    const auto [a, b] = tree.children(v);
    out += '(';
    self(self, a);
    out += ',';
    self(self, b);
    out += ')';
  };
  emit(emit, tree.root());
  out += ';';
  return out;
}

DecisionVector parse_decisions(std::string_view text) {
  Cursor in(text);
  in.expect("dec");
  DecisionVector d;
  d.leaves = in.integer();
  in.expect(":");
  while (!in.at_end()) {
    if (in.accept("K")) {
      d.entries.push_back(Decision::keep_event());
      continue;
    }
    if (!in.accept("(")) in.fail("'K' or '('");
    const int i = in.integer();
    in.expect(",");
    Side side = Side::Left;
    if (in.accept("R")) {
      side = Side::Right;
    } else if (!in.accept("L")) {
      in.fail("'L' or 'R'");
    }
    in.expect(")");
    d.entries.push_back(Decision::retic(i, side));
  }
  check(validate_decisions, d, "decision vector");
  return d;
}

std::string format_decisions(const DecisionVector& d) {
  std::string out = "dec " + std::to_string(d.leaves) + ":";
  for (const Decision& e : d.entries) {
    if (e.keep) {
      out += " K";
    } else {
      out += " (" + std::to_string(e.lineage) + (e.side == Side::Left ? ",L)" : ",R)");
    }
  }
  return out;
}

TreePerm parse_treeperm(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '|' between tree and permutation", text.size());
  EventCode tree = parse_ranked_tree(text.substr(0, bar));
  Permutation sigma;
  try {
    sigma = parse_perm(text.substr(bar + 1));
  } catch (const ParseError& e) {
    Cursor(text, bar + 1 + e.position()).fail("a permutation");
  }
  if (sigma.size() != tree.leaves() - 1) {
    throw InvalidInput("permutation must act on 1.." + std::to_string(tree.leaves() - 1));
  }
  return TreePerm{std::move(tree), std::move(sigma)};
}

std::string format_treeperm(const TreePerm& tp) {
  return format_rtcn(tp.tree) + " | " + format_perm(tp.sigma);
}

TextObject parse_object(std::string_view text) {
  Cursor in(text);
  if (in.peek() == '(') return parse_newick(text);
  if (text.find('|') != std::string_view::npos) return parse_treeperm(text);
  if (in.accept("rtcn")) return parse_rtcn(text);
  if (in.accept("boat")) return parse_boat(text);
  if (in.accept("perm")) return parse_perm(text);
  if (in.accept("dec")) return parse_decisions(text);
  in.fail("'rtcn', 'boat', 'perm', 'dec' or a Newick tree");
}

std::string format_object(const TextObject& object) {
  struct Formatter {
    std::string operator()(const EventCode& c) const { return format_rtcn(c); }
    std::string operator()(const BoatSequence& b) const { return format_boat(b); }
    std::string operator()(const Permutation& p) const { return format_perm(p); }
    std::string operator()(const PhyloTree& t) const { return format_newick(t); }
    std::string operator()(const DecisionVector& d) const { return format_decisions(d); }
    std::string operator()(const TreePerm& tp) const { return format_treeperm(tp); }
  };
  return std::visit(Formatter{}, object);
}

}  // namespace rtcn
