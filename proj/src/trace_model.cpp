#include "byrdscope/trace_model.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace byrdscope::trace {

PortClass classify_port(Port p) noexcept {
  switch (p) {
    case Port::call:
    case Port::exit:
    case Port::fail:
    case Port::redo:
      return PortClass::external;
    case Port::disj:
    case Port::switch_:
    case Port::then:
    case Port::else_:
      return PortClass::internal;
  }
  return PortClass::internal;  // unreachable
}

std::string_view to_string(Port p) noexcept {
  switch (p) {
    case Port::call: return "call";
    case Port::exit: return "exit";
    case Port::fail: return "fail";
    case Port::redo: return "redo";
    case Port::disj: return "disj";
    case Port::switch_: return "switch";
    case Port::then: return "then";
    case Port::else_: return "else";
  }
  return "?";
}

std::string_view to_string(Determinism d) noexcept {
  switch (d) {
    case Determinism::det: return "det";
    case Determinism::semidet: return "semidet";
    case Determinism::nondet: return "nondet";
    case Determinism::multi: return "multi";
    case Determinism::cc_multi: return "cc_multi";
    case Determinism::cc_nondet: return "cc_nondet";
    case Determinism::failure: return "failure";
    case Determinism::unknown: return "unknown";
  }
  return "?";
}

std::optional<Port> parse_port(std::string_view s) noexcept {
  for (auto p : {Port::call, Port::exit, Port::fail, Port::redo, Port::disj, Port::switch_,
                 Port::then, Port::else_}) {
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

std::optional<Determinism> parse_determinism(std::string_view s) noexcept {
  for (auto d : {Determinism::det, Determinism::semidet, Determinism::nondet, Determinism::multi,
                 Determinism::cc_multi, Determinism::cc_nondet, Determinism::failure,
                 Determinism::unknown}) {
    if (s == to_string(d)) return d;
  }
  return std::nullopt;
}

std::string_view to_string(ProcType t) noexcept {
  return t == ProcType::predicate ? "predicate" : "function";
}

std::optional<ProcType> parse_proc_type(std::string_view s) noexcept {
  if (s == "predicate") return ProcType::predicate;
  if (s == "function") return ProcType::function;
  return std::nullopt;
}

std::string Predicate::canonical() const {
  return proc_name + "/" + std::to_string(arity);
}

Predicate query_root_predicate() {
  return Predicate{.module_name = "user", .proc_name = "<query>", .arity = 0};
}

std::string render_goal_path(const GoalPath& path) {
  std::string out = "[";
  bool first = true;
  for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it) {
    if (!first) out += ';';
    first = false;
    switch (it->kind) {
      case GoalStep::Kind::conj: out += 'c'; out += std::to_string(it->index); break;
      case GoalStep::Kind::disj: out += 'd'; out += std::to_string(it->index); break;
      case GoalStep::Kind::then: out += 't'; break;
      case GoalStep::Kind::else_: out += 'e'; break;
    }
  }
  out += ']';
  return out;
}

std::optional<GoalPath> parse_goal_path(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
  s.remove_prefix(1);
  s.remove_suffix(1);
  std::vector<GoalStep> outer_first;
  while (!s.empty()) {
    auto semi = s.find(';');
    std::string_view tok = s.substr(0, semi);
    s = semi == std::string_view::npos ? std::string_view{} : s.substr(semi + 1);
    if (tok.empty()) return std::nullopt;
    GoalStep step{};
    if (tok == "t") {
      step.kind = GoalStep::Kind::then;
    } else if (tok == "e") {
      step.kind = GoalStep::Kind::else_;
    } else if (tok.front() == 'c' || tok.front() == 'd') {
      step.kind = tok.front() == 'c' ? GoalStep::Kind::conj : GoalStep::Kind::disj;
      std::uint32_t idx = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || idx == 0) return std::nullopt;
      step.index = idx;
    } else {
      return std::nullopt;
    }
    outer_first.push_back(step);
  }
  GoalPath path;
  path.steps.assign(outer_first.rbegin(), outer_first.rend());
  return path;
}

namespace {

struct OpenCall {
  std::uint64_t goal_id;
  Predicate predicate;
  std::uint32_t depth;
};

}  // namespace

std::vector<TraceDiagnostic> check_trace(std::span<const Event> events) {
  std::vector<TraceDiagnostic> out;
  std::vector<OpenCall> stack;
  std::set<std::uint64_t> exited;
  std::uint64_t expected_chrono = 1;

  for (const Event& ev : events) {
    if (ev.chrono != expected_chrono) {
      out.push_back({ev.chrono, "chrono-consecutive",
                     "expected chrono " + std::to_string(expected_chrono) + ", got " +
                         std::to_string(ev.chrono)});
      expected_chrono = ev.chrono;  // resynchronize so one gap yields one diagnostic
    }
    ++expected_chrono;

    if (ev.is_external() && ev.goal_path.has_value()) {
      out.push_back({ev.chrono, "goal-path-presence",
                     "goal_path present on external event at port " +
                         std::string(to_string(ev.port))});
    }

    switch (ev.port) {
      case Port::call: {
        std::uint32_t parent_depth = stack.empty() ? 0 : stack.back().depth;
        if (ev.depth != parent_depth + 1) {
          out.push_back({ev.chrono, "call-depth",
                         "call depth " + std::to_string(ev.depth) + " but enclosing call has depth " +
                             std::to_string(parent_depth)});
        }
        stack.push_back({ev.goal_id, ev.predicate, ev.depth});
        break;
      }
      case Port::redo: {
        if (!exited.contains(ev.goal_id)) {
          out.push_back({ev.chrono, "redo-after-exit",
                         "redo of goal " + std::to_string(ev.goal_id) +
                             " which has not previously exited"});
        }
        stack.push_back({ev.goal_id, ev.predicate, ev.depth});
        break;
      }
      case Port::exit:
      case Port::fail: {
        if (stack.empty()) {
          out.push_back({ev.chrono, "stack-discipline",
                         std::string(to_string(ev.port)) + " of " + ev.predicate.canonical() +
                             " pops an empty call stack"});
          break;
        }
        const OpenCall& top = stack.back();
        if (top.predicate != ev.predicate || top.goal_id != ev.goal_id) {
          out.push_back({ev.chrono, "call-match",
                         std::string(to_string(ev.port)) + " of " + ev.predicate.canonical() +
                             " (goal " + std::to_string(ev.goal_id) +
                             ") does not match innermost call " + top.predicate.canonical() +
                             " (goal " + std::to_string(top.goal_id) + ")"});
        }
        if (ev.port == Port::exit) exited.insert(ev.goal_id);
        stack.pop_back();
        break;
      }
      default:
        break;  // internal events leave the simulated stack unchanged
    }
  }

  if (!stack.empty()) {
    out.push_back({events.empty() ? 0 : events.back().chrono, "stack-discipline",
                   std::to_string(stack.size()) + " call(s) still open at end of trace"});
  }
  return out;
}

}  // namespace byrdscope::trace
