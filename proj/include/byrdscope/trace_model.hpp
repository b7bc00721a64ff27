// Event schema for the Byrd-box trace model: ports, determinism markers,
// predicate identifiers, goal paths, events, and a trace well-formedness
// checker.

#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace byrdscope::trace {

// The four traditional Byrd ports plus the internal ports fired when
// execution enters a branch of a disjunction or if-then-else. `switch_`
// is kept for trace ingestion; this engine never emits it.
enum class Port : std::uint8_t { call, exit, fail, redo, disj, switch_, then, else_ };

enum class PortClass : std::uint8_t { external, internal };

PortClass classify_port(Port p) noexcept;

// Number of potential solutions of a procedure. `unknown` is the default
// when a program carries no determinism pragma for the predicate.
enum class Determinism : std::uint8_t {
  det,
  semidet,
  nondet,
  multi,
  cc_multi,
  cc_nondet,
  failure,
  unknown,
};

std::string_view to_string(Port p) noexcept;
std::string_view to_string(Determinism d) noexcept;
std::optional<Port> parse_port(std::string_view s) noexcept;
std::optional<Determinism> parse_determinism(std::string_view s) noexcept;

enum class ProcType : std::uint8_t { predicate, function };

std::string_view to_string(ProcType t) noexcept;
std::optional<ProcType> parse_proc_type(std::string_view s) noexcept;

struct Predicate {
  std::string module_name = "user";
  std::string proc_name;
  std::uint32_t arity = 0;
  std::uint32_t mode_num = 0;  // always 0 here: the language is unmoded
  ProcType proc_type = ProcType::predicate;

  // Canonical "name/arity" rendering, e.g. "qperm/2".
  std::string canonical() const;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

// The synthetic root box under which a query runs. It emits no events
// itself but seeds monitor call stacks and previous-predicate registers.
Predicate query_root_predicate();

struct GoalStep {
  enum class Kind : std::uint8_t { conj, disj, then, else_ };
  Kind kind;
  std::uint32_t index = 0;  // 1-based, meaningful for conj/disj only

  friend bool operator==(const GoalStep&, const GoalStep&) = default;
};

// Syntactic position of an internal event within the enclosing clause
// body. Steps are stored innermost construct first; rendering walks
// outward-in, producing e.g. "[c3;e;d1]" for an event in the first
// branch of a disjunction inside an else branch inside the third
// conjunct.
struct GoalPath {
  std::vector<GoalStep> steps;

  friend bool operator==(const GoalPath&, const GoalPath&) = default;
};

std::string render_goal_path(const GoalPath& path);
std::optional<GoalPath> parse_goal_path(std::string_view s);

namespace detail {

// Live-instance counter for Event. The streaming tests use it to verify
// that run_collect retains O(1) events at a time while the materialized
// fold retains the whole trace.
class LiveCount {
 public:
  LiveCount() noexcept { ++count_; }
  LiveCount(const LiveCount&) noexcept { ++count_; }
  LiveCount(LiveCount&&) noexcept { ++count_; }
  LiveCount& operator=(const LiveCount&) noexcept { return *this; }
  LiveCount& operator=(LiveCount&&) noexcept { return *this; }
  ~LiveCount() { --count_; }

  static long live() noexcept { return count_.load(std::memory_order_relaxed); }

 private:
  static inline std::atomic<long> count_{0};
};

}  // namespace detail

// One trace event. Attribute numbering follows the classic tracer layout:
// chrono (1), goal_id (2), depth (3), port (4), determinism (5),
// predicate (6), args (7), local_vars (8), goal_path (9), ancestors (10).
// local_vars and ancestors are schema slots only; nothing populates them.
struct Event : private detail::LiveCount {
  std::uint64_t chrono = 0;
  std::uint64_t goal_id = 0;
  std::uint32_t depth = 0;
  Port port = Port::call;
  Determinism determinism = Determinism::unknown;
  Predicate predicate;
  std::optional<std::vector<std::string>> args;
  std::optional<std::vector<std::string>> local_vars;
  std::optional<GoalPath> goal_path;
  std::optional<std::vector<std::string>> ancestors;

  bool is_external() const noexcept { return classify_port(port) == PortClass::external; }

  static long live_instances() noexcept { return detail::LiveCount::live(); }

  friend bool operator==(const Event& a, const Event& b) {
    return a.chrono == b.chrono && a.goal_id == b.goal_id && a.depth == b.depth &&
           a.port == b.port && a.determinism == b.determinism && a.predicate == b.predicate &&
           a.args == b.args && a.local_vars == b.local_vars && a.goal_path == b.goal_path &&
           a.ancestors == b.ancestors;
  }
};

struct TraceDiagnostic {
  std::uint64_t chrono = 0;
  std::string rule;
  std::string description;
};

// Checks Byrd-box discipline over a complete trace: consecutive chrono
// numbering from 1, balanced call-stack simulation, exit/fail matching
// the innermost open call, redo only after an exit, call depth one
// deeper than the enclosing call, and goal_path presence only on
// internal events. Returns one diagnostic per violation; empty means
// well-formed.
std::vector<TraceDiagnostic> check_trace(std::span<const Event> events);

}  // namespace byrdscope::trace
