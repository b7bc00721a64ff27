// AST and recursive-descent parser for the mini logic language: facts,
// rules, conjunction, disjunction, if-then-else, lists, integers, is/2
// arithmetic, comparisons, and determinism pragmas.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "byrdscope/trace_model.hpp"

namespace byrdscope::lang {

using VarId = std::uint32_t;

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term: variable, atom, integer, or compound. List syntax is
// desugared to '.'/2 chains ending in the atom [].
class Term {
 public:
  enum class Kind : std::uint8_t { variable, atom, integer, compound };

  static TermPtr make_var(VarId id, std::string name);
  static TermPtr make_atom(std::string name);
  static TermPtr make_int(std::int64_t value);
  static TermPtr make_compound(std::string functor, std::vector<TermPtr> args);
  // Builds a proper list from items (tail defaults to []).
  static TermPtr make_list(const std::vector<TermPtr>& items, TermPtr tail = nullptr);

  Kind kind() const noexcept { return kind_; }
  VarId var() const noexcept { return var_; }
  // Variable display name, atom name, or compound functor.
  const std::string& name() const noexcept { return name_; }
  std::int64_t value() const noexcept { return value_; }
  const std::vector<TermPtr>& args() const noexcept { return args_; }

  bool is_nil() const noexcept { return kind_ == Kind::atom && name_ == "[]"; }
  bool is_cons() const noexcept { return kind_ == Kind::compound && name_ == "." && args_.size() == 2; }

 private:
  Kind kind_ = Kind::atom;
  VarId var_ = 0;
  std::string name_;
  std::int64_t value_ = 0;
  std::vector<TermPtr> args_;
};

bool equal_terms(const TermPtr& a, const TermPtr& b);

// Canonical text of a term: lists re-sugared, arithmetic operators
// rendered infix, quoted atoms escaped. Round-trips through the parser.
std::string render_term(const TermPtr& t);

struct PredId {
  std::string name;
  std::uint32_t arity = 0;

  std::string canonical() const { return name + "/" + std::to_string(arity); }
  auto operator<=>(const PredId&) const = default;
};

struct Goal;
using GoalPtr = std::shared_ptr<const Goal>;

// Clause-body goal. conj/disj member lists are non-empty; nested
// conjunctions are flattened at parse time.
struct Goal {
  enum class Kind : std::uint8_t { call, unify, builtin, conj, disj, ite, truth, failure };

  Kind kind = Kind::truth;
  PredId pred;                    // call and builtin
  std::vector<TermPtr> args;      // call/builtin arguments; unify holds exactly two
  std::vector<GoalPtr> members;   // conj elements or disj branches
  GoalPtr cond, then_branch, else_branch;

  static GoalPtr make_call(PredId pred, std::vector<TermPtr> args);
  static GoalPtr make_unify(TermPtr lhs, TermPtr rhs);
  static GoalPtr make_builtin(PredId pred, std::vector<TermPtr> args);
  static GoalPtr make_conj(std::vector<GoalPtr> members);
  static GoalPtr make_disj(std::vector<GoalPtr> branches);
  static GoalPtr make_ite(GoalPtr cond, GoalPtr then_branch, GoalPtr else_branch);
  static GoalPtr make_true();
  static GoalPtr make_fail();
};

struct Clause {
  PredId head;
  std::vector<TermPtr> head_args;
  GoalPtr body;          // facts get body `true`
  std::uint32_t num_vars = 0;  // variable slots used by head+body
};

bool equal_goals(const GoalPtr& a, const GoalPtr& b);
bool equal_clauses(const Clause& a, const Clause& b);

class Program {
 public:
  void add_clause(Clause clause);
  // Throws ParseError-free std::invalid_argument on duplicate pragma.
  void add_pragma(const PredId& pred, trace::Determinism det);

  const std::vector<Clause>* find(const PredId& pred) const;
  bool defines(const PredId& pred) const { return find(pred) != nullptr; }
  trace::Determinism determinism_of(const PredId& pred) const;

  // Predicates in first-definition order.
  const std::vector<PredId>& predicates() const noexcept { return order_; }
  const std::map<std::string, trace::Determinism>& pragmas() const noexcept { return pragmas_; }

  friend bool operator==(const Program& a, const Program& b);

 private:
  std::vector<PredId> order_;
  std::map<std::string, std::vector<Clause>> clauses_;  // keyed by canonical name/arity
  std::map<std::string, trace::Determinism> pragmas_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Parses a whole program: facts, rules, and ":- det(name/arity, marker)."
// pragmas. '%' starts a line comment.
Program parse_program(std::string_view source);

// Parses a single query goal terminated by '.'.
GoalPtr parse_query(std::string_view source);

std::string render_goal(const GoalPtr& g);
std::string render_clause(const Clause& c);
std::string render_program(const Program& p);

// Variable occurrences of a goal in first-appearance order (for query
// solution reporting). Each id appears once, with its display name.
std::vector<std::pair<VarId, std::string>> goal_variables(const GoalPtr& g);

// Largest variable slot + 1 used anywhere in the goal.
std::uint32_t goal_num_vars(const GoalPtr& g);

}  // namespace byrdscope::lang
