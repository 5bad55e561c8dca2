#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "wsg/graph.hpp"

namespace wsg {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };
  ParseError(Kind kind, int line, std::string message);
  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Line-oriented `.wsg` text:
///   rank N
///   palette C0 .. CN                    (omitted for 0..N)
///   vertex V
///     pre P color C edge E end S | pre P color C half H
///   chord V P.K P.K
///   edge E color C V:P V:P
///   half H color C V:P
///   discs N                             (omitted when 0)
/// `#` starts a comment.
StrandedGraph parse_wsg(const std::string& text);
std::string emit_wsg(const StrandedGraph& g);

nlohmann::json to_json(const StrandedGraph& g);
StrandedGraph from_json(const nlohmann::json& j);

/// Reads `.wsg` or JSON (detected by a leading '{').
StrandedGraph parse_any(const std::string& text);

StrandedGraph gen_dipole(int n);
StrandedGraph gen_chain(int n, int m);

/// Chain with a seeded number of dipole pairs, then random cuts and random
/// contractions. The pair count is drawn so the final edge count stays at
/// or below max_edges; throws BudgetExceeded when that is impossible.
StrandedGraph gen_random(int n, int num_cuts, int num_contractions, std::uint64_t seed, int max_edges = 16);

}  // namespace wsg
