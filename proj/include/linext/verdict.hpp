#pragma once

#include <string>

#include <json.hpp>

#include "linext/rational.hpp"

namespace linext::ineq {

enum class Status { Holds, Equality, Fails, Vacuous };

std::string to_string(Status s);

/// Outcome of one exact inequality instance. lhs/rhs are the two sides in
/// the orientation given by `relation`; `witness` records the instance
/// (poset or shape plus parameter bindings) so a result can be replayed.
struct Verdict {
  std::string check_id;
  Rat lhs, rhs;
  std::string relation;  // "<=", ">=", "sandwich", "eq"
  Status status = Status::Holds;
  nlohmann::json witness;

  bool failed() const { return status == Status::Fails; }
  nlohmann::json to_json() const;
};

/// Status from comparing lhs vs rhs under relation "<=" or ">=".
Status status_of(const Rat& lhs, const Rat& rhs, bool less_or_equal);

}  // namespace linext::ineq
