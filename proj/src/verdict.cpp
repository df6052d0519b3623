#include "linext/verdict.hpp"

namespace linext::ineq {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Equality: return "Equality";
    case Status::Fails: return "Fails";
    case Status::Vacuous: return "Vacuous";
  }
  return "?";
}

Status status_of(const Rat& lhs, const Rat& rhs, bool less_or_equal) {
  auto c = lhs <=> rhs;
  if (c == 0) return Status::Equality;
  bool ok = less_or_equal ? (c < 0) : (c > 0);
  return ok ? Status::Holds : Status::Fails;
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["check_id"] = check_id;
  j["status"] = to_string(status);
  j["lhs"] = lhs.to_string();
  j["rhs"] = rhs.to_string();
  j["relation"] = relation;
  for (auto it = witness.begin(); it != witness.end(); ++it) j[it.key()] = it.value();
  return j;
}

}  // namespace linext::ineq
