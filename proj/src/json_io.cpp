#include "linext/json_io.hpp"

#include "linext/errors.hpp"

namespace linext::io {

nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json rel = nlohmann::json::array();
  for (auto [i, j] : p.cover_pairs()) rel.push_back({i, j});
  return nlohmann::json{{"n", p.size()}, {"relations", rel}};
}

Poset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw RangeError("poset document must be an object with \"n\"");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> rel;
  if (j.contains("relations")) {
    for (const auto& pair : j.at("relations")) {
      if (!pair.is_array() || pair.size() != 2)
        throw RangeError("poset relations must be [i, j] pairs");
      rel.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  return Poset::from_relations(n, rel);
}

nlohmann::json mask_to_json(Mask m) {
  nlohmann::json arr = nlohmann::json::array();
  for (int e : mask_to_list(m)) arr.push_back(e);
  return arr;
}

Mask mask_from_json(const nlohmann::json& j) {
  Mask m = 0;
  for (const auto& v : j) {
    int e = v.get<int>();
    if (e < 0 || e >= Poset::kMaxElements) throw RangeError("element out of range");
    m |= Mask{1} << e;
  }
  return m;
}

}  // namespace linext::io
