#include "glg/realize.hpp"

namespace glg {

std::vector<Relation> relations_of(const FusionTable& table) {
  std::vector<Relation> rels;
  rels.reserve(table.products.size());
  for (const auto& [pair, right] : table.products) {
    rels.push_back({pair.first, pair.second, right});
  }
  return rels;
}

int degree(const AbWord& w) {
  long long d = 0;
  for (long long e : w) d += e;
  return static_cast<int>(d);
}

bool grlex_less(const AbWord& a, const AbWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  long long da = 0, db = 0;
  for (long long e : a) da += e;
  for (long long e : b) db += e;
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace glg
