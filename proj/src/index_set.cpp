#include "gkz/index_set.hpp"

namespace gkz {

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : one_based()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::vector<IndexSet> subsets_of_size(IndexSet base, int k) {
  const std::vector<int> e = base.elements();
  const int n = static_cast<int>(e.size());
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    IndexSet s;
    for (int i : idx) s.insert(e[i]);
    out.push_back(s);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

std::vector<IndexSet> subsets_of_size(int n, int k) { return subsets_of_size(IndexSet::range(n), k); }

}  // namespace gkz
