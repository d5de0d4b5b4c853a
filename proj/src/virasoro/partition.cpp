#include "confdesign/virasoro/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace confdesign {

int Partition::degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  if (parts.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(parts[i]);
  }
  return s;
}

Partition Partition::parse(const std::string& text) {
  Partition p;
  if (text == "1" || text.empty()) return p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '.')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad partition '" + text + "'");
    p.parts.push_back(std::stoi(item));
  }
  if (!std::is_sorted(p.parts.rbegin(), p.parts.rend()) || p.parts.back() <= 0)
    throw std::invalid_argument("partition parts must be positive and weakly decreasing: '" + text + "'");
  return p;
}

namespace {

void enumerate(int n, int min_part, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int k = std::min(n, max_part); k >= min_part; --k) {
    cur.push_back(k);
    enumerate(n - k, min_part, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n, int min_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  enumerate(n, std::max(min_part, 1), n, cur, out);
  return out;
}

long graded_dim(int n, int min_part) {
  if (n < 0) return 0;
  min_part = std::max(min_part, 1);
  // count[k] = partitions of k with parts in [min_part, current]
  std::vector<long> count(n + 1, 0);
  count[0] = 1;
  for (int part = min_part; part <= n; ++part)
    for (int k = part; k <= n; ++k) count[k] += count[k - part];
  return count[n];
}

}  // namespace confdesign
