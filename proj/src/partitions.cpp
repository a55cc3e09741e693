#include "chernflop/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chernflop/errors.hpp"

namespace chernflop {

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

void validate_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw BadPartition("partition parts must be positive: " + to_string(p));
    if (i > 0 && p[i] > p[i - 1]) throw BadPartition("partition parts must be non-increasing: " + to_string(p));
  }
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int j = 1; j <= p.front(); ++j) {
    out.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [j](int v) { return v >= j; })));
  }
  return out;
}

Partition merge(const Partition& p, const Partition& q) {
  Partition out = p;
  out.insert(out.end(), q.begin(), q.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

void extend(int remaining, int max_part, Partition& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    extend(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition current;
  extend(n, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    auto part = partitions(m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

Partition parse_partition(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw BadPartition("malformed partition '" + text + "'");
  Partition out;
  std::string body = text.substr(1, text.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw BadPartition("malformed partition '" + text + "'");
    }
  }
  validate_partition(out);
  return out;
}

void for_each_composition(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  if (k <= 0 || n < 0) {
    if (k == 0 && n == 0) f({});
    return;
  }
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == k - 1) {
      parts[static_cast<std::size_t>(idx)] = remaining;
      f(parts);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      parts[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, remaining - v);
    }
  };
  rec(0, n);
}

}  // namespace chernflop
