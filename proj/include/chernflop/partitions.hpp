#pragma once

#include <functional>
#include <string>
#include <vector>

namespace chernflop {

// Parts in decreasing order. The empty partition is the partition of 0.
using Partition = std::vector<int>;

int weight(const Partition& p);
// Throws BadPartition unless every part is positive and parts are non-increasing.
void validate_partition(const Partition& p);
Partition conjugate(const Partition& p);
// Partition with the parts of p and q merged.
Partition merge(const Partition& p, const Partition& q);

// All partitions of n in lexicographic order ([1,1,1] < [2,1] < [3]).
std::vector<Partition> partitions(int n);
// All partitions of every m <= n, ordered by weight, then lexicographically.
std::vector<Partition> partitions_up_to(int n);

std::string to_string(const Partition& p);  // "(2,1)"; "()" for the empty partition
Partition parse_partition(const std::string& text);

// Calls f on every vector of k non-negative integers summing to n.
void for_each_composition(int n, int k, const std::function<void(const std::vector<int>&)>& f);

}  // namespace chernflop
