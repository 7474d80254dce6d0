#ifndef RBX_SET_PARTITION_HPP
#define RBX_SET_PARTITION_HPP

#include <string>
#include <vector>

namespace rbx
{

// Unordered partition of {1, ..., n}; blocks sorted internally and ordered by
// their minimum element.
struct SetPartition
{
	std::vector<std::vector<int>> blocks;

	bool operator==(const SetPartition &) const = default;
};

// All partitions of {1, ..., n} in restricted-growth-string order, 1 <= n <= 8.
std::vector<SetPartition> set_partitions(int n);

std::string to_string(const SetPartition &p);

} // namespace rbx

#endif
