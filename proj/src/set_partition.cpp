#include "rbx/set_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace rbx
{

std::vector<SetPartition> set_partitions(int n)
{
	if (n < 1 || n > 8)
		throw std::invalid_argument("set_partitions: n must be in [1, 8], got " + std::to_string(n));

	// a[i] is the block of element i+1; a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
	std::vector<SetPartition> out;
	std::vector<int> a(static_cast<std::size_t>(n), 0);
	std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
	for (;;)
	{
		SetPartition p;
		for (int i = 0; i < n; ++i)
		{
			const auto b = static_cast<std::size_t>(a[static_cast<std::size_t>(i)]);
			if (b >= p.blocks.size())
				p.blocks.resize(b + 1);
			p.blocks[b].push_back(i + 1);
		}
		out.push_back(std::move(p));

		int i = n - 1;
		while (i > 0 && a[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)])
			--i;
		if (i == 0)
			break;
		++a[static_cast<std::size_t>(i)];
		for (int j = i; j < n; ++j)
		{
			if (j > i)
				a[static_cast<std::size_t>(j)] = 0;
			prefix_max[static_cast<std::size_t>(j)] =
			    std::max(prefix_max[static_cast<std::size_t>(j - 1)], a[static_cast<std::size_t>(j)]);
		}
	}
	return out;
}

std::string to_string(const SetPartition &p)
{
	std::string out = "{";
	for (std::size_t b = 0; b < p.blocks.size(); ++b)
	{
		out += b ? ",{" : "{";
		for (std::size_t i = 0; i < p.blocks[b].size(); ++i)
			out += (i ? "," : "") + std::to_string(p.blocks[b][i]);
		out += "}";
	}
	return out + "}";
}

} // namespace rbx
