#include "polyflam/polygen/enumerate.hpp"

#include <algorithm>

#include "polyflam/common/error.hpp"

namespace polyflam::polygen {

namespace {

void emit_multisets(int n, int size, int first, std::vector<int>& current,
                    std::vector<std::vector<std::pair<int, int>>>& out) {
    if (static_cast<int>(current.size()) == size) {
        std::vector<std::pair<int, int>> multiset;
        for (const int idx : current) {
            if (!multiset.empty() && multiset.back().first == idx) {
                ++multiset.back().second;
            } else {
                multiset.emplace_back(idx, 1);
            }
        }
        out.push_back(std::move(multiset));
        return;
    }
    for (int i = first; i < n; ++i) {
        current.push_back(i);
        emit_multisets(n, size, i, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> enumerate_compositions(int n_groups, int max_size) {
    if (n_groups < 1) throw DomainError("n_groups must be >= 1");
    if (max_size < 1) throw DomainError("max_size must be >= 1");
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> current;
    for (int size = 1; size <= max_size; ++size) {
        emit_multisets(n_groups, size, 0, current, out);
    }
    return out;
}

std::vector<groups::GroupComposition> enumerate_compositions(const groups::GroupTable& table,
                                                             int max_size) {
    std::vector<std::string> ids;
    ids.reserve(table.size());
    for (const auto& group : table.groups()) ids.push_back(group.id);
    std::sort(ids.begin(), ids.end());

    const auto multisets = enumerate_compositions(static_cast<int>(ids.size()), max_size);
    std::vector<groups::GroupComposition> out;
    out.reserve(multisets.size());
    for (const auto& multiset : multisets) {
        groups::GroupComposition comp;
        for (const auto& [idx, count] : multiset) {
            comp.counts[ids[static_cast<std::size_t>(idx)]] = count;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::uint64_t composition_count(int n_groups, int max_size) {
    if (n_groups < 1) throw DomainError("n_groups must be >= 1");
    if (max_size < 1) throw DomainError("max_size must be >= 1");
    std::uint64_t total = 0;
    for (int k = 1; k <= max_size; ++k) {
        // C(n + k - 1, k) built incrementally; overflows are not reachable
        // for the supported n <= 64, k <= 8 scale.
        std::uint64_t c = 1;
        for (int j = 1; j <= k; ++j) {
            c = c * static_cast<std::uint64_t>(n_groups - 1 + j) / static_cast<std::uint64_t>(j);
        }
        total += c;
    }
    return total;
}

}  // namespace polyflam::polygen
