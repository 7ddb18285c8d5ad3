#include "hh/multi_index.hpp"

namespace hh {

namespace {

void emit_degree(std::size_t n, std::size_t j, uint32_t rest, MIdx& cur,
                 std::vector<MIdx>& out) {
    if (j + 1 == n) {
        cur[j] = rest;
        out.push_back(cur);
        return;
    }
    // Descending first coordinate gives lexicographic-descending output;
    // we want ascending, so iterate upward.
    for (uint32_t v = 0; v <= rest; ++v) {
        cur[j] = v;
        emit_degree(n, j + 1, rest - v, cur, out);
    }
}

} // namespace

std::vector<MIdx> mi_all_of_degree(std::size_t n, uint32_t d) {
    std::vector<MIdx> out;
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    MIdx cur(n, 0);
    emit_degree(n, 0, d, cur, out);
    return out;
}

std::vector<MIdx> mi_all_up_to(std::size_t n, uint32_t N) {
    std::vector<MIdx> out;
    for (uint32_t d = 0; d <= N; ++d) {
        auto level = mi_all_of_degree(n, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace hh
