#include "hckm/enumeration.hpp"

#include <algorithm>
#include <limits>

namespace hckm {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
}

// counts[m][r] = number of length-m capped vectors summing to r.
std::vector<std::vector<std::uint64_t>> count_table(int size, int k, int cap) {
    std::vector<std::vector<std::uint64_t>> counts(size + 1,
                                                   std::vector<std::uint64_t>(k + 1, 0));
    counts[0][0] = 1;
    for (int m = 1; m <= size; ++m)
        for (int r = 0; r <= k; ++r)
            for (int v = 0; v <= std::min(cap, r); ++v)
                counts[m][r] = sat_add(counts[m][r], counts[m - 1][r - v]);
    return counts;
}

// Lexicographically smallest length-m capped vector of sum s, written into
// out[from..from+m).
void fill_minimal(Composition& out, int from, int m, int s, int cap) {
    for (int t = 0; t < m; ++t) {
        const int later = cap * (m - t - 1);
        const int v = std::max(0, s - later);
        out[from + t] = v;
        s -= v;
    }
}

// Advances to the lexicographic successor; false when exhausted.
bool next_composition(Composition& c, int cap) {
    const int size = static_cast<int>(c.size());
    int suffix_sum = 0;
    for (int j = size - 1; j >= 0; --j) {
        if (suffix_sum >= 1 && c[j] < cap) {
            ++c[j];
            fill_minimal(c, j + 1, size - j - 1, suffix_sum - 1, cap);
            return true;
        }
        suffix_sum += c[j];
    }
    return false;
}

}  // namespace

std::uint64_t count_compositions(int size, int k, int per_slot_cap) {
    if (size < 1 || k < 0 || per_slot_cap < 0) throw Error("invalid enumeration parameters");
    if (static_cast<std::int64_t>(size) * per_slot_cap < k) return 0;
    return count_table(size, k, per_slot_cap)[size][k];
}

void enumerate_compositions(int size, int k, int per_slot_cap,
                            const std::function<bool(const Composition&)>& visit) {
    if (size < 1 || k < 1) throw Error("invalid enumeration parameters");
    if (static_cast<std::int64_t>(size) * per_slot_cap < k) return;
    Composition c(size, 0);
    fill_minimal(c, 0, size, k, per_slot_cap);
    do {
        if (!visit(c)) return;
    } while (next_composition(c, per_slot_cap));
}

Composition unrank_composition(int size, int k, int per_slot_cap, std::uint64_t rank) {
    const auto counts = count_table(size, k, per_slot_cap);
    if (rank >= counts[size][k]) throw Error("composition rank out of range");
    Composition c(size, 0);
    int remaining = k;
    for (int pos = 0; pos < size; ++pos) {
        const int m = size - pos - 1;
        for (int v = 0; v <= std::min(per_slot_cap, remaining); ++v) {
            const std::uint64_t below = counts[m][remaining - v];
            if (rank < below) {
                c[pos] = v;
                remaining -= v;
                break;
            }
            rank -= below;
        }
    }
    return c;
}

void enumerate_composition_range(int size, int k, int per_slot_cap, std::uint64_t begin,
                                 std::uint64_t end,
                                 const std::function<bool(const Composition&)>& visit) {
    if (begin >= end) return;
    Composition c = unrank_composition(size, k, per_slot_cap, begin);
    for (std::uint64_t r = begin; r < end; ++r) {
        if (!visit(c)) return;
        if (r + 1 < end && !next_composition(c, per_slot_cap))
            throw Error("composition stream exhausted before end rank");
    }
}

}  // namespace hckm
