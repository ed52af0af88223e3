#pragma once

#include <utility>
#include <vector>

#include "weylsym/rational.hpp"

namespace weylsym {

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
// Intermediate entries stay integral; every division below is exact.
inline int bareiss_rank(std::vector<std::vector<Integer>> m) {
    if (m.empty() || m[0].empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size());
    int rank = 0;
    Integer prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) std::swap(m[piv], m[rank]);
        const Integer p = m[rank][col];
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                Integer t = m[r][c] * p - m[r][col] * m[rank][c];
                mpz_divexact(m[r][c].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[r][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace weylsym
