#ifndef SIMPLAP_COMBINATORICS_HPP
#define SIMPLAP_COMBINATORICS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace simplap {

/// A face is a strictly increasing tuple of vertex indices.
using Face = std::vector<int>;

constexpr int kMaxVertices = 24;  // faces are encoded as uint64 bitmasks

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

inline std::uint64_t mask_of(const Face& f) {
    std::uint64_t m = 0;
    for (int v : f)
        m |= (1ULL << v);
    return m;
}

inline Face face_of(std::uint64_t mask) {
    Face f;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1)
            f.push_back(v);
    return f;
}

inline int popcount64(std::uint64_t m) {
    return __builtin_popcountll(m);
}

/// All size-k subsets of {0,...,n-1} in lexicographic order.
inline std::vector<Face> all_subsets(int n, int k) {
    std::vector<Face> out;
    if (k < 0 || k > n)
        return out;
    Face cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    if (k == 0)
        out.resize(1);  // the single empty tuple
    return out;
}

/// Lexicographic comparison of strictly increasing tuples.
inline bool face_lex_less(const Face& a, const Face& b) {
    return a < b;
}

/**
 * Sign pairing of two k-sets differing in one element: with
 * sigma \ tau = {i} and tau \ sigma = {j}, counts the shared
 * elements strictly between i and j and returns (-1)^count.
 * Symmetric in its arguments.
 */
inline int sign_eps(const Face& sigma, const Face& tau) {
    if (sigma.size() != tau.size())
        throw std::invalid_argument("sign_eps: faces of unequal cardinality");
    const std::uint64_t ms = mask_of(sigma), mt = mask_of(tau);
    const std::uint64_t shared = ms & mt;
    if (popcount64(shared) + 1 != static_cast<int>(sigma.size()))
        throw std::invalid_argument("sign_eps: faces must share all but one vertex");
    const int i = face_of(ms & ~mt)[0];
    const int j = face_of(mt & ~ms)[0];
    const int lo = i < j ? i : j;
    const int hi = i < j ? j : i;
    std::uint64_t between = shared;
    between &= ~((lo >= 63) ? ~0ULL : ((1ULL << (lo + 1)) - 1));
    between &= (1ULL << hi) - 1;
    return (popcount64(between) % 2 == 0) ? 1 : -1;
}

/// (-1)^(j-1) for removing the j-th vertex (1-based) of an oriented simplex.
inline int boundary_sign(const Face& sigma, int position) {
    if (position < 1 || position > static_cast<int>(sigma.size()))
        throw std::invalid_argument("boundary_sign: position out of range");
    return (position % 2 == 1) ? 1 : -1;
}

}  // namespace simplap

#endif  // SIMPLAP_COMBINATORICS_HPP
