#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace offsearch {

// One bit per candidate loop, document order. 1 = offload/parallelize.
using Gene = std::vector<std::uint8_t>;

inline std::string gene_to_string(const Gene& g) {
    std::string s;
    s.reserve(g.size());
    for (auto b : g)
        s.push_back(b ? '1' : '0');
    return s;
}

inline Gene gene_from_string(const std::string& s) {
    Gene g;
    g.reserve(s.size());
    for (char c : s)
        g.push_back(c == '1' ? 1 : 0);
    return g;
}

inline int gene_popcount(const Gene& g) {
    int n = 0;
    for (auto b : g)
        n += b ? 1 : 0;
    return n;
}

// Lexicographic order on the bit string; used for elite tie-breaking.
inline bool gene_lex_less(const Gene& a, const Gene& b) {
    return a < b;
}

} // namespace offsearch
