#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <toriglue/matrix.hpp>

namespace toriglue {

/// Graded Betti table: (homological index i, internal degree j) -> rank.
/// Absent entries are 0; support is finite.
struct BettiTable {
    std::map<std::pair<long, long>, Int> entries;

    static BettiTable unit() {
        BettiTable t;
        t.entries[{0, 0}] = 1;
        return t;
    }

    void set(long i, long j, Int value) {
        if (i < 0 || j < 0) throw std::invalid_argument("betti: indices must be nonnegative");
        if (value < 0) throw std::invalid_argument("betti: ranks must be nonnegative");
        if (value == 0)
            entries.erase({i, j});
        else
            entries[{i, j}] = std::move(value);
    }

    Int get(long i, long j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? Int(0) : it->second;
    }

    bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

/// Tensor product of resolutions at the Betti level: the 2-D convolution
/// beta_{i,j} = sum over i1+i2=i, j1+j2=j of the factor entries.
inline BettiTable tensor(const BettiTable& a, const BettiTable& b) {
    BettiTable out;
    for (const auto& [ka, va] : a.entries)
        for (const auto& [kb, vb] : b.entries)
            out.entries[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    return out;
}

/// Largest homological index with a nonzero entry.
inline long projective_dimension(const BettiTable& t) {
    long pd = 0;
    for (const auto& [k, v] : t.entries) pd = std::max(pd, k.first);
    return pd;
}

/// Largest j - i with a nonzero entry (Castelnuovo-Mumford regularity).
inline long regularity(const BettiTable& t) {
    long reg = 0;
    for (const auto& [k, v] : t.entries) reg = std::max(reg, k.second - k.first);
    return reg;
}

/// Column sums, the diagram's "total:" row.
inline std::vector<Int> totals(const BettiTable& t) {
    std::vector<Int> out(static_cast<std::size_t>(projective_dimension(t)) + 1, Int(0));
    for (const auto& [k, v] : t.entries) out[static_cast<std::size_t>(k.first)] += v;
    return out;
}

/// Macaulay2-style diagram: header 0..pd, rows labeled by j-i, '-' for
/// zeros, then the total row.  Byte-stable for golden tests.
inline std::string render(const BettiTable& t) {
    const long pd = projective_dimension(t);
    const long reg = regularity(t);
    const int width = 6;
    std::ostringstream out;
    auto cell = [&](const std::string& s) {
        out << std::string(width - std::min<std::size_t>(s.size(), width), ' ') << s;
    };
    cell("");
    for (long i = 0; i <= pd; ++i) cell(std::to_string(i));
    out << '\n';
    out << std::string(static_cast<std::size_t>(width) * (pd + 2), '-') << '\n';
    for (long r = 0; r <= reg; ++r) {
        cell(std::to_string(r) + ":");
        for (long i = 0; i <= pd; ++i) {
            Int v = t.get(i, i + r);
            cell(v == 0 ? "-" : v.get_str());
        }
        out << '\n';
    }
    out << std::string(static_cast<std::size_t>(width) * (pd + 2), '-') << '\n';
    cell("total:");
    for (const Int& v : totals(t)) cell(v.get_str());
    out << '\n';
    return out.str();
}

/// Betti file format: one `i j value` triple per line; '#' starts a comment.
inline BettiTable read_betti(std::istream& in) {
    BettiTable t;
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
        std::size_t k = line.find_first_not_of(" \t\r");
        if (k == std::string::npos || line[k] == '#') continue;
        std::istringstream ss(line);
        long i, j;
        std::string value;
        if (!(ss >> i >> j >> value)) throw std::runtime_error("betti: bad line '" + line + "'");
        t.set(i, j, t.get(i, j) + Int(value));
        any = true;
    }
    if (!any) throw std::runtime_error("betti: empty input");
    return t;
}

inline BettiTable parse_betti(const std::string& text) {
    std::istringstream ss(text);
    return read_betti(ss);
}

inline std::string to_text(const BettiTable& t) {
    std::ostringstream out;
    for (const auto& [k, v] : t.entries)
        out << k.first << ' ' << k.second << ' ' << v << '\n';
    return out.str();
}

}  // namespace toriglue
