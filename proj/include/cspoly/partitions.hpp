// Integer vectors and partitions: the index combinatorics. IntVector keeps
// an explicit slot count (trailing zeros significant); Partition drops
// trailing zeros. The tail-sum partial order of the triangular structure
// lives here, together with its deterministic linear extension.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace cspoly {

struct IntVector {
    std::vector<long> parts;

    IntVector() = default;
    explicit IntVector(std::vector<long> p) : parts(std::move(p)) {}

    std::size_t size() const { return parts.size(); }
    long operator[](std::size_t i) const { return parts[i]; }
    long& operator[](std::size_t i) { return parts[i]; }

    friend bool operator==(const IntVector& a, const IntVector& b) { return a.parts == b.parts; }
    friend bool operator!=(const IntVector& a, const IntVector& b) { return a.parts != b.parts; }
    friend bool operator<(const IntVector& a, const IntVector& b) { return a.parts < b.parts; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
};

struct Partition {
    std::vector<long> parts;  // weakly decreasing, no trailing zeros

    Partition() = default;
    explicit Partition(std::vector<long> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) throw NegativePart("partition with negative part");
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                throw MathError("partition parts must be weakly decreasing");
        }
    }

    std::size_t length() const { return parts.size(); }
    long part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts != b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

    IntVector padded(std::size_t n) const {
        if (length() > n) throw LengthMismatch("partition longer than slot count");
        std::vector<long> p(parts);
        p.resize(n, 0);
        return IntVector(std::move(p));
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
};

inline long weight(const IntVector& n) {
    return std::accumulate(n.parts.begin(), n.parts.end(), 0L);
}
inline long weight(const Partition& p) {
    return std::accumulate(p.parts.begin(), p.parts.end(), 0L);
}

// suffix sums n_j + ... + n_N for j = 1..N
inline std::vector<long> tail_sums(const IntVector& n) {
    std::vector<long> t(n.size(), 0);
    long acc = 0;
    for (std::size_t i = n.size(); i-- > 0;) {
        acc += n.parts[i];
        t[i] = acc;
    }
    return t;
}

inline bool tails_nonnegative(const IntVector& n) {
    long acc = 0;
    for (std::size_t i = n.size(); i-- > 0;) {
        acc += n.parts[i];
        if (acc < 0) return false;
    }
    return true;
}

// m <= n in the tail-sum partial order; both vectors must have equal length
inline bool tail_order_leq(const IntVector& m, const IntVector& n) {
    if (m.size() != n.size()) throw LengthMismatch("tail_order_leq: unequal lengths");
    long am = 0, an = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
        am += m.parts[i];
        an += n.parts[i];
        if (am > an) return false;
    }
    return true;
}

// Deterministic linear extension of the tail order, descending: n before m
// whenever m is strictly tail-below n. Weight descending, ties broken
// lexicographically ascending (within one weight the tail-larger vector is
// lexicographically smaller).
inline bool linear_ext_desc(const IntVector& a, const IntVector& b) {
    long wa = weight(a), wb = weight(b);
    if (wa != wb) return wa > wb;
    return a.parts < b.parts;
}

inline Partition conjugate(const Partition& p) {
    std::vector<long> c;
    if (p.parts.empty()) return Partition{};
    c.resize(static_cast<std::size_t>(p.parts[0]), 0);
    for (long row : p.parts)
        for (long j = 0; j < row; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

inline Partition sort_to_partition(const IntVector& m) {
    for (long x : m.parts)
        if (x < 0) throw NegativePart("sort_to_partition: negative part " + m.str());
    std::vector<long> p(m.parts);
    std::sort(p.rbegin(), p.rend());
    return Partition(std::move(p));
}

// dominance order on partitions of equal weight: prefix sums of a bounded
// by those of b (a <= b); on equal weight this is the reverse of tail order
inline bool dominance_leq(const Partition& a, const Partition& b) {
    long pa = 0, pb = 0;
    std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) return false;
    }
    return pa == pb;
}

inline std::vector<Partition> partitions_of(long d, long max_len, long max_part = -1) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rem, long cap) {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (static_cast<long>(cur.size()) == max_len) return;
        for (long p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(d, max_part < 0 ? d : std::min(d, max_part));
    return out;
}

// partitions in the fat (N, Ntilde) hook: lambda_{N+1} <= Ntilde
inline bool in_fat_hook(const Partition& p, long N, long Ntilde) {
    return p.part(static_cast<std::size_t>(N)) <= Ntilde;
}

// integer vectors with parts in [lo, hi] whose suffix sums are all >= 0;
// weight is left free when wgt_filter is false (test corpora)
inline std::vector<IntVector> tail_valid_vectors(long len, long lo, long hi, bool wgt_filter,
                                                 long wgt) {
    std::vector<IntVector> out;
    std::vector<long> cur(static_cast<std::size_t>(len), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long sum) {
        if (pos == static_cast<std::size_t>(len)) {
            if ((!wgt_filter || sum == wgt) && tails_nonnegative(IntVector(cur)))
                out.push_back(IntVector(cur));
            return;
        }
        for (long p = lo; p <= hi; ++p) {
            cur[pos] = p;
            rec(pos + 1, sum + p);
        }
        cur[pos] = 0;
    };
    rec(0, 0);
    return out;
}

}  // namespace cspoly
