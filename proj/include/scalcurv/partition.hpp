#pragma once

/*
 * Integer partitions indexing Pontrjagin monomials: the partition
 * [2,1,1] stands for p_2 * p_1^2.  Parts are positive and stored in
 * non-increasing order; the weight is the sum of the parts.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scalcurv {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        for (unsigned p : parts_)
            if (p == 0) throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    // Merge of the part multisets; models the product of two monomials.
    static Partition concat(const Partition& a, const Partition& b) {
        std::vector<unsigned> parts = a.parts_;
        parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
        return Partition(std::move(parts));
    }

    unsigned weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0u);
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

    // Canonical form, e.g. "[2,1,1]"; the empty partition is "[]".
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        s += ']';
        return s;
    }

    // Strict inverse of to_string: requires brackets, no spaces, and
    // non-increasing positive parts.
    static Partition parse(std::string_view s) {
        auto bad = [&] {
            return std::invalid_argument(
                "invalid partition key '" + std::string(s) +
                "' (expected non-increasing positive parts like \"[2,1]\")");
        };
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw bad();
        std::string_view body = s.substr(1, s.size() - 2);
        std::vector<unsigned> parts;
        if (!body.empty()) {
            std::size_t pos = 0;
            while (pos <= body.size()) {
                std::size_t comma = body.find(',', pos);
                std::string_view tok = body.substr(
                    pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
                if (tok.empty()) throw bad();
                unsigned long v = 0;
                for (char c : tok) {
                    if (c < '0' || c > '9') throw bad();
                    v = v * 10 + unsigned(c - '0');
                    if (v > 1000000) throw bad();
                }
                if (v == 0) throw bad();
                parts.push_back(unsigned(v));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        }
        if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
            throw bad();
        Partition p;
        p.parts_ = std::move(parts);
        return p;
    }

    // Human-readable monomial, e.g. "p2*p1^2"; "1" for the empty partition.
    std::string monomial_string() const {
        if (parts_.empty()) return "1";
        std::string s;
        std::size_t i = 0;
        while (i < parts_.size()) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            if (!s.empty()) s += '*';
            s += "p" + std::to_string(parts_[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << p.to_string();
    }

private:
    std::vector<unsigned> parts_;
};

namespace detail {

inline void emit_partitions(unsigned remaining, unsigned max_part,
                            std::vector<unsigned>& cur,
                            std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (unsigned first = std::min(remaining, max_part); first >= 1; --first) {
        cur.push_back(first);
        emit_partitions(remaining - first, first, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// All partitions of k in lexicographically descending order of parts:
// partitions(4) = [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
inline std::vector<Partition> partitions(unsigned k) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    detail::emit_partitions(k, k == 0 ? 1 : k, cur, out);
    return out;
}

}  // namespace scalcurv
