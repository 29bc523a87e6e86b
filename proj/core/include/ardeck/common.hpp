#ifndef ARDECK_COMMON_HPP
#define ARDECK_COMMON_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ardeck {

// Thrown when a search or enumeration exceeds its work budget.  `progress`
// counts whatever units the aborted operation was producing (members emitted,
// nodes expanded, ...), so callers can report partial results.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t progress)
        : std::runtime_error(what), progress(progress) {}
    std::uint64_t progress;
};

// Dynamic bitset sized at construction.  Graphs cap at 64 vertices and use a
// raw word instead; this is for digraphs whose order can exceed 64.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    bool operator==(const Bits& o) const = default;

    // Index of the lowest set bit at or after `from`, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int word = from >> 6;
        std::uint64_t cur = w_[word] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                int i = (word << 6) + std::countr_zero(cur);
                return i < nbits_ ? i : -1;
            }
            if (++word >= static_cast<int>(w_.size())) return -1;
            cur = w_[word];
        }
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace ardeck

#endif
