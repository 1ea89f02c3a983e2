#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sccsem {

using ArgIndex = std::uint32_t;

/// A set of argument indices drawn from a fixed universe {0, ..., n-1}.
///
/// Every set produced by a Framework has that framework's size as its
/// universe; binary operations require equal universes.
class ArgSet {
public:
    ArgSet() = default;
    explicit ArgSet(std::size_t universe) : bits_(universe) {}

    static ArgSet full(std::size_t universe) {
        ArgSet s(universe);
        s.bits_.set();
        return s;
    }
    static ArgSet of(std::size_t universe, std::initializer_list<ArgIndex> members) {
        return from(universe, std::span<const ArgIndex>(members.begin(), members.size()));
    }
    static ArgSet from(std::size_t universe, std::span<const ArgIndex> members);

    std::size_t universe() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool contains(ArgIndex a) const { return a < bits_.size() && bits_.test(a); }
    void insert(ArgIndex a) { bits_.set(a); }
    void erase(ArgIndex a) { bits_.reset(a); }
    void clear() { bits_.reset(); }

    bool intersects(const ArgSet& other) const { return bits_.intersects(other.bits_); }
    bool is_subset_of(const ArgSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool is_proper_subset_of(const ArgSet& other) const {
        return bits_.is_proper_subset_of(other.bits_);
    }

    ArgSet& operator|=(const ArgSet& o) { bits_ |= o.bits_; return *this; }
    ArgSet& operator&=(const ArgSet& o) { bits_ &= o.bits_; return *this; }
    ArgSet& operator-=(const ArgSet& o) { bits_ -= o.bits_; return *this; }
    friend ArgSet operator|(ArgSet a, const ArgSet& b) { return a |= b; }
    friend ArgSet operator&(ArgSet a, const ArgSet& b) { return a &= b; }
    friend ArgSet operator-(ArgSet a, const ArgSet& b) { return a -= b; }
    ArgSet complement() const {
        ArgSet c = *this;
        c.bits_.flip();
        return c;
    }

    /// Smallest member, or npos.
    std::size_t first() const { return bits_.find_first(); }
    /// Smallest member strictly greater than `after`, or npos.
    std::size_t next(std::size_t after) const { return bits_.find_next(after); }
    static constexpr std::size_t npos = boost::dynamic_bitset<std::uint64_t>::npos;

    std::vector<ArgIndex> members() const;

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (auto i = bits_.find_first(); i != npos; i = bits_.find_next(i)) {
            fn(static_cast<ArgIndex>(i));
        }
    }

    friend bool operator==(const ArgSet& a, const ArgSet& b) { return a.bits_ == b.bits_; }
    /// Canonical order: lexicographic comparison of the ascending member lists.
    friend std::strong_ordering operator<=>(const ArgSet& a, const ArgSet& b);

private:
    boost::dynamic_bitset<std::uint64_t> bits_;
};

} // namespace sccsem
