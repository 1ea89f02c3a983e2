#include "sccsem/argset.hpp"

#include <algorithm>

namespace sccsem {

ArgSet ArgSet::from(std::size_t universe, std::span<const ArgIndex> members) {
    ArgSet s(universe);
    for (ArgIndex a : members) s.insert(a);
    return s;
}

std::vector<ArgIndex> ArgSet::members() const {
    std::vector<ArgIndex> out;
    out.reserve(count());
    for_each([&](ArgIndex a) { out.push_back(a); });
    return out;
}

std::strong_ordering operator<=>(const ArgSet& a, const ArgSet& b) {
    auto i = a.first();
    auto j = b.first();
    while (i != ArgSet::npos && j != ArgSet::npos) {
        if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
        i = a.next(i);
        j = b.next(j);
    }
    if (i == j) return std::strong_ordering::equal;
    return i == ArgSet::npos ? std::strong_ordering::less : std::strong_ordering::greater;
}

} // namespace sccsem
