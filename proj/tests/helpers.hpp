#pragma once

#include "sccsem/framework.hpp"
#include "sccsem/semantics.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace sccsem::test {

inline ArgSet set(const Framework& f, std::initializer_list<const char*> labels) {
    std::vector<std::string> l(labels.begin(), labels.end());
    return f.set_of(l);
}

inline ExtensionSet family(const Framework& f, std::initializer_list<std::initializer_list<const char*>> sets) {
    std::vector<ArgSet> out;
    for (auto s : sets) out.push_back(set(f, s));
    return ExtensionSet(f.size(), std::move(out));
}

inline Framework single(const char* label, bool self_attack = false) {
    if (self_attack) return Framework::build({label}, {{label, label}});
    return Framework::build({label}, {});
}

inline Framework edge() { return Framework::build({"a", "b"}, {{"a", "b"}}); }

} // namespace sccsem::test
