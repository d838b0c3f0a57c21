#pragma once

#include "opoly/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace opoly::test {

// Three points per parameter name for the closed-form and derivative checks.
inline const std::map<std::string, std::vector<const char*>>& pool() {
    static const std::map<std::string, std::vector<const char*>> p{
        {"alpha", {"1/2", "2", "-1/3"}}, {"beta", {"1/3", "1", "3/4"}},    {"gamma", {"5/2", "-1/5", "7/3"}},
        {"delta", {"2/7", "3", "-3/5"}}, {"N", {"37/3", "41/5", "29/2"}}, {"M", {"13/2", "22/3", "9"}},
        {"mu", {"1/3", "3/5", "3"}},     {"nu", {"2/3", "1/4", "5"}},     {"p", {"1/3", "2/5", "3/4"}},
        {"q", {"1/5", "2/3", "3/7"}},
    };
    return p;
}

inline std::map<std::string, Rational> point(const std::vector<std::string>& names, int i) {
    std::map<std::string, Rational> out;
    for (const auto& k : names) out[k] = Rational::parse(pool().at(k).at(i));
    return out;
}

}  // namespace opoly::test
