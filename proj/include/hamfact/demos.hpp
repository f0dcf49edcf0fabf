#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hamfact/rational.hpp"

namespace hamfact {

struct Demo {
    std::string name;
    std::string description;
    std::string eom_text;
    std::map<std::string, Rational> params;
};

const std::vector<Demo>& demos();
const Demo* find_demo(std::string_view name);

}  // namespace hamfact
