#include "hamfact/demos.hpp"

namespace hamfact {

const std::vector<Demo>& demos() {
    static const std::vector<Demo> table = {
        {"damped",
         "single damped oscillator; dissipative, rejected by the criterion",
         "x'' + g*x' + x = 0",
         {{"g", Rational(1)}}},
        {"bateman",
         "coupled oscillator pair with balanced loss and gain",
         "x'' + g*x' + x = -l*y\n"
         "y'' - g*y' + y = -l*x",
         {{"g", Rational(1)}, {"l", Rational(1, 2)}}},
        {"dual",
         "velocity-coupled dual of the balanced pair",
         "x'' + g*y' + x = -l*y\n"
         "y'' - g*x' + y = -l*x",
         {{"g", Rational(1)}, {"l", Rational(1, 2)}}},
        {"interaction",
         "two cross-coupled balanced pairs with distinct gain coefficients",
         "x1'' + g1*x1' + x1 = -l1*x2 - l2*y2\n"
         "y1'' - g1*y1' + y1 = -l2*x2 - l1*y2\n"
         "x2'' + g2*x2' + x2 = -l1*x1 - l2*y1\n"
         "y2'' - g2*y2' + y2 = -l2*x1 - l1*y1",
         {{"g1", Rational(1)}, {"g2", Rational(1, 2)}, {"l1", Rational(1, 3)}, {"l2", Rational(1, 4)}}},
        {"henon-heiles",
         "cubic two-well system with balanced loss and gain",
         "x'' + g*y' + x = x^2 - y^2\n"
         "y'' - g*x' + y = -2*x*y",
         {{"g", Rational(1, 10)}}},
    };
    return table;
}

const Demo* find_demo(std::string_view name) {
    for (const auto& d : demos())
        if (d.name == name) return &d;
    return nullptr;
}

}  // namespace hamfact
