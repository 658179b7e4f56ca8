#pragma once

#include "tistab/pauli.h"

namespace fixtures {

inline tistab::CodeSpec toric() {
    using tistab::GeneratorMap;
    return tistab::CodeSpec::make_css("toric", GeneratorMap::parse(2, {{"x+xy"}, {"y+xy"}}),
                                      GeneratorMap::parse(2, {{"1+x"}, {"1+y"}}));
}

inline tistab::CodeSpec cubic() {
    using tistab::GeneratorMap;
    return tistab::CodeSpec::make_css("cubic", GeneratorMap::parse(3, {{"x+y+z+xyz"}, {"1+y+xy+yz"}}),
                                      GeneratorMap::parse(3, {{"x+z+xz+xyz"}, {"1+xy+xz+yz"}}));
}

inline tistab::CodeSpec ising() {
    using tistab::GeneratorMap;
    return tistab::CodeSpec::make_css("ising", GeneratorMap::zero(2, 1, 0), GeneratorMap::parse(2, {{"1+y", "1+x"}}));
}

// Corner lists of the cubic generators, qubit 1 then qubit 2.
inline const std::vector<std::vector<int>> kCubicX1 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
inline const std::vector<std::vector<int>> kCubicX2 = {{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 1, 1}};
inline const std::vector<std::vector<int>> kCubicZ1 = {{1, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}};
inline const std::vector<std::vector<int>> kCubicZ2 = {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};

}  // namespace fixtures
