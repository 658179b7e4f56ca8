#include "tistab/codebook.h"

#include <algorithm>
#include <bit>
#include <regex>
#include <stdexcept>

#include "tistab/cluster.h"

namespace tistab {

namespace {

std::vector<unsigned> cells(size_t d, size_t k) {
    std::vector<unsigned> out;
    for (unsigned m = 0; m < (1u << d); m++) {
        if (size_t(std::popcount(m)) == k) {
            out.push_back(m);
        }
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

Exponent axis(size_t d, size_t i, int32_t sign) {
    Exponent e(d, 0);
    e[i] = sign;
    return e;
}

CodeSpec toric2d() {
    return CodeSpec::make_css("toric2d", GeneratorMap::parse(2, {{"x+xy"}, {"y+xy"}}),
                              GeneratorMap::parse(2, {{"1+x"}, {"1+y"}}));
}

CodeSpec cubic() {
    return CodeSpec::make_css("cubic", GeneratorMap::parse(3, {{"x+y+z+xyz"}, {"1+y+xy+yz"}}),
                              GeneratorMap::parse(3, {{"x+z+xz+xyz"}, {"1+xy+xz+yz"}}),
                              "Z generator is the kernel generator of the X generator dagger");
}

CodeSpec ising2d() {
    return CodeSpec::make_css("ising2d", GeneratorMap::zero(2, 1, 0), GeneratorMap::parse(2, {{"1+y", "1+x"}}),
                              "single-site X fields");
}

CodeSpec fractal_ising() {
    return CodeSpec::make_css("fractal_ising", GeneratorMap::zero(3, 1, 0),
                              GeneratorMap::parse(3, {{"1+xy+xz+yz", "x+z+xz+xyz"}}), "single-site X fields");
}

}  // namespace

std::vector<std::string> codebook_names() {
    return {"toric2d", "cubic", "ising2d", "fractal_ising", "cluster_toric", "cluster_cubic", "generalized_toric(d,k)"};
}

CodeSpec generalized_toric(size_t d, size_t k) {
    if (d < 1 || d > 6 || k > d) {
        throw std::invalid_argument("generalized_toric needs 1 <= d <= 6 and 0 <= k <= d");
    }
    std::vector<unsigned> qubits = cells(d, k);
    auto qubit_row = [&](unsigned m) {
        return size_t(std::find(qubits.begin(), qubits.end(), m) - qubits.begin());
    };
    const size_t Q = qubits.size();
    std::vector<std::vector<LaurentPoly>> xs;
    if (k > 0) {
        for (unsigned e : cells(d, k - 1)) {
            std::vector<LaurentPoly> col(Q, LaurentPoly(d));
            for (size_t i = 0; i < d; i++) {
                if (!(e >> i & 1)) {
                    col[qubit_row(e | (1u << i))] =
                        LaurentPoly::one(d) + LaurentPoly::monomial(axis(d, i, -1));
                }
            }
            xs.push_back(col);
        }
    }
    std::vector<std::vector<LaurentPoly>> zs;
    if (k < d) {
        for (unsigned f : cells(d, k + 1)) {
            std::vector<LaurentPoly> col(Q, LaurentPoly(d));
            for (size_t i = 0; i < d; i++) {
                if (f >> i & 1) {
                    col[qubit_row(f & ~(1u << i))] = LaurentPoly::one(d) + LaurentPoly::monomial(axis(d, i, 1));
                }
            }
            zs.push_back(col);
        }
    }
    std::string name = "generalized_toric(" + std::to_string(d) + "," + std::to_string(k) + ")";
    return CodeSpec::make_css(name, GeneratorMap::from_columns(d, Q, xs), GeneratorMap::from_columns(d, Q, zs));
}

CodeSpec get_code(const std::string &name) {
    if (name == "toric2d") {
        return toric2d();
    }
    if (name == "cubic") {
        return cubic();
    }
    if (name == "ising2d") {
        return ising2d();
    }
    if (name == "fractal_ising") {
        return fractal_ising();
    }
    if (name == "cluster_toric") {
        CodeSpec c = build_cluster(ungauge_css(toric2d())).to_code("cluster_toric");
        c.notes = "matter qubit first, then the two gauge qubits";
        return c;
    }
    if (name == "cluster_cubic") {
        CodeSpec c = build_cluster(ungauge_css(cubic())).to_code("cluster_cubic");
        c.notes = "matter qubit first, then the two gauge qubits";
        return c;
    }
    static const std::regex gt(R"(generalized_toric\((\d+),(\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, gt)) {
        return generalized_toric(std::stoul(m[1]), std::stoul(m[2]));
    }
    throw std::invalid_argument("unknown code '" + name + "'");
}

}  // namespace tistab
