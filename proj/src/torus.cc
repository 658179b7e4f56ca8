#include "tistab/torus.h"

#include <sstream>
#include <stdexcept>

namespace tistab {

TorusShape::TorusShape(std::vector<int32_t> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty()) {
        throw std::invalid_argument("torus needs at least one axis");
    }
    for (int32_t l : lengths_) {
        if (l < 2) {
            throw std::invalid_argument("torus lengths must be at least 2");
        }
    }
}

TorusShape TorusShape::parse(std::string_view text) {
    std::vector<int32_t> lengths;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size()) {
            throw std::invalid_argument("bad torus length '" + item + "'");
        }
        lengths.push_back(value);
    }
    return TorusShape(std::move(lengths));
}

TorusShape TorusShape::cube(size_t dim, int32_t length) {
    return TorusShape(std::vector<int32_t>(dim, length));
}

size_t TorusShape::num_sites() const {
    size_t n = 1;
    for (int32_t l : lengths_) {
        n *= size_t(l);
    }
    return n;
}

size_t TorusShape::site_index(const Exponent &e) const {
    if (e.size() != lengths_.size()) {
        throw std::invalid_argument("exponent does not match torus dimension");
    }
    size_t idx = 0;
    for (size_t k = 0; k < lengths_.size(); k++) {
        int32_t l = lengths_[k];
        int32_t r = ((e[k] % l) + l) % l;
        idx = idx * size_t(l) + size_t(r);
    }
    return idx;
}

Exponent TorusShape::site_coords(size_t index) const {
    Exponent e(lengths_.size());
    for (size_t k = lengths_.size(); k-- > 0;) {
        e[k] = int32_t(index % size_t(lengths_[k]));
        index /= size_t(lengths_[k]);
    }
    return e;
}

std::string TorusShape::str() const {
    std::string s;
    for (size_t k = 0; k < lengths_.size(); k++) {
        if (k) {
            s += ",";
        }
        s += std::to_string(lengths_[k]);
    }
    return s;
}

Gf2Matrix instantiate(const GeneratorMap &m, const TorusShape &shape) {
    if (m.dim() != shape.dim()) {
        throw std::invalid_argument("map dimension does not match torus");
    }
    const size_t n = shape.num_sites();
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    Gf2Matrix out(rows * n, cols * n);
    for (size_t j = 0; j < n; j++) {
        Exponent shift = shape.site_coords(j);
        for (size_t c = 0; c < cols; c++) {
            for (size_t r = 0; r < rows; r++) {
                for (const auto &t : m.at(r, c).terms()) {
                    size_t site = shape.site_index(t + shift);
                    out.flip(site * rows + r, j * cols + c);
                }
            }
        }
    }
    return out;
}

BitVec instantiate_column(const std::vector<LaurentPoly> &col, const TorusShape &shape) {
    const size_t rows = col.size();
    BitVec v(rows * shape.num_sites());
    for (size_t r = 0; r < rows; r++) {
        for (const auto &t : col[r].terms()) {
            v.flip(shape.site_index(t) * rows + r);
        }
    }
    return v;
}

bool CountReport::consistent() const {
    return k_encoded == n_qubits - stab_rank && c_constant == int64_t(k_encoded) - bulk_term;
}

std::string CountReport::str() const {
    std::ostringstream out;
    out << "torus " << shape.str() << ": N=" << n_sites << " qubits=" << n_qubits
        << " translates=" << n_generator_translates << " rank=" << stab_rank << " k=" << k_encoded
        << " bulk=" << bulk_term << " C=" << c_constant;
    return out.str();
}

CountReport count_logical(const CodeSpec &code, const TorusShape &shape) {
    StabilizerReport check = verify_stabilizer(code);
    if (!check.commuting) {
        throw std::invalid_argument("count_logical: " + check.str());
    }
    CountReport rep;
    rep.shape = shape;
    rep.n_sites = shape.num_sites();
    rep.n_qubits = code.q * rep.n_sites;
    rep.n_generator_translates = code.sigma.cols() * rep.n_sites;
    rep.stab_rank = rank(instantiate(code.sigma, shape));
    rep.k_encoded = rep.n_qubits - rep.stab_rank;

    FormulaInputs &in = rep.inputs;
    in.qubits_per_site = code.q;
    if (code.css) {
        in.x_types = code.n_x;
        in.z_types = code.sigma.cols() - code.n_x;
        in.rank_x = generic_rank(code.sigma_x());
        in.rank_z = generic_rank(code.sigma_z());
        in.rank_total = in.rank_x + in.rank_z;
    } else {
        in.rank_total = generic_rank(code.sigma);
    }
    rep.bulk_term = int64_t(rep.n_sites) * (int64_t(code.q) - int64_t(in.rank_total));
    rep.c_constant = int64_t(rep.k_encoded) - rep.bulk_term;
    return rep;
}

std::string GapReport::str() const {
    std::ostringstream out;
    out << "dim ker eps=" << dim_ker_eps << " dim im sigma=" << dim_im_sigma << " gap=" << gap
        << " (2k=" << 2 * k_encoded << ")";
    return out.str();
}

GapReport logical_operator_gap(const CodeSpec &code, const TorusShape &shape) {
    CountReport count = count_logical(code, shape);
    Gf2Matrix eps = instantiate(epsilon_of(code.sigma), shape);
    GapReport rep;
    rep.dim_ker_eps = eps.cols() - rank(eps);
    rep.dim_im_sigma = count.stab_rank;
    rep.gap = int64_t(rep.dim_ker_eps) - int64_t(rep.dim_im_sigma);
    rep.k_encoded = count.k_encoded;
    rep.consistent = rep.gap == int64_t(2 * count.k_encoded);
    return rep;
}

}  // namespace tistab
