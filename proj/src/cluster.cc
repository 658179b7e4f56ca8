#include "tistab/cluster.h"

#include <sstream>

namespace tistab {

namespace {

GeneratorMap columns_to_map(size_t dim, size_t q, const std::vector<PauliColumn> &ops) {
    GeneratorMap m = GeneratorMap::zero(dim, 2 * q, ops.size());
    for (size_t c = 0; c < ops.size(); c++) {
        for (size_t k = 0; k < q; k++) {
            m.set(k, c, ops[c].x[k]);
            m.set(q + k, c, ops[c].z[k]);
        }
    }
    return m;
}

std::vector<LaurentPoly> slice(const std::vector<LaurentPoly> &v, size_t begin, size_t n) {
    return {v.begin() + begin, v.begin() + begin + n};
}

bool all_zero(const std::vector<LaurentPoly> &v) {
    for (const auto &p : v) {
        if (!p.is_zero()) {
            return false;
        }
    }
    return true;
}

struct Substitution {
    std::vector<PauliColumn> ops;
    size_t q = 0;
    bool fields_complete = false;
};

// Gauges block [a, a + n_A) with constraint map eta_a (n_A × n_new). The
// block is removed and the n_new partner qubits are appended.
Substitution substitute(const std::vector<PauliColumn> &ops, size_t dim, size_t q, size_t a,
                        const GeneratorMap &eta_a, const std::optional<Exponent> &box) {
    const size_t n_a = eta_a.rows();
    const size_t n_new = eta_a.cols();
    const size_t keep = q - n_a;
    GeneratorMap eta_dag = dagger(eta_a);
    Substitution out;
    out.q = keep + n_new;
    auto copy_rest = [&](const PauliColumn &op, PauliColumn &res) {
        size_t j = 0;
        for (size_t k = 0; k < q; k++) {
            if (k >= a && k < a + n_a) {
                continue;
            }
            res.x[j] = op.x[k];
            res.z[j] = op.z[k];
            j++;
        }
    };
    for (const PauliColumn &op : ops) {
        PauliColumn res = PauliColumn::identity(dim, out.q);
        copy_rest(op, res);
        std::vector<LaurentPoly> xa = slice(op.x, a, n_a);
        std::vector<LaurentPoly> za = slice(op.z, a, n_a);
        std::vector<LaurentPoly> nx = apply_map(eta_dag, xa);
        std::copy(nx.begin(), nx.end(), res.x.begin() + keep);
        if (!all_zero(za)) {
            auto s = preimage(eta_a, za);
            if (!s) {
                throw NotSymmetricError("Z part on the gauged sublattice is not a product of constraint terms");
            }
            std::copy(s->begin(), s->end(), res.z.begin() + keep);
        }
        out.ops.push_back(res);
    }
    Exponent kbox = box ? *box : default_box(eta_a);
    KernelBasis mu = bounded_kernel(eta_a, kbox);
    Exponent window(dim);
    for (size_t k = 0; k < dim; k++) {
        window[k] = 2 * kbox[k] + 1;
    }
    out.fields_complete = window_deficit(eta_a, mu.generators, window) == 0;
    for (size_t s = 0; s < mu.size(); s++) {
        PauliColumn f = PauliColumn::identity(dim, out.q);
        std::vector<LaurentPoly> col = mu.generator(s);
        std::copy(col.begin(), col.end(), f.z.begin() + keep);
        out.ops.push_back(f);
    }
    return out;
}

}  // namespace

CodeSpec ClusterSpec::to_code(const std::string &name) const {
    return CodeSpec::make(name, num_qubits(), columns_to_map(dim, num_qubits(), stabilizers), "cluster model");
}

ClusterSpec build_cluster(const SymmetryModel &model) {
    model.validate();
    ClusterSpec c;
    c.dim = model.dim;
    c.matter_q = model.matter_q;
    c.gauge_q = model.num_terms();
    c.eta = model.eta;
    const size_t Q = c.matter_q;
    const size_t T = c.gauge_q;
    for (size_t q = 0; q < Q; q++) {
        PauliColumn s = PauliColumn::identity(c.dim, Q + T);
        s.x[q] = LaurentPoly::one(c.dim);
        for (size_t t = 0; t < T; t++) {
            s.z[Q + t] = c.eta.at(q, t).antipode();
        }
        c.stabilizers.push_back(s);
    }
    for (size_t t = 0; t < T; t++) {
        PauliColumn s = PauliColumn::identity(c.dim, Q + T);
        s.x[Q + t] = LaurentPoly::one(c.dim);
        for (size_t q = 0; q < Q; q++) {
            s.z[q] = c.eta.at(q, t);
        }
        c.stabilizers.push_back(s);
    }
    for (size_t i = 0; i < c.stabilizers.size(); i++) {
        for (size_t j = i; j < c.stabilizers.size(); j++) {
            if (!symplectic_pair(c.stabilizers[i], c.stabilizers[j]).is_zero()) {
                throw std::logic_error("cluster stabilizers " + std::to_string(i) + " and " + std::to_string(j) +
                                       " anticommute");
            }
        }
    }
    return c;
}

PauliColumn cz_layer(const PauliColumn &op, const GeneratorMap &adjacency, size_t a, size_t b) {
    const size_t na = adjacency.rows();
    const size_t nb = adjacency.cols();
    if (a + na > op.q || b + nb > op.q) {
        throw std::invalid_argument("CZ blocks exceed the operator layout");
    }
    std::vector<LaurentPoly> za = apply_map(adjacency, slice(op.x, b, nb));
    std::vector<LaurentPoly> zb = apply_map(dagger(adjacency), slice(op.x, a, na));
    PauliColumn out = op;
    for (size_t k = 0; k < na; k++) {
        out.z[a + k] += za[k];
    }
    for (size_t k = 0; k < nb; k++) {
        out.z[b + k] += zb[k];
    }
    return out;
}

PauliColumn cz_conjugate(const ClusterSpec &c, const PauliColumn &op) {
    return cz_layer(op, c.eta, 0, c.matter_q);
}

bool sre_witness(const ClusterSpec &c) {
    for (size_t i = 0; i < c.stabilizers.size(); i++) {
        PauliColumn expected = PauliColumn::single_x(c.dim, c.num_qubits(), i, zero_exponent(c.dim));
        if (cz_conjugate(c, c.stabilizers[i]) != expected) {
            return false;
        }
    }
    return true;
}

std::string SymmetryReport::str() const {
    std::ostringstream os;
    os << "torus " << shape.str() << "\n";
    os << "matter X symmetries: " << matter_dim << " (ker eta^dagger: " << matter_expected << ")\n";
    os << "gauge X symmetries: " << gauge_dim << " (ker eta: " << gauge_expected
       << ", ker mu^dagger: " << gauge_flux_count << ")\n";
    os << (matches() ? "match" : "MISMATCH") << "\n";
    return os.str();
}

SymmetryReport inherited_symmetries(const ClusterSpec &c, const TorusShape &shape) {
    if (shape.dim() != c.dim) {
        throw std::invalid_argument("torus dimension does not match the cluster");
    }
    SymmetryReport r;
    r.shape = shape;
    const size_t Q = c.matter_q;
    const size_t T = c.gauge_q;
    const size_t n = shape.num_sites();
    GeneratorMap sigma = columns_to_map(c.dim, Q + T, c.stabilizers);
    // Z block rows of each sublattice; X(g) commutes iff g·(column translate) = 0.
    GeneratorMap z_matter = sigma.rows_slice(Q + T, Q + T + Q);
    GeneratorMap z_gauge = sigma.rows_slice(Q + T + Q, 2 * (Q + T));
    r.matter_dim = Q * n - rank(instantiate(z_matter, shape));
    r.gauge_dim = T * n - rank(instantiate(z_gauge, shape));
    r.matter_expected = Q * n - rank(instantiate(dagger(c.eta), shape));
    r.gauge_expected = T * n - rank(instantiate(c.eta, shape));
    KernelBasis mu = bounded_kernel(c.eta, default_box(c.eta));
    r.gauge_flux_count = mu.size() ? T * n - rank(instantiate(dagger(mu.generators), shape)) : T * n;
    return r;
}

Sublattice parse_sublattice(const std::string &text) {
    if (text == "matter") {
        return Sublattice::matter;
    }
    if (text == "gauge") {
        return Sublattice::gauge;
    }
    if (text == "both") {
        return Sublattice::both;
    }
    throw std::invalid_argument("unknown sublattice '" + text + "'");
}

CodeSpec gauge_sublattice(const ClusterSpec &c, Sublattice which, std::optional<Exponent> box) {
    const size_t Q = c.matter_q;
    Substitution s;
    std::string name;
    bool complete = true;
    switch (which) {
    case Sublattice::matter:
        s = substitute(c.stabilizers, c.dim, c.num_qubits(), 0, c.eta, box);
        complete = s.fields_complete;
        name = "cluster-gauged-matter";
        break;
    case Sublattice::gauge:
        s = substitute(c.stabilizers, c.dim, c.num_qubits(), Q, dagger(c.eta), box);
        complete = s.fields_complete;
        name = "cluster-gauged-gauge";
        break;
    case Sublattice::both: {
        Substitution first = substitute(c.stabilizers, c.dim, c.num_qubits(), 0, c.eta, box);
        s = substitute(first.ops, c.dim, first.q, 0, dagger(c.eta), box);
        complete = first.fields_complete && s.fields_complete;
        name = "cluster-gauged-both";
        break;
    }
    }
    std::string notes = complete ? "possibly SET" : "possibly SET; flux fields not locally complete";
    CodeSpec out = CodeSpec::make(name, s.q, columns_to_map(c.dim, s.q, s.ops), notes);
    StabilizerReport rep = verify_stabilizer(out);
    if (!rep.commuting) {
        throw std::logic_error("sublattice gauging produced anticommuting terms: " + rep.str());
    }
    return out;
}

std::string SelfDualityReport::str() const {
    std::ostringstream os;
    os << "layout: " << (layout_ok ? "ok" : "mismatch") << "\n";
    os << "stabilizers: " << (stabilizers_match ? "match" : "mismatch") << "\n";
    os << "flux fields (" << extra_fields << "): " << (fields_generated ? "generated" : "NOT generated") << "\n";
    return os.str();
}

SelfDualityReport self_duality_check(const ClusterSpec &c, std::optional<Exponent> box) {
    SelfDualityReport r;
    const size_t Q = c.matter_q;
    const size_t T = c.gauge_q;
    CodeSpec both = gauge_sublattice(c, Sublattice::both, box);
    r.layout_ok = both.q == Q + T && both.num_generators() >= Q + T;
    if (!r.layout_ok) {
        return r;
    }
    // (matter partners T, gauge partners Q) → (Q, T), then X ↔ Z.
    std::vector<PauliColumn> mapped;
    for (size_t g = 0; g < both.num_generators(); g++) {
        PauliColumn op = both.generator(g);
        PauliColumn out = PauliColumn::identity(c.dim, Q + T);
        for (size_t k = 0; k < Q; k++) {
            out.x[k] = op.z[T + k];
            out.z[k] = op.x[T + k];
        }
        for (size_t k = 0; k < T; k++) {
            out.x[Q + k] = op.z[k];
            out.z[Q + k] = op.x[k];
        }
        mapped.push_back(out);
    }
    GeneratorMap original = columns_to_map(c.dim, Q + T, c.stabilizers);
    GeneratorMap head = columns_to_map(c.dim, Q + T, {mapped.begin(), mapped.begin() + Q + T});
    r.stabilizers_match = equal_up_to_translation(original, head, true);
    r.extra_fields = mapped.size() - (Q + T);
    r.fields_generated = true;
    for (size_t i = Q + T; i < mapped.size(); i++) {
        std::vector<LaurentPoly> col = mapped[i].x;
        col.insert(col.end(), mapped[i].z.begin(), mapped[i].z.end());
        if (!preimage(original, col)) {
            r.fields_generated = false;
        }
    }
    return r;
}

}  // namespace tistab
