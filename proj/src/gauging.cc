#include "tistab/gauging.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace tistab {

namespace {

Exponent box_or_default(const GeneratorMap &m, const std::optional<Exponent> &box) {
    return box ? *box : default_box(m);
}

std::vector<std::string> column_texts(const GeneratorMap &m) {
    GeneratorMap n = normalize_columns(m, true);
    std::vector<std::string> out;
    for (size_t c = 0; c < n.cols(); c++) {
        std::string s = "(";
        for (size_t r = 0; r < n.rows(); r++) {
            s += (r ? ", " : "") + n.at(r, c).str();
        }
        out.push_back(s + ")");
    }
    return out;
}

// Multiset difference of normalized columns, tagged with the direction.
void record_differences(const std::string &route, const std::string &block, const GeneratorMap &expected,
                        const GeneratorMap &got, std::vector<std::string> &out) {
    if (expected.rows() != got.rows()) {
        out.push_back(route + " " + block + ": row count " + std::to_string(got.rows()) + " vs " +
                      std::to_string(expected.rows()));
        return;
    }
    std::map<std::string, int> count;
    for (const auto &s : column_texts(expected)) {
        count[s]++;
    }
    for (const auto &s : column_texts(got)) {
        count[s]--;
    }
    for (const auto &[text, n] : count) {
        if (n > 0) {
            out.push_back(route + " " + block + ": missing " + text);
        } else if (n < 0) {
            out.push_back(route + " " + block + ": extra " + text);
        }
    }
}

bool compare_css(const std::string &route, const CodeSpec &expected, const CodeSpec &got,
                 std::vector<std::string> &out) {
    size_t before = out.size();
    if (expected.q != got.q) {
        out.push_back(route + ": qubits per site " + std::to_string(got.q) + " vs " + std::to_string(expected.q));
        return false;
    }
    if (!equal_up_to_translation(expected.sigma_x(), got.sigma_x(), true)) {
        record_differences(route, "sigma_x", expected.sigma_x(), got.sigma_x(), out);
    }
    if (!equal_up_to_translation(expected.sigma_z(), got.sigma_z(), true)) {
        record_differences(route, "sigma_z", expected.sigma_z(), got.sigma_z(), out);
    }
    return out.size() == before;
}

CodeSpec hadamard_css(const CodeSpec &code) {
    return CodeSpec::make_css(code.name, code.sigma_z(), code.sigma_x(), code.notes);
}

}  // namespace

void SymmetryModel::validate() const {
    if (eta.dim() != dim || eta.rows() != matter_q) {
        throw std::invalid_argument("eta must have one row per matter qubit");
    }
    if (phi.cols() > 0 && (phi.dim() != dim || phi.rows() != matter_q)) {
        throw std::invalid_argument("phi must have one row per matter qubit");
    }
    for (size_t t = 0; t < eta.cols(); t++) {
        if (eta.column_map(t).is_zero()) {
            throw std::invalid_argument("constraint term " + std::to_string(t) + " is empty");
        }
    }
    if (phi.cols() > 0 && !compose(dagger(phi), eta).is_zero()) {
        throw std::invalid_argument("symmetry does not commute with the constraint terms");
    }
}

SymmetryModel SymmetryModel::from_code(const CodeSpec &code, std::optional<Exponent> box) {
    code.validate();
    if (!code.css || code.n_x != 0) {
        throw std::invalid_argument("symmetry model needs a Z-only code");
    }
    SymmetryModel m;
    m.dim = code.dim;
    m.matter_q = code.q;
    m.eta = code.sigma_z();
    GeneratorMap eta_dag = dagger(m.eta);
    m.phi = bounded_kernel(eta_dag, box_or_default(eta_dag, box)).generators;
    m.notes = code.notes;
    m.validate();
    return m;
}

CodeSpec SymmetryModel::to_code(const std::string &name) const {
    return CodeSpec::make_css(name, GeneratorMap::zero(dim, matter_q, 0), eta, notes);
}

GaugingComplex gauge(const SymmetryModel &model, std::optional<Exponent> box, const std::string &name) {
    model.validate();
    GaugingComplex g;
    g.source = model;
    g.mu = bounded_kernel(model.eta, box_or_default(model.eta, box));
    Exponent window(model.dim);
    for (size_t k = 0; k < model.dim; k++) {
        window[k] = 2 * g.mu.box[k] + 1;
    }
    g.mu_locally_complete = window_deficit(model.eta, g.mu.generators, window) == 0;
    std::string notes = g.mu_locally_complete ? "" : "flux generators not locally complete";
    GeneratorMap sigma_z = g.mu.size() ? g.mu.generators : GeneratorMap::zero(model.dim, model.num_terms(), 0);
    g.code = CodeSpec::make_css(name, dagger(model.eta), sigma_z, notes);
    return g;
}

SymmetryModel ungauge_css(const CodeSpec &code, std::optional<Exponent> box) {
    code.validate();
    if (!code.css) {
        throw std::invalid_argument("ungauging needs a CSS code");
    }
    if (!verify_stabilizer(code).commuting) {
        throw std::invalid_argument("code does not commute");
    }
    if (code.n_x == 0) {
        throw std::invalid_argument("code has no X stabilizers to ungauge");
    }
    GeneratorMap sx = code.sigma_x();
    SymmetryModel m;
    m.dim = code.dim;
    m.matter_q = code.n_x;
    m.eta = dagger(sx);
    m.phi = bounded_kernel(sx, box_or_default(sx, box)).generators;
    m.notes = "ungauged " + code.name;
    m.validate();
    return m;
}

std::string DualityReport::str() const {
    std::ostringstream os;
    os << "x route: " << (x_route ? "ok" : "mismatch") << "\n";
    os << "z route: " << (z_route ? "ok" : "mismatch") << "\n";
    for (const auto &d : differences) {
        os << "  " << d << "\n";
    }
    return os.str();
}

DualityReport double_gauge_check(const CodeSpec &code, std::optional<Exponent> box) {
    DualityReport r;
    if (!code.css) {
        throw std::invalid_argument("double gauging needs a CSS code");
    }
    auto route = [&](const std::string &label, const CodeSpec &c) {
        if (c.n_x == 0) {
            r.differences.push_back(label + ": no stabilizers of this type");
            return false;
        }
        CodeSpec again = gauge(ungauge_css(c, box), box, c.name).code;
        return compare_css(label, c, again, r.differences);
    };
    r.x_route = route("x route", code);
    r.z_route = route("z route", hadamard_css(code));
    return r;
}

PauliColumn gauge_operator(const SymmetryModel &model, const PauliColumn &op) {
    if (op.q != model.matter_q || op.dim != model.dim) {
        throw std::invalid_argument("operator layout does not match the matter qubits");
    }
    const size_t T = model.num_terms();
    PauliColumn out = PauliColumn::identity(model.dim, T);
    out.x = apply_map(dagger(model.eta), op.x);
    bool has_z = std::any_of(op.z.begin(), op.z.end(), [](const LaurentPoly &p) { return !p.is_zero(); });
    if (has_z) {
        auto s = preimage(model.eta, op.z);
        if (!s) {
            throw NotSymmetricError("Z part is not a product of constraint terms");
        }
        out.z = *s;
    }
    return out;
}

PauliColumn embed_matter(const SymmetryModel &model, const PauliColumn &op) {
    if (op.q != model.matter_q) {
        throw std::invalid_argument("operator layout does not match the matter qubits");
    }
    PauliColumn out = PauliColumn::identity(model.dim, model.matter_q + model.num_terms());
    std::copy(op.x.begin(), op.x.end(), out.x.begin());
    std::copy(op.z.begin(), op.z.end(), out.z.begin());
    return out;
}

PauliColumn embed_gauge(const SymmetryModel &model, const PauliColumn &op) {
    if (op.q != model.num_terms()) {
        throw std::invalid_argument("operator layout does not match the gauge qubits");
    }
    PauliColumn out = PauliColumn::identity(model.dim, model.matter_q + model.num_terms());
    std::copy(op.x.begin(), op.x.end(), out.x.begin() + model.matter_q);
    std::copy(op.z.begin(), op.z.end(), out.z.begin() + model.matter_q);
    return out;
}

std::vector<PauliColumn> pi_generators(const SymmetryModel &model) {
    const size_t Q = model.matter_q;
    GeneratorMap eta_dag = dagger(model.eta);
    std::vector<PauliColumn> out;
    for (size_t q = 0; q < Q; q++) {
        PauliColumn p = PauliColumn::identity(model.dim, Q + model.num_terms());
        p.x[q] = LaurentPoly::one(model.dim);
        for (size_t t = 0; t < model.num_terms(); t++) {
            p.x[Q + t] = eta_dag.at(t, q);
        }
        out.push_back(p);
    }
    return out;
}

PauliColumn conjugate_by_disentangler(const SymmetryModel &model, const PauliColumn &op) {
    const size_t Q = model.matter_q;
    const size_t T = model.num_terms();
    if (op.q != Q + T || op.dim != model.dim) {
        throw std::invalid_argument("operator layout does not match matter plus gauge qubits");
    }
    std::vector<LaurentPoly> p_m(op.x.begin(), op.x.begin() + Q);
    std::vector<LaurentPoly> r_g(op.z.begin() + Q, op.z.end());
    std::vector<LaurentPoly> dx = apply_map(dagger(model.eta), p_m);
    std::vector<LaurentPoly> dz = apply_map(model.eta, r_g);
    PauliColumn out = op;
    for (size_t t = 0; t < T; t++) {
        out.x[Q + t] += dx[t];
    }
    for (size_t q = 0; q < Q; q++) {
        out.z[q] += dz[q];
    }
    return out;
}

}  // namespace tistab
