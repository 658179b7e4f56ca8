#include "tistab/io.h"

#include <fstream>
#include <sstream>

namespace tistab {

using nlohmann::json;

json poly_to_json(const LaurentPoly &p) {
    json out = json::array();
    for (const Exponent &e : p.terms()) {
        out.push_back(e);
    }
    return out;
}

LaurentPoly poly_from_json(const json &j, size_t dim) {
    if (!j.is_array()) {
        throw std::invalid_argument("polynomial must be a list of exponent vectors");
    }
    std::vector<Exponent> terms;
    for (const json &t : j) {
        if (!t.is_array() || t.size() != dim) {
            throw std::invalid_argument("exponent vector must have " + std::to_string(dim) + " entries");
        }
        Exponent e;
        for (const json &v : t) {
            if (!v.is_number_integer()) {
                throw std::invalid_argument("exponents must be integers");
            }
            e.push_back(v.get<int32_t>());
        }
        terms.push_back(e);
    }
    return LaurentPoly::from_terms(dim, terms);
}

json code_to_json(const CodeSpec &code) {
    json gens = json::array();
    for (size_t g = 0; g < code.num_generators(); g++) {
        PauliColumn p = code.generator(g);
        json x = json::array();
        json z = json::array();
        for (size_t k = 0; k < code.q; k++) {
            x.push_back(poly_to_json(p.x[k]));
            z.push_back(poly_to_json(p.z[k]));
        }
        gens.push_back({{"x_block", x}, {"z_block", z}});
    }
    return {{"name", code.name}, {"dim", code.dim},     {"q_per_site", code.q},
            {"css", code.css},   {"generators", gens}, {"notes", code.notes}};
}

CodeSpec code_from_json(const json &j) {
    try {
        if (!j.is_object()) {
            throw std::invalid_argument("code file must be a JSON object");
        }
        const std::string name = j.at("name").get<std::string>();
        const size_t dim = j.at("dim").get<size_t>();
        const size_t q = j.at("q_per_site").get<size_t>();
        const bool css = j.at("css").get<bool>();
        const std::string notes = j.value("notes", "");
        if (dim < 1) {
            throw std::invalid_argument("dim must be positive");
        }
        std::vector<PauliColumn> gens;
        for (const json &g : j.at("generators")) {
            const json &x = g.at("x_block");
            const json &z = g.at("z_block");
            if (!x.is_array() || !z.is_array() || x.size() != q || z.size() != q) {
                throw std::invalid_argument("each block must list q_per_site polynomials");
            }
            PauliColumn p = PauliColumn::identity(dim, q);
            for (size_t k = 0; k < q; k++) {
                p.x[k] = poly_from_json(x[k], dim);
                p.z[k] = poly_from_json(z[k], dim);
            }
            gens.push_back(p);
        }
        GeneratorMap sigma = GeneratorMap::zero(dim, 2 * q, gens.size());
        for (size_t c = 0; c < gens.size(); c++) {
            for (size_t k = 0; k < q; k++) {
                sigma.set(k, c, gens[c].x[k]);
                sigma.set(q + k, c, gens[c].z[k]);
            }
        }
        if (!css) {
            return CodeSpec::make(name, q, sigma, notes);
        }
        size_t n_x = 0;
        while (n_x < gens.size() && std::all_of(gens[n_x].z.begin(), gens[n_x].z.end(),
                                                [](const LaurentPoly &p) { return p.is_zero(); })) {
            n_x++;
        }
        CodeSpec code = CodeSpec::make_css(name, sigma.rows_slice(0, q).cols_slice(0, n_x),
                                           sigma.rows_slice(q, 2 * q).cols_slice(n_x, gens.size()), notes);
        code.validate();
        return code;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed code file: ") + e.what());
    }
}

std::string serialize_code(const CodeSpec &code) {
    return code_to_json(code).dump(2) + "\n";
}

CodeSpec parse_code(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return code_from_json(j);
}

CodeSpec load_code(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_code(ss.str());
}

void save_code(const CodeSpec &code, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << serialize_code(code);
}

}  // namespace tistab
