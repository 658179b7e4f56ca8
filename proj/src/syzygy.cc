#include "tistab/syzygy.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tistab {

namespace {

std::vector<Exponent> box_points(const Exponent &lo, const Exponent &hi) {
    std::vector<Exponent> pts;
    for (size_t k = 0; k < lo.size(); k++) {
        if (hi[k] < lo[k]) {
            return pts;
        }
    }
    Exponent e = lo;
    while (true) {
        pts.push_back(e);
        size_t k = e.size();
        while (k-- > 0) {
            if (e[k] < hi[k]) {
                e[k]++;
                break;
            }
            e[k] = lo[k];
        }
        if (k == size_t(-1)) {
            break;
        }
    }
    return pts;
}

// Linear system for columns p of m.cols() polynomials supported on `points`:
// unknown (c, point) has index c * points.size() + point_index.
struct BoxSystem {
    std::vector<Exponent> points;
    std::map<std::pair<size_t, Exponent>, size_t> equation_index;
    Gf2Matrix matrix;

    size_t num_unknowns() const { return matrix.cols(); }

    std::vector<LaurentPoly> decode(const BitVec &v, size_t cols, size_t dim) const {
        std::vector<std::vector<Exponent>> terms(cols);
        for (size_t c = 0; c < cols; c++) {
            for (size_t i = 0; i < points.size(); i++) {
                if (v.get(c * points.size() + i)) {
                    terms[c].push_back(points[i]);
                }
            }
        }
        std::vector<LaurentPoly> out;
        for (auto &t : terms) {
            out.push_back(LaurentPoly::from_terms(dim, std::move(t)));
        }
        return out;
    }
};

BoxSystem build_system(const GeneratorMap &m, const Exponent &lo, const Exponent &hi) {
    BoxSystem sys;
    sys.points = box_points(lo, hi);
    const size_t np = sys.points.size();
    std::vector<std::tuple<size_t, size_t, Exponent>> entries;
    for (size_t c = 0; c < m.cols(); c++) {
        for (size_t i = 0; i < np; i++) {
            for (size_t r = 0; r < m.rows(); r++) {
                for (const auto &t : m.at(r, c).terms()) {
                    entries.emplace_back(r, c * np + i, t + sys.points[i]);
                }
            }
        }
    }
    for (const auto &[r, var, e] : entries) {
        sys.equation_index.try_emplace({r, e}, 0);
    }
    size_t k = 0;
    for (auto &kv : sys.equation_index) {
        kv.second = k++;
    }
    sys.matrix = Gf2Matrix(sys.equation_index.size(), m.cols() * np);
    for (const auto &[r, var, e] : entries) {
        sys.matrix.flip(sys.equation_index.at({r, e}), var);
    }
    return sys;
}

BitVec encode(const std::vector<LaurentPoly> &col, const std::vector<Exponent> &points) {
    BitVec v(col.size() * points.size());
    for (size_t c = 0; c < col.size(); c++) {
        for (const auto &t : col[c].terms()) {
            auto it = std::lower_bound(points.begin(), points.end(), t);
            if (it == points.end() || *it != t) {
                throw std::logic_error("term outside the box");
            }
            v.set(c * points.size() + size_t(it - points.begin()), true);
        }
    }
    return v;
}

std::optional<std::pair<Exponent, Exponent>> column_box(const std::vector<LaurentPoly> &col, size_t dim) {
    return GeneratorMap::from_columns(dim, col.size(), {col}).support_box();
}

// Coefficient vectors of every translate of the generators that fits in [0, box].
std::vector<BitVec> fitting_translates(
    const std::vector<std::vector<LaurentPoly>> &gens, const Exponent &box, const std::vector<Exponent> &points,
    size_t dim) {
    std::vector<BitVec> out;
    Exponent zero = zero_exponent(dim);
    for (const auto &g : gens) {
        auto gb = column_box(g, dim);
        if (!gb) {
            continue;
        }
        Exponent tlo = -gb->first;
        Exponent thi = box - gb->second;
        for (const auto &t : box_points(tlo, thi)) {
            std::vector<LaurentPoly> moved;
            for (const auto &p : g) {
                moved.push_back(p.shifted(t));
            }
            out.push_back(encode(moved, points));
        }
    }
    return out;
}

size_t volume(const std::vector<LaurentPoly> &col, size_t dim) {
    auto b = column_box(col, dim);
    if (!b) {
        return 0;
    }
    size_t v = 1;
    for (size_t k = 0; k < dim; k++) {
        v *= size_t(b->second[k] - b->first[k] + 1);
    }
    return v;
}

std::string column_text(const std::vector<LaurentPoly> &col) {
    std::string s;
    for (const auto &p : col) {
        s += p.str() + ";";
    }
    return s;
}

}  // namespace

Exponent default_box(const GeneratorMap &m) {
    Exponent box(m.dim(), 1);
    if (auto b = m.support_box()) {
        for (size_t k = 0; k < m.dim(); k++) {
            box[k] = std::max<int32_t>(1, b->second[k] - b->first[k]);
        }
    }
    return box;
}

KernelBasis bounded_kernel(const GeneratorMap &m, const Exponent &box) {
    if (box.size() != m.dim()) {
        throw std::invalid_argument("box dimension does not match map dimension");
    }
    for (int32_t b : box) {
        if (b < 0) {
            throw std::invalid_argument("empty box: extents must be non-negative");
        }
    }
    const size_t dim = m.dim();
    const size_t cols = m.cols();
    std::vector<Exponent> sub_boxes = box_points(zero_exponent(dim), box);
    std::stable_sort(sub_boxes.begin(), sub_boxes.end(), [](const Exponent &a, const Exponent &b) {
        auto vol = [](const Exponent &e) {
            size_t v = 1;
            for (int32_t x : e) {
                v *= size_t(x + 1);
            }
            return v;
        };
        return vol(a) < vol(b);
    });

    std::vector<std::vector<LaurentPoly>> accepted;
    for (const Exponent &sub : sub_boxes) {
        BoxSystem sys = build_system(m, zero_exponent(dim), sub);
        std::vector<BitVec> kernel = nullspace(sys.matrix);
        if (kernel.empty()) {
            continue;
        }
        std::vector<BitVec> span = fitting_translates(accepted, sub, sys.points, dim);
        size_t span_rank_now = span_rank(span, sys.num_unknowns());
        if (span_rank_now == kernel.size()) {
            continue;
        }
        std::vector<std::vector<LaurentPoly>> candidates;
        for (const auto &v : kernel) {
            candidates.push_back(sys.decode(v, cols, dim));
        }
        std::stable_sort(candidates.begin(), candidates.end(), [&](const auto &a, const auto &b) {
            size_t ta = 0;
            size_t tb = 0;
            for (const auto &p : a) {
                ta += p.size();
            }
            for (const auto &p : b) {
                tb += p.size();
            }
            if (ta != tb) {
                return ta < tb;
            }
            size_t va = volume(a, dim);
            size_t vb = volume(b, dim);
            if (va != vb) {
                return va < vb;
            }
            return column_text(a) < column_text(b);
        });
        for (const auto &cand : candidates) {
            if (span_rank_now == kernel.size()) {
                break;
            }
            span.push_back(encode(cand, sys.points));
            size_t r = span_rank(span, sys.num_unknowns());
            if (r > span_rank_now) {
                span_rank_now = r;
                accepted.push_back(cand);
                // Later candidates may also be covered by translates of this one.
                span.pop_back();
                auto more = fitting_translates({cand}, sub, sys.points, dim);
                span.insert(span.end(), more.begin(), more.end());
                span_rank_now = span_rank(span, sys.num_unknowns());
            } else {
                span.pop_back();
            }
        }
    }

    KernelBasis basis;
    basis.parent = m;
    basis.box = box;
    basis.generators = GeneratorMap::from_columns(dim, cols, accepted);
    return basis;
}

std::string CertificationReport::str() const {
    std::ostringstream out;
    out << "torus " << shape.str() << ": kernel dim=" << kernel_dim << " span dim=" << span_dim
        << " deficit=" << deficit << " contained=" << (contained ? "yes" : "no")
        << " locally complete=" << (locally_complete ? "yes" : "no") << " -> "
        << (passed() ? "certified" : "not certified");
    return out.str();
}

size_t window_deficit(const GeneratorMap &m, const GeneratorMap &generators, const Exponent &window) {
    const size_t dim = m.dim();
    BoxSystem sys = build_system(m, zero_exponent(dim), window);
    size_t kernel_dim = sys.num_unknowns() - rank(sys.matrix);
    std::vector<std::vector<LaurentPoly>> gens;
    for (size_t i = 0; i < generators.cols(); i++) {
        gens.push_back(generators.column(i));
    }
    size_t span = span_rank(fitting_translates(gens, window, sys.points, dim), sys.num_unknowns());
    return kernel_dim - span;
}

CertificationReport certify_on_torus(KernelBasis &basis, const TorusShape &shape) {
    if (shape.dim() != basis.parent.dim()) {
        throw std::invalid_argument("torus dimension does not match kernel basis");
    }
    for (size_t k = 0; k < shape.dim(); k++) {
        if (shape.lengths()[k] <= 2 * basis.box[k]) {
            throw std::invalid_argument(
                "torus length " + std::to_string(shape.lengths()[k]) + " must exceed twice the box extent " +
                std::to_string(basis.box[k]));
        }
    }
    CertificationReport rep;
    rep.shape = shape;
    Gf2Matrix parent = instantiate(basis.parent, shape);
    rep.kernel_dim = parent.cols() - rank(parent);
    Gf2Matrix gens = instantiate(basis.generators, shape);
    rep.span_dim = rank(gens);
    rep.contained = parent.multiply(gens).is_zero();
    rep.deficit = rep.kernel_dim >= rep.span_dim ? rep.kernel_dim - rep.span_dim : 0;
    rep.span_equals_kernel = rep.contained && rep.kernel_dim == rep.span_dim;
    Exponent window = basis.box;
    for (auto &w : window) {
        w = 2 * w + 1;
    }
    rep.locally_complete = window_deficit(basis.parent, basis.generators, window) == 0;
    if (rep.passed()) {
        basis.certified_tori.push_back(shape);
    }
    return rep;
}

std::optional<std::vector<LaurentPoly>> bounded_preimage(
    const GeneratorMap &m, const std::vector<LaurentPoly> &target, const Exponent &lo, const Exponent &hi) {
    if (target.size() != m.rows()) {
        throw std::invalid_argument("target length does not match map rows");
    }
    BoxSystem sys = build_system(m, lo, hi);
    BitVec rhs(sys.matrix.rows());
    for (size_t r = 0; r < target.size(); r++) {
        for (const auto &t : target[r].terms()) {
            auto it = sys.equation_index.find({r, t});
            if (it == sys.equation_index.end()) {
                return std::nullopt;
            }
            rhs.set(it->second, true);
        }
    }
    auto x = solve(sys.matrix, rhs);
    if (!x) {
        return std::nullopt;
    }
    return sys.decode(*x, m.cols(), m.dim());
}

std::optional<std::vector<LaurentPoly>> preimage(const GeneratorMap &m, const std::vector<LaurentPoly> &target) {
    const size_t dim = m.dim();
    auto tb = column_box(target, dim);
    if (!tb) {
        return std::vector<LaurentPoly>(m.cols(), LaurentPoly(dim));
    }
    auto mb = m.support_box();
    if (!mb) {
        return std::nullopt;
    }
    const Exponent lo = tb->first - mb->second;
    const Exponent hi = tb->second - mb->first;
    // Small sub-boxes first, so that e.g. m·e_t comes back as e_t rather than
    // e_t plus some kernel element.
    std::vector<std::vector<std::pair<int32_t, int32_t>>> intervals(dim);
    size_t count = 1;
    for (size_t k = 0; k < dim; k++) {
        for (int32_t a = lo[k]; a <= hi[k]; a++) {
            for (int32_t b = a; b <= hi[k]; b++) {
                intervals[k].push_back({a, b});
            }
        }
        count *= intervals[k].size();
    }
    if (count > 4096) {
        return bounded_preimage(m, target, lo, hi);
    }
    std::vector<std::pair<Exponent, Exponent>> boxes;
    for (size_t idx = 0; idx < count; idx++) {
        Exponent a(dim), b(dim);
        size_t rest = idx;
        for (size_t k = 0; k < dim; k++) {
            auto [u, v] = intervals[k][rest % intervals[k].size()];
            rest /= intervals[k].size();
            a[k] = u;
            b[k] = v;
        }
        boxes.push_back({a, b});
    }
    auto vol = [&](const std::pair<Exponent, Exponent> &bx) {
        size_t v = 1;
        for (size_t k = 0; k < dim; k++) {
            v *= size_t(bx.second[k] - bx.first[k] + 1);
        }
        return v;
    };
    std::stable_sort(boxes.begin(), boxes.end(),
                     [&](const auto &a, const auto &b) { return vol(a) < vol(b); });
    for (const auto &[a, b] : boxes) {
        if (auto p = bounded_preimage(m, target, a, b)) {
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace tistab
