#include "qext/quadform.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qext/parallel.hpp"

namespace qext {

std::int64_t grid_size(std::int64_t q, int d) {
    if (d < 1) fail(Errc::DimensionMismatch, "dimension must be >= 1");
    std::int64_t size = 1;
    for (int k = 0; k < d; ++k) {
        if (size > kGridBudget / q) {
            fail(Errc::GridTooLarge, "q^d exceeds the grid budget of 1e8");
        }
        size *= q;
    }
    return size;
}

std::int64_t encode_point(std::int64_t q, const ModVector& x) {
    std::int64_t idx = 0;
    for (Eigen::Index k = 0; k < x.size(); ++k) idx = idx * q + x[k];
    return idx;
}

ModVector decode_point(std::int64_t q, int d, std::int64_t index) {
    ModVector x(d);
    for (int k = d - 1; k >= 0; --k) {
        x[k] = index % q;
        index /= q;
    }
    return x;
}

QuadraticForm make_form(const PrimeField& f, ModMatrix a) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        fail(Errc::DimensionMismatch, "coefficient matrix must be square");
    }
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            a(i, j) = f.reduce(a(i, j));
        }
    }
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
            if (a(i, j) != a(j, i)) {
                fail(Errc::DimensionMismatch, "coefficient matrix must be symmetric");
            }
        }
    }
    return QuadraticForm{&f, std::move(a)};
}

QuadraticForm diagonal_matrix_form(const PrimeField& f, const ModVector& coeffs) {
    ModMatrix a = ModMatrix::Zero(coeffs.size(), coeffs.size());
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) a(k, k) = f.reduce(coeffs[k]);
    return QuadraticForm{&f, std::move(a)};
}

std::int64_t evaluate(const QuadraticForm& form, const ModVector& x) {
    if (x.size() != form.a.rows()) {
        fail(Errc::DimensionMismatch, "point dimension does not match the form");
    }
    const PrimeField& f = *form.field;
    std::int64_t acc = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        std::int64_t row = 0;
        for (Eigen::Index j = 0; j < x.size(); ++j) {
            row = f.add(row, f.mul(form.a(i, j), x[j]));
        }
        acc = f.add(acc, f.mul(x[i], row));
    }
    return acc;
}

std::int64_t det_mod(const PrimeField& f, ModMatrix a) {
    const Eigen::Index n = a.rows();
    std::int64_t det = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (f.reduce(a(r, col)) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            det = f.neg(det);
        }
        std::int64_t p = f.reduce(a(col, col));
        det = f.mul(det, p);
        std::int64_t pinv = f.inv(p);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            std::int64_t factor = f.mul(f.reduce(a(r, col)), pinv);
            if (factor == 0) continue;
            for (Eigen::Index c = col; c < n; ++c) {
                a(r, c) = f.sub(a(r, c), f.mul(factor, a(col, c)));
            }
        }
    }
    return det;
}

bool is_nondegenerate(const QuadraticForm& form) {
    return det_mod(*form.field, form.a) != 0;
}

namespace {

// A <- E^T A E and P <- P E for the elementary column substitution E.
void congruence_add(const PrimeField& f, ModMatrix& a, ModMatrix& p, Eigen::Index dst,
                    Eigen::Index src, std::int64_t factor) {
    const Eigen::Index n = a.rows();
    // column op: col_dst += factor * col_src, then the same row op.
    for (Eigen::Index r = 0; r < n; ++r) a(r, dst) = f.add(a(r, dst), f.mul(factor, a(r, src)));
    for (Eigen::Index c = 0; c < n; ++c) a(dst, c) = f.add(a(dst, c), f.mul(factor, a(src, c)));
    for (Eigen::Index r = 0; r < n; ++r) p(r, dst) = f.add(p(r, dst), f.mul(factor, p(r, src)));
}

void congruence_swap(ModMatrix& a, ModMatrix& p, Eigen::Index i, Eigen::Index k) {
    a.col(i).swap(a.col(k));
    a.row(i).swap(a.row(k));
    p.col(i).swap(p.col(k));
}

}  // namespace

DiagonalForm diagonalize(const QuadraticForm& form) {
    const PrimeField& f = *form.field;
    const Eigen::Index n = form.a.rows();
    ModMatrix a = form.a;
    ModMatrix p = ModMatrix::Identity(n, n);

    for (Eigen::Index i = 0; i < n; ++i) {
        // Ensure a nonzero pivot at (i, i): prefer the smallest diagonal entry
        // of the active block; otherwise manufacture one from an off-diagonal
        // entry via x_k -> x_k + x_l (valid since char != 2).
        if (a(i, i) == 0) {
            Eigen::Index diag = -1;
            for (Eigen::Index k = i + 1; k < n && diag < 0; ++k) {
                if (a(k, k) != 0) diag = k;
            }
            if (diag < 0) {
                Eigen::Index off_k = -1, off_l = -1;
                for (Eigen::Index k = i; k < n && off_k < 0; ++k) {
                    for (Eigen::Index l = k + 1; l < n; ++l) {
                        if (a(k, l) != 0) {
                            off_k = k;
                            off_l = l;
                            break;
                        }
                    }
                }
                if (off_k < 0) break;  // active block is zero: degenerate tail
                congruence_add(f, a, p, off_k, off_l, 1);  // makes a(k,k) = 2*a(k,l)
                diag = off_k;
            }
            if (diag != i) congruence_swap(a, p, i, diag);
        }
        std::int64_t pivot_inv = f.inv(a(i, i));
        for (Eigen::Index r = i + 1; r < n; ++r) {
            if (a(i, r) == 0) continue;
            congruence_add(f, a, p, r, i, f.neg(f.mul(a(i, r), pivot_inv)));
        }
    }

    DiagonalForm result;
    result.coeffs = a.diagonal();
    result.basis = std::move(p);
    return result;
}

bool Surface::contains(std::int64_t encoded) const {
    return std::binary_search(points.begin(), points.end(), encoded);
}

Surface enumerate_surface(const QuadraticForm& form, std::int64_t j) {
    const PrimeField& f = *form.field;
    if (!is_nondegenerate(form)) fail(Errc::DegenerateForm, "surface of a degenerate form");
    std::int64_t level = f.reduce(j);
    if (level == 0) fail(Errc::ZeroLevel, "level j must be nonzero");
    const int d = form.dim();
    const std::int64_t q = f.q();
    grid_size(q, d);

    // One slice per leading coordinate; slices are concatenated in order, so
    // the encoded points come out ascending (= lexicographic).
    std::vector<std::vector<std::int64_t>> slices(static_cast<std::size_t>(q));
    const std::int64_t slice_size = grid_size(q, d) / q;

    parallel_for(static_cast<std::size_t>(q), 0, [&](std::size_t x1) {
        std::vector<std::int64_t>& out = slices[x1];
        ModVector x = ModVector::Zero(d);
        x[0] = static_cast<std::int64_t>(x1);
        if (d == 1) {
            if (evaluate(form, x) == level) out.push_back(encode_point(q, x));
            return;
        }
        const std::int64_t prefixes = lines / q;  // q^{d-2} prefixes of x_2..x_{d-1}
        const std::int64_t add = form.a(d - 1, d - 1);
        for (std::int64_t pfx = 0; pfx < prefixes; ++pfx) {
            std::int64_t rest = pfx;
            for (int k = d - 2; k >= 1; --k) {
                x[k] = rest % q;
                rest /= q;
            }
            x[d - 1] = 0;
            // Q(x + s*e_d) = c0 + c1*s + add*s^2 with c1 = 2 * (A x)_d.
            std::int64_t c0 = evaluate(form, x);
            std::int64_t c1 = 0;
            for (int k = 0; k < d - 1; ++k) c1 = f.add(c1, f.mul(form.a(d - 1, k), x[k]));
            c1 = f.mul(2, c1);
            std::int64_t base = encode_point(q, x);
            for (std::int64_t s = 0; s < q; ++s) {
                std::int64_t value = f.add(c0, f.mul(s, f.add(c1, f.mul(add, s))));
                if (value == level) out.push_back(base + s);
            }
        }
    });

    Surface surface;
    surface.form = form;
    surface.level = level;
    for (const auto& slice : slices) {
        surface.points.insert(surface.points.end(), slice.begin(), slice.end());
    }
    return surface;
}

std::int64_t pairsum_ceiling(std::int64_t q, int d) {
    std::int64_t power = 1;
    for (int k = 0; k < d - 2; ++k) power *= q;
    return 2 * power;
}

namespace {

QuadraticForm parse_diag_spec(const PrimeField& f, int d, const std::string& body) {
    ModVector coeffs(d);
    if (body == "ones") {
        coeffs.setOnes();
        return diagonal_matrix_form(f, coeffs);
    }
    std::stringstream ss(body);
    std::string item;
    Eigen::Index k = 0;
    while (std::getline(ss, item, ',')) {
        if (k >= d) fail(Errc::ConfigError, "diag spec has more than d entries");
        coeffs[k++] = f.reduce(std::stoll(item));
    }
    if (k != d) fail(Errc::ConfigError, "diag spec needs exactly d entries");
    return diagonal_matrix_form(f, coeffs);
}

}  // namespace

QuadraticForm random_nondegenerate_form(const PrimeField& f, int d, Rng& rng) {
    for (;;) {
        ModMatrix a(d, d);
        for (int i = 0; i < d; ++i) {
            for (int k = i; k < d; ++k) {
                std::int64_t v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(f.q())));
                a(i, k) = v;
                a(k, i) = v;
            }
        }
        QuadraticForm form{&f, std::move(a)};
        if (is_nondegenerate(form)) return form;
    }
}

std::vector<std::pair<std::string, QuadraticForm>> expand_form_specs(
    const PrimeField& f, int d, const std::vector<std::string>& specs, std::uint64_t seed) {
    std::vector<std::pair<std::string, QuadraticForm>> forms;
    for (const std::string& spec : specs) {
        std::size_t colon = spec.find(':');
        if (colon == std::string::npos) fail(Errc::ConfigError, "bad form spec '" + spec + "'");
        std::string kind = spec.substr(0, colon);
        std::string body = spec.substr(colon + 1);
        if (kind == "diag") {
            forms.emplace_back(spec, parse_diag_spec(f, d, body));
        } else if (kind == "matrix") {
            forms.emplace_back(spec, make_form(f, load_form_matrix(body)));
        } else if (kind == "random") {
            int count = 0;
            try {
                count = std::stoi(body);
            } catch (const std::logic_error&) {
                fail(Errc::ConfigError, "bad random form count '" + body + "'");
            }
            for (int i = 0; i < count; ++i) {
                Rng rng(Rng::mix(seed, Rng::mix(static_cast<std::uint64_t>(f.q()),
                                                Rng::mix(static_cast<std::uint64_t>(d),
                                                         static_cast<std::uint64_t>(i)))));
                forms.emplace_back("random#" + std::to_string(i),
                                   random_nondegenerate_form(f, d, rng));
            }
        } else {
            fail(Errc::ConfigError, "unknown form spec kind '" + kind + "'");
        }
    }
    return forms;
}

std::string format_form_matrix(const ModMatrix& a) {
    std::string text;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (j) text += ' ';
            text += std::to_string(a(i, j));
        }
        text += '\n';
    }
    return text;
}

ModMatrix parse_form_matrix(const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::vector<std::int64_t> row;
        std::int64_t v;
        while (ls >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(Errc::ConfigError, "empty matrix file");
    ModMatrix a(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) fail(Errc::ConfigError, "ragged matrix file");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return a;
}

ModMatrix load_form_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ConfigError, "cannot open matrix file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_form_matrix(buffer.str());
}

void save_form_matrix(const std::string& path, const ModMatrix& a) {
    std::ofstream out(path);
    if (!out) fail(Errc::ConfigError, "cannot write matrix file '" + path + "'");
    out << format_form_matrix(a);
}

}  // namespace qext
