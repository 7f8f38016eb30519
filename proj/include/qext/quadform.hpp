#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qext/field.hpp"
#include "qext/rng.hpp"

namespace qext {

using ModMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using ModVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Grid budget shared by every operation that materializes F_q^d.
inline constexpr std::int64_t kGridBudget = 100'000'000;

/// q^d with the budget check; throws GridTooLarge.
std::int64_t grid_size(std::int64_t q, int d);

/// Row-major encoding of a point of F_q^d: x_1 is the most significant digit,
/// so ascending encodings are exactly lexicographic order.
std::int64_t encode_point(std::int64_t q, const ModVector& x);
ModVector decode_point(std::int64_t q, int d, std::int64_t index);

/// Symmetric coefficient matrix of Q(x) = sum_{i,j} a_ij x_i x_j over F_q.
struct QuadraticForm {
    const PrimeField* field = nullptr;
    ModMatrix a;

    int dim() const { return static_cast<int>(a.rows()); }
};

/// Validates symmetry, reduces entries to canonical residues.
QuadraticForm make_form(const PrimeField& f, ModMatrix a);
QuadraticForm diagonal_matrix_form(const PrimeField& f, const ModVector& coeffs);

std::int64_t evaluate(const QuadraticForm& form, const ModVector& x);

/// Determinant over F_q by Gaussian elimination.
std::int64_t det_mod(const PrimeField& f, ModMatrix a);

bool is_nondegenerate(const QuadraticForm& form);

/// Congruent diagonalization: basis^T * a * basis = diag(coeffs) over F_q.
/// For non-degenerate input every coefficient is nonzero; degenerate forms
/// yield zero coefficients.
struct DiagonalForm {
    ModVector coeffs;
    ModMatrix basis;
};

DiagonalForm diagonalize(const QuadraticForm& form);

/// Level set S_j = {x : Q(x) = j}, j != 0, with points stored sorted.
struct Surface {
    QuadraticForm form;
    std::int64_t level = 0;
    std::vector<std::int64_t> points;  // encoded, ascending == lexicographic

    const PrimeField& field() const { return *form.field; }
    int dim() const { return form.dim(); }
    std::int64_t cardinality() const { return static_cast<std::int64_t>(points.size()); }
    ModVector point(std::size_t i) const {
        return decode_point(field().q(), dim(), points[i]);
    }
    bool contains(std::int64_t encoded) const;
};

/// Exhaustive scan of F_q^d with incremental evaluation along the last axis.
/// Requires a non-degenerate form, j != 0, and q^d within the grid budget.
Surface enumerate_surface(const QuadraticForm& form, std::int64_t j);

/// 2*q^(d-2) rounded down -- the exact integer ceiling used for pair-sum
/// counts on d >= 2 surfaces.
std::int64_t pairsum_ceiling(std::int64_t q, int d);

// --- form mini-language -------------------------------------------------
//
//   diag:a1,...,ad     diagonal coefficients (either d entries or "ones")
//   matrix:<path>      d rows of d space-separated residues
//   random:<count>     seeded non-degenerate symmetric matrices
//
// expand_form_specs yields (form_id, form) pairs in deterministic order.

std::vector<std::pair<std::string, QuadraticForm>> expand_form_specs(
    const PrimeField& f, int d, const std::vector<std::string>& specs, std::uint64_t seed);

QuadraticForm random_nondegenerate_form(const PrimeField& f, int d, Rng& rng);

ModMatrix load_form_matrix(const std::string& path);
void save_form_matrix(const std::string& path, const ModMatrix& a);
std::string format_form_matrix(const ModMatrix& a);
ModMatrix parse_form_matrix(const std::string& text);

}  // namespace qext
