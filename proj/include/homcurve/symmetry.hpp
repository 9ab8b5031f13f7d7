#pragma once

// Linear symmetries of a binary form: the Lie algebra of infinitesimal
// symmetries (exact nullspace computation), finite symmetry checks, and the
// discrete group structure of the classified monomial forms.

#include <stdexcept>
#include <vector>

#include "homcurve/binary_form.hpp"
#include "homcurve/hyperbolicity.hpp"

namespace homcurve {

struct InfinitesimalSymmetry {
    LinearMap<Rational> matrix;
};

/// Residual form dh(a .): zero exactly when a generates a one-parameter
/// symmetry group of h.
inline BinaryForm<Rational> symmetry_residual(const BinaryForm<Rational>& h, const LinearMap<Rational>& a) {
    auto hx = partial(h, Var::X), hy = partial(h, Var::Y);
    BinaryForm<Rational> lx(1, {a.a11, a.a12});
    BinaryForm<Rational> ly(1, {a.a21, a.a22});
    return hx * lx + hy * ly;
}

namespace detail {

/// Nullspace basis of an m x n rational matrix (row-major), exact.
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> M, size_t cols) {
    size_t rows = M.size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[r], M[piv]);
        Rational inv = Rational(1) / M[r][c];
        for (size_t j = c; j < cols; ++j) M[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rational f = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -M[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

/// Basis of the Lie algebra of infinitesimal linear symmetries, computed as
/// the exact nullspace of a ((tau+1) x 4) linear system over the coefficients.
inline std::vector<InfinitesimalSymmetry> infinitesimal_symmetries(const BinaryForm<Rational>& h) {
    if (h.is_zero()) throw std::invalid_argument("infinitesimal_symmetries: zero form");
    int tau = h.degree();
    auto hx = partial(h, Var::X), hy = partial(h, Var::Y);
    BinaryForm<Rational> x(1, {Rational(1), Rational(0)}), y(1, {Rational(0), Rational(1)});
    // columns: coefficients of a11, a12, a21, a22 in dh(a .)
    std::array<BinaryForm<Rational>, 4> col = {hx * x, hx * y, hy * x, hy * y};
    std::vector<std::vector<Rational>> M(size_t(tau) + 1, std::vector<Rational>(4, Rational(0)));
    for (int k = 0; k <= tau; ++k)
        for (size_t j = 0; j < 4; ++j) M[size_t(k)][j] = col[j].coeff(k);
    std::vector<InfinitesimalSymmetry> out;
    for (auto& v : detail::nullspace(std::move(M), 4))
        out.push_back({LinearMap<Rational>{v[0], v[1], v[2], v[3]}});
    return out;
}

/// The diagonal specialization: ((tau-k) r + k s) f_k = 0 for all k.
inline bool reduced_symmetry_condition(const BinaryForm<Rational>& h, const Rational& r, const Rational& s) {
    int tau = h.degree();
    for (int k = 0; k <= tau; ++k)
        if (!((Rational(tau - k) * r + Rational(k) * s) * h.coeff(k) == 0)) return false;
    return true;
}

/// pullback(h, A) == h, exactly.
template <class R>
bool check_finite_symmetry(const BinaryForm<R>& h, const LinearMap<R>& A, double eps = 0.0) {
    auto d = pullback(h, A) - h;
    if constexpr (std::is_same_v<R, double>) {
        for (const auto& c : d.coeffs())
            if (std::abs(c) > eps) return false;
        return true;
    } else {
        (void)eps;
        return d.is_zero();
    }
}

enum class GroupLabel {
    R_x_Z2_xflip,               // Z2 acting via x -> -x (or, tau even and k odd, via -id)
    R_x_Z2_yflip,               // Z2 acting via y -> -y
    R_x_Z2_x_Z2,                // both reflections, tau and k even, 2k != tau
    R_x_Z2_x_Z2_semidirect_swap  // tau = 2k: additionally (x,y) -> (y,x)
};

struct GroupStructure {
    GroupLabel label;
    std::vector<LinearMap<Rational>> generators;
};

inline const char* group_label_name(GroupLabel l) {
    switch (l) {
        case GroupLabel::R_x_Z2_xflip: return "R x Z2 (x -> -x)";
        case GroupLabel::R_x_Z2_yflip: return "R x Z2 (y -> -y)";
        case GroupLabel::R_x_Z2_x_Z2: return "R x Z2 x Z2";
        case GroupLabel::R_x_Z2_x_Z2_semidirect_swap: return "(R x Z2 x Z2) : Z2 (swap)";
    }
    return "?";
}

/// Discrete structure of G^h for h = x^(tau-k) y^k per the parity case split.
/// Generators: a rational point of the one-parameter diagonal group, the
/// parity-admissible sign flips, and swap when tau = 2k. Every generator is a
/// verified symmetry of the monomial.
inline GroupStructure group_structure(int tau, int k) {
    if (tau < 3 || k < 1 || k > tau / 2) throw std::invalid_argument("group_structure: k out of range");
    using LM = LinearMap<Rational>;
    auto h = BinaryForm<Rational>::monomial(tau, k);
    GroupStructure g;
    bool tau_even = tau % 2 == 0, k_even = k % 2 == 0;
    if (2 * k == tau)  // swap is a symmetry of x^k y^k for either parity of k
        g.label = GroupLabel::R_x_Z2_x_Z2_semidirect_swap;
    else if (!tau_even)
        g.label = k_even ? GroupLabel::R_x_Z2_yflip : GroupLabel::R_x_Z2_xflip;
    else if (!k_even)
        g.label = GroupLabel::R_x_Z2_xflip;
    else
        g.label = GroupLabel::R_x_Z2_x_Z2;

    // rational witness of the continuous factor: diag(2^k, 2^(k - tau))
    g.generators.push_back(LM::diagonal(scalar_pow(Rational(2), unsigned(k)),
                                        Rational(1) / scalar_pow(Rational(2), unsigned(tau - k))));
    bool xflip_ok = (tau - k) % 2 == 0;
    bool yflip_ok = k_even;
    if (xflip_ok) g.generators.push_back(LM::diagonal(Rational(-1), Rational(1)));
    if (yflip_ok) g.generators.push_back(LM::diagonal(Rational(1), Rational(-1)));
    if (!xflip_ok && !yflip_ok) g.generators.push_back(LM::diagonal(Rational(-1), Rational(-1)));
    if (2 * k == tau) g.generators.push_back(LM::swap_xy());

    for (const auto& A : g.generators)
        if (!check_finite_symmetry(h, A)) throw std::logic_error("group_structure: generator is not a symmetry");
    return g;
}

/// Membership of a circle position, given by an exact rational direction, in
/// the open arc of a component.
inline bool direction_in_open_arc(const ComponentDescriptor& component, const Point2<Rational>& dir,
                                  const BinaryForm<Rational>& h) {
    if (is_zero(dir.x) && is_zero(dir.y)) return false;
    if (!(sign(h(dir)) > 0)) return false;
    return same_positive_arc(h, dir, component.sample_direction);
}

/// True iff the vector field p -> a p has no zero on the component, which is
/// sufficient for transitivity of the one-parameter group on the closed
/// connected curve. For invertible a this is automatic; for singular a the
/// kernel direction is tested against the component's arc.
inline bool verify_transitivity(const BinaryForm<Rational>& h, const ComponentDescriptor& component,
                                const InfinitesimalSymmetry& a) {
    const auto& m = a.matrix;
    bool zero = m.a11 == 0 && m.a12 == 0 && m.a21 == 0 && m.a22 == 0;
    if (zero || !symmetry_residual(h, m).is_zero())
        throw std::invalid_argument("verify_transitivity: not a (nonzero) infinitesimal symmetry");
    if (!is_zero(m.det())) return true;
    // kernel direction of a rank-one (or rank-zero handled above) matrix
    Point2<Rational> ker{0, 0};
    if (!is_zero(m.a11) || !is_zero(m.a12))
        ker = {-m.a12, m.a11};
    else
        ker = {-m.a22, m.a21};
    // a p = 0 exactly on the kernel line; the flow degenerates on the
    // component iff a kernel ray direction lies inside its arc
    Point2<Rational> neg{-ker.x, -ker.y};
    for (const auto& d : {ker, neg})
        if (sign(h(d)) > 0 && same_positive_arc(h, d, component.sample_direction)) return false;
    return true;
}

}  // namespace homcurve
