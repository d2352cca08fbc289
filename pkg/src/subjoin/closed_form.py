"""Spectra, characteristic polynomials, spanning-tree counts and Kirchhoff
indices of subdivision-vertex and subdivision-edge joins.

Every routine takes an ``r1``-regular first operand ``g1`` (a
:class:`~subjoin.graph.Graph` is certified on the fly) and an arbitrary
second operand ``g2``.  The answer is assembled from the spectra of the two
operands alone; the join itself is never built here.

Eigenvalue conventions: adjacency eigenvalues of ``g1`` are indexed in
descending order, Laplacian and signless Laplacian eigenvalues in ascending
order, so "i = 2..n" drops the largest adjacency eigenvalue ``r1`` or the
smallest Laplacian eigenvalue ``0`` and "i = 1..n-1" drops the largest
signless Laplacian eigenvalue ``2 r1``.

A power ``m1 - n1 < 0`` (only when ``g1`` has fewer edges than vertices)
is realised by exact cancellation: the matching roots are removed from the
other factors and the characteristic polynomial is divided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import Disconnected, InexactDivision, InvalidGraph
from .graph import (
    Graph,
    JoinKind,
    JoinLayout,
    MatrixKind,
    RegularGraph,
    adjacency,
    as_regular,
    laplacian,
    signless_laplacian,
)
from .linalg import (
    CoronalFunction,
    RealPolynomial,
    Spectrum,
    bareiss_det,
    coronal,
    coronal_eval_by_solve,
    coronal_factor_roots,
    poly_divide_exact,
    poly_roots,
    quadratic_roots,
)

CANCEL_TOL = 1e-7


@dataclass(frozen=True, eq=False)
class Factor:
    """One factor ``poly ** power`` of a characteristic polynomial."""

    poly: RealPolynomial
    roots: np.ndarray
    power: int
    label: str


@dataclass(frozen=True, eq=False)
class JoinSpectrumResult:
    spectrum: Spectrum
    charpoly: RealPolynomial
    factors: list[Factor]
    layout: JoinLayout
    matrix: MatrixKind

    def __len__(self):
        return len(self.spectrum)


@dataclass(frozen=True)
class ClosedFormScalar:
    value: float
    formula: str
    exact: Fraction | None = field(default=None, compare=False)

    def as_int(self) -> int:
        """Nearest integer, taken from the exact value when there is one."""
        if self.exact is not None and self.exact.denominator == 1:
            return int(self.exact)
        return int(round(self.value))


# -- helpers ----------------------------------------------------------------

def _regular(g1) -> RegularGraph:
    return g1 if isinstance(g1, RegularGraph) else as_regular(g1)


def _check_sizes(rg: RegularGraph, g2: Graph):
    if rg.n < 1:
        raise InvalidGraph("the regular operand needs at least one vertex")
    if g2.n < 1:
        raise InvalidGraph("the second operand needs at least one vertex")


def _eig(M) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    return np.linalg.eigvalsh(M) if M.size else np.zeros(0)


def _linear(root: float, power: int, label: str) -> Factor:
    return Factor(RealPolynomial([-root, 1.0]), np.array([float(root)]), power, label)


def _quadratic(b: float, c: float, label: str) -> Factor:
    """Factor ``x^2 + b x + c``."""
    return Factor(RealPolynomial([c, b, 1.0]), np.array(quadratic_roots(b, c)), 1, label)


def _cancel(roots: list[float], center: float, count: int) -> list[float]:
    for _ in range(count):
        if not roots:
            raise InexactDivision(f"nothing left to cancel at x={center}")
        i = int(np.argmin([abs(r - center) for r in roots]))
        if abs(roots[i] - center) > CANCEL_TOL * (1.0 + abs(center)):
            raise InexactDivision(
                f"no root at x={center} to cancel (closest {roots[i]!r})"
            )
        roots.pop(i)
    return roots


def _assemble(factors: list[Factor], layout: JoinLayout, kind: MatrixKind) -> JoinSpectrumResult:
    roots: list[float] = []
    num = RealPolynomial([1.0])
    den = RealPolynomial([1.0])
    for f in factors:
        if f.power > 0:
            roots.extend(np.tile(f.roots, f.power).tolist())
            num = num * f.poly ** f.power
    for f in factors:
        if f.power < 0:
            (center,) = f.roots
            roots = _cancel(roots, float(center), -f.power)
            den = den * f.poly ** (-f.power)
    charpoly = poly_divide_exact(num, den) if den.degree > 0 else num
    if len(roots) != layout.total:
        raise InexactDivision(f"assembled {len(roots)} eigenvalues, expected {layout.total}")
    return JoinSpectrumResult(Spectrum(roots), charpoly, factors, layout, kind)


def _layout(kind: JoinKind, rg: RegularGraph, g2: Graph) -> JoinLayout:
    return JoinLayout(kind, rg.n, rg.m, g2.n, g2.m)


def _coronal_factor(gamma: CoronalFunction, *, trace: float, const: float, tail: float,
                    alpha: float, shift: float, label: str, method: str) -> Factor:
    """Factor ``phi(M2; x - shift) * [q(x) - alpha (x - tail) Gamma(x - shift)]``
    with ``q(x) = x^2 - trace x + const`` as an explicit polynomial of degree
    ``n2 + 2``."""
    q = RealPolynomial([const, -trace, 1.0])
    phi = gamma.denominator().shift(shift)
    p = gamma.numerator().shift(shift)
    poly = phi * q - RealPolynomial([-tail, 1.0]) * p.scale(alpha)
    head = trace - tail
    coupling_sq = head * tail - const
    if method == "bordered":
        roots = coronal_factor_roots(gamma, head=head, tail=tail, coupling_sq=coupling_sq,
                                     alpha=alpha, shift=shift)
    elif method == "companion":
        roots = poly_roots(poly).values
    else:
        raise ValueError(f"unknown root method {method!r}")
    return Factor(poly, np.sort(np.asarray(roots)), 1, label)


# -- adjacency --------------------------------------------------------------

def _a_spectrum(kind: JoinKind, g1, g2: Graph, method: str) -> JoinSpectrumResult:
    rg = _regular(g1)
    _check_sizes(rg, g2)
    n1, m1, r1 = rg.n, rg.m, rg.r
    lam1 = _eig(adjacency(rg.graph))[::-1]
    gamma = coronal(adjacency(g2))
    alpha = n1 if kind is JoinKind.SV else m1
    factors = [
        _coronal_factor(gamma, trace=0.0, const=-2.0 * r1, tail=0.0, alpha=alpha, shift=0.0,
                        label="coronal factor x^2 - 2r1 - a x Gamma_A(x)", method=method)
    ]
    factors += [_quadratic(0.0, -(r1 + lam), "+-sqrt(r1 + lambda_i(G1))") for lam in lam1[1:]]
    if m1 != n1:
        factors.append(_linear(0.0, m1 - n1, "x^(m1-n1)"))
    return _assemble(factors, _layout(kind, rg, g2), MatrixKind.A)


def sv_A_spectrum(g1, g2: Graph, method: str = "bordered") -> JoinSpectrumResult:
    """Adjacency spectrum of the subdivision-vertex join."""
    return _a_spectrum(JoinKind.SV, g1, g2, method)


def se_A_spectrum(g1, g2: Graph, method: str = "bordered") -> JoinSpectrumResult:
    """Adjacency spectrum of the subdivision-edge join."""
    return _a_spectrum(JoinKind.SE, g1, g2, method)


# -- Laplacian --------------------------------------------------------------

def sv_L_spectrum(g1, g2: Graph, method: str = "bordered") -> JoinSpectrumResult:
    rg = _regular(g1)
    _check_sizes(rg, g2)
    n1, m1, r1, n2 = rg.n, rg.m, rg.r, g2.n
    mu1 = _eig(laplacian(rg.graph))
    mu2 = _eig(laplacian(g2))
    factors = [
        _linear(0.0, 1, "x"),
        _quadratic(-(2 + r1 + n1 + n2), 2 * n1 + 2 * n2 + n1 * r1, "main quadratic"),
    ]
    factors += [_linear(n1 + mu, 1, "n1 + mu_i(G2)") for mu in mu2[1:]]
    factors += [_quadratic(-(2 + r1 + n2), 2 * n2 + mu, "quadratic in mu_i(G1)") for mu in mu1[1:]]
    if m1 != n1:
        factors.append(_linear(2.0, m1 - n1, "(x-2)^(m1-n1)"))
    return _assemble(factors, _layout(JoinKind.SV, rg, g2), MatrixKind.L)


def se_L_spectrum(g1, g2: Graph, method: str = "bordered") -> JoinSpectrumResult:
    rg = _regular(g1)
    _check_sizes(rg, g2)
    n1, m1, r1, n2 = rg.n, rg.m, rg.r, g2.n
    mu1 = _eig(laplacian(rg.graph))
    mu2 = _eig(laplacian(g2))
    factors = [
        _linear(0.0, 1, "x"),
        _quadratic(-(2 + r1 + m1 + n2), r1 * n2 + r1 * m1 + 2 * m1, "main quadratic"),
    ]
    factors += [_linear(m1 + mu, 1, "m1 + mu_i(G2)") for mu in mu2[1:]]
    factors += [_quadratic(-(2 + r1 + n2), r1 * n2 + mu, "quadratic in mu_i(G1)") for mu in mu1[1:]]
    if m1 != n1:
        factors.append(_linear(2.0 + n2, m1 - n1, "(x-2-n2)^(m1-n1)"))
    return _assemble(factors, _layout(JoinKind.SE, rg, g2), MatrixKind.L)


# -- signless Laplacian -----------------------------------------------------

def sv_Q_spectrum(g1, g2: Graph, method: str = "bordered") -> JoinSpectrumResult:
    rg = _regular(g1)
    _check_sizes(rg, g2)
    n1, m1, r1, n2 = rg.n, rg.m, rg.r, g2.n
    nu1 = _eig(signless_laplacian(rg.graph))
    gamma = coronal(signless_laplacian(g2))
    factors = [
        _coronal_factor(gamma, trace=2 + r1 + n2, const=2 * n2, tail=2.0, alpha=n1, shift=n1,
                        label="coronal factor with Gamma_Q(x - n1)", method=method)
    ]
    factors += [_quadratic(-(2 + r1 + n2), 2 * (r1 + n2) - nu, "quadratic in nu_i(G1)")
                for nu in nu1[:-1]]
    if m1 != n1:
        factors.append(_linear(2.0, m1 - n1, "(x-2)^(m1-n1)"))
    return _assemble(factors, _layout(JoinKind.SV, rg, g2), MatrixKind.Q)


def se_Q_spectrum(g1, g2: Graph, method: str = "bordered") -> JoinSpectrumResult:
    rg = _regular(g1)
    _check_sizes(rg, g2)
    n1, m1, r1, n2 = rg.n, rg.m, rg.r, g2.n
    nu1 = _eig(signless_laplacian(rg.graph))
    gamma = coronal(signless_laplacian(g2))
    factors = [
        _coronal_factor(gamma, trace=2 + r1 + n2, const=r1 * n2, tail=float(r1), alpha=m1,
                        shift=m1, label="coronal factor with Gamma_Q(x - m1)", method=method)
    ]
    factors += [_quadratic(-(2 + r1 + n2), r1 * n2 + 2 * r1 - nu, "quadratic in nu_i(G1)")
                for nu in nu1[:-1]]
    if m1 != n1:
        factors.append(_linear(2.0 + n2, m1 - n1, "(x-2-n2)^(m1-n1)"))
    return _assemble(factors, _layout(JoinKind.SE, rg, g2), MatrixKind.Q)


THEOREMS: dict[tuple[JoinKind, MatrixKind], Callable[..., JoinSpectrumResult]] = {
    (JoinKind.SV, MatrixKind.A): sv_A_spectrum,
    (JoinKind.SV, MatrixKind.L): sv_L_spectrum,
    (JoinKind.SV, MatrixKind.Q): sv_Q_spectrum,
    (JoinKind.SE, MatrixKind.A): se_A_spectrum,
    (JoinKind.SE, MatrixKind.L): se_L_spectrum,
    (JoinKind.SE, MatrixKind.Q): se_Q_spectrum,
}


def join_spectrum(kind, matrix, g1, g2: Graph, method: str = "bordered") -> JoinSpectrumResult:
    return THEOREMS[JoinKind(kind), MatrixKind.parse(matrix)](g1, g2, method=method)


# -- corollaries for special second operands --------------------------------

def _cubic(coeffs_desc, label: str) -> Factor:
    poly = RealPolynomial(coeffs_desc[::-1])
    return Factor(poly, poly_roots(poly).values, 1, label)


def _a_regular_corollary(kind: JoinKind, g1, g2) -> JoinSpectrumResult:
    rg1, rg2 = _regular(g1), _regular(g2)
    _check_sizes(rg1, rg2.graph)
    n1, m1, r1 = rg1.n, rg1.m, rg1.r
    n2, r2 = rg2.n, rg2.r
    lam1 = _eig(adjacency(rg1.graph))[::-1]
    lam2 = _eig(adjacency(rg2.graph))[::-1]
    a = n1 if kind is JoinKind.SV else m1
    factors = [_linear(lam, 1, "lambda_i(G2)") for lam in lam2[1:]]
    factors += [_quadratic(0.0, -(r1 + lam), "+-sqrt(r1 + lambda_j(G1))") for lam in lam1[1:]]
    factors.append(_cubic([1.0, -r2, -(a * n2 + 2 * r1), 2 * r1 * r2], "cubic"))
    if m1 != n1:
        factors.append(_linear(0.0, m1 - n1, "0 repeated m1-n1 times"))
    return _assemble(factors, _layout(kind, rg1, rg2.graph), MatrixKind.A)


def sv_A_regular_corollary(g1, g2) -> JoinSpectrumResult:
    """Adjacency spectrum when both operands are regular (cubic form)."""
    return _a_regular_corollary(JoinKind.SV, g1, g2)


def se_A_regular_corollary(g1, g2) -> JoinSpectrumResult:
    return _a_regular_corollary(JoinKind.SE, g1, g2)


def _a_bipartite_corollary(kind: JoinKind, g, p: int, q: int) -> JoinSpectrumResult:
    if p < 1 or q < 1:
        raise InvalidGraph(f"K_(p,q) needs p, q >= 1, got {p}, {q}")
    rg = _regular(g)
    n, m, r = rg.n, rg.m, rg.r
    if m < n:
        raise InvalidGraph("the complete bipartite corollary needs m >= n")
    lam = _eig(adjacency(rg.graph))[::-1]
    a = n if kind is JoinKind.SV else m
    zeros = m - n + p + q - 2
    factors = [_quadratic(0.0, -(r + l), "+-sqrt(r + lambda_i(G))") for l in lam[1:]]
    quartic = RealPolynomial([2 * p * q * r, -2 * a * p * q, -(p * q + a * (p + q) + 2 * r), 0.0, 1.0])
    factors.append(Factor(quartic, poly_roots(quartic).values, 1, "quartic"))
    if zeros:
        factors.append(_linear(0.0, zeros, "0 repeated m-n+p+q-2 times"))
    layout = JoinLayout(kind, n, m, p + q, p * q)
    return _assemble(factors, layout, MatrixKind.A)


def sv_A_bipartite_corollary(g, p: int, q: int) -> JoinSpectrumResult:
    """Adjacency spectrum of the subdivision-vertex join with ``K_{p,q}``."""
    return _a_bipartite_corollary(JoinKind.SV, g, p, q)


def se_A_bipartite_corollary(g, p: int, q: int) -> JoinSpectrumResult:
    return _a_bipartite_corollary(JoinKind.SE, g, p, q)


def sv_Q_regular_corollary(g1, g2) -> JoinSpectrumResult:
    rg1, rg2 = _regular(g1), _regular(g2)
    _check_sizes(rg1, rg2.graph)
    n1, m1, r1 = rg1.n, rg1.m, rg1.r
    n2, r2 = rg2.n, rg2.r
    nu1 = _eig(signless_laplacian(rg1.graph))
    nu2 = _eig(signless_laplacian(rg2.graph))
    a = 2 + 2 * r2 + r1 + n1 + n2
    b = 2 * n1 + 2 * n2 + n1 * r1 + 2 * r1 * r2 + 2 * r2 * n2 + 4 * r2
    factors = [_cubic([1.0, -a, b, -4 * r2 * n2], "cubic")]
    factors += [_linear(n1 + nu, 1, "n1 + nu_i(G2)") for nu in nu2[:-1]]
    factors += [_quadratic(-(2 + r1 + n2), 2 * (r1 + n2) - nu, "quadratic in nu_i(G1)")
                for nu in nu1[:-1]]
    if m1 != n1:
        factors.append(_linear(2.0, m1 - n1, "(x-2)^(m1-n1)"))
    return _assemble(factors, _layout(JoinKind.SV, rg1, rg2.graph), MatrixKind.Q)


def se_Q_regular_corollary(g1, g2) -> JoinSpectrumResult:
    rg1, rg2 = _regular(g1), _regular(g2)
    _check_sizes(rg1, rg2.graph)
    n1, m1, r1 = rg1.n, rg1.m, rg1.r
    n2, r2 = rg2.n, rg2.r
    nu1 = _eig(signless_laplacian(rg1.graph))
    nu2 = _eig(signless_laplacian(rg2.graph))
    a = 2 + 2 * r2 + r1 + m1 + n2
    b = r1 * n2 + 2 * m1 + r1 * m1 + 4 * r2 + 2 * r1 * r2 + 2 * r2 * n2
    factors = [_cubic([1.0, -a, b, -2 * r1 * r2 * n2], "cubic")]
    factors += [_linear(m1 + nu, 1, "m1 + nu_i(G2)") for nu in nu2[:-1]]
    factors += [_quadratic(-(2 + r1 + n2), r1 * n2 + 2 * r1 - nu, "quadratic in nu_i(G1)")
                for nu in nu1[:-1]]
    if m1 != n1:
        factors.append(_linear(2.0 + n2, m1 - n1, "(x-2-n2)^(m1-n1)"))
    return _assemble(factors, _layout(JoinKind.SE, rg1, rg2.graph), MatrixKind.Q)


# -- pointwise form of the characteristic polynomial identities -------------

def _signed_log(values) -> tuple[float, float]:
    v = np.asarray(values, dtype=float)
    if np.any(v == 0):
        return 0.0, -np.inf
    return float(np.prod(np.sign(v))), float(np.sum(np.log(np.abs(v))))


def _phi_shifted(M, x: float) -> tuple[float, float]:
    """Sign and log magnitude of ``det(xI - M)``."""
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return 1.0, 0.0
    s, ld = np.linalg.slogdet(x * np.eye(len(M)) - M)
    return float(s), float(ld)


def charpoly_rhs(kind, matrix, g1, g2: Graph, x: float) -> tuple[float, float]:
    """Evaluate the factored characteristic polynomial at ``x``.

    Coronals are evaluated with a linear solve and ``phi`` of the second
    operand with an LU determinant, so no root extraction takes place.
    Returns ``(sign, log|value|)``.
    """
    kind, matrix = JoinKind(kind), MatrixKind.parse(matrix)
    rg = _regular(g1)
    n1, m1, r1, n2 = rg.n, rg.m, rg.r, g2.n
    sv = kind is JoinKind.SV
    vals: list[float] = []
    logs: list[tuple[float, float]] = []
    if matrix is MatrixKind.A:
        lam1 = _eig(adjacency(rg.graph))[::-1]
        A2 = adjacency(g2)
        a = n1 if sv else m1
        logs.append(_phi_shifted(A2, x))
        vals.append(x * x - a * x * coronal_eval_by_solve(A2, x) - 2 * r1)
        vals += [x * x - r1 - lam for lam in lam1[1:]]
        vals += [x] * (m1 - n1) if m1 >= n1 else [1.0 / x] * (n1 - m1)
    elif matrix is MatrixKind.L:
        mu1 = _eig(laplacian(rg.graph))
        mu2 = _eig(laplacian(g2))
        if sv:
            vals.append(x)
            vals.append(x * x - (2 + r1 + n1 + n2) * x + 2 * n1 + 2 * n2 + n1 * r1)
            vals += [x - n1 - mu for mu in mu2[1:]]
            vals += [x * x - (2 + r1 + n2) * x + 2 * n2 + mu for mu in mu1[1:]]
            c = 2.0
        else:
            vals.append(x)
            vals.append(x * x - (2 + r1 + m1 + n2) * x + r1 * n2 + r1 * m1 + 2 * m1)
            vals += [x - m1 - mu for mu in mu2[1:]]
            vals += [x * x - (2 + r1 + n2) * x + r1 * n2 + mu for mu in mu1[1:]]
            c = 2.0 + n2
        vals += [x - c] * (m1 - n1) if m1 >= n1 else [1.0 / (x - c)] * (n1 - m1)
    else:
        nu1 = _eig(signless_laplacian(rg.graph))
        Q2 = signless_laplacian(g2)
        if sv:
            shift, alpha, tail, c = n1, n1, 2.0, 2.0
            const_i = [2 * (r1 + n2) - nu for nu in nu1[:-1]]
            q0 = x * x - (2 + r1 + n2) * x + 2 * n2
        else:
            shift, alpha, tail, c = m1, m1, float(r1), 2.0 + n2
            const_i = [r1 * n2 + 2 * r1 - nu for nu in nu1[:-1]]
            q0 = x * x - (2 + r1 + n2) * x + r1 * n2
        logs.append(_phi_shifted(Q2, x - shift))
        vals.append(q0 - alpha * (x - tail) * coronal_eval_by_solve(Q2, x - shift))
        vals += [x * x - (2 + r1 + n2) * x + ci for ci in const_i]
        vals += [x - c] * (m1 - n1) if m1 >= n1 else [1.0 / (x - c)] * (n1 - m1)
    sign, log = _signed_log(vals)
    for s, ld in logs:
        sign *= s
        log += ld
    return sign, log


# -- spanning trees and Kirchhoff index -------------------------------------

def _shifted_product(L: np.ndarray, t: int) -> int | Fraction:
    """Exact ``prod_{i>=2} (t + mu_i)`` for a Laplacian ``L``.

    Equals ``det(tI + L) / t``; at ``t = 0`` it is ``n`` times any cofactor.
    """
    n = len(L)
    if n == 1:
        return 1
    if t == 0:
        return n * bareiss_det(L[1:, 1:])
    return Fraction(bareiss_det(t * np.eye(n, dtype=np.int64) + L), t)


def sv_spanning_trees(g1, g2: Graph) -> ClosedFormScalar:
    rg = _regular(g1)
    _check_sizes(rg, g2)
    n1, m1, r1, n2 = rg.n, rg.m, rg.r, g2.n
    L1, L2 = laplacian(rg.graph), laplacian(g2)
    mu1, mu2 = _eig(L1), _eig(L2)
    total = m1 + n1 + n2
    lead = 2 * n1 + 2 * n2 + n1 * r1
    value = 2.0 ** (m1 - n1) * lead * np.prod(n1 + mu2[1:]) * np.prod(2 * n2 + mu1[1:]) / total
    exact = (Fraction(2) ** (m1 - n1) * lead * _shifted_product(L2, n1)
             * _shifted_product(L1, 2 * n2) / total)
    return ClosedFormScalar(float(value), "sv_spanning_trees", Fraction(exact))


def se_spanning_trees(g1, g2: Graph) -> ClosedFormScalar:
    rg = _regular(g1)
    _check_sizes(rg, g2)
    n1, m1, r1, n2 = rg.n, rg.m, rg.r, g2.n
    L1, L2 = laplacian(rg.graph), laplacian(g2)
    mu1, mu2 = _eig(L1), _eig(L2)
    total = m1 + n1 + n2
    lead = r1 * n2 + r1 * m1 + 2 * m1
    value = (2.0 + n2) ** (m1 - n1) * lead * np.prod(m1 + mu2[1:]) * np.prod(r1 * n2 + mu1[1:]) / total
    if lead == 0:
        exact = Fraction(0)
    else:
        exact = (Fraction(2 + n2) ** (m1 - n1) * lead * _shifted_product(L2, m1)
                 * _shifted_product(L1, r1 * n2) / total)
    return ClosedFormScalar(float(value), "se_spanning_trees", Fraction(exact))


def sv_kirchhoff(g1, g2: Graph) -> ClosedFormScalar:
    rg = _regular(g1)
    _check_sizes(rg, g2)
    n1, m1, r1, n2 = rg.n, rg.m, rg.r, g2.n
    mu1, mu2 = _eig(laplacian(rg.graph)), _eig(laplacian(g2))
    s = ((m1 - n1) / 2
         + (2 + r1 + n1 + n2) / (2 * n1 + 2 * n2 + n1 * r1)
         + np.sum(1.0 / (n1 + mu2[1:]))
         + np.sum((2 + r1 + n2) / (2 * n2 + mu1[1:])))
    return ClosedFormScalar(float((m1 + n1 + n2) * s), "sv_kirchhoff")


def se_kirchhoff(g1, g2: Graph) -> ClosedFormScalar:
    rg = _regular(g1)
    _check_sizes(rg, g2)
    n1, m1, r1, n2 = rg.n, rg.m, rg.r, g2.n
    lead = r1 * n2 + r1 * m1 + 2 * m1
    mu1, mu2 = _eig(laplacian(rg.graph)), _eig(laplacian(g2))
    if lead == 0 or np.any(r1 * n2 + mu1[1:] <= 1e-9) or np.any(m1 + mu2[1:] <= 1e-9):
        raise Disconnected("the subdivision-edge join is disconnected; Kirchhoff index undefined")
    s = ((m1 - n1) / (2 + n2)
         + (2 + r1 + m1 + n2) / lead
         + np.sum(1.0 / (m1 + mu2[1:]))
         + np.sum((2 + r1 + n2) / (r1 * n2 + mu1[1:])))
    return ClosedFormScalar(float((m1 + n1 + n2) * s), "se_kirchhoff")


def spanning_trees(kind, g1, g2: Graph) -> ClosedFormScalar:
    return sv_spanning_trees(g1, g2) if JoinKind(kind) is JoinKind.SV else se_spanning_trees(g1, g2)


def kirchhoff(kind, g1, g2: Graph) -> ClosedFormScalar:
    return sv_kirchhoff(g1, g2) if JoinKind(kind) is JoinKind.SV else se_kirchhoff(g1, g2)
