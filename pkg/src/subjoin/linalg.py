"""Dense linear algebra used by the closed forms and the oracles.

Eigenvalues come from LAPACK through :func:`numpy.linalg.eigh`.  Polynomials
are plain ascending coefficient vectors.  Determinants of integer matrices
are exact (fraction-free elimination on Python ints).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ComplexRootsUnexpected, InexactDivision, NearSingular, NonSymmetric

SYMMETRY_TOL = 1e-12
MULTIPLICITY_TOL = 1e-6
REALNESS_TOL = 1e-7
DIVISION_TOL = 1e-7


class Spectrum:
    """Ascending multiset of real eigenvalues.

    Multiplicity queries group values lying within ``tol * max(1, |x|)`` of
    each other.
    """

    __slots__ = ("values", "tol")

    def __init__(self, values: Iterable[float], tol: float = MULTIPLICITY_TOL):
        arr = np.sort(np.asarray(list(values) if not isinstance(values, np.ndarray) else values,
                                 dtype=float).ravel())
        arr.setflags(write=False)
        self.values = arr
        self.tol = tol

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, i):
        return self.values[i]

    def __repr__(self):
        body = ", ".join(f"{v:.6g}^{k}" if k > 1 else f"{v:.6g}" for v, k in self.groups())
        return f"Spectrum([{body}])"

    @property
    def descending(self) -> np.ndarray:
        return self.values[::-1]

    def _close(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.tol * max(1.0, abs(a), abs(b))

    def groups(self) -> list[tuple[float, int]]:
        """Distinct values (group means) with multiplicities."""
        out: list[list[float]] = []
        for v in self.values:
            if out and self._close(out[-1][-1], v):
                out[-1].append(v)
            else:
                out.append([v])
        return [(float(np.mean(g)), len(g)) for g in out]

    def multiplicity(self, x: float) -> int:
        return sum(1 for v in self.values if self._close(v, x))

    def residual(self, other: "Spectrum | Sequence[float]") -> float:
        return spectrum_residual(self, other)

    def to_list(self) -> list[float]:
        return self.values.tolist()


def spectrum_residual(a, b) -> float:
    """Max elementwise gap between two sorted multisets; ``inf`` on size mismatch."""
    x = np.sort(np.asarray(a.values if isinstance(a, Spectrum) else a, dtype=float))
    y = np.sort(np.asarray(b.values if isinstance(b, Spectrum) else b, dtype=float))
    if x.shape != y.shape:
        return float("inf")
    if x.size == 0:
        return 0.0
    return float(np.max(np.abs(x - y)))


def sym_eigen(M, vectors: bool = False):
    """Eigen-decomposition of a real symmetric matrix.

    Returns a :class:`Spectrum`, or ``(Spectrum, U)`` with orthonormal
    eigenvector columns when ``vectors`` is true.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NonSymmetric(f"expected a square matrix, got shape {M.shape}")
    if M.size and np.max(np.abs(M - M.T)) > SYMMETRY_TOL:
        raise NonSymmetric("matrix is not symmetric")
    if vectors:
        w, U = np.linalg.eigh(M)
        return Spectrum(w), U
    return Spectrum(np.linalg.eigvalsh(M))


def spectral_norm(M) -> float:
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return 0.0
    return float(np.max(np.abs(np.linalg.eigvalsh(M))))


# -- polynomials ------------------------------------------------------------

class RealPolynomial:
    """Real polynomial stored as coefficients in ascending degree."""

    __slots__ = ("coef",)

    def __init__(self, coef: Iterable[float]):
        c = np.atleast_1d(np.asarray(list(coef) if not isinstance(coef, np.ndarray) else coef,
                                     dtype=float))
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else np.zeros(1)
        c.setflags(write=False)
        self.coef = c

    @classmethod
    def from_roots(cls, roots: Iterable[float]) -> "RealPolynomial":
        p = np.ones(1)
        for r in roots:
            p = np.convolve(p, [-r, 1.0])
        return cls(p)

    @classmethod
    def x_power(cls, k: int, center: float = 0.0) -> "RealPolynomial":
        return cls.from_roots([center] * k)

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else len(self.coef) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coef) == 1 and self.coef[0] == 0

    def __call__(self, x):
        return poly_eval(self, x)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __add__(self, other: "RealPolynomial"):
        k = max(len(self.coef), len(other.coef))
        return RealPolynomial(np.pad(self.coef, (0, k - len(self.coef)))
                              + np.pad(other.coef, (0, k - len(other.coef))))

    def __neg__(self):
        return RealPolynomial(-self.coef)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: float) -> "RealPolynomial":
        return RealPolynomial(c * self.coef)

    def __pow__(self, k: int):
        out = RealPolynomial([1.0])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, s: float) -> "RealPolynomial":
        """The polynomial ``x -> p(x - s)``."""
        out = RealPolynomial([0.0])
        step = RealPolynomial([-s, 1.0])
        for c in self.coef[::-1]:
            out = out * step + RealPolynomial([c])
        return out

    def to_list(self) -> list[float]:
        return self.coef.tolist()

    def allclose(self, other: "RealPolynomial", rtol: float = 1e-7) -> bool:
        k = max(len(self.coef), len(other.coef))
        a = np.pad(self.coef, (0, k - len(self.coef)))
        b = np.pad(other.coef, (0, k - len(other.coef)))
        scale = max(np.max(np.abs(a)), np.max(np.abs(b)), 1.0)
        return bool(np.max(np.abs(a - b)) <= rtol * scale)

    def __repr__(self):
        return f"RealPolynomial({self.to_list()})"


def _as_poly(p) -> RealPolynomial:
    return p if isinstance(p, RealPolynomial) else RealPolynomial(p)


def poly_mul(p, q) -> RealPolynomial:
    if isinstance(q, (int, float)):
        return _as_poly(p).scale(q)
    return RealPolynomial(np.convolve(_as_poly(p).coef, _as_poly(q).coef))


def poly_eval(p, x):
    """Horner evaluation; works for scalars and numpy arrays."""
    out = np.zeros_like(np.asarray(x, dtype=float))
    for c in _as_poly(p).coef[::-1]:
        out = out * x + c
    return out if np.ndim(out) else float(out)


def poly_divide_exact(num, den, tol: float = DIVISION_TOL) -> RealPolynomial:
    """Quotient ``num / den``; raises :class:`InexactDivision` on a real remainder."""
    num, den = _as_poly(num), _as_poly(den)
    if den.is_zero:
        raise InexactDivision("division by the zero polynomial")
    q, r = np.polynomial.polynomial.polydiv(num.coef, den.coef)
    bound = tol * max(1.0, float(np.max(np.abs(num.coef))))
    if np.max(np.abs(r)) > bound:
        raise InexactDivision(f"remainder {np.max(np.abs(r)):.3g} exceeds {bound:.3g}")
    return RealPolynomial(q)


def companion_matrix(p) -> np.ndarray:
    """Frobenius companion matrix of ``p`` after normalising to monic form."""
    c = _as_poly(p).coef
    d = len(c) - 1
    C = np.zeros((d, d))
    C[1:, :-1] = np.eye(d - 1)
    C[:, -1] = -c[:-1] / c[-1]
    return C


def _merge_clusters(z: np.ndarray, tol: float) -> np.ndarray:
    """Replace each cluster of nearby roots by its mean.

    A root of multiplicity k is perturbed by O(eps^(1/k)) but the mean of its
    cluster is accurate to O(eps).
    """
    z = z[np.argsort(z.real)]
    out = z.copy()
    used = np.zeros(len(z), dtype=bool)
    for i in range(len(z)):
        if used[i]:
            continue
        members = [j for j in range(i, len(z))
                   if not used[j] and abs(z[j] - z[i]) <= tol * (1.0 + abs(z[i]))]
        used[members] = True
        out[members] = np.mean(z[members])
    return out


def poly_roots(p, real: bool = True, tol: float = REALNESS_TOL,
               cluster_tol: float = 1e-5) -> "Spectrum | np.ndarray":
    """Roots from the eigenvalues of the companion matrix.

    Near-coincident roots are merged to their mean first.  With ``real`` set,
    roots whose imaginary part is at most ``tol * (1 + |root|)`` are projected
    onto the real line and anything else raises
    :class:`ComplexRootsUnexpected`.
    """
    p = _as_poly(p)
    if p.degree < 1:
        raise ValueError("poly_roots needs degree >= 1")
    z = np.linalg.eigvals(companion_matrix(p))
    if cluster_tol:
        z = _merge_clusters(z, cluster_tol)
    if not real:
        return z
    bad = np.abs(z.imag) > tol * (1.0 + np.abs(z))
    if np.any(bad):
        raise ComplexRootsUnexpected(f"complex roots {z[bad]}")
    return Spectrum(z.real)


def quadratic_roots(b: float, c: float, snap: float = 1e-10) -> tuple[float, float]:
    """Real roots of ``x^2 + b x + c``.

    Discriminants within ``snap * max(1, b^2, |c|)`` of zero are treated as a
    double root; eigenvalue round-off would otherwise be amplified by the
    square root.
    """
    disc = b * b - 4.0 * c
    scale = max(1.0, b * b, abs(c))
    if abs(disc) <= snap * scale:
        disc = 0.0
    if disc < 0:
        raise ComplexRootsUnexpected(f"x^2 + {b}x + {c} has complex roots")
    s = np.sqrt(disc)
    q = -0.5 * (b + (s if b >= 0 else -s))
    if q == 0.0:
        return (0.0, 0.0)
    r1, r2 = q, c / q
    return (min(r1, r2), max(r1, r2))


def char_poly_exact(M) -> list[int]:
    """Characteristic polynomial of an integer matrix, ascending coefficients.

    Faddeev-LeVerrier on Python ints; every division is exact.
    """
    A = [[int(x) for x in row] for row in np.asarray(M)]
    n = len(A)
    coef = [0] * (n + 1)
    coef[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk <- A @ M_{k-1} + c_{n-k+1} I
        prev = Mk
        Mk = [[sum(A[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            Mk[i][i] += coef[n - k + 1]
        AM_trace = sum(A[i][t] * Mk[t][i] for i in range(n) for t in range(n))
        num = -AM_trace
        assert num % k == 0
        coef[n - k] = num // k
    return coef


# -- coronals ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CoronalFunction:
    """``x -> sum_i weights[i] / (x - poles[i])``, the sum of entries of ``(xI - M)^-1``.

    ``poles`` are all eigenvalues of ``M`` (ascending) and ``weights[i]`` is
    the squared projection of the all-ones vector on the i-th eigenvector, so
    zero weights mark eigenvalues that are not poles at all.
    """

    poles: np.ndarray
    weights: np.ndarray

    @property
    def dimension(self) -> int:
        return len(self.poles)

    def __call__(self, x: float) -> float:
        return self.eval(x)

    def eval(self, x):
        x = np.asarray(x, dtype=float)
        return np.sum(self.weights / (x[..., None] - self.poles), axis=-1) if x.ndim else \
            float(np.sum(self.weights / (float(x) - self.poles)))

    def denominator(self) -> RealPolynomial:
        return RealPolynomial.from_roots(self.poles)

    def numerator(self) -> RealPolynomial:
        out = RealPolynomial([0.0])
        for i, c in enumerate(self.weights):
            others = np.delete(self.poles, i)
            out = out + RealPolynomial.from_roots(others).scale(c)
        return out

    def main_poles(self, tol: float = 1e-9) -> list[tuple[float, float]]:
        """Distinct eigenvalues carrying nonzero total weight."""
        out: list[list[float]] = []
        for lam, c in zip(self.poles, self.weights):
            if out and abs(out[-1][0] - lam) <= MULTIPLICITY_TOL * max(1.0, abs(lam)):
                out[-1][1] += c
            else:
                out.append([float(lam), float(c)])
        return [(lam, c) for lam, c in out if c > tol]


def coronal(M) -> CoronalFunction:
    spec, U = sym_eigen(M, vectors=True)
    w = U.sum(axis=0) ** 2
    return CoronalFunction(np.asarray(spec.values), w)


def coronal_eval_by_solve(M, x: float, tol: float = 1e-8) -> float:
    """``1^T (xI - M)^-1 1`` through a dense linear solve."""
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    if n == 0:
        return 0.0
    eig = np.linalg.eigvalsh(M)
    if np.min(np.abs(eig - x)) <= tol * max(1.0, abs(x)):
        raise NearSingular(f"x={x} is within {tol} of an eigenvalue")
    y = np.linalg.solve(x * np.eye(n) - M, np.ones(n))
    return float(y.sum())


def coronal_numerator(M) -> RealPolynomial:
    """Numerator ``p`` with ``Gamma_M(x) = p(x) / det(xI - M)``."""
    return coronal(M).numerator()


def coronal_factor_roots(gamma: CoronalFunction, *, head: float, tail: float,
                         coupling_sq: float, alpha: float, shift: float = 0.0) -> np.ndarray:
    """Zeros of ``prod_i(x - shift - poles_i) * [(x-head)(x-tail) - coupling_sq
    - alpha (x-tail) Gamma(x - shift)]``.

    That product is the characteristic polynomial of the symmetric bordered
    matrix with diagonal ``(head, tail, shift + poles)``, off-diagonal
    ``sqrt(coupling_sq)`` between the first two slots and
    ``sqrt(alpha * weights_i)`` between the head and pole ``i``.  Computing
    the eigenvalues of that matrix stays accurate when poles repeat or
    coincide with other roots, where companion-matrix roots would lose half
    the digits.
    """
    if coupling_sq < -1e-12 or alpha < 0:
        raise ValueError("bordered matrix needs nonnegative coupling")
    k = gamma.dimension
    B = np.zeros((k + 2, k + 2))
    B[0, 0] = head
    B[1, 1] = tail
    B[0, 1] = B[1, 0] = np.sqrt(max(coupling_sq, 0.0))
    g = np.sqrt(alpha * np.clip(gamma.weights, 0.0, None))
    B[0, 2:] = B[2:, 0] = g
    B[2:, 2:] = np.diag(shift + gamma.poles)
    return np.linalg.eigvalsh(B)


# -- exact determinants -----------------------------------------------------

def bareiss_det(M) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    A = [[int(x) for x in row] for row in (M.tolist() if isinstance(M, np.ndarray) else M)]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("bareiss_det needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]
