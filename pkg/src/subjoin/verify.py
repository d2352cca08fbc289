"""Independent oracles and the comparison harness.

The oracles work on the explicitly constructed join only: a dense
eigendecomposition, an exact Laplacian cofactor, and the resistance sum
from the direct Laplacian spectrum.  None of them touches
:mod:`subjoin.closed_form`.
"""

from __future__ import annotations

import csv
import io
import json
import zlib
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import closed_form
from .errors import Disconnected, SubjoinError
from .graph import (
    Graph,
    JoinKind,
    MatrixKind,
    as_regular,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    erdos_renyi,
    graph_matrix,
    join,
    laplacian,
    path,
    petersen,
    star,
)
from .linalg import Spectrum, bareiss_det, spectrum_residual, sym_eigen


# -- oracles ----------------------------------------------------------------

def direct_spectrum(g: Graph, kind: MatrixKind | str) -> Spectrum:
    return sym_eigen(graph_matrix(g, kind))


def spanning_tree_oracle(g: Graph) -> int:
    """Number of spanning trees as an exact Laplacian cofactor."""
    if g.n <= 1:
        return 1
    return bareiss_det(laplacian(g)[1:, 1:])


def kirchhoff_oracle(g: Graph) -> float:
    if not g.is_connected():
        raise Disconnected("Kirchhoff index needs a connected graph")
    if g.n < 2:
        return 0.0
    mu = direct_spectrum(g, MatrixKind.L).values
    return float(g.n * np.sum(1.0 / mu[1:]))


# -- reports ----------------------------------------------------------------

@dataclass(frozen=True)
class Tolerances:
    spectrum: float = 1e-8
    pointwise: float = 1e-6
    trees: float = 1e-9
    kirchhoff: float = 1e-8
    exclusion: float = 1e-6
    points: int = 10


@dataclass
class VerificationCase:
    g1: str
    g2: str
    kind: str
    matrix: str
    residual: float
    points: list[float] = field(default_factory=list)
    status: str = "pass"
    detail: str = ""

    @property
    def key(self) -> tuple[str, str, str, str]:
        return (self.g1, self.g2, self.kind, self.matrix)


@dataclass
class Corpus:
    g1: list[tuple[str, Graph]]
    g2: list[tuple[str, Graph]]

    def describe(self) -> dict:
        return {"g1": [name for name, _ in self.g1], "g2": [name for name, _ in self.g2]}


def default_corpus(seed: int = 42) -> Corpus:
    """11 regular first operands and 9 arbitrary second operands."""
    g1 = [
        ("K1", complete(1)), ("K2", complete(2)), ("C3", cycle(3)), ("C4", cycle(4)),
        ("C5", cycle(5)), ("C6", cycle(6)), ("K4", complete(4)), ("K5", complete(5)),
        ("K3,3", complete_bipartite(3, 3)), ("Petersen", petersen()),
        ("Circ8(1,2)", circulant(8, [1, 2])),
    ]
    g2 = [
        ("K1", complete(1)), ("K2", complete(2)), ("P3", path(3)), ("P4", path(4)),
        ("K1,3", star(3)), ("C4", cycle(4)), ("K2,3", complete_bipartite(2, 3)),
        ("C5", cycle(5)), (f"ER(6,0.5,seed={seed})", erdos_renyi(6, 0.5, seed)),
    ]
    return Corpus(g1, g2)


@dataclass
class VerificationReport:
    corpus: dict
    seed: int
    tolerances: Tolerances
    cases: list[VerificationCase]

    @property
    def summary(self) -> dict:
        counts = {"total": len(self.cases), "pass": 0, "fail": 0, "skip": 0}
        for c in self.cases:
            counts[c.status] += 1
        return counts

    @property
    def all_pass(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "seed": self.seed,
            "tolerances": asdict(self.tolerances),
            "cases": [asdict(c) for c in self.cases],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["g1", "g2", "kind", "matrix", "residual", "max_point_residual", "status", "detail"])
        for c in self.cases:
            w.writerow([c.g1, c.g2, c.kind, c.matrix, repr(c.residual),
                        repr(max(c.points)) if c.points else "", c.status, c.detail])
        return buf.getvalue()


# -- checks -----------------------------------------------------------------

def _case_rng(seed: int, key: Sequence[str]) -> np.random.Generator:
    """Per-case generator so results do not depend on evaluation order."""
    return np.random.default_rng([seed & 0xFFFFFFFFFFFFFFFF, zlib.crc32("|".join(key).encode())])


def sample_points(rng: np.random.Generator, radius: float, avoid: np.ndarray,
                  count: int, exclusion: float) -> list[float]:
    """Uniform points in ``[-radius, radius]`` away from every value in ``avoid``."""
    pts: list[float] = []
    avoid = np.asarray(avoid, dtype=float)
    while len(pts) < count:
        x = float(rng.uniform(-radius, radius))
        if avoid.size == 0 or np.min(np.abs(avoid - x)) > exclusion * max(1.0, abs(x)):
            pts.append(x)
    return pts


def _poles(kind: JoinKind, matrix: MatrixKind, g1: Graph, g2: Graph) -> np.ndarray:
    """Points where the factored form has a pole or an explicit cancellation."""
    n1, m1 = g1.n, g1.m
    shift = 0.0
    if matrix is MatrixKind.Q:
        shift = n1 if kind is JoinKind.SV else m1
    extra = [0.0, 2.0, 2.0 + g2.n]
    return np.concatenate([shift + np.linalg.eigvalsh(graph_matrix(g2, matrix).astype(float)), extra])


def verify_join_theorem(g1: Graph, g2: Graph, kind, matrix, tolerances: Tolerances = Tolerances(),
                        seed: int = 42, names: tuple[str, str] = ("g1", "g2"),
                        theorem: Callable | None = None) -> VerificationCase:
    """Compare one closed form with the direct spectrum of the explicit join and
    check the factored characteristic polynomial pointwise."""
    kind, matrix = JoinKind(kind), MatrixKind.parse(matrix)
    rg = as_regular(g1)
    key = (names[0], names[1], kind.value, matrix.value)
    theorem = theorem or closed_form.THEOREMS[kind, matrix]

    J, _ = join(kind, g1, g2)
    M = graph_matrix(J, matrix).astype(float)
    direct = np.linalg.eigvalsh(M)
    norm = float(np.max(np.abs(direct))) if direct.size else 0.0
    result = theorem(rg, g2)
    residual = spectrum_residual(result.spectrum, direct) / (1.0 + norm)

    rng = _case_rng(seed, key)
    avoid = np.concatenate([direct, _poles(kind, matrix, g1, g2)])
    xs = sample_points(rng, norm + 3.0, avoid, tolerances.points, tolerances.exclusion)
    point_res = []
    for x in xs:
        s_lhs, l_lhs = np.linalg.slogdet(x * np.eye(len(M)) - M)
        s_rhs, l_rhs = closed_form.charpoly_rhs(kind, matrix, rg, g2, x)
        point_res.append(float(abs(1.0 - s_lhs * s_rhs * np.exp(l_rhs - l_lhs))))

    ok = residual <= tolerances.spectrum and all(r <= tolerances.pointwise for r in point_res)
    return VerificationCase(*key, residual=float(residual), points=point_res,
                            status="pass" if ok else "fail")


def verify_spanning_trees(g1: Graph, g2: Graph, kind, tolerances: Tolerances = Tolerances(),
                          names: tuple[str, str] = ("g1", "g2")) -> VerificationCase:
    kind = JoinKind(kind)
    J, _ = join(kind, g1, g2)
    exact = spanning_tree_oracle(J)
    cf = closed_form.spanning_trees(kind, g1, g2)
    rel = abs(cf.value - exact) / exact if exact else abs(cf.value)
    ok = cf.exact == exact and rel <= tolerances.trees
    return VerificationCase(names[0], names[1], kind.value, "trees", float(rel),
                            status="pass" if ok else "fail",
                            detail=f"closed={cf.as_int()} oracle={exact}")


def verify_kirchhoff(g1: Graph, g2: Graph, kind, tolerances: Tolerances = Tolerances(),
                     names: tuple[str, str] = ("g1", "g2")) -> VerificationCase:
    kind = JoinKind(kind)
    J, _ = join(kind, g1, g2)
    if not J.is_connected():
        try:
            closed_form.kirchhoff(kind, g1, g2)
        except Disconnected:
            return VerificationCase(names[0], names[1], kind.value, "kirchhoff", 0.0,
                                    status="skip", detail="disconnected join")
        return VerificationCase(names[0], names[1], kind.value, "kirchhoff", float("inf"),
                                status="fail", detail="closed form accepted a disconnected join")
    oracle = kirchhoff_oracle(J)
    value = closed_form.kirchhoff(kind, g1, g2).value
    rel = abs(value - oracle) / oracle
    return VerificationCase(names[0], names[1], kind.value, "kirchhoff", float(rel),
                            status="pass" if rel <= tolerances.kirchhoff else "fail",
                            detail=f"closed={value!r} oracle={oracle!r}")


def _guarded(fn, names, kind, matrix, *args, **kwargs) -> VerificationCase:
    try:
        return fn(*args, **kwargs)
    except SubjoinError as exc:
        return VerificationCase(names[0], names[1], JoinKind(kind).value, matrix, float("inf"),
                                status="fail", detail=f"{type(exc).__name__}: {exc}")


def run_suite(corpus: Corpus | None = None, seed: int = 42,
              tolerances: Tolerances = Tolerances(),
              theorems: dict | None = None) -> VerificationReport:
    """Every (join, matrix) closed form plus spanning trees and Kirchhoff
    indices over the corpus grid.  Cases are sorted by key."""
    corpus = default_corpus(seed) if corpus is None else corpus
    theorems = theorems or {}
    cases = []
    for n1, g1 in corpus.g1:
        for n2, g2 in corpus.g2:
            names = (n1, n2)
            for kind in JoinKind:
                for matrix in MatrixKind:
                    cases.append(_guarded(
                        verify_join_theorem, names, kind, matrix.value, g1, g2, kind, matrix,
                        tolerances, seed, names, theorems.get((kind, matrix))))
                cases.append(_guarded(verify_spanning_trees, names, kind, "trees",
                                      g1, g2, kind, tolerances, names))
                cases.append(_guarded(verify_kirchhoff, names, kind, "kirchhoff",
                                      g1, g2, kind, tolerances, names))
    cases.sort(key=lambda c: c.key)
    return VerificationReport(corpus.describe(), seed, tolerances, cases)
