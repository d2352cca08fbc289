"""Cospectral pairs built from subdivision joins.

Two constructions are supported.  In slot ``"g"`` the seed pair supplies
two cospectral regular first operands and the partner is the common second
operand.  In slot ``"h"`` the seed pair supplies the second operands and the
partner is a common regular first operand; for adjacency and signless
Laplacian spectra the two seed graphs must also have equal coronals.  For
Laplacian spectra both sides may vary at once (:func:`build_composite`).

Every produced pair is certified by direct eigendecomposition of both
joins and an exact isomorphism test.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import HypothesisViolated, SpectraDiffer, SubjoinError
from .graph import (
    Graph,
    JoinKind,
    MatrixKind,
    complete,
    cycle,
    from_dict,
    graph_matrix,
    is_regular,
    join,
    path,
    petersen,
    star,
    to_dict,
)
from .isomorphism import is_isomorphic
from .linalg import coronal_eval_by_solve, spectrum_residual
from .verify import direct_spectrum

CERTIFY_TOL = 1e-8
CORONAL_TOL = 1e-9
CORONAL_POINTS = 20


@dataclass(frozen=True)
class CospectralSeedPair:
    h1: Graph
    h2: Graph
    kind: MatrixKind
    regular: bool
    note: str = ""
    name: str = ""


@dataclass
class CertifiedPair:
    j1: Graph
    j2: Graph
    kind: MatrixKind
    join: JoinKind
    residual: float
    isomorphic: bool
    provenance: dict = field(default_factory=dict)
    tol: float = CERTIFY_TOL

    @property
    def certified(self) -> bool:
        return self.residual <= self.tol and not self.isomorphic

    def to_dict(self) -> dict:
        return {
            "j1": to_dict(self.j1),
            "j2": to_dict(self.j2),
            "kind": self.kind.value,
            "join": self.join.value,
            "residual": self.residual,
            "isomorphic": self.isomorphic,
            "certified": self.certified,
            "provenance": self.provenance,
        }


@dataclass
class FamilyIssue:
    """An item of a family run that did not yield a certified pair."""

    seed: str
    partner: str
    join: str
    kind: str
    status: str  # "refused" (hypothesis not met) or "failed"
    detail: str

    def to_dict(self) -> dict:
        return dict(self.__dict__)


# -- predicates -------------------------------------------------------------

def cospectral(h1: Graph, h2: Graph, kind, tol: float = CERTIFY_TOL) -> bool:
    return h1.n == h2.n and spectrum_residual(direct_spectrum(h1, kind), direct_spectrum(h2, kind)) <= tol


def coronal_equal(h1: Graph, h2: Graph, kind, seed: int = 0) -> bool:
    """Sampled test of ``Gamma_M(H1) == Gamma_M(H2)`` for ``M`` in {A, Q}.

    Both coronals are rational functions with numerator and denominator of
    degree at most ``n``; agreement on more than ``2(n + 1)`` points away
    from the poles forces equality.  This is a numerical predicate, not a
    symbolic proof.
    """
    kind = MatrixKind.parse(kind)
    if kind is MatrixKind.L:
        raise ValueError("coronal equality is only meaningful for A and Q")
    M1 = graph_matrix(h1, kind).astype(float)
    M2 = graph_matrix(h2, kind).astype(float)
    n = max(h1.n, h2.n)
    count = max(CORONAL_POINTS, 2 * (n + 1) + 1)
    assert count > 2 * (n + 1)
    poles = np.concatenate([np.linalg.eigvalsh(M1), np.linalg.eigvalsh(M2)])
    radius = float(np.max(np.abs(poles))) + 3.0 if poles.size else 3.0
    rng = np.random.default_rng(seed)
    diffs = []
    while len(diffs) < count:
        x = float(rng.uniform(-radius, radius))
        if np.min(np.abs(poles - x)) < 1e-3:
            continue
        a = coronal_eval_by_solve(M1, x)
        b = coronal_eval_by_solve(M2, x)
        diffs.append(abs(a - b) / max(abs(a), abs(b), 1e-300))
    return max(diffs) <= CORONAL_TOL


# -- seed data --------------------------------------------------------------

def parse_seed_pairs(data: dict) -> list[CospectralSeedPair]:
    """Parse fixture JSON and re-verify every pair.

    The claimed kind is checked by direct eigendecomposition; regular pairs
    are checked for all three kinds.  Non-isomorphism is left to
    certification.
    """
    out = []
    for i, item in enumerate(data.get("pairs", [])):
        h1, h2 = from_dict(item["h1"]), from_dict(item["h2"])
        kind = MatrixKind.parse(item["kind"])
        regular = bool(item.get("regular", False))
        name = item.get("name") or f"pair{i}"
        if regular and not (is_regular(h1) and is_regular(h2)):
            raise HypothesisViolated(f"{name}: marked regular but is not")
        for k in (MatrixKind if regular else [kind]):
            if not cospectral(h1, h2, k):
                raise SpectraDiffer(f"{name}: graphs are not {k.value}-cospectral")
        out.append(CospectralSeedPair(h1, h2, kind, regular, item.get("note", ""), name))
    return out


def load_seed_pairs(path: str | Path | None = None) -> list[CospectralSeedPair]:
    if path is None:
        text = resources.files("subjoin").joinpath("data/seed_pairs.json").read_text()
    else:
        text = Path(path).read_text()
    return parse_seed_pairs(json.loads(text))


def default_partners(slot: str) -> list[tuple[str, Graph]]:
    if slot == "g":
        return [("K1", complete(1)), ("K2", complete(2)), ("P3", path(3)),
                ("K1,3", star(3)), ("C4", cycle(4))]
    return [("K2", complete(2)), ("C3", cycle(3)), ("C4", cycle(4)),
            ("K4", complete(4)), ("Petersen", petersen())]


# -- construction -----------------------------------------------------------

def _certify(j1: Graph, j2: Graph, kind: MatrixKind, join_kind: JoinKind,
             provenance: dict, tol: float) -> CertifiedPair:
    residual = spectrum_residual(direct_spectrum(j1, kind), direct_spectrum(j2, kind))
    if residual > tol:
        raise SpectraDiffer(f"joined graphs differ in {kind.value}-spectrum by {residual:.3g}")
    return CertifiedPair(j1, j2, kind, join_kind, float(residual), is_isomorphic(j1, j2),
                         provenance, tol)


def _default_slot(seed: CospectralSeedPair) -> str:
    return "g" if seed.regular else "h"


def build_pair(seed: CospectralSeedPair, partner: Graph, join_kind, matrix=None,
               slot: str | None = None, coronal_seed: int = 0,
               tol: float = CERTIFY_TOL) -> CertifiedPair:
    """Join both seed graphs with ``partner`` and certify the result."""
    join_kind = JoinKind(join_kind)
    kind = MatrixKind.parse(matrix or seed.kind)
    slot = slot or _default_slot(seed)
    h1, h2 = seed.h1, seed.h2
    if not cospectral(h1, h2, kind):
        raise HypothesisViolated(f"seed graphs are not {kind.value}-cospectral")
    if slot == "g":
        if not (is_regular(h1) and is_regular(h2)):
            raise HypothesisViolated("varying the first operand needs regular seed graphs")
        if kind is MatrixKind.Q and not is_regular(partner):
            raise HypothesisViolated("the signless Laplacian construction needs a regular partner")
        j1, _ = join(join_kind, h1, partner)
        j2, _ = join(join_kind, h2, partner)
    elif slot == "h":
        if not is_regular(partner):
            raise HypothesisViolated("varying the second operand needs a regular partner")
        if kind is not MatrixKind.L and not coronal_equal(h1, h2, kind, seed=coronal_seed):
            raise HypothesisViolated(f"seed graphs have different {kind.value}-coronals")
        j1, _ = join(join_kind, partner, h1)
        j2, _ = join(join_kind, partner, h2)
    else:
        raise ValueError(f"slot must be 'g' or 'h', got {slot!r}")
    prov = {"seed": seed.name, "slot": slot}
    return _certify(j1, j2, kind, join_kind, prov, tol)


def build_composite(g_seed: CospectralSeedPair, h_seed: CospectralSeedPair, join_kind,
                    tol: float = CERTIFY_TOL) -> CertifiedPair:
    """Laplacian construction with both operands varying: G1 * H1 versus G2 * H2."""
    join_kind = JoinKind(join_kind)
    kind = MatrixKind.L
    if not (is_regular(g_seed.h1) and is_regular(g_seed.h2)):
        raise HypothesisViolated("first-operand seed graphs must be regular")
    for s in (g_seed, h_seed):
        if not cospectral(s.h1, s.h2, kind):
            raise HypothesisViolated(f"{s.name} is not L-cospectral")
    j1, _ = join(join_kind, g_seed.h1, h_seed.h1)
    j2, _ = join(join_kind, g_seed.h2, h_seed.h2)
    return _certify(j1, j2, kind, join_kind, {"seed": f"{g_seed.name}x{h_seed.name}", "slot": "gh"},
                    tol)


def _named(partners: Iterable) -> list[tuple[str, Graph]]:
    out = []
    for i, p in enumerate(partners):
        out.append(p if isinstance(p, tuple) else (f"partner{i}", p))
    return out


def enumerate_family(seed: CospectralSeedPair, partners: Sequence, join_kinds=(JoinKind.SV, JoinKind.SE),
                     matrices=None, slot: str | None = None,
                     issues: list | None = None, tol: float = CERTIFY_TOL) -> list[CertifiedPair]:
    """Certified pairs for every partner, join kind and matrix kind.

    Items that fail are skipped; when ``issues`` is given, a
    :class:`FamilyIssue` is appended for each of them.
    """
    slot = slot or _default_slot(seed)
    if matrices is None:
        matrices = list(MatrixKind) if seed.regular else [seed.kind]
    out = []
    for pname, partner in _named(partners):
        for jk in join_kinds:
            jk = JoinKind(jk)
            for mk in matrices:
                mk = MatrixKind.parse(mk)
                try:
                    pair = build_pair(seed, partner, jk, mk, slot, tol=tol)
                    pair.provenance["partner"] = pname
                except HypothesisViolated as exc:
                    status, detail = "refused", str(exc)
                except SubjoinError as exc:
                    status, detail = "failed", f"{type(exc).__name__}: {exc}"
                else:
                    if pair.certified:
                        out.append(pair)
                        continue
                    status, detail = "failed", "joined graphs are isomorphic"
                if issues is not None:
                    issues.append(FamilyIssue(seed.name, pname, jk.value, mk.value, status, detail))
    return out


def run_fixtures(seeds: Sequence[CospectralSeedPair], partners: Sequence | None = None,
                 join_kinds=(JoinKind.SV, JoinKind.SE), matrices=None,
                 tol: float = CERTIFY_TOL) -> dict:
    """Family construction over all seeds.

    With ``partners=None`` each seed uses :func:`default_partners` for its
    slot and the Laplacian composites are added; an explicit list is used
    for every seed as is.  ``matrices`` restricts the spectra considered.
    """
    wanted = None if matrices is None else {MatrixKind.parse(m) for m in matrices}
    certified: list[CertifiedPair] = []
    issues: list[FamilyIssue] = []
    for seed in seeds:
        slot = _default_slot(seed)
        kinds = list(MatrixKind) if seed.regular else [seed.kind]
        if wanted is not None:
            kinds = [k for k in kinds if k in wanted]
        plist = default_partners(slot) if partners is None else partners
        certified += enumerate_family(seed, plist, join_kinds, kinds, slot, issues, tol)
    if partners is None and (wanted is None or MatrixKind.L in wanted):
        regular = [s for s in seeds if s.regular]
        lap = [s for s in seeds if not s.regular and s.kind is MatrixKind.L]
        for g_seed in regular:
            for h_seed in lap:
                for jk in join_kinds:
                    jk = JoinKind(jk)
                    name = f"{g_seed.name}x{h_seed.name}"
                    try:
                        pair = build_composite(g_seed, h_seed, jk, tol)
                    except HypothesisViolated as exc:
                        issues.append(FamilyIssue(name, "-", jk.value, "L", "refused", str(exc)))
                        continue
                    except SubjoinError as exc:
                        issues.append(FamilyIssue(name, "-", jk.value, "L", "failed",
                                                  f"{type(exc).__name__}: {exc}"))
                        continue
                    if pair.certified:
                        certified.append(pair)
                    else:
                        issues.append(FamilyIssue(name, "-", jk.value, "L", "failed",
                                                  "joined graphs are isomorphic"))
    failed = sum(i.status == "failed" for i in issues)
    return {
        "certified": [p.to_dict() for p in certified],
        "issues": [i.to_dict() for i in issues],
        "summary": {"certified": len(certified), "refused": len(issues) - failed, "failed": failed},
    }
