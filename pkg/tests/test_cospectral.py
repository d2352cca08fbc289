import json

import networkx as nx
import numpy as np
import pytest

from subjoin import cospectral as cs
from subjoin.errors import HypothesisViolated, SpectraDiffer
from subjoin.graph import (
    Graph,
    JoinKind,
    MatrixKind,
    complement,
    complete,
    cycle,
    disjoint_union,
    graph_matrix,
    is_regular,
    path,
    star,
    to_dict,
)


@pytest.fixture(scope="module")
def seeds():
    return cs.load_seed_pairs()


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _by(seeds, kind, regular):
    return [s for s in seeds if s.kind is kind and s.regular is regular]


def _check(pair):
    assert pair.certified
    for j in (pair.j1, pair.j2):
        assert j.n <= 64
    a, b = (np.linalg.eigvalsh(graph_matrix(j, pair.kind).astype(float)) for j in (pair.j1, pair.j2))
    assert np.max(np.abs(a - b)) <= 1e-8
    assert not nx.is_isomorphic(_nx(pair.j1), _nx(pair.j2))


# -- fixtures -----------------------------------------------------------------

def test_shipped_seeds_reverify(seeds):
    assert len(seeds) >= 6
    kinds = {(s.kind, s.regular) for s in seeds}
    assert (MatrixKind.A, True) in kinds
    assert {MatrixKind.A, MatrixKind.L, MatrixKind.Q} <= {k for k, _ in kinds}
    for s in seeds:
        assert not nx.is_isomorphic(_nx(s.h1), _nx(s.h2))
        if s.regular:
            assert is_regular(s.h1) and is_regular(s.h2)


def test_loader_rejects_non_cospectral(tmp_path):
    bad = {"pairs": [{"h1": to_dict(path(4)), "h2": to_dict(star(3)), "kind": "A",
                      "regular": False, "note": ""}]}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    with pytest.raises(SpectraDiffer):
        cs.load_seed_pairs(p)


def test_loader_rejects_false_regular_flag(tmp_path):
    h1, h2 = star(4), disjoint_union(cycle(4), complete(1))
    data = {"pairs": [{"h1": to_dict(h1), "h2": to_dict(h2), "kind": "A", "regular": True}]}
    p = tmp_path / "f.json"
    p.write_text(json.dumps(data))
    with pytest.raises(HypothesisViolated):
        cs.load_seed_pairs(p)


# -- coronal equality ---------------------------------------------------------

def test_coronal_equal_examples():
    k14, c4k1 = star(4), disjoint_union(cycle(4), complete(1))
    assert not cs.coronal_equal(k14, c4k1, "a")
    assert cs.coronal_equal(k14, k14, "a")
    assert cs.coronal_equal(cycle(6), disjoint_union(cycle(3), cycle(3)), "a")
    assert cs.coronal_equal(cycle(6), disjoint_union(cycle(3), cycle(3)), "q")
    with pytest.raises(ValueError):
        cs.coronal_equal(k14, k14, "l")


def test_shipped_irregular_a_and_q_seeds(seeds):
    # every irregular A or Q seed except the classic star pair has equal coronals
    for s in seeds:
        if s.regular or s.kind is MatrixKind.L:
            continue
        equal = cs.coronal_equal(s.h1, s.h2, s.kind)
        is_star_pair = any(nx.is_isomorphic(_nx(h), _nx(star(4))) for h in (s.h1, s.h2))
        assert equal != is_star_pair


# -- construction -------------------------------------------------------------

def test_a_part_a_regular_seed_with_p3(seeds):
    seed = _by(seeds, MatrixKind.A, True)[0]
    pair = cs.build_pair(seed, path(3), JoinKind.SV, MatrixKind.A)
    _check(pair)


def test_l_part_b_with_c4(seeds):
    for seed in _by(seeds, MatrixKind.L, False):
        for jk in JoinKind:
            _check(cs.build_pair(seed, cycle(4), jk, MatrixKind.L, slot="h"))


def test_q_part_b(seeds):
    for seed in _by(seeds, MatrixKind.Q, False):
        _check(cs.build_pair(seed, cycle(4), JoinKind.SE, MatrixKind.Q, slot="h"))


def test_star_pair_refused():
    seed = cs.CospectralSeedPair(star(4), disjoint_union(cycle(4), complete(1)), MatrixKind.A, False)
    with pytest.raises(HypothesisViolated):
        cs.build_pair(seed, cycle(4), JoinKind.SV)


def test_identical_seed_graphs_are_isomorphic():
    seed = cs.CospectralSeedPair(cycle(5), cycle(5), MatrixKind.A, True)
    pair = cs.build_pair(seed, path(3), JoinKind.SV, MatrixKind.A)
    assert pair.isomorphic and not pair.certified
    assert pair.residual <= 1e-12


def test_hypothesis_checks():
    irregular = cs.CospectralSeedPair(star(4), disjoint_union(cycle(4), complete(1)), MatrixKind.A, False)
    with pytest.raises(HypothesisViolated):
        cs.build_pair(irregular, path(3), "sv", slot="g")
    regular = cs.CospectralSeedPair(cycle(6), disjoint_union(cycle(3), cycle(3)), MatrixKind.A, True)
    with pytest.raises(HypothesisViolated):
        cs.build_pair(regular, path(3), "sv", MatrixKind.Q, slot="g")
    with pytest.raises(HypothesisViolated):
        cs.build_pair(regular, path(3), "sv", MatrixKind.A, slot="h")
    with pytest.raises(ValueError):
        cs.build_pair(regular, cycle(3), "sv", slot="x")
    # a non-cospectral kind is refused before anything is joined
    not_l = cs.CospectralSeedPair(star(4), disjoint_union(cycle(4), complete(1)), MatrixKind.L, False)
    with pytest.raises(HypothesisViolated):
        cs.build_pair(not_l, cycle(3), "sv", slot="h")


def test_coronal_check_invocation(seeds, monkeypatch):
    calls = []
    real = cs.coronal_equal

    def spy(*args, **kwargs):
        calls.append(args)
        return real(*args, **kwargs)

    monkeypatch.setattr(cs, "coronal_equal", spy)
    regular = _by(seeds, MatrixKind.A, True)[0]
    cs.build_pair(regular, path(3), JoinKind.SV, MatrixKind.A)
    assert calls == []
    for seed in _by(seeds, MatrixKind.A, False) + _by(seeds, MatrixKind.Q, False):
        n = len(calls)
        try:
            cs.build_pair(seed, cycle(4), JoinKind.SV)
        except HypothesisViolated:
            pass
        assert len(calls) == n + 1
    n = len(calls)
    cs.build_pair(_by(seeds, MatrixKind.L, False)[0], cycle(4), JoinKind.SV)
    assert len(calls) == n


def test_composite_laplacian(seeds):
    g_seed = _by(seeds, MatrixKind.A, True)[0]
    for h_seed in _by(seeds, MatrixKind.L, False):
        for jk in JoinKind:
            _check(cs.build_composite(g_seed, h_seed, jk))


def test_composite_needs_regular_first_seeds(seeds):
    l_seed = _by(seeds, MatrixKind.L, False)[0]
    with pytest.raises(HypothesisViolated):
        cs.build_composite(l_seed, l_seed, "sv")


# -- families -----------------------------------------------------------------

def test_enumerate_family_cardinality(seeds):
    seed = _by(seeds, MatrixKind.A, True)[0]
    partners = cs.default_partners("g")
    pairs = cs.enumerate_family(seed, partners, matrices=["a"])
    assert len(pairs) == 10
    for p in pairs:
        _check(p)
    assert cs.enumerate_family(seed, []) == []


def test_enumerate_family_records_issues():
    seed = cs.CospectralSeedPair(star(4), disjoint_union(cycle(4), complete(1)), MatrixKind.A, False,
                                 name="star")
    issues = []
    assert cs.enumerate_family(seed, [cycle(4), path(3)], issues=issues) == []
    assert len(issues) == 4
    assert all(i.status == "refused" for i in issues)
    same = cs.CospectralSeedPair(cycle(5), cycle(5), MatrixKind.A, True, name="same")
    issues = []
    cs.enumerate_family(same, [complete(1)], matrices=["a"], issues=issues)
    assert [i.status for i in issues] == ["failed", "failed"]


def test_run_fixtures(seeds):
    result = cs.run_fixtures(seeds)
    s = result["summary"]
    assert s["certified"] >= 6 and s["failed"] == 0
    for p in result["certified"]:
        assert p["certified"] and p["residual"] <= 1e-8 and not p["isomorphic"]
        j1 = Graph.from_edges(p["j1"]["n"], p["j1"]["edges"])
        j2 = Graph.from_edges(p["j2"]["n"], p["j2"]["edges"])
        assert not nx.is_isomorphic(_nx(j1), _nx(j2))
    slots = {p["provenance"]["slot"] for p in result["certified"]}
    assert slots == {"g", "h", "gh"}
    assert cs.run_fixtures(seeds, partners=[])["certified"] == []


def test_regular_seed_complements(seeds):
    # complements of cospectral regular graphs stay cospectral in all three senses
    seed = _by(seeds, MatrixKind.A, True)[0]
    for kind in MatrixKind:
        assert cs.cospectral(complement(seed.h1), complement(seed.h2), kind)
