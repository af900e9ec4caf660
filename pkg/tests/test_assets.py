"""Validation of the bundled data files.

The interesting assertions are the ones a transcription could silently get
wrong: simplex counts, free-face structure, homology (via integer Smith
form of the boundary matrices), the decomposition identities, and the
certificate replays.
"""
import pytest

from splitcert import assets
from splitcert.collapse import free_faces, is_collapsible, replay
from splitcert.complexes import euler_characteristic, intersection, union
from splitcert.groups import linking_number, smith_invariants, wirtinger
from splitcert.mazur import R9


# ----------------------------------------------------------- basic loading

def test_all_assets_load():
    for name in assets.COMPLEXES:
        assert len(assets.load_complex(name)) > 0
    for name in assets.CERTIFICATES:
        assert len(assets.load_certificate(name).steps) > 0
    for name in assets.DIAGRAMS:
        assert assets.load_diagram(name).arcs


def test_assets_dir_override(asset_copy):
    K = assets.load_complex("dunce_hat", assets_dir=asset_copy)
    assert K == assets.load_complex("dunce_hat")
    with pytest.raises(OSError):
        assets.load_complex("dunce_hat", assets_dir=asset_copy / "nope")


@pytest.mark.parametrize("name,nv,ne,nt", [
    ("dunce_hat", 8, 24, 17),
    ("jester_hat", 9, 29, 21),
    ("jester_C", 9, 16, 8),
])
def test_face_vectors(name, nv, ne, nt):
    K = assets.load_complex(name)
    assert len(K.vertices()) == nv
    assert len(K.simplices_of_dim(1)) == ne
    assert len(K.simplices_of_dim(2)) == nt
    assert euler_characteristic(K) == nv - ne + nt == 1


@pytest.mark.parametrize("name", ["dunce_hat", "jester_hat", "jester_A",
                                  "jester_B", "jester_C"])
def test_pure_two_dimensional(name):
    K = assets.load_complex(name)
    assert K.dim() == 2
    assert all(len(s) == 3 for s in K.maximal_simplices())


# ------------------------------------------------- homology (SNF oracle)

def _boundary_matrices(K):
    """Integer boundary maps d2: triangles -> edges, d1: edges -> vertices."""
    verts = K.vertices()
    edges = K.simplices_of_dim(1)
    tris = K.simplices_of_dim(2)
    vi = {v: i for i, v in enumerate(verts)}
    ei = {e: i for i, e in enumerate(edges)}
    d1 = []
    for (u, v) in edges:
        row = [0] * len(verts)
        row[vi[v]] += 1
        row[vi[u]] -= 1
        d1.append(row)
    d2 = []
    for (u, v, w) in tris:
        row = [0] * len(edges)
        row[ei[(v, w)]] += 1
        row[ei[(u, w)]] -= 1
        row[ei[(u, v)]] += 1
        d2.append(row)
    return d2, d1


def _homology(K):
    """(H1 free rank, H1 torsion factors, H2 free rank) over Z."""
    d2, d1 = _boundary_matrices(K)
    s2 = smith_invariants(d2) if d2 else []
    s1 = smith_invariants(d1) if d1 else []
    rank2, rank1 = len(s2), len(s1)
    n_edges = len(d1)
    n_tris = len(d2)
    h1_rank = (n_edges - rank1) - rank2
    torsion = tuple(d for d in s2 if d > 1)
    h2_rank = n_tris - rank2
    return h1_rank, torsion, h2_rank


@pytest.mark.parametrize("name", ["dunce_hat", "jester_hat"])
def test_contractible_candidates_have_trivial_homology(name):
    K = assets.load_complex(name)
    h1_rank, torsion, h2_rank = _homology(K)
    assert h1_rank == 0
    assert torsion == ()
    assert h2_rank == 0


def test_homology_oracle_detects_a_circle():
    # sanity-check the oracle itself on the hollow triangle
    from splitcert.complexes import build
    hollow = build([("a", "b"), ("b", "c"), ("a", "c")])
    h1_rank, torsion, h2_rank = _homology(hollow)
    assert (h1_rank, torsion, h2_rank) == (1, (), 0)


# ------------------------------------------------------ collapse structure

@pytest.mark.parametrize("name", ["dunce_hat", "jester_hat"])
def test_no_free_faces(name):
    assert free_faces(assets.load_complex(name)) == []


def test_dunce_hat_not_collapsible():
    verdict = is_collapsible(assets.load_complex("dunce_hat"))
    assert verdict.kind == "no"


def test_certificates_replay_to_points():
    expected_end = {"jester_C": "v", "jester_A": "w", "jester_B": "w"}
    for name, end in expected_end.items():
        K = assets.load_complex(name)
        result = replay(K, assets.load_certificate(name))
        assert result.ok, f"{name} certificate broke"
        assert result.collapsed_to_point
        assert result.final.vertices() == [end]


def test_jester_C_certificate_matches_stated_order():
    cert = assets.load_certificate("jester_C")
    head = [("d", "w"), ("d", "e"), ("e", "f"), ("f", "v"), ("f", "g"),
            ("d", "g"), ("c", "g"), ("a", "g")]
    tail = [("d",), ("e",), ("f",), ("g",), ("w",), ("c",), ("b",), ("a",)]
    assert list(cert.steps) == head + tail


def test_decomposition_identities():
    J = assets.load_complex("jester_hat")
    A = assets.load_complex("jester_A")
    B = assets.load_complex("jester_B")
    C = assets.load_complex("jester_C")
    assert union(A, B).simplices == J.simplices
    assert intersection(A, B).simplices == C.simplices


def test_jester_edge_multiplicities():
    """Every edge lies in 2 or 3 triangles; the triple edges form a single
    5-cycle (the rim), so the complex has no boundary edge at all."""
    J = assets.load_complex("jester_hat")
    mult = {e: len(J.cofaces(e)) for e in J.simplices_of_dim(1)}
    assert set(mult.values()) == {2, 3}
    rim = sorted(e for e, m in mult.items() if m == 3)
    assert len(rim) == 5
    # walk the rim: it must close up into one cycle
    adj = {}
    for (u, v) in rim:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    assert all(len(nbrs) == 2 for nbrs in adj.values())
    start = rim[0][0]
    seen = {start}
    cur, prev = adj[start][0], start
    while cur != start:
        seen.add(cur)
        nxt = [x for x in adj[cur] if x != prev]
        assert len(nxt) == 1
        prev, cur = cur, nxt[0]
    assert seen == set(adj)


# ------------------------------------------------------------ link diagram

def test_mazur_link_shape():
    d = assets.load_diagram("mazur_link")
    assert len(d.arcs) == 9
    assert len(d.crossings) == 9
    assert sorted(len(c) for c in d.components) == [3, 6]


def test_mazur_link_presentation():
    p = wirtinger(assets.load_diagram("mazur_link"))
    assert len(p.generators) == 9
    assert len(p.relators) == 9
    assert p.relators[8] == R9


def test_mazur_linking_number():
    assert abs(linking_number(assets.load_diagram("mazur_link"), 0, 1)) == 1
