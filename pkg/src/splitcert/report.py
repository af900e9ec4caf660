"""The one-shot verification report.

verify_all runs every check the test suite certifies, against the bundled
assets (or an override directory), and renders a byte-stable report: one
line per check id, then an overall verdict. Randomized checks use fixed
seeds so two consecutive runs emit identical bytes.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import assets, mazur
from .collapse import (SearchBudget, elementary_collapse, free_faces,
                       greedy_collapse, is_collapsible, replay)
from .complexes import (SimplicialComplex, build, cone, euler_characteristic,
                        intersection, union)
from .groups import (Presentation, TietzeMove, _certificate_product,
                     abelianization, apply_tietze, linking_number, parse_word,
                     wirtinger)
from .splitting import (OMEGA, FactorMultiset, SplitError, distinguishable,
                        family_demo, verify_spine_split)

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def overall(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    def render(self) -> str:
        width = max(len(c.check_id) for c in self.checks)
        lines = [f"{c.check_id:<{width}}  {c.status:<4}  {c.detail}"
                 for c in self.checks]
        lines.append(f"overall {self.overall}")
        return "\n".join(lines) + "\n"


# ----------------------------------------------------- randomized helpers

def random_cone_complex(rng: random.Random) -> SimplicialComplex:
    """Cone over a small random complex; collapsible by construction."""
    nv = rng.randint(1, 5)
    verts = [f"v{i}" for i in range(nv)]
    maximal = [[v] for v in verts]
    for _ in range(rng.randint(0, 6)):
        size = rng.randint(1, min(3, nv))
        maximal.append(rng.sample(verts, size))
    base = build(maximal, name="base")
    return cone(base, "apex", name="rcone")


def random_multiset(rng: random.Random) -> FactorMultiset:
    labels = rng.sample([f"J{i}" for i in range(1, 9)], rng.randint(0, 5))
    counts = {}
    for lab in labels:
        counts[lab] = OMEGA if rng.random() < 0.4 else rng.randint(1, 6)
    return FactorMultiset.from_map(counts)


def _random_word(rng: random.Random, gens, max_len=4):
    letters = []
    for _ in range(rng.randint(0, max_len)):
        letters.append((rng.choice(gens), rng.choice((1, -1))))
    return tuple(letters)


def random_tietze_walk(rng: random.Random, steps: int) -> int:
    """Run a LIFO walk of certified Tietze moves from a seed presentation;
    apply_tietze itself asserts the abelianization is stable at each move.
    Returns the number of moves applied."""
    p = Presentation(("a", "b"),
                     (parse_word("a b A B"), parse_word("a a a")))
    stack: list[tuple] = []   # ("rel", certificate) | ("gen", name)
    fresh = 0
    applied = 0
    for _ in range(steps):
        deep = len(stack) >= 6
        if deep or (stack and rng.random() < 0.45):
            kind, payload = stack.pop()
            if kind == "rel":
                move = TietzeMove("remove-relator",
                                  index=len(p.relators) - 1,
                                  certificate=payload)
            else:
                move = TietzeMove("remove-generator", gen=payload,
                                  index=len(p.relators) - 1)
        elif rng.random() < 0.5:
            cert = []
            for _ in range(rng.randint(1, 3)):
                cert.append((rng.randrange(len(p.relators)),
                             rng.choice((1, -1)),
                             _random_word(rng, p.generators, 3)))
            cert = tuple(cert)
            word = _certificate_product(p.relators, cert)
            move = TietzeMove("add-relator", word=word, certificate=cert)
            stack.append(("rel", cert))
        else:
            fresh += 1
            name = f"g{fresh}"
            move = TietzeMove("add-generator", gen=name,
                              word=_random_word(rng, p.generators, 3))
            stack.append(("gen", name))
        p = apply_tietze(p, move)
        applied += 1
    return applied


# ------------------------------------------------------------- the checks

class _Assets:
    """Load-once cache; loading failures are remembered per asset."""

    def __init__(self, assets_dir):
        self.assets_dir = assets_dir
        self._cache: dict = {}

    def _get(self, key, loader):
        if key not in self._cache:
            try:
                self._cache[key] = ("ok", loader())
            except Exception as exc:
                self._cache[key] = ("err", f"asset unavailable: {exc}")
        kind, value = self._cache[key]
        if kind == "err":
            raise AssetError(value)
        return value

    def complex(self, name):
        return self._get(("scx", name),
                         lambda: assets.load_complex(name, self.assets_dir))

    def certificate(self, name):
        return self._get(("cert", name),
                         lambda: assets.load_certificate(name, self.assets_dir))

    def diagram(self, name):
        return self._get(("lnk", name),
                         lambda: assets.load_diagram(name, self.assets_dir))


class AssetError(Exception):
    pass


def _replay_check(K, cert, want_vertex=None):
    result = replay(K, cert)
    if not result.ok:
        step = result.trace[-1]
        return FAIL, (f"step {step.index} ({' '.join(step.face)}): "
                      f"{step.reason}")
    if not result.collapsed_to_point:
        return FAIL, f"replay left {len(result.final)} simplices"
    final = result.final.vertices()[0]
    if want_vertex and final != want_vertex:
        return FAIL, f"collapsed to {final}, expected {want_vertex}"
    return PASS, f"{len(cert.steps)} steps, collapsed to vertex {final}"


def _search_check(K, budget):
    verdict = is_collapsible(K, budget)
    if verdict.kind == "unknown":
        return SKIP, f"budget exhausted after {verdict.nodes} nodes"
    if verdict.kind != "yes":
        return FAIL, f"verdict {verdict.kind}"
    rr = replay(K, verdict.certificate)
    if not (rr.ok and rr.collapsed_to_point):
        return FAIL, "search certificate does not replay"
    return PASS, (f"certified in {verdict.nodes} nodes, "
                  f"{len(verdict.certificate.steps)} steps")


def verify_all(assets_dir=None, tol: float = 1e-9,
               budget: SearchBudget | None = None) -> VerificationReport:
    budget = budget or SearchBudget()
    store = _Assets(assets_dir)
    results: list[CheckResult] = []

    def check(check_id):
        def wrap(fn):
            try:
                status, detail = fn()
            except AssetError as exc:
                status, detail = FAIL, str(exc)
            except SplitError as exc:
                status, detail = ((SKIP, str(exc)) if "unknown" in str(exc)
                                  else (FAIL, str(exc)))
            except Exception as exc:  # a check must never crash the report
                status, detail = FAIL, f"{type(exc).__name__}: {exc}"
            results.append(CheckResult(check_id, status, detail))
        return wrap

    # --- dunce hat

    @check("DUNCE_FREE_FACES")
    def _():
        ff = free_faces(store.complex("dunce_hat"))
        if ff:
            return FAIL, f"{len(ff)} free faces, first {' '.join(ff[0])}"
        return PASS, "no free faces"

    @check("DUNCE_SEARCH_VERDICT")
    def _():
        verdict = is_collapsible(store.complex("dunce_hat"), budget)
        if verdict.kind == "unknown":
            return SKIP, "budget exhausted"
        ok = verdict.kind == "no"
        return (PASS if ok else FAIL), f"verdict {verdict.kind}"

    @check("DUNCE_EULER")
    def _():
        chi = euler_characteristic(store.complex("dunce_hat"))
        return (PASS if chi == 1 else FAIL), f"chi = {chi}"

    # --- jester hat decomposition and certificates

    @check("JESTER_FREE_FACES")
    def _():
        ff = free_faces(store.complex("jester_hat"))
        if ff:
            return FAIL, f"{len(ff)} free faces, first {' '.join(ff[0])}"
        return PASS, "no free faces (no free edge and no free vertex)"

    @check("JESTER_EULER")
    def _():
        chi = euler_characteristic(store.complex("jester_hat"))
        return (PASS if chi == 1 else FAIL), f"chi = {chi}"

    @check("JESTER_DECOMPOSITION")
    def _():
        J = store.complex("jester_hat")
        A = store.complex("jester_A")
        B = store.complex("jester_B")
        C = store.complex("jester_C")
        if union(A, B).simplices != J.simplices:
            return FAIL, "A union B differs from J"
        if intersection(A, B).simplices != C.simplices:
            return FAIL, "A intersect B differs from C"
        return PASS, "A u B = J and A n B = C"

    @check("JESTER_C_CERT_REPLAY")
    def _():
        return _replay_check(store.complex("jester_C"),
                             store.certificate("jester_C"), want_vertex="v")

    @check("JESTER_A_CERT_REPLAY")
    def _():
        return _replay_check(store.complex("jester_A"),
                             store.certificate("jester_A"))

    @check("JESTER_B_CERT_REPLAY")
    def _():
        return _replay_check(store.complex("jester_B"),
                             store.certificate("jester_B"))

    @check("JESTER_SPLIT_CERT")
    def _():
        cert = verify_spine_split(store.complex("jester_hat"),
                                  store.complex("jester_A"),
                                  store.complex("jester_B"), budget)
        return PASS, f"conclusion {cert.conclusion}"

    # --- search autonomy

    @check("SEARCH_JESTER_C")
    def _():
        return _search_check(store.complex("jester_C"), budget)

    @check("SEARCH_JESTER_A")
    def _():
        return _search_check(store.complex("jester_A"), budget)

    @check("SEARCH_JESTER_B")
    def _():
        return _search_check(store.complex("jester_B"), budget)

    @check("CONE_SWEEP")
    def _():
        rng = random.Random(91)
        small = SearchBudget(max_nodes=100_000)
        for i in range(1000):
            K = random_cone_complex(rng)
            chi0 = euler_characteristic(K)
            cert, residual = greedy_collapse(K)
            cur = K
            for step in cert.steps:
                cur = elementary_collapse(cur, step)
                if euler_characteristic(cur) != chi0:
                    return FAIL, f"cone {i}: chi drifted during greedy"
            verdict = is_collapsible(K, small)
            if verdict.kind != "yes":
                return FAIL, f"cone {i}: verdict {verdict.kind}"
            rr = replay(K, verdict.certificate)
            if not (rr.ok and rr.collapsed_to_point):
                return FAIL, f"cone {i}: certificate does not replay"
        return PASS, "1000 cones: chi conserved, all certificates replay"

    # --- link group

    @check("MAZUR_WIRTINGER_SHAPE")
    def _():
        p = wirtinger(store.diagram("mazur_link"))
        ok = len(p.generators) == 9 and len(p.relators) == 9
        return (PASS if ok else FAIL), (f"{len(p.generators)} generators, "
                                        f"{len(p.relators)} relators")

    @check("MAZUR_ABELIANIZATION")
    def _():
        inv = abelianization(wirtinger(store.diagram("mazur_link")))
        ok = inv.free_rank == 2 and not inv.factors
        return (PASS if ok else FAIL), f"H1 = {inv}"

    @check("MAZUR_R9")
    def _():
        p = wirtinger(store.diagram("mazur_link"))
        ok = p.relators[8] == mazur.R9
        return (PASS if ok else FAIL), "relator 9 is x1 X7 X2 x7"

    @check("MAZUR_LINKING")
    def _():
        lk = linking_number(store.diagram("mazur_link"), 0, 1)
        return (PASS if abs(lk) == 1 else FAIL), f"lk = {lk}"

    @check("MAZUR_DERIVATION_CHAIN")
    def _():
        chain = mazur.derivation_chain(store.assets_dir)
        return (PASS if chain.ok else FAIL), "; ".join(chain.lines())

    @check("MAZUR_BOUNDARY_H1")
    def _():
        inv = abelianization(mazur.boundary_presentation(store.assets_dir))
        ok = inv.free_rank == 0 and not inv.factors
        return (PASS if ok else FAIL), f"H1 of surgered group = {inv}"

    # --- triangle-group representation

    @check("TRIANGLE_RELATORS")
    def _():
        cert = mazur.triangle_certificate(tol)
        r = cert.relator_report
        status = PASS if r.ok else FAIL
        return status, f"max residual {r.max_residual:.3e}"

    @check("TRIANGLE_ELLIPTIC_ORDERS")
    def _():
        cert = mazur.triangle_certificate(tol)
        low = min(cert.order_displacements)
        ok = low > 10 * tol
        return (PASS if ok else FAIL), (
            f"proper powers displace probes by >= {low:.3e}")

    @check("TRIANGLE_BG_HALF_TURN")
    def _():
        cert = mazur.triangle_certificate(tol)
        ok = cert.rotation_b_matches
        return (PASS if ok else FAIL), "beta gamma = half turn at B"

    @check("GAUSS_BONNET_DEFECT")
    def _():
        from .hyperbolic import build_triangle, triangle_defect
        a, b, c = build_triangle(mazur.TRIANGLE_ANGLES)
        defect = triangle_defect(a, b, c)
        want = 11 * math.pi / 70
        err = abs(defect - want)
        return (PASS if err < tol else FAIL), (
            f"defect {defect:.12f}, |err| = {err:.3e}")

    @check("MERIDIAN_DISPLACEMENT")
    def _():
        cert = mazur.triangle_certificate(tol)
        d = cert.meridian.word_displacement
        ok = cert.meridian_ok
        return (PASS if ok else FAIL), f"origin moves {d:.9f} (> 1e-3)"

    # --- abelianization oracles and Tietze stability

    @check("ABELIAN_ORACLES")
    def _():
        free2 = abelianization(Presentation(("a", "b"),
                                            (parse_word("a b A B"),)))
        triv = abelianization(mazur.target_presentation())
        ok = (free2.free_rank == 2 and not free2.factors
              and triv.free_rank == 0 and not triv.factors)
        return (PASS if ok else FAIL), (
            f"commutator -> {free2}; (7,5,2) triangle quotient -> {triv}")

    @check("TIETZE_INVARIANCE")
    def _():
        rng = random.Random(4711)
        n = random_tietze_walk(rng, 500)
        return PASS, f"{n} certified moves, invariants stable"

    # --- sum invariant

    @check("FAMILY_DEMO")
    def _():
        n = family_demo(10)
        ok = n == 1024
        return (PASS if ok else FAIL), f"{n} pairwise-distinguishable"

    @check("DISTINGUISH_IRREFLEXIVE")
    def _():
        rng = random.Random(23)
        for _ in range(1000):
            m = random_multiset(rng)
            if distinguishable(m, m):
                return FAIL, f"multiset {m} separated from itself"
        return PASS, "1000 random multisets: never self-separated"

    return VerificationReport(tuple(results))
