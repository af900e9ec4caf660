"""The Mazur-link certification pipeline.

From the bundled two-component link diagram this module derives, step by
step, the boundary group data that the hyperbolic certificate consumes:

  1. Wirtinger presentation of the link group (9 generators, 9 relators;
     abelianization Z^2, one Z per component).
  2. Surgery quotient: impose the two filling relators. These are honest
     group quotients (they kill the meridian pairing; the abelianization
     collapses to 0, as it must for a homology-sphere boundary), so they
     use impose_relator, not Tietze moves.
  3. Tietze-move renaming: adjoin beta = x7, lambda = x2, alpha = beta
     lambda, gamma = alpha^2 via certified add-generator moves.
  4. Reduced-word identities: x1 = beta^-2 alpha beta, x5 = beta^-2
     alpha^2 = beta^-2 gamma, verified verbatim by free reduction.
  5. Triangle-group representation on the (pi/7, pi/2, pi/5) triangle:
     beta -> r_BC.r_AC and gamma -> r_AC.r_AB (products of reflections in
     the side geodesics; rotations through 2pi/5 at C and 2pi/7 at A in
     this placement). The relators gamma^7, beta^5, (beta gamma)^2 vanish
     numerically, beta.gamma = r_BC.r_AB is the half-turn at B, and the
     meridian word beta^-2 gamma visibly displaces A.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import assets
from .groups import (Presentation, TietzeMove, apply_tietze, concat,
                     free_reduce, impose_relator, parse_word, substitute,
                     wirtinger, word_str)
from .hyperbolic import (DEFAULT_TOL, NontrivialityReport, RelatorReport,
                         build_triangle, certify_nontrivial, certify_relators,
                         reflection, rotation)

R9 = parse_word("x1 X7 X2 x7")          # x1 = x7^-1 x2 x7
FILLING_RELATORS = (
    parse_word("x5 X2 X1"),             # x5 = x1 x2
    parse_word("X7 X5 x7 X3 X2 X7"),
)
MERIDIAN = parse_word("Beta Beta gamma")  # x5 in the final coordinates

TRIANGLE_ANGLES = (math.pi / 7, math.pi / 2, math.pi / 5)

TARGET_RELATORS = (
    parse_word(" ".join(["gamma"] * 7)),
    parse_word(" ".join(["beta"] * 5)),
    parse_word("beta gamma beta gamma"),
)


def link_presentation(assets_dir=None) -> Presentation:
    """Wirtinger presentation of the bundled link diagram."""
    return wirtinger(assets.load_diagram("mazur_link", assets_dir))


def boundary_presentation(assets_dir=None) -> Presentation:
    """The surgered (boundary) group: link group modulo the two filling
    relators, with beta/lambda/alpha/gamma adjoined by Tietze moves."""
    p = link_presentation(assets_dir)
    for r in FILLING_RELATORS:
        p = impose_relator(p, r)
    p = apply_tietze(p, TietzeMove("add-generator", gen="beta",
                                   word=parse_word("x7")))
    p = apply_tietze(p, TietzeMove("add-generator", gen="lambda",
                                   word=parse_word("x2")))
    p = apply_tietze(p, TietzeMove("add-generator", gen="alpha",
                                   word=parse_word("beta lambda")))
    p = apply_tietze(p, TietzeMove("add-generator", gen="gamma",
                                   word=parse_word("alpha alpha")))
    return p


def target_presentation() -> Presentation:
    """< beta, gamma | gamma^7, beta^5, (beta gamma)^2 >."""
    return Presentation(("beta", "gamma"), TARGET_RELATORS)


@dataclass(frozen=True)
class DerivationChain:
    """The three verbatim reduced-word identities."""
    x1_word: tuple
    x5_word: tuple
    x5_gamma_word: tuple

    @property
    def ok(self) -> bool:
        return (self.x1_word == parse_word("Beta Beta alpha beta")
                and self.x5_word == parse_word("Beta Beta alpha alpha")
                and self.x5_gamma_word == self.x5_word)

    def lines(self) -> list[str]:
        return [
            f"x1 = {word_str(self.x1_word)}",
            f"x5 = {word_str(self.x5_word)}",
            f"x5 = {word_str(MERIDIAN)} with gamma = alpha alpha"
            f" ({word_str(self.x5_gamma_word)})",
        ]


def derivation_chain(assets_dir=None) -> DerivationChain:
    """Reproduce the word-level derivation from the diagram's relators.

    Checks first that the ninth relator is literally x1 (x7^-1 x2 x7)^-1,
    then rewrites through beta = x7, lambda = x2, alpha = beta lambda,
    gamma = alpha^2.
    """
    p = link_presentation(assets_dir)
    if p.relators[8] != R9:
        raise ValueError(
            f"ninth relator is {word_str(p.relators[8])}, expected "
            f"{word_str(R9)}")
    # r9 solves to x1 = x7^-1 x2 x7; rename x7 -> beta, x2 -> lambda
    x1 = substitute(parse_word("X7 x2 x7"),
                    {"x7": parse_word("beta"), "x2": parse_word("lambda")})
    # lambda = beta^-1 alpha
    x1 = substitute(x1, {"beta": parse_word("beta"),
                         "lambda": parse_word("Beta alpha")})
    # first filling relator solves to x5 = x1 x2 = x1 lambda
    x5 = free_reduce(concat(x1, parse_word("Beta alpha")))
    # and beta^-2 gamma expands to x5 under gamma = alpha^2
    x5_gamma = substitute(MERIDIAN, {"beta": parse_word("beta"),
                                     "gamma": parse_word("alpha alpha")})
    return DerivationChain(x1, x5, x5_gamma)


@dataclass(frozen=True)
class TriangleCertificate:
    vertices: tuple[complex, complex, complex]
    assignment: dict
    relator_report: RelatorReport
    order_displacements: tuple[float, ...]
    rotation_b_matches: bool
    meridian: NontrivialityReport
    tol: float

    @property
    def representation_ok(self) -> bool:
        """Relators hold and beta/gamma have exact orders 5 and 7."""
        return (self.relator_report.ok
                and min(self.order_displacements) > 10 * self.tol
                and self.rotation_b_matches)

    @property
    def meridian_ok(self) -> bool:
        return self.meridian.ok and self.meridian.word_displacement > 1e-3


def triangle_certificate(tol: float = DEFAULT_TOL) -> TriangleCertificate:
    from .hyperbolic import evaluate, max_displacement, same_isometry

    a, b, c = build_triangle(TRIANGLE_ANGLES)
    # products of reflections in the sides: beta spins around C, gamma
    # around A, and their product is forced to be the half-turn at B
    # (r_BC r_AC . r_AC r_AB = r_BC r_AB)
    r_ab, r_ac, r_bc = reflection(a, b), reflection(a, c), reflection(b, c)
    assignment = {
        "beta": r_bc.compose(r_ac),
        "gamma": r_ac.compose(r_ab),
    }
    report = certify_relators(assignment, TARGET_RELATORS, tol)
    # proper powers of the elliptic generators must NOT be the identity
    displacements = []
    for gen, order in (("beta", 5), ("gamma", 7)):
        for k in range(1, order):
            w = tuple([(gen, 1)] * k)
            displacements.append(max_displacement(evaluate(assignment, w)))
    bg = evaluate(assignment, parse_word("beta gamma"))
    matches = same_isometry(bg, rotation(b, -math.pi), tol)
    meridian = certify_nontrivial(assignment, MERIDIAN, 0j, tol)
    return TriangleCertificate((a, b, c), assignment, report,
                               tuple(displacements), matches, meridian, tol)
