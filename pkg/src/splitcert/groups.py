"""Words, finitely presented groups, Wirtinger presentations, Tietze moves,
and abelianization.

Words are tuples of (generator, exponent) letters with exponent +1 or -1.
In text form a generator token starts with a lowercase letter and its
inverse is written by uppercasing the first letter: "a B c" is a.b^-1.c,
"x1 X7" is x1.x7^-1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Iterable, Mapping

Letter = tuple[str, int]
Word = tuple[Letter, ...]

_GEN = re.compile(r"^[a-z][A-Za-z0-9_]*$")

EPSILON: Word = ()


class TietzeError(ValueError):
    """A Tietze move whose certificate does not verify."""


def _check_gen(token: str) -> str:
    if not _GEN.match(token):
        raise ValueError(f"bad generator token {token!r}")
    return token


def parse_word(text: str) -> Word:
    """Parse 'a B c' notation. Empty text or '1' is the empty word."""
    if text.strip() == "1":
        return EPSILON
    letters = []
    for tok in text.split():
        if tok[0].isupper():
            letters.append((_check_gen(tok[0].lower() + tok[1:]), -1))
        else:
            letters.append((_check_gen(tok), +1))
    return tuple(letters)


def word_str(w: Word) -> str:
    out = []
    for g, e in w:
        out.append(g if e == 1 else g[0].upper() + g[1:])
    return " ".join(out) if out else "1"


def inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def concat(*ws: Word) -> Word:
    out: list[Letter] = []
    for w in ws:
        out.extend(w)
    return tuple(out)


def free_reduce(w: Word) -> Word:
    stack: list[Letter] = []
    for g, e in w:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


def conjugate(w: Word, by: Word) -> Word:
    """w conjugated by c: c^-1 w c."""
    return free_reduce(concat(inverse(by), w, by))


def power(w: Word, n: int) -> Word:
    if n < 0:
        return power(inverse(w), -n)
    return free_reduce(concat(*([w] * n)))


def substitute(w: Word, mapping: Mapping[str, Word]) -> Word:
    """Homomorphic image of w under generator -> word, freely reduced."""
    out: list[Letter] = []
    for g, e in w:
        if g not in mapping:
            raise ValueError(f"generator {g!r} not covered by the substitution")
        image = mapping[g] if e == 1 else inverse(mapping[g])
        out.extend(image)
    return free_reduce(tuple(out))


# ------------------------------------------------------------ presentations

@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        seen = set()
        for g in self.generators:
            _check_gen(g)
            if g in seen:
                raise ValueError(f"duplicate generator {g!r}")
            seen.add(g)
        for r in self.relators:
            for g, _ in r:
                if g not in seen:
                    raise ValueError(f"relator uses undeclared generator {g!r}")

    def __str__(self) -> str:
        gens = " ".join(self.generators)
        rels = ", ".join(word_str(r) for r in self.relators)
        return f"< {gens} | {rels} >"


def impose_relator(p: Presentation, w: Word) -> Presentation:
    """Quotient of the presented group by the normal closure of w.

    This is NOT a Tietze transformation: unless w already holds in the
    group, the isomorphism type (and in general the abelianization)
    changes. Use apply_tietze for presentation changes that must preserve
    the group.
    """
    return Presentation(p.generators, p.relators + (free_reduce(w),))


@dataclass(frozen=True)
class TietzeMove:
    """One of the four isomorphism-preserving presentation moves.

    kind "add-relator": word + certificate, a tuple of (index, sign,
      conjugator) terms whose product prod_i conj(relators[index]^sign,
      conjugator) freely reduces to the word being added.
    kind "remove-relator": index + the same style of certificate over the
      *other* relators.
    kind "add-generator": gen + defining word over the existing generators;
      appends the relator gen.definition^-1.
    kind "remove-generator": gen + index of its defining relator, which must
      contain exactly one letter of gen.
    """
    kind: str
    word: Word = EPSILON
    certificate: tuple[tuple[int, int, Word], ...] = ()
    gen: str = ""
    index: int = -1

    KINDS = ("add-relator", "remove-relator", "add-generator",
             "remove-generator")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown Tietze move kind {self.kind!r}")


def _certificate_product(relators: tuple[Word, ...],
                         certificate: Iterable[tuple[int, int, Word]]) -> Word:
    prod: Word = EPSILON
    for index, sign, conj in certificate:
        if not 0 <= index < len(relators):
            raise TietzeError(f"certificate references relator {index}, "
                              f"presentation has {len(relators)}")
        if sign not in (1, -1):
            raise TietzeError(f"certificate sign must be +-1, got {sign}")
        r = relators[index] if sign == 1 else inverse(relators[index])
        prod = free_reduce(concat(prod, conjugate(r, conj)))
    return prod


def apply_tietze(p: Presentation, move: TietzeMove) -> Presentation:
    """Apply a certified Tietze move; the presented group is unchanged.

    Raises TietzeError (and leaves p alone) when the certificate fails.
    Abelianization invariants are recomputed and compared as a safety net.
    """
    if move.kind == "add-relator":
        target = free_reduce(move.word)
        got = _certificate_product(p.relators, move.certificate)
        if got != target:
            raise TietzeError(
                f"certificate product {word_str(got)} != relator "
                f"{word_str(target)}")
        result = Presentation(p.generators, p.relators + (target,))
    elif move.kind == "remove-relator":
        if not 0 <= move.index < len(p.relators):
            raise TietzeError(f"no relator {move.index} to remove")
        rest = tuple(r for i, r in enumerate(p.relators) if i != move.index)
        got = _certificate_product(rest, move.certificate)
        if got != free_reduce(p.relators[move.index]):
            raise TietzeError(
                f"removed relator is not certified by the others: "
                f"{word_str(got)}")
        result = Presentation(p.generators, rest)
    elif move.kind == "add-generator":
        if move.gen in p.generators:
            raise TietzeError(f"generator {move.gen!r} already present")
        for g, _ in move.word:
            if g not in p.generators:
                raise TietzeError(f"defining word uses unknown {g!r}")
        rel = free_reduce(concat(((move.gen, 1),), inverse(move.word)))
        result = Presentation(p.generators + (move.gen,), p.relators + (rel,))
    else:  # remove-generator
        if move.gen not in p.generators:
            raise TietzeError(f"no generator {move.gen!r}")
        if not 0 <= move.index < len(p.relators):
            raise TietzeError(f"no relator {move.index}")
        rel = free_reduce(p.relators[move.index])
        hits = [i for i, (g, _) in enumerate(rel) if g == move.gen]
        if len(hits) != 1:
            raise TietzeError(
                f"relator {move.index} has {len(hits)} letters of "
                f"{move.gen!r}, need exactly 1")
        i = hits[0]
        _, e = rel[i]
        # rel = u g^e v = 1  =>  g^e = u^-1 v^-1  =>  g = (v u)^-e
        definition = power(concat(rel[i + 1:], rel[:i]), -e)
        if any(g == move.gen for g, _ in definition):
            raise TietzeError("defining word still mentions the generator")
        mapping = {g: ((g, 1),) for g in p.generators}
        mapping[move.gen] = definition
        # Keep relators that reduce to epsilon: silently dropping them
        # would shift the indices that later certificates refer to.  An
        # empty certificate removes a trivial relator explicitly.
        new_rels = tuple(substitute(r, mapping)
                         for i2, r in enumerate(p.relators) if i2 != move.index)
        gens = tuple(g for g in p.generators if g != move.gen)
        result = Presentation(gens, new_rels)

    before = abelianization(p)
    after = abelianization(result)
    if before != after:
        raise TietzeError(
            f"move changed abelianization {before} -> {after}; "
            "certificate verified but presentation is inconsistent")
    return result


# ----------------------------------------------------------- link diagrams

@dataclass(frozen=True)
class Crossing:
    over: str
    under_in: str
    under_out: str
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +-1, got {self.sign}")


@dataclass(frozen=True)
class LinkDiagram:
    arcs: tuple[str, ...]
    crossings: tuple[Crossing, ...]
    components: tuple[tuple[str, ...], ...]


def validate_diagram(d: LinkDiagram) -> None:
    """Raise ValueError unless d is a combinatorially sound diagram."""
    arcset = set(d.arcs)
    if len(arcset) != len(d.arcs):
        raise ValueError("duplicate arc names")
    for a in d.arcs:
        _check_gen(a)
    flat = [a for comp in d.components for a in comp]
    if sorted(flat) != sorted(d.arcs):
        raise ValueError("components do not partition the arcs")
    outs: dict[str, int] = {a: 0 for a in d.arcs}
    ins: dict[str, int] = {a: 0 for a in d.arcs}
    for c in d.crossings:
        for a in (c.over, c.under_in, c.under_out):
            if a not in arcset:
                raise ValueError(f"crossing references unknown arc {a!r}")
        outs[c.under_out] += 1
        ins[c.under_in] += 1
    for comp in d.components:
        touched = any(outs[a] or ins[a] for a in comp)
        if not touched:
            if len(comp) != 1:
                raise ValueError(
                    f"component {comp} has several arcs but no crossings")
            continue
        for a in comp:
            if outs[a] != 1 or ins[a] != 1:
                raise ValueError(
                    f"arc {a!r} must end under exactly one crossing on each "
                    f"side (out={outs[a]}, in={ins[a]})")


def wirtinger(d: LinkDiagram) -> Presentation:
    """One generator per arc; per crossing the relator
    under_out . over^sign . under_in^-1 . over^-sign."""
    validate_diagram(d)
    relators = []
    for c in d.crossings:
        w = ((c.under_out, 1), (c.over, c.sign),
             (c.under_in, -1), (c.over, -c.sign))
        relators.append(free_reduce(w))
    return Presentation(tuple(d.arcs), tuple(relators))


def linking_number(d: LinkDiagram, comp_a: int, comp_b: int) -> int:
    """Half the signed count of crossings between two components.

    Assumes a realizable diagram; for the bundled assets this is the
    meridian-pairing sanity value.
    """
    ca = set(d.components[comp_a])
    cb = set(d.components[comp_b])
    total = 0
    for c in d.crossings:
        under = c.under_in  # same component as under_out
        if (c.over in ca and under in cb) or (c.over in cb and under in ca):
            total += c.sign
    if total % 2:
        raise ValueError("odd inter-component crossing sum; diagram broken")
    return total // 2


# ---------------------------------------------------------- abelianization

def smith_invariants(rows: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form, with d1 | d2 | ... .

    Exact integer elimination; fine for the small matrices seen here.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return []
    nr, nc = len(m), len(m[0])
    diag: list[int] = []
    r = c = 0
    while r < nr and c < nc:
        piv = None
        best = 0
        for i in range(r, nr):
            for j in range(c, nc):
                v = abs(m[i][j])
                if v and (piv is None or v < best):
                    piv, best = (i, j), v
        if piv is None:
            break
        pi, pj = piv
        m[r], m[pi] = m[pi], m[r]
        for row in m:
            row[c], row[pj] = row[pj], row[c]
        while True:
            clean = True
            for i in range(nr):
                if i != r and m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][c]:
                        m[r], m[i] = m[i], m[r]
                        clean = False
            for j in range(nc):
                if j != c and m[r][j]:
                    q = m[r][j] // m[r][c]
                    for row in m:
                        row[j] -= q * row[c]
                    if m[r][j]:
                        for row in m:
                            row[c], row[j] = row[j], row[c]
                        clean = False
            if clean:
                break
        diag.append(abs(m[r][c]))
        r += 1
        c += 1
    # enforce the divisibility chain
    diag = [d for d in diag if d]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors (the entries > 1) plus the free rank."""
    factors: tuple[int, ...]
    free_rank: int

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.factors] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def abelianization(p: Presentation) -> AbelianInvariants:
    idx = {g: j for j, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for g, e in r:
            row[idx[g]] += e
        rows.append(row)
    if not rows:
        return AbelianInvariants((), len(p.generators))
    diag = smith_invariants(rows)
    return AbelianInvariants(tuple(d for d in diag if d != 1),
                             len(p.generators) - len(diag))


# ------------------------------------------------------------ file formats

def loads_fp(text: str) -> Presentation:
    gens: tuple[str, ...] | None = None
    rels: list[Word] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if gens is not None:
                raise ValueError(f"line {lineno}: second gens: line")
            gens = tuple(line[5:].split())
        elif line.startswith("rel:"):
            rels.append(parse_word(line[4:]))
        else:
            raise ValueError(f"line {lineno}: expected gens:/rel:, got {line!r}")
    if gens is None:
        raise ValueError("missing gens: line")
    return Presentation(gens, tuple(rels))


def load_fp(path) -> Presentation:
    return loads_fp(Path(path).read_text())


def dumps_fp(p: Presentation, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}".rstrip() for h in header.splitlines())
    lines.append("gens: " + " ".join(p.generators))
    lines.extend("rel: " + word_str(r) for r in p.relators)
    return "\n".join(lines) + "\n"


_CROSSING_FIELD = re.compile(r"^(over|in|out|sign)=(\S+)$")


def loads_lnk(text: str) -> LinkDiagram:
    arcs: list[str] = []
    crossings: list[Crossing] = []
    comps: list[tuple[str, ...]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("arc:"):
            arcs.extend(line[4:].split())
        elif line.startswith("x:"):
            fields = {}
            for tok in line[2:].split():
                m = _CROSSING_FIELD.match(tok)
                if not m:
                    raise ValueError(f"line {lineno}: bad crossing field {tok!r}")
                fields[m.group(1)] = m.group(2)
            missing = {"over", "in", "out", "sign"} - fields.keys()
            if missing:
                raise ValueError(f"line {lineno}: missing {sorted(missing)}")
            if fields["sign"] not in ("+", "-"):
                raise ValueError(f"line {lineno}: sign must be + or -")
            crossings.append(Crossing(over=fields["over"],
                                      under_in=fields["in"],
                                      under_out=fields["out"],
                                      sign=1 if fields["sign"] == "+" else -1))
        elif line.startswith("comp:"):
            comps.append(tuple(line[5:].split()))
        else:
            raise ValueError(f"line {lineno}: expected arc:/x:/comp:, got {line!r}")
    d = LinkDiagram(tuple(arcs), tuple(crossings), tuple(comps))
    validate_diagram(d)
    return d


def load_lnk(path) -> LinkDiagram:
    return loads_lnk(Path(path).read_text())


def dumps_lnk(d: LinkDiagram, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}".rstrip() for h in header.splitlines())
    for a in d.arcs:
        lines.append(f"arc: {a}")
    for c in d.crossings:
        sign = "+" if c.sign == 1 else "-"
        lines.append(f"x: over={c.over} in={c.under_in} out={c.under_out} "
                     f"sign={sign}")
    for comp in d.components:
        lines.append("comp: " + " ".join(comp))
    return "\n".join(lines) + "\n"
