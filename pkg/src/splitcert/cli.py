"""Command-line front end.

Exit codes: 0 = the requested check passed (or pure output commands
succeeded), 1 = a verification-style check failed, 2 = usage or I/O error.
Output is deterministic for fixed inputs; no timestamps.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__, assets, mazur
from .collapse import (SearchBudget, free_faces, greedy_collapse,
                       is_collapsible, load_cert, replay)
from .complexes import euler_characteristic, load_scx
from .groups import (TietzeError, TietzeMove, abelianization, apply_tietze,
                     dumps_fp, free_reduce, load_fp, load_lnk, parse_word,
                     substitute, wirtinger, word_str)
from .report import verify_all
from .splitting import (OMEGA, FactorMultiset, SplitError, distinguishable,
                        verify_spine_split)


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12f}{z.imag:+.12f}j"


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.budget)


# ------------------------------------------------------------- subcommands

def cmd_complex(args) -> int:
    if args.action == "validate":
        try:
            K = load_scx(args.file)
        except ValueError as exc:
            print(f"invalid: {exc}", file=sys.stderr)
            return 1
        print(f"{K.name}: {len(K)} simplices, dim {K.dim()}, "
              f"chi {euler_characteristic(K)}, "
              f"{len(K.maximal_simplices())} maximal")
        return 0
    K = load_scx(args.file)
    if args.action == "chi":
        print(f"chi: {euler_characteristic(K)}")
        return 0
    if args.action == "free-faces":
        ff = free_faces(K)
        print(f"free faces: {len(ff)}")
        for f in ff:
            print(" ".join(f))
        return 0
    if args.action == "collapse":
        cert, residual = greedy_collapse(K)
        point = len(residual) == 1
        print(f"greedy steps: {len(cert.steps)}")
        print(f"residual: {len(residual)} simplices")
        print(f"collapsed to point: {'yes' if point else 'no'}")
        return 0 if point else 1
    # search
    verdict = is_collapsible(K, _budget(args))
    if verdict.kind == "yes":
        print(f"verdict: yes ({verdict.nodes} nodes, "
              f"{len(verdict.certificate.steps)} steps)")
        for f in verdict.certificate.steps:
            print(" ".join(f))
        return 0
    if verdict.kind == "no":
        print(f"verdict: no ({verdict.nodes} nodes, search exhausted)")
    else:
        print(f"verdict: unknown (budget exhausted at {verdict.nodes} nodes)")
    return 1


def cmd_cert_replay(args) -> int:
    K = load_scx(args.complex)
    cert = load_cert(args.cert)
    result = replay(K, cert)
    if not result.ok:
        step = result.trace[-1]
        print(f"replay failed at step {step.index} "
              f"({' '.join(step.face)}): {step.reason}")
        return 1
    print(f"replayed {len(result.trace)}/{len(cert.steps)} steps")
    if result.collapsed_to_point:
        print(f"collapsed to point: yes (vertex {result.final.vertices()[0]})")
        return 0
    print(f"collapsed to point: no ({len(result.final)} simplices left)")
    return 1


def cmd_jester(args) -> int:
    J = assets.load_complex("jester_hat", args.assets)
    A = assets.load_complex("jester_A", args.assets)
    B = assets.load_complex("jester_B", args.assets)
    try:
        cert = verify_spine_split(J, A, B, _budget(args))
    except SplitError as exc:
        print(f"jester split: FAIL ({exc})")
        return 1
    a, b, c = cert.evidence
    print(f"{cert.parts[0]} u {cert.parts[1]} = {cert.spine}")
    print(f"collapse certificates: {cert.parts[0]} {len(a.steps)} steps, "
          f"{cert.parts[1]} {len(b.steps)} steps, "
          f"intersection {len(c.steps)} steps")
    print(f"conclusion: {cert.conclusion}")
    print("jester split: PASS")
    return 0


def cmd_dunce(args) -> int:
    K = assets.load_complex("dunce_hat", args.assets)
    ff = free_faces(K)
    verdict = is_collapsible(K, _budget(args))
    chi = euler_characteristic(K)
    print(f"free faces: {len(ff)}")
    print(f"collapsibility verdict: {verdict.kind}")
    print(f"chi: {chi}")
    ok = not ff and verdict.kind == "no" and chi == 1
    print(f"dunce hat: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_wirtinger(args) -> int:
    d = load_lnk(args.file)
    sys.stdout.write(dumps_fp(wirtinger(d)))
    return 0


def cmd_group(args) -> int:
    if args.action == "reduce":
        print(word_str(free_reduce(parse_word(args.word))))
        return 0
    if args.action == "subst":
        mapping = {}
        for item in args.map:
            gen, _, image = item.partition("=")
            mapping[gen] = parse_word(image)
        print(word_str(substitute(parse_word(args.word), mapping)))
        return 0
    if args.action == "abelianize":
        print(str(abelianization(load_fp(args.file))))
        return 0
    # tietze
    p = load_fp(args.file)
    move = _parse_tietze_move(args)
    try:
        q = apply_tietze(p, move)
    except TietzeError as exc:
        print(f"tietze move rejected: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(dumps_fp(q))
    return 0


def _parse_certificate(text: str):
    terms = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(":")
        if len(parts) != 3:
            raise ValueError(
                f"certificate term {chunk!r} is not INDEX:SIGN:CONJUGATOR")
        index = int(parts[0])
        if parts[1] in ("+", "+1", "1"):
            sign = 1
        elif parts[1] in ("-", "-1"):
            sign = -1
        else:
            raise ValueError(f"bad certificate sign {parts[1]!r}")
        terms.append((index, sign, parse_word(parts[2])))
    return tuple(terms)


def _parse_tietze_move(args) -> TietzeMove:
    if args.add_gen is not None:
        name, _, word = args.add_gen.partition("=")
        return TietzeMove("add-generator", gen=name, word=parse_word(word))
    if args.add_rel is not None:
        if args.by is None:
            raise ValueError("--add-rel needs --by INDEX:SIGN:CONJ,...")
        return TietzeMove("add-relator", word=parse_word(args.add_rel),
                          certificate=_parse_certificate(args.by))
    if args.remove_rel is not None:
        if args.by is None:
            raise ValueError("--remove-rel needs --by INDEX:SIGN:CONJ,...")
        return TietzeMove("remove-relator", index=args.remove_rel,
                          certificate=_parse_certificate(args.by))
    if args.remove_gen is not None:
        if args.using is None:
            raise ValueError("--remove-gen needs --using RELATOR_INDEX")
        return TietzeMove("remove-generator", gen=args.remove_gen,
                          index=args.using)
    raise ValueError("choose one of --add-gen/--add-rel/"
                     "--remove-rel/--remove-gen")


def cmd_mazur(args) -> int:
    chain = mazur.derivation_chain(args.assets)
    cert = mazur.triangle_certificate(args.tol)
    a, b, c = cert.vertices
    print("triangle angles: pi/7 (A), pi/2 (B), pi/5 (C)")
    print(f"vertex A: {_fmt_complex(a)}")
    print(f"vertex B: {_fmt_complex(b)}")
    print(f"vertex C: {_fmt_complex(c)}")
    print(f"relator residual max: {cert.relator_report.max_residual:.3e}")
    print(f"elliptic proper powers: min displacement "
          f"{min(cert.order_displacements):.3e}")
    print("beta gamma matches half-turn at B: "
          f"{'yes' if cert.rotation_b_matches else 'no'}")
    for line in chain.lines():
        print(f"derivation: {line}")
    print(f"meridian displacement: {cert.meridian.word_displacement:.9f}")
    ok_rep = cert.representation_ok and chain.ok
    ok_mer = cert.meridian_ok
    print(f"PI1_BOUNDARY_NONTRIVIAL: {'PASS' if ok_rep and ok_mer else 'FAIL'}")
    print(f"MERIDIAN_NONTRIVIAL: {'PASS' if ok_mer else 'FAIL'}")
    return 0 if ok_rep and ok_mer else 1


def _parse_multiset(text: str) -> FactorMultiset:
    text = text.strip()
    if text in ("-", "empty"):
        return FactorMultiset.from_map({})
    counts = {}
    for chunk in text.split(","):
        label, sep, num = chunk.strip().partition(":")
        if not sep:
            raise ValueError(f"multiset term {chunk!r} is not LABEL:COUNT")
        counts[label] = OMEGA if num in ("w", "omega", "inf") else int(num)
    return FactorMultiset.from_map(counts)


def cmd_csi(args) -> int:
    m1 = _parse_multiset(args.first)
    m2 = _parse_multiset(args.second)
    verdict = distinguishable(m1, m2)
    print(f"distinguishable: {'yes' if verdict else 'no'}")
    return 0 if verdict else 1


def cmd_verify_all(args) -> int:
    report = verify_all(assets_dir=args.assets, tol=args.tol,
                        budget=_budget(args))
    sys.stdout.write(report.render())
    return 0 if report.overall == "PASS" else 1


# ------------------------------------------------------------------ parser

def _add_budget(p):
    p.add_argument("--budget", type=int, default=10 ** 6,
                   help="search node budget (default 10^6)")


def _add_assets(p):
    p.add_argument("--assets", default=None, metavar="DIR",
                   help="override the bundled asset directory")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="splitcert",
        description="Certificate checker for collapsibility splittings, "
                    "link-group derivations, and the sum invariant.")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complex", help="simplicial complex utilities")
    p.add_argument("action", choices=("validate", "chi", "free-faces",
                                      "collapse", "search"))
    p.add_argument("file")
    _add_budget(p)
    p.set_defaults(fn=cmd_complex)

    p = sub.add_parser("cert", help="collapse certificate replay")
    p.add_argument("action", choices=("replay",))
    p.add_argument("complex")
    p.add_argument("cert")
    p.set_defaults(fn=cmd_cert_replay)

    p = sub.add_parser("jester", help="verify the bundled spine splitting")
    p.add_argument("action", choices=("verify-split",))
    _add_assets(p)
    _add_budget(p)
    p.set_defaults(fn=cmd_jester)

    p = sub.add_parser("dunce", help="check the bundled dunce hat")
    p.add_argument("action", choices=("check",))
    _add_assets(p)
    _add_budget(p)
    p.set_defaults(fn=cmd_dunce)

    p = sub.add_parser("wirtinger",
                       help="presentation of a link diagram's group")
    p.add_argument("file")
    p.set_defaults(fn=cmd_wirtinger)

    p = sub.add_parser("group", help="word and presentation operations")
    p.add_argument("action", choices=("reduce", "subst", "tietze",
                                      "abelianize"))
    p.add_argument("word_or_file", metavar="WORD|FILE")
    p.add_argument("-m", "--map", action="append", default=[],
                   metavar="GEN=WORD", help="substitution image (repeatable)")
    p.add_argument("--add-gen", metavar="NAME=WORD")
    p.add_argument("--add-rel", metavar="WORD")
    p.add_argument("--remove-rel", type=int, metavar="INDEX")
    p.add_argument("--remove-gen", metavar="NAME")
    p.add_argument("--by", metavar="INDEX:SIGN:CONJ,...",
                   help="consequence certificate for add-rel/remove-rel")
    p.add_argument("--using", type=int, metavar="INDEX",
                   help="defining relator index for remove-gen")
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("mazur", help="boundary-group triangle certificate")
    p.add_argument("action", choices=("certify",))
    p.add_argument("--tol", type=float, default=1e-9)
    _add_assets(p)
    p.set_defaults(fn=cmd_mazur)

    p = sub.add_parser("csi", help="factor-multiset comparison")
    p.add_argument("action", choices=("distinguish",))
    p.add_argument("first", metavar="MULTISET",
                   help="e.g. 'J1:2,J5:w' ('-' for empty)")
    p.add_argument("second", metavar="MULTISET")
    p.set_defaults(fn=cmd_csi)

    p = sub.add_parser("verify-all", help="run every bundled check")
    _add_assets(p)
    p.add_argument("--tol", type=float, default=1e-9)
    _add_budget(p)
    p.set_defaults(fn=cmd_verify_all)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.fn is cmd_group:
        # the positional doubles as word or file depending on the action
        if args.action in ("reduce", "subst"):
            args.word = args.word_or_file
        else:
            args.file = args.word_or_file
    try:
        return args.fn(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
