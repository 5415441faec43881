"""Command-line front end.

Exit codes: 0 affirmative/pass, 1 negative/violation, 2 usage, parse or
budget error. ``--json`` switches every command to the machine format.
Budgets can be raised with ``NCTOP_JH_BUDGET``, ``NCTOP_GROUP_BUDGET`` and
``NCTOP_TUPLE_BUDGET``.
"""

from __future__ import annotations

import argparse
import itertools
import shlex
import sys

from . import rep as rep_mod
from .errors import NCTopError
from .formats import load_quiver, load_rep, parse_word, rep_to_dict
from .kernel import ALL_AXIOMS, axioms_for, check_axiom, is_idempotent
from .monoid import (
    CAVEAT,
    check_prop2,
    check_prop3,
    check_relation_semantics,
    exists_prefix_rewrite,
    fmt,
    monoid_eq,
    parse_monoid_word,
    relations_from_quiver,
)
from .opens import Flavor, Universe, all_letters, as_lattice, equiv, matching_sequence, wedge, word
from .quiver import Quiver
from .rep import Representation, enumerate_universe, jh_sequences
from .report import FINITE_FIELD, SAMPLE_BOUNDED, Report

KIND_OF_FLAVOR = {Flavor.LEFT: "left", Flavor.RIGHT: "right", Flavor.SCATTERED: "full"}


def _budget():
    return rep_mod.Budget.from_env()


def _universe(q: Quiver, p: int, max_dim: int) -> Universe:
    return Universe(enumerate_universe(q, p, max_dim, split_only=True, budget=_budget()))


def _seq(s) -> str:
    return " ".join(s)


def _rep_witness(m: Representation | None):
    if m is None:
        return None
    d = rep_to_dict(m)
    d.pop("format")
    return d


def cmd_jh(q: Quiver, m: Representation) -> Report:
    seqs = sorted(jh_sequences(m, _budget()))
    return Report(
        command=f"jh {q.name}",
        scale={"p": m.p, "total_dim": m.total_dim},
        verdict=True,
        details={"sequences": [_seq(s) for s in seqs]},
        caveats=[FINITE_FIELD],
    )


def cmd_member(q: Quiver, m: Representation, word_string: str) -> Report:
    w = parse_word(word_string, q, m.p)
    seq = matching_sequence(m, w)
    return Report(
        command=f"member {q.name} {shlex.quote(str(w))}",
        scale={"p": m.p, "total_dim": m.total_dim},
        verdict=seq is not None,
        witnesses=[_seq(seq)] if seq is not None else [],
        caveats=[FINITE_FIELD],
    )


def cmd_axioms(q: Quiver, flavor: str, p: int, max_dim: int, max_word_len: int) -> Report:
    """Check the axiom columns required for the flavor and probe the others."""
    flavor = Flavor(flavor)
    u = _universe(q, p, max_dim)
    lat = as_lattice(q, p, flavor, u)
    sample = lat.sample(max_word_len)
    covers = lat.covers()
    required = set(axioms_for(KIND_OF_FLAVOR[flavor]))
    rows, witnesses = [], []
    verdict = True
    for ax in ALL_AXIOMS:
        r = check_axiom(lat, ax, sample, covers)
        req = ax in required
        if req and not r.passed:
            verdict = False
        status = "pass" if r.passed else ("VIOLATED" if req else "fails (probe)")
        rows.append({
            "axiom": str(ax),
            "column": "required" if req else "probe",
            "status": status,
            "checked": r.checked,
            "violations": len(r.violations),
            "vacuous": r.vacuous,
        })
        if r.violations:
            v = r.violations[0]
            witnesses.append({
                "axiom": str(ax),
                "elements": [str(a) if not isinstance(a, tuple) else " , ".join(map(str, a)) for a in v.args],
                "failed": v.detail,
                "lhs": str(v.lhs),
                "rhs": str(v.rhs),
                "rep": _rep_witness(v.witness),
            })
    return Report(
        command=f"axioms {q.name} --flavor {flavor.value} --p {p} --max-dim {max_dim} --max-word-len {max_word_len}",
        scale={
            "p": p, "max_dim": max_dim, "max_word_len": max_word_len,
            "universe": len(u), "sample": len(sample), "covers": len(covers),
        },
        verdict=verdict,
        witnesses=witnesses,
        details={"axioms": rows},
        caveats=[FINITE_FIELD, SAMPLE_BOUNDED],
    )


def cmd_monoid(q: Quiver, sub: str, args: list[str], p: int = 2, side: str = "left") -> Report:
    r = relations_from_quiver(q)
    rels = [f"{fmt(a)} = {fmt(b)}" for a, b in r]
    if sub == "relations":
        return Report(f"monoid {q.name} relations", verdict=True, details={"relations": rels})
    if sub == "eq":
        v, v2 = (parse_monoid_word(a) for a in args)
        return Report(f"monoid {q.name} eq {fmt(v)} {fmt(v2)}", verdict=monoid_eq(v, v2, r),
                      details={"relations": rels})
    if sub == "prefix":
        v, pre = (parse_monoid_word(a) for a in args)
        return Report(f"monoid {q.name} prefix {fmt(v)} {fmt(pre)} --side {side}",
                      verdict=exists_prefix_rewrite(v, pre, r, side), details={"relations": rels})
    if sub == "semcheck":
        checks = check_relation_semantics(r, q, p, _budget())
        witnesses = [
            {"relation": f"{fmt(c.lhs)} = {fmt(c.rhs)}",
             "only_lhs": [_rep_witness(m) for m in c.only_lhs],
             "only_rhs": [_rep_witness(m) for m in c.only_rhs]}
            for c in checks if not c.ok
        ]
        return Report(
            f"monoid {q.name} semcheck --p {p}",
            scale={"p": p},
            verdict=all(c.ok for c in checks),
            witnesses=witnesses,
            details={"relations": [f"{fmt(c.lhs)} = {fmt(c.rhs)}: {'pass' if c.ok else 'FAIL'}" for c in checks]},
            caveats=[FINITE_FIELD, CAVEAT],
        )
    raise ValueError(f"unknown monoid subcommand {sub!r}")


def cmd_check(
    q: Quiver, what: str, args: list[str], p: int = 2, max_dim: int = 3, star_bound: int = 4,
) -> Report:
    u = _universe(q, p, max_dim)
    scale = {"p": p, "max_dim": max_dim, "universe": len(u)}
    caveats = [FINITE_FIELD, SAMPLE_BOUNDED]
    if what == "equiv":
        w, w2 = (parse_word(a, q, p) for a in args)
        wit = u.counterexample(w, w2) or u.counterexample(w2, w)
        return Report(f"check {q.name} equiv {shlex.quote(str(w))} {shlex.quote(str(w2))}", scale,
                      verdict=wit is None, witnesses=[_rep_witness(wit)] if wit else [], caveats=caveats)
    if what == "prop2":
        w = parse_word(args[0], q, p)
        rep = check_prop2(w, q, p, u)
        return Report(
            f"check {q.name} prop2 {shlex.quote(str(w))}", scale, verdict=rep.agree,
            witnesses=[{"rep": _rep_witness(m), "member": a, "monoid": b} for m, a, b in rep.disagreements],
            details={"checked": rep.checked, "relations": [f"{fmt(a)} = {fmt(b)}" for a, b in rep.relations]},
            caveats=caveats + [CAVEAT],
        )
    if what == "prop3":
        w, w2 = (parse_word(a, q, p) for a in args)
        rep = check_prop3(w, w2, q, p, u, star_bound)
        scale["star_len_bound"] = star_bound
        return Report(
            f"check {q.name} prop3 {shlex.quote(str(w))} {shlex.quote(str(w2))}", scale,
            verdict=rep.agree,
            witnesses=[x for x in (
                {"monoid_word": fmt(rep.monoid_witness)} if rep.monoid_witness is not None else None,
                {"rep": _rep_witness(rep.universe_witness)} if rep.universe_witness is not None else None,
            ) if x],
            details={"monoid_equiv": rep.monoid_equiv, "universe_equiv": rep.universe_equiv,
                     "scanned": rep.scanned, "note": rep.note},
            caveats=caveats + [CAVEAT],
        )
    if what == "prop4":
        return _prop4(q, p, max_dim, u, scale, caveats)
    raise ValueError(f"unknown check {what!r}")


def _prop4(q, p, max_dim, u, scale, caveats) -> Report:
    rows, witnesses = [], []
    letters = all_letters(q, p)
    verdict = True
    for fl in (Flavor.LEFT, Flavor.RIGHT):
        bad = 0
        for a, b in itertools.product(letters, repeat=2):
            x, y = wedge(word(fl, a), word(fl, b)), wedge(word(fl, b), word(fl, a))
            if not equiv(x, y, u):
                bad += 1
                wit = u.counterexample(x, y) or u.counterexample(y, x)
                witnesses.append({"flavor": fl.value, "pair": f"{a} {b}", "rep": _rep_witness(wit)})
        lat = as_lattice(q, p, fl, u)
        non_idem = [str(x) for x in lat.sample(2) if not is_idempotent(lat, x)]
        verdict = verdict and bad == 0 and not non_idem
        rows.append({"flavor": fl.value, "pairs": len(letters) ** 2, "non_commuting": bad,
                     "non_idempotent": len(non_idem)})
    return Report(f"check {q.name} prop4 --p {p} --max-dim {max_dim}", scale, verdict=verdict,
                  witnesses=witnesses, details={"sweep": rows}, caveats=caveats)


def cmd_dot(q: Quiver, flavor: str, p: int, max_dim: int, max_word_len: int) -> Report:
    """The order on all words up to a length bound, as a DOT digraph."""
    u = _universe(q, p, max_dim)
    lat = as_lattice(q, p, Flavor(flavor), u)
    nodes = lat.sample(max_word_len)
    lines = ["digraph leq {"]
    for x in nodes:
        lines.append(f'  "{x}";')
    for x, y in itertools.product(nodes, repeat=2):
        if x != y and lat.leq(x, y):
            lines.append(f'  "{x}" -> "{y}";')
    lines.append("}")
    return Report(f"dot {q.name} --flavor {flavor} --p {p} --max-dim {max_dim} --max-word-len {max_word_len}",
                  {"p": p, "max_dim": max_dim, "max_word_len": max_word_len},
                  verdict=True, details={"dot": "\n".join(lines)}, caveats=[SAMPLE_BOUNDED])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nctop", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def scale(sp, dim=3, wl=2):
        sp.add_argument("--p", type=int, default=2)
        sp.add_argument("--max-dim", type=int, default=dim)
        sp.add_argument("--max-word-len", type=int, default=wl)

    sp = sub.add_parser("jh", help="all Jordan-Hölder factor orders")
    sp.add_argument("quiver")
    sp.add_argument("rep")

    sp = sub.add_parser("member", help="membership in a basic open")
    sp.add_argument("quiver")
    sp.add_argument("rep")
    sp.add_argument("word", help='e.g. "l {S2}{S1}"')

    sp = sub.add_parser("axioms", help="check the axiom table")
    sp.add_argument("quiver")
    sp.add_argument("--flavor", choices="lro", default="l")
    scale(sp)

    sp = sub.add_parser("monoid", help="composition monoid queries")
    sp.add_argument("quiver")
    sp.add_argument("op", choices=["relations", "eq", "prefix", "semcheck"])
    sp.add_argument("words", nargs="*")
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--side", choices=["left", "right"], default="left")

    sp = sub.add_parser("check", help="monoid versus universe checks")
    sp.add_argument("quiver")
    sp.add_argument("what", choices=["prop2", "prop3", "prop4", "equiv"])
    sp.add_argument("words", nargs="*")
    sp.add_argument("--star-bound", type=int, default=4)
    scale(sp)

    sp = sub.add_parser("dot", help="DOT export of the order on short words")
    sp.add_argument("quiver")
    sp.add_argument("--flavor", choices="lro", default="l")
    scale(sp, wl=1)
    return ap


_ARITY = {"eq": 2, "prefix": 2, "relations": 0, "semcheck": 0,
          "prop2": 1, "prop3": 2, "prop4": 0, "equiv": 2}


def run(args) -> Report:
    q = load_quiver(args.quiver)
    if args.cmd == "jh":
        return cmd_jh(q, load_rep(args.rep, q))
    if args.cmd == "member":
        return cmd_member(q, load_rep(args.rep, q), args.word)
    if args.cmd == "axioms":
        return cmd_axioms(q, args.flavor, args.p, args.max_dim, args.max_word_len)
    if args.cmd == "dot":
        return cmd_dot(q, args.flavor, args.p, args.max_dim, args.max_word_len)
    op = args.op if args.cmd == "monoid" else args.what
    if len(args.words) != _ARITY[op]:
        raise ValueError(f"{op} takes {_ARITY[op]} word argument(s), got {len(args.words)}")
    if args.cmd == "monoid":
        return cmd_monoid(q, op, args.words, p=args.p, side=args.side)
    return cmd_check(q, op, args.words, p=args.p, max_dim=args.max_dim, star_bound=args.star_bound)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except (NCTopError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.json:
        print(report.to_json())
    elif args.cmd == "dot":
        print(report.details["dot"])
    else:
        print(report.render())
    return report.code()


if __name__ == "__main__":
    sys.exit(main())
