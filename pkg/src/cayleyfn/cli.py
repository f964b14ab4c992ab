"""Command-line front end.

Exit codes: 0 Cayley / Satisfied, 1 NotCayley / Violated, 2 Unknown,
3 input error (parse, size cap, not idempotent, not in centralizer),
4 internal inconsistency between deciders.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
import time
from pathlib import Path

from . import cayley, centralizer, digraph, oracle, symbolic
from .dot import digraph_dot, materialization_dot, phi_dot
from .errors import CayleyError, InconsistencyError, ParseError
from .transformation import Transformation, format_two_row, parse, to_record

EXIT_INPUT = 3
EXIT_INCONSISTENT = 4

SYM_EXIT = {symbolic.SymStatus.SATISFIED: 0, symbolic.SymStatus.VIOLATED: 1,
            symbolic.SymStatus.UNKNOWN: 2}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _load(path: str) -> Transformation:
    text = _read(path)
    try:
        return parse(text)
    except ParseError as exc:
        if exc.line is not None:
            raise ParseError(f"{path}:{exc.line}:{exc.column}: {exc.message}") from None
        raise ParseError(f"{path}: {exc.message}") from None


def _emit(record: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(record, sort_keys=True, indent=2))
    else:
        print("\n".join(text_lines))


def _set(alpha: Transformation, vertices) -> str:
    return "{" + ", ".join(alpha.label(v) for v in sorted(vertices)) + "}"


def _seq(alpha: Transformation, vertices) -> str:
    return " ".join(alpha.label(v) for v in vertices)


# ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    t0 = time.perf_counter()
    alpha = _load(args.file)
    dec = digraph.decompose(alpha)
    sim = dec.cycle_vertices
    s = max(dec.depth)
    om = digraph.omega(alpha)
    sb = digraph.sup_b(alpha)
    comps = []
    text = [f"size: {alpha.size}", f"components: {len(dec.components)}"]
    for i, c in enumerate(dec.components):
        comps.append({"cycle": list(c.cycle),
                      "branches": [list(b.path) for b in c.branches]})
        lengths = [b.length for b in c.branches]
        text.append(f"  [{i}] cycle ({_seq(alpha, c.cycle)}), "
                    f"{len(c.branches)} branches" + (f", lengths {lengths}" if lengths else ""))
    record = {"input": to_record(alpha), "components": comps,
              "stable_image": sorted(sim), "stabilizer": s,
              "omega": sorted(om), "sup_b": sb}
    text += [f"stable image: {_set(alpha, sim)}", f"stabilizer: {s}",
             f"omega: {_set(alpha, om)}", f"sup_b: {sb}"]
    if args.oracle:
        table = oracle.is_cayley_bruteforce(alpha)
        record["oracle"] = table.to_record() if table else None
        text.append("oracle: " + (f"witness with a = {alpha.label(table.element)}"
                                  if table else "no witness semigroup"))
    if args.dot:
        Path(args.dot).write_text(digraph_dot(alpha))
        text.append(f"dot: {args.dot}")
    text.append(f"time: {time.perf_counter() - t0:.3f}s")
    _emit(record, args.json, text)
    return 0


def _oracle_verdict(alpha: Transformation):
    table = oracle.is_cayley_bruteforce(alpha)
    if table is None:
        return cayley.CayleyVerdict(cayley.Status.NOT_CAYLEY, "oracle"), None
    return cayley.CayleyVerdict(cayley.Status.CAYLEY, "oracle", table.element,
                                {"table": table.to_record()}), table


def cmd_cayley(args) -> int:
    alpha = _load(args.file)
    table = None
    if args.criterion == "oracle":
        verdict, table = _oracle_verdict(alpha)
    else:
        runner = {"zupnik": cayley.zupnik_finite,
                  "digraph": cayley.digraph_cayley_finite,
                  "both": cayley.is_cayley}[args.criterion]
        verdict = runner(alpha)
    text = [f"{verdict.status.value} ({verdict.criterion})"]
    if verdict.witness is not None:
        text.append(f"witness: {verdict.witness}")
    if table is not None:
        text.append(table.format(alpha.labels))
    record = {"input": to_record(alpha), "verdict": verdict.to_record()}
    _emit(record, args.json, text)
    return verdict.status.exit_code


def cmd_centralizer(args) -> int:
    alpha = _load(args.alpha)
    epsilon = _load(args.epsilon)
    check = centralizer.check_centralizer(alpha, epsilon)
    struct = centralizer.idempotent_structure(epsilon)
    names = [epsilon.label(c.fixed_vertex) for c in struct.components]
    record = {"alpha": to_record(alpha), "epsilon": to_record(epsilon),
              "commutes": check.ok, "violation": check.violation}
    text = [f"alpha in C(epsilon): {check.ok}"]
    if not check.ok:
        text.append(f"violation: {check.violation}")
        _emit(record, args.json, text)
        return EXIT_INPUT
    phi = centralizer.build_phi(alpha, epsilon)
    record["phi"] = {"components": names,
                     "satellite_counts": struct.satellite_counts(),
                     "map": list(phi.base.map)}
    text.append("Phi: " + ", ".join(f"{names[g]} -> {names[d]}"
                                   for g, d in enumerate(phi.base.map)))
    verdict = centralizer.main_theorem_finite(alpha, epsilon)
    record["main_theorem"] = verdict.to_record()
    text.append(f"M = {sorted(verdict.M)}, s = {verdict.s}")
    text.append(f"main theorem: {verdict.status.value}"
                + (f" ({verdict.failed_condition})" if verdict.failed_condition else ""))
    status = verdict.status
    if args.fallback and status is cayley.Status.UNKNOWN:
        fb = cayley.is_cayley(alpha)
        record["fallback"] = fb.to_record()
        text.append(f"fallback: {fb.status.value} ({fb.criterion})")
        status = fb.status
    lemmas = centralizer.verify_lemmas(alpha, epsilon)
    record["lemmas"] = [c.to_record() for c in lemmas]
    text.append("lemmas:")
    for c in lemmas:
        mark = "pass" if c.passed else ("FAIL" if c.strict else "note")
        text.append(f"  {c.lemma_id} [{c.component}] {mark}: {c.check}"
                    + (f" ({c.detail})" if c.detail else ""))
    if args.dot:
        Path(args.dot).write_text(phi_dot(phi))
        text.append(f"dot: {args.dot}")
    _emit(record, args.json, text)
    return status.exit_code


def cmd_symbolic(args) -> int:
    try:
        d, extras = symbolic.parse_descriptor(_read(args.descriptor))
    except ParseError as exc:
        raise ParseError(f"{args.descriptor}: {exc}") from None
    s = args.stabilizer if args.stabilizer is not None else extras.get("s", 0)
    verdicts = []
    if isinstance(d, symbolic.RroDescriptor):
        verdicts.append(symbolic.check_rro_condition(d))
        if args.phi:
            verdicts.append(symbolic.phi_rro_theorem(d))
    else:
        verdicts.append(symbolic.check_doubleray_theorem(d, s))
        if not d.has_infinite_branch():
            verdicts.append(symbolic.check_no_infinite_branch_case(d, s))
        if args.phi:
            verdicts.append(symbolic.phi_doubleray_theorem(d, s))
    record = {"descriptor": symbolic.descriptor_to_record(d), "s": s,
              "verdicts": [v.to_record() for v in verdicts]}
    text = [f"skeleton: {d.skeleton}, s = {s}"]
    for v in verdicts:
        where = f" at position {v.witness_position}" if v.witness_position is not None else ""
        alpha = f" -> alpha {v.alpha_status.value}" if v.alpha_status else ""
        text.append(f"{v.check}: {v.status.value}{where}{alpha}"
                    + (f" ({v.detail})" if v.detail else ""))
    if args.dot:
        mat = symbolic.materialize(d, args.radius)
        Path(args.dot).write_text(materialization_dot(mat))
        text.append(f"dot: {args.dot} (radius {args.radius})")
    _emit(record, args.json, text)
    primary = verdicts[-1] if args.phi else verdicts[0]
    return SYM_EXIT[primary.status]


def cmd_sweep(args) -> int:
    n = args.n
    if args.oracle and n > oracle.MAX_ENUMERATION_SIZE:
        raise oracle.CarrierTooLarge(
            f"--oracle sweeps are capped at n <= {oracle.MAX_ENUMERATION_SIZE}")
    if n < 1:
        raise ParseError("n must be positive")
    if args.samples:
        rng = random.Random(args.seed)
        maps = [tuple(rng.randrange(n) for _ in range(n)) for _ in range(args.samples)]
    else:
        if n > 6:
            raise oracle.CarrierTooLarge("exhaustive sweeps are capped at n <= 6; use --samples")
        maps = list(itertools.product(range(n), repeat=n))
    truth = {t.map for t in oracle.all_cayley_functions(n)} if args.oracle else None
    cayley_count = 0
    disagreements = []
    for m in maps:
        alpha = Transformation(m)
        z = cayley.zupnik_finite(alpha).status
        d = cayley.digraph_cayley_finite(alpha).status
        ok = z is d
        if truth is not None:
            ok = ok and (z is cayley.Status.CAYLEY) == (m in truth)
        if not ok:
            disagreements.append(list(m))
        cayley_count += d is cayley.Status.CAYLEY
    record = {"n": n, "maps": len(maps), "cayley": cayley_count,
              "oracle": bool(args.oracle), "seed": args.seed if args.samples else None,
              "disagreements": disagreements}
    if truth is not None:
        record["oracle_cayley"] = len(truth)
    text = [f"n = {n}: {cayley_count} Cayley of {len(maps)}"
            + (f" (seed {args.seed})" if args.samples else ""),
            f"disagreements: {len(disagreements)}"]
    if truth is not None:
        text.append(f"oracle: {len(truth)} Cayley functions")
    text += [f"  {m}" for m in disagreements[:10]]
    _emit(record, args.json, text)
    return EXIT_INCONSISTENT if disagreements else 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cayleyfn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="decompose the functional digraph")
    a.add_argument("file")
    a.add_argument("--dot", metavar="PATH")
    a.add_argument("--oracle", action="store_true", help="also search for a witness semigroup (n <= 4)")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("cayley", help="decide whether a transformation is Cayley")
    c.add_argument("file")
    c.add_argument("--criterion", choices=["zupnik", "digraph", "both", "oracle"], default="both")
    c.set_defaults(func=cmd_cayley)

    z = sub.add_parser("centralizer", help="analyse alpha commuting with an idempotent epsilon")
    z.add_argument("alpha")
    z.add_argument("epsilon")
    z.add_argument("--dot", metavar="PATH", help="write D_Phi")
    z.add_argument("--fallback", action="store_true",
                   help="decide with the full criteria when the sufficiency test is inconclusive")
    z.set_defaults(func=cmd_centralizer)

    y = sub.add_parser("symbolic", help="check an eventually periodic descriptor")
    y.add_argument("descriptor")
    y.add_argument("--stabilizer", type=int, default=None, help="s for double-ray checks")
    y.add_argument("--phi", action="store_true", help="read the descriptor as a D_Phi component")
    y.add_argument("--dot", metavar="PATH", help="write a truncation")
    y.add_argument("--radius", type=int, default=10)
    y.set_defaults(func=cmd_symbolic)

    w = sub.add_parser("sweep", help="cross-check the deciders over all maps on n points")
    w.add_argument("n", type=int)
    w.add_argument("--oracle", action="store_true", help="compare with table enumeration (n <= 3)")
    w.add_argument("--samples", type=int, default=0, help="random maps instead of all maps")
    w.add_argument("--seed", type=int, default=0)
    w.set_defaults(func=cmd_sweep)

    for sp in (a, c, z, y, w):
        sp.add_argument("--json", action="store_true", help="emit one structured record")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InconsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (CayleyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
