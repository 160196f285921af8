"""Command-line entry point.

Exit codes: 0 success or VERIFIED, 1 counterexample found, 2 usage or
input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import constructions
from .cycles import DEFAULT_BUDGET, BudgetExceeded, find_cycle_at_least, spectrum
from .graphcore import (
    FormatError,
    Graph,
    GraphError,
    TwoColoring,
    decode_graph6,
    emit_coloring,
    encode_graph6,
    is_bipartite,
    parse_coloring,
)
from .oracles import check_bollobas, check_bondy, check_erdos_gallai, sample_haggkvist
from .search import (
    CONJECTURE1_THRESHOLD,
    Frontier,
    KRange,
    SearchReport,
    Verdict,
    avoidance_search,
    avoids,
    count_odd_free_colorings,
    hosts_with_min_degree,
    recheck_witness,
    verify_conjecture1,
    verify_conjecture2,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

VERDICT_EXIT = {
    Verdict.VERIFIED: EXIT_OK,
    Verdict.COUNTEREXAMPLE: EXIT_COUNTEREXAMPLE,
    Verdict.EXHAUSTED_BUDGET: EXIT_BUDGET,
}


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    p.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    p.add_argument("--checkpoint", default=argparse.SUPPRESS)
    p.add_argument("--no-timestamp", action="store_true", default=argparse.SUPPRESS)
    p.add_argument("--witness-out", metavar="PATH", default=argparse.SUPPRESS,
                   help="also write any witness coloring to PATH")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="rtcycles",
        parents=[common],
        description="Monochromatic cycle spectra, extremal colorings and conjecture checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", parents=[common], help="cycle spectrum of graph6 input")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6-stdin", action="store_true")
    src.add_argument("--file")

    cp = sub.add_parser("construct", parents=[common], help="emit an extremal coloring")
    csub = cp.add_subparsers(dest="construction", required=True)
    tp = csub.add_parser("tight", parents=[common])
    tp.add_argument("-p", type=int, required=True)
    pp = csub.add_parser("pentagon", parents=[common])
    pp.add_argument("-t", type=int, required=True)
    fp = csub.add_parser("family", parents=[common])
    fp.add_argument("-p", type=int, required=True)
    fp.add_argument("--mask", required=True,
                    help="hex integer; bit i colors free edge i (1 = red)")
    for p in (tp, pp, fp):
        p.add_argument("--emit", choices=("coloring", "graph6"), default="coloring")

    vp = sub.add_parser("verify", parents=[common], help="verify a conjecture or a coloring")
    vp.add_argument("target", nargs="?", choices=("conjecture1",))
    vp.add_argument("-n", type=int)
    vp.add_argument("--uniform-color", action="store_true")
    vp.add_argument("--range", dest="krange")
    vp.add_argument("--no-prune", action="store_true")
    vp.add_argument("--inclusive", action="store_true",
                    help="admit hosts with minimum degree exactly 3n/4")
    vp.add_argument("--mode", choices=("odd-free",))
    vp.add_argument("--recheck", metavar="FILE")
    vp.add_argument("--file", help="coloring file for --mode (default: stdin)")

    sep = sub.add_parser("search", parents=[common], help="search avoiding colorings")
    ssub = sep.add_subparsers(dest="search_kind", required=True)
    ap = ssub.add_parser("avoid", parents=[common])
    ap.add_argument("--file", required=True, help="graph6 host file")
    ap.add_argument("--forbid-red", required=True)
    ap.add_argument("--forbid-blue", required=True)
    ap.add_argument("--seed", type=int)

    cnt = sub.add_parser("count", parents=[common], help="count odd-free colorings")
    csub2 = cnt.add_subparsers(dest="count_kind", required=True)
    op = csub2.add_parser("odd-free", parents=[common])
    op.add_argument("--file", required=True, help="graph6 host file")

    orc = sub.add_parser("oracle", parents=[common], help="classical-theorem suites")
    orc.add_argument("theorem", choices=("bondy", "bollobas", "erdos-gallai", "haggkvist",
                                         "conjecture2"))
    orc.add_argument("-n", type=int)
    orc.add_argument("-k", type=int)
    orc.add_argument("-c", help="conjecture2 density, e.g. 0.74")
    orc.add_argument("--samples", type=int)
    orc.add_argument("--colorings", type=int, default=10)
    orc.add_argument("--seed", type=int)
    return parser


# ------------------------------------------------------------------ helpers


def _opt(args, name, default):
    return getattr(args, name, default)


def _read_source(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _read_graphs(text: str) -> list[Graph]:
    graphs = []
    for i, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(decode_graph6(line.strip()))
        except FormatError as exc:
            raise FormatError(exc.reason, line=i, offset=exc.offset) from exc
    if not graphs:
        raise FormatError("no graph6 lines in input", line=1)
    return graphs


def _parse_list(text: str) -> set[int]:
    if text.strip() in ("", "-", "none"):
        return set()
    try:
        return {int(x) for x in text.split(",") if x.strip()}
    except ValueError as exc:
        raise UsageError(f"bad length list {text!r}") from exc


def _emit(out: dict, args, text_lines: list[str] | None = None) -> None:
    if _opt(args, "format", "json") == "text" and text_lines is not None:
        sys.stdout.write("\n".join(text_lines) + "\n")
    else:
        sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")


def _report_out(report: SearchReport, args, header: list[str] | None = None) -> int:
    timestamps = not _opt(args, "no_timestamp", False)
    d = report.to_dict(timestamps)
    if report.witness is not None and header is not None:
        # self-describing witness: `verify --recheck` reads the context lines
        d["witness"] = _witness_text(report.witness, header)
        witness_out = _opt(args, "witness_out", None)
        if witness_out:
            Path(witness_out).write_text(d["witness"])
    lines = [f"verdict: {d['verdict']}",
             f"hosts examined: {d['hosts_examined']}",
             f"colorings examined: {d['colorings_examined']}",
             f"colorings covered: {d['colorings_covered']} / {d['search_space']}"]
    if report.offending_k:
        lines.append(f"offending k: {report.offending_k}")
    lines += [f"note: {n}" for n in report.notes]
    _emit(d, args, lines)
    return VERDICT_EXIT[report.verdict]


def _witness_text(c: TwoColoring, header: list[str]) -> str:
    return "".join(f"c {h}\n" for h in header) + emit_coloring(c)


def _witness_context(text: str) -> dict[str, str]:
    ctx = {}
    for line in text.split("\n"):
        if line.startswith("c "):
            key, _, value = line[2:].partition(" ")
            ctx[key] = value
    return ctx


# ------------------------------------------------------------------ commands


def cmd_spectrum(args) -> int:
    text = sys.stdin.read() if args.graph6_stdin else _read_source(args.file)
    graphs = _read_graphs(text)
    budget = _opt(args, "budget", DEFAULT_BUDGET)
    text_mode = _opt(args, "format", "json") == "text"
    for g in graphs:
        s = spectrum(g, budget)
        if text_mode:
            sys.stdout.write(f"{encode_graph6(g)}: spectrum {s.lengths} ec={s.ec} oc={s.oc}\n")
        else:
            sys.stdout.write(json.dumps({"spectrum": s.lengths, "ec": s.ec, "oc": s.oc},
                                        separators=(",", ":")) + "\n")
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.construction == "tight":
        inst = constructions.tight_example(args.p)
    elif args.construction == "pentagon":
        inst = constructions.pentagon_blowup(args.t)
    else:
        try:
            value = int(args.mask, 16)
        except ValueError as exc:
            raise UsageError(f"mask {args.mask!r} is not hexadecimal") from exc
        inst = constructions.four_class_family(args.p, constructions.mask_from_int(args.p, value))
    if args.emit == "graph6":
        sys.stdout.write(encode_graph6(inst.host) + "\n")
    else:
        sys.stdout.write(f"c {inst.label}\n" + emit_coloring(inst.coloring))
    return EXIT_OK


def cmd_verify(args) -> int:
    modes = [args.target is not None, args.mode is not None, args.recheck is not None]
    if sum(modes) != 1:
        raise UsageError("verify needs exactly one of: conjecture1, --mode odd-free, --recheck FILE")
    if args.mode == "odd-free":
        return _verify_odd_free(args)
    if args.recheck is not None:
        return _recheck(args)
    return _verify_conjecture1(args)


def _verify_odd_free(args) -> int:
    c = parse_coloring(_read_source(args.file))
    red_ok, red_cert = is_bipartite(c.red)
    blue_ok, blue_cert = is_bipartite(c.blue)
    ok = red_ok and blue_ok
    out = {
        "verdict": f"no monochromatic odd cycle: {str(ok).lower()}",
        "no_monochromatic_odd_cycle": ok,
        "red_bipartite": red_ok,
        "blue_bipartite": blue_ok,
    }
    if not red_ok:
        out["red_odd_cycle"] = red_cert
    if not blue_ok:
        out["blue_odd_cycle"] = blue_cert
    _emit(out, args, [out["verdict"]])
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def _recheck(args) -> int:
    text = _read_source(args.recheck)
    c = parse_coloring(text)
    ctx = _witness_context(text)
    check = ctx.get("check", "")
    if check == "conjecture1":
        lo, hi = (int(x) for x in ctx["range"].split())
        uniform = ctx.get("uniform", "0") == "1"
        violated = recheck_witness(c, KRange(lo, hi), uniform)
        verdict = Verdict.COUNTEREXAMPLE if violated else Verdict.VERIFIED
        detail = {"range": [lo, hi], "uniform_color": uniform}
    elif check == "conjecture2":
        threshold = int(ctx["threshold"])
        violated = all(find_cycle_at_least(g, threshold) is None for g in (c.red, c.blue))
        verdict = Verdict.COUNTEREXAMPLE if violated else Verdict.VERIFIED
        detail = {"threshold": threshold}
    elif check == "avoid":
        red = _parse_list(ctx.get("forbid-red", ""))
        blue = _parse_list(ctx.get("forbid-blue", ""))
        verdict = Verdict.VERIFIED if avoids(c, red, blue) else Verdict.COUNTEREXAMPLE
        detail = {"forbid_red": sorted(red), "forbid_blue": sorted(blue)}
    else:
        raise UsageError("witness file lacks a 'c check ...' context line")
    out = {"verdict": verdict.value, "check": check, **detail}
    _emit(out, args, [f"recheck {check}: {verdict.value}"])
    return VERDICT_EXIT[verdict]


def _verify_conjecture1(args) -> int:
    if args.n is None:
        raise UsageError("verify conjecture1 needs -n N")
    krange = None
    if args.krange:
        try:
            krange = KRange.parse(args.krange)
        except ValueError as exc:
            raise UsageError(f"bad --range {args.krange!r}: expected LO:HI") from exc
    checkpoint = _opt(args, "checkpoint", None)
    resume = None
    if checkpoint and Path(checkpoint).exists():
        try:
            resume = Frontier.load(checkpoint)
        except (ValueError, KeyError) as exc:
            raise FormatError(f"checkpoint {checkpoint}: {exc}") from exc
    report = verify_conjecture1(
        args.n, krange, args.uniform_color,
        prune=not args.no_prune,
        strict=not args.inclusive,
        jobs=_opt(args, "jobs", 1),
        budget=_opt(args, "budget", DEFAULT_BUDGET),
        resume=resume,
    )
    if checkpoint:
        if report.verdict == Verdict.EXHAUSTED_BUDGET:
            hosts = list(hosts_with_min_degree(args.n, CONJECTURE1_THRESHOLD,
                                               strict=report.mode["strict_degree"]))
            report.frontier.save(checkpoint, hosts)
            report.notes.append(f"frontier written to {checkpoint}")
        elif resume is not None:
            Path(checkpoint).unlink()
            report.notes.append(f"resumed from {checkpoint}; finished, checkpoint removed")
    kr = report.mode["range"]
    header = ["check conjecture1", f"range {kr[0]} {kr[1]}",
              f"uniform {int(report.mode['uniform_color'])}"]
    return _report_out(report, args, header)


def cmd_search(args) -> int:
    g = _read_graphs(_read_source(args.file))[0]
    red = _parse_list(args.forbid_red)
    blue = _parse_list(args.forbid_blue)
    budget = _opt(args, "budget", DEFAULT_BUDGET)
    perm = list(range(g.n))
    if args.seed is not None:
        random.Random(args.seed).shuffle(perm)
    inverse = [0] * g.n
    for i, p in enumerate(perm):
        inverse[p] = i
    result = avoidance_search(g.relabel(perm), red, blue, budget)
    coloring = result.coloring.relabel(inverse) if result.coloring is not None else None
    header = ["check avoid",
              f"forbid-red {','.join(map(str, sorted(red))) or '-'}",
              f"forbid-blue {','.join(map(str, sorted(blue))) or '-'}"]
    out = {
        "found": coloring is not None,
        "verdict": "FOUND" if coloring is not None else "ABSENT",
        "coloring": _witness_text(coloring, header) if coloring is not None else None,
        "nodes_expanded": result.nodes_expanded,
        "colorings_covered": result.colorings_covered,
        "search_space": result.search_space,
        "color_swap_symmetry": result.symmetry_reduced,
    }
    lines = [f"{out['verdict']}: covered {result.colorings_covered} / {result.search_space}"]
    if coloring is not None:
        lines.append(out["coloring"].rstrip("\n"))
    _emit(out, args, lines)
    return EXIT_OK


def cmd_count(args) -> int:
    g = _read_graphs(_read_source(args.file))[0]
    count = count_odd_free_colorings(g)
    out = {"count": count, "edges": g.m, "n": g.n}
    _emit(out, args, [str(count)])
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.theorem == "bondy":
        report = check_bondy(args.n or 6)
    elif args.theorem == "bollobas":
        report = check_bollobas(args.n or 6)
    elif args.theorem == "erdos-gallai":
        report = check_erdos_gallai(args.n or 6, args.k or 4)
    elif args.theorem == "haggkvist":
        if args.seed is None:
            raise UsageError("haggkvist sampling requires --seed")
        report = sample_haggkvist(args.k or 2, args.n or 10, args.samples or 100, args.seed)
    else:
        if args.seed is None or args.c is None or args.n is None:
            raise UsageError("conjecture2 sampling requires -c, -n and --seed")
        rep = verify_conjecture2(Fraction(args.c), args.n, args.samples or 10, args.colorings,
                                 args.seed, _opt(args, "budget", DEFAULT_BUDGET))
        return _report_out(rep, args, ["check conjecture2", f"threshold {rep.offending_k[0] if rep.offending_k else 3}"])
    d = report.to_dict()
    lines = [f"{report.theorem}: {'pass' if report.passed else 'FAIL'}",
             f"instances checked: {report.instances_checked}",
             f"exhaustive: {report.exhaustive}"]
    if report.observations:
        lines.append(f"observations: {report.observations}")
    _emit(d, args, lines)
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


COMMANDS = {
    "spectrum": cmd_spectrum,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "search": cmd_search,
    "count": cmd_count,
    "oracle": cmd_oracle,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"rtcycles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, GraphError) as exc:
        print(f"rtcycles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"rtcycles: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
