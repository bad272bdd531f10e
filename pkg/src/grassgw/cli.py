"""Command-line interface.

Subcommands:

    decompose   formal GW/L/W/K decomposition of one Grassmannian
    verify      run a named verification sweep (exit 1 on failures)
    enumerate   list the diagrams of a frame with their invariants
    lr          one LR coefficient, or a full tensor decomposition
    bott        cohomology outcome for a raw blockwise weight
    table       offset-twist case table over a (k, n) grid

Partitions on the command line are comma-separated nonincreasing
integers; the empty string is the empty partition.  Output is
byte-deterministic for fixed inputs.  Exit codes: 0 success, 1
verification failures, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bott import FullWeight, bott, bott_sequence, weyl_dimension
from .decompose import decompose, gw_decompose
from .evendiagrams import classify_even, is_even_diagram, t_invariant
from .lr import lr_coefficient, tensor_decompose
from .pairing import PairingKind, classify_pairing
from .verify import SUITES, run_suite
from .young import Frame, count_S, enumerate_frame, is_symmetric, size

_SUITE_DEFAULT_NOTE = (
    "default bound is per suite (documented in the module); "
    "lower it for quicker runs")


def parse_partition(text: str) -> tuple[int, ...]:
    if text.strip() == "":
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise argparse.ArgumentTypeError(f"parts must be nonincreasing: {text}")
    return parts


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _summands_text(dec) -> str:
    chunks = []
    for theory, shift, mult in dec.sorted_summands():
        label = theory if shift == 0 else f"{theory}^{shift}"
        chunks.append(f"{label} x{mult}")
    return " + ".join(chunks) if chunks else "0"


def cmd_decompose(args) -> int:
    dec = decompose(args.theory, args.k, args.n, args.twist, args.shift)
    if args.format == "json":
        _emit(json.dumps(dec.to_dict(), indent=2, sort_keys=True) + "\n", args.out)
    elif args.format == "csv":
        lines = ["theory,shift,multiplicity"]
        lines += [f"{t},{s},{m}" for t, s, m in dec.sorted_summands()]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        head = (f"{args.theory.upper()}^{args.shift}(Gr({args.k},{args.n}), "
                f"det(Q)^{args.twist})  [{dec.twist_convention}]")
        _emit(head + "\n  = " + _summands_text(dec) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n)
    if args.format == "json":
        _emit(json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"suite {report.suite}: checked {report.checked}, "
                 f"failures {len(report.failures)}"]
        lines += [f"  FAIL {cell}: expected {exp}, got {got}"
                  for cell, exp, got in report.failures]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.passed else 1


def cmd_enumerate(args) -> int:
    frame = Frame(args.k, args.l)
    parts = enumerate_frame(frame)
    rows = []
    for idx, lam in enumerate(parts):
        rows.append({
            "index": idx,
            "partition": list(lam),
            "size": size(lam),
            "symmetric": is_symmetric(lam, frame),
            "even": is_even_diagram(lam, frame),
            "class": (classify_even(lam, frame).value
                      if classify_even(lam, frame) else None),
            "t": t_invariant(lam),
        })
    if args.format == "json":
        _emit(json.dumps({"frame": {"rows": args.k, "cols": args.l},
                          "count": len(parts),
                          "symmetric_count": sum(r["symmetric"] for r in rows),
                          "diagrams": rows}, indent=2, sort_keys=True) + "\n",
              args.out)
    elif args.format == "csv":
        lines = ["index,partition,size,symmetric,even,class,t"]
        for r in rows:
            lam = " ".join(str(p) for p in r["partition"])
            lines.append(f"{r['index']},{lam},{r['size']},"
                         f"{int(r['symmetric'])},{int(r['even'])},"
                         f"{r['class'] or ''},{r['t']}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"Y({args.k},{args.l}): {len(parts)} diagrams, "
                 f"{sum(r['symmetric'] for r in rows)} symmetric"]
        for r in rows:
            flags = "".join(["S" if r["symmetric"] else "-",
                             "E" if r["even"] else "-"])
            lam = ",".join(str(p) for p in r["partition"]) or "()"
            lines.append(f"  {r['index']:3d}  {lam:<{3 * args.k + 2}} "
                         f"|{r['size']:3d}|  {flags}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_lr(args) -> int:
    if args.nu is not None:
        value = lr_coefficient(args.lam, args.mu, args.nu)
        if args.format == "json":
            _emit(json.dumps({"lambda": list(args.lam), "mu": list(args.mu),
                              "nu": list(args.nu), "coefficient": value},
                             sort_keys=True) + "\n", args.out)
        else:
            _emit(f"{value}\n", args.out)
        return 0
    rows = args.rows if args.rows else max(len(args.lam) + len(args.mu), 1)
    dec = tensor_decompose(args.lam, args.mu, rows)
    items = sorted(dec.items())
    if args.format == "json":
        _emit(json.dumps({"lambda": list(args.lam), "mu": list(args.mu),
                          "rows": rows,
                          "terms": [{"weight": list(w), "multiplicity": m}
                                    for w, m in items]},
                         indent=2, sort_keys=True) + "\n", args.out)
    else:
        body = " + ".join(
            (f"{m}*" if m > 1 else "") + "S(" + ",".join(map(str, w)) + ")"
            for w, m in items) or "0"
        _emit(body + "\n", args.out)
    return 0


def cmd_bott(args) -> int:
    weight = args.weight
    if args.k is None:
        out = bott_sequence(weight)  # raw weight, no block validation
    else:
        if not 0 <= args.k <= len(weight):
            raise ValueError(f"--k must be between 0 and {len(weight)}")
        out = bott(FullWeight(weight[: args.k], weight[args.k:]))
    n = len(weight)
    if args.format == "json":
        payload = {"weight": list(weight), "k": args.k, "vanishes": out.vanishes}
        if not out.vanishes:
            payload.update(degree=out.degree, nu=list(out.weight),
                           dimension=weyl_dimension(out.weight, n))
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    elif out.vanishes:
        _emit("vanishes\n", args.out)
    else:
        _emit(f"degree {out.degree}, nu {','.join(map(str, out.weight))}, "
              f"dimension {weyl_dimension(out.weight, n)}\n", args.out)
    return 0


_OFFSET_CASES = (
    ("k=0 mod 4, n-k even | k=1 mod 4, n-k odd",
     lambda k, l: (k % 4 == 0 and l % 2 == 0) or (k % 4 == 1 and l % 2 == 1)),
    ("k even, n-k odd", lambda k, l: k % 2 == 0 and l % 2 == 1),
    ("k odd, n-k even", lambda k, l: k % 2 == 1 and l % 2 == 0),
    ("k=2 mod 4, n-k even", lambda k, l: k % 4 == 2 and l % 2 == 0),
    ("k=3 mod 4, n-k odd", lambda k, l: k % 4 == 3 and l % 2 == 1),
)


def cmd_table(args) -> int:
    lines = ["k,n,case,summands"]
    for n in range(2, args.max_n + 1):
        for k in range(1, n):
            l = n - k
            label = next(lbl for lbl, pred in _OFFSET_CASES if pred(k, l))
            dec = gw_decompose(k, n, l - 1, 0)
            summ = " + ".join(f"{t}[{s}]x{m}" for t, s, m in dec.sorted_summands())
            lines.append(f'{k},{n},"{label}",{summ}')
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="grassgw",
        description="Exact GW/L/W/K decompositions of Grassmannians and the "
                    "combinatorial identities behind them.")
    p.add_argument("--version", action="version", version=f"grassgw {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="formal decomposition of Gr(k,n)")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--twist", type=int, required=True,
                   help="power of det(Q); only its parity relative to n-k matters")
    d.add_argument("--theory", choices=["gw", "l", "w", "k"], default="gw")
    d.add_argument("--shift", "-r", type=int, default=0)
    d.add_argument("--format", choices=["json", "text", "csv"], default="json")
    d.add_argument("--out", metavar="FILE")
    d.set_defaults(fn=cmd_decompose)

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.add_argument("--max-n", type=int, default=None, help=_SUITE_DEFAULT_NOTE)
    v.add_argument("--format", choices=["json", "text"], default="text")
    v.add_argument("--out", metavar="FILE")
    v.set_defaults(fn=cmd_verify)

    e = sub.add_parser("enumerate", help="list diagrams of a frame")
    e.add_argument("--k", type=int, required=True, help="frame rows")
    e.add_argument("--l", type=int, required=True, help="frame cols")
    e.add_argument("--format", choices=["json", "text", "csv"], default="text")
    e.add_argument("--out", metavar="FILE")
    e.set_defaults(fn=cmd_enumerate)

    r = sub.add_parser("lr", help="LR coefficient or tensor decomposition")
    r.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    r.add_argument("--mu", type=parse_partition, required=True)
    r.add_argument("--nu", type=parse_partition, default=None)
    r.add_argument("--rows", type=int, default=None,
                   help="row bound for tensor decomposition")
    r.add_argument("--format", choices=["json", "text"], default="text")
    r.add_argument("--out", metavar="FILE")
    r.set_defaults(fn=cmd_lr)

    b = sub.add_parser("bott", help="cohomology of a blockwise weight")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--weight", type=parse_weight, required=True,
                   help="comma-separated integers, length n")
    b.add_argument("--k", type=int, default=None,
                   help="split point between the Q and R blocks")
    b.add_argument("--format", choices=["json", "text"], default="text")
    b.add_argument("--out", metavar="FILE")
    b.set_defaults(fn=cmd_bott)

    t = sub.add_parser("table", help="offset-twist case table as CSV")
    t.add_argument("--max-n", type=int, default=10)
    t.add_argument("--out", metavar="FILE")
    t.set_defaults(fn=cmd_table)
    return p


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "bott" and len(args.weight) != args.n:
        parser.error(f"weight has {len(args.weight)} entries, expected n={args.n}")
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        parser.error(str(exc))
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
