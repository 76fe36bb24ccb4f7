"""Command line front end.

JSON goes to stdout and is byte-deterministic for a fixed command line and
input file; SVG drawings go to the path given.  Exit codes: 0 success,
1 parse or usage problems, 2 not two-dimensional, 3 a cap was exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__
from .errors import CapExceeded, NotTwoDimensional, PosetkitError
from .led import led_boolean, led_chain_union, led_downset, led_upper_bound
from .led import count_antichains as count_table
from .oracle import (
    critical_pairs,
    enumerate_classes,
    le_graph_diameter,
)
from .poset import DEFAULT_CAP, Poset, cover_pairs, downset_lattice, load_poset
from .realizer import realizer
from .revlex import diametral_pair, dominance_coordinates, reversal_distance
from .svg import dominance_svg


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; 2 is taken
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    p = _Parser(prog="posetkit")
    p.add_argument("--verbose", action="store_true",
                   help="print a timing line to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("led-bool", help="formula value for the subset lattice")
    s.add_argument("n", type=int)

    s = sub.add_parser("led-downset", help="polynomial diameter of the downset lattice")
    s.add_argument("file")
    s.add_argument("--breakdown", action="store_true")
    s.add_argument("--upper-bound-only", action="store_true")

    s = sub.add_parser("diametral", help="construct a diametral extension pair")
    s.add_argument("file")
    s.add_argument("--svg")
    s.add_argument("--scale", type=int, default=24)
    s.add_argument("--max-lattice", type=int, default=DEFAULT_CAP)

    s = sub.add_parser("oracle", help="brute-force checks")
    s.add_argument("file")
    s.add_argument("mode", choices=("diameter", "classes", "critical"))
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)

    s = sub.add_parser("count-antichains", help="antichain count by the DP")
    s.add_argument("file")

    s = sub.add_parser("led-chains", help="closed form for unions of chains")
    s.add_argument("lengths")
    return p


def _digest(data: str) -> str:
    return hashlib.sha256(data.encode("utf-8")).hexdigest()


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _run_led_bool(args) -> tuple:
    if not 1 <= args.n <= 10 ** 4:
        raise _Usage("n must lie in 1..10000")
    return str(args.n), {"led": str(led_boolean(args.n))}


def _run_led_downset(args) -> tuple:
    text = _read(args.file)
    P = _parse(text)
    if args.upper_bound_only:
        return text, {"upper_bound": str(led_upper_bound(P))}
    b = led_downset(P)
    result = {"led": str(b.led)}
    if args.breakdown:
        result.update(
            alpha=str(b.alpha), beta=str(b.beta),
            gamma=str(b.gamma), delta=str(b.delta),
        )
    return text, result


def _run_diametral(args) -> tuple:
    text = _read(args.file)
    P = _parse(text)
    cap = args.max_lattice
    L1, L2 = diametral_pair(P, cap)
    r = realizer(P)
    coords = dominance_coordinates(L1, L2)
    result = {
        "sigma": list(r.sigma),
        "sigma_bar": list(r.sigma_bar),
        "distance": str(reversal_distance(L1, L2)),
        "extension_1": [list(d) for d in L1.order],
        "extension_2": [list(d) for d in L2.order],
    }
    if args.svg:
        dl = downset_lattice(P, cap)
        covers = [
            (dl.downsets[a - 1], dl.downsets[b - 1])
            for a, b in cover_pairs(dl.lattice)
        ]
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(dominance_svg(coords, covers, args.scale))
        result["svg"] = args.svg
    return text, result


def _run_oracle(args) -> tuple:
    text = _read(args.file)
    P = _parse(text)
    if args.mode == "diameter":
        diam, pairs = le_graph_diameter(P, args.cap)
        result = {
            "diameter": str(diam),
            "diametral_pairs": [[list(a), list(b)] for a, b in pairs],
        }
    elif args.mode == "classes":
        classes = enumerate_classes(P, args.cap)
        result = {
            "classes": [
                {
                    "D": list(c.D),
                    "I": list(c.I),
                    "components": [list(k) for k in c.components],
                    "size": str(len(c.pairs)),
                }
                for c in classes
            ]
        }
    else:
        result = {"critical_pairs": [[c.x, c.y] for c in critical_pairs(P)]}
    return text, result


def _run_count_antichains(args) -> tuple:
    text = _read(args.file)
    P = _parse(text)
    sigma = realizer(P).sigma
    table = count_table(P, sigma)
    return text, {
        "total": str(table.total),
        "per_element": {str(e): str(v) for e, v in sorted(table.per_element.items())},
    }


def _run_led_chains(args) -> tuple:
    try:
        lengths = [int(tok) for tok in args.lengths.split(",")]
    except ValueError:
        raise _Usage(f"bad length list {args.lengths!r}")
    if not lengths or any(l < 1 for l in lengths):
        raise _Usage("lengths must be positive integers")
    return args.lengths, {"led": str(led_chain_union(lengths))}


class _Usage(Exception):
    pass


def _parse(text: str) -> Poset:
    from .poset import parse_poset

    return parse_poset(text)


_RUNNERS = {
    "led-bool": _run_led_bool,
    "led-downset": _run_led_downset,
    "diametral": _run_diametral,
    "oracle": _run_oracle,
    "count-antichains": _run_count_antichains,
    "led-chains": _run_led_chains,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = _build_parser().parse_args(argv)
    started = time.monotonic()
    try:
        source, result = _RUNNERS[args.command](args)
    except NotTwoDimensional as exc:
        print(f"posetkit: not two-dimensional: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"posetkit: cap exceeded: {exc}", file=sys.stderr)
        return 3
    except _Usage as exc:
        print(f"posetkit: {exc}", file=sys.stderr)
        return 1
    except (PosetkitError, OSError, ValueError) as exc:
        print(f"posetkit: {exc}", file=sys.stderr)
        return 1
    report = {
        "command": args.command,
        "argv": argv,
        "input_sha256": _digest(source),
        "result": result,
        "version": __version__,
    }
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    if args.verbose:
        elapsed = (time.monotonic() - started) * 1000.0
        print(f"posetkit: elapsed_ms={elapsed:.1f}", file=sys.stderr)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
