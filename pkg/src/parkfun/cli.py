"""Command-line frontend.

Subcommands: park, fibre, count, bijection, verify, validate-report.
Exit codes: 0 success, 1 domain failure (car cannot park, count mismatch,
failed checks, non-Hamiltonian outcome), 2 usage error.
`--json` emits exactly one RunReport object on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable

from .classical import classical_park, total_displacement
from .core import (
    Failure,
    FriendshipGraph,
    ParkingPreference,
    Permutation,
    graph_generator,
    parse_graph_text,
)
from .cycle import cycle_total_count
from .cyclic import (
    NotCyclicPreference,
    components,
    count_cyclic_brute,
    cyclic_total_count,
    enumerate_cyclic_pf,
    inv_seq,
    psi,
    psi_inverse,
)
from .friendship import count_fpf_brute, enumerate_fpf, friendship_park
from .limits import SearchCapExceeded
from .notation import (
    format_blocks,
    format_interval,
    format_word,
    format_word_compact,
    parse_word,
)
from .report import RunReport, validate_report
from .structure import (
    NotHamiltonianPath,
    enumerate_fibre,
    fibre_characterisation,
    fig4_graph,
    total_fpf_count,
)
from .verify import SUITE_NAMES, run_suite


class UsageError(ValueError):
    """Bad arguments or malformed input; maps to exit code 2."""


def _parse_preference(text: str) -> ParkingPreference:
    try:
        return ParkingPreference(parse_word(text))
    except ValueError as e:
        raise UsageError(f"bad preference: {e}") from None


def _parse_permutation(text: str) -> Permutation:
    try:
        return Permutation(parse_word(text))
    except ValueError as e:
        raise UsageError(f"bad permutation: {e}") from None


def _resolve_graph(spec: str) -> FriendshipGraph:
    if spec == "fig4":
        return fig4_graph()
    if spec.startswith("file:"):
        path = Path(spec[len("file:"):])
        try:
            text = path.read_text()
        except OSError as e:
            raise UsageError(f"cannot read graph file: {e}") from None
        try:
            return parse_graph_text(text)
        except ValueError as e:
            raise UsageError(f"bad graph file: {e}") from None
    family, sep, size = spec.partition(":")
    if sep:
        try:
            return graph_generator(family, int(size))
        except ValueError as e:
            raise UsageError(f"bad graph spec {spec!r}: {e}") from None
    raise UsageError(
        f"graph spec {spec!r} must be cycle:<n>, complete:<n>, path:<n>, fig4 or file:<path>"
    )


def _parse_n_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo_s, _, hi_s = text.partition("..")
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use a single n or lo..hi") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"bad range {text!r}; need 1 <= lo <= hi")
    return list(range(lo, hi + 1))


def cmd_park(args, say) -> tuple[dict, dict, int]:
    p = _parse_preference(args.preference)
    inputs = {"mode": args.mode, "preference": list(p.entries), "graph": args.graph}
    if args.mode == "friendship":
        if args.graph is None:
            raise UsageError("friendship mode needs a graph (-g)")
        graph = _resolve_graph(args.graph)
        if graph.n != p.n:
            raise UsageError(
                f"preference has {p.n} cars but the graph has {graph.n} vertices"
            )
        res = friendship_park(p, graph)
    else:
        if args.graph is not None:
            raise UsageError("classical mode takes no graph")
        res = classical_park(p)
    if isinstance(res, Failure):
        say(f"car {res.car} failed to park")
        return inputs, {"status": "failure", "car": res.car}, 1
    say(f"outcome: {format_word(res.outcome.word)}")
    say(f"displacement: {format_word(res.displacement)}")
    say(f"total displacement: {total_displacement(res)}")
    result = {
        "status": "success",
        "outcome": list(res.outcome.word),
        "displacement": list(res.displacement),
        "total_displacement": total_displacement(res),
    }
    return inputs, result, 0


def cmd_fibre(args, say) -> tuple[dict, dict, int]:
    graph = _resolve_graph(args.graph)
    perm = _parse_permutation(args.outcome)
    mode = "count" if args.count else "list" if args.list else "sets"
    inputs = {"graph": args.graph, "outcome": list(perm.word), "mode": mode}
    if perm.n != graph.n:
        raise UsageError(f"outcome has {perm.n} entries but the graph has {graph.n} vertices")
    try:
        chi = fibre_characterisation(perm, graph)
    except NotHamiltonianPath as e:
        say(f"error: {e}")
        return inputs, {"error": str(e)}, 1
    if mode == "sets":
        for car, (lo, hi) in enumerate(chi.spot_sets, start=1):
            say(f"S_{car} = {format_interval(lo, hi)}")
        return inputs, {"spot_sets": [list(s) for s in chi.spot_sets]}, 0
    if mode == "count":
        size = 1
        for lo, hi in chi.spot_sets:
            size *= hi - lo + 1
        say(f"fibre size: {size}")
        return inputs, {"fibre_size": size}, 0
    prefs = [list(p.entries) for p in enumerate_fibre(perm, graph)]
    for entries in prefs:
        say(format_word(entries))
    say(f"count: {len(prefs)}")
    return inputs, {"preferences": prefs, "count": len(prefs)}, 0


def cmd_count(args, say) -> tuple[dict, dict, int]:
    mode = "brute" if args.brute else "both" if args.both else "formula"
    if args.list and mode == "formula":
        raise UsageError("--list needs --brute or --both")
    if args.target == "fpf":
        if args.graph is None:
            raise UsageError("count fpf needs a graph (-g)")
        graph = _resolve_graph(args.graph)
        n = graph.n
    else:
        if args.n is None:
            raise UsageError("count cyclic needs -n")
        if args.n < 1:
            raise UsageError("-n must be positive")
        graph = None
        n = args.n
    inputs = {
        "target": args.target,
        "graph": args.graph,
        "n": n,
        "mode": mode,
        "list": bool(args.list),
        "workers": args.workers,
        "force": bool(args.force),
    }
    result: dict = {}
    code = 0

    if mode in ("formula", "both"):
        if args.target == "fpf":
            if args.graph.startswith("cycle:"):
                formula = cycle_total_count(n)
            else:
                formula = total_fpf_count(graph)
        else:
            formula = cyclic_total_count(n)
        result["formula"] = formula
        say(f"formula: {formula}")

    if mode in ("brute", "both"):
        space = n ** n
        result["search_space"] = space
        say(f"search space: {n}^{n} = {space} preferences")
        if args.target == "fpf":
            if args.list:
                prefs = [
                    list(p.entries)
                    for p in enumerate_fpf(graph, force=args.force, workers=args.workers)
                ]
                for entries in prefs:
                    say(format_word(entries))
                result["preferences"] = prefs
                brute = len(prefs)
            else:
                brute = count_fpf_brute(graph, force=args.force, workers=args.workers)
        else:
            if args.list:
                prefs = [
                    list(p.entries) for p in enumerate_cyclic_pf(n, force=args.force)
                ]
                for entries in prefs:
                    say(format_word(entries))
                result["preferences"] = prefs
                brute = len(prefs)
            else:
                brute = count_cyclic_brute(n, force=args.force, workers=args.workers)
        result["brute"] = brute
        say(f"brute: {brute}")

    if mode == "both":
        match = result["formula"] == result["brute"]
        result["match"] = match
        say(f"match: {'yes' if match else 'NO'}")
        if not match:
            code = 1
    return inputs, result, code


def cmd_bijection(args, say) -> tuple[dict, dict, int]:
    if args.direction == "psi":
        if args.preference is None:
            raise UsageError("bijection psi needs a preference (-p)")
        p = _parse_preference(args.preference)
        inputs = {"direction": "psi", "preference": list(p.entries)}
        try:
            c = psi(p)
        except NotCyclicPreference as e:
            say(f"error: {e}")
            return inputs, {"error": str(e)}, 1
        res = classical_park(p)
        host = c.underlying
        blocks = [(b.start, b.end) for b in components(host)]
        say(f"outcome: {format_word(res.outcome.word)} (increasing cycle from {res.outcome.word[0]})")
        say(f"displacement: {format_word(res.displacement)}")
        say(f"host permutation: {format_blocks(host.word, blocks)}")
        say(f"marked: {format_blocks(host.word, blocks, mark_start=c.start)}")
        say(f"component: {format_word_compact(c.word)} (positions {c.start}..{c.end})")
        result = {
            "outcome": list(res.outcome.word),
            "start": res.outcome.word[0],
            "displacement": list(res.displacement),
            "host": list(host.word),
            "component": {"start": c.start, "end": c.end, "word": list(c.word)},
        }
        return inputs, result, 0

    if args.perm is None or args.start is None:
        raise UsageError("bijection psi-inverse needs --perm and --start")
    host = _parse_permutation(args.perm)
    inputs = {"direction": "psi-inverse", "perm": list(host.word), "start": args.start}
    comps = components(host)
    blocks = [(b.start, b.end) for b in comps]
    chosen = next((b for b in comps if b.start == args.start), None)
    if chosen is None:
        starts = ", ".join(str(b.start) for b in comps)
        say(f"error: no component starts at position {args.start}; components start at {starts}")
        return inputs, {"error": f"no component starts at position {args.start}"}, 1
    p = psi_inverse(chosen)
    seq = inv_seq(host)
    say(f"host permutation: {format_blocks(host.word, blocks, mark_start=chosen.start)}")
    say(f"inversion sequence: {format_word(seq.entries)}")
    say(f"start value: {chosen.start}")
    say(f"preference: {format_word(p.entries)}")
    result = {
        "preference": list(p.entries),
        "inversion_sequence": list(seq.entries),
        "start_value": chosen.start,
        "component": {"start": chosen.start, "end": chosen.end, "word": list(chosen.word)},
    }
    return inputs, result, 0


def cmd_verify(args, say) -> tuple[dict, dict, int]:
    n_values = _parse_n_range(args.n) if args.n else None
    inputs = {"suite": args.suite, "n": args.n, "force": bool(args.force)}
    checks = run_suite(args.suite, n_values, force=args.force)
    for c in checks:
        say(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}")
    passed = all(c.passed for c in checks)
    say(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    result = {
        "suite": args.suite,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
        "passed": passed,
    }
    return inputs, result, 0 if passed else 1


def cmd_validate_report(args, say) -> tuple[dict, dict, int]:
    import jsonschema

    inputs = {"source": "stdin"}
    try:
        data = json.load(sys.stdin)
    except json.JSONDecodeError as e:
        say(f"error: not JSON: {e}")
        return inputs, {"valid": False, "error": str(e)}, 1
    try:
        validate_report(data)
    except jsonschema.ValidationError as e:
        say(f"error: {e.message}")
        return inputs, {"valid": False, "error": e.message}, 1
    say("ok")
    return inputs, {"valid": True}, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parkfun",
        description="Classical, friendship and cyclic parking functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="emit a RunReport object")
        sp.set_defaults(handler=handler)
        return sp

    park = add("park", cmd_park, "run a parking process on one preference")
    park.add_argument("mode", choices=["classical", "friendship"])
    park.add_argument("-p", "--preference", required=True, help="e.g. 3,1,1,2")
    park.add_argument("-g", "--graph", help="cycle:<n>, complete:<n>, path:<n>, fig4, file:<path>")

    fibre = add("fibre", cmd_fibre, "characterise the preferences behind one outcome")
    fibre.add_argument("-g", "--graph", required=True)
    fibre.add_argument("-o", "--outcome", required=True, help="outcome permutation")
    mode = fibre.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the fibre size")
    mode.add_argument("--sets", action="store_true", help="print the per-car spot sets (default)")
    mode.add_argument("--list", action="store_true", help="list the whole fibre")

    count = add("count", cmd_count, "count friendship or cyclic parking functions")
    count.add_argument("target", choices=["fpf", "cyclic"])
    count.add_argument("-g", "--graph")
    count.add_argument("-n", type=int, help="number of cars (cyclic target)")
    cmode = count.add_mutually_exclusive_group()
    cmode.add_argument("--formula", action="store_true", help="closed form only (default)")
    cmode.add_argument("--brute", action="store_true", help="exhaustive simulation only")
    cmode.add_argument("--both", action="store_true", help="closed form and brute force; exit 1 on mismatch")
    count.add_argument("--list", action="store_true", help="list preferences found by the sweep")
    count.add_argument("--workers", type=int, default=1, help="parallel shards for the sweep")
    count.add_argument("--force", action="store_true", help="ignore the search-space cap")

    bij = add("bijection", cmd_bijection, "map cyclic preferences to permutation components")
    bij.add_argument("direction", choices=["psi", "psi-inverse"])
    bij.add_argument("-p", "--preference")
    bij.add_argument("--perm", help="host permutation (psi-inverse)")
    bij.add_argument("--start", type=int, help="start position of the component (psi-inverse)")

    ver = add("verify", cmd_verify, "run the cross-verification suites")
    ver.add_argument("suite", choices=list(SUITE_NAMES))
    ver.add_argument("--n", help="range of sizes, e.g. 3..6 or 5")
    ver.add_argument("--force", action="store_true", help="ignore the search-space cap")

    add("validate-report", cmd_validate_report, "validate a RunReport JSON object from stdin")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    say = (lambda *a: None) if args.json else print
    start = time.perf_counter()
    try:
        inputs, result, code = args.handler(args, say)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SearchCapExceeded as e:
        print(f"error: {e} (CLI: --force)", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if args.json:
        print(RunReport(args.command, inputs, result, elapsed_ms).to_json())
    return code


if __name__ == "__main__":
    sys.exit(main())
