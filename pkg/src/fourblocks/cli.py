"""Command-line front end.

Exit codes are a stable contract:

    0  success (coloring produced / witness found / certificate valid)
    1  input problem (parse error, malformed certificate, bad cycle file)
    2  precondition failure (not strongly connected)
    3  structural outcome (subdivision found / peel stalled / not found /
       certificate invalid, depending on the command)
    4  inconclusive under the search budget
    5  no Hamiltonian cycle available

JSON output (--json) is the machine contract; the default text output is
for humans and carries no stability promise. All randomness flows from
--seed. FOURBLOCKS_BUDGET overrides the default search budget; --budget
overrides both.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from . import decomposition, generators, hamiltonian, witness
from .digraph import (
    Digraph,
    format_digraph,
    is_proper,
    is_strongly_connected,
    parse_digraph,
    underlying_graph,
)
from .digraph import Coloring
from .errors import (
    BudgetExceeded,
    InfeasibleSpec,
    NotStronglyConnected,
    ParseError,
)


def _canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_digraph(path: str) -> Digraph:
    d = parse_digraph(Path(path).read_text())
    if d.n == 0:
        raise ParseError(1, "digraph has no vertices")
    return d


def _budget(args) -> int:
    if getattr(args, "budget", None):
        return args.budget
    return witness.default_budget()


def _emit(args, json_obj: dict, text_lines: list[str]) -> None:
    if args.json:
        print(_canonical_json(json_obj))
    else:
        for line in text_lines:
            print(line)


def _parse_pattern(text: str) -> witness.CyclePattern:
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != 4:
        raise ValueError("pattern needs exactly 4 comma-separated block lengths")
    return witness.CyclePattern(tuple(int(p) for p in parts))


def cmd_color(args) -> int:
    try:
        d = _load_digraph(args.input)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    try:
        cert = decomposition.color_strong_digraph(d, args.k1, args.k3, _budget(args))
    except NotStronglyConnected:
        print("input digraph is not strongly connected", file=sys.stderr)
        return 2
    if isinstance(cert, decomposition.ColoringWithinBound):
        _emit(
            args,
            cert.to_json_dict(),
            [
                "outcome: coloring",
                f"bound: {cert.bound}",
                f"colors used: {cert.coloring.palette_size}",
            ],
        )
        return 0
    if isinstance(cert, decomposition.SubdivisionFound):
        _emit(
            args,
            cert.to_json_dict(),
            [
                "outcome: subdivision",
                f"pattern: {cert.pattern.blocks}",
                f"junctions: {cert.witness.junctions}",
            ],
        )
        return 3
    _emit(
        args,
        cert.to_json_dict(),
        ["outcome: inconclusive", f"stage: {cert.stage}", f"reason: {cert.reason}"],
    )
    return 4


def _load_cycle_file(path: str, d: Digraph) -> hamiltonian.HamiltonianCycle:
    tokens = Path(path).read_text().split()
    order = tuple(int(t) for t in tokens)
    cycle = hamiltonian.HamiltonianCycle(order)
    if not cycle.is_valid_for(d):
        raise ValueError("cycle file is inconsistent with the digraph")
    return cycle


def cmd_color_ham(args) -> int:
    try:
        d = _load_digraph(args.input)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    budget = _budget(args)
    if args.cycle:
        try:
            cycle = _load_cycle_file(args.cycle, d)
        except (ValueError, OSError) as exc:
            print(f"bad cycle file: {exc}", file=sys.stderr)
            return 1
    else:
        try:
            found = hamiltonian.find_hamiltonian_cycle(d, budget)
        except BudgetExceeded:
            found = None
        if found is None:
            print("no Hamiltonian cycle found within budget", file=sys.stderr)
            return 5
        cycle = found
    cert = hamiltonian.color_hamiltonian(d, cycle, args.k1, args.k3, budget)
    if isinstance(cert, hamiltonian.PeelColoring):
        _emit(
            args,
            cert.to_json_dict(),
            [
                "outcome: coloring",
                f"bound: {cert.bound}",
                f"colors used: {cert.coloring.palette_size}",
            ],
        )
        return 0
    _emit(
        args,
        cert.to_json_dict(),
        [
            "outcome: stall",
            f"core size: {len(cert.core)}",
            f"witness attached: {cert.witness is not None}",
        ],
    )
    return 3


def cmd_find(args) -> int:
    try:
        d = _load_digraph(args.input)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    if args.pattern:
        try:
            pattern = _parse_pattern(args.pattern)
        except ValueError as exc:
            print(f"bad pattern: {exc}", file=sys.stderr)
            return 1
    else:
        pattern = witness.CyclePattern.from_k(args.k1, args.k3)
    try:
        w = witness.find_cycle_subdivision(d, pattern, _budget(args))
    except BudgetExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 4
    if w is None:
        if not args.json:
            print("no subdivision found")
        return 3
    check = witness.verify_subdivision(d, w, pattern)
    assert check.ok, f"search produced an invalid witness: {check.reason}"
    _emit(
        args,
        witness.witness_to_json(w, pattern),
        [
            f"subdivision of C{pattern.blocks} found",
            f"junctions: {w.junctions}",
            *(f"path {i}: {' -> '.join(map(str, p))}" for i, p in enumerate(w.paths)),
        ],
    )
    return 0


def cmd_verify(args) -> int:
    try:
        d = _load_digraph(args.input)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    try:
        cert = json.loads(Path(args.certificate).read_text())
    except (json.JSONDecodeError, OSError) as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return 1
    try:
        ok, message = _verify_certificate(d, cert)
    except (KeyError, TypeError, ValueError) as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return 1
    print(message)
    return 0 if ok else 3


def _verify_coloring_payload(d: Digraph, cert: dict) -> tuple[bool, str]:
    colors = cert["colors"]
    bound = int(cert["bound"])
    if not isinstance(colors, list) or len(colors) != d.n:
        raise ValueError(f"colors must list all {d.n} vertices")
    coloring = Coloring({v: int(c) for v, c in enumerate(colors)})
    if not is_proper(underlying_graph(d), coloring):
        return False, "coloring is not proper"
    if coloring.palette_size > bound:
        return False, f"palette {coloring.palette_size} exceeds bound {bound}"
    return True, f"valid coloring: {coloring.palette_size} colors within {bound}"


def _verify_certificate(d: Digraph, cert: dict) -> tuple[bool, str]:
    if "outcome" not in cert:
        w, pattern = witness.witness_from_json(cert)
        check = witness.verify_subdivision(d, w, pattern)
        if check.ok:
            return True, f"valid subdivision witness for C{pattern.blocks}"
        return False, f"invalid witness: {check.reason}"
    outcome = cert["outcome"]
    if outcome == "coloring":
        return _verify_coloring_payload(d, cert)
    if outcome == "subdivision":
        w, pattern = witness.witness_from_json(cert["witness"])
        check = witness.verify_subdivision(d, w, pattern)
        if check.ok:
            return True, f"valid subdivision witness for C{pattern.blocks}"
        return False, f"invalid witness: {check.reason}"
    if outcome == "stall":
        k = int(cert["k"])
        core = [int(v) for v in cert["core"]]
        if not core:
            return False, "empty stall core"
        core_set = set(core)
        und = underlying_graph(d)
        for v in core_set:
            if v < 0 or v >= d.n:
                raise ValueError(f"core vertex {v} out of range")
        min_deg = min(
            sum(1 for w_ in und.neighbors(v) if w_ in core_set) for v in core_set
        )
        if min_deg < 6 * k:
            return False, f"core minimum degree {min_deg} is below {6 * k}"
        if cert.get("witness") is not None:
            w, pattern = witness.witness_from_json(cert["witness"])
            check = witness.verify_subdivision(d, w, pattern)
            if not check.ok:
                return False, f"invalid witness: {check.reason}"
        return True, f"valid stall core with minimum degree >= {6 * k}"
    if outcome == "inconclusive":
        return True, "inconclusive certificate carries no checkable claim"
    raise ValueError(f"unknown outcome {outcome!r}")


def cmd_gen(args) -> int:
    pattern = None
    if args.pattern:
        try:
            pattern = _parse_pattern(args.pattern)
        except ValueError as exc:
            print(f"bad pattern: {exc}", file=sys.stderr)
            return 1
    try:
        family = generators.Family(args.family)
        spec = generators.GenSpec(family, args.n, args.m, args.seed, pattern)
        d = generators.generate(spec)
    except (InfeasibleSpec, ValueError) as exc:
        print(f"infeasible spec: {exc}", file=sys.stderr)
        return 1
    text = format_digraph(d)
    if args.output:
        Path(args.output).write_text(text)
        Path(args.output + ".json").write_text(
            _canonical_json(spec.to_json_dict()) + "\n"
        )
    else:
        sys.stdout.write(text)
    return 0


def _stress_instance(family: generators.Family, seed: int, n_max: int, k1: int, k3: int):
    """Instance spec for one campaign member; depends only on the flags and
    the seed so any member can be regenerated alone."""
    if family is generators.Family.RANDOM_STRONG:
        n = 2 + seed % (max(n_max, 3) - 1)
        m = min((n - 1) + seed % (n + 2), n * (n - 1))
        return generators.GenSpec(family, n, m, seed)
    if family is generators.Family.RANDOM_HAMILTONIAN:
        n = 3 + seed % (max(n_max, 4) - 2)
        m = min(n + seed % 5, n * (n - 1))
        return generators.GenSpec(family, n, m, seed)
    if family is generators.Family.PLANTED_SUBDIVISION:
        pattern = witness.CyclePattern.from_k(k1, k3)
        base = sum(pattern.blocks)
        n = base + 2 + seed % max(n_max - base - 1, 1)
        m = min(n + 2 + seed % (n + 1), n * (n - 1))
        return generators.GenSpec(family, n, m, seed, pattern)
    raise ValueError(f"stress does not support family {family.value}")


def _stress_one(args, seed: int) -> tuple[str, str]:
    """Returns (status, detail); status in pass/fail/skip."""
    family = generators.Family(args.family)
    k1, k3 = args.k1, args.k3
    k = max(k1, k3)
    budget = _budget(args)
    spec = _stress_instance(family, seed, args.n, k1, k3)
    d = generators.generate(spec)
    pattern = witness.CyclePattern.from_k(k, k)
    try:
        w = witness.find_cycle_subdivision(d, pattern, budget)
    except BudgetExceeded:
        return "skip", "oracle budget exhausted"
    if w is not None and not witness.verify_subdivision(d, w, pattern).ok:
        return "fail", "oracle witness failed verification"

    if family is generators.Family.PLANTED_SUBDIVISION:
        if w is None:
            return "fail", "planted subdivision not found by oracle"

    if family is generators.Family.RANDOM_HAMILTONIAN:
        try:
            cycle = hamiltonian.find_hamiltonian_cycle(d, budget)
        except BudgetExceeded:
            return "skip", "cycle search budget exhausted"
        if cycle is None:
            return "fail", "generated Hamiltonian instance has no cycle"
        cert = hamiltonian.color_hamiltonian(d, cycle, k1, k3, budget)
        if w is None:
            if not isinstance(cert, hamiltonian.PeelColoring):
                return "fail", "peel stalled on a subdivision-free instance"
            if not is_proper(underlying_graph(d), cert.coloring):
                return "fail", "peel coloring is not proper"
            if cert.coloring.palette_size > 6 * k:
                return "fail", f"peel used {cert.coloring.palette_size} > 6k colors"
            if hamiltonian.check_chord_neighbor_bound(d, cycle, k):
                return "fail", "chord neighbor bound violated on a free instance"
        return "pass", ""

    if not is_strongly_connected(d):
        if family is generators.Family.RANDOM_STRONG:
            return "fail", "generator emitted a non-strong digraph"
        return "skip", "instance not strongly connected"
    cert = decomposition.color_strong_digraph(d, k1, k3, budget)
    if isinstance(cert, decomposition.ColoringWithinBound):
        if not is_proper(underlying_graph(d), cert.coloring):
            return "fail", "pipeline coloring is not proper"
        if cert.coloring.palette_size > cert.bound:
            return "fail", "pipeline palette exceeds bound"
        for rep in cert.per_class:
            if rep.d1_colors > 6 or rep.d2_colors > 6 or rep.d3_colors > 4 * k + 2:
                return "fail", f"stage bound violated in class {rep.index}"
            if rep.b2_max_out_degree > 3:
                return "fail", f"high-part out-degree {rep.b2_max_out_degree} > 3"
        return "pass", ""
    if isinstance(cert, decomposition.SubdivisionFound):
        if w is None:
            return "fail", "pipeline found a subdivision the oracle ruled out"
        return "pass", ""
    if w is None:
        return "fail", f"inconclusive on a subdivision-free instance: {cert.reason}"
    return "skip", f"inconclusive: {cert.reason}"


def cmd_stress(args) -> int:
    counts = {"pass": 0, "fail": 0, "skip": 0}
    failures: list[tuple[int, str]] = []
    for seed in range(args.seed, args.seed + args.count):
        status, detail = _stress_one(args, seed)
        counts[status] += 1
        if status == "fail":
            failures.append((seed, detail))
            family = generators.Family(args.family)
            spec = _stress_instance(family, seed, args.n, args.k1, args.k3)
            dump = Path(f"stress_fail_{args.family}_{seed}.dg")
            dump.write_text(format_digraph(generators.generate(spec)))
            print(f"seed {seed}: FAIL ({detail}) -> {dump}", file=sys.stderr)
    print(f"family={args.family} count={args.count} k1={args.k1} k3={args.k3}")
    print(f"pass={counts['pass']} fail={counts['fail']} skip={counts['skip']}")
    return 1 if counts["fail"] else 0


def cmd_bench(args) -> int:
    kernels = witness.available_kernels()
    n = max(args.n, 8)
    specs = [
        generators.GenSpec(
            generators.Family.RANDOM_HAMILTONIAN, n, n + 1 + seed % (n // 2), seed
        )
        for seed in range(args.seed, args.seed + args.count)
    ]
    digraphs = [generators.generate(s) for s in specs]
    k = max(args.k1, args.k3)
    pattern = (k, 1, k, 1)
    budget = _budget(args)
    results = {}
    outcomes = {}
    for name, module in sorted(kernels.items()):
        start = time.perf_counter()
        found = []
        for d in digraphs:
            indptr, indices = witness._csr(d)
            status, payload, _ = module.search_cycle_subdivision(
                d.n, indptr, indices, *pattern, budget
            )
            found.append((status, payload))
        elapsed = time.perf_counter() - start
        results[name] = elapsed
        outcomes[name] = found
        hits = sum(1 for status, _ in found if status == 0)
        print(
            f"{name:9s} {elapsed * 1000:9.1f} ms over {len(digraphs)} instances "
            f"(n={n}, pattern {pattern}, {hits} witnesses)"
        )
    if len(outcomes) == 2:
        agree = outcomes["pure"] == outcomes["compiled"]
        print(f"kernels agree on all outcomes: {agree}")
        if not agree:
            return 1
        if results["compiled"] > 0:
            print(f"speedup: {results['pure'] / results['compiled']:.1f}x")
    else:
        print("compiled kernel not available; benchmarked the pure kernel only")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourblocks",
        description="Certifying digraph coloring via four-blocks cycle subdivisions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="digraph file in the shared text format")
        p.add_argument("--k1", type=int, default=1, help="first block length")
        p.add_argument("--k3", type=int, default=1, help="third block length")
        p.add_argument("--budget", type=int, default=None, help="search node budget")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("color", help="run the certifying coloring pipeline")
    add_common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("color-ham", help="peel coloring for a Hamiltonian digraph")
    add_common(p)
    p.add_argument("--cycle", help="file with the Hamiltonian cycle vertex order")
    p.set_defaults(func=cmd_color_ham)

    p = sub.add_parser("find", help="exhaustive subdivision search")
    add_common(p)
    p.add_argument("--pattern", help="explicit block lengths, e.g. 2,1,2,1")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("verify", help="re-check a certificate against a digraph")
    p.add_argument("input", help="digraph file")
    p.add_argument("certificate", help="certificate or witness JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a reproducible instance")
    p.add_argument("--family", required=True, choices=[f.value for f in generators.Family])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pattern", help="block lengths for the planted family")
    p.add_argument("-o", "--output", help="write here plus a .json spec sidecar")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stress", help="seeded campaign of oracle + pipeline checks")
    p.add_argument("--family", default="strong", choices=["strong", "hamiltonian", "planted"])
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--n", type=int, default=10, help="size cap for instances")
    p.add_argument("--k1", type=int, default=1)
    p.add_argument("--k3", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="first seed of the campaign")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_stress)

    p = sub.add_parser("bench", help="compare the subdivision search kernels")
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k1", type=int, default=2)
    p.add_argument("--k3", type=int, default=2)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
