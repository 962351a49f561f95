"""Command line interface.

Subcommands operate on dataset files (one string per line, '#' comments).
Exit codes: 0 success or conjecture holds, 1 usage or data error, 2 a
conjecture check found a counterexample or a fuzz campaign recorded
failures.
"""

from __future__ import annotations

import argparse
import dataclasses
import functools
import json
import os
import sys

from . import _kernels
from .collapse import CollapseStep, ca, collapse_at
from .datasets import DatasetError, load_dataset
from .dot import render_graph, render_solution
from .fuzz import (CHECK_NAMES, GeneratorSpec, check_collapsing,
                   check_greedy_hierarchical, check_strong_collapsing,
                   default_starts, run_campaign)
from .greedy import TieBreakPolicy, ga
from .greedy_hier import gha, gha_cycle_cover
from .hgraph import HierarchicalGraph, build_graph
from .oracles import TooLargeError, brute_optimal, brute_optimal_cycle_cover
from .solutions import ArcMultiset, disjoint_union, spell, zigzag
from .strings import merge

START_CHOICES = "naive, optimal, gha, gha-cc, perm:I1,I2,... (1-based)"


def _one_based(perm) -> list[int]:
    return [i + 1 for i in perm]


def _parse_perm(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) - 1 for x in text.split(","))
    except ValueError:
        raise ValueError(f"bad permutation {text!r}; expected 1-based indices "
                         "like perm:2,1,3") from None


def _input_pairs(hg: HierarchicalGraph) -> ArcMultiset:
    d = ArcMultiset(hg)
    for v in hg.input_vids:
        d.add_pair(v)
    return d


def _build_start(hg: HierarchicalGraph, text: str,
                 brute_limit: int) -> tuple[str, ArcMultiset]:
    """Start solutions for collapse/dot; name documents what was built."""
    n = len(hg.inputs)
    if text == "naive":
        return "naive", zigzag(hg, range(n))
    if text == "gha":
        return "gha", gha(hg)
    if text == "gha-cc":
        return "gha-cc", gha_cycle_cover(hg)
    if text == "optimal":
        try:
            _, perm = brute_optimal(hg.inputs, limit=brute_limit)
        except TooLargeError as exc:
            print(f"warning: {exc}; using the greedy hierarchical solution "
                  "instead", file=sys.stderr)
            return "gha (optimal infeasible)", gha(hg)
        return f"optimal:{','.join(map(str, _one_based(perm)))}", zigzag(hg, perm)
    if text.startswith("perm:"):
        perm = _parse_perm(text[len("perm:"):])
        return text, zigzag(hg, perm)
    raise ValueError(f"unknown start {text!r}; choices: {START_CHOICES}")


def _write_stages(dirpath: str, hg: HierarchicalGraph,
                  stages: list[tuple[str, ArcMultiset]]) -> None:
    os.makedirs(dirpath, exist_ok=True)
    for i, (tag, d) in enumerate(stages):
        path = os.path.join(dirpath, f"stage_{i:02d}_{tag}.dot")
        with open(path, "w") as fh:
            fh.write(render_solution(hg, d))


def _replay_stages(hg: HierarchicalGraph, start: ArcMultiset,
                   steps: list[CollapseStep]) -> list[tuple[str, ArcMultiset]]:
    """One stage per maximal run of collapses at the same level."""
    stages = [("start", start)]
    cur = start
    pos = 0
    while pos < len(steps):
        level = steps[pos].level
        while pos < len(steps) and steps[pos].level == level:
            cur = collapse_at(hg, cur, steps[pos].vertex)
            pos += 1
        stages.append((f"level_{level}", cur))
    return stages


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _cmd_gha(args: argparse.Namespace) -> int:
    inputs = load_dataset(args.dataset)
    hg = build_graph(inputs)
    snaps: list[tuple[int, ArcMultiset]] | None = [] if args.dot_stages else None
    d = gha(hg, snapshots=snaps)
    sp = spell(hg, d)
    if args.dot_stages:
        stages = [("init", _input_pairs(hg))]
        stages += [(f"level_{lvl}", m) for lvl, m in snaps]
        _write_stages(args.dot_stages, hg, stages)
    payload = {
        "length": d.weight,
        "superstring": sp.superstring,
        "permutation": _one_based(sp.visit_order),
        "inputs": list(inputs),
        "backend": _kernels.BACKEND,
    }
    _emit(args, payload, [
        f"length: {payload['length']}",
        f"superstring: {payload['superstring']}",
        f"permutation: {' '.join(map(str, payload['permutation']))}",
    ])
    return 0


def _cmd_ga(args: argparse.Namespace) -> int:
    inputs = load_dataset(args.dataset)
    policy = TieBreakPolicy.parse(args.tie_break)
    res = ga(inputs, policy)
    payload = {
        "tie_break": args.tie_break,
        "length": len(res.superstring),
        "superstring": res.superstring,
        "permutation": _one_based(res.permutation),
    }
    _emit(args, payload, [
        f"tie-break: {args.tie_break}",
        f"length: {payload['length']}",
        f"superstring: {res.superstring}",
        f"permutation: {' '.join(map(str, payload['permutation']))}",
    ])
    return 0


def _cmd_collapse(args: argparse.Namespace) -> int:
    inputs = load_dataset(args.dataset)
    hg = build_graph(inputs)
    name, d = _build_start(hg, args.start, args.brute_limit)
    if args.double:
        d = disjoint_union(d, d)
    if args.add_cycle_cover:
        d = disjoint_union(d, gha_cycle_cover(hg))
    start_weight = d.weight
    trace: list[CollapseStep] = []
    result = ca(hg, d, trace=trace, repeat_levels=args.repeat_levels)
    sp = spell(hg, result)
    if args.dot_stages:
        _write_stages(args.dot_stages, hg, _replay_stages(hg, d, trace))
    payload = {
        "start": name,
        "doubled": args.double,
        "cycle_cover_added": args.add_cycle_cover,
        "start_weight": start_weight,
        "length": result.weight,
        "superstring": sp.superstring,
        "permutation": _one_based(sp.visit_order),
        "collapses": len(trace),
        "backend": _kernels.BACKEND,
    }
    lines = [
        f"start: {name} (weight {start_weight}"
        + (", doubled" if args.double else "")
        + (", plus cycle cover" if args.add_cycle_cover else "") + ")",
        f"length: {payload['length']}",
        f"superstring: {sp.superstring}",
        f"permutation: {' '.join(map(str, payload['permutation']))}",
        f"collapses: {len(trace)}",
    ]
    if args.trace:
        payload["trace"] = [
            {"level": s.level, "vertex": s.vertex,
             "up_after": s.up_after, "down_after": s.down_after}
            for s in trace
        ]
        lines += [f"  level {s.level}: {s.vertex} "
                  f"(up {s.up_after}, down {s.down_after})" for s in trace]
    _emit(args, payload, lines)
    return 0


def _cmd_brute(args: argparse.Namespace) -> int:
    inputs = load_dataset(args.dataset)
    length, perm = brute_optimal(inputs, limit=args.limit)
    s = functools.reduce(merge, (inputs[i] for i in perm))
    payload = {
        "length": length,
        "permutation": _one_based(perm),
        "superstring": s,
    }
    _emit(args, payload, [
        f"length: {length}",
        f"superstring: {s}",
        f"permutation: {' '.join(map(str, payload['permutation']))}",
    ])
    return 0


def _cmd_brute_cc(args: argparse.Namespace) -> int:
    inputs = load_dataset(args.dataset)
    length = brute_optimal_cycle_cover(inputs, limit=args.limit)
    _emit(args, {"length": length}, [f"length: {length}"])
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    inputs = load_dataset(args.dataset)
    hg = build_graph(inputs)
    if args.conjecture == "strong":
        res = check_strong_collapsing(hg)
    else:
        starts = default_starts(hg, seed=args.seed, brute_limit=args.brute_limit)
        if args.conjecture == "collapsing":
            res = check_collapsing(hg, starts)
        else:
            res = check_greedy_hierarchical(hg, starts)
    payload = {
        "conjecture": args.conjecture,
        "holds": res.ok,
        "detail": res.detail,
    }
    lines = [f"conjecture: {args.conjecture}",
             f"result: {'holds' if res.ok else 'counterexample'}"]
    if not res.ok:
        lines.append(json.dumps(res.detail, indent=2))
    _emit(args, payload, lines)
    return 0 if res.ok else 2


def _cmd_fuzz(args: argparse.Namespace) -> int:
    spec = GeneratorSpec.parse(args.gen)
    if args.seed is not None:
        spec = dataclasses.replace(spec, seed=args.seed)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    rep = run_campaign(
        spec, args.count, checks, brute_limit=args.brute_limit,
        workers=args.workers, out_dir=args.out,
    )
    if args.json:
        print(rep.to_json())
    else:
        print(f"generator: {rep.spec_text}")
        print(f"backend: {rep.backend}")
        print(f"instances: {rep.instances_run}")
        print(f"checks: {', '.join(rep.checks)}")
        print(f"failures: {len(rep.failures)}")
        for f in rep.failures:
            print(f"  FAIL {f.check} seed={f.seed} strings={list(f.strings)}")
        if rep.max_gha_ratio is not None:
            r = rep.max_gha_ratio
            print(f"max gha ratio: {r.numerator}/{r.denominator}"
                  f" = {float(r):.4f} on {list(rep.ratio_instance or ())}")
        print(f"elapsed: {rep.elapsed_s:.2f}s")
        if rep.failures and args.out:
            print(f"counterexamples written to {args.out}")
    return 0 if rep.ok else 2


def _cmd_dot(args: argparse.Namespace) -> int:
    inputs = load_dataset(args.dataset)
    hg = build_graph(inputs)
    if args.solution:
        _, d = _build_start(hg, args.solution, args.brute_limit)
        text = render_solution(hg, d)
    else:
        text = render_graph(hg)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scs",
        description="Shortest common superstring via hierarchical graphs: "
                    "greedy algorithms, collapsing, exact baselines and "
                    "conjecture fuzzing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, dataset: bool = True):
        p = sub.add_parser(name, help=help_text, description=help_text)
        if dataset:
            p.add_argument("dataset", help="dataset file, one string per line")
        p.set_defaults(func=func)
        return p

    p = add("gha", _cmd_gha, "run the greedy hierarchical algorithm")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot-stages", metavar="DIR",
                   help="write per-level DOT snapshots to DIR")

    p = add("ga", _cmd_ga, "run the classical greedy merge algorithm")
    p.add_argument("--tie-break", default="input-order",
                   help="input-order | lexicographic-pair | seeded-random:SEED")
    p.add_argument("--json", action="store_true")

    p = add("collapse", _cmd_collapse,
            "normalize a solution with the collapsing algorithm")
    p.add_argument("--start", default="naive",
                   help=f"start solution: {START_CHOICES}")
    p.add_argument("--double", action="store_true",
                   help="collapse the doubled solution")
    p.add_argument("--add-cycle-cover", action="store_true",
                   help="add the greedy cycle cover before collapsing")
    p.add_argument("--trace", action="store_true",
                   help="list every collapse performed")
    p.add_argument("--repeat-levels", action="store_true",
                   help="re-run each level until it stops changing")
    p.add_argument("--dot-stages", metavar="DIR",
                   help="write a DOT snapshot after each level to DIR")
    p.add_argument("--brute-limit", type=int, default=9,
                   help="max inputs for --start=optimal")
    p.add_argument("--json", action="store_true")

    p = add("brute", _cmd_brute, "exact optimum by branch and bound")
    p.add_argument("--limit", type=int, default=9,
                   help="refuse more inputs than this")
    p.add_argument("--json", action="store_true")

    p = add("brute-cc", _cmd_brute_cc, "exact optimal cycle cover length")
    p.add_argument("--limit", type=int, default=8,
                   help="refuse more inputs than this")
    p.add_argument("--json", action="store_true")

    p = add("check", _cmd_check, "test a conjecture on one dataset")
    p.add_argument("--conjecture", choices=("collapsing", "gh", "strong"),
                   required=True)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the random start permutations")
    p.add_argument("--brute-limit", type=int, default=9,
                   help="max inputs for the optimal start")
    p.add_argument("--json", action="store_true")

    p = add("fuzz", _cmd_fuzz, "run a randomized conjecture campaign",
            dataset=False)
    p.add_argument("--gen", required=True,
                   help="generator spec, e.g. 'uniform(n=4,min_len=1,"
                        "max_len=4,alphabet=3,seed=0)'")
    p.add_argument("--count", type=int, required=True,
                   help="number of instances")
    p.add_argument("--seed", type=int, default=None,
                   help="override the seed inside the generator spec")
    p.add_argument("--checks", default="collapsing,gh,strong",
                   help=f"comma list from: {', '.join(CHECK_NAMES)}")
    p.add_argument("--out", metavar="DIR",
                   help="write counterexample datasets to DIR")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--brute-limit", type=int, default=7)
    p.add_argument("--json", action="store_true")

    p = add("dot", _cmd_dot, "render the hierarchical graph as Graphviz DOT")
    p.add_argument("--solution", default=None,
                   help=f"overlay a solution instead: {START_CHOICES}")
    p.add_argument("--brute-limit", type=int, default=9,
                   help="max inputs for --solution=optimal")
    p.add_argument("-o", "--output", default=None, help="output file")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; usage errors
        # belong to exit code 1 here (2 means counterexample found)
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (DatasetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
