"""Randomized checking of the collapsing equalities and related facts.

An instance is drawn from a GeneratorSpec; each named check compares
algorithm outputs on it and reports a failure detail on divergence. The
campaign runner aggregates failures, persists counterexamples as dataset
files, and tracks the worst observed gha/optimum ratio.
"""

from __future__ import annotations

import json
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import _kernels
from .collapse import ca
from .datasets import save_dataset
from .greedy_hier import gha, gha_cycle_cover
from .hgraph import HierarchicalGraph, build_graph
from .oracles import TooLargeError, brute_optimal, brute_optimal_cycle_cover, spectrum, tough, two_scs_formula
from .rng import MASK64, SplitMix64
from .solutions import ArcMultiset, disjoint_union, is_eulerian_solution, spell, zigzag
from .strings import InputSet, reduce_substring_free
from .greedy import verify_greedy_permutation

LETTERS = "abcdefghijklmnopqrstuvwxyz"
GENERATOR_KINDS = ("uniform", "spectrum", "tough", "short")
CHECK_NAMES = (
    "collapsing", "gh", "strong", "gha_is_greedy",
    "spectrum_optimal", "two_scs_optimal", "cycle_cover_optimal",
)
# offset mixed into the instance seed for start-solution randomness, so the
# generator stream and the starts stream never collide
_STARTS_SALT = 0x5851F42D4C957F2D


class GeneratorError(ValueError):
    """Bad generator specification."""


@dataclass(frozen=True)
class GeneratorSpec:
    """A named instance generator with parameters and a base seed.

    uniform(n, min_len, max_len, alphabet): n random strings.
    spectrum(str_len, k, alphabet): all k-substrings of a random string.
    tough(n): the adversarial 3-string family, size drawn in [1, n].
    short(n, max_len, alphabet): like uniform with lengths in [1, max_len],
    max_len capped at 3.
    """

    kind: str
    n: int = 0
    min_len: int = 0
    max_len: int = 0
    alphabet: int = 0
    str_len: int = 0
    k: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise GeneratorError(f"unknown generator kind {self.kind!r}")
        pos = {
            "uniform": ("n", "min_len", "max_len", "alphabet"),
            "spectrum": ("str_len", "k", "alphabet"),
            "tough": ("n",),
            "short": ("n", "max_len", "alphabet"),
        }[self.kind]
        for name in pos:
            if getattr(self, name) <= 0:
                raise GeneratorError(f"{self.kind} requires {name} > 0")
        if self.kind == "uniform" and self.min_len > self.max_len:
            raise GeneratorError("min_len > max_len")
        if self.kind == "short" and self.max_len > 3:
            raise GeneratorError("short generator is for max_len <= 3")
        if self.kind == "spectrum" and self.k > self.str_len:
            raise GeneratorError("k > str_len")
        if self.alphabet > len(LETTERS):
            raise GeneratorError(f"alphabet capped at {len(LETTERS)}")

    def describe(self) -> str:
        """Canonical round-trippable text form, e.g. uniform(n=5,...,seed=1)."""
        pos = {
            "uniform": ("n", "min_len", "max_len", "alphabet"),
            "spectrum": ("str_len", "k", "alphabet"),
            "tough": ("n",),
            "short": ("n", "max_len", "alphabet"),
        }[self.kind]
        parts = [f"{name}={getattr(self, name)}" for name in pos]
        parts.append(f"seed={self.seed}")
        return f"{self.kind}({','.join(parts)})"

    @classmethod
    def parse(cls, text: str) -> "GeneratorSpec":
        m = re.fullmatch(r"\s*([a-z_]+)\s*\(([^)]*)\)\s*", text)
        if not m:
            raise GeneratorError(
                f"cannot parse generator spec {text!r}; expected kind(key=value,...)"
            )
        kind, body = m.group(1), m.group(2)
        kwargs: dict[str, int] = {}
        if body.strip():
            for item in body.split(","):
                key, _, value = item.partition("=")
                key = key.strip()
                if key not in cls.__dataclass_fields__ or key == "kind":
                    raise GeneratorError(f"unknown generator field {key!r}")
                try:
                    kwargs[key] = int(value.strip())
                except ValueError as exc:
                    raise GeneratorError(f"bad value for {key}: {value!r}") from exc
        return cls(kind, **kwargs)


def _draw_strings(rng: SplitMix64, n: int, min_len: int, max_len: int,
                  alphabet: int) -> list[str]:
    sigma = LETTERS[:alphabet]
    out = []
    for _ in range(n):
        length = rng.randint(min_len, max_len)
        out.append("".join(sigma[rng.randint(0, alphabet - 1)]
                           for _ in range(length)))
    return out


def generate(spec: GeneratorSpec, seed: int) -> tuple[InputSet, dict]:
    """Draw one instance; deterministic in (spec, seed).

    Instances that reduce to fewer than two strings are discarded and the
    draw repeats on the same stream.
    """
    rng = SplitMix64(seed)
    if spec.kind == "tough":
        size = rng.randint(1, spec.n)
        return tough(size), {"n": size}
    for _ in range(1000):
        if spec.kind == "uniform":
            raw = _draw_strings(rng, spec.n, spec.min_len, spec.max_len,
                                spec.alphabet)
            meta: dict = {}
        elif spec.kind == "short":
            raw = _draw_strings(rng, spec.n, 1, spec.max_len, spec.alphabet)
            meta = {}
        else:  # spectrum
            source = "".join(LETTERS[rng.randint(0, spec.alphabet - 1)]
                             for _ in range(spec.str_len))
            raw = list(spectrum(source, spec.k))
            meta = {"source": source, "k": spec.k}
        try:
            inputs = reduce_substring_free(raw)
        except ValueError:
            continue
        if len(inputs) >= 2:
            return inputs, meta
    raise GeneratorError(f"generator kept degenerating: {spec.describe()}, seed {seed}")


@dataclass
class CheckResult:
    ok: bool
    name: str
    detail: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def _divergence(name: str, index: int, start_name: str,
                got: ArcMultiset, expected: ArcMultiset) -> dict:
    return {
        "start": start_name,
        "start_index": index,
        "got_weight": got.weight,
        "expected_weight": expected.weight,
        "got": got.canonical_triples(),
        "expected": expected.canonical_triples(),
    }


def default_starts(hg: HierarchicalGraph, seed: int = 0, n_random: int = 2,
                   brute_limit: int = 7) -> list[tuple[str, ArcMultiset]]:
    """Naive zig-zag, brute-optimal zig-zag (small n), the greedy
    hierarchical output, and random-permutation zig-zags."""
    n = len(hg.inputs)
    starts = [("naive", zigzag(hg, range(n)))]
    if n <= brute_limit:
        _, perm = brute_optimal(hg.inputs, limit=brute_limit)
        starts.append((f"optimal:{','.join(map(str, perm))}", zigzag(hg, perm)))
    starts.append(("gha", gha(hg)))
    rng = SplitMix64((seed + _STARTS_SALT) & MASK64)
    for r in range(n_random):
        perm = list(range(n))
        rng.shuffle(perm)
        starts.append((f"random:{','.join(map(str, perm))}", zigzag(hg, perm)))
    return starts


def check_collapsing(hg: HierarchicalGraph | InputSet,
                     starts: Sequence[tuple[str, ArcMultiset]]) -> CheckResult:
    """Collapsing the doubled solution must not depend on the start."""
    hg = _as_graph(hg)
    results = [(name, ca(hg, disjoint_union(d, d))) for name, d in starts]
    first_name, first = results[0]
    for i, (name, r) in enumerate(results[1:], start=1):
        if r != first:
            detail = _divergence("collapsing", i, name, r, first)
            detail["expected_start"] = first_name
            return CheckResult(False, "collapsing", detail)
    return CheckResult(True, "collapsing")


def check_greedy_hierarchical(hg: HierarchicalGraph | InputSet,
                              starts: Sequence[tuple[str, ArcMultiset]],
                              target: ArcMultiset | None = None) -> CheckResult:
    """Collapsing any doubled solution must equal the greedy hierarchical one."""
    hg = _as_graph(hg)
    if target is None:
        target = gha(hg)
    for i, (name, d) in enumerate(starts):
        r = ca(hg, disjoint_union(d, d))
        if r != target:
            return CheckResult(False, "gh", _divergence("gh", i, name, r, target))
    return CheckResult(True, "gh")


def check_strong_collapsing(hg: HierarchicalGraph | InputSet,
                            d: ArcMultiset | None = None,
                            covers: Sequence[tuple[str, ArcMultiset]] | None = None,
                            target: ArcMultiset | None = None) -> CheckResult:
    """Doubling can be replaced by adding any cycle cover before collapsing."""
    hg = _as_graph(hg)
    if d is None:
        d = zigzag(hg, range(len(hg.inputs)))
    if covers is None:
        covers = [("gha_cycle_cover", gha_cycle_cover(hg)), ("self", d)]
    if target is None:
        target = gha(hg)
    for name, cov in covers:
        rep = is_eulerian_solution(hg, cov)
        if not (rep.balanced and rep.covers_inputs):
            raise ValueError(f"cover {name!r} is not a cycle cover: {rep}")
        r = ca(hg, disjoint_union(d, cov))
        if r != target:
            return CheckResult(
                False, "strong", _divergence("strong", 0, f"cover:{name}", r, target)
            )
    return CheckResult(True, "strong")


def _as_graph(hg: HierarchicalGraph | InputSet) -> HierarchicalGraph:
    if isinstance(hg, HierarchicalGraph):
        return hg
    return build_graph(hg)


@dataclass
class FailureRecord:
    check: str
    spec_text: str
    seed: int
    strings: tuple[str, ...]
    detail: dict

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "generator": self.spec_text,
            "seed": self.seed,
            "strings": list(self.strings),
            "detail": self.detail,
        }


@dataclass
class FuzzReport:
    spec_text: str
    requested: int
    instances_run: int = 0
    checks: tuple[str, ...] = ()
    failures: list[FailureRecord] = field(default_factory=list)
    max_gha_ratio: Fraction | None = None
    ratio_instance: tuple[str, ...] | None = None
    elapsed_s: float = 0.0
    backend: str = _kernels.BACKEND

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        ratio = self.max_gha_ratio
        return {
            "generator": self.spec_text,
            "requested": self.requested,
            "instances_run": self.instances_run,
            "checks": list(self.checks),
            "failures": [f.to_json_dict() for f in self.failures],
            "max_gha_ratio": None if ratio is None else {
                "fraction": f"{ratio.numerator}/{ratio.denominator}",
                "float": float(ratio),
                "instance": list(self.ratio_instance or ()),
            },
            "elapsed_s": round(self.elapsed_s, 3),
            "backend": self.backend,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


class _Ctx:
    """Per-instance lazy cache shared by the checks of one instance."""

    def __init__(self, inputs: InputSet, meta: dict, seed: int,
                 brute_limit: int, cc_limit: int, n_random: int) -> None:
        self.inputs = inputs
        self.meta = meta
        self.seed = seed
        self.brute_limit = brute_limit
        self.cc_limit = cc_limit
        self.n_random = n_random
        self._hg: HierarchicalGraph | None = None
        self._gha: ArcMultiset | None = None
        self._gha_cc: ArcMultiset | None = None
        self._starts: list[tuple[str, ArcMultiset]] | None = None
        self._ca_results: dict[int, ArcMultiset] = {}
        self._brute: tuple[int, tuple[int, ...]] | None | bool = False
        self.ratio: Fraction | None = None

    @property
    def hg(self) -> HierarchicalGraph:
        if self._hg is None:
            self._hg = build_graph(self.inputs)
        return self._hg

    @property
    def gha(self) -> ArcMultiset:
        if self._gha is None:
            self._gha = gha(self.hg)
        return self._gha

    @property
    def gha_cc(self) -> ArcMultiset:
        if self._gha_cc is None:
            self._gha_cc = gha_cycle_cover(self.hg)
        return self._gha_cc

    @property
    def starts(self) -> list[tuple[str, ArcMultiset]]:
        if self._starts is None:
            self._starts = default_starts(
                self.hg, self.seed, self.n_random, self.brute_limit
            )
            # reuse the cached construction instead of the recomputed one
            for i, (name, d) in enumerate(self._starts):
                if name == "gha":
                    self._starts[i] = (name, self.gha)
        return self._starts

    def ca_doubled(self, index: int) -> ArcMultiset:
        if index not in self._ca_results:
            _, d = self.starts[index]
            self._ca_results[index] = ca(self.hg, disjoint_union(d, d))
        return self._ca_results[index]

    @property
    def brute(self) -> tuple[int, tuple[int, ...]] | None:
        if self._brute is False:
            try:
                self._brute = brute_optimal(self.inputs, limit=self.brute_limit)
            except TooLargeError:
                self._brute = None
        return self._brute

    def note_ratio(self) -> None:
        if self.brute is not None:
            r = Fraction(self.gha.weight, self.brute[0])
            if self.ratio is None or r > self.ratio:
                self.ratio = r


def _check_collapsing_ctx(ctx: _Ctx) -> dict | None:
    first = ctx.ca_doubled(0)
    for i in range(1, len(ctx.starts)):
        r = ctx.ca_doubled(i)
        if r != first:
            d = _divergence("collapsing", i, ctx.starts[i][0], r, first)
            d["expected_start"] = ctx.starts[0][0]
            return d
    return None


def _check_gh_ctx(ctx: _Ctx) -> dict | None:
    target = ctx.gha
    for i in range(len(ctx.starts)):
        r = ctx.ca_doubled(i)
        if r != target:
            return _divergence("gh", i, ctx.starts[i][0], r, target)
    return None


def _check_strong_ctx(ctx: _Ctx) -> dict | None:
    res = check_strong_collapsing(
        ctx.hg, ctx.starts[0][1],
        [("gha_cycle_cover", ctx.gha_cc), ("self", ctx.starts[0][1])],
        ctx.gha,
    )
    return None if res.ok else res.detail


def _check_gha_is_greedy_ctx(ctx: _Ctx) -> dict | None:
    sp = spell(ctx.hg, ctx.gha)
    if len(sp.superstring) != ctx.gha.weight:
        return {"reason": "spelled length != weight",
                "spelled": sp.superstring, "weight": ctx.gha.weight}
    if not verify_greedy_permutation(ctx.inputs, sp.visit_order):
        return {"reason": "visit order is not a greedy permutation",
                "visit_order": list(sp.visit_order),
                "superstring": sp.superstring}
    if ctx.brute is not None:
        ctx.note_ratio()
        if 2 * ctx.gha.weight > 7 * ctx.brute[0]:  # ratio > 3.5
            return {"reason": "approximation ratio above 3.5",
                    "gha_weight": ctx.gha.weight, "optimum": ctx.brute[0]}
    return None


def _check_spectrum_ctx(ctx: _Ctx) -> dict | None:
    if "k" not in ctx.meta:
        raise ValueError("spectrum_optimal only applies to spectrum instances")
    k = ctx.meta["k"]
    source = ctx.meta["source"]
    n = len(ctx.inputs)
    w = ctx.gha.weight
    if w > len(source):
        return {"reason": "spectrum weight exceeds the source length",
                "weight": w, "source_len": len(source)}
    # n + k - 1 is the weight only when no window of the source repeats;
    # with repeats the deduplicated de Bruijn graph loses its Eulerian path
    # and the optimum can be strictly larger
    if n == len(source) - k + 1 and w != n + k - 1:
        return {"reason": "distinct-window spectrum weight is not n + k - 1",
                "weight": w, "expected": n + k - 1}
    if ctx.brute is not None and w != ctx.brute[0]:
        return {"reason": "spectrum solution not optimal",
                "weight": w, "optimum": ctx.brute[0]}
    return None


def _check_two_scs_ctx(ctx: _Ctx) -> dict | None:
    if any(len(s) > 2 for s in ctx.inputs):
        raise ValueError("two_scs_optimal needs strings of length <= 2")
    formula = two_scs_formula(ctx.inputs)
    w = ctx.gha.weight
    if ctx.brute is None:
        raise ValueError("two_scs_optimal needs a brute-forceable instance")
    opt = ctx.brute[0]
    if not (w == formula == opt):
        return {"reason": "2-SCS disagreement", "gha_weight": w,
                "formula": formula, "optimum": opt}
    return None


def _check_cycle_cover_ctx(ctx: _Ctx) -> dict | None:
    if len(ctx.inputs) > ctx.cc_limit:
        raise ValueError("cycle_cover_optimal instance exceeds the limit")
    w = ctx.gha_cc.weight
    opt = brute_optimal_cycle_cover(ctx.inputs, limit=ctx.cc_limit)
    if w != opt:
        return {"reason": "cycle cover not optimal",
                "gha_cc_weight": w, "optimum": opt}
    return None


_CHECKS: dict[str, Callable[[_Ctx], dict | None]] = {
    "collapsing": _check_collapsing_ctx,
    "gh": _check_gh_ctx,
    "strong": _check_strong_ctx,
    "gha_is_greedy": _check_gha_is_greedy_ctx,
    "spectrum_optimal": _check_spectrum_ctx,
    "two_scs_optimal": _check_two_scs_ctx,
    "cycle_cover_optimal": _check_cycle_cover_ctx,
}


def _run_range(spec: GeneratorSpec, start: int, stop: int,
               checks: Sequence[str | Callable[[_Ctx], dict | None]],
               brute_limit: int, cc_limit: int, n_random: int):
    failures: list[FailureRecord] = []
    best_ratio: Fraction | None = None
    ratio_instance: tuple[str, ...] | None = None
    for i in range(start, stop):
        seed = (spec.seed + i) & MASK64
        inputs, meta = generate(spec, seed)
        ctx = _Ctx(inputs, meta, seed, brute_limit, cc_limit, n_random)
        for chk in checks:
            fn = _CHECKS[chk] if isinstance(chk, str) else chk
            name = chk if isinstance(chk, str) else getattr(chk, "__name__", "custom")
            detail = fn(ctx)
            if detail is not None:
                failures.append(FailureRecord(
                    name, spec.describe(), seed, inputs.strings, detail
                ))
        if ctx.ratio is not None and (best_ratio is None or ctx.ratio > best_ratio):
            best_ratio = ctx.ratio
            ratio_instance = inputs.strings
    return failures, best_ratio, ratio_instance, stop - start


def run_campaign(spec: GeneratorSpec, count: int,
                 checks: Sequence[str | Callable[[_Ctx], dict | None]],
                 *, brute_limit: int = 7, cc_limit: int = 7,
                 n_random_starts: int = 2, workers: int = 1,
                 out_dir: str | None = None) -> FuzzReport:
    """Run the named checks on count generated instances.

    The instance stream is determined by (spec, index) alone, so results do
    not depend on the worker count. Failures are written to out_dir (when
    given) as replayable dataset files.
    """
    for chk in checks:
        if isinstance(chk, str) and chk not in _CHECKS:
            raise ValueError(f"unknown check {chk!r}; known: {sorted(_CHECKS)}")
    t0 = time.monotonic()
    report = FuzzReport(
        spec_text=spec.describe(), requested=count,
        checks=tuple(c if isinstance(c, str) else "custom" for c in checks),
    )
    if workers <= 1:
        parts = [_run_range(spec, 0, count, checks, brute_limit, cc_limit,
                            n_random_starts)]
    else:
        chunk = (count + workers - 1) // workers
        ranges = [(i, min(i + chunk, count)) for i in range(0, count, chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(
                _run_range_star,
                [(spec, a, b, checks, brute_limit, cc_limit, n_random_starts)
                 for a, b in ranges],
            ))
    for failures, ratio, ratio_inst, n in parts:
        report.failures.extend(failures)
        report.instances_run += n
        if ratio is not None and (report.max_gha_ratio is None
                                  or ratio > report.max_gha_ratio):
            report.max_gha_ratio = ratio
            report.ratio_instance = ratio_inst
    report.elapsed_s = time.monotonic() - t0
    if out_dir:
        persist_failures(report, out_dir)
    return report


def _run_range_star(args):
    return _run_range(*args)


def persist_failures(report: FuzzReport, out_dir: str) -> list[str]:
    """Write one replayable dataset file per failure; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for i, f in enumerate(report.failures):
        path = os.path.join(out_dir, f"counterexample_{f.check}_{f.seed}_{i}.txt")
        save_dataset(path, f.strings, comments=[
            f"generator: {f.spec_text}",
            f"instance seed: {f.seed}",
            f"failing check: {f.check}",
            f"detail: {json.dumps(f.detail)}",
        ])
        paths.append(path)
    return paths
