"""Chains of trace shifts and similarity jumps from a triple to (1, 1, 2).

A G move sends (c, d, n) to (c, d, n + k d).  An S move replaces (c, d, n)
by (c', d', n) with alpha <theta-c, d> = beta <theta-c', d'>.
"""
from __future__ import annotations

import heapq
import json
import logging
from dataclasses import dataclass, field
from typing import Callable

from .classes import ClassListing, UndecidedError, class_listing, is_equivalent, scan_classes
from .lattice import hnf
from .matrices import CSTriple, InvalidTripleError, is_valid_triple, triple_to_ideal
from .order import f_eval, mul_coords
from .units import DEFAULT_EFFORT

log = logging.getLogger(__name__)

GOAL = CSTriple(1, 1, 2)


@dataclass(frozen=True)
class Move:
    kind: str                       # "G" or "S"
    k: int = 0
    target: CSTriple | None = None
    alpha: tuple[int, int, int] | None = None
    beta: tuple[int, int, int] | None = None

    @classmethod
    def shift(cls, k: int) -> Move:
        return cls("G", k=k)

    @classmethod
    def jump(cls, target, alpha, beta) -> Move:
        return cls("S", target=CSTriple.of(target), alpha=tuple(alpha), beta=tuple(beta))

    def apply(self, t: CSTriple) -> CSTriple:
        if self.kind == "G":
            return t.shift(self.k)
        return self.target

    def __str__(self) -> str:
        return f"G({self.k})" if self.kind == "G" else f"S{self.target}"


@dataclass(frozen=True)
class Chain:
    start: CSTriple
    moves: tuple[Move, ...]

    @property
    def end(self) -> CSTriple:
        t = self.start
        for m in self.moves:
            t = m.apply(t)
        return t

    def triples(self) -> list[CSTriple]:
        out = [self.start]
        for m in self.moves:
            out.append(m.apply(out[-1]))
        return out

    @property
    def depth(self) -> int:
        """Number of trace shifts, not counting a closing (1,1,n) -> (1,1,2)."""
        count = 0
        for m, src in zip(self.moves, self.triples()):
            if m.kind == "G" and not (src.d == 1 and m.apply(src).n == 2):
                count += 1
        return count

    def __add__(self, other: Chain) -> Chain:
        if self.end != other.start:
            raise ValueError(f"chain ends at {self.end}, next starts at {other.start}")
        return Chain(self.start, self.moves + other.moves)

    def describe(self) -> str:
        parts = [str(self.start)]
        for m, t in zip(self.moves, self.triples()[1:]):
            parts.append(("~G " if m.kind == "G" else "~S ") + str(t))
        return " ".join(parts)


@dataclass(frozen=True)
class SearchConfig:
    d_max: int = 400
    n_window: tuple[int, int] = (-250, 250)
    max_depth: int = 8
    effort: int = DEFAULT_EFFORT
    max_expansions: int = 400

    def __post_init__(self):
        lo, hi = self.n_window
        if self.d_max < 1 or self.max_depth < 1 or self.effort < 1 or lo > hi or self.max_expansions < 1:
            raise ValueError("search bounds must be positive and the window non-empty")


@dataclass(frozen=True)
class NotFound:
    start: CSTriple
    config: SearchConfig
    expansions: int
    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class ChainCheck:
    ok: bool
    failed_at: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# Verification: plain lattice arithmetic, independent of the search code


def _scaled_hnf(n: int, c: int, d: int, x) -> list[list[int]]:
    gens = [(-c, 1, 0), (abs(d), 0, 0)]
    rows = []
    for g in gens:
        v = mul_coords(n, g, x)
        for _ in range(3):
            rows.append(list(v))
            v = mul_coords(n, v, (0, 1, 0))
    return hnf(rows)


def check_jump(src: CSTriple, dst: CSTriple, alpha, beta) -> bool:
    """alpha <theta-c, d> = beta <theta-c', d'> by exact HNF comparison."""
    if src.n != dst.n or not any(alpha) or not any(beta):
        return False
    n = src.n
    return _scaled_hnf(n, src.c, src.d, alpha) == _scaled_hnf(n, dst.c, dst.d, beta)


def verify_chain(ch: Chain, require_goal: bool = True, expected_end=None) -> ChainCheck:
    t = ch.start
    if not is_valid_triple(t.c, t.d, t.n):
        return ChainCheck(False, None, "start is not a valid triple")
    for i, m in enumerate(ch.moves):
        if m.kind == "G":
            nxt = (t.c, t.d, t.n + m.k * t.d)
            if not is_valid_triple(*nxt):
                return ChainCheck(False, i, "shift leaves the set of triples")
            t = CSTriple(*nxt)
        elif m.kind == "S":
            dst = m.target
            if dst is None or m.alpha is None or m.beta is None:
                return ChainCheck(False, i, "jump without witness")
            if dst.n != t.n or f_eval(dst.n, dst.c) % dst.d:
                return ChainCheck(False, i, "jump target invalid or changes trace")
            if not check_jump(t, dst, m.alpha, m.beta):
                return ChainCheck(False, i, "witness does not identify the ideals")
            t = dst
        else:
            return ChainCheck(False, i, f"unknown move type {m.kind!r}")
    if expected_end is not None and t != CSTriple.of(expected_end):
        return ChainCheck(False, len(ch.moves), f"chain ends at {t}, expected {expected_end}")
    if require_goal and t.normalized() != GOAL:
        return ChainCheck(False, len(ch.moves), f"chain ends at {t}, not (1,1,2)")
    return ChainCheck(True)


# ---------------------------------------------------------------------------
# Certificates


def to_certificate(ch: Chain) -> dict:
    def trip(t):
        return [str(t.c), str(t.d), str(t.n)]

    moves = []
    for m in ch.moves:
        if m.kind == "G":
            moves.append({"type": "G", "k": str(m.k)})
        else:
            moves.append({
                "type": "S",
                "to": trip(m.target),
                "alpha": [str(x) for x in m.alpha],
                "beta": [str(x) for x in m.beta],
            })
    return {"start": trip(ch.start), "moves": moves, "end": trip(ch.end)}


class CertificateError(ValueError):
    """Malformed chain certificate."""


def from_certificate(doc: dict) -> tuple[Chain, CSTriple]:
    """Parse a certificate; returns the chain and its declared end."""
    try:
        start = CSTriple(*(int(x) for x in doc["start"]))
        moves = []
        for m in doc["moves"]:
            if m["type"] == "G":
                moves.append(Move.shift(int(m["k"])))
            elif m["type"] == "S":
                moves.append(Move.jump(
                    tuple(int(x) for x in m["to"]),
                    tuple(int(x) for x in m["alpha"]),
                    tuple(int(x) for x in m["beta"]),
                ))
            else:
                raise CertificateError(f"unknown move type {m['type']!r}")
        end = tuple(int(x) for x in doc["end"])
    except (KeyError, TypeError, InvalidTripleError) as exc:
        raise CertificateError(str(exc)) from exc
    return Chain(start, tuple(moves)), end


def dump_certificate(ch: Chain) -> str:
    return json.dumps(to_certificate(ch), indent=2)


def load_certificate(text: str) -> tuple[Chain, CSTriple]:
    return from_certificate(json.loads(text))


# ---------------------------------------------------------------------------
# Neighbours


def g_neighbors(t, window=(-250, 250)) -> list[CSTriple]:
    """All (c, d, n + k d) with the new trace in the window, smallest |k| first."""
    t = CSTriple.of(t)
    lo, hi = window
    d = abs(t.d)
    out = []
    k_lo = -((t.n - lo) // d)
    k_hi = (hi - t.n) // d
    for k in sorted(range(k_lo, k_hi + 1), key=lambda k: (abs(k), k)):
        out.append(CSTriple(t.c, t.d, t.n + k * t.d))
    return out


class ListingCache:
    """Class listings per trace, shared between searches."""

    def __init__(self, d_max: int, effort: int = DEFAULT_EFFORT):
        self.d_max = d_max
        self.effort = effort
        self.by_trace: dict[int, list[ClassListing]] = {}

    def add(self, listing: ClassListing) -> None:
        self.by_trace.setdefault(listing.source.n, []).append(listing)

    def listing_for(self, t: CSTriple) -> ClassListing:
        t = t.normalized()
        for lst in self.by_trace.get(t.n, []):
            if (t.c, t.d) in lst.members:
                return lst
        if t.d > self.d_max:
            lst = class_listing(t, max(self.d_max, t.d), self.effort)
        else:
            lst = class_listing(t, self.d_max, self.effort)
        if not lst.complete:
            raise UndecidedError(f"listing of {t} exceeded the search budget")
        self.add(lst)
        return lst


def _jump_witness(lst: ClassListing, src: CSTriple, dst: CSTriple):
    """(alpha, beta) with alpha * I_src = beta * I_dst, both members of lst."""
    s, d = src.normalized(), dst.normalized()
    y_src = lst.members[(s.c, s.d)]
    y_dst = lst.members[(d.c, d.d)]
    return y_dst, y_src


def s_neighbors(t, d_max: int = 400, effort: int = DEFAULT_EFFORT,
                cache: ListingCache | None = None) -> list[tuple[CSTriple, tuple]]:
    """Triples of the same class with d <= d_max, each with a jump witness from t."""
    t = CSTriple.of(t)
    cache = cache or ListingCache(d_max, effort)
    lst = cache.listing_for(t)
    out = []
    for m in lst.triples():
        if m.d <= d_max:
            out.append((m, _jump_witness(lst, t, m)))
    return out


# ---------------------------------------------------------------------------
# Search


def trace_distance(n: int) -> int:
    """max(n, 5 - n): traces n and 5 - n are equally hard."""
    return max(n, 5 - n)


def _finish(t: CSTriple, lst: ClassListing) -> list[Move]:
    moves = []
    one = CSTriple(1, 1, t.n)
    if t != one:
        a, b = _jump_witness(lst, t, one)
        moves.append(Move.jump(one, a, b))
    if t.n != 2:
        moves.append(Move.shift(2 - t.n))
    return moves


def find_chain(t, cfg: SearchConfig = SearchConfig(), cache: ListingCache | None = None,
               progress: Callable[[str], None] | None = None) -> Chain | NotFound:
    """Best-first search preferring shifts towards small traces.

    Nodes are triples reached by a shift.  Expanding a node lists its class;
    a class containing (1,1,n) finishes the chain.  Children are all shifts
    of all class members within the trace window.
    """
    start = CSTriple.of(t)
    cache = cache or ListingCache(cfg.d_max, cfg.effort)
    if start.normalized() == CSTriple(1, 1, start.n) and start == CSTriple(1, 1, start.n):
        return Chain(start, tuple([Move.shift(2 - start.n)] if start.n != 2 else []))
    counter = 0
    heap = [(trace_distance(start.n), 0, counter, start, ())]
    seen_classes: set = set()
    expansions = 0
    while heap:
        _, depth, _, node, path = heapq.heappop(heap)
        try:
            lst = cache.listing_for(node)
        except UndecidedError as exc:
            return NotFound(start, cfg, expansions, str(exc))
        key = (node.n, lst.source)
        if key in seen_classes:
            continue
        seen_classes.add(key)
        expansions += 1
        if (1, 1) in lst.members:
            ch = Chain(start, path + tuple(_finish(node, lst)))
            check = verify_chain(ch)
            if not check:
                raise AssertionError(f"search produced an invalid chain: {check.reason}")
            return ch
        if expansions >= cfg.max_expansions:
            break
        if depth + 1 > cfg.max_depth:
            continue
        for m in lst.triples():
            jump = ()
            if node != m:
                a, b = _jump_witness(lst, node, m)
                jump = (Move.jump(m, a, b),)
            for child in g_neighbors(m, cfg.n_window):
                if child.n == node.n:
                    continue
                k = (child.n - m.n) // m.d
                counter += 1
                heapq.heappush(heap, (
                    trace_distance(child.n), depth + 1, counter, child,
                    path + jump + (Move.shift(k),),
                ))
        if progress:
            progress(f"{start}: expanded {node}, {len(heap)} queued")
    return NotFound(start, cfg, expansions, "search space exhausted within bounds")


# ---------------------------------------------------------------------------
# Batch checks


@dataclass
class ConjectureReport:
    n: int
    reps: list[CSTriple]
    chains: dict = field(default_factory=dict)      # rep -> Chain
    failures: dict = field(default_factory=dict)    # rep -> reason

    @property
    def ok(self) -> bool:
        return not self.failures and len(self.chains) == len(self.reps)


def conjecture_check(n: int, cfg: SearchConfig = SearchConfig(), cache: ListingCache | None = None,
                     progress: Callable[[str], None] | None = None) -> ConjectureReport:
    cache = cache or ListingCache(cfg.d_max, cfg.effort)
    try:
        scan = scan_classes(n, cfg.d_max, cfg.effort)
    except UndecidedError as exc:
        report = ConjectureReport(n, [])
        report.failures[CSTriple(1, 1, n)] = str(exc)
        return report
    for lst in scan.listings:
        cache.add(lst)
    report = ConjectureReport(n, scan.reps)
    for rep in scan.reps:
        res = find_chain(rep, cfg, cache, progress)
        if isinstance(res, NotFound):
            report.failures[rep] = res.reason
            continue
        check = verify_chain(res)
        if not check or res.depth > cfg.max_depth:
            report.failures[rep] = check.reason or "depth exceeded"
            continue
        report.chains[rep] = res
    return report


def chain_from_steps(start, steps, effort: int = DEFAULT_EFFORT) -> Chain:
    """Build a chain from listed triples, computing jump witnesses.

    steps: sequence of (kind, triple) as in the reference data.
    """
    cur = CSTriple.of(start)
    moves = []
    for kind, nxt in steps:
        nxt = CSTriple.of(nxt)
        if kind == "G":
            diff = nxt.n - cur.n
            if (nxt.c, nxt.d) != (cur.c, cur.d) or diff % cur.d:
                raise ValueError(f"{cur} -> {nxt} is not a trace shift")
            moves.append(Move.shift(diff // cur.d))
        else:
            dec = is_equivalent(triple_to_ideal(cur), triple_to_ideal(nxt), effort)
            if not dec.yes:
                raise ValueError(f"{cur} ~S {nxt}: equivalence {dec.verdict}")
            moves.append(Move.jump(nxt, dec.alpha, dec.beta))
        cur = nxt
    return Chain(CSTriple.of(start), tuple(moves))


def corrupt_move(ch: Chain, index: int) -> Chain:
    """Copy of the chain with one move altered (for negative controls)."""
    moves = list(ch.moves)
    m = moves[index]
    if m.kind == "G":
        moves[index] = Move.shift(m.k + 1)
    else:
        alpha = (m.alpha[0] + 1,) + tuple(m.alpha[1:])
        moves[index] = Move.jump(m.target, alpha, m.beta)
    return Chain(ch.start, tuple(moves))


# ---------------------------------------------------------------------------
# The family (c, d, c + 2)


def earle_triples(c_max: int = 94, d_limit: int = 134) -> list[CSTriple]:
    """(c, d, c + 2) with 0 <= c <= c_max and d | c^2 - c + 1, plus one
    representative c in [1, d] for every d <= d_limit.

    Every (c, d, c + 2) with d <= d_limit is Gompf equivalent to one of
    the second kind: (c + k d, d, c + k d + 2) ~G (c + k d, d, c + 2),
    which has the same ideal as (c, d, c + 2).
    """
    out = set()
    for c in range(0, c_max + 1):
        m = c * c - c + 1
        for d in _divisors(m):
            out.add(CSTriple(c, d, c + 2))
    for d in range(1, d_limit + 1):
        for c in range(1, d + 1):
            if (c * c - c + 1) % d == 0:
                out.add(CSTriple(c, d, c + 2))
    return sorted(out, key=lambda t: (t.n, t.d, t.c))


def _divisors(m: int) -> list[int]:
    from sympy import divisors
    return [int(x) for x in divisors(m)]


def earle_entry(t: CSTriple) -> int:
    """The entry a of X_{c,d,c+2}."""
    return (t.c * t.c - t.c + 1) // t.d


def earle_residual(a: int, c_max: int = 94) -> list[CSTriple]:
    return [t for t in earle_triples(c_max, 0) if earle_entry(t) == a]


@dataclass
class EarleReport:
    a19: list[CSTriple]
    a37: list[CSTriple]
    chains: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def earle_check(c_max: int = 94, d_limit: int = 134, cfg: SearchConfig | None = None,
                triples=None, progress: Callable[[str], None] | None = None) -> EarleReport:
    """Chain every triple of the family to (1,1,2); also list the a = 19, 37 cases."""
    cfg = cfg or SearchConfig(d_max=450)
    report = EarleReport(earle_residual(19, c_max), earle_residual(37, c_max))
    cache = ListingCache(cfg.d_max, cfg.effort)
    todo = earle_triples(c_max, d_limit) if triples is None else [CSTriple.of(t) for t in triples]
    for t in todo:
        res = find_chain(t, cfg, cache)
        if isinstance(res, NotFound):
            report.failures[t] = res.reason
        else:
            report.chains[t] = res
        if progress:
            progress(f"{t}: {'ok' if t in report.chains else 'FAILED'}")
    return report
