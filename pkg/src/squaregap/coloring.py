"""Exact chromatic number, list-colorability, and choosability-gap certificates.

All searches are deterministic and complete: an UNSAT verdict is issued
only after the whole (pruned) space has been exhausted, with a node
count attached, because the verdicts are consumed as mathematical
certificates rather than best-effort answers.  Color sets live in int
bitmasks throughout (colors are small nonnegative integers).
"""

import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .construction import construct_counterexample
from .errors import CapacityError, SearchBudgetExceeded
from .graphcore import PartitionWitness, SimpleGraph, bits, square
from .latin import require_prime
from .verification import check_square_structure

CHROMATIC_MAX_VERTICES = 128
_DEADLINE_STRIDE = 1024  # nodes between wall-clock checks


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color lists over an ordered integer color universe.

    A canonical assignment has every list nonempty; construction tolerates
    empty lists so that solvers can express the trivially-unsatisfiable
    case, and validate() enforces the strict form.
    """

    universe: tuple[int, ...]
    lists: dict[int, frozenset[int]]

    def __post_init__(self):
        u = set(self.universe)
        if any(c < 0 for c in u):
            raise ValueError("colors must be nonnegative integers")
        for v, colors in self.lists.items():
            if not colors <= u:
                raise ValueError(f"list of vertex {v} leaves the universe")

    def validate(self) -> None:
        for v, colors in self.lists.items():
            if not colors:
                raise ValueError(f"vertex {v} has an empty list")

    def list_sizes(self) -> dict[int, int]:
        return {v: len(c) for v, c in self.lists.items()}


@dataclass(frozen=True)
class SearchAttestation:
    """What a completed (or aborted) search can attest to."""

    nodes: int
    complete: bool
    empty_list_vertex: Optional[int] = None


@dataclass(frozen=True)
class ListColoringResult:
    satisfiable: bool
    coloring: Optional[dict[int, int]]
    attestation: SearchAttestation


@dataclass(frozen=True)
class VetrikAssignment:
    """The adversarial list assignment over K_{n*r} built from n color blocks.

    The 2r-1 colors are split into n near-equal consecutive blocks; the
    k-th vertex of every part gets all colors outside block k, trimmed to
    exactly (n-1) * floor((2r-1)/n) colors.  No part then has a color
    common to all of its lists, so any proper coloring needs at least two
    colors per part: 2r in total, one more than the universe has.
    """

    n: int  # part size
    r: int  # part count
    blocks: tuple[tuple[int, ...], ...]
    assignment: ListAssignment
    bound: int

    def __post_init__(self):
        sizes = [len(b) for b in self.blocks]
        if max(sizes) - min(sizes) > 1:
            raise ValueError("block sizes must differ by at most one")
        flat = [c for b in self.blocks for c in b]
        if len(set(flat)) != len(flat) or sorted(flat) != sorted(self.assignment.universe):
            raise ValueError("blocks must partition the color universe")
        if min(sizes) < (2 * self.r - 1) // self.n:
            raise ValueError("some block is below the guaranteed floor size")
        if any(len(colors) != self.bound for colors in self.assignment.lists.values()):
            raise ValueError(f"every list must have exactly {self.bound} colors")


@dataclass(frozen=True)
class GapCertificate:
    """Machine-checked record that choosability exceeds the chromatic number.

    chromatic comes with a validated proper coloring; list_bound is a size
    s such that the refuted assignment has all lists of size s and admits
    no proper coloring (full exhaustion attested), so the list chromatic
    number is at least s + 1.
    """

    n: int
    chromatic: int
    chromatic_coloring: tuple[int, ...]
    list_bound: int
    refuted_assignment: ListAssignment
    blocks: tuple[tuple[int, ...], ...]
    attestation: SearchAttestation
    gap_lower: int

    def __post_init__(self):
        if self.gap_lower != self.list_bound + 1 - self.chromatic:
            raise ValueError("gap_lower is not (list_bound + 1) - chromatic")
        if self.gap_lower < self.n - 1:
            raise ValueError(f"certificate gap {self.gap_lower} below n-1 = {self.n - 1}")


def _color_mask(colors: Iterable[int]) -> int:
    m = 0
    for c in colors:
        m |= 1 << c
    return m


class _Budget:
    """Counts search nodes and enforces an optional wall-clock deadline."""

    __slots__ = ("nodes", "deadline")

    def __init__(self, deadline: Optional[float]):
        self.nodes = 0
        self.deadline = deadline

    def tick(self):
        self.nodes += 1
        if (self.deadline is not None and self.nodes % _DEADLINE_STRIDE == 0
                and time.monotonic() > self.deadline):
            raise SearchBudgetExceeded("search budget exhausted", nodes=self.nodes)


def deadline_from_budget(budget_seconds: Optional[float]) -> Optional[float]:
    return None if budget_seconds is None else time.monotonic() + budget_seconds


# -- exact chromatic number -------------------------------------------------


def greedy_clique(g: SimpleGraph) -> list[int]:
    """Deterministic greedy clique: max degree start, densest extension, index ties."""
    if g.n == 0:
        return []
    start = min(range(g.n), key=lambda v: (-g.degree(v), v))
    clique = [start]
    cand = g.adj[start]
    while cand:
        v = min(bits(cand), key=lambda u: (-(g.adj[u] & cand).bit_count(), u))
        clique.append(v)
        cand &= g.adj[v]
    return clique


def greedy_coloring(g: SimpleGraph) -> tuple[int, list[int]]:
    """Saturation-first greedy upper bound; returns (colors used, coloring)."""
    colors = [-1] * g.n
    neighbor_colors = [0] * g.n  # bitmask of colors seen on neighbors
    for _ in range(g.n):
        v = min((u for u in range(g.n) if colors[u] < 0),
                key=lambda u: (-neighbor_colors[u].bit_count(), -g.degree(u), u))
        c = 0
        seen = neighbor_colors[v]
        while seen & 1:
            seen >>= 1
            c += 1
        colors[v] = c
        for u in bits(g.adj[v]):
            neighbor_colors[u] |= 1 << c
    return (max(colors) + 1 if colors else 0), colors


def _k_coloring(g: SimpleGraph, k: int, clique: list[int],
                budget: _Budget) -> Optional[list[int]]:
    """Backtracking k-colorability with the clique pre-colored 0..|clique|-1.

    Most-constrained vertex first; a vertex may only open one color beyond
    the highest color used so far (color classes are interchangeable).
    """
    full = (1 << k) - 1
    colors: dict[int, int] = {}
    avail = [full] * g.n
    for idx, v in enumerate(clique):
        colors[v] = idx
        for u in bits(g.adj[v]):
            avail[u] &= ~(1 << idx)

    def solve(max_used: int) -> bool:
        if len(colors) == g.n:
            return True
        best_v, best_c = -1, k + 1
        for v in range(g.n):
            if v not in colors:
                c = avail[v].bit_count()
                if c < best_c:
                    best_v, best_c = v, c
                    if c == 0:
                        return False
        v = best_v
        cap = (1 << min(k, max_used + 2)) - 1
        m = avail[v] & cap
        while m:
            low = m & -m
            m ^= low
            c = low.bit_length() - 1
            budget.tick()
            colors[v] = c
            touched = []
            for u in bits(g.adj[v]):
                if u not in colors and avail[u] & low:
                    avail[u] ^= low
                    touched.append(u)
            if solve(max(max_used, c)):
                return True
            for u in touched:
                avail[u] |= low
            del colors[v]
        return False

    if solve(len(clique) - 1):
        return [colors[v] for v in range(g.n)]
    return None


def chromatic_number_exact(g: SimpleGraph, *,
                           deadline: Optional[float] = None) -> tuple[int, list[int]]:
    """Minimum proper coloring, branch-and-bound between greedy clique and greedy bounds.

    Raises CapacityError above the vertex guard and SearchBudgetExceeded
    (carrying the best bounds found) if the deadline passes mid-search.
    """
    if g.n > CHROMATIC_MAX_VERTICES:
        raise CapacityError(
            f"exact chromatic search limited to {CHROMATIC_MAX_VERTICES} vertices, got {g.n}")
    if g.n == 0:
        return 0, []
    clique = greedy_clique(g)
    lower = len(clique)
    upper, best = greedy_coloring(g)
    budget = _Budget(deadline)
    for k in range(lower, upper):
        try:
            witness = _k_coloring(g, k, clique, budget)
        except SearchBudgetExceeded as exc:
            raise SearchBudgetExceeded(
                f"chromatic search stopped between bounds {k} and {upper}",
                nodes=exc.nodes, lower_bound=k, upper_bound=upper) from None
        if witness is not None:
            return k, witness
    return upper, best


# -- list coloring ------------------------------------------------------------


def _require_cover(g: SimpleGraph, assignment: ListAssignment) -> None:
    if set(assignment.lists) != set(range(g.n)):
        raise ValueError("assignment must cover exactly the graph's vertices")


def is_list_colorable(g: SimpleGraph, assignment: ListAssignment, *,
                      deadline: Optional[float] = None) -> ListColoringResult:
    """Complete backtracking decision for proper coloring from per-vertex lists.

    Most-constrained vertex first (ties by index), colors tried ascending,
    forward checking on neighbor lists.  UNSAT is returned only after the
    whole search space is exhausted; the attestation carries the node count.
    """
    _require_cover(g, assignment)
    for v in range(g.n):
        if not assignment.lists[v]:
            return ListColoringResult(
                False, None, SearchAttestation(nodes=0, complete=True, empty_list_vertex=v))
    avail = [_color_mask(assignment.lists[v]) for v in range(g.n)]
    colors: dict[int, int] = {}
    budget = _Budget(deadline)

    def solve() -> bool:
        if len(colors) == g.n:
            return True
        best_v, best_c = -1, 1 << 62
        for v in range(g.n):
            if v not in colors:
                c = avail[v].bit_count()
                if c < best_c:
                    best_v, best_c = v, c
                    if c == 0:
                        return False
        v = best_v
        m = avail[v]
        while m:
            low = m & -m
            m ^= low
            budget.tick()
            colors[v] = low.bit_length() - 1
            touched = []
            for u in bits(g.adj[v]):
                if u not in colors and avail[u] & low:
                    avail[u] ^= low
                    touched.append(u)
            if solve():
                return True
            for u in touched:
                avail[u] |= low
            del colors[v]
        return False

    if solve():
        return ListColoringResult(True, dict(colors),
                                  SearchAttestation(nodes=budget.nodes, complete=True))
    return ListColoringResult(False, None,
                              SearchAttestation(nodes=budget.nodes, complete=True))


def _minimal_covers(avails: list[int]) -> list[int]:
    """All minimal color sets hitting every mask in avails, smallest first.

    In a complete multipartite graph a part can be colored from exactly the
    color sets that hit all of its lists, and trying only the minimal ones
    preserves completeness: whatever a larger set can do, its minimal
    subset leaves more colors for the remaining parts.
    """
    found: set[int] = set()

    def grow(chosen: int, remaining: list[int]):
        rem = [m for m in remaining if not m & chosen]
        if not rem:
            found.add(chosen)
            return
        pivot = min(rem, key=lambda m: (m.bit_count(), m))
        m = pivot
        while m:
            low = m & -m
            m ^= low
            grow(chosen | low, rem)

    grow(0, avails)
    minimal: list[int] = []
    for s in sorted(found, key=lambda s: (s.bit_count(), s)):
        if not any(t & s == t for t in minimal):
            minimal.append(s)
    return minimal


def multipartite_list_colorable(witness: PartitionWitness, assignment: ListAssignment,
                                *, deadline: Optional[float] = None) -> ListColoringResult:
    """List-colorability decision specialized to complete multipartite graphs.

    Searches part by part over minimal covering color sets.  Soundness of
    the part-level view: distinct parts must use disjoint colors, since
    every cross-part pair is adjacent.  Two pruning rules: a branch dies
    when some vertex has no colors left, or when the distinct colors still
    available fall short of the per-part demand (1 if a remaining color is
    common to the whole part, else 2).
    """
    verts = [v for part in witness.parts for v in part]
    if len(set(verts)) != len(verts) or any(not p for p in witness.parts):
        raise ValueError("witness parts must be disjoint and nonempty")
    if set(assignment.lists) != set(verts):
        raise ValueError("lists do not cover exactly the witness vertices")
    for v in verts:
        if not assignment.lists[v]:
            return ListColoringResult(
                False, None, SearchAttestation(nodes=0, complete=True, empty_list_vertex=v))
    parts = witness.parts
    masks = {v: _color_mask(assignment.lists[v]) for v in verts}
    budget = _Budget(deadline)
    chosen: list[int] = []  # cover mask per already-colored part

    def demand_met(used: int) -> bool:
        need, union = 0, 0
        for pi in range(len(chosen), len(parts)):
            common = -1
            for v in parts[pi]:
                av = masks[v] & ~used
                if av == 0:
                    return False
                union |= av
                common &= av
            need += 1 if common else 2
        return union.bit_count() >= need

    def solve(used: int) -> bool:
        budget.tick()
        if len(chosen) == len(parts):
            return True
        if not demand_met(used):
            return False
        part = parts[len(chosen)]
        for cover in _minimal_covers([masks[v] & ~used for v in part]):
            chosen.append(cover)
            if solve(used | cover):
                return True
            chosen.pop()
        return False

    if solve(0):
        coloring = {}
        for part, cover in zip(parts, chosen):
            for v in part:
                pick = masks[v] & cover
                coloring[v] = (pick & -pick).bit_length() - 1
        return ListColoringResult(True, coloring,
                                  SearchAttestation(nodes=budget.nodes, complete=True))
    return ListColoringResult(False, None,
                              SearchAttestation(nodes=budget.nodes, complete=True))


# -- the adversarial assignment and the certificate ---------------------------


def vetrik_lower_bound(n: int, r: int) -> int:
    """The list size (n-1) * floor((2r-1)/n) that K_{n*r} provably defeats."""
    if n < 2 or r < 2:
        raise ValueError(f"need n, r >= 2, got n={n}, r={r}")
    return (n - 1) * ((2 * r - 1) // n)


def vetrik_assignment(n: int, r: int) -> VetrikAssignment:
    """Adversarial lists on K_{n*r} with every list of size vetrik_lower_bound(n, r).

    The color universe 1..2r-1 is split into n consecutive blocks, larger
    blocks first; position k of each part gets the universe minus block k,
    trimmed to the exact bound by discarding the largest colors.  Trimming
    is sound: removing colors can only make coloring harder.
    """
    bound = vetrik_lower_bound(n, r)
    total = 2 * r - 1
    size, extra = divmod(total, n)
    blocks = []
    start = 1
    for b in range(n):
        width = size + (1 if b < extra else 0)
        blocks.append(tuple(range(start, start + width)))
        start += width
    universe = tuple(range(1, total + 1))
    per_position = []
    for block in blocks:
        colors = sorted(set(universe) - set(block))
        per_position.append(frozenset(colors[:bound]))
    lists = {}
    for part in range(r):
        for k in range(n):
            lists[part * n + k] = per_position[k]
    assignment = ListAssignment(universe=universe, lists=lists)
    return VetrikAssignment(n=n, r=r, blocks=tuple(blocks),
                            assignment=assignment, bound=bound)


def vetrik_on_witness(va: VetrikAssignment, witness: PartitionWitness) -> ListAssignment:
    """Transport the adversarial lists onto the parts of a concrete witness.

    The lists depend only on the position of a vertex inside its part, so
    any complete multipartite graph with r parts of size n receives them
    by sorting each part and handing position k the k-th list.
    """
    if len(witness.parts) != va.r or any(len(p) != va.n for p in witness.parts):
        raise ValueError(
            f"witness must have {va.r} parts of size {va.n} to receive this assignment")
    position_lists = [va.assignment.lists[k] for k in range(va.n)]
    lists = {}
    for part in witness.parts:
        for k, v in enumerate(sorted(part)):
            lists[v] = position_lists[k]
    return ListAssignment(universe=va.assignment.universe, lists=lists)


def validate_coloring(g: SimpleGraph, coloring, assignment: ListAssignment | None = None) -> bool:
    """Independent check that a coloring is proper (and list-respecting, if given)."""
    if isinstance(coloring, dict):
        values = coloring
    else:
        values = {v: c for v, c in enumerate(coloring)}
    if set(values) != set(range(g.n)):
        return False
    for u, v in g.edges():
        if values[u] == values[v]:
            return False
    if assignment is not None:
        for v, c in values.items():
            if c not in assignment.lists[v]:
                return False
    return True


def certify_gap(n: int, budget_seconds: Optional[float] = None) -> GapCertificate:
    """End-to-end certificate that the squared construction has a choosability gap.

    Builds the graph, re-verifies that the square is complete multipartite,
    computes the exact chromatic number (cross-checked against the part
    count), and exhaustively refutes the adversarial assignment of size
    vetrik_lower_bound(n, 2n-1) on the square.  The gap lower bound is
    (refuted size + 1) - chromatic, which is n - 1 for every prime n >= 3.
    """
    require_prime(n)
    if n < 3:
        raise ValueError(f"n must be a prime >= 3, got {n}")
    deadline = deadline_from_budget(budget_seconds)
    gc = construct_counterexample(n)
    witness, report = check_square_structure(gc)
    if not report.passed:
        raise RuntimeError(f"square structure check failed: {report.witness}")
    sq = square(gc.graph)
    chromatic, coloring = chromatic_number_exact(sq, deadline=deadline)
    r = len(witness.parts)
    if chromatic != r:
        raise RuntimeError(
            f"exact chromatic number {chromatic} disagrees with part count {r}")
    if not validate_coloring(sq, coloring) or len(set(coloring)) != chromatic:
        raise RuntimeError("chromatic witness failed independent validation")
    va = vetrik_assignment(n, r)
    refuted = vetrik_on_witness(va, witness)
    result = multipartite_list_colorable(witness, refuted, deadline=deadline)
    if result.satisfiable:
        raise RuntimeError("adversarial assignment was unexpectedly colorable")
    return GapCertificate(
        n=n,
        chromatic=chromatic,
        chromatic_coloring=tuple(coloring),
        list_bound=va.bound,
        refuted_assignment=refuted,
        blocks=va.blocks,
        attestation=result.attestation,
        gap_lower=va.bound + 1 - chromatic,
    )
