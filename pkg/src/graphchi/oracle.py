"""Brute-force enumeration of labeled half-edge graphs, trees and
graph/forest pairs.

Nothing in this module uses the generating functions; it is the independent
side of every cross-check.  A graph is a set of half-edges ``0..h-1`` with an
involution (2-cycles are edges, fixed points are leaves) and a partition into
vertices.  Labeled graphs are weighted by ``1/h!``; by orbit-stabilizer the
weighted count of labeled objects equals the sum of ``1/|Aut|`` over
isomorphism classes.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .series import TruncatedSeries, exp_series, format_rational

MATCHING_CAP = 14
PARTITION_CAP = 14
ISO_EDGE_CAP = 4
PAIR_RANK_CAP = 2
TREE_LEAF_CAP = 7


class CapExceededError(ValueError):
    """An enumeration was requested beyond its configured size cap."""


def _check_cap(name: str, value: int, cap: int, hint: str):
    if value > cap:
        raise CapExceededError(f"{name}={value} exceeds the cap {cap}; {hint}")


# ---------------------------------------------------------------------------
# Half-edge graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HalfEdgeGraph:
    """Half-edges ``0..h_count-1``; ``pairing[h]`` is the partner of ``h``
    (``pairing[h] == h`` for a leaf); ``blocks`` are the vertices."""

    pairing: tuple
    blocks: tuple

    @property
    def h_count(self) -> int:
        return len(self.pairing)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in enumerate(self.pairing) if a < b]

    def leaves(self) -> list[int]:
        return [a for a, b in enumerate(self.pairing) if a == b]

    @property
    def num_edges(self) -> int:
        return sum(1 for a, b in enumerate(self.pairing) if a < b)

    @property
    def num_vertices(self) -> int:
        return len(self.blocks)

    @property
    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges

    def vertex_of(self) -> list[int]:
        out = [-1] * self.h_count
        for v, block in enumerate(self.blocks):
            for h in block:
                out[h] = v
        return out

    def vertex_edges(self) -> list[tuple[int, int]]:
        """Each edge as the pair of vertex indices it joins."""
        vo = self.vertex_of()
        return [(vo[a], vo[b]) for a, b in self.edges()]

    def validate(self, mode: str = "graph") -> None:
        """Raise ``ValueError`` unless the triple is well formed.

        ``mode="graph"``: no leaves, every vertex at least 3-valent.
        ``mode="tree"``: leaves allowed, every vertex at least 3-valent.
        """
        h = self.h_count
        for a, b in enumerate(self.pairing):
            if not 0 <= b < h or self.pairing[b] != a:
                raise ValueError("pairing is not an involution")
        seen = sorted(x for block in self.blocks for x in block)
        if seen != list(range(h)):
            raise ValueError("blocks do not partition the half-edges")
        if any(len(block) < 3 for block in self.blocks):
            raise ValueError("a vertex has valence below 3")
        if mode == "graph" and self.leaves():
            raise ValueError("leafless graph has a fixed point in its pairing")
        if mode not in ("graph", "tree"):
            raise ValueError(f"unknown mode {mode!r}")

    def is_connected(self) -> bool:
        return connected(self)

    def is_acyclic(self) -> bool:
        return _is_forest(self.num_vertices, self.vertex_edges())


def _find(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def _components(k: int, vedges: Sequence[tuple[int, int]]) -> int:
    parent = list(range(k))
    comps = k
    for u, v in vedges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def _is_forest(k: int, vedges: Sequence[tuple[int, int]]) -> bool:
    parent = list(range(k))
    for u, v in vedges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def connected(g: HalfEdgeGraph) -> bool:
    """True iff the vertices form a single component (the empty graph counts
    as disconnected)."""
    if g.num_vertices == 0:
        return False
    return _components(g.num_vertices, g.vertex_edges()) == 1


def forests(g: HalfEdgeGraph) -> Iterator[tuple[int, ...]]:
    """Every acyclic subset of edges, as tuples of indices into ``g.edges()``."""
    vedges = g.vertex_edges()
    for r in range(len(vedges) + 1):
        for subset in itertools.combinations(range(len(vedges)), r):
            if _is_forest(g.num_vertices, [vedges[i] for i in subset]):
                yield subset


def signed_forest_sum(g: HalfEdgeGraph) -> int:
    """``sum_F (-1)^(e(F))`` over acyclic edge subsets F."""
    return sum((-1) ** len(f) for f in forests(g))


# ---------------------------------------------------------------------------
# Matchings and fat partitions
# ---------------------------------------------------------------------------


def _matchings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in _matchings(remaining):
            yield [(first, partner)] + tail


def enumerate_matchings(n: int, cap: int = MATCHING_CAP) -> Iterator[tuple]:
    """Every perfect matching of ``0..n-1`` as an involution tuple."""
    if n % 2:
        raise ValueError("a perfect matching needs an even number of points")
    _check_cap("n", n, cap, "pass a larger cap explicitly if you accept the runtime")
    for pairs in _matchings(list(range(n))):
        inv = [0] * n
        for a, b in pairs:
            inv[a], inv[b] = b, a
        yield tuple(inv)


def _partitions(items: list[int], min_block: int) -> Iterator[list[tuple[int, ...]]]:
    # block of the smallest element first, then recurse on the rest
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    n = len(items)
    for size in range(min_block, n + 1):
        if 0 < n - size < min_block:
            continue
        for others in itertools.combinations(rest, size - 1):
            chosen = set(others)
            remaining = [x for x in rest if x not in chosen]
            for tail in _partitions(remaining, min_block):
                yield [(first,) + others] + tail


def enumerate_fat_partitions(n: int, cap: int = PARTITION_CAP, min_block: int = 3) -> Iterator[tuple]:
    """Every partition of ``0..n-1`` into blocks of size at least ``min_block``."""
    _check_cap("n", n, cap, "pass a larger cap explicitly if you accept the runtime")
    for blocks in _partitions(list(range(n)), min_block):
        yield tuple(blocks)


def enumerate_set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions of ``items`` (no size restriction)."""
    items = list(items)
    if not items:
        yield []
        return
    first = items[0]
    for tail in enumerate_set_partitions(items[1:]):
        yield [[first]] + tail
        for i in range(len(tail)):
            yield tail[:i] + [[first] + tail[i]] + tail[i + 1:]


def partition_type_counts(n: int, k: int, cap: int = PARTITION_CAP) -> dict[tuple, int]:
    """Tally the fat partitions of an n-set into k blocks by sorted block sizes."""
    out: Counter = Counter()
    for p in enumerate_fat_partitions(n, cap):
        if len(p) == k:
            out[tuple(sorted(len(b) for b in p))] += 1
    return dict(out)


def _representative(sizes: Sequence[int]) -> tuple:
    blocks, start = [], 0
    for s in sizes:
        blocks.append(tuple(range(start, start + s)))
        start += s
    return tuple(blocks)


# ---------------------------------------------------------------------------
# Labeled graph census
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IsoClass:
    canonical: tuple
    orbit_size: int
    aut: int
    connected: bool

    @property
    def weight(self) -> Fraction:
        return Fraction(1, self.aut)


@dataclass
class CensusRow:
    m: int
    k: int
    labeled_count: int
    connected_count: int
    signed_count: int
    iso_classes: list | None = None

    def weight(self) -> Fraction:
        """``|LG(m,k)| / (2m)!``."""
        return Fraction(self.labeled_count, math.factorial(2 * self.m))

    def connected_weight(self) -> Fraction:
        return Fraction(self.connected_count, math.factorial(2 * self.m))


def _count_chunk(args) -> dict[int, tuple[int, int]]:
    partitions, matchings = args
    out: dict[int, list[int]] = defaultdict(lambda: [0, 0])
    for blocks in partitions:
        k = len(blocks)
        vo = [0] * sum(len(b) for b in blocks)
        for v, b in enumerate(blocks):
            for h in b:
                vo[h] = v
        tally = out[k]
        for inv in matchings:
            tally[0] += 1
            if k == 1:
                tally[1] += 1
                continue
            vedges = [(vo[a], vo[b]) for a, b in enumerate(inv) if a < b]
            if _components(k, vedges) == 1:
                tally[1] += 1
    return {k: tuple(v) for k, v in out.items()}


def _parallel_map(fn, jobs: list, threads: int) -> list:
    if threads <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, jobs))


def _chunks(seq: list, n: int) -> list[list]:
    n = max(1, n)
    size = max(1, -(-len(seq) // n))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def count_labeled_graphs(m: int, threads: int = 1, cap: int = MATCHING_CAP) -> list[CensusRow]:
    """Census of labeled admissible leafless graphs on ``2m`` half-edges.

    Runs through the full Cartesian product matchings x fat partitions; one
    row per vertex count k that occurs.  ``signed_count`` carries the sign
    ``(-1)^m`` of the edge count.
    """
    _check_cap("2m", 2 * m, cap, "raise the cap to enumerate larger graphs")
    matchings = list(enumerate_matchings(2 * m, cap))
    partitions = list(enumerate_fat_partitions(2 * m, cap))
    totals: dict[int, list[int]] = defaultdict(lambda: [0, 0])
    for part in _parallel_map(_count_chunk, [(c, matchings) for c in _chunks(partitions, 4 * threads)], threads):
        for k, (lab, con) in part.items():
            totals[k][0] += lab
            totals[k][1] += con
    sign = (-1) ** m
    return [CensusRow(m, k, lab, con, sign * lab) for k, (lab, con) in sorted(totals.items())]


def labeled_graph_counts(m: int, cap: int = MATCHING_CAP) -> dict[int, int]:
    """``|LG(m,k)|`` per k as (#matchings) x (#fat partitions with k blocks),
    each factor counted by enumeration."""
    _check_cap("2m", 2 * m, cap, "raise the cap to enumerate larger graphs")
    n_match = sum(1 for _ in enumerate_matchings(2 * m, cap))
    per_k = Counter(len(p) for p in enumerate_fat_partitions(2 * m, cap))
    return {k: n_match * c for k, c in sorted(per_k.items())}


# ---------------------------------------------------------------------------
# Isomorphism classes
# ---------------------------------------------------------------------------


def canonical_form(g: HalfEdgeGraph) -> tuple:
    """Lexicographically smallest (valences, edge-multiplicity table, leaf
    counts) over all vertex orderings that sort the valences.

    Half-edges at one vertex are interchangeable, so two half-edge graphs are
    isomorphic exactly when these multigraph data agree.
    """
    k = g.num_vertices
    sizes = [len(b) for b in g.blocks]
    mult = [[0] * k for _ in range(k)]
    for u, v in g.vertex_edges():
        a, b = min(u, v), max(u, v)
        mult[a][b] += 1
    lv = [0] * k
    vo = g.vertex_of()
    for h in g.leaves():
        lv[vo[h]] += 1
    best = None
    # refine by (valence, loops, leaves) before trying orderings
    order_key = [(sizes[v], mult[v][v], lv[v]) for v in range(k)]
    groups: dict = defaultdict(list)
    for v in range(k):
        groups[order_key[v]].append(v)
    keys = sorted(groups)
    for choice in itertools.product(*(itertools.permutations(groups[key]) for key in keys)):
        perm = [v for part in choice for v in part]
        table = tuple(
            mult[min(perm[i], perm[j])][max(perm[i], perm[j])] for i in range(k) for j in range(i, k)
        )
        cand = (tuple(order_key[v] for v in perm), table)
        if best is None or cand < best:
            best = cand
    return best if best is not None else ((), ())


def count_automorphisms(g: HalfEdgeGraph) -> int:
    """Count bijections of half-edges that commute with the pairing and map
    blocks onto blocks, by backtracking."""
    h = g.h_count
    vo = g.vertex_of()
    sizes = [len(b) for b in g.blocks]
    pairing = g.pairing
    phi = [-1] * h
    used = [False] * h
    vmap: dict[int, int] = {}
    vused: set[int] = set()

    def assign(a: int, b: int, undo: list) -> bool:
        if phi[a] != -1:
            return phi[a] == b
        if used[b]:
            return False
        va, vb = vo[a], vo[b]
        if va in vmap:
            if vmap[va] != vb:
                return False
        else:
            if vb in vused or sizes[va] != sizes[vb]:
                return False
            vmap[va] = vb
            vused.add(vb)
            undo.append(("v", va))
        phi[a], used[b] = b, True
        undo.append(("h", a))
        return True

    def rollback(undo: list):
        for kind, x in reversed(undo):
            if kind == "h":
                used[phi[x]] = False
                phi[x] = -1
            else:
                vused.discard(vmap.pop(x))

    def search(a: int) -> int:
        while a < h and phi[a] != -1:
            a += 1
        if a == h:
            return 1
        total = 0
        for b in range(h):
            if used[b] or (pairing[a] == a) != (pairing[b] == b):
                continue
            undo: list = []
            if assign(a, b, undo) and assign(pairing[a], pairing[b], undo):
                total += search(a + 1)
            rollback(undo)
        return total

    return search(0)


def iso_census(m: int, threads: int = 1, cap: int = ISO_EDGE_CAP) -> list[CensusRow]:
    """Group all labeled graphs with m edges into isomorphism classes.

    For each class the orbit size is counted directly and ``|Aut|`` is both
    ``(2m)!/orbit`` and an independent backtracking count; a mismatch raises.
    """
    _check_cap("m", m, cap, "orbit computation grows like (2m)!")
    rows = {r.k: r for r in count_labeled_graphs(m, threads)}
    orbits: dict[int, Counter] = defaultdict(Counter)
    reps: dict[tuple, HalfEdgeGraph] = {}
    for blocks in enumerate_fat_partitions(2 * m):
        for inv in enumerate_matchings(2 * m):
            g = HalfEdgeGraph(inv, blocks)
            key = canonical_form(g)
            orbits[len(blocks)][key] += 1
            reps.setdefault(key, g)
    total = math.factorial(2 * m)
    for k, counter in orbits.items():
        classes = []
        for key, orbit in sorted(counter.items()):
            if total % orbit:
                raise ArithmeticError(f"orbit size {orbit} does not divide {total}")
            aut = total // orbit
            direct = count_automorphisms(reps[key])
            if direct != aut:
                raise ArithmeticError(f"class {key}: orbit gives |Aut|={aut}, backtracking gives {direct}")
            classes.append(IsoClass(key, orbit, aut, connected(reps[key])))
        rows[k].iso_classes = classes
        if sum(c.orbit_size for c in classes) != rows[k].labeled_count:
            raise ArithmeticError(f"orbit sizes do not add up to |LG({m},{k})|")
    return [rows[k] for k in sorted(rows)]


# ---------------------------------------------------------------------------
# Weighted sums checked against the generating functions
# ---------------------------------------------------------------------------


def signed_graph_sum(n: int, cap: int = MATCHING_CAP) -> Fraction:
    """``sum_{m-k=n} (-1)^m |LG(m,k)| / (2m)!`` over all (possibly
    disconnected) graphs with ``-χ = n``; needs ``2m <= 6n``."""
    total = Fraction(0)
    for m in range(n, 3 * n + 1):
        counts = labeled_graph_counts(m, cap) if m > 0 else {0: 1}
        total += Fraction((-1) ** m * counts.get(m - n, 0), math.factorial(2 * m))
    return total


def verify_exponential_formula(max_edges: int, threads: int = 1) -> bool:
    """All graphs = exp(connected graphs), as bivariate series in
    (edges, vertices) with weights ``1/(2m)!``, through ``max_edges``."""
    lam_cap = max_edges
    zero = TruncatedSeries.zero(lam_cap, "λ")
    full = [TruncatedSeries.one(lam_cap, "λ")] + [zero] * max_edges
    conn = [zero] * (max_edges + 1)
    for m in range(1, max_edges + 1):
        for row in count_labeled_graphs(m, threads):
            full[m] = full[m] + TruncatedSeries.monomial(row.weight(), row.k, lam_cap, "λ")
            conn[m] = conn[m] + TruncatedSeries.monomial(row.connected_weight(), row.k, lam_cap, "λ")
    lhs = TruncatedSeries(full, max_edges, "u")
    rhs = exp_series(TruncatedSeries(conn, max_edges, "u"))
    return lhs == rhs


def _pair_chunk(args) -> Fraction:
    m, blocks, matchings = args
    k = len(blocks)
    vo = [0] * (2 * m)
    for v, b in enumerate(blocks):
        for h in b:
            vo[h] = v
    total = 0
    for inv in matchings:
        vedges = [(vo[a], vo[b]) for a, b in enumerate(inv) if a < b]
        if _components(k, vedges) != 1:
            continue
        for r in range(len(vedges) + 1):
            s = 0
            for subset in itertools.combinations(vedges, r):
                if _is_forest(k, subset):
                    s += 1
            total += (-1) ** r * s
    return total


def pair_sum(n: int, threads: int = 1, cap: int = PAIR_RANK_CAP, full_product: bool = False) -> Fraction:
    """``sum (-1)^(e(F)) / (2M)!`` over fully labeled connected admissible
    graphs G with ``-χ(G) = n`` and acyclic edge subsets F of G.

    Every fat partition of a given block-size type is a relabeling of one
    representative, and relabeling preserves connectivity and forests, so by
    default each type is enumerated once (against all matchings) and
    multiplied by the number of partitions of that type.
    ``full_product=True`` walks every partition instead.
    """
    _check_cap("n", n, cap, "graphs with -χ = n have up to 3n edges")
    if n < 1:
        raise ValueError("n must be positive")
    result = Fraction(0)
    for m in range(n + 1, 3 * n + 1):
        k = m - n
        matchings = list(enumerate_matchings(2 * m))
        if full_product:
            parts = [p for p in enumerate_fat_partitions(2 * m) if len(p) == k]
            jobs = [(m, p, matchings) for p in parts]
            weights = [1] * len(parts)
        else:
            types = partition_type_counts(2 * m, k)
            jobs = [(m, _representative(sizes), matchings) for sizes in sorted(types)]
            weights = [types[sizes] for sizes in sorted(types)]
        sums = _parallel_map(_pair_chunk, jobs, threads)
        labeled = sum(w * s for w, s in zip(weights, sums))
        result += Fraction(labeled, math.factorial(2 * m))
    return result


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------


def _planted(leaves: tuple) -> Iterator:
    # a planted tree on a leaf set: a leaf, or a tuple of >= 2 planted subtrees
    if len(leaves) == 1:
        yield leaves[0]
        return
    for part in enumerate_set_partitions(leaves):
        if len(part) < 2:
            continue
        for children in itertools.product(*(list(_planted(tuple(b))) for b in part)):
            yield children


def _planted_to_graph(tree, root_label: int, n_labels: int) -> HalfEdgeGraph:
    pairing: dict[int, int] = {}
    blocks: list[tuple] = []
    next_id = [n_labels]

    def build(node, up: int):
        block = [up]
        for child in node:
            if isinstance(child, int):
                block.append(child)
                pairing[child] = child
            else:
                a, b = next_id[0], next_id[0] + 1
                next_id[0] += 2
                block.append(a)
                pairing[a], pairing[b] = b, a
                build(child, b)
        blocks.append(tuple(sorted(block)))

    pairing[root_label] = root_label
    build(tree, root_label)
    return HalfEdgeGraph(tuple(pairing[h] for h in range(next_id[0])), tuple(sorted(blocks)))


def enumerate_trees(n: int, rooted: bool = False) -> Iterator[HalfEdgeGraph]:
    """Leaf-labeled admissible trees as half-edge graphs.

    Leaves are the fixed points ``0..n-1``.  A rooted tree carries its root
    as one more fixed point with label ``n``; unrooted trees are hung from
    leaf ``n-1`` while generating, which picks each tree exactly once.  The
    rooted tree consisting of a root and a single leaf has no vertex and is
    not produced here.
    """
    if rooted:
        if n < 2:
            return
        for t in _planted(tuple(range(n))):
            yield _planted_to_graph(t, n, n + 1)
    else:
        if n < 3:
            return
        for t in _planted(tuple(range(n - 1))):
            yield _planted_to_graph(t, n - 1, n)


def tree_census(n: int, rooted: bool, cap: int = TREE_LEAF_CAP) -> int:
    """``sum (-1)^v`` over leaf-labeled admissible trees with n leaves.

    Every generated tree is re-validated with the graph machinery
    (valences, connectivity, acyclicity, leaf labels) before it is counted.
    """
    _check_cap("n", n, cap, "the number of trees grows super-exponentially")
    if n < 1:
        raise ValueError("n must be positive")
    if rooted and n == 1:
        return 1  # root plus one leaf, no internal vertex
    labels = n + 1 if rooted else n
    total = 0
    for g in enumerate_trees(n, rooted):
        g.validate("tree")
        if not (connected(g) and g.is_acyclic()) or sorted(g.leaves()) != list(range(labels)):
            raise ArithmeticError(f"generator produced a non-tree {g}")
        total += (-1) ** g.num_vertices
    return total


def tree_census_halfedge(n: int, cap: int = 6) -> int:
    """Unrooted signed tree count by brute force over half-edge structures.

    For k internal vertices there are ``h = n + 2(k-1)`` half-edges.  All
    involutions with exactly n fixed points are tried against one
    representative fat partition per block-size type; the labeled total is
    converted to leaf-labeled trees by ``n!/h!`` (a tree automorphism that
    fixes every leaf is trivial).
    """
    _check_cap("n", n, cap, "the half-edge search is exponential in n")
    total = Fraction(0)
    for k in range(1, n - 1):
        h = n + 2 * (k - 1)
        types = partition_type_counts(h, k, cap=max(h, PARTITION_CAP))
        labeled = 0
        for sizes, count in types.items():
            blocks = _representative(sizes)
            vo = [0] * h
            for v, b in enumerate(blocks):
                for x in b:
                    vo[x] = v
            good = 0
            for fixed in itertools.combinations(range(h), n):
                fixed_set = set(fixed)
                rest = [x for x in range(h) if x not in fixed_set]
                for pairs in _matchings(rest):
                    vedges = [(vo[a], vo[b]) for a, b in pairs]
                    if _components(k, vedges) == 1 and _is_forest(k, vedges):
                        good += 1
            labeled += count * good
        total += (-1) ** k * Fraction(labeled * math.factorial(n), math.factorial(h))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral leaf-labeled count {total}")
    return int(total)


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------

CSV_COLUMNS = ("m", "k", "labeled_count", "connected_count", "signed_count")


def census_to_csv(rows: Sequence[CensusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([str(getattr(r, c)) for c in CSV_COLUMNS])
    return buf.getvalue()


def census_to_json(rows: Sequence[CensusRow]) -> str:
    out = []
    for r in rows:
        item = {c: str(getattr(r, c)) for c in CSV_COLUMNS}
        item["weight"] = format_rational(r.weight())
        if r.iso_classes is not None:
            item["iso_classes"] = [
                {
                    "canonical": json.loads(json.dumps(c.canonical)),
                    "orbit_size": str(c.orbit_size),
                    "aut": str(c.aut),
                    "weight": format_rational(c.weight),
                    "connected": c.connected,
                }
                for c in r.iso_classes
            ]
        out.append(item)
    return json.dumps({"rows": out}, ensure_ascii=False, indent=2)
