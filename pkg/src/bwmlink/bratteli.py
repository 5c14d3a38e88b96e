"""Young diagrams, the tangle-algebra Bratteli diagram and trace weights.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the empty diagram.  Level k of the generic Bratteli diagram
holds all partitions of k, k-2, k-4, ...; edges join shapes differing by a
single box, and path counts satisfy the obvious sum recurrence from the
empty shape at level 0.

Each shape carries a trace weight, a rational function in r and s built
box by box: a diagonal box (j,j) contributes

    (r s^(row-col) - r^-1 s^(col-row) + s^(row+col-2j+1) - s^(-row-col+2j-1))
    / (s^h - s^-h)

with h the hook length, and an off-diagonal box (i,j) contributes
(r s^d - r^-1 s^-d) / (s^h - s^-h) with d the axial statistic below.  The
weight of the empty shape is 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .laurent import (DELTA, X_NUM, LaurentPoly2, RationalFn2, Specialization,
                      r_pow, s_pow, specialize)

Shape = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions


def is_shape(rows) -> bool:
    return all(isinstance(r, int) and r > 0 for r in rows) and all(
        rows[i] >= rows[i + 1] for i in range(len(rows) - 1))


def shape_size(shape: Shape) -> int:
    return sum(shape)


def conjugate(shape: Shape) -> Shape:
    """Transpose: column lengths read left to right."""
    if not shape:
        return ()
    return tuple(sum(1 for r in shape if r > j) for j in range(shape[0]))


def boxes(shape: Shape):
    """All (row, col) box coordinates, 1-indexed."""
    for i, row in enumerate(shape, start=1):
        for j in range(1, row + 1):
            yield i, j


@lru_cache(maxsize=None)
def young_level(f: int) -> tuple[Shape, ...]:
    """All partitions of f, lexicographically sorted."""
    if f < 0:
        raise ValueError("negative level")
    out: set[Shape] = set()

    def grow(remaining: int, maximum: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.add(prefix)
            return
        for part in range(min(remaining, maximum), 0, -1):
            grow(remaining - part, part, prefix + (part,))

    grow(f, f if f else 1, ())
    if f == 0:
        out = {()}
    return tuple(sorted(out))


def bmw_level(f: int) -> tuple[Shape, ...]:
    """Partitions of f, f-2, f-4, ..., lexicographically sorted."""
    if f < 0:
        raise ValueError("negative level")
    out: list[Shape] = []
    for size in range(f, -1, -2):
        out.extend(young_level(size))
    return tuple(sorted(out))


def differ_by_one_box(a: Shape, b: Shape) -> bool:
    if abs(shape_size(a) - shape_size(b)) != 1:
        return False
    small, big = (a, b) if shape_size(a) < shape_size(b) else (b, a)
    padded = small + (0,) * (len(big) - len(small))
    if len(padded) != len(big):
        return False
    diffs = [bi - si for bi, si in zip(big, padded)]
    return diffs.count(0) == len(diffs) - 1 and diffs.count(1) == 1


# ---------------------------------------------------------------------------
# box statistics and trace weights


def hook_length(shape: Shape, i: int, j: int) -> int:
    """Arm + leg + 1 of the 1-indexed box (i, j)."""
    if not (1 <= i <= len(shape) and 1 <= j <= shape[i - 1]):
        raise ValueError(f"box ({i}, {j}) outside shape {list(shape)}")
    conj = conjugate(shape)
    return shape[i - 1] - i + conj[j - 1] - j + 1


def d_stat(shape: Shape, i: int, j: int) -> int:
    """Axial statistic of the box (i, j): row_i + row_j - i - j + 1 above the
    diagonal, -(col_i + col_j) + i + j - 1 below it."""
    if not (1 <= i <= len(shape) and 1 <= j <= shape[i - 1]):
        raise ValueError(f"box ({i}, {j}) outside shape {list(shape)}")
    if i <= j:
        row_i = shape[i - 1]
        row_j = shape[j - 1] if j <= len(shape) else 0
        return row_i + row_j - i - j + 1
    conj = conjugate(shape)
    col_i = conj[i - 1] if i <= len(conj) else 0
    col_j = conj[j - 1]
    return -col_i - col_j + i + j - 1


def trace_weight(shape: Shape) -> RationalFn2:
    """The product-formula weight of a shape (1 for the empty shape).

    Assembled as one quotient: numerator and denominator are the products
    of the per-box factors, with no reduction beyond integer content.
    """
    num = LaurentPoly2.const(1)
    den = LaurentPoly2.const(1)
    conj = conjugate(shape)
    for i, j in boxes(shape):
        h = hook_length(shape, i, j)
        if i == j:
            row, col = shape[i - 1], conj[j - 1]
            num = num * LaurentPoly2({
                (1, row - col): 1,
                (-1, col - row): -1,
                (0, row + col - 2 * j + 1): 1,
                (0, -row - col + 2 * j - 1): -1,
            })
        else:
            d = d_stat(shape, i, j)
            num = num * (r_pow(1) * s_pow(d) - r_pow(-1) * s_pow(-d))
        den = den * (s_pow(h) - s_pow(-h))
    return RationalFn2(num, den)


def matrix_unit_trace(shape: Shape, f: int) -> RationalFn2:
    """Trace of a diagonal matrix unit at level f: weight(shape) / x^f."""
    if shape not in bmw_level(f):
        raise ValueError(f"shape {list(shape)} is not on level {f}")
    w = trace_weight(shape)
    return RationalFn2(w.num * DELTA**f, w.den * X_NUM**f)


# ---------------------------------------------------------------------------
# Bratteli graphs


@dataclass(frozen=True)
class BratteliGraph:
    """Leveled graph of shapes with one-box edges and path counts."""

    levels: tuple[tuple[Shape, ...], ...]
    edges: tuple[tuple[tuple[Shape, Shape], ...], ...]  # per gap, (lower, upper)
    path_counts: tuple[dict[Shape, int], ...]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def path_count(self, shape: Shape, level: int) -> int:
        return self.path_counts[level][shape]


def _build_graph(depth: int, keep=None) -> BratteliGraph:
    levels: list[tuple[Shape, ...]] = []
    for k in range(depth + 1):
        shapes = bmw_level(k)
        if keep is not None:
            shapes = tuple(s for s in shapes if keep(s))
        levels.append(shapes)
    edges: list[tuple[tuple[Shape, Shape], ...]] = []
    counts: list[dict[Shape, int]] = [{(): 1}]
    for k in range(depth):
        gap = tuple((lo, hi) for lo in levels[k] for hi in levels[k + 1]
                    if differ_by_one_box(lo, hi))
        edges.append(gap)
        level_counts: dict[Shape, int] = {s: 0 for s in levels[k + 1]}
        for lo, hi in gap:
            level_counts[hi] += counts[k][lo]
        counts.append(level_counts)
    return BratteliGraph(tuple(levels), tuple(edges), tuple(counts))


def generic_bratteli(depth: int) -> BratteliGraph:
    return _build_graph(depth)


def truncation_rule(shape: Shape, n: int) -> bool:
    """Survival criterion: first two column lengths sum to at most 2n + 1."""
    conj = conjugate(shape)
    first = conj[0] if conj else 0
    second = conj[1] if len(conj) > 1 else 0
    return first + second <= 2 * n + 1


def specialized_weight_nonzero(shape: Shape, spec: Specialization) -> bool:
    """Whether the specialized trace weight is nonzero (the numerator does
    not specialize to the zero polynomial in q)."""
    w = trace_weight(shape)
    num = specialize(w.num, spec)
    den = specialize(w.den, spec)
    assert not den.is_zero, "specialized weight denominator vanished"
    return not num.is_zero


def _one_box_smaller(shape: Shape) -> list[Shape]:
    out = []
    for i in range(len(shape)):
        nxt = shape[i + 1] if i + 1 < len(shape) else 0
        if shape[i] - 1 >= nxt:
            rows = list(shape)
            rows[i] -= 1
            if rows[-1] == 0:
                rows.pop()
            out.append(tuple(rows))
    return out


@lru_cache(maxsize=None)
def survives_truncation(shape: Shape, spec: Specialization) -> bool:
    """Membership in the truncated shape lattice, built inductively from the
    empty shape: a shape survives when its specialized weight is nonzero and
    some one-box-smaller shape already survives.

    Bare nonvanishing is not enough: shapes can have nonzero specialized
    weight while every chain down to the empty shape passes through a
    vanishing one, and those are cut.
    """
    if not shape:
        return True
    if not specialized_weight_nonzero(shape, spec):
        return False
    return any(survives_truncation(sub, spec) for sub in _one_box_smaller(shape))


def truncated_bratteli(spec: Specialization, depth: int) -> BratteliGraph:
    """Induced subgraph on the surviving shapes, path counts recomputed."""
    return _build_graph(depth, keep=lambda s: truncation_rule(s, spec.n))


def sum_rule_check(f: int) -> bool:
    """Exact identity: the path-count-weighted sum of level-f trace weights
    equals x^f."""
    graph = generic_bratteli(f)
    total = RationalFn2.from_poly(0)
    for shape in graph.levels[f]:
        total = total + trace_weight(shape) * graph.path_count(shape, f)
    return total == RationalFn2(X_NUM**f, DELTA**f)


def path_pair_count(f: int) -> int:
    """Number of pairs of equal-shape paths of length f: the sum of squared
    path counts on level f."""
    graph = generic_bratteli(f)
    return sum(n * n for n in graph.path_counts[f].values())


PATH_ENUMERATION_CAP = 6  # (2f-1)!! growth; counting stays cheap, listing not


def enumerate_paths(graph: BratteliGraph, shape: Shape,
                    level: int) -> tuple[tuple[Shape, ...], ...]:
    """All paths from the empty shape at level 0 to ``shape`` at ``level``,
    as shape sequences.  Capped at PATH_ENUMERATION_CAP levels."""
    if level > PATH_ENUMERATION_CAP:
        raise ValueError(
            f"path enumeration capped at level {PATH_ENUMERATION_CAP}")
    if shape not in graph.levels[level]:
        raise ValueError(f"shape {list(shape)} is not on level {level}")
    table: dict[Shape, list[tuple[Shape, ...]]] = {(): [((),)]}
    for k in range(level):
        below = table
        table = {s: [] for s in graph.levels[k + 1]}
        for lo, hi in graph.edges[k]:
            for path in below.get(lo, ()):
                table[hi].append(path + (hi,))
    return tuple(sorted(table[shape]))


def specialized_weights_equal(shape: Shape, n: int) -> bool:
    """Whether the two specializations r -> -q^(2n), s -> q and
    r -> q^(2n), s -> -q give the same weight, by cross-multiplication."""
    w = trace_weight(shape)
    u = QPair(specialize(w.num, Specialization.osp(n)),
              specialize(w.den, Specialization.osp(n)))
    v = QPair(specialize(w.num, Specialization.so(n)),
              specialize(w.den, Specialization.so(n)))
    return (u.num * v.den - v.num * u.den).is_zero


class QPair:
    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num, self.den = num, den


# ---------------------------------------------------------------------------
# sign bookkeeping behind the weight symmetry


def offdiag_sign(shape: Shape) -> int:
    """(-1) to the number of off-diagonal boxes."""
    count = sum(1 for i, j in boxes(shape) if i != j)
    return -1 if count % 2 else 1


def split_sign(shape: Shape) -> int:
    """Product over boxes above the diagonal of (-1)^(col_j + row_j) and
    below the diagonal of (-1)^(row_i + col_i), by direct enumeration."""
    conj = conjugate(shape)

    def row(k: int) -> int:
        return shape[k - 1] if k <= len(shape) else 0

    def col(k: int) -> int:
        return conj[k - 1] if k <= len(conj) else 0

    sign = 1
    for i, j in boxes(shape):
        if i < j:
            if (col(j) + row(j)) % 2:
                sign = -sign
        elif i > j:
            if (row(i) + col(i)) % 2:
                sign = -sign
    return sign


def border_boxes(shape: Shape, k: int) -> tuple[list, list]:
    """The horizontal and vertical box sets of index k: boxes (k, j) with
    j <= min(k-1, row_k) and boxes (i, k) with i <= min(k-1, col_k)."""
    conj = conjugate(shape)
    row_k = shape[k - 1] if k <= len(shape) else 0
    col_k = conj[k - 1] if k <= len(conj) else 0
    hor = [(k, j) for j in range(1, min(k - 1, row_k) + 1)]
    ver = [(i, k) for i in range(1, min(k - 1, col_k) + 1)]
    return hor, ver


def border_sign_identity(shape: Shape, k: int) -> bool:
    """Local sign identity at index k: (-1)^(|hor| + |ver|) equals the
    product over those boxes of (-1)^(row_k + col_k)."""
    conj = conjugate(shape)
    row_k = shape[k - 1] if k <= len(shape) else 0
    col_k = conj[k - 1] if k <= len(conj) else 0
    hor, ver = border_boxes(shape, k)
    lhs = -1 if (len(hor) + len(ver)) % 2 else 1
    rhs = 1
    for _ in ver:
        if (col_k + row_k) % 2:
            rhs = -rhs
    for _ in hor:
        if (row_k + col_k) % 2:
            rhs = -rhs
    return lhs == rhs


def sign_identity_check(shape: Shape) -> bool:
    """Global sign identity plus every local one, all by brute-force box
    enumeration."""
    top = max(len(shape), shape[0] if shape else 0)
    locals_hold = all(border_sign_identity(shape, k) for k in range(1, top + 1))
    return locals_hold and offdiag_sign(shape) == split_sign(shape)


# ---------------------------------------------------------------------------
# rendering


def shape_label(shape: Shape) -> str:
    return "[" + ",".join(str(r) for r in shape) + "]"


def bratteli_dot(graph: BratteliGraph, title: str = "bratteli") -> str:
    """Deterministic DOT rendering: one rank per level, the empty shape as a
    circle, all other shapes as boxed partition labels."""
    lines = [f'graph "{title}" {{', "  rankdir=TB;",
             '  node [shape=box, fontname="monospace"];']
    index: dict[tuple[int, Shape], str] = {}
    for k, level in enumerate(graph.levels):
        names = []
        for idx, shape in enumerate(level):
            name = f"v{k}_{idx}"
            index[(k, shape)] = name
            if shape:
                lines.append(f'  {name} [label="{shape_label(shape)}"];')
            else:
                lines.append(f'  {name} [label="", shape=circle];')
            names.append(name)
        lines.append("  { rank=same; " + "; ".join(names) + "; }")
    for k, gap in enumerate(graph.edges):
        for lo, hi in sorted(gap):
            lines.append(f"  {index[(k, lo)]} -- {index[(k + 1, hi)]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bratteli_json(graph: BratteliGraph, kind: str) -> str:
    doc = {
        "schema": 1,
        "kind": kind,
        "depth": graph.depth,
        "levels": [
            {
                "level": k,
                "vertices": [
                    {"shape": list(shape), "paths": graph.path_count(shape, k)}
                    for shape in level
                ],
            }
            for k, level in enumerate(graph.levels)
        ],
        "edges": [
            {"level": k,
             "pairs": [[list(lo), list(hi)] for lo, hi in sorted(gap)]}
            for k, gap in enumerate(graph.edges)
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
