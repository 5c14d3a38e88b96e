"""Closed 4-valent planar diagrams of braid closures and their local moves.

A diagram is a set of crossings plus a perfect matching (the arcs) on their
half-edges, together with a count of crossing-free closed loops.  Each
crossing stores four half-edge ids in counterclockwise cyclic order
(bottom-left, bottom-right, top-right, top-left as created inside a braid)
and an ``over`` bit naming the over-diagonal:

* ``over == 1``: the diagonal through slots 1 and 3 is over (the positive
  braid letter),
* ``over == 0``: the diagonal through slots 0 and 2 is over (the inverse).

The slot order fixes the two smoothings once and for all: the parallel
smoothing joins slots (0,3) and (1,2), the cap smoothing joins (0,1) and
(2,3).  Geometric crossing signs and curl signs are derived from the same
slot order, so every convention lives in this one module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Crossing(NamedTuple):
    slots: tuple[int, int, int, int]  # half-edge ids, counterclockwise
    over: int  # 1: diagonal {1,3} over; 0: diagonal {0,2} over


PAR_PAIRS = ((0, 3), (1, 2))
CAP_PAIRS = ((0, 1), (2, 3))


class Traversal(NamedTuple):
    """Strand walk of a diagram from deterministic base points."""

    components: tuple[tuple[tuple[int, int], ...], ...]  # (crossing, entry slot)
    switch_candidate: int | None  # first crossing met on its under-strand
    writhe: int  # sum of geometric crossing signs


@dataclass(frozen=True)
class PlanarDiagram:
    """Immutable closed diagram: crossings, arcs and free loops.

    ``arcs`` maps each half-edge to its partner (a symmetric involution
    without fixed points).
    """

    crossings: dict[int, Crossing]
    arcs: dict[int, int]
    free_loops: int = 0

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def build(crossings: dict[int, Crossing],
              arc_pairs: Iterable[tuple[int, int]],
              free_loops: int = 0) -> PlanarDiagram:
        arcs: dict[int, int] = {}
        for a, b in arc_pairs:
            arcs[a] = b
            arcs[b] = a
        return PlanarDiagram(dict(crossings), arcs, free_loops)

    def validate(self) -> None:
        """Check the half-edge bookkeeping; raises on inconsistency."""
        seen: set[int] = set()
        for cid, c in self.crossings.items():
            for h in c.slots:
                if h in seen:
                    raise ValueError(f"half-edge {h} in two crossing slots")
                seen.add(h)
            if c.over not in (0, 1):
                raise ValueError(f"crossing {cid} has bad over bit")
        if set(self.arcs) != seen:
            raise ValueError("arc endpoints do not match crossing slots")
        for a, b in self.arcs.items():
            if a == b or self.arcs[b] != a:
                raise ValueError("arcs are not a fixed-point-free involution")
        if self.free_loops < 0:
            raise ValueError("negative free loop count")
        if not self.crossings and self.free_loops < 1:
            raise ValueError("empty diagram")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def _slot_map(self) -> dict[int, tuple[int, int]]:
        out = {}
        for cid, c in self.crossings.items():
            for i, h in enumerate(c.slots):
                out[h] = (cid, i)
        return out

    # -- strand traversal ------------------------------------------------------

    def traverse(self) -> Traversal:
        """Walk every closed strand, starting each component at its smallest
        half-edge id; derive the switch candidate and the geometric writhe.

        A crossing is descending-compatible when its first passage (in the
        global walk order) runs along the over-diagonal; the first crossing
        violating this is the switch candidate.  The geometric sign of a
        crossing is +1 exactly when the over-strand enters one slot
        counterclockwise from the under-strand's entry.
        """
        slot_of = self._slot_map()
        visited: set[int] = set()
        components: list[tuple[tuple[int, int], ...]] = []
        entries: dict[int, list[int]] = {cid: [] for cid in self.crossings}
        switch: int | None = None
        for h0 in sorted(self.arcs):
            if h0 in visited:
                continue
            comp: list[tuple[int, int]] = []
            h = h0
            while True:
                visited.add(h)
                h2 = self.arcs[h]
                visited.add(h2)
                cid, slot = slot_of[h2]
                comp.append((cid, slot))
                first = not entries[cid]
                entries[cid].append(slot)
                if first and switch is None and slot % 2 != self.crossings[cid].over:
                    switch = cid
                h = self.crossings[cid].slots[(slot + 2) % 4]
                if h == h0:
                    break
            components.append(tuple(comp))
        writhe = 0
        for cid, ent in entries.items():
            e1, e2 = ent
            over = self.crossings[cid].over
            over_entry, under_entry = (e1, e2) if e1 % 2 == over else (e2, e1)
            writhe += 1 if (over_entry - under_entry) % 4 == 1 else -1
        return Traversal(tuple(components), switch, writhe)

    # -- local moves -----------------------------------------------------------

    def with_switched(self, cid: int) -> PlanarDiagram:
        """Flip the over-diagonal of one crossing."""
        c = self.crossings[cid]
        crossings = dict(self.crossings)
        crossings[cid] = Crossing(c.slots, 1 - c.over)
        return PlanarDiagram(crossings, self.arcs, self.free_loops)

    def _contract(self, join: dict[int, int], removed: set[int]) -> PlanarDiagram:
        """Delete the crossings in ``removed``, wiring their half-edges
        through the matching ``join``; arcs are spliced along the resulting
        chains and closed chains become free loops."""
        inner = set(join)
        new_arcs = {a: b for a, b in self.arcs.items()
                    if a not in inner and b not in inner}
        loops = 0
        done: set[int] = set()
        for h in sorted(inner):
            if h in done:
                continue

            # walk from h alternating join/arc hops until leaving the cluster
            def walk(start: int):
                cur, hop_join = start, True
                while True:
                    cur = join[cur] if hop_join else self.arcs[cur]
                    if not hop_join and cur not in inner:
                        return cur  # outside endpoint
                    done.add(cur)
                    if not hop_join and cur == start:
                        return None  # closed up inside the cluster
                    hop_join = not hop_join

            done.add(h)
            end1 = walk(h)
            if end1 is None:
                loops += 1
                continue
            # walk the other way: first hop along h's arc
            cur = self.arcs[h]
            while cur in inner:
                done.add(cur)
                cur = join[cur]
                done.add(cur)
                cur = self.arcs[cur]
            end2 = cur
            new_arcs[end1] = end2
            new_arcs[end2] = end1
        crossings = {cid: c for cid, c in self.crossings.items()
                     if cid not in removed}
        return PlanarDiagram(crossings, new_arcs, self.free_loops + loops)

    def _smoothed(self, cid: int, pairs) -> PlanarDiagram:
        """Delete a crossing, joining its slots per ``pairs``."""
        c = self.crossings[cid]
        join = {}
        for i, j in pairs:
            join[c.slots[i]] = c.slots[j]
            join[c.slots[j]] = c.slots[i]
        return self._contract(join, {cid})

    def resolve(self, cid: int) -> tuple[PlanarDiagram, PlanarDiagram, PlanarDiagram]:
        """Return (switched, parallel smoothing, cap smoothing) at a crossing."""
        if cid not in self.crossings:
            raise KeyError(f"crossing {cid} not in diagram")
        return (self.with_switched(cid),
                self._smoothed(cid, PAR_PAIRS),
                self._smoothed(cid, CAP_PAIRS))

    def remove_curls(self) -> tuple[PlanarDiagram, int]:
        """Delete every kink whose loop arc joins two adjacent slots of one
        crossing; return the new diagram and the signed kink count.

        A kink with loop arc on slots (a, a+1) has sign +1 exactly when slot
        a lies on the over-diagonal.
        """
        diagram = self
        total = 0
        while True:
            found = None
            for cid in sorted(diagram.crossings):
                slots = diagram.crossings[cid].slots
                for a in range(4):
                    if diagram.arcs.get(slots[a]) == slots[(a + 1) % 4]:
                        found = (cid, a)
                        break
                if found:
                    break
            if not found:
                return diagram, total
            cid, a = found
            c = diagram.crossings[cid]
            total += 1 if a % 2 == c.over else -1
            b1, b2 = c.slots[(a + 2) % 4], c.slots[(a + 3) % 4]
            p1, p2 = diagram.arcs[b1], diagram.arcs[b2]
            inner = set(c.slots)
            new_arcs = {x: y for x, y in diagram.arcs.items()
                        if x not in inner and y not in inner}
            loops = diagram.free_loops
            if p1 == b2:
                loops += 1
            else:
                new_arcs[p1] = p2
                new_arcs[p2] = p1
            crossings = dict(diagram.crossings)
            del crossings[cid]
            diagram = PlanarDiagram(crossings, new_arcs, loops)

    def remove_poke(self) -> PlanarDiagram | None:
        """Undo one poke (two distinct crossings joined by two arcs on
        adjacent slot pairs, the same strand over at both), or None.

        The pattern: arcs (c.a, d.b) and (c.a+1, d.b-1); the strand running
        through slot a of c and slot b of d must be the over strand at both
        crossings or the under strand at both.  Splicing such a pair never
        changes the diagram value; it is disabled by default in the engine
        and guarded by equivalence tests.
        """
        slot_of = self._slot_map()
        links: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for h, h2 in self.arcs.items():
            if h >= h2:
                continue
            c1, s1 = slot_of[h]
            c2, s2 = slot_of[h2]
            if c1 == c2:
                continue
            if c1 > c2:
                c1, s1, c2, s2 = c2, s2, c1, s1
            links.setdefault((c1, c2), []).append((s1, s2))
        for (ca, cb), pairs in sorted(links.items()):
            if len(pairs) < 2:
                continue
            for idx1 in range(len(pairs)):
                for idx2 in range(idx1 + 1, len(pairs)):
                    (u, v), (u2, v2) = pairs[idx1], pairs[idx2]
                    if (u2 - u) % 4 == 1 and (v - v2) % 4 == 1:
                        a_slot, b_slot = u, v
                    elif (u - u2) % 4 == 1 and (v2 - v) % 4 == 1:
                        a_slot, b_slot = u2, v2
                    else:
                        continue
                    over_a = a_slot % 2 == self.crossings[ca].over
                    over_b = b_slot % 2 == self.crossings[cb].over
                    if over_a != over_b:
                        continue
                    join = {}
                    for cid in (ca, cb):
                        slots = self.crossings[cid].slots
                        for k in range(4):
                            join[slots[k]] = slots[(k + 2) % 4]
                    return self._contract(join, {ca, cb})
        return None

    # -- decomposition ---------------------------------------------------------

    def connected_parts(self) -> list[PlanarDiagram]:
        """Split the crossing graph along arcs into connected sub-diagrams.

        Free loops stay with the caller: every part is returned with
        free_loops = 0.
        """
        if not self.crossings:
            return []
        slot_of = self._slot_map()
        remaining = set(self.crossings)
        parts: list[PlanarDiagram] = []
        while remaining:
            seed = min(remaining)
            group = {seed}
            frontier = [seed]
            while frontier:
                cid = frontier.pop()
                for h in self.crossings[cid].slots:
                    nid = slot_of[self.arcs[h]][0]
                    if nid not in group:
                        group.add(nid)
                        frontier.append(nid)
            remaining -= group
            crossings = {cid: self.crossings[cid] for cid in sorted(group)}
            hes = {h for cid in group for h in self.crossings[cid].slots}
            arcs = {a: b for a, b in self.arcs.items() if a in hes}
            parts.append(PlanarDiagram(crossings, arcs, 0))
        return parts

    # -- canonical form --------------------------------------------------------

    def _encode_from(self, h0: int, slot_of) -> bytes:
        """Relabel half-edges in walk order starting at h0 and serialize.

        Only valid for connected diagrams; the walk continues through
        further strands via the first relabeled crossing that still has
        unvisited slots.
        """
        label: dict[int, int] = {}
        order: list[int] = []  # crossing ids in first-touch order

        def tag(h: int) -> None:
            if h not in label:
                label[h] = len(label)

        start = h0
        while start is not None:
            h = start
            while True:
                tag(h)
                h2 = self.arcs[h]
                tag(h2)
                cid, slot = slot_of[h2]
                if cid not in order:
                    order.append(cid)
                h = self.crossings[cid].slots[(slot + 2) % 4]
                if h == start:
                    break
            start = None
            for cid in order:
                free = [h for h in self.crossings[cid].slots if h not in label]
                if free:
                    start = min(free, key=lambda h: self.crossings[cid].slots.index(h))
                    break
        if len(label) != len(self.arcs):
            raise ValueError("canonical form requires a connected diagram")
        rows = sorted(
            (label[c.slots[0]], label[c.slots[1]], label[c.slots[2]],
             label[c.slots[3]], c.over)
            for c in self.crossings.values()
        )
        pairs = sorted(tuple(sorted((label[a], label[b])))
                       for a, b in self.arcs.items() if a < b)
        return repr((rows, pairs)).encode("ascii")

    def canonical_key(self) -> bytes:
        """Byte string invariant under relabeling of half-edges/crossings.

        The encoding is computed from every possible start half-edge and the
        lexicographically smallest result is kept, so isomorphic labelings
        collide.  Connected diagrams only.
        """
        if not self.crossings:
            return f"loops:{self.free_loops}".encode("ascii")
        slot_of = self._slot_map()
        return min(self._encode_from(h, slot_of) for h in sorted(self.arcs))

    def debug_dump(self) -> str:
        lines = [f"free_loops {self.free_loops}"]
        for cid in sorted(self.crossings):
            c = self.crossings[cid]
            lines.append(f"crossing {cid} slots {c.slots} over {c.over}")
        for a in sorted(self.arcs):
            if a < self.arcs[a]:
                lines.append(f"arc {a} {self.arcs[a]}")
        if not self.crossings or len(self.connected_parts()) == 1:
            key = self.canonical_key().hex()
            lines.append(f"key {key}")
        return "\n".join(lines)

    def same_shape(self, other: PlanarDiagram) -> bool:
        """Structural equality of stored data (ids included)."""
        return (self.crossings == other.crossings and self.arcs == other.arcs
                and self.free_loops == other.free_loops)
