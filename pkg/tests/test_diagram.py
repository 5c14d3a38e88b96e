import random

from hypothesis import given, settings, strategies as st

from bwmlink.braid import BraidWord, closure_diagram, parse_braid
from bwmlink.diagram import Crossing, PlanarDiagram


def relabeled(d: PlanarDiagram, seed: int) -> PlanarDiagram:
    """Apply a random permutation to half-edge and crossing ids."""
    rng = random.Random(seed)
    hes = sorted(d.arcs)
    perm = dict(zip(hes, rng.sample(hes, len(hes))))
    cids = sorted(d.crossings)
    cperm = dict(zip(cids, rng.sample(cids, len(cids))))
    crossings = {
        cperm[cid]: Crossing(tuple(perm[h] for h in c.slots), c.over)
        for cid, c in d.crossings.items()
    }
    arcs = {perm[a]: perm[b] for a, b in d.arcs.items()}
    return PlanarDiagram(crossings, arcs, d.free_loops)


@st.composite
def small_words(draw, max_strands=4, max_len=6):
    f = draw(st.integers(2, max_strands))
    n = draw(st.integers(1, max_len))
    letters = tuple(
        (draw(st.integers(1, f - 1)), draw(st.sampled_from((1, -1))))
        for _ in range(n))
    return BraidWord(f, letters)


class TestResolve:
    def test_single_crossing_closure(self):
        d = closure_diagram(parse_braid("B2: 1"))
        switched, par, cap = d.resolve(0)
        assert switched.same_shape(closure_diagram(parse_braid("B2: -1")))
        assert par.crossing_count == 0 and par.free_loops == 2
        assert cap.crossing_count == 0 and cap.free_loops == 1

    def test_hopf_parallel_smoothing(self):
        d = closure_diagram(parse_braid("B2: 1 1"))
        _, par, _ = d.resolve(1)
        # the parallel smoothing of the top crossing is the one-crossing closure
        one = closure_diagram(parse_braid("B2: 1"))
        assert par.canonical_key() == one.canonical_key()

    def test_hopf_cap_smoothing_is_opposite_kink(self):
        d = closure_diagram(parse_braid("B2: 1 1"))
        _, _, cap = d.resolve(0)
        assert cap.crossing_count == 1 and cap.free_loops == 0
        reduced, kinks = cap.remove_curls()
        assert kinks == -1
        assert reduced.crossing_count == 0 and reduced.free_loops == 1

    def test_missing_crossing(self):
        d = closure_diagram(parse_braid("B2: 1"))
        try:
            d.resolve(7)
        except KeyError:
            pass
        else:
            raise AssertionError("expected KeyError")

    @given(small_words(), st.integers(0, 10**6))
    @settings(max_examples=50)
    def test_disjoint_resolutions_commute(self, w, pick):
        d = closure_diagram(w)
        if d.crossing_count < 2:
            return
        cids = sorted(d.crossings)
        rng = random.Random(pick)
        c1, c2 = rng.sample(cids, 2)
        for way1 in range(3):
            for way2 in range(3):
                ab = d.resolve(c1)[way1]
                if c2 in ab.crossings:
                    ab = ab.resolve(c2)[way2]
                    ba = d.resolve(c2)[way2]
                    if c1 not in ba.crossings:
                        continue
                    ba = ba.resolve(c1)[way1]
                    assert ab.same_shape(ba)


class TestRemoveCurls:
    def test_positive_kink(self):
        d = closure_diagram(parse_braid("B2: 1"))
        reduced, kinks = d.remove_curls()
        assert kinks == 1
        assert reduced.crossing_count == 0 and reduced.free_loops == 1

    def test_negative_kink(self):
        d = closure_diagram(parse_braid("B2: -1"))
        reduced, kinks = d.remove_curls()
        assert kinks == -1
        assert reduced.crossing_count == 0 and reduced.free_loops == 1

    def test_no_crossings_untouched(self):
        d = closure_diagram(parse_braid("B3:"))
        reduced, kinks = d.remove_curls()
        assert kinks == 0 and reduced.same_shape(d)

    def test_kink_then_poke(self):
        # the first letter closes into a kink; the cancelling pair that
        # remains is a poke, not a kink, and stays for the skein recursion
        d = closure_diagram(parse_braid("B3: 1 2 -2"))
        reduced, kinks = d.remove_curls()
        assert kinks == 1
        assert reduced.crossing_count == 2

    def test_cascading_kinks(self):
        # each stabilization letter closes into its own kink once the one
        # above it is gone
        d = closure_diagram(parse_braid("B3: 1 2"))
        reduced, kinks = d.remove_curls()
        assert kinks == 2
        assert reduced.crossing_count == 0 and reduced.free_loops == 1

    def test_hopf_has_no_kinks(self):
        d = closure_diagram(parse_braid("B2: 1 1"))
        reduced, kinks = d.remove_curls()
        assert kinks == 0 and reduced.crossing_count == 2


class TestTraversal:
    def test_positive_kink_descending(self):
        walk = closure_diagram(parse_braid("B2: 1")).traverse()
        assert walk.switch_candidate is None
        assert walk.writhe == 1
        assert len(walk.components) == 1

    def test_writhe_matches_exponent_sum_on_positive_words(self):
        for text in ("B2: 1 1", "B2: 1 1 1", "B3: 1 2", "B4: 1 2 3 1"):
            d = closure_diagram(parse_braid(text))
            e = sum(exp for _, exp in parse_braid(text).letters)
            assert d.traverse().writhe == e

    @given(small_words())
    @settings(max_examples=60)
    def test_writhe_is_exponent_sum(self, w):
        # braid orientations make the geometric and algebraic signs agree
        d = closure_diagram(w)
        assert d.traverse().writhe == sum(e for _, e in w.letters)


class TestCanonicalKey:
    @given(small_words(), st.integers(0, 10**6))
    @settings(max_examples=60)
    def test_relabeling_invariance(self, w, seed):
        d = closure_diagram(w)
        parts = d.connected_parts()
        for part in parts:
            assert part.canonical_key() == relabeled(part, seed).canonical_key()

    def test_distinguishes_mirror(self):
        a = closure_diagram(parse_braid("B2: 1 1"))
        b = closure_diagram(parse_braid("B2: -1 -1"))
        assert a.canonical_key() != b.canonical_key()

    def test_debug_dump_contains_key(self):
        d = closure_diagram(parse_braid("B2: 1"))
        dump = d.debug_dump()
        assert "crossing 0" in dump and "key" in dump
        assert dump == d.debug_dump()


class TestConnectedParts:
    def test_split_union(self):
        # two-strand closure next to an untouched strand
        d = closure_diagram(parse_braid("B3: 1 1"))
        assert d.free_loops == 1
        parts = d.connected_parts()
        assert len(parts) == 1 and parts[0].crossing_count == 2

    def test_genuinely_split_crossings(self):
        d1 = closure_diagram(parse_braid("B2: 1 1"))
        shifted = {
            cid + 10: Crossing(tuple(h + 100 for h in c.slots), c.over)
            for cid, c in d1.crossings.items()
        }
        arcs = dict(d1.arcs)
        arcs.update({a + 100: b + 100 for a, b in d1.arcs.items()})
        merged = PlanarDiagram({**d1.crossings, **shifted}, arcs, 0)
        parts = merged.connected_parts()
        assert len(parts) == 2
        assert parts[0].canonical_key() == parts[1].canonical_key()
