from hypothesis import given, settings, strategies as st

from bwmlink.braid import (BraidWord, closure_diagram, conjugate, parse_braid,
                           stabilize)
from bwmlink.closed_forms import torus2_invariant
from bwmlink.laurent import (DELTA, LaurentPoly2, LocalizedPoly, loop_value,
                             r_pow)
from bwmlink.skein import SkeinEngine, kauffman_polynomial

X = loop_value()


@st.composite
def small_words(draw, max_strands=3, max_len=6, min_len=0):
    f = draw(st.integers(2, max_strands))
    n = draw(st.integers(min_len, max_len))
    letters = tuple(
        (draw(st.integers(1, f - 1)), draw(st.sampled_from((1, -1))))
        for _ in range(n))
    return BraidWord(f, letters)


class TestBaseCases:
    def test_two_unlink(self):
        eng = SkeinEngine()
        assert eng.regular_isotopy_poly(closure_diagram(parse_braid("B2:"))) == X

    def test_single_kink(self):
        eng = SkeinEngine()
        assert eng.regular_isotopy_poly(
            closure_diagram(parse_braid("B2: 1"))) == LocalizedPoly(r_pow(1))

    def test_switch_relation_instance(self):
        # value(positive kink) - value(negative kink)
        #   = (s - s^-1) (value(2-unlink) - value(unknot))
        eng = SkeinEngine()
        pos = eng.regular_isotopy_poly(closure_diagram(parse_braid("B2: 1")))
        neg = eng.regular_isotopy_poly(closure_diagram(parse_braid("B2: -1")))
        assert pos - neg == DELTA * (X - 1)

    def test_poke_pair(self):
        # closure of the third-strand cancelling pair next to a kink
        eng = SkeinEngine()
        value = eng.regular_isotopy_poly(closure_diagram(parse_braid("B3: 1 2 -2")))
        assert value == r_pow(1) * X

    def test_normalization(self):
        assert kauffman_polynomial(parse_braid("B2: 1")) == 1
        assert kauffman_polynomial(parse_braid("B2:")) == X
        assert kauffman_polynomial(parse_braid("B1:")) == 1


TREFOIL = LaurentPoly2({
    (-4, 0): 1,
    (-3, 1): 1, (-3, -1): -1,
    (-5, 1): -1, (-5, -1): 1,
    (-2, 2): 1, (-2, -2): 1,
    (-4, 2): -1, (-4, -2): -1,
})


class TestOracle:
    def test_trefoil_frozen(self):
        # hand expansion of 2r^-2 - r^-4 + (s-s^-1)(r^-3 - r^-5)
        #   + (s-s^-1)^2 (r^-2 - r^-4), the closed form for three positive
        #   letters on two strands
        assert kauffman_polynomial(parse_braid("B2: 1^3")) == TREFOIL
        assert torus2_invariant(3) == LocalizedPoly(TREFOIL)

    def test_full_range(self):
        eng = SkeinEngine()
        for m in range(-6, 9):
            word = BraidWord(2, ((1, 1 if m > 0 else -1),) * abs(m))
            assert eng.kauffman_polynomial(word) == torus2_invariant(m), m


class TestSkeinIdentity:
    @given(small_words(max_len=4), small_words(max_len=3),
           st.integers(1, 2), st.sampled_from((1, -1)))
    @settings(max_examples=25, deadline=None)
    def test_global_switch_relation(self, w, v, index, sign):
        strands = max(w.strands, v.strands, index + 1)
        letters = (tuple(w.letters) + ((index, sign),) + tuple(v.letters))
        word = BraidWord(strands, letters)
        flipped = BraidWord(strands, (tuple(w.letters) + ((index, -sign),)
                                      + tuple(v.letters)))
        eng = SkeinEngine()
        d = closure_diagram(word)
        cid = len(w.letters)  # the crossing of the inserted letter
        _, par, cap = d.resolve(cid)
        lhs = (eng.regular_isotopy_poly(d)
               - eng.regular_isotopy_poly(closure_diagram(flipped)))
        rhs = DELTA * (eng.regular_isotopy_poly(par)
                       - eng.regular_isotopy_poly(cap))
        assert lhs == (rhs if sign > 0 else -rhs)


class TestMoveInvariance:
    @given(small_words(max_len=5), st.integers(1, 2), st.sampled_from((1, -1)))
    @settings(max_examples=20, deadline=None)
    def test_markov_moves(self, w, g, sign):
        eng = SkeinEngine()
        base = eng.kauffman_polynomial(w)
        mover = BraidWord(w.strands, ((min(g, w.strands - 1), sign),))
        assert eng.kauffman_polynomial(conjugate(w, mover)) == base
        assert eng.kauffman_polynomial(stabilize(w, sign)) == base

    @given(small_words(max_strands=4, max_len=3), st.integers(1, 2),
           st.booleans())
    @settings(max_examples=20, deadline=None)
    def test_braid_relation(self, w, i, front):
        if i + 1 > w.strands - 1:
            i = 1
        if w.strands < 3:
            w = BraidWord(3, w.letters)
        triple_a = ((i, 1), (i + 1, 1), (i, 1))
        triple_b = ((i + 1, 1), (i, 1), (i + 1, 1))
        if front:
            wa = BraidWord(w.strands, triple_a + w.letters)
            wb = BraidWord(w.strands, triple_b + w.letters)
        else:
            wa = BraidWord(w.strands, w.letters + triple_a)
            wb = BraidWord(w.strands, w.letters + triple_b)
        eng = SkeinEngine()
        assert eng.kauffman_polynomial(wa) == eng.kauffman_polynomial(wb)

    @given(small_words(max_strands=4, max_len=4))
    @settings(max_examples=20, deadline=None)
    def test_far_commutation(self, w):
        if w.strands < 4:
            w = BraidWord(4, w.letters)
        eng = SkeinEngine()
        wa = BraidWord(w.strands, ((1, 1), (3, 1)) + w.letters)
        wb = BraidWord(w.strands, ((3, 1), (1, 1)) + w.letters)
        assert eng.kauffman_polynomial(wa) == eng.kauffman_polynomial(wb)


class TestDeterminismAndMemo:
    CORPUS = ["B2: 1 1 1", "B3: 1 -2 1 -2", "B3: 1 2 1 2", "B4: 1 -2 3",
              "B3: 2 2 1 -2 1", "B2: -1 -1 -1 -1"]

    def test_repeat_evaluation_identical(self):
        eng = SkeinEngine()
        for text in self.CORPUS:
            w = parse_braid(text)
            assert eng.kauffman_polynomial(w) == eng.kauffman_polynomial(w)

    def test_cache_soundness(self):
        cached = SkeinEngine(use_cache=True)
        plain = SkeinEngine(use_cache=False)
        for text in self.CORPUS:
            w = parse_braid(text)
            assert cached.kauffman_polynomial(w) == plain.kauffman_polynomial(w)
        assert cached.cache_size > 0 and plain.cache_size == 0

    def test_shared_cache_across_words(self):
        eng = SkeinEngine()
        first = eng.kauffman_polynomial(parse_braid("B2: 1^4"))
        size_after_first = eng.cache_size
        again = eng.kauffman_polynomial(parse_braid("B2: 1^4"))
        assert first == again
        assert eng.cache_size == size_after_first

    @given(small_words(max_len=5))
    @settings(max_examples=15, deadline=None)
    def test_cache_equals_no_cache(self, w):
        assert (SkeinEngine(True).kauffman_polynomial(w)
                == SkeinEngine(False).kauffman_polynomial(w))


def invert_vars(v: LocalizedPoly) -> LocalizedPoly:
    """v(r^-1, s^-1); the denominator contributes (-1)^k."""
    num = LaurentPoly2({(-a, -b): c for a, b, c in v.num.terms()})
    if v.k % 2:
        num = -num
    return LocalizedPoly(num, v.k)


class TestClassicalIdentities:
    """Structural facts about the invariant that the engine never consults:
    independent cross-checks of the sign conventions."""

    MIRROR_WORDS = ["B2: 1 1 1", "B3: 1 2 1 2", "B3: 1 -2 1 -2",
                    "B4: 1 2 3 1 2 3", "B3: 1 1 2 -1 2"]

    def test_mirror_inverts_variables(self):
        eng = SkeinEngine()
        for text in self.MIRROR_WORDS:
            w = parse_braid(text)
            mirror = BraidWord(w.strands, tuple((i, -e) for i, e in w.letters))
            assert (eng.kauffman_polynomial(mirror)
                    == invert_vars(eng.kauffman_polynomial(w))), text

    def test_word_reversal_invariance(self):
        eng = SkeinEngine()
        for text in ("B3: 1 2 1 -2", "B4: 1 -2 3 -2 1", "B3: 1 1 2 2"):
            w = parse_braid(text)
            rev = BraidWord(w.strands, tuple(reversed(w.letters)))
            assert eng.kauffman_polynomial(rev) == eng.kauffman_polynomial(w)

    def test_amphichiral_four_crossing_knot(self):
        value = kauffman_polynomial(parse_braid("B3: 1 -2 1 -2"))
        assert value == invert_vars(value)

    def test_connected_sum_multiplicativity(self):
        eng = SkeinEngine()
        trefoil = eng.kauffman_polynomial(parse_braid("B2: 1 1 1"))
        granny = eng.kauffman_polynomial(parse_braid("B3: 1 1 1 2 2 2"))
        square = eng.kauffman_polynomial(parse_braid("B3: 1 1 1 -2 -2 -2"))
        assert granny == trefoil * trefoil
        assert square == trefoil * invert_vars(trefoil)

    @given(small_words(max_strands=4, max_len=6))
    @settings(max_examples=20, deadline=None)
    def test_mirror_random(self, w):
        eng = SkeinEngine()
        mirror = BraidWord(w.strands, tuple((i, -e) for i, e in w.letters))
        assert (eng.kauffman_polynomial(mirror)
                == invert_vars(eng.kauffman_polynomial(w)))

    def test_relabeled_diagram_same_value(self):
        # identical abstract diagram, different ids, different recursion order
        from test_diagram import relabeled
        eng = SkeinEngine()
        for text in self.MIRROR_WORDS:
            d = closure_diagram(parse_braid(text))
            assert (eng.regular_isotopy_poly(relabeled(d, seed=99))
                    == eng.regular_isotopy_poly(d))


class TestPokeReduction:
    def test_cancelling_pair_reduces(self):
        d = closure_diagram(parse_braid("B2: 1 -1"))
        poked = d.remove_poke()
        assert poked is not None
        assert poked.crossing_count == 0 and poked.free_loops == 2

    def test_hopf_does_not_reduce(self):
        assert closure_diagram(parse_braid("B2: 1 1")).remove_poke() is None

    def test_off_by_default(self):
        assert SkeinEngine()._poke is False

    @given(small_words(max_strands=4, max_len=7))
    @settings(max_examples=25, deadline=None)
    def test_value_preserving(self, w):
        plain = SkeinEngine(use_poke_reduction=False)
        reducing = SkeinEngine(use_poke_reduction=True)
        assert plain.kauffman_polynomial(w) == reducing.kauffman_polynomial(w)


class TestSpecializedInvariants:
    def test_unknot(self):
        from bwmlink.skein import osp_invariant, so_invariant
        for n in (1, 2):
            assert osp_invariant(parse_braid("B2: 1"), n) == 1
            assert so_invariant(parse_braid("B2: 1"), n) == 1

    def test_two_unlink(self):
        from bwmlink.laurent import quantum_dimension
        from bwmlink.skein import osp_invariant
        assert osp_invariant(parse_braid("B2:"), 1) == quantum_dimension(1)

    def test_torus_family_specializations_agree(self):
        from bwmlink.laurent import Specialization, one_var_equal, specialize
        for m in range(-4, 7):
            value = torus2_invariant(m)
            for n in (1, 2):
                a = specialize(value, Specialization.osp(n))
                b = specialize(value, Specialization.so(n))
                assert one_var_equal(a, b), (m, n)
