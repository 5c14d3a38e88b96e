"""Skein evaluation of closed diagrams and the normalized link invariant.

The regular-isotopy value of a diagram satisfies

* value(c crossing-free loops)     = x^(c-1),
* value(diagram with a kink)       = r^(+-1) * value(kink removed),
* value(D+) - value(D-)            = (s - s^-1) * (value(par) - value(cap)),
* fully descending diagram         = r^writhe * x^(components - 1),

and disjoint pieces multiply with one extra factor of x per split.  The
engine resolves the first non-descending crossing of the deterministic
strand walk, which terminates because smoothing drops a crossing and
switching strictly extends the descending prefix.

The normalized invariant of a braid closure divides out r^(exponent sum);
it takes the value 1 on the unknot.
"""

from __future__ import annotations

from .braid import BraidWord, closure_diagram, exponent_sum
from .diagram import PlanarDiagram
from .laurent import (DELTA, LaurentPoly1, LocalizedPoly, QFraction,
                      Specialization, loop_value, r_pow, specialize)

_X = loop_value()


class SkeinEngine:
    """Evaluator with an optional memo table keyed by canonical diagram form.

    Values for equal keys are necessarily equal, so sharing the table across
    evaluations (or threads) is harmless.
    """

    def __init__(self, use_cache: bool = True, use_poke_reduction: bool = False):
        self._cache: dict[bytes, LocalizedPoly] | None = {} if use_cache else None
        self._poke = use_poke_reduction

    @property
    def cache_size(self) -> int:
        return len(self._cache) if self._cache is not None else 0

    def regular_isotopy_poly(self, diagram: PlanarDiagram) -> LocalizedPoly:
        """The unnormalized diagram value described in the module docstring."""
        parts = diagram.connected_parts()
        split = diagram.free_loops + len(parts) - 1
        if split < 0:
            raise ValueError("the empty diagram has no value")
        acc = _X**split
        for part in parts:
            acc = acc * self._connected(part)
        return acc

    def _connected(self, part: PlanarDiagram) -> LocalizedPoly:
        key = None
        if self._cache is not None:
            key = part.canonical_key()
            hit = self._cache.get(key)
            if hit is not None:
                return hit
        uncurled, kink_sum = part.remove_curls()
        if self._poke:
            while True:
                poked = uncurled.remove_poke()
                if poked is None:
                    break
                uncurled, more = poked.remove_curls()
                kink_sum += more
        if kink_sum or uncurled.crossing_count < part.crossing_count:
            value = r_pow(kink_sum) * self.regular_isotopy_poly(uncurled)
        else:
            walk = part.traverse()
            if walk.switch_candidate is None:
                value = r_pow(walk.writhe) * _X ** (len(walk.components) - 1)
            else:
                switched, par, cap = part.resolve(walk.switch_candidate)
                state = 1 if part.crossings[walk.switch_candidate].over == 1 else -1
                correction = DELTA * (self.regular_isotopy_poly(par)
                                      - self.regular_isotopy_poly(cap))
                value = self.regular_isotopy_poly(switched) + state * correction
        if self._cache is not None:
            self._cache[key] = value
        return value

    def kauffman_polynomial(self, b: BraidWord) -> LocalizedPoly:
        """Normalized two-variable invariant of the braid's closure:
        r^(-exponent sum) times the regular-isotopy value."""
        return r_pow(-exponent_sum(b)) * self.regular_isotopy_poly(closure_diagram(b))


_default_engine = SkeinEngine()


def regular_isotopy_poly(diagram: PlanarDiagram,
                         engine: SkeinEngine | None = None) -> LocalizedPoly:
    return (engine or _default_engine).regular_isotopy_poly(diagram)


def kauffman_polynomial(b: BraidWord,
                        engine: SkeinEngine | None = None) -> LocalizedPoly:
    return (engine or _default_engine).kauffman_polynomial(b)


def osp_invariant(b: BraidWord, n: int,
                  engine: SkeinEngine | None = None) -> LaurentPoly1 | QFraction:
    """One-variable invariant at r -> -q^(2n), s -> q."""
    return specialize(kauffman_polynomial(b, engine), Specialization.osp(n))


def so_invariant(b: BraidWord, n: int,
                 engine: SkeinEngine | None = None) -> LaurentPoly1 | QFraction:
    """One-variable invariant at r -> q^(2n), s -> -q."""
    return specialize(kauffman_polynomial(b, engine), Specialization.so(n))
