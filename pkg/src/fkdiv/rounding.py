"""Geometric rounding of profits for the approximation mode.

Class profits are tracked as indices into the grid 1, g, g^2, ... where
g is the (number of items)-th root of one plus the accuracy parameter;
each item added to a class costs at most one factor of g, so any class
total degrades by at most 1+eps overall. All grid comparisons are exact:
rational cases use Fractions, irrational ones use integer interval
arithmetic at escalating precision, and equality across the two only
happens in the rational cases, so the escalation always terminates.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import EmptySetError
from .profiles import merge_colorings, with_vertex

ZERO = -1  # grid index for an exact class total of zero


def nth_root_floor(x: int, r: int) -> int:
    """Largest integer g with g**r <= x."""
    if x < 0 or r < 1:
        raise ValueError("nth_root_floor needs x >= 0, r >= 1")
    if x == 0 or r == 1:
        return x
    g = 1 << -(-x.bit_length() // r)
    while True:
        ng = ((r - 1) * g + x // g ** (r - 1)) // r
        if ng >= g:
            break
        g = ng
    while g**r > x:
        g -= 1
    while (g + 1) ** r <= x:
        g += 1
    return g


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class EndpointComparator:
    """Exact decisions of the form g^x <= g^s + p for integer p >= 0.

    g is the real positive root of g^root = ratio. The ratio is first
    reduced so that no prime divisor of the root degree leaves it a
    perfect power; after that reduction g^e is rational only when the
    degree divides e, and the mixed rational/irrational comparisons can
    never be ties, so interval arithmetic over scaled integers settles
    them at some finite precision.
    """

    def __init__(self, ratio: Fraction, root: int):
        if ratio <= 1 or root < 1:
            raise ValueError("ratio must exceed 1 and root must be positive")
        a, b = ratio.numerator, ratio.denominator
        degree = root
        for p in sorted(set(_prime_factors(root))):
            while degree % p == 0:
                ra, rb = nth_root_floor(a, p), nth_root_floor(b, p)
                if ra**p == a and rb**p == b:
                    a, b, degree = ra, rb, degree // p
                else:
                    break
        self.base = Fraction(a, b)
        self.degree = degree
        self._bounds_cache: dict = {}
        self._memo: dict = {}

    def _bounds(self, digits: int):
        cached = self._bounds_cache.get(digits)
        if cached is None:
            scaled = (self.base.numerator * 10 ** (digits * self.degree)) // (
                self.base.denominator
            )
            lo = nth_root_floor(scaled, self.degree)
            cached = (lo, lo + 1)
            self._bounds_cache[digits] = cached
        return cached

    @staticmethod
    def _pow_interval(lo: int, hi: int, exp: int, scale: int):
        """Rigorous scaled bounds on g^exp from scaled bounds on g.

        Square-and-multiply over fixed-point integers, rounding the lower
        track down and the upper track up, so the truth stays bracketed.
        """
        res_lo, res_hi = scale, scale
        base_lo, base_hi = lo, hi
        e = exp
        while e:
            if e & 1:
                res_lo = res_lo * base_lo // scale
                res_hi = -(res_hi * base_hi // -scale)
            e >>= 1
            if e:
                base_lo = base_lo * base_lo // scale
                base_hi = -(base_hi * base_hi // -scale)
        return res_lo, res_hi

    def le(self, x: int, s: int, p: int) -> bool:
        """Whether g^x <= g^s + p."""
        if x <= s or p == 0:
            return x <= s
        key = (x, s, p)
        res = self._memo.get(key)
        if res is not None:
            return res
        d = self.degree
        if x % d == 0 and s % d == 0:
            res = self.base ** (x // d) <= self.base ** (s // d) + p
        else:
            digits = 32
            while True:
                lo, hi = self._bounds(digits)
                scale = 10**digits
                x_lo, x_hi = self._pow_interval(lo, hi, x, scale)
                s_lo, s_hi = self._pow_interval(lo, hi, s, scale)
                if x_hi <= s_lo + p * scale:
                    res = True
                    break
                if x_lo > s_hi + p * scale:
                    res = False
                    break
                digits *= 2
        self._memo[key] = res
        return res


# Comparator decisions and index arithmetic depend only on (ratio, n),
# never on per-instance profit bounds, so equal-parameter grids share
# one comparator and one set of memo tables.
_shared_comparators: dict = {}
_shared_grid_memos: dict = {}


def shared_comparator(ratio: Fraction, root: int) -> EndpointComparator:
    comp = _shared_comparators.get((ratio, root))
    if comp is None:
        comp = EndpointComparator(ratio, root)
        _shared_comparators[(ratio, root)] = comp
    return comp


class RoundingGrid:
    """Per-instance grid: index t stands for the value g^t, g^n = 1+eps."""

    def __init__(self, eps: Fraction, n: int, upper_bounds):
        if eps <= 0:
            raise ValueError("accuracy parameter must be positive")
        if n < 1:
            raise ValueError("grid needs at least one item")
        self.eps = eps
        self.n = n
        self.upper_bounds = tuple(upper_bounds)
        self.ratio = Fraction(1) + eps
        self.comparator = shared_comparator(self.ratio, n)
        shared = _shared_grid_memos.get((self.ratio, n))
        if shared is None:
            shared = ({0: Fraction(1)}, {}, {}, {})
            _shared_grid_memos[(self.ratio, n)] = shared
        (
            self._ratio_pow,
            self._round_memo,
            self._extend_memo,
            self._ratio_nd_pow,
        ) = shared
        self.u = tuple(self._index_count(ub) for ub in self.upper_bounds)

    @classmethod
    def for_instance(cls, instance, eps: Fraction) -> "RoundingGrid":
        ubs = [sum(row) for row in instance.profits]
        return cls(eps, max(1, instance.n), ubs)

    def ratio_power(self, e: int) -> Fraction:
        val = self._ratio_pow.get(e)
        if val is None:
            val = self.ratio**e
            self._ratio_pow[e] = val
        return val

    def _index_count(self, ub: int) -> int:
        """Smallest u >= 0 with g^u >= ub, via (1+eps)^u >= ub^n."""
        if ub <= 1:
            return 0
        target = Fraction(ub) ** self.n
        guess = max(0, math.ceil(self.n * math.log(ub) / math.log(float(self.ratio))))
        while self.ratio_power(guess) < target:
            guess += 1
        while guess > 0 and self.ratio_power(guess - 1) >= target:
            guess -= 1
        return guess

    # -- index arithmetic --------------------------------------------------

    def round_down_value(self, v: int) -> int:
        """Largest index t with g^t <= v; ZERO when v is 0."""
        if v < 0:
            raise ValueError("values are nonnegative")
        if v == 0:
            return ZERO
        t = self._round_memo.get(v)
        if t is not None:
            return t
        target = Fraction(v) ** self.n
        lo, hi = 0, 1
        while self.ratio_power(hi) <= target:
            lo, hi = hi, hi * 2
        while lo < hi - 1:
            mid = (lo + hi) // 2
            if self.ratio_power(mid) <= target:
                lo = mid
            else:
                hi = mid
        self._round_memo[v] = lo
        return lo

    def round_profile(self, true_profile) -> tuple:
        return tuple(self.round_down_value(q) for q in true_profile)

    def extend(self, t: int, p: int) -> int:
        """Index after adding true profit p to a class at index t.

        Largest tau with g^tau <= g^t + p; a fresh class rounds p itself
        down. Each call loses at most one factor of g against the truth.
        """
        if p == 0:
            return t
        if t == ZERO:
            return self.round_down_value(p)
        key = (t, p)
        res = self._extend_memo.get(key)
        if res is not None:
            return res
        le = self.comparator.le
        lo, step = t, 1
        while le(lo + step, t, p):
            lo += step
            step *= 2
        hi = lo + step
        while lo < hi - 1:
            mid = (lo + hi) // 2
            if le(mid, t, p):
                lo = mid
            else:
                hi = mid
        self._extend_memo[key] = lo
        return lo

    # -- exact value/endpoint comparisons (instrumentation) ---------------

    def _ratio_int_pow(self, e: int):
        cached = self._ratio_nd_pow.get(e)
        if cached is None:
            cached = (self.ratio.numerator**e, self.ratio.denominator**e)
            self._ratio_nd_pow[e] = cached
        return cached

    def value_le_endpoint(self, q: int, e: int) -> bool:
        """Whether q <= g^e, exactly: q^n * b^e <= a^e for ratio a/b."""
        if q <= 0:
            return True
        if e < 0:
            return False
        num, den = self._ratio_int_pow(e)
        return q**self.n * den <= num

    def endpoint_le_value(self, e: int, q: int) -> bool:
        """Whether g^e <= q, exactly."""
        if e < 0:
            return q >= 0
        if q <= 0:
            return False
        num, den = self._ratio_int_pow(e)
        return num <= q**self.n * den


def _better(new_true, new_witness, old_true, old_witness) -> bool:
    """Collision rule: higher minimum, then lex-larger true profile, then
    lex-smaller witness. Independent of insertion order."""
    new_key = (min(new_true), new_true)
    old_key = (min(old_true), old_true)
    if new_key != old_key:
        return new_key > old_key
    if new_witness is None or old_witness is None:
        return False
    return new_witness < old_witness


class RoundedStateSet:
    """Rounded-index states with the true profile and witness retained.

    Keyed by per-class grid indices; one representative survives per
    key. All reported values come from the retained true profiles, so
    answers are always realizable; the grid only bounds how many states
    coexist.
    """

    __slots__ = ("k", "grid", "track_witnesses", "_map")

    def __init__(self, k: int, grid: RoundingGrid, track_witnesses: bool = True):
        self.k = k
        self.grid = grid
        self.track_witnesses = track_witnesses
        self._map: dict = {}

    def __len__(self) -> int:
        return len(self._map)

    def is_empty(self) -> bool:
        return not self._map

    def items(self):
        """(index_key, true_profile, witness) triples, sorted by key."""
        for key in sorted(self._map):
            true, w = self._map[key]
            yield key, true, w

    def keys(self):
        return self._map.keys()

    def insert(self, key, true, witness) -> None:
        cur = self._map.get(key)
        if cur is None or _better(true, witness, cur[0], cur[1]):
            self._map[key] = (true, witness)

    def union_update(self, other: "RoundedStateSet") -> None:
        for key, (true, w) in other._map.items():
            self.insert(key, true, w)

    def extended(self, cls0: int, amount: int, vertex=None) -> "RoundedStateSet":
        out = RoundedStateSet(self.k, self.grid, self.track_witnesses)
        extend = self.grid.extend
        for key, (true, w) in self._map.items():
            nk = key[:cls0] + (extend(key[cls0], amount),) + key[cls0 + 1 :]
            nt = true[:cls0] + (true[cls0] + amount,) + true[cls0 + 1 :]
            nw = w
            if w is not None and vertex is not None:
                nw = with_vertex(w, cls0, vertex)
            out.insert(nk, nt, nw)
        return out

    def combine(self, other: "RoundedStateSet", minus=None) -> "RoundedStateSet":
        """Pairwise merge; true profiles add (minus the shared base) and
        the key is re-rounded from the merged truth."""
        base = tuple(minus) if minus is not None else (0,) * self.k
        out = RoundedStateSet(self.k, self.grid, self.track_witnesses)
        for _k1, t1, w1 in self.items():
            for _k2, t2, w2 in other.items():
                true = tuple(a + b - c for a, b, c in zip(t1, t2, base))
                nw = None
                if w1 is not None and w2 is not None:
                    nw = merge_colorings(w1, w2)
                out.insert(self.grid.round_profile(true), true, nw)
        return out

    def remapped(self, mapping) -> "RoundedStateSet":
        out = RoundedStateSet(self.k, self.grid, self.track_witnesses)
        for key, (true, w) in self._map.items():
            nw = w
            if w is not None:
                nw = tuple(tuple(sorted(mapping[v] for v in cls)) for cls in w)
            out._map[key] = (true, nw)
        return out

    def map_witnesses(self, fn) -> "RoundedStateSet":
        out = RoundedStateSet(self.k, self.grid, self.track_witnesses)
        for key, (true, w) in self._map.items():
            out._map[key] = (true, fn(w) if w is not None else None)
        return out

    def best_true(self):
        """(value, true_profile, witness) with the best true minimum."""
        if not self._map:
            raise EmptySetError("state set is empty")
        best = None
        for _key, true, w in self.items():
            cand = ((min(true), true), true, w)
            if best is None or cand[0] > best[0]:
                best = cand
        return best[0][0], best[1], best[2]


class RoundedProfileSpace:
    """Space protocol adapter so exact solvers run unchanged on the grid."""

    def __init__(self, k: int, grid: RoundingGrid, track_witnesses: bool = True):
        self.k = k
        self.grid = grid
        self.track_witnesses = track_witnesses
        self.prune = False

    @classmethod
    def for_instance(cls, instance, eps: Fraction) -> "RoundedProfileSpace":
        return cls(instance.k, RoundingGrid.for_instance(instance, eps))

    def empty(self) -> RoundedStateSet:
        return RoundedStateSet(self.k, self.grid, self.track_witnesses)

    def zero(self) -> RoundedStateSet:
        s = self.empty()
        witness = ((),) * self.k if self.track_witnesses else None
        s.insert((ZERO,) * self.k, (0,) * self.k, witness)
        return s

    def finalize(self, state_set):
        return state_set
