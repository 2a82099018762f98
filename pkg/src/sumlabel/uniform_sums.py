"""Exact distribution of a sum of i.i.d. discrete uniforms on [N].

Probabilities are stored as integer outcome counts over a common
denominator N**ell, so normalization, the symmetry/unimodality of the
PMF about its mean, and every window probability are exact: no result
here depends on floating-point rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import exp
from typing import Iterable, Iterator, NamedTuple

from .errors import TooLarge

SUPPORT_GUARD = 500_000
WORK_GUARD = 5 * 10**7


@dataclass(frozen=True)
class Pmf:
    """Distribution of X_1 + ... + X_ell with X_i i.i.d. uniform on
    {1, ..., n_values}.  ``counts[t - summands]`` is the number of the
    n_values**summands outcome tuples summing to t.

    Construction validates exactly: counts are non-negative, total to
    n_values**summands, and are symmetric and unimodal about the mean
    summands * (n_values + 1) / 2.
    """

    summands: int
    n_values: int
    counts: tuple[int, ...]

    def __post_init__(self):
        ell, n = self.summands, self.n_values
        if ell < 1 or n < 1:
            raise ValueError("summands and n_values must be positive")
        if len(self.counts) != ell * (n - 1) + 1:
            raise ValueError("counts length does not match the support")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")
        if sum(self.counts) != n**ell:
            raise ValueError("counts do not total n_values**summands")
        m = len(self.counts)
        for i in range(m // 2 + 1):
            if self.counts[i] != self.counts[m - 1 - i]:
                raise ValueError("counts not symmetric about the mean")
            if i + 1 <= m - 1 - i and self.counts[i] > self.counts[i + 1]:
                raise ValueError("counts not unimodal about the mean")

    @property
    def support_base(self) -> int:
        """Smallest attainable sum (= summands)."""
        return self.summands

    @property
    def support_max(self) -> int:
        return self.summands * self.n_values

    @property
    def denominator(self) -> int:
        return self.n_values**self.summands

    @property
    def mean_times_two(self) -> int:
        """2 * E[sum]; kept integral because the mean may be a half-integer."""
        return self.summands * (self.n_values + 1)

    def prob(self, t: int) -> Fraction:
        if t < self.support_base or t > self.support_max:
            return Fraction(0)
        return Fraction(self.counts[t - self.support_base], self.denominator)

    @property
    def probabilities(self) -> tuple[Fraction, ...]:
        den = self.denominator
        return tuple(Fraction(c, den) for c in self.counts)

    def max_point(self) -> tuple[int, Fraction]:
        """(smallest argmax, max probability)."""
        peak = max(self.counts)
        t = self.counts.index(peak) + self.support_base
        return t, Fraction(peak, self.denominator)

    def window(self, lo: int, hi: int) -> Fraction:
        """Exact Pr[lo <= sum <= hi]."""
        lo = max(lo, self.support_base)
        hi = min(hi, self.support_max)
        if lo > hi:
            return Fraction(0)
        base = self.support_base
        return Fraction(sum(self.counts[lo - base : hi - base + 1]), self.denominator)


def _convolve_next(counts: list[int], n: int) -> list[int]:
    """One more uniform summand: sliding-window sum of width n."""
    m = len(counts)
    out = [0] * (m + n - 1)
    window = 0
    for i in range(m + n - 1):
        if i < m:
            window += counts[i]
        if i - n >= 0:
            window -= counts[i - n]
        out[i] = window
    return out


def _guard(summands: int, n_values: int) -> None:
    support = summands * (n_values - 1) + 1
    if support > SUPPORT_GUARD or summands * support > WORK_GUARD:
        raise TooLarge(f"pmf of {summands} uniforms on [{n_values}] exceeds the size guard")


def sum_pmf(summands: int, n_values: int) -> Pmf:
    """Exact PMF of a sum of ``summands`` i.i.d. uniforms on [n_values],
    by iterated convolution with a sliding-window accumulator
    (cost O(summands * support))."""
    if summands < 1 or n_values < 1:
        raise ValueError("summands and n_values must be positive")
    _guard(summands, n_values)
    counts = [1] * n_values
    for _ in range(summands - 1):
        counts = _convolve_next(counts, n_values)
    return Pmf(summands, n_values, tuple(counts))


def iter_sum_pmfs(n_values: int, max_summands: int) -> Iterator[Pmf]:
    """Yield the PMFs for 1..max_summands summands, sharing convolution
    work across the family (one extra convolution per step)."""
    if max_summands < 1 or n_values < 1:
        raise ValueError("summands and n_values must be positive")
    _guard(max_summands, n_values)
    counts = [1] * n_values
    yield Pmf(1, n_values, tuple(counts))
    for ell in range(2, max_summands + 1):
        counts = _convolve_next(counts, n_values)
        yield Pmf(ell, n_values, tuple(counts))


def peak_probability_margin(ell: int, n_values: int, c: float) -> float:
    """Normalized peak of the PMF of a sum of 2*ell uniforms on [n_values]:
    max_t Pr[sum = t] * e**(4c) * n_values / 5.

    A value <= 1 certifies the peak bound 5 / (e**(4c) * n_values) at
    these concrete parameters.
    """
    pmf = sum_pmf(2 * ell, n_values)
    _, peak = pmf.max_point()
    return float(peak) * n_values * exp(4.0 * c) / 5.0


def window_probability(summands: int, n_values: int, lo: int, hi: int) -> Fraction:
    """Exact Pr[lo <= sum <= hi] for a sum of i.i.d. uniforms on [n_values]."""
    return sum_pmf(summands, n_values).window(lo, hi)


class MergeChecks(NamedTuple):
    conv1_holds: bool
    decrease_holds: bool


def _as_fraction(p) -> Fraction:
    q = Fraction(p)
    if not 0 < q < 1:
        raise ValueError("p must lie strictly between 0 and 1")
    return q


@lru_cache(maxsize=None)
def _decrease_holds(pn: int, pd: int, t: int) -> bool:
    # g(t)**2 <= g(2)**t over the common denominator pd**(2t), after the
    # factorization g(t) = (1-p)**(t-1) * (1 + (t-1) p)
    a = pd - pn
    return a ** (t - 2) * (pd + (t - 1) * pn) ** 2 <= (pd + pn) ** t


def merge_inequality_check(p, t1: int, t2: int) -> MergeChecks:
    """Exact checks of two inequalities for g(t) = (1-p)**t + t*p*(1-p)**(t-1),
    the probability that a Binomial(t, p) count is at most 1:

    * conv1: g(t1) * g(t2) <= g(t1+1) * g(t2-1), for t1 <= t2 - 2;
    * decrease: g(t2)**(1/t2) <= g(2)**(1/2).

    Both are decided by integer cross-multiplication after cancelling the
    positive common factor (1-p)**(t1+t2-2), so the answers are exact for
    any rational p in (0, 1).
    """
    q = _as_fraction(p)
    if t1 < 2:
        raise ValueError("t1 must be >= 2")
    if t2 < t1 + 2:
        raise ValueError("need t1 <= t2 - 2")
    pn, pd = q.numerator, q.denominator
    # conv1 reduces to a comparison of the linear factors 1 + (t-1) p
    conv1 = (pd + (t1 - 1) * pn) * (pd + (t2 - 1) * pn) <= (pd + t1 * pn) * (pd + (t2 - 2) * pn)
    return MergeChecks(conv1, _decrease_holds(pn, pd, t2))


def binomial_tail_le_one(p, t: int) -> Fraction:
    """g(t) = Pr[Binomial(t, p) <= 1] as an exact fraction (the literal
    formula, mainly useful as an oracle for :func:`merge_inequality_check`)."""
    q = _as_fraction(p)
    return (1 - q) ** t + t * q * (1 - q) ** (t - 1)


def exact_collision_probability(x: Iterable[int], y: Iterable[int], n_values: int) -> Fraction:
    """Exact probability, over i.i.d. uniform labels on [n_values], that two
    distinct vertex sets get equal label sums.

    Labels on the intersection cancel, so only the two difference sets
    matter; the result is the inner product of their sum PMFs.  Always at
    most 1/n_values.
    """
    xs, ys = frozenset(x), frozenset(y)
    if xs == ys:
        raise ValueError("sets must be distinct (equal sets collide with probability 1)")
    if n_values < 1:
        raise ValueError("n_values must be positive")
    if n_values ** len(xs | ys) > 10**8:
        raise TooLarge("label space exceeds the enumeration guard")
    a, b = xs - ys, ys - xs
    if not a or not b:
        # one sum is a strict sub-sum of the other; positive labels force inequality
        return Fraction(0)
    pa, pb = sum_pmf(len(a), n_values), sum_pmf(len(b), n_values)
    lo = max(pa.support_base, pb.support_base)
    hi = min(pa.support_max, pb.support_max)
    hits = sum(
        pa.counts[t - pa.support_base] * pb.counts[t - pb.support_base]
        for t in range(lo, hi + 1)
    )
    return Fraction(hits, n_values ** (len(a) + len(b)))
