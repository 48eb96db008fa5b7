"""Finite abelian groups in invariant-factor form.

The normal form is the divisibility chain d_1 | d_2 | ... | d_k with
every d_i >= 2; the empty chain is the trivial group. Primary
(prime-power) decompositions are derived on demand and recombined when
groups are built from cyclic pieces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InconsistencyError, InvalidInputError
from .ntcore import factor


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group as its chain of invariant factors."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        prev = None
        for d in self.invariant_factors:
            if d < 2:
                raise InvalidInputError(f"invariant factor {d} < 2")
            if prev is not None and d % prev != 0:
                raise InvalidInputError(
                    f"broken divisibility chain {self.invariant_factors}")
            prev = d

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"C_{d}" for d in self.invariant_factors)

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors)}


TRIVIAL = AbelianGroup(())


def cyclic(n: int) -> AbelianGroup:
    """The cyclic group of order n (trivial for n = 1)."""
    if n < 1:
        raise InvalidInputError(f"cyclic expects n >= 1, got {n}")
    return TRIVIAL if n == 1 else AbelianGroup((n,))


def primary_decomposition(group: AbelianGroup) -> list[tuple[int, list[int]]]:
    """Cyclic prime-power summands grouped by prime, exponents descending."""
    per_prime: dict[int, list[int]] = {}
    for d in group.invariant_factors:
        for p, e in factor(d).factors:
            per_prime.setdefault(p, []).append(e)
    return [(p, sorted(es, reverse=True)) for p, es in sorted(per_prime.items())]


def from_primary(parts: list[tuple[int, list[int]]]) -> AbelianGroup:
    """Rebuild the invariant-factor form from primary data.

    parts maps primes to exponent multisets (any order); inverse of
    primary_decomposition up to normal form.
    """
    columns: dict[int, list[int]] = {}
    for p, es in parts:
        columns.setdefault(p, []).extend(e for e in es if e > 0)
    width = max((len(es) for es in columns.values()), default=0)
    chain = []
    for i in range(width):
        d = 1
        for p, es in columns.items():
            es = sorted(es, reverse=True)
            if i < len(es):
                d *= p ** es[i]
        chain.append(d)
    return AbelianGroup(tuple(reversed(chain)))


def direct_sum(*groups: AbelianGroup) -> AbelianGroup:
    """Invariant-factor form of the direct sum."""
    merged: dict[int, list[int]] = {}
    for g in groups:
        for p, es in primary_decomposition(g):
            merged.setdefault(p, []).extend(es)
    return from_primary(list(merged.items()))


def is_indecomposable(group: AbelianGroup) -> bool:
    """True iff the group is trivial or cyclic of prime-power order."""
    if group.is_trivial:
        return True
    if len(group.invariant_factors) > 1:
        return False
    return len(factor(group.invariant_factors[0]).factors) == 1


def order_counts(group: AbelianGroup) -> dict[int, int]:
    """Number of elements of each exact order."""
    divs = _divisors(group.exponent)
    dividing = {m: math.prod(math.gcd(d, m) for d in group.invariant_factors)
                for m in divs}
    counts = {}
    for d in divs:
        # Moebius inversion of "order divides m" counts
        total = 0
        for m in _divisors(d):
            total += _moebius(d // m) * dividing[m]
        counts[d] = total
    return {d: c for d, c in counts.items() if c > 0}


def from_order_counts(counts: dict[int, int]) -> AbelianGroup:
    """The unique finite abelian group with the given element-order counts.

    Works one prime at a time: the count of elements of order dividing
    p^j must be a power p^(s_j), and the jumps s_j - s_(j-1) give the
    number of cyclic p-summands of exponent >= j. The reconstruction is
    then re-counted and compared against the input, so any inconsistent
    table is rejected.
    """
    cleaned = {}
    for d, c in counts.items():
        if d < 1 or c < 0:
            raise InvalidInputError(f"bad order-count entry {d}: {c}")
        if c > 0:
            cleaned[d] = c
    if cleaned.get(1) != 1:
        raise InconsistencyError("a group has exactly one element of order 1")
    total = sum(cleaned.values())
    parts = []
    for p, _ in factor(total).factors:
        jmax = 0
        for d in cleaned:
            e = _int_log(d, p)
            if e is not None:
                jmax = max(jmax, e)
        ranks = []
        s_prev = 0
        cumulative = 1
        for j in range(1, jmax + 1):
            cumulative += cleaned.get(p ** j, 0)
            s_j = _int_log(cumulative, p)
            if s_j is None:
                raise InconsistencyError(
                    f"elements of order dividing {p}^{j} number {cumulative}, "
                    f"not a power of {p}")
            ranks.append(s_j - s_prev)
            s_prev = s_j
        for i in range(1, len(ranks)):
            if ranks[i] > ranks[i - 1]:
                raise InconsistencyError(
                    f"rank sequence for prime {p} increases at exponent {i + 1}")
        # conjugate partition: ranks[j-1] summands have exponent >= j
        exponents = []
        for idx, r in enumerate(ranks, start=1):
            following = ranks[idx] if idx < len(ranks) else 0
            exponents.extend([idx] * (r - following))
        parts.append((p, exponents))
    rebuilt = from_primary(parts)
    if order_counts(rebuilt) != cleaned:
        raise InconsistencyError(
            "order counts do not match any finite abelian group")
    return rebuilt


def _int_log(n: int, p: int) -> int | None:
    """Exact exponent e with p**e == n, or None."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e if n == 1 else None


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factor(n).factors:
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _moebius(n: int) -> int:
    mu = 1
    for _, e in factor(n).factors:
        if e > 1:
            return 0
        mu = -mu
    return mu
