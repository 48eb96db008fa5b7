"""Exact integer number theory.

Primality is deterministic Miller-Rabin for everything below a fixed
witness-set bound (well past 2**64); above that bound a strong
probable-prime test is used and ``primality_is_certain`` reports the
difference. Factorization is trial division up to a small threshold,
then Pollard rho with Brent cycle detection. All functions work on
Python ints, so arbitrary precision comes for free.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import InvalidInputError, ResourceLimitError

# Witnesses proving Miller-Rabin deterministic for n < 3.317e24 (covers 2**64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# Inputs above this raise ResourceLimitError from factor(); overridable per call.
DEFAULT_FACTOR_BOUND = 1 << 128

_TRIAL_DIVISION_LIMIT = 10_000

_PROBABLE_ROUNDS = 32


def _mr_round(n: int, a: int, d: int, s: int) -> bool:
    # one strong-pseudoprime round; True = "possibly prime"
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test, deterministic for n below the witness-set bound."""
    if n < 1:
        raise InvalidInputError(f"is_prime expects n >= 1, got {n}")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if not _mr_round(n, a, d, s):
            return False
    if n < _MR_DETERMINISTIC_BOUND:
        return True
    rng = random.Random(n)
    return all(_mr_round(n, rng.randrange(2, n - 1), d, s)
               for _ in range(_PROBABLE_ROUNDS))


def primality_is_certain(n: int) -> bool:
    """True when is_prime(n) is a proof, not just a strong probable-prime result."""
    return n < _MR_DETERMINISTIC_BOUND


@dataclass(frozen=True)
class Factorization:
    """A positive integer with its sorted prime factorization.

    factors is a tuple of (prime, exponent) pairs with strictly
    increasing primes; empty exactly when value == 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise InvalidInputError(f"malformed factorization of {self.value}")
            prod *= p ** e
            prev = p
        if prod != self.value:
            raise InvalidInputError(
                f"factors multiply to {prod}, not {self.value}")

    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p)
                          for p, e in self.factors)


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    # increments chosen deterministically so repeated runs agree
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ResourceLimitError(f"rho failed to split {n}")  # pragma: no cover


def factor(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> Factorization:
    """Sorted prime factorization of n >= 1."""
    if n < 1:
        raise InvalidInputError(f"factor expects n >= 1, got {n}")
    if n > bound:
        raise ResourceLimitError(
            f"{n} exceeds the factoring bound {bound}")
    value = n
    found: dict[int, int] = {}
    for p in range(2, _TRIAL_DIVISION_LIMIT):
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(value, tuple(sorted(found.items())))


@dataclass(frozen=True)
class PrimePowerClass:
    """How a positive integer sits relative to the prime powers.

    kind is one of "one", "prime", "prime_power", "composite"; base and
    exponent are set for the prime / prime_power kinds.
    """

    kind: str
    base: int | None = None
    exponent: int | None = None

    @property
    def is_prime_power_or_one(self) -> bool:
        """True for 1, primes, and proper prime powers."""
        return self.kind != "composite"

    def __str__(self) -> str:
        if self.kind == "one":
            return "1"
        if self.kind == "prime":
            return f"prime {self.base}"
        if self.kind == "prime_power":
            return f"{self.base}^{self.exponent}"
        return "composite"


ONE = PrimePowerClass("one")
COMPOSITE = PrimePowerClass("composite")


def prime_class(p: int) -> PrimePowerClass:
    return PrimePowerClass("prime", p, 1)


def prime_power_class(p: int, k: int) -> PrimePowerClass:
    return PrimePowerClass("prime_power", p, k)


def classify_prime_power(n: int) -> PrimePowerClass:
    """Decide whether n is 1, a prime, a proper prime power, or composite."""
    if n < 1:
        raise InvalidInputError(f"classify_prime_power expects n >= 1, got {n}")
    if n == 1:
        return ONE
    # even n: strip twos; any odd part > 1 means a second prime divisor
    if n % 2 == 0:
        k = (n & -n).bit_length() - 1
        if n == 1 << k:
            return prime_class(2) if k == 1 else prime_power_class(2, k)
        return COMPOSITE
    # odd n: the smallest prime factor decides everything
    q = _smallest_odd_prime_factor(n)
    if q is None:
        return prime_class(n)
    k = 0
    while n % q == 0:
        n //= q
        k += 1
    if n != 1:
        return COMPOSITE
    return prime_class(q) if k == 1 else prime_power_class(q, k)


def _smallest_odd_prime_factor(n: int) -> int | None:
    """Smallest prime factor of odd n, or None when n is prime."""
    limit = math.isqrt(n)
    d = 3
    while d <= limit:
        if n % d == 0:
            return d
        d += 2
        if d > _TRIAL_DIVISION_LIMIT:
            # too big for trial division; factor instead
            f = factor(n)
            return f.factors[0][0] if len(f.factors) > 1 or f.factors[0][1] > 1 else None
    return None


def _kth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 1."""
    if k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << -(-n.bit_length() // k)  # >= true root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def perfect_power(n: int) -> tuple[int, int] | None:
    """(base, exponent) with base**exponent == n and exponent maximal, or None."""
    if n < 2:
        raise InvalidInputError(f"perfect_power expects n >= 2, got {n}")
    for e in range(n.bit_length(), 1, -1):
        b = _kth_root(n, e)
        if b >= 2 and b ** e == n:
            return b, e
    return None


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def is_fermat_prime(p: int) -> bool:
    """True iff p is prime and p - 1 is a power of 2.

    Such primes are exactly 2**(2**n) + 1; Pepin's test decides the
    genuine Fermat-number shapes, the rest fall to the generic test.
    """
    if p < 2:
        raise InvalidInputError(f"is_fermat_prime expects p >= 2, got {p}")
    if p == 2 or not _is_power_of_two(p - 1):
        return False
    if p == 3:
        return True
    m = (p - 1).bit_length() - 1  # p = 2^m + 1
    if not _is_power_of_two(m):
        # 2^m + 1 with m not a power of 2 is always composite
        return False
    return pow(3, (p - 1) // 2, p) == p - 1  # Pepin


def is_mersenne_prime(q: int) -> bool:
    """True iff q is prime and q + 1 is a power of 2.

    Such primes are exactly 2**r - 1 with r prime; Lucas-Lehmer decides
    the odd prime exponents.
    """
    if q < 2:
        raise InvalidInputError(f"is_mersenne_prime expects q >= 2, got {q}")
    if not _is_power_of_two(q + 1):
        return False
    r = (q + 1).bit_length() - 1  # q = 2^r - 1
    if r == 1:
        return False  # q = 1
    if r == 2:
        return True  # q = 3
    if not is_prime(r):
        return False  # 2^a - 1 divides 2^ab - 1
    s = 4
    for _ in range(r - 2):
        s = (s * s - 2) % q
    return s == 0


@dataclass(frozen=True)
class FieldClass:
    """Which finite fields have an indecomposable multiplicative group.

    kind is one of "F2", "F9", "fermat", "mersenne_plus_one",
    "decomposable"; parameter carries the Fermat prime p or the Mersenne
    prime q for those two kinds.
    """

    kind: str
    parameter: int | None = None

    @property
    def indecomposable(self) -> bool:
        return self.kind != "decomposable"

    def describe(self, p: int, r: int) -> str:
        order = f"F_{p ** r}"
        if self.kind == "F2":
            return f"indecomposable: {order}"
        if self.kind == "F9":
            return f"indecomposable: {order}"
        if self.kind == "fermat":
            return f"indecomposable: {order} ({self.parameter} is a Fermat prime)"
        if self.kind == "mersenne_plus_one":
            return f"indecomposable: {order} ({self.parameter} is a Mersenne prime)"
        return f"decomposable: {order}"


FIELD_F2 = FieldClass("F2")
FIELD_F9 = FieldClass("F9")
FIELD_DECOMPOSABLE = FieldClass("decomposable")


def classify_field(p: int, r: int) -> FieldClass:
    """Classify the field of order p**r by indecomposability of its unit group.

    The unit group is cyclic of order p**r - 1, so it is indecomposable
    exactly when that order is 1 or a prime power; the four-way case
    split refines which prime power can occur.
    """
    if r < 1:
        raise InvalidInputError(f"classify_field expects r >= 1, got {r}")
    if not is_prime(p):
        raise InvalidInputError(f"classify_field expects prime p, got {p}")
    n = p ** r - 1
    cls = classify_prime_power(n)
    if cls.kind == "one":
        return FIELD_F2
    if cls.kind == "composite":
        return FIELD_DECOMPOSABLE
    if (p, r) == (3, 2):
        return FIELD_F9
    if r == 1 and cls.base == 2:
        return FieldClass("fermat", p)
    if p == 2 and cls.kind == "prime":
        return FieldClass("mersenne_plus_one", cls.base)
    raise AssertionError(
        f"p^r - 1 = {n} is a prime power outside the classification")
