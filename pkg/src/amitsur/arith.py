"""Exact integer and elementary number-theoretic primitives.

Everything here works on Python ints, so there is no overflow anywhere.
Primality and factoring use trial division, which is plenty for the
inputs the CLI admits (orders bounded around 10**9).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if prod(p**t for p, t in self.factors) != self.value:
            raise ValueError(f"factors do not multiply to {self.value}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(t < 1 or not is_prime(p) for p, t in self.factors):
            raise ValueError("each factor must be a prime with exponent >= 1")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def is_prime(value: int) -> bool:
    if value < 2:
        return False
    if value < 4:
        return True
    if value % 2 == 0 or value % 3 == 0:
        return False
    f = 5
    while f * f <= value:
        if value % f == 0 or value % (f + 2) == 0:
            return False
        f += 6
    return True


@lru_cache(maxsize=4096)
def _factor_pairs(value: int) -> tuple[tuple[int, int], ...]:
    out = []
    rest = value
    for p in (2, 3):
        t = 0
        while rest % p == 0:
            rest //= p
            t += 1
        if t:
            out.append((p, t))
    f = 5
    step = 2
    while f <= isqrt(rest):
        t = 0
        while rest % f == 0:
            rest //= f
            t += 1
        if t:
            out.append((f, t))
        f += step
        step = 6 - step
    if rest > 1:
        out.append((rest, 1))
    return tuple(out)


def factorize(value: int) -> Factorization:
    """Prime factorization of a positive integer; 1 has no factors."""
    if value < 1:
        raise ValueError(f"factorize needs a positive integer, got {value}")
    return Factorization(value, _factor_pairs(value))


def euler_phi(k: int) -> int:
    if k < 1:
        raise ValueError(f"euler_phi needs k >= 1, got {k}")
    result = k
    for p, _ in _factor_pairs(k):
        result = result // p * (p - 1)
    return result


def divisors(value: int) -> list[int]:
    divs = [1]
    for p, t in _factor_pairs(value):
        divs = [d * p**e for d in divs for e in range(t + 1)]
    return sorted(divs)


def mult_order(r: int, m: int) -> int:
    """Order of r in the unit group of Z/mZ."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 1
    if gcd(r, m) != 1:
        raise ValueError(f"{r} is not a unit modulo {m}; order undefined")
    r %= m
    d = euler_phi(m)
    for p, _ in _factor_pairs(d):
        while d % p == 0 and pow(r, d // p, m) == 1:
            d //= p
    return d


def is_squarefree(value: int) -> bool:
    if value < 1:
        raise ValueError(f"is_squarefree needs value >= 1, got {value}")
    return all(t == 1 for _, t in _factor_pairs(value))


def crt_solve(residues) -> tuple[int, int]:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli.

    Returns ``(x, M)`` with ``0 <= x < M`` and ``M`` the product of moduli.
    """
    x, modulus = 0, 1
    for residue, mod in residues:
        if mod < 1:
            raise ValueError(f"modulus must be positive, got {mod}")
        if gcd(modulus, mod) != 1:
            raise ValueError(f"moduli are not pairwise coprime (modulus {mod})")
        # x + modulus*t = residue (mod mod)
        t = (residue - x) * pow(modulus, -1, mod) % mod
        x += modulus * t
        modulus *= mod
    return x % modulus, modulus


def v_p(value: int, p: int) -> int:
    """Exponent of the prime p in value."""
    t = 0
    while value % p == 0:
        value //= p
        t += 1
    return t
