"""Exact arithmetic in cyclotomic fields Q(zeta_k).

Elements are vectors in the power basis 1, zeta, ..., zeta^(phi(k)-1),
i.e. polynomials reduced modulo the k-th cyclotomic polynomial.  Internally
a number is an integer numerator vector over one positive common
denominator, kept in lowest terms; the public ``coeffs`` view is a tuple of
Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import divisors, euler_phi, factorize, mult_order
from .errors import ConductorMismatch, ZeroInput
from .linalg import nullspace

MAX_CONDUCTOR = 200


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = list(num)
    dq = len(den) - 1
    q = [0] * max(len(num) - dq, 1)
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k]
        if c:
            q[k - dq] = c
            for t in range(dq + 1):
                num[k - dq + t] -= c * den[t]
    rem = num[:dq] if dq else []
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_k, lowest degree first."""
    if k < 1:
        raise ValueError(f"conductor must be >= 1, got {k}")
    if k > MAX_CONDUCTOR:
        raise ValueError(f"conductor {k} exceeds the bound {MAX_CONDUCTOR}")
    poly = [-1] + [0] * (k - 1) + [1]
    for d in divisors(k):
        if d < k:
            poly, rem = _poly_divmod_monic(poly, list(cyclotomic_poly(d)))
            if any(rem):
                raise AssertionError(f"Phi_{d} does not divide x^{k} - 1")
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _normalize(nums, den):
    if den < 0:
        nums = [-v for v in nums]
        den = -den
    g = den
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g > 1:
        nums = [v // g for v in nums]
        den //= g
    return tuple(nums), den


class CyclotomicField:
    """Q(zeta_k); obtain instances through :func:`field`."""

    def __init__(self, k: int):
        self.k = k
        self.phi = euler_phi(k)
        self.modulus = cyclotomic_poly(k)
        # zeta^e reduced, for 0 <= e < 2 phi (products of basis vectors)
        powers = []
        cur = [1] + [0] * (self.phi - 1)
        for _ in range(max(2 * self.phi, k)):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for t in range(self.phi):
                    cur[t] -= top * self.modulus[t]
        self._powers = powers

    def __repr__(self):
        return f"Q(zeta_{self.k})"

    def power_vector(self, e: int) -> tuple[int, ...]:
        return self._powers[e % self.k]

    def _make(self, nums, den=1) -> CyclotomicNumber:
        nums, den = _normalize(nums, den)
        return CyclotomicNumber(self, nums, den)

    def zero(self) -> CyclotomicNumber:
        return CyclotomicNumber(self, (0,) * self.phi, 1)

    def one(self) -> CyclotomicNumber:
        return self.from_rational(1)

    def from_rational(self, q) -> CyclotomicNumber:
        q = Fraction(q)
        return self._make([q.numerator] + [0] * (self.phi - 1), q.denominator)

    def zeta(self, e: int = 1) -> CyclotomicNumber:
        return CyclotomicNumber(self, self.power_vector(e), 1)

    def from_coeffs(self, coeffs) -> CyclotomicNumber:
        """Element from power-basis coefficients (any length; reduced mod Phi_k)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        return self._make(self._reduce(ints), den)

    def _reduce(self, ints) -> list[int]:
        out = [0] * self.phi
        for e, c in enumerate(ints):
            if c:
                vec = self._powers[e] if e < len(self._powers) else self.power_vector(e)
                for t, v in enumerate(vec):
                    if v:
                        out[t] += c * v
        return out

    def element(self, expr: dict) -> CyclotomicNumber:
        """Sum of coeff * zeta^e for a mapping {e: coeff}."""
        fr = {e % self.k: Fraction(0) for e in expr}
        for e, c in expr.items():
            fr[e % self.k] += Fraction(c)
        poly = [Fraction(0)] * self.k
        for e, c in fr.items():
            poly[e] = c
        return self.from_coeffs(poly)


@lru_cache(maxsize=None)
def field(k: int) -> CyclotomicField:
    if k < 1:
        raise ValueError(f"conductor must be >= 1, got {k}")
    if k > MAX_CONDUCTOR:
        raise ValueError(f"conductor {k} exceeds the bound {MAX_CONDUCTOR}")
    return CyclotomicField(k)


class CyclotomicNumber:
    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, fld: CyclotomicField, nums: tuple[int, ...], den: int):
        self.field = fld
        self.nums = nums
        self.den = den
        self._hash = None

    @property
    def conductor(self) -> int:
        return self.field.k

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.field is not self.field:
                raise ConductorMismatch(f"conductors {self.conductor} and {other.conductor} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.field._make([x + y for x, y in zip(self.nums, o.nums)], self.den)
        return self.field._make([x * o.den + y * self.den for x, y in zip(self.nums, o.nums)], self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.field, tuple(-v for v in self.nums), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        phi = self.field.phi
        a, b = self.nums, o.nums
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return self.field._make(self.field._reduce(conv), self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> CyclotomicNumber:
        """Inverse via the extended Euclidean algorithm against Phi_k.

        Runs on integer polynomials with pseudo-division.  Each remainder r
        is carried with s such that r = s * (den * self) mod Phi_k; both are
        rescaled by their joint content, which keeps coefficients small.
        """
        if self.is_zero():
            raise ZeroInput("zero has no inverse in a field")
        r0, s0 = list(self.field.modulus), [0]
        r1, s1 = _int_trim(list(self.nums)), [1]
        while len(r1) > 1:
            r0, s0 = _pseudo_reduce(r0, s0, r1, s1)
            r0, r1 = r1, r0
            s0, s1 = s1, s0
        c = r1[0]
        return self.field.from_coeffs([Fraction(v * self.den, c) for v in s1])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.field is other.field and self.den == other.den and self.nums == other.nums

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.k, self.nums, self.den))
        return self._hash

    def __repr__(self):
        return f"CyclotomicNumber(k={self.conductor}, {self})"

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _int_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _pseudo_reduce(a, sa, b, sb):
    """Pseudo-remainder of a by b, applying the same row operations to sa."""
    a, sa = list(a), list(sa)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and any(a):
        shift = len(a) - 1 - db
        c = a[-1]
        a = [lead * v for v in a]
        sa = [lead * v for v in sa]
        for t, v in enumerate(b):
            a[shift + t] -= c * v
        if len(sa) < shift + len(sb):
            sa.extend([0] * (shift + len(sb) - len(sa)))
        for t, v in enumerate(sb):
            sa[shift + t] -= c * v
        a.pop()  # leading coefficient is now zero
        a = _int_trim(a) if a else [0]
        g = 0
        for v in a:
            g = gcd(g, v)
        for v in sa:
            g = gcd(g, v)
        if g > 1:
            a = [v // g for v in a]
            sa = [v // g for v in sa]
        if len(a) == 1 and db == 0:
            break
    return a, _int_trim(sa)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _poly_sub(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]


def _poly_divmod(num, den):
    num = list(num)
    dq = len(den) - 1
    lead = den[-1]
    q = [Fraction(0)] * max(len(num) - dq, 1)
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k] / lead
        if c:
            q[k - dq] = c
            for t in range(dq + 1):
                num[k - dq + t] -= c * den[t]
    return q, _trim(num[:dq] if dq else [Fraction(0)])


@dataclass(frozen=True)
class GaloisAutomorphism:
    """zeta_k -> zeta_k^s."""

    k: int
    s: int

    def __post_init__(self):
        if gcd(self.s, self.k) != 1:
            raise ValueError(f"exponent {self.s} is not a unit modulo {self.k}")
        object.__setattr__(self, "s", self.s % self.k)

    @property
    def order(self) -> int:
        return mult_order(self.s, self.k)

    def power(self, e: int) -> GaloisAutomorphism:
        return GaloisAutomorphism(self.k, pow(self.s, e % self.order, self.k) if self.k > 1 else 0)

    def __call__(self, x: CyclotomicNumber) -> CyclotomicNumber:
        return apply_galois(self, x)


def apply_galois(sigma: GaloisAutomorphism, x: CyclotomicNumber) -> CyclotomicNumber:
    if x.conductor != sigma.k:
        raise ConductorMismatch(f"automorphism of Q(zeta_{sigma.k}) applied to element of Q(zeta_{x.conductor})")
    fld = x.field
    out = [0] * fld.phi
    for e, c in enumerate(x.nums):
        if c:
            for t, v in enumerate(fld.power_vector(e * sigma.s)):
                if v:
                    out[t] += c * v
    return fld._make(out, x.den)


def fixed_subspace(sigma: GaloisAutomorphism) -> list[CyclotomicNumber]:
    """A Q-basis of the fixed field of sigma, as the kernel of sigma - 1."""
    fld = field(sigma.k)
    cols = []
    for e in range(fld.phi):
        img = fld.power_vector(e * sigma.s)
        cols.append([img[t] - (1 if t == e else 0) for t in range(fld.phi)])
    rows = [[cols[c][t] for c in range(fld.phi)] for t in range(fld.phi)]
    basis = nullspace(rows, fld.phi)
    out = [fld.from_coeffs(v) for v in basis]
    for x in out:
        if apply_galois(sigma, x) != x:
            raise AssertionError(f"fixed-field basis element {x} is moved by sigma")
    return out


def min_poly_over_Q(x: CyclotomicNumber) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of x over Q, lowest degree first."""
    fld = x.field
    powers = [fld.one()]
    while True:
        powers.append(powers[-1] * x)
        cols = [p.coeffs for p in powers]
        rows = [[cols[c][t] for c in range(len(cols))] for t in range(fld.phi)]
        kernel = nullspace(rows, len(cols))
        if kernel:
            v = kernel[0]
            lead = v[-1]
            return tuple(c / lead for c in v)


def format_poly(coeffs, var: str = "t") -> str:
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[e])
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if mono and abs(c) == 1:
            body = mono
        elif mono:
            body = f"{abs(c)}{mono}"
        else:
            body = str(abs(c))
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def quadratic_gauss_sum(k: int, p: int) -> CyclotomicNumber:
    """Sum of (t/p) zeta_p^t in Q(zeta_k), for an odd prime p dividing k.

    Its square is p when p = 1 (mod 4) and -p when p = 3 (mod 4).
    """
    if p % 2 == 0 or k % p or len(factorize(p)) != 1 or factorize(p).factors[0][1] != 1:
        raise ValueError(f"{p} must be an odd prime dividing {k}")
    fld = field(k)
    step = k // p
    squares = {t * t % p for t in range(1, p)}
    return fld.element({step * t: (1 if t in squares else -1) for t in range(1, p)})
