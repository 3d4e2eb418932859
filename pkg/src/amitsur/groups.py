"""Metacyclic groups G(m, n, r) = <a, b | a^m = b^n = 1, b a b^-1 = a^r>.

Elements are kept in the normal form a^i b^j with 0 <= i < m, 0 <= j < n.
Because b^j a = a^(r^j) b^j, the product is

    (i, j) * (i', j') = (i + r^j i' mod m, j + j' mod n).

The isomorphism tests and enumerations below are brute force.  They are
meant for the "desk" range (orders up to ``DESK_BOUND``), which comfortably
covers everything below order 171.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd

from .arith import divisors, factorize, v_p
from .errors import InvalidPresentation, MixedOwners, OrderTooLarge

DESK_BOUND = 10_000


@dataclass(frozen=True)
class MetacyclicPresentation:
    """The triple (m, n, r); construct through :func:`validate`."""

    m: int
    n: int
    r: int
    _rpow: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise InvalidPresentation(f"m and n must be positive, got m={self.m}, n={self.n}")
        if not 0 <= self.r < self.m and not (self.m == 1 and self.r == 0):
            raise InvalidPresentation(f"r={self.r} is not reduced modulo m={self.m}")
        if pow(self.r, self.n, self.m) != 1 % self.m:
            raise InvalidPresentation(
                f"r^n = {self.r}^{self.n} = {pow(self.r, self.n, self.m)} (mod {self.m}), not 1"
            )
        object.__setattr__(self, "_rpow", tuple(pow(self.r, j, self.m) for j in range(self.n)))

    def __str__(self):
        return f"G({self.m},{self.n},{self.r})"

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.r)

    # -- tuple-level arithmetic (hot path) -------------------------------

    def mul_pair(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        return ((x[0] + self._rpow[x[1]] * y[0]) % self.m, (x[1] + y[1]) % self.n)

    def pow_pair(self, x: tuple[int, int], k: int) -> tuple[int, int]:
        i, j = x
        k %= self.order
        # a^i b^j raised to k is a^(i * (1 + r^j + ... + r^(j(k-1)))) b^(jk)
        q = self._rpow[j]
        total, term = 0, 1
        for _ in range(k):
            total += term
            term = term * q % self.m
        return (i * total % self.m, j * k % self.n)

    def order_pair(self, x: tuple[int, int]) -> int:
        i, j = x
        d = self.n // gcd(j, self.n)
        i_d, _ = self.pow_pair(x, d)
        return d * (self.m // gcd(i_d, self.m))

    def inv_pair(self, x: tuple[int, int]) -> tuple[int, int]:
        i, j = x
        jj = (-j) % self.n
        return ((-self._rpow[jj] * i) % self.m, jj)

    def pairs(self):
        return [(i, j) for j in range(self.n) for i in range(self.m)]

    # -- element-level API -------------------------------------------------

    def element(self, i: int = 0, j: int = 0) -> GroupElement:
        return GroupElement(i % self.m, j % self.n, self)

    @property
    def identity(self) -> GroupElement:
        return self.element(0, 0)

    @property
    def a(self) -> GroupElement:
        return self.element(1, 0)

    @property
    def b(self) -> GroupElement:
        return self.element(0, 1)

    def elements(self) -> list[GroupElement]:
        return [GroupElement(i, j, self) for i, j in self.pairs()]

    @cached_property
    def profile(self) -> tuple[tuple[int, int], ...]:
        """Sorted census {element order: count}; an isomorphism invariant."""
        return tuple(sorted(Counter(self.order_pair(x) for x in self.pairs()).items()))


@dataclass(frozen=True)
class GroupElement:
    i: int
    j: int
    owner: MetacyclicPresentation = field(repr=False)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return multiply(self, other)

    def __pow__(self, k: int) -> GroupElement:
        return GroupElement(*self.owner.pow_pair(self.pair, k), self.owner)

    def inverse(self) -> GroupElement:
        return GroupElement(*self.owner.inv_pair(self.pair), self.owner)

    @property
    def order(self) -> int:
        return self.owner.order_pair(self.pair)

    def __str__(self):
        parts = []
        if self.i:
            parts.append(f"a^{self.i}" if self.i != 1 else "a")
        if self.j:
            parts.append(f"b^{self.j}" if self.j != 1 else "b")
        return "".join(parts) or "1"


def validate(m: int, n: int, r: int) -> MetacyclicPresentation:
    """Check r^n = 1 (mod m) and return the presentation with r reduced.

    When n == 1 the generator b is trivial and the action is vacuous, so any
    r is accepted and stored as 1 (mod m).  When m == 1, r is stored as 0.
    """
    if m < 1 or n < 1:
        raise InvalidPresentation(f"m and n must be positive, got m={m}, n={n}")
    if n == 1:
        r = 1
    r %= m
    if pow(r, n, m) != 1 % m:
        raise InvalidPresentation(
            f"r^n = {r}^{n} = {pow(r, n, m)} (mod {m}), not 1; G({m},{n},{r}) is not a valid presentation"
        )
    return MetacyclicPresentation(m, n, r)


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    if x.owner != y.owner:
        raise MixedOwners(f"cannot multiply elements of {x.owner} and {y.owner}")
    return GroupElement(*x.owner.mul_pair(x.pair, y.pair), x.owner)


def element_order(x: GroupElement) -> int:
    return x.order


def _check_bound(G: MetacyclicPresentation, bound: int | None):
    limit = DESK_BOUND if bound is None else bound
    if G.order > limit:
        raise OrderTooLarge(f"|{G}| = {G.order} exceeds the desk bound {limit}")


@dataclass(frozen=True)
class Subgroup:
    owner: MetacyclicPresentation
    elements: frozenset
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_cyclic(self) -> bool:
        return any(self.owner.order_pair(x) == self.order for x in self.elements)


def _generated(G: MetacyclicPresentation, gens) -> frozenset:
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul_pair(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _greedy_generators(G: MetacyclicPresentation, elems) -> tuple:
    gens = []
    covered = frozenset({(0, 0)})
    for x in sorted(elems, key=lambda e: (-G.order_pair(e), e[1], e[0])):
        if x not in covered:
            gens.append(x)
            covered = _generated(G, gens)
        if len(covered) == len(elems):
            break
    return tuple(gens)


def center(G: MetacyclicPresentation) -> Subgroup:
    """a^i b^j is central iff r^j = 1 (mod m) and m | i (r - 1)."""
    m, r = G.m, G.r
    elems = frozenset(
        (i, j)
        for j in range(G.n)
        if G._rpow[j] == 1 % m
        for i in range(m)
        if (i * (r - 1)) % m == 0
    )
    return Subgroup(G, elems, _greedy_generators(G, elems))


def is_abelian(G: MetacyclicPresentation) -> bool:
    return G.r % G.m == 1 % G.m


def structure_flags(G: MetacyclicPresentation) -> dict:
    abelian = is_abelian(G)
    return {"is_abelian": abelian, "is_cyclic": abelian and gcd(G.m, G.n) == 1}


def is_cyclic(G: MetacyclicPresentation) -> bool:
    return structure_flags(G)["is_cyclic"]


def sylow_subgroup(G: MetacyclicPresentation, p: int) -> Subgroup:
    """A p-Sylow subgroup <a^(m/p^alpha)> <b^(n/p^beta)>.

    The first factor is characteristic in the normal subgroup <a>, so the
    product is a subgroup; it meets <b> trivially, giving order p^(alpha+beta).
    """
    if p < 2 or G.order % p:
        raise ValueError(f"{p} does not divide |{G}| = {G.order}")
    alpha, beta = v_p(G.m, p), v_p(G.n, p)
    step_a, step_b = G.m // p**alpha, G.n // p**beta
    elems = frozenset((step_a * u, step_b * v) for u in range(p**alpha) for v in range(p**beta))
    gens = tuple(g for g in ((step_a % G.m, 0), (0, step_b % G.n)) if g != (0, 0))
    # elems lies in <gens>; stability under right multiplication by gens gives equality
    if not all(G.mul_pair(x, g) in elems for x in elems for g in gens):
        raise AssertionError(f"constructed {p}-Sylow subgroup of {G} is not closed")
    return Subgroup(G, elems, gens)


def is_sylow_cyclic_direct(G: MetacyclicPresentation, bound: int | None = None) -> bool:
    """Every Sylow subgroup cyclic, checked by maximal element order."""
    _check_bound(G, bound)
    return all(sylow_subgroup(G, p).is_cyclic() for p in factorize(G.order).primes)


def satisfies_hbz(m: int, n: int, r: int) -> bool:
    """The coprimality (m, n(r-1)) = 1; gcd(m, 0) = m covers r = 1."""
    return gcd(m, n * (r - 1)) == 1


def _find_embedding(G: MetacyclicPresentation, H: MetacyclicPresentation):
    """Images (x, y) in H of G's generators a, b defining an isomorphism, or None.

    Any x, y with x^m = y^n = 1 and y x y^-1 = x^r give a homomorphism from
    G; it is bijective iff ord(x) = m, ord(y) = n and <x> meets <y> trivially
    (then |<x><y>| = mn = |H|).
    """
    if G.order != H.order:
        return None
    if G.profile != H.profile:
        return None
    xs = [x for x in H.pairs() if H.order_pair(x) == G.m]
    ys = [y for y in H.pairs() if H.order_pair(y) == G.n]
    for x in xs:
        cyclic_x = [(0, 0)]
        for _ in range(G.m - 1):
            cyclic_x.append(H.mul_pair(cyclic_x[-1], x))
        cyc = set(cyclic_x)
        x_r = cyclic_x[G.r % G.m] if G.m > 1 else (0, 0)
        for y in ys:
            if H.mul_pair(y, x) != H.mul_pair(x_r, y):
                continue
            z = y
            for _ in range(G.n - 1):
                if z in cyc:
                    break
                z = H.mul_pair(z, y)
            else:
                return x, y
    return None


def are_isomorphic(G: MetacyclicPresentation, H: MetacyclicPresentation, bound: int | None = None) -> bool:
    _check_bound(G, bound)
    _check_bound(H, bound)
    if G == H:
        return True
    return _find_embedding(G, H) is not None


def isomorphism(G: MetacyclicPresentation, H: MetacyclicPresentation, bound: int | None = None):
    """The map a -> x, b -> y as GroupElements of H, or None."""
    _check_bound(G, bound)
    _check_bound(H, bound)
    found = _find_embedding(G, H)
    if found is None:
        return None
    return H.element(*found[0]), H.element(*found[1])


@lru_cache(maxsize=None)
def presentations_of_order(N: int) -> tuple[MetacyclicPresentation, ...]:
    """All valid (m, n, r) with m n = N, degenerate ones canonicalized.

    Sorted by (n, m, r), so the first member of each isomorphism class is
    its preferred representative.
    """
    out = []
    for n in divisors(N):
        m = N // n
        if n == 1 or m == 1:
            out.append(validate(m, n, 0))
            continue
        out.extend(MetacyclicPresentation(m, n, r) for r in range(m) if pow(r, n, m) == 1)
    return tuple(sorted(set(out), key=lambda P: (P.n, P.m, P.r)))


@dataclass(frozen=True)
class IsoClass:
    """One isomorphism class of metacyclic presentations of a given order."""

    representative: MetacyclicPresentation
    members: tuple[MetacyclicPresentation, ...]
    sylow_cyclic: bool


@lru_cache(maxsize=None)
def _classes(N: int) -> tuple[IsoClass, ...]:
    reps: list[list[MetacyclicPresentation]] = []
    for P in presentations_of_order(N):
        for cls in reps:
            if are_isomorphic(cls[0], P, bound=N):
                cls.append(P)
                break
        else:
            reps.append([P])
    return tuple(IsoClass(cls[0], tuple(cls), is_sylow_cyclic_direct(cls[0], bound=N)) for cls in reps)


def enumerate_presentations(order: int, bound: int | None = None, sylow_cyclic_only: bool = False) -> list[IsoClass]:
    """Metacyclic presentations of the given order, one per isomorphism class.

    Only split metacyclic groups G(m, n, r) are counted; groups of the given
    order that are not of this form do not appear.
    """
    limit = DESK_BOUND if bound is None else bound
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if order > limit:
        raise OrderTooLarge(f"order {order} exceeds the desk bound {limit}")
    classes = list(_classes(order))
    if sylow_cyclic_only:
        classes = [c for c in classes if c.sylow_cyclic]
    return classes


def hbz_representation(G: MetacyclicPresentation, bound: int | None = None) -> MetacyclicPresentation | None:
    """A presentation isomorphic to G with (m, n(r-1)) = 1, if one exists."""
    _check_bound(G, bound)
    for H in presentations_of_order(G.order):
        if satisfies_hbz(H.m, H.n, H.r) and are_isomorphic(G, H, bound=G.order):
            return H
    return None


def sub_presentation(G: MetacyclicPresentation, q: int) -> MetacyclicPresentation:
    """<a><b^(n/q)> for q | n, realized as G(m, q, r^(n/q) mod m)."""
    if q < 1 or G.n % q:
        raise ValueError(f"{q} does not divide n = {G.n}")
    return validate(G.m, q, pow(G.r, G.n // q, G.m))
