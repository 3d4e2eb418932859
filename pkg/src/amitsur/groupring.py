"""The integer group ring Z[G(m, n, r)] and the telescoping identity.

Starting from s = 1 + b + ... + b^(n-1), repeatedly conjugating by a,
subtracting, and cancelling one factor of b on the right turns s into the
ordered product

    (a^(r^(n-1) - 1) - 1) (a^(r^(n-2) - 1) - 1) ... (a^(r - 1) - 1).

In any domain containing G with b != 1, s is zero, so that product is zero
too.  :func:`verify_eq_3_4` performs the rewriting inside Z[G], where
"cancelling b" is right multiplication by the unit b^(n-1), and checks the
terminal element against the product computed by plain multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import mult_order
from .errors import InternalConsistencyError, MixedOwners, NotRightDivisibleByB
from .groups import MetacyclicPresentation


class GroupRingElement:
    __slots__ = ("owner", "terms")

    def __init__(self, owner: MetacyclicPresentation, terms=None):
        self.owner = owner
        clean = {}
        for (i, j), c in (terms or {}).items():
            key = (i % owner.m, j % owner.n)
            clean[key] = clean.get(key, 0) + c
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def _raw(cls, owner, terms):
        obj = cls.__new__(cls)
        obj.owner = owner
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, G):
        return cls._raw(G, {})

    @classmethod
    def one(cls, G):
        return cls._raw(G, {(0, 0): 1})

    @classmethod
    def basis(cls, G, i=0, j=0, coeff=1):
        return cls(G, {(i, j): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.owner != self.owner:
            raise MixedOwners(f"cannot combine elements of Z[{self.owner}] and Z[{other.owner}]")
        return None

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.one(self.owner) * other
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return GroupRingElement._raw(self.owner, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement._raw(self.owner, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.one(self.owner) * other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return GroupRingElement.zero(self.owner)
            return GroupRingElement._raw(self.owner, {k: c * other for k, c in self.terms.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        G = self.owner
        out: dict = {}
        for x, c in self.terms.items():
            for y, e in other.terms.items():
                z = G.mul_pair(x, y)
                out[z] = out.get(z, 0) + c * e
        return GroupRingElement._raw(G, {k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.one(self.owner) * other
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.owner == other.owner and self.terms == other.terms

    def __hash__(self):
        return hash((self.owner, frozenset(self.terms.items())))

    def b_degree(self) -> int:
        """Largest b-exponent in the support; -1 for zero."""
        return max((j for _, j in self.terms), default=-1)

    def __repr__(self):
        return f"GroupRingElement({self.owner}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-kv[0][1], kv[0][0])):
            mono = "".join(
                s
                for s in (
                    (f"a^{i}" if i > 1 else "a") if i else "",
                    (f"b^{j}" if j > 1 else "b") if j else "",
                )
            )
            if not mono:
                mono_str = str(abs(c))
            elif abs(c) == 1:
                mono_str = mono
            else:
                mono_str = f"{abs(c)}{mono}"
            pieces.append(("-" if c < 0 else "+", mono_str))
        head_sign, head = pieces[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, mono in pieces[1:]:
            text += f" {sign} {mono}"
        return text

    def to_dict(self) -> list:
        return [[i, j, c] for (i, j), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))]


def gr_add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    if x.owner != y.owner:
        raise MixedOwners(f"cannot add elements of Z[{x.owner}] and Z[{y.owner}]")
    return x + y


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    if x.owner != y.owner:
        raise MixedOwners(f"cannot multiply elements of Z[{x.owner}] and Z[{y.owner}]")
    return x * y


def conjugate_by_a(x: GroupRingElement) -> GroupRingElement:
    """a^-1 x a."""
    G = x.owner
    a = GroupRingElement.basis(G, 1, 0)
    a_inv = GroupRingElement.basis(G, -1, 0)
    return a_inv * x * a


def telescope_step(x: GroupRingElement) -> GroupRingElement:
    """(a^-1 x a - x) with one factor b cancelled on the right.

    The zero element passes through unchanged.
    """
    if x.is_zero():
        return x
    if x.b_degree() < 1:
        raise NotRightDivisibleByB(f"{x} has no term of positive b-degree to cancel")
    diff = conjugate_by_a(x) - x
    stuck = [k for k in diff.terms if k[1] == 0]
    if stuck:
        raise NotRightDivisibleByB(f"difference {diff} has b-degree-0 terms {stuck}")
    G = x.owner
    b_inv = GroupRingElement.basis(G, 0, G.n - 1)
    out = diff * b_inv
    if not out.is_zero() and out.b_degree() >= x.b_degree():
        raise InternalConsistencyError(f"b-degree did not drop: {x} -> {out}")
    return out


def sum_of_b_powers(G: MetacyclicPresentation) -> GroupRingElement:
    return GroupRingElement(G, {(0, j): 1 for j in range(G.n)})


def identity_factor(G: MetacyclicPresentation, i: int) -> GroupRingElement:
    """a^(r^i - 1) - 1."""
    e = (pow(G.r, i, G.m) - 1) % G.m
    return GroupRingElement.basis(G, e, 0) - GroupRingElement.one(G)


def ordered_product(G: MetacyclicPresentation) -> GroupRingElement:
    """The product of a^(r^i - 1) - 1 for i = n-1 down to 1, left to right."""
    out = GroupRingElement.one(G)
    for i in range(G.n - 1, 0, -1):
        out = gr_mul(out, identity_factor(G, i))
    return out


@dataclass(frozen=True)
class Factor:
    i: int
    exponent: int  # r^i - 1 reduced mod m
    vanishes: bool  # r^i = 1 (mod m)
    element_is_zero: bool


@dataclass(frozen=True)
class IdentityCertificate:
    presentation: MetacyclicPresentation
    steps: tuple[GroupRingElement, ...]
    terminal: GroupRingElement
    product: GroupRingElement
    factors: tuple[Factor, ...]
    order_of_r: int

    @property
    def equal(self) -> bool:
        return self.terminal == self.product

    @property
    def vanishing_indices(self) -> list[int]:
        return [f.i for f in self.factors if f.vanishes]

    @property
    def obstruction(self) -> bool:
        """True when this certifies that G embeds in no domain."""
        n = self.presentation.n
        return n > 1 and self.order_of_r == n and not self.vanishing_indices and not self.product.is_zero()

    def explanation(self) -> str:
        G = self.presentation
        if self.obstruction:
            return (
                f"o(r) = {G.n} = n, so no factor vanishes; in a domain containing {G}, "
                "1 + b + ... + b^(n-1) = 0 forces this nonzero product to be 0, "
                "so some a^(r^i - 1) = 1 with 1 <= i < n, contradicting o(r) = n"
            )
        if self.vanishing_indices:
            return f"factors at i = {self.vanishing_indices} vanish; the identity gives no obstruction"
        return f"o(r) = {self.order_of_r} != n = {G.n}; the identity gives no obstruction"

    def to_dict(self, verbose: bool = False) -> dict:
        G = self.presentation
        out = {
            "presentation": list(G.triple),
            "steps": G.n - 1,
            "equal": self.equal,
            "order_of_r": self.order_of_r,
            "product": str(self.product),
            "product_is_zero": self.product.is_zero(),
            "factors": [
                {"i": f.i, "exponent": f.exponent, "vanishes": f.vanishes, "element_is_zero": f.element_is_zero}
                for f in self.factors
            ],
            "obstruction": self.obstruction,
            "explanation": self.explanation(),
        }
        if verbose:
            out["snapshots"] = [str(s) for s in self.steps]
        return out


def verify_eq_3_4(G: MetacyclicPresentation) -> IdentityCertificate:
    """Telescope 1 + b + ... + b^(n-1) and compare with the ordered product."""
    if G.n < 2:
        raise ValueError(f"the telescoping identity needs n >= 2, got n = {G.n}")
    x = sum_of_b_powers(G)
    steps = [x]
    for _ in range(G.n - 1):
        x = telescope_step(x)
        steps.append(x)
    product = ordered_product(G)
    if x != product:
        raise InternalConsistencyError(f"telescoped element {x} differs from ordered product {product} in Z[{G}]")
    factors = []
    for i in range(1, G.n):
        e = (pow(G.r, i, G.m) - 1) % G.m
        factors.append(Factor(i, e, pow(G.r, i, G.m) == 1 % G.m, identity_factor(G, i).is_zero()))
    r_order = mult_order(G.r, G.m) if gcd(G.r, G.m) == 1 else 0
    return IdentityCertificate(G, tuple(steps), x, product, tuple(factors), r_order)
