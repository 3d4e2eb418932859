"""Cyclic algebras L + Lb + ... + Lb^(d-1) over cyclotomic fields L.

Multiplication is determined by b l = sigma(l) b for l in L and b^d = omega,
where sigma generates a cyclic group of order d acting on L = Q(zeta_k) and
omega is fixed by sigma.  The center is the fixed field F of sigma and
dim_Q = d * phi(k) = d^2 * dim_Q F.

Invertibility is decided by exact linear algebra.  ``alg_inv`` solves the
d x d system over L given by viewing left multiplication as a map of right
L-modules; ``alg_inv_regular`` solves the full d*phi(k) system over Q.
The two routes are independent and are cross-checked in the tests.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property

from . import linalg
from .arith import euler_phi, factorize
from .cyclotomic import (
    CyclotomicNumber,
    GaloisAutomorphism,
    apply_galois,
    field,
    fixed_subspace,
    format_poly,
    min_poly_over_Q,
    quadratic_gauss_sum,
)
from .errors import ClosureExceedsBound, MixedOwners, SingularElement, TwistNotFixed, ZeroInput
from .groups import MetacyclicPresentation, are_isomorphic, validate

CLOSURE_BOUND = 10_000
SAMPLING_DISTRIBUTION = "uniform integer coordinates in [-height, height] on the basis zeta^u b^i, zero rejected"


class CyclicAlgebra:
    def __init__(self, k: int, s: int, omega: CyclotomicNumber):
        self.L = field(k)
        self.sigma = GaloisAutomorphism(k, s)
        self.degree = self.sigma.order
        if omega.field is not self.L:
            raise TwistNotFixed(f"twist must lie in Q(zeta_{k})")
        if omega.is_zero():
            raise TwistNotFixed("twist must be nonzero")
        if apply_galois(self.sigma, omega) != omega:
            raise TwistNotFixed(f"sigma(omega) != omega for omega = {omega}")
        self.omega = omega
        d = self.degree
        self._sig = [self.sigma.power(i) for i in range(d)]
        self._sig_inv = [self.sigma.power(-i) for i in range(d)]

    @property
    def k(self) -> int:
        return self.L.k

    @property
    def s(self) -> int:
        return self.sigma.s

    @property
    def dim_Q(self) -> int:
        return self.degree * self.L.phi

    @property
    def center_dim(self) -> int:
        return self.L.phi // self.degree

    @cached_property
    def center_basis(self) -> list[CyclotomicNumber]:
        return fixed_subspace(self.sigma)

    def __repr__(self):
        return f"CyclicAlgebra(k={self.k}, s={self.s}, omega={self.omega})"

    def __eq__(self, other):
        return (
            isinstance(other, CyclicAlgebra)
            and (self.k, self.s) == (other.k, other.s)
            and self.omega == other.omega
        )

    def __hash__(self):
        return hash((self.k, self.s, self.omega))

    # -- element constructors ---------------------------------------------

    def element(self, coords) -> AlgebraElement:
        coords = tuple(coords)
        if len(coords) != self.degree:
            raise ValueError(f"need {self.degree} coordinates, got {len(coords)}")
        return AlgebraElement(self, tuple(c if isinstance(c, CyclotomicNumber) else self.L.from_rational(c) for c in coords))

    def scalar(self, x) -> AlgebraElement:
        if not isinstance(x, CyclotomicNumber):
            x = self.L.from_rational(x)
        return self.element([x] + [self.L.zero()] * (self.degree - 1))

    def one(self) -> AlgebraElement:
        return self.scalar(1)

    def zero(self) -> AlgebraElement:
        return self.element([self.L.zero()] * self.degree)

    def zeta(self, e: int = 1) -> AlgebraElement:
        return self.scalar(self.L.zeta(e))

    @property
    def b(self) -> AlgebraElement:
        if self.degree == 1:
            return self.scalar(self.omega)
        coords = [self.L.zero()] * self.degree
        coords[1] = self.L.one()
        return self.element(coords)

    def from_rational_vector(self, vec) -> AlgebraElement:
        """Element with Q-coordinates on the basis zeta^u b^i (u fastest)."""
        phi = self.L.phi
        return self.element([self.L.from_coeffs(vec[i * phi : (i + 1) * phi]) for i in range(self.degree)])

    def rational_vector(self, x: AlgebraElement) -> list[Fraction]:
        return [c for coord in x.coords for c in coord.coeffs]

    def basis(self) -> list[AlgebraElement]:
        return [self.from_rational_vector([int(t == e) for t in range(self.dim_Q)]) for e in range(self.dim_Q)]


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    owner: CyclicAlgebra = dc_field(repr=False)
    coords: tuple

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            return False
        if other.owner != self.owner:
            raise MixedOwners("elements belong to different cyclic algebras")
        return True

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = self.owner.scalar(other)
        if not self._check(other):
            return NotImplemented
        return AlgebraElement(self.owner, tuple(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.owner, tuple(-x for x in self.coords))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = self.owner.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        K = self.owner
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = K.scalar(other)
        if not self._check(other):
            return NotImplemented
        d = K.degree
        out = [K.L.zero() for _ in range(d)]
        for i, c in enumerate(self.coords):
            if c.is_zero():
                continue
            for j, e in enumerate(other.coords):
                if e.is_zero():
                    continue
                # c b^i e b^j = c sigma^i(e) b^(i+j)
                term = c * apply_galois(K._sig[i], e)
                t = i + j
                if t >= d:
                    term = term * K.omega
                    t -= d
                out[t] = out[t] + term
        return AlgebraElement(K, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self.owner.scalar(other) * self
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return alg_inv(self) ** (-e)
        out = self.owner.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = self.owner.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.owner == other.owner and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coords):
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("b" if i == 1 else f"b^{i}")
            parts.append(f"({c}){mono}" if mono else f"({c})")
        return " + ".join(parts) or "0"


def build(k: int, s: int, omega: CyclotomicNumber) -> CyclicAlgebra:
    return CyclicAlgebra(k, s, omega)


def alg_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.owner != y.owner:
        raise MixedOwners("elements belong to different cyclic algebras")
    return x + y


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.owner != y.owner:
        raise MixedOwners("elements belong to different cyclic algebras")
    return x * y


def _left_matrix_over_L(x: AlgebraElement) -> list[list[CyclotomicNumber]]:
    # Write elements as sum_t b^t mu_t (coefficients on the right).  Then
    # x b^j = sum_t b^t lam[t][j] with lam[t][j] = sigma^-t(c_i) (* omega on
    # wrap-around), i = t - j mod d; left multiplication by x is right L-linear.
    K = x.owner
    d = K.degree
    lam = [[None] * d for _ in range(d)]
    for t in range(d):
        for j in range(d):
            i = (t - j) % d
            v = apply_galois(K._sig_inv[t], x.coords[i])
            if i + j >= d:
                v = v * K.omega
            lam[t][j] = v
    return lam


def alg_inv(x: AlgebraElement) -> AlgebraElement:
    """Two-sided inverse, or SingularElement if x is a zero divisor."""
    if x.is_zero():
        raise ZeroInput("zero is not invertible")
    K = x.owner
    d = K.degree
    A = _left_matrix_over_L(x)
    rhs = [K.L.one()] + [K.L.zero()] * (d - 1)
    aug = [A[t] + [rhs[t]] for t in range(d)]
    for col in range(d):
        piv = next((rr for rr in range(col, d) if not aug[rr][col].is_zero()), None)
        if piv is None:
            raise SingularElement(f"{x} is a nonzero zero divisor in {K}")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = aug[col][col].inverse()
        aug[col] = [v * inv_p for v in aug[col]]
        for rr in range(d):
            if rr != col and not aug[rr][col].is_zero():
                f = aug[rr][col]
                aug[rr] = [u - f * v for u, v in zip(aug[rr], aug[col])]
    mu = [aug[t][d] for t in range(d)]
    # b^j mu_j = sigma^j(mu_j) b^j
    y = AlgebraElement(K, tuple(apply_galois(K._sig[j], mu[j]) for j in range(d)))
    if x * y != K.one():
        raise AssertionError(f"computed inverse of {x} fails x * y = 1")
    return y


def regular_matrix(x: AlgebraElement) -> list[list[Fraction]]:
    """Matrix over Q of y -> x y on the basis zeta^u b^i."""
    K = x.owner
    cols = [K.rational_vector(x * e) for e in K.basis()]
    return [[cols[c][r] for c in range(K.dim_Q)] for r in range(K.dim_Q)]


def alg_inv_regular(x: AlgebraElement) -> AlgebraElement:
    """Inverse by solving the dim_Q x dim_Q system x y = 1 over Q."""
    if x.is_zero():
        raise ZeroInput("zero is not invertible")
    K = x.owner
    rhs = K.rational_vector(K.one())
    try:
        sol = linalg.solve(regular_matrix(x), rhs)
    except SingularElement:
        raise SingularElement(f"{x} is a nonzero zero divisor in {K}") from None
    return K.from_rational_vector(sol)


def is_invertible(x: AlgebraElement) -> bool:
    try:
        alg_inv(x)
    except SingularElement:
        return False
    return True


# -- group embeddings -------------------------------------------------------


@dataclass
class EmbeddedGroup:
    """A finite group closed up inside the unit group of a cyclic algebra."""

    algebra: CyclicAlgebra
    generators: dict
    elements: list

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, x: AlgebraElement) -> int:
        one = self.algebra.one()
        y, e = x, 1
        while y != one:
            y = y * x
            e += 1
            if e > self.order:
                raise AssertionError("element order exceeds group order")
        return e

    @cached_property
    def profile(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(Counter(self.element_order(x) for x in self.elements).items()))

    def order_profile(self) -> dict[int, int]:
        return dict(self.profile)

    @property
    def is_cyclic(self) -> bool:
        return any(o == self.order for o, _ in self.profile)


def close_group(K: CyclicAlgebra, generators: dict, bound: int = CLOSURE_BOUND) -> EmbeddedGroup:
    gens = list(generators.values())
    one = K.one()
    seen = {one}
    order = [one]
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
                    if len(seen) > bound:
                        raise ClosureExceedsBound(f"generated group exceeds {bound} elements")
        frontier = nxt
    return EmbeddedGroup(K, dict(generators), order)


def _smallest_power(x, target, one, limit):
    y = one
    for e in range(limit):
        if y == target:
            return e
        y = y * x
    return None


@dataclass
class EmbeddingCertificate:
    algebra: CyclicAlgebra
    group: EmbeddedGroup
    relations: dict
    presentation: MetacyclicPresentation | None
    isomorphic_to: MetacyclicPresentation | None
    isomorphic: bool | None

    @property
    def ok(self) -> bool:
        return all(self.relations.values()) and self.isomorphic is not False

    def to_dict(self) -> dict:
        return {
            "group_order": self.group.order,
            "is_cyclic": self.group.is_cyclic,
            "element_orders": {str(o): c for o, c in self.group.profile},
            "relations": dict(self.relations),
            "presentation": list(self.presentation.triple) if self.presentation else None,
            "expected": list(self.isomorphic_to.triple) if self.isomorphic_to else None,
            "isomorphic": self.isomorphic,
            "ok": self.ok,
        }


def verify_group_embedding(
    K: CyclicAlgebra,
    a_elem: AlgebraElement,
    b_elem: AlgebraElement,
    expected: MetacyclicPresentation | None = None,
    bound: int = CLOSURE_BOUND,
) -> EmbeddingCertificate:
    """Close <a, b> in K and identify it as a metacyclic G(m, n, r).

    m and n are read off as the orders of a and b, r from b a b^-1 = a^r.
    Relations and a group of order m n then give an isomorphism
    G(m, n, r) -> <a, b>; the result is compared with ``expected``.
    """
    one = K.one()
    grp = close_group(K, {"a": a_elem, "b": b_elem}, bound)
    m = grp.element_order(a_elem)
    n = grp.element_order(b_elem)
    conj = b_elem * a_elem * alg_inv(b_elem)
    r = _smallest_power(a_elem, conj, one, m)
    relations = {
        f"a^{m} = 1": a_elem**m == one,
        f"b^{n} = 1": b_elem**n == one,
        "b a b^-1 in <a>": r is not None,
    }
    presentation = None
    if r is not None:
        relations[f"b a b^-1 = a^{r}"] = b_elem * a_elem == a_elem**r * b_elem
        try:
            presentation = validate(m, n, r)
        except ValueError:
            relations[f"r^n = 1 mod m"] = False
    if presentation is not None:
        relations["|<a,b>| = m n"] = grp.order == presentation.order
        relations["element orders match"] = dict(grp.profile) == dict(presentation.profile)
    isomorphic = None
    if expected is not None:
        isomorphic = presentation is not None and grp.order == presentation.order and are_isomorphic(presentation, expected)
    return EmbeddingCertificate(K, grp, relations, presentation, expected, isomorphic)


@dataclass
class DicyclicCertificate:
    algebra: CyclicAlgebra
    group: EmbeddedGroup
    n: int
    relations: dict

    @property
    def ok(self) -> bool:
        return all(self.relations.values())

    def to_dict(self) -> dict:
        return {
            "group_order": self.group.order,
            "is_cyclic": self.group.is_cyclic,
            "element_orders": {str(o): c for o, c in self.group.profile},
            "dicyclic_n": self.n,
            "relations": dict(self.relations),
            "ok": self.ok,
        }


def verify_dicyclic_embedding(K: CyclicAlgebra, x: AlgebraElement, y: AlgebraElement, n: int) -> DicyclicCertificate:
    """Check x^(2n) = 1, y^2 = x^n, y x y^-1 = x^-1 and |<x, y>| = 4n."""
    one = K.one()
    grp = close_group(K, {"x": x, "y": y})
    relations = {
        f"x^{2 * n} = 1": x ** (2 * n) == one,
        f"x has order {2 * n}": grp.element_order(x) == 2 * n,
        f"y^2 = x^{n}": y * y == x**n,
        "y x y^-1 = x^-1": y * x * alg_inv(y) == alg_inv(x),
        f"|<x,y>| = {4 * n}": grp.order == 4 * n,
        "unique involution": grp.order_profile().get(2, 0) == 1,
    }
    return DicyclicCertificate(K, grp, n, relations)


# -- center -----------------------------------------------------------------


@dataclass
class CenterCertificate:
    algebra: CyclicAlgebra
    basis: list
    commutes: bool
    expected_dim: int
    computed_dim: int
    quadratic: list  # (label, element, minimal polynomial)

    @property
    def ok(self) -> bool:
        return self.commutes and self.computed_dim == self.expected_dim == len(self.basis)

    def to_dict(self) -> dict:
        return {
            "dim_Q": self.expected_dim,
            "fixed_basis_dim": len(self.basis),
            "kernel_dim": self.computed_dim,
            "basis_commutes": self.commutes,
            "quadratic_elements": [
                {"label": label, "element": str(x), "min_poly": format_poly(p)} for label, x, p in self.quadratic
            ],
            "ok": self.ok,
        }


def center_kernel_dim(K: CyclicAlgebra) -> int:
    """dim_Q of {x : x zeta = zeta x, x b = b x}, from the commutator matrix."""
    zeta, b = K.zeta(1), K.b
    cols = []
    for e in K.basis():
        cols.append(K.rational_vector(e * zeta - zeta * e) + K.rational_vector(e * b - b * e))
    rows = [[cols[c][t] for c in range(K.dim_Q)] for t in range(2 * K.dim_Q)]
    return K.dim_Q - linalg.rank(rows)


def center_probe(K: CyclicAlgebra) -> CenterCertificate:
    """Center = fixed field of sigma: check commutation and the dimension.

    Also reports the square roots of +-p (quadratic Gauss sums, one for each
    odd prime p dividing k) that lie in the center.
    """
    basis = K.center_basis
    zeta, b = K.zeta(1), K.b
    commutes = all((K.scalar(f) * zeta == zeta * K.scalar(f)) and (K.scalar(f) * b == b * K.scalar(f)) for f in basis)
    quadratic = []
    for p in factorize(K.k).primes:
        if p == 2:
            continue
        g = quadratic_gauss_sum(K.k, p)
        if apply_galois(K.sigma, g) == g:
            quadratic.append((f"gauss_sum_{p}", g, min_poly_over_Q(g)))
    return CenterCertificate(K, basis, commutes, euler_phi(K.k) // K.degree, center_kernel_dim(K), quadratic)


# -- division sampling --------------------------------------------------------


@dataclass
class SamplingReport:
    k: int
    s: int
    omega: str
    trials: int
    height: int
    seed: int
    invertible: int
    singular: list = dc_field(default_factory=list)
    distribution: str = SAMPLING_DISTRIBUTION

    def to_dict(self) -> dict:
        return {
            "algebra": {"k": self.k, "s": self.s, "omega": self.omega},
            "trials": self.trials,
            "height": self.height,
            "seed": self.seed,
            "distribution": self.distribution,
            "invertible": self.invertible,
            "singular_count": len(self.singular),
            "singular": self.singular,
        }


def sample_element(K: CyclicAlgebra, height: int, rng: random.Random) -> AlgebraElement:
    while True:
        vec = [rng.randint(-height, height) for _ in range(K.dim_Q)]
        if any(vec):
            return K.from_rational_vector(vec)


def division_sample(K: CyclicAlgebra, trials: int, height: int = 10, seed: int = 0) -> SamplingReport:
    """Try to invert ``trials`` random nonzero elements of bounded height.

    Trial t draws from ``random.Random(f"{seed}:{t}")``, so every trial is
    reproducible on its own.  A singular element is a zero divisor.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    report = SamplingReport(K.k, K.s, str(K.omega), trials, height, seed, 0)
    for t in range(trials):
        x = sample_element(K, height, random.Random(f"{seed}:{t}"))
        if is_invertible(x):
            report.invertible += 1
        else:
            report.singular.append({"trial": t, "coords": [int(v) for v in K.rational_vector(x)]})
    return report


# -- presets ----------------------------------------------------------------


@dataclass
class Preset:
    name: str
    algebra: CyclicAlgebra
    generators: dict
    expected: MetacyclicPresentation | None = None
    dicyclic_n: int | None = None


def preset(name: str) -> Preset:
    """'63', '117', 'quaternion-N' (N >= 2) or 'split-63' (omega = 1)."""
    if name == "63":
        K = build(21, 16, field(21).zeta(7))
        return Preset(name, K, {"a": K.zeta(3), "b": K.b}, expected=validate(7, 9, 2))
    if name == "117":
        K = build(39, 22, field(39).zeta(13))
        return Preset(name, K, {"a": K.zeta(3), "b": K.b}, expected=validate(13, 9, 9))
    if name == "split-63":
        K = build(21, 16, field(21).one())
        return Preset(name, K, {"a": K.zeta(3), "b": K.b})
    if name.startswith("quaternion-"):
        n = int(name.split("-", 1)[1])
        if n < 2:
            raise ValueError("quaternion-N needs N >= 2")
        k = 2 * n
        K = build(k, k - 1, field(k).from_rational(-1))
        return Preset(name, K, {"x": K.zeta(1), "y": K.b}, dicyclic_n=n)
    raise ValueError(f"unknown preset {name!r}")
