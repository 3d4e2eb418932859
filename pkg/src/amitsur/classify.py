"""Necessary conditions for a finite group to embed in a division ring.

Each rule inspects a presentation (or just an order) and either returns a
:class:`Verdict` or ``None`` when it has nothing to say.  The rules only
prove non-embeddability or force cyclicity; a group on which nothing fires
is reported as a ``Candidate``, which is *not* a claim that it embeds.

Rules, in the default order:

* ``Thm2.1``  abelian groups that embed are cyclic.
* ``Thm2.2``  a p-group that embeds has a unique subgroup of order p, hence
  is cyclic (p odd) or cyclic/dicyclic (p = 2).
* ``Thm2.5``  if 8 does not divide |G| an embeddable G is Sylow-cyclic.
* ``Thm3.1``  G(m, n, r) with n > 1 and o(r mod m) = n does not embed.
* ``Cor3.5``  for every prime power l^t exactly dividing n, the subgroup
  G(m, l^t, r^(n/l^t)) must escape Thm3.1; if n is square-free G is cyclic.
* ``Cor3.6``  an embeddable group of order p^t q_1 ... q_k with
  p > q_1 > ... > q_k primes (k >= 1) is cyclic.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .arith import factorize, is_squarefree, mult_order
from .groups import (
    DESK_BOUND,
    MetacyclicPresentation,
    are_isomorphic,
    center,
    enumerate_presentations,
    is_sylow_cyclic_direct,
    structure_flags,
    sub_presentation,
    sylow_subgroup,
    validate,
)
from .errors import OrderTooLarge

NOT_AMITSUR = "NotAmitsur"
FORCED_CYCLIC = "ForcedCyclic"
CANDIDATE = "Candidate"

KNOWN_AMITSUR = "KnownAmitsur"
UNKNOWN = "Unknown"

# Noncyclic groups shown to embed by explicit cyclic-algebra constructions
# (see amitsur.algebra presets "63" and "117").
KNOWN_AMITSUR_TABLE = ((7, 9, 2), (13, 9, 9))


@dataclass(frozen=True)
class Verdict:
    outcome: str
    rule: str | None = None
    witness: dict = field(default_factory=dict)
    known_status: str | None = None
    trace: tuple = ()

    def __post_init__(self):
        if self.outcome not in (NOT_AMITSUR, FORCED_CYCLIC, CANDIDATE):
            raise ValueError(f"unknown outcome {self.outcome!r}")
        if self.outcome == NOT_AMITSUR and (self.rule is None or not self.witness):
            raise ValueError("NotAmitsur verdicts need a rule and a witness")
        if self.outcome == CANDIDATE and self.rule is not None:
            raise ValueError("Candidate verdicts carry no rule")

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "rule": self.rule,
            "witness": dict(self.witness),
            "known_status": self.known_status,
            "trace": [list(t) for t in self.trace],
        }


# -- presentation-level rules --------------------------------------------------


def rule_thm_2_1(G: MetacyclicPresentation) -> Verdict | None:
    flags = structure_flags(G)
    if flags["is_abelian"] and not flags["is_cyclic"]:
        return Verdict(NOT_AMITSUR, "Thm2.1", {"abelian": True, "cyclic": False, "gcd_m_n": gcd(G.m, G.n)})
    return None


def _order_profile(G) -> dict[int, int]:
    if isinstance(G, MetacyclicPresentation):
        return dict(G.profile)
    return dict(G.order_profile())


def rule_p_group(G) -> Verdict | None:
    """Unique subgroup of order p, for groups of prime-power order.

    ``G`` may be an order (int), a presentation, or any object with
    ``order`` and ``order_profile()`` (e.g. a group closed up in an algebra).
    At the order level only odd p gives a conclusion (cyclic is forced).
    """
    N = G if isinstance(G, int) else G.order
    if N < 2:
        return None
    fac = factorize(N)
    if len(fac) != 1:
        return None
    p, t = fac.factors[0]
    if isinstance(G, int):
        if p == 2:
            return None
        return Verdict(FORCED_CYCLIC, "Thm2.2", {"p": p, "t": t})
    prof = _order_profile(G)
    subgroups = prof.get(p, 0) // (p - 1)
    if subgroups > 1:
        return Verdict(NOT_AMITSUR, "Thm2.2", {"p": p, "t": t, "subgroups_of_order_p": subgroups})
    return None


def rule_not_div_8(G: MetacyclicPresentation, bound: int | None = None) -> Verdict | None:
    if G.order % 8 == 0:
        return None
    if not is_sylow_cyclic_direct(G, bound=bound):
        bad = [p for p in factorize(G.order).primes if not sylow_subgroup(G, p).is_cyclic()]
        return Verdict(NOT_AMITSUR, "Thm2.5", {"order": G.order, "noncyclic_sylow_primes": bad})
    return None


def rule_thm_3_1(G: MetacyclicPresentation) -> Verdict | None:
    if G.n > 1 and mult_order(G.r, G.m) == G.n:
        return Verdict(NOT_AMITSUR, "Thm3.1", {"n": G.n, "order_of_r": G.n, "m": G.m, "r": G.r})
    return None


def rule_cor_3_5(G: MetacyclicPresentation) -> Verdict | None:
    """Check every Sylow piece <a><c> = G(m, l^t, s) of <b> against Thm3.1."""
    for ell, t in factorize(G.n):
        q = ell**t
        sub = sub_presentation(G, q)
        o = mult_order(sub.r, G.m)
        if o == q:
            return Verdict(
                NOT_AMITSUR,
                "Cor3.5",
                {"ell": ell, "t": t, "prime_power": q, "s": sub.r, "order_of_s": o},
            )
    if G.n > 1 and is_squarefree(G.n):
        # every l-part of <b> acts trivially, so b is central and G abelian
        flags = structure_flags(G)
        if flags["is_cyclic"]:
            return Verdict(FORCED_CYCLIC, "Cor3.5", {"n_squarefree": True})
        return Verdict(NOT_AMITSUR, "Cor3.5", {"n_squarefree": True, "cyclic": False})
    return None


def cor_3_6_pattern(N: int) -> dict | None:
    """Match N = p^t q_1 ... q_k with k >= 1 and p > q_1 > ... > q_k."""
    if N < 2:
        return None
    fac = factorize(N)
    if len(fac) < 2:
        return None
    *rest, (p, t) = fac.factors
    if any(e != 1 for _, e in rest):
        return None
    return {"p": p, "t": t, "q": sorted((q for q, _ in rest), reverse=True)}


def rule_cor_3_6(N: int) -> Verdict | None:
    """Order-level: every embeddable group of order N is cyclic."""
    pat = cor_3_6_pattern(N)
    if pat is None:
        return None
    return Verdict(FORCED_CYCLIC, "Cor3.6", pat)


def rule_cor_3_6_presentation(G: MetacyclicPresentation) -> Verdict | None:
    pat = cor_3_6_pattern(G.order)
    if pat is None:
        return None
    if structure_flags(G)["is_cyclic"]:
        return Verdict(FORCED_CYCLIC, "Cor3.6", pat)
    return Verdict(NOT_AMITSUR, "Cor3.6", dict(pat, cyclic=False))


DEFAULT_RULES = ("Thm2.1", "Thm2.2", "Thm2.5", "Thm3.1", "Cor3.5", "Cor3.6")

_RULES = {
    "Thm2.1": rule_thm_2_1,
    "Thm2.2": rule_p_group,
    "Thm2.5": rule_not_div_8,
    "Thm3.1": rule_thm_3_1,
    "Cor3.5": rule_cor_3_5,
    "Cor3.6": rule_cor_3_6_presentation,
}


def known_status(G: MetacyclicPresentation) -> str:
    for triple in KNOWN_AMITSUR_TABLE:
        H = validate(*triple)
        if H.order == G.order and are_isomorphic(G, H):
            return KNOWN_AMITSUR
    return UNKNOWN


def classify_presentation(G: MetacyclicPresentation, rules=DEFAULT_RULES) -> Verdict:
    trace = []
    first_obstruction = None
    cyclic_rule = None
    for name in rules:
        v = _RULES[name](G)
        trace.append((name, v.outcome if v else None))
        if v is None:
            continue
        if v.outcome == NOT_AMITSUR and first_obstruction is None:
            first_obstruction = v
        elif v.outcome == FORCED_CYCLIC and cyclic_rule is None:
            cyclic_rule = v
    trace = tuple(trace)
    if first_obstruction is not None:
        return Verdict(NOT_AMITSUR, first_obstruction.rule, first_obstruction.witness, trace=trace)
    if structure_flags(G)["is_cyclic"]:
        rule = cyclic_rule.rule if cyclic_rule else None
        return Verdict(FORCED_CYCLIC, rule, {"cyclic": True}, KNOWN_AMITSUR, trace)
    if cyclic_rule is not None:
        # a cyclicity rule fired on a noncyclic group; unreachable for valid rules
        raise AssertionError(f"{cyclic_rule.rule} forced cyclicity of the noncyclic {G}")
    return Verdict(CANDIDATE, None, {}, known_status(G), trace)


# -- order-level reports -----------------------------------------------------


@dataclass(frozen=True)
class OrderReport:
    order: int
    classes: tuple  # of (MetacyclicPresentation, Verdict)
    order_verdict: Verdict | None = None
    coprime_splits: tuple = ()  # (m, n, number of nontrivial actions r)

    @property
    def exceptional(self) -> bool:
        return any(v.outcome == CANDIDATE for _, v in self.classes)

    @property
    def candidates(self) -> list[MetacyclicPresentation]:
        return [G for G, v in self.classes if v.outcome == CANDIDATE]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "exceptional": self.exceptional,
            "order_verdict": self.order_verdict.to_dict() if self.order_verdict else None,
            "classes": [{"presentation": list(G.triple), "verdict": v.to_dict()} for G, v in self.classes],
            "coprime_splits": [list(s) for s in self.coprime_splits],
        }


def coprime_splits(N: int) -> tuple:
    """For each N = m n with gcd(m, n) = 1 and m, n > 1: how many r != 1 have r^n = 1 mod m.

    Zero everywhere means every Sylow-cyclic group of order N is abelian.
    """
    out = []
    for m in range(2, N):
        if N % m:
            continue
        n = N // m
        if n < 2 or gcd(m, n) != 1:
            continue
        out.append((m, n, sum(1 for r in range(2, m) if pow(r, n, m) == 1)))
    return tuple(out)


def order_level_verdict(N: int) -> Verdict | None:
    if N == 1:
        return Verdict(FORCED_CYCLIC, "trivial", {"order": 1})
    return rule_p_group(N) or rule_cor_3_6(N)


def report_order(N: int, short_circuit: bool = True, bound: int | None = None) -> OrderReport:
    ov = order_level_verdict(N)
    if ov is not None and short_circuit:
        return OrderReport(N, (), ov, coprime_splits(N))
    classes = tuple(
        (c.representative, classify_presentation(c.representative)) for c in enumerate_presentations(N, bound=bound)
    )
    return OrderReport(N, classes, ov, coprime_splits(N))


def _report_args(args):
    return report_order(*args)


def scan_orders(orders, short_circuit: bool = True, jobs: int = 1, bound: int | None = None) -> list[OrderReport]:
    orders = sorted(orders)
    args = [(N, short_circuit, bound) for N in orders]
    if jobs > 1 and len(orders) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_report_args, args, chunksize=4))
    return [_report_args(a) for a in args]


def scan_odd_orders(
    max_order: int,
    include_even: bool = False,
    short_circuit: bool = True,
    jobs: int = 1,
    bound: int | None = None,
) -> list[OrderReport]:
    """Reports for every odd N < max_order (or every N not divisible by 8)."""
    limit = DESK_BOUND if bound is None else bound
    if max_order < 3:
        raise ValueError(f"max must be >= 3, got {max_order}")
    if max_order > limit:
        raise OrderTooLarge(f"max {max_order} exceeds the desk bound {limit}")
    if include_even:
        orders = [N for N in range(1, max_order) if N % 8]
    else:
        orders = list(range(1, max_order, 2))
    return scan_orders(orders, short_circuit=short_circuit, jobs=jobs, bound=limit)


def exceptional_orders(reports) -> list[int]:
    return [rep.order for rep in reports if rep.exceptional]


def squarefree_part_central(G: MetacyclicPresentation) -> bool:
    """Whether the largest square-free subgroup of <b> lies in the center."""
    z = center(G).elements
    rad = 1
    for ell, _ in factorize(G.n):
        rad *= ell
    return (0, (G.n // rad) % G.n) in z
