"""Set Cover and Hitting Set: oracles, strong diminishers, k*log values.

The strong diminishers halve the budget by replacing the family with all
pairwise unions (Set Cover) or the universe with all element pairs
(Hitting Set), padding odd budgets first.  The k*log2(n) parameter drops
by at least a factor sqrt(3)/2, checked exactly with integer arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, log2
from typing import FrozenSet, Tuple

from .core import (
    STRONG_FACTOR,
    DiminisherContract,
    ParamInstance,
    ParamReduction,
    ProblemDescriptor,
    token_verdict,
)
from .errors import CapExceeded, ContractViolation, GuardError, ParseError

# Continued-fraction convergents bracketing sqrt(3).
SQRT3_LOWER = (989, 571)
SQRT3_UPPER = (1351, 780)


@dataclass(frozen=True)
class SetSystemInstance:
    """Universe {0..n-1}, a family of subsets, and a budget k."""

    n: int
    family: Tuple[FrozenSet[int], ...]
    k: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("universe size and budget must be nonnegative")
        for s in self.family:
            if not all(0 <= e < self.n for e in s):
                raise ValueError("set member outside the universe")

    @property
    def m(self) -> int:
        return len(self.family)


def oracle_set_cover(inst: SetSystemInstance, cap: int = 200_000) -> bool:
    """Do at most k family sets union to the whole universe?"""
    universe = frozenset(range(inst.n))
    if sum(comb(inst.m, i) for i in range(min(inst.k, inst.m) + 1)) > cap:
        raise CapExceeded("set cover enumeration over cap")
    for size in range(min(inst.k, inst.m) + 1):
        for chosen in combinations(inst.family, size):
            union = frozenset().union(*chosen) if chosen else frozenset()
            if union == universe:
                return True
    return False


def oracle_hitting_set(inst: SetSystemInstance, cap: int = 200_000) -> bool:
    """Do at most k universe elements intersect every family set?"""
    if any(not s for s in inst.family):
        return False  # the empty set can never be hit
    if sum(comb(inst.n, i) for i in range(min(inst.k, inst.n) + 1)) > cap:
        raise CapExceeded("hitting set enumeration over cap")
    for size in range(min(inst.k, inst.n) + 1):
        for chosen in combinations(range(inst.n), size):
            hit = set(chosen)
            if all(hit & s for s in inst.family):
                return True
    return False


# -- canonical instances ----------------------------------------------------


def sc_yes(p: int) -> ParamInstance:
    if p == 0:
        return ParamInstance(SetSystemInstance(0, (frozenset(),), 0), 0)
    return ParamInstance(SetSystemInstance(1, (frozenset({0}),), p), p)


def sc_no(p: int) -> ParamInstance:
    return ParamInstance(SetSystemInstance(2, (frozenset({0}),), p), p)


def hs_yes(p: int) -> ParamInstance:
    if p == 0:
        return ParamInstance(SetSystemInstance(1, (), 0), 0)
    return ParamInstance(SetSystemInstance(1, (frozenset({0}),), p), p)


def hs_no(p: int) -> ParamInstance:
    if p == 0:
        return ParamInstance(SetSystemInstance(1, (frozenset({0}),), 0), 0)
    pairwise_disjoint = tuple(frozenset({i}) for i in range(p + 1))
    return ParamInstance(SetSystemInstance(p + 1, pairwise_disjoint, p), p)


# -- strong diminishers -----------------------------------------------------


def _pad_odd_sc(inst: SetSystemInstance) -> SetSystemInstance:
    """Append a fresh element with its own singleton set and bump k."""
    fresh = inst.n
    return SetSystemInstance(
        n=inst.n + 1,
        family=inst.family + (frozenset({fresh}),),
        k=inst.k + 1,
    )


def strong_diminish_set_cover(inst: ParamInstance) -> ParamInstance:
    """Replace the family by pairwise unions; k halves (after odd padding).

    Unions are deduplicated in lexicographic pair order, so each kept
    union's provenance is its smallest generating index pair.
    """
    sys_in: SetSystemInstance = inst.payload
    k = sys_in.k
    if k == 0:
        return inst
    if k == 1 or sys_in.m < 2:
        verdict = oracle_set_cover(sys_in)
        return sc_yes(k // 2) if verdict else sc_no(k // 2)
    if k == 2:
        verdict = oracle_set_cover(sys_in)
        return sc_yes(1) if verdict else sc_no(1)
    if k % 2 == 1:
        sys_in = _pad_odd_sc(sys_in)
    seen = set()
    unions = []
    for i in range(sys_in.m):
        for j in range(i + 1, sys_in.m):
            u = sys_in.family[i] | sys_in.family[j]
            if u not in seen:
                seen.add(u)
                unions.append(u)
    out = SetSystemInstance(n=sys_in.n, family=tuple(unions), k=sys_in.k // 2)
    return ParamInstance(out, out.k)


def _pad_odd_hs(inst: SetSystemInstance) -> SetSystemInstance:
    """Append a fresh element and a singleton set forcing its selection."""
    fresh = inst.n
    return SetSystemInstance(
        n=inst.n + 1,
        family=inst.family + (frozenset({fresh}),),
        k=inst.k + 1,
    )


def strong_diminish_hitting_set(inst: ParamInstance) -> ParamInstance:
    """Dual construction: universe becomes all element pairs; k halves.

    A pair hits a set when either endpoint does, so each original set is
    re-expressed as the collection of pairs meeting it.
    """
    sys_in: SetSystemInstance = inst.payload
    k = sys_in.k
    if k == 0:
        return inst
    if k == 1 or sys_in.n < 2 or not sys_in.family:
        verdict = oracle_hitting_set(sys_in)
        return hs_yes(k // 2) if verdict else hs_no(k // 2)
    if k == 2:
        verdict = oracle_hitting_set(sys_in)
        return hs_yes(1) if verdict else hs_no(1)
    if k % 2 == 1:
        sys_in = _pad_odd_hs(sys_in)
    pairs = [
        (u, v) for u in range(sys_in.n) for v in range(u + 1, sys_in.n)
    ]
    pair_index = {p: i for i, p in enumerate(pairs)}
    family = tuple(
        frozenset(
            i for p, i in pair_index.items() if p[0] in s or p[1] in s
        )
        for s in sys_in.family
    )
    out = SetSystemInstance(n=len(pairs), family=family, k=sys_in.k // 2)
    return ParamInstance(out, out.k)


def setcover_strong_diminisher() -> DiminisherContract:
    return DiminisherContract(
        transform=strong_diminish_set_cover,
        kind=STRONG_FACTOR,
        factor_c=Fraction(2),
        declared_size_poly=2,
        name="setcover-strong-diminisher",
    )


def hittingset_strong_diminisher() -> DiminisherContract:
    return DiminisherContract(
        transform=strong_diminish_hitting_set,
        kind=STRONG_FACTOR,
        factor_c=Fraction(2),
        declared_size_poly=2,
        name="hittingset-strong-diminisher",
    )


# -- dual transpose reductions (Set Cover <-> Hitting Set) ------------------


def dual_transpose(inst: ParamInstance) -> ParamInstance:
    """Swap element and set roles; the budget is unchanged.

    A hitting set of the primal is exactly a set cover of the transpose,
    so this single map serves both reduction directions.
    """
    sys_in: SetSystemInstance = inst.payload
    family = tuple(
        frozenset(i for i, s in enumerate(sys_in.family) if e in s)
        for e in range(sys_in.n)
    )
    out = SetSystemInstance(n=sys_in.m, family=family, k=sys_in.k)
    return ParamInstance(out, out.k)


def hs_to_sc_reduction() -> ParamReduction:
    return ParamReduction(map=dual_transpose, name="hittingset-to-setcover")


def sc_to_hs_reduction() -> ParamReduction:
    return ParamReduction(map=dual_transpose, name="setcover-to-hittingset")


# -- exact k*log parameter values -------------------------------------------


@dataclass(frozen=True)
class KLogValue:
    """Exact representation of k*log2(base); compared via integer powers."""

    k: int
    base: int

    def __post_init__(self):
        if self.base < 1 or self.k < 0:
            raise ValueError("need base >= 1 and k >= 0")

    def approx(self) -> float:
        return self.k * log2(self.base) if self.base > 1 else 0.0

    def compare(self, other: "KLogValue") -> int:
        # k1*log(b1) <?> k2*log(b2)  <=>  b1**k1 <?> b2**k2
        a = self.base ** self.k
        b = other.base ** other.k
        return (a > b) - (a < b)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0


def param_klogn(inst: ParamInstance) -> KLogValue:
    sys_in: SetSystemInstance = inst.payload
    return KLogValue(k=sys_in.k, base=max(sys_in.n, 1))


def param_klogm(inst: ParamInstance) -> KLogValue:
    sys_in: SetSystemInstance = inst.payload
    return KLogValue(k=sys_in.k, base=max(sys_in.m, 1))


def sqrt3_half_bound_holds(before: KLogValue, after: KLogValue) -> bool:
    """Is after <= (sqrt(3)/2) * before, decided exactly?

    Equivalent to 2*k'*log(b') <= sqrt(3)*k*log(b); tested against the
    convergents 989/571 < sqrt(3) < 1351/780 with big-integer powers.
    """
    p, q = SQRT3_LOWER
    if after.base ** (2 * q * after.k) <= before.base ** (p * before.k):
        return True
    p, q = SQRT3_UPPER
    if after.base ** (2 * q * after.k) > before.base ** (p * before.k):
        return False
    raise ContractViolation("value too close to the sqrt(3)/2 threshold")


# -- file format ------------------------------------------------------------


def parse_set_system(text: str):
    """Returns (SetSystemInstance, problem) for 'setcover'/'hittingset'."""
    n = None
    k = None
    problem = "setcover"
    sets = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "u":
                n = int(parts[1])
            elif parts[0] == "s":
                idx = int(parts[1].rstrip(":"))
                sets[idx] = frozenset(int(e) for e in parts[2:])
            elif parts[0] == "k":
                k = int(parts[1])
            elif parts[0] == "problem":
                if parts[1] not in ("setcover", "hittingset"):
                    raise ParseError(f"unknown problem {parts[1]!r}", lineno)
                problem = parts[1]
            else:
                raise ParseError(f"unknown line tag {parts[0]!r}", lineno)
        except ParseError:
            raise
        except (IndexError, ValueError) as exc:
            raise ParseError(str(exc), lineno) from exc
    if n is None or k is None:
        raise ParseError("set system needs 'u <n>' and 'k <budget>' lines")
    family = tuple(sets[i] for i in sorted(sets))
    try:
        return SetSystemInstance(n=n, family=family, k=k), problem
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def serialize_set_system(inst: SetSystemInstance, problem: str) -> str:
    lines = [f"u {inst.n}"]
    for i, s in enumerate(inst.family):
        lines.append(f"s {i}: " + " ".join(str(e) for e in sorted(s)))
    lines.append(f"k {inst.k}")
    lines.append(f"problem {problem}")
    return "\n".join(lines) + "\n"


# -- generators and descriptors ---------------------------------------------

SET_TAGS = ("setcover_strong", "hittingset_strong")


def _gen_system(rng: random.Random) -> SetSystemInstance:
    n = rng.randint(5, 6)
    m = rng.randint(2, 6)
    family = []
    for _ in range(m):
        size = rng.randint(1, n)
        family.append(frozenset(rng.sample(range(n), size)))
    k = rng.choice((2, 4, 6))
    return SetSystemInstance(n=n, family=tuple(family), k=k)


def _gen_set_instance(rng: random.Random) -> ParamInstance:
    sys_in = _gen_system(rng)
    return ParamInstance(sys_in, sys_in.k)


def set_descriptor(tag: str) -> ProblemDescriptor:
    if tag == "setcover_strong":
        raw_oracle, problem = oracle_set_cover, "setcover"
        yes, no = sc_yes, sc_no
    elif tag == "hittingset_strong":
        raw_oracle, problem = oracle_hitting_set, "hittingset"
        yes, no = hs_yes, hs_no
    else:
        raise GuardError(f"no set-system descriptor for tag {tag!r}")

    def oracle(inst: ParamInstance) -> bool:
        tv = token_verdict(inst)
        if tv is not None:
            return tv
        return raw_oracle(inst.payload)

    def serialize(inst: ParamInstance) -> str:
        tv = token_verdict(inst)
        if tv is not None:
            return f"token {'yes' if tv else 'no'}\nk {inst.k}\n"
        return serialize_set_system(inst.payload, problem)

    return ProblemDescriptor(
        name=tag,
        oracle=oracle,
        trivial_yes=yes,
        trivial_no=no,
        generate=_gen_set_instance,
        serialize=serialize,
    )


def set_diminisher(tag: str) -> DiminisherContract:
    if tag == "setcover_strong":
        return setcover_strong_diminisher()
    if tag == "hittingset_strong":
        return hittingset_strong_diminisher()
    raise GuardError(f"no set-system diminisher for tag {tag!r}")
