"""Generic contracts for parameter-decreasing transformations.

This module holds the problem-independent machinery: instances with a
natural-number parameter, contract wrappers for diminishers / branching
rules / compositions / kernelizations, the combinators that build new
diminishers from old ones, the diminish-then-kernelize solving loops, and
the randomized verification harness that checks any diminisher against an
exact oracle.

Everything here is a pure function of its inputs (plus an explicit seed),
so repeated runs are byte-identical.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from .errors import ContractViolation, GuardError

STRICT_DECREASE = "strict-decrease"
STRONG_FACTOR = "strong-factor"

KIND_STRICT = "strict"
KIND_SEMI_STRICT = "semi-strict"


@dataclass(frozen=True)
class TrivialToken:
    """Sentinel payload standing in for a canonical yes/no instance.

    Some problems have parameter levels where one verdict has no natural
    witness (e.g. every 0-parameter instance is vacuously a yes-instance).
    Guard paths that must emit an equivalent instance at such a level emit
    a token instead; every oracle answers tokens by their stored verdict.
    """

    verdict: bool


@dataclass(frozen=True)
class ParamInstance:
    """A problem instance together with its parameter value.

    ``k`` is the tracked parameter (the quantity diminishers decrease);
    for problems parameterized by something other than the solution
    budget, the budget lives inside ``payload``.
    """

    payload: Any
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"parameter must be a natural number, got {self.k}")


@dataclass(frozen=True)
class TransformReport:
    """Record of one diminisher application during verification."""

    k_in: int
    k_out: int
    size_in: int
    size_out: int
    branches: int
    equivalent: bool
    seed: int
    counterexample: Optional[str] = None

    def as_dict(self):
        d = {
            "k_in": self.k_in,
            "k_out": self.k_out,
            "size_in": self.size_in,
            "size_out": self.size_out,
            "branches": self.branches,
            "equivalent": self.equivalent,
            "seed": self.seed,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass(frozen=True)
class ProblemDescriptor:
    """Bundle of everything needed to test transformations of one problem.

    ``oracle`` is an exact exhaustive-search decider, ``param`` evaluates
    the tracked parameter of an instance, ``trivial_yes``/``trivial_no``
    produce the canonical instance with the given parameter value, and
    ``generate`` draws a random instance satisfying the guards of the
    problem's diminisher.
    """

    name: str
    oracle: Callable[[ParamInstance], bool]
    trivial_yes: Callable[[int], ParamInstance]
    trivial_no: Callable[[int], ParamInstance]
    generate: Callable[[random.Random], ParamInstance]
    serialize: Callable[[ParamInstance], str]
    param: Callable[[ParamInstance], int] = lambda inst: inst.k
    shrink: Optional[Callable[[ParamInstance], list]] = None

    def size(self, inst: ParamInstance) -> int:
        return len(self.serialize(inst).encode())

    def trivial(self, verdict: bool, k: int) -> ParamInstance:
        return self.trivial_yes(k) if verdict else self.trivial_no(k)


def token_instance(verdict: bool, k: int) -> ParamInstance:
    return ParamInstance(TrivialToken(verdict), k)


def token_verdict(inst: ParamInstance) -> Optional[bool]:
    """Verdict of a sentinel instance, or None for a real payload."""
    if isinstance(inst.payload, TrivialToken):
        return inst.payload.verdict
    return None


@dataclass(frozen=True)
class DiminisherContract:
    """A parameter-decreasing transformation with its declared guarantees.

    ``kind`` is ``strict-decrease`` (output parameter strictly below the
    input parameter whenever it is >= 1) or ``strong-factor`` (output
    parameter at most ``k / factor_c``, rounded up to absorb odd-parameter
    padding).  ``declared_size_poly`` is the exponent b such that one
    application maps instance size s to at most s**b.
    """

    transform: Callable[[ParamInstance], ParamInstance]
    kind: str = STRICT_DECREASE
    factor_c: Fraction = Fraction(1)
    declared_size_poly: int = 1
    branches_of: Optional[Callable[[ParamInstance], int]] = None
    name: str = "diminisher"

    def __post_init__(self):
        if self.kind not in (STRICT_DECREASE, STRONG_FACTOR):
            raise ValueError(f"unknown diminisher kind: {self.kind}")
        if self.kind == STRONG_FACTOR and self.factor_c <= 1:
            raise ValueError("strong-factor diminisher needs factor_c > 1")

    def apply(self, inst: ParamInstance) -> ParamInstance:
        """Apply the transform and enforce the parameter contract."""
        out = self.transform(inst)
        self.check(inst, out)
        return out

    def __call__(self, inst: ParamInstance) -> ParamInstance:
        return self.apply(inst)

    def check(self, inst: ParamInstance, out: ParamInstance) -> None:
        if inst.k >= 1:
            if out.k >= inst.k:
                raise ContractViolation(
                    f"parameter did not decrease: {inst.k} -> {out.k}",
                    stage=self.name,
                )
            if self.kind == STRONG_FACTOR:
                if Fraction(out.k) * self.factor_c > inst.k:
                    raise ContractViolation(
                        f"parameter {inst.k} -> {out.k} exceeds k/{self.factor_c}",
                        stage=self.name,
                    )

    def branch_count(self, inst: ParamInstance) -> int:
        return self.branches_of(inst) if self.branches_of else 1


@dataclass(frozen=True)
class BranchingRule:
    """Maps an instance to a nonempty list of same-parameter instances.

    The input is a yes-instance iff at least one output is; every output
    carries the same parameter, strictly below the input's.
    """

    branch: Callable[[ParamInstance], list]
    name: str = "branching-rule"

    def apply(self, inst: ParamInstance) -> list:
        outs = self.branch(inst)
        if not outs:
            raise ContractViolation("empty branch list", stage=self.name)
        ks = {o.k for o in outs}
        if len(ks) != 1:
            raise ContractViolation(
                f"branches disagree on parameter: {sorted(ks)}", stage=self.name
            )
        (k_out,) = ks
        if inst.k >= 1 and k_out >= inst.k:
            raise ContractViolation(
                f"branch parameter did not decrease: {inst.k} -> {k_out}",
                stage=self.name,
            )
        return outs


@dataclass(frozen=True)
class StrictComposition:
    """Merges same-parameter instances into one, OR-semantics.

    The output parameter exceeds the shared input parameter by at most the
    declared additive constant.
    """

    compose: Callable[[list], ParamInstance]
    additive_c: int = 0
    name: str = "composition"

    def apply(self, insts: list) -> ParamInstance:
        if not insts:
            raise ContractViolation("composition of empty list", stage=self.name)
        ks = {i.k for i in insts}
        if len(ks) != 1:
            raise ContractViolation(
                f"composition inputs disagree on parameter: {sorted(ks)}",
                stage=self.name,
            )
        (k,) = ks
        out = self.compose(insts)
        if out.k > k + self.additive_c:
            raise ContractViolation(
                f"composed parameter {out.k} exceeds {k} + {self.additive_c}",
                stage=self.name,
            )
        return out


@dataclass(frozen=True)
class KernelContract:
    """A kernelization with its declared parameter and size guarantees."""

    kernelize: Callable[[ParamInstance], ParamInstance]
    kind: str = KIND_STRICT
    constant: Fraction = Fraction(0)  # additive for strict, factor for semi-strict
    size_poly_exponent: int = 1
    name: str = "kernel"

    def __post_init__(self):
        if self.kind not in (KIND_STRICT, KIND_SEMI_STRICT):
            raise ValueError(f"unknown kernel kind: {self.kind}")

    def apply(self, inst: ParamInstance) -> ParamInstance:
        out = self.kernelize(inst)
        if self.kind == KIND_STRICT:
            if out.k > inst.k + self.constant:
                raise ContractViolation(
                    f"kernel parameter {out.k} exceeds {inst.k} + {self.constant}",
                    stage=self.name,
                )
        else:
            if out.k > self.constant * inst.k:
                raise ContractViolation(
                    f"kernel parameter {out.k} exceeds {self.constant} * {inst.k}",
                    stage=self.name,
                )
        return out

    def __call__(self, inst: ParamInstance) -> ParamInstance:
        return self.apply(inst)


@dataclass(frozen=True)
class ParamReduction:
    """A parameter-non-increasing many-one reduction between two problems."""

    map: Callable[[ParamInstance], ParamInstance]
    name: str = "reduction"

    def apply(self, inst: ParamInstance) -> ParamInstance:
        out = self.map(inst)
        if out.k > inst.k:
            raise ContractViolation(
                f"reduction increased parameter: {inst.k} -> {out.k}",
                stage=self.name,
            )
        return out


def branch_and_compose(
    rule: BranchingRule,
    comp: StrictComposition,
    small_solver: Optional[Callable[[ParamInstance], ParamInstance]] = None,
    name: Optional[str] = None,
) -> DiminisherContract:
    """Build a diminisher from a branching rule and a strict composition.

    Applies the rule recursively ``additive_c + 1`` times (a fan-out
    tree), flattens the leaves, and composes them; the composed parameter
    then sits strictly below the input parameter.

    Instances whose parameter is positive but too small for the full
    recursion (k <= additive_c) cannot go through the generic route; they
    are handed to ``small_solver``, which must return an equivalent
    instance with a smaller parameter.
    """
    depth = comp.additive_c + 1
    dim_name = name or f"branch+compose({rule.name},{comp.name})"

    def transform(inst: ParamInstance) -> ParamInstance:
        if inst.k == 0:
            # Non-diminishable floor; solving loops stop before this.
            return inst
        if inst.k <= comp.additive_c:
            if small_solver is None:
                raise GuardError(
                    f"{dim_name}: parameter {inst.k} too small for"
                    f" {depth} branching levels and no small-case solver given"
                )
            return small_solver(inst)
        level = [inst]
        for _ in range(depth):
            nxt = []
            for cur in level:
                nxt.extend(rule.apply(cur))
            level = nxt
        return comp.apply(level)

    def branches_of(inst: ParamInstance) -> int:
        if inst.k <= comp.additive_c:
            return 1
        level = [inst]
        total = 0
        for _ in range(depth):
            nxt = []
            for cur in level:
                nxt.extend(rule.apply(cur))
            level = nxt
            total = len(level)
        return total

    return DiminisherContract(
        transform=transform,
        kind=STRICT_DECREASE,
        branches_of=branches_of,
        name=dim_name,
    )


def transfer_diminisher(
    to_other: ParamReduction,
    back: ParamReduction,
    dim_other: DiminisherContract,
    name: Optional[str] = None,
) -> DiminisherContract:
    """Carry a diminisher across a pair of parameter-non-increasing reductions.

    The returned transform is ``back . dim_other . to_other``; the
    parameter chain k1' <= k2' < k2 <= k1 is asserted on every call, and a
    violation names the offending stage.
    """
    dim_name = name or f"transfer({to_other.name},{dim_other.name},{back.name})"

    def transform(inst: ParamInstance) -> ParamInstance:
        mid = to_other.apply(inst)
        dimmed = dim_other.apply(mid)
        out = back.apply(dimmed)
        return out

    return DiminisherContract(
        transform=transform,
        kind=dim_other.kind,
        factor_c=dim_other.factor_c,
        declared_size_poly=dim_other.declared_size_poly,
        name=dim_name,
    )


def _ceil_log(base: Fraction, value: Fraction) -> int:
    """Smallest r >= 0 with base**r >= value, exact arithmetic."""
    base = Fraction(base)
    value = Fraction(value)
    if base <= 1:
        raise ValueError(f"log base must exceed 1, got {base}")
    r = 0
    power = Fraction(1)
    while power < value:
        power *= base
        r += 1
    return r


def diminish_kernelize_loop(
    dim: DiminisherContract,
    kern: KernelContract,
    base: Callable[[ParamInstance], bool],
    inst: ParamInstance,
    c_base: int = 1,
    trace: Optional[list] = None,
) -> bool:
    """Solve an instance by alternating a diminisher and a strict kernel.

    Each round applies the diminisher ``d + 1`` times (d the kernel's
    additive constant) and kernelizes once, so the parameter strictly
    drops per round; once it reaches ``c_base`` the base solver decides.
    """
    if dim.kind != STRICT_DECREASE:
        raise ValueError("loop needs a strict-decrease diminisher")
    if kern.kind != KIND_STRICT:
        raise ValueError("loop needs a strict kernel")
    d = int(kern.constant)
    rounds = 0
    k_start = inst.k
    while inst.k > c_base:
        k_round = inst.k
        for _ in range(d + 1):
            if inst.k <= c_base:
                break
            inst = dim.apply(inst)
        if inst.k > c_base:
            inst = kern.apply(inst)
        rounds += 1
        if inst.k >= k_round:
            raise ContractViolation(
                f"round {rounds}: parameter failed to decrease"
                f" ({k_round} -> {inst.k})",
                stage=dim.name,
            )
        if rounds > k_start:
            raise ContractViolation(
                f"loop exceeded {k_start} rounds", stage=dim.name
            )
        if trace is not None:
            trace.append((inst.k, rounds))
    return base(inst)


def strong_loop_repetitions(c_d: Fraction, c_a: Fraction) -> int:
    """Applications of the strong diminisher per round: ceil(log_cd(ca+cd))."""
    return _ceil_log(Fraction(c_d), Fraction(c_a) + Fraction(c_d))


def strong_loop(
    dim: DiminisherContract,
    kern: KernelContract,
    base: Callable[[ParamInstance], bool],
    inst: ParamInstance,
    c_base: int = 1,
    trace: Optional[list] = None,
) -> bool:
    """Solve with a strong (constant-factor) diminisher and a semi-strict kernel."""
    if dim.kind != STRONG_FACTOR:
        raise ValueError("strong loop needs a strong-factor diminisher")
    if kern.kind != KIND_SEMI_STRICT:
        raise ValueError("strong loop needs a semi-strict kernel")
    c_r = strong_loop_repetitions(dim.factor_c, kern.constant)
    rounds = 0
    k_start = inst.k
    while inst.k > c_base:
        k_round = inst.k
        for _ in range(c_r):
            if inst.k <= c_base:
                break
            inst = dim.apply(inst)
        if inst.k > c_base:
            inst = kern.apply(inst)
        rounds += 1
        if inst.k >= k_round:
            raise ContractViolation(
                f"round {rounds}: parameter failed to decrease"
                f" ({k_round} -> {inst.k})",
                stage=dim.name,
            )
        if rounds > k_start:
            raise ContractViolation(
                f"loop exceeded {k_start} rounds", stage=dim.name
            )
        if trace is not None:
            trace.append((inst.k, rounds))
    return base(inst)


def accelerated_solve(
    dim: DiminisherContract,
    solver: Callable[[ParamInstance], bool],
    f: Callable[[ParamInstance], int],
    inst: ParamInstance,
    size: Callable[[ParamInstance], int],
    size_threshold: int = 0,
    applications: Optional[list] = None,
) -> bool:
    """Shrink the parameter by repeated strong diminishing, then solve.

    Applies the diminisher ceil(log_c f(inst)) times, c = min(2, b) with b
    the diminisher's declared size-growth exponent; the final parameter is
    at most k / f(inst).  Instances below the size threshold go straight
    to the solver.
    """
    if dim.kind != STRONG_FACTOR:
        raise ValueError("accelerated solve needs a strong-factor diminisher")
    c = min(2, dim.declared_size_poly)
    if c <= 1:
        raise ValueError("declared size-growth exponent must be at least 2")
    if size(inst) < size_threshold:
        if applications is not None:
            applications.append(0)
        return solver(inst)
    reps = _ceil_log(Fraction(c), Fraction(max(f(inst), 1)))
    for _ in range(reps):
        inst = dim.apply(inst)
    if applications is not None:
        applications.append(reps)
    return solver(inst)


def _minimize_counterexample(
    dim: DiminisherContract,
    prob: ProblemDescriptor,
    inst: ParamInstance,
) -> ParamInstance:
    """Greedily shrink a failing instance while it keeps failing."""

    def fails(candidate: ParamInstance) -> bool:
        try:
            out = dim.transform(candidate)
        except Exception:
            return False
        try:
            if prob.oracle(candidate) != prob.oracle(out):
                return True
            dim.check(candidate, out)
        except ContractViolation:
            return True
        except Exception:
            return False
        return False

    if prob.shrink is None:
        return inst
    improved = True
    while improved:
        improved = False
        for candidate in prob.shrink(inst):
            if fails(candidate):
                inst = candidate
                improved = True
                break
    return inst


def verify_diminisher(
    dim: DiminisherContract,
    prob: ProblemDescriptor,
    trials: int,
    seed: int,
) -> list:
    """Randomized equivalence check of a diminisher against an exact oracle.

    For each trial, draws a guard-satisfying instance, applies the
    diminisher once, and compares oracle verdicts.  A trial passes when
    the verdicts agree and the parameter obeys the declared contract; a
    failing trial's report carries a minimized, serialized counterexample.
    Deterministic given the seed.
    """
    rng = random.Random(seed)
    reports = []
    for _ in range(trials):
        inst = prob.generate(rng)
        k_in = prob.param(inst)
        size_in = prob.size(inst)
        branches = dim.branch_count(inst)
        out = dim.transform(inst)
        k_out = prob.param(out)
        size_out = prob.size(out)
        ok = prob.oracle(inst) == prob.oracle(out)
        if ok and k_in >= 1:
            if dim.kind == STRONG_FACTOR:
                ok = Fraction(k_out) * dim.factor_c <= k_in
            else:
                ok = k_out < k_in
        counterexample = None
        if not ok:
            minimal = _minimize_counterexample(dim, prob, inst)
            counterexample = prob.serialize(minimal)
        reports.append(
            TransformReport(
                k_in=k_in,
                k_out=k_out,
                size_in=size_in,
                size_out=size_out,
                branches=branches,
                equivalent=ok,
                seed=seed,
                counterexample=counterexample,
            )
        )
    return reports


# ---------------------------------------------------------------------------
# Unary Threshold: a synthetic polynomial-time problem that supplies both a
# diminisher and a strict kernel, so the solving loops can run end to end.
# (No NP-hard problem can supply both unless P = NP.)
# ---------------------------------------------------------------------------


def _count_ones(payload) -> int:
    return payload.count("1")


def _ut_oracle(inst: ParamInstance) -> bool:
    tv = token_verdict(inst)
    if tv is not None:
        return tv
    return _count_ones(inst.payload) >= inst.k


def _ut_trivial_yes(k: int) -> ParamInstance:
    return ParamInstance("1" * k, k)


def _ut_trivial_no(k: int) -> ParamInstance:
    if k == 0:
        raise GuardError("every bitstring has at least 0 ones")
    return ParamInstance("", k)


def _ut_generate(rng: random.Random) -> ParamInstance:
    n = rng.randint(1, 16)
    bits = "".join(rng.choice("01") for _ in range(n))
    return ParamInstance(bits, rng.randint(1, 8))


def _ut_serialize(inst: ParamInstance) -> str:
    tv = token_verdict(inst)
    if tv is not None:
        return f"token {'yes' if tv else 'no'}\nk {inst.k}\n"
    return f"x {inst.payload}\nk {inst.k}\n"


def _ut_shrink(inst: ParamInstance) -> list:
    if token_verdict(inst) is not None:
        return []
    out = []
    bits = inst.payload
    for i in range(len(bits)):
        out.append(ParamInstance(bits[:i] + bits[i + 1 :], inst.k))
    if inst.k >= 1:
        out.append(ParamInstance(bits, inst.k - 1))
    return out


def _ut_diminish(inst: ParamInstance) -> ParamInstance:
    if inst.k == 0:
        return inst
    tv = token_verdict(inst)
    if tv is not None:
        return token_instance(tv, inst.k - 1)
    bits = inst.payload
    i = bits.find("1")
    if i < 0:
        # No-instance stays a no-instance; at parameter 0 only the token
        # can carry a "no" verdict.
        if inst.k - 1 == 0:
            return token_instance(False, 0)
        return ParamInstance("", inst.k - 1)
    return ParamInstance(bits[:i] + bits[i + 1 :], inst.k - 1)


def _ut_kernel(inst: ParamInstance) -> ParamInstance:
    tv = token_verdict(inst)
    verdict = tv if tv is not None else _count_ones(inst.payload) >= inst.k
    k_out = min(inst.k, 1)
    if verdict:
        return ParamInstance("1" * k_out, k_out)
    return ParamInstance("", k_out)


def _ut_strong_diminish(inst: ParamInstance) -> ParamInstance:
    if inst.k == 0:
        return inst
    verdict = _ut_oracle(inst)
    k_out = inst.k // 2
    if verdict:
        return ParamInstance("1" * k_out, k_out)
    if k_out == 0:
        return token_instance(False, 0)
    return ParamInstance("", k_out)


def _ut_semi_kernel(inst: ParamInstance) -> ParamInstance:
    verdict = _ut_oracle(inst)
    if verdict:
        return ParamInstance("1" * inst.k, inst.k)
    if inst.k == 0:
        return token_instance(False, 0)
    return ParamInstance("", inst.k)


def unary_threshold_descriptor():
    """Descriptor plus companion transforms for the ones-counting problem.

    Membership: a bitstring x with parameter k is in the language iff x
    contains at least k ones.  Returns (descriptor, diminisher,
    strict kernel, strong diminisher, semi-strict kernel).
    """
    prob = ProblemDescriptor(
        name="unary_threshold",
        oracle=_ut_oracle,
        trivial_yes=_ut_trivial_yes,
        trivial_no=_ut_trivial_no,
        generate=_ut_generate,
        serialize=_ut_serialize,
        shrink=_ut_shrink,
    )
    dim = DiminisherContract(
        transform=_ut_diminish, kind=STRICT_DECREASE, name="ut-diminisher"
    )
    kern = KernelContract(
        kernelize=_ut_kernel,
        kind=KIND_STRICT,
        constant=Fraction(0),
        size_poly_exponent=1,
        name="ut-kernel",
    )
    strong = DiminisherContract(
        transform=_ut_strong_diminish,
        kind=STRONG_FACTOR,
        factor_c=Fraction(2),
        declared_size_poly=2,
        name="ut-strong-diminisher",
    )
    semi = KernelContract(
        kernelize=_ut_semi_kernel,
        kind=KIND_SEMI_STRICT,
        constant=Fraction(2),
        size_poly_exponent=2,
        name="ut-semi-kernel",
    )
    return prob, dim, kern, strong, semi
