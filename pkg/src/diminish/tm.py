"""Nondeterministic single-tape Turing machines and step-compression.

Two diminishers for bounded-step acceptance: one merges the final two
steps into a single transition by guessing the last head position (keeps
the alphabet, grows the state set), the other merges the first two steps
into the input encoding (keeps the state set, grows the alphabet).

Symbols and states are hashable values: plain strings in parsed machines,
tuples in constructed ones.  The blank is the reserved string "_".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from .core import (
    STRICT_DECREASE,
    DiminisherContract,
    ParamInstance,
    ProblemDescriptor,
    token_instance,
    token_verdict,
)
from .errors import CapExceeded, GuardError, ParseError

BLANK = "_"

Transition = Tuple[Tuple[object, object], Tuple[object, object, int]]

_MOVES = {"L": -1, "S": 0, "R": 1}
_MOVE_NAMES = {-1: "L", 0: "S", 1: "R"}


@dataclass(frozen=True)
class NTMachine:
    """Single-tape NTM (alphabet, states, initial, accepting, delta)."""

    sigma: Tuple[object, ...]
    states: Tuple[object, ...]
    initial: object
    accepting: FrozenSet[object]
    delta: FrozenSet[Transition]

    def __post_init__(self):
        syms = set(self.sigma)
        if BLANK in syms:
            raise ValueError("blank is reserved and not part of the alphabet")
        sts = set(self.states)
        if self.initial not in sts:
            raise ValueError("initial state not declared")
        if not self.accepting <= sts:
            raise ValueError("accepting states not declared")
        for ((read, q), (write, q2, move)) in self.delta:
            if read != BLANK and read not in syms:
                raise ValueError(f"undeclared read symbol {read!r}")
            if write not in syms:
                raise ValueError(f"write symbol {write!r} not in alphabet")
            if q not in sts or q2 not in sts:
                raise ValueError("transition references undeclared state")
            if move not in (-1, 0, 1):
                raise ValueError(f"bad move {move!r}")

    def moves_from(self):
        table = {}
        for ((read, q), action) in self.delta:
            table.setdefault((read, q), []).append(action)
        for actions in table.values():
            actions.sort(key=repr)
        return table


@dataclass(frozen=True)
class NTMInstance:
    machine: NTMachine
    word: Tuple[object, ...]
    budget: int

    def __post_init__(self):
        syms = set(self.machine.sigma)
        for s in self.word:
            if s not in syms:
                raise ValueError(f"input symbol {s!r} not in alphabet")
        if self.budget < 0:
            raise ValueError("step budget must be nonnegative")


def ntm_accepts(inst: NTMInstance, cap_steps: int = 8,
                cap_size: int = 100_000) -> bool:
    """Exact bounded acceptance: some run of exactly `budget` steps ends
    in an accepting state.  Configurations deduplicated per depth."""
    m, word, steps = inst.machine, inst.word, inst.budget
    if steps > cap_steps:
        raise CapExceeded(f"step budget {steps} exceeds cap {cap_steps}")
    if len(m.states) * (len(m.sigma) + 1) > cap_size:
        raise CapExceeded("machine too large for exhaustive simulation")
    table = m.moves_from()
    offset = steps
    width = 2 * steps + 1
    tape = [BLANK] * width
    for i, s in enumerate(word[: steps + 1]):
        tape[i + offset] = s
    frontier = {(m.initial, 0, tuple(tape))}
    for _ in range(steps):
        nxt = set()
        for (q, pos, cells) in frontier:
            read = cells[pos + offset]
            for (write, q2, move) in table.get((read, q), ()):
                new_cells = list(cells)
                new_cells[pos + offset] = write
                nxt.add((q2, pos + move, tuple(new_cells)))
        frontier = nxt
        if not frontier:
            return False
    return any(q in m.accepting for (q, _, _) in frontier)


# -- file format ------------------------------------------------------------


def _name(value) -> str:
    if isinstance(value, tuple):
        return "(" + ",".join(_name(v) for v in value) + ")"
    return str(value)


def parse_ntm(text: str) -> NTMInstance:
    sigma = None
    states = None
    initial = None
    accepting = frozenset()
    delta = set()
    word = ()
    steps = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "alphabet":
                sigma = tuple(parts[1:])
            elif tag == "states":
                states = tuple(parts[1:])
            elif tag == "initial":
                initial = parts[1]
            elif tag == "accept":
                accepting = frozenset(parts[1:])
            elif tag == "trans":
                if parts[3] != "->" or len(parts) != 7:
                    raise ParseError(
                        "expected 'trans <q> <read> -> <q2> <write> <L|S|R>'",
                        lineno,
                    )
                move = _MOVES.get(parts[6])
                if move is None:
                    raise ParseError(f"bad move {parts[6]!r}", lineno)
                delta.add(((parts[2], parts[1]), (parts[5], parts[4], move)))
            elif tag == "input":
                tokens = parts[1:]
                if len(tokens) == 1 and sigma and tokens[0] not in sigma:
                    word = tuple(tokens[0])
                else:
                    word = tuple(tokens)
            elif tag == "steps":
                steps = int(parts[1])
            else:
                raise ParseError(f"unknown line tag {tag!r}", lineno)
        except ParseError:
            raise
        except (IndexError, ValueError) as exc:
            raise ParseError(str(exc), lineno) from exc
    if sigma is None or states is None or initial is None or steps is None:
        raise ParseError("machine needs alphabet, states, initial, steps")
    try:
        machine = NTMachine(
            sigma=sigma,
            states=states,
            initial=initial,
            accepting=accepting,
            delta=frozenset(delta),
        )
        return NTMInstance(machine=machine, word=word, budget=steps)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def serialize_ntm(inst: NTMInstance) -> str:
    m = inst.machine
    lines = ["alphabet " + " ".join(_name(s) for s in m.sigma)]
    lines.append("states " + " ".join(_name(q) for q in m.states))
    lines.append("initial " + _name(m.initial))
    lines.append("accept " + " ".join(sorted(_name(q) for q in m.accepting)))
    for ((read, q), (write, q2, move)) in sorted(m.delta, key=repr):
        lines.append(
            f"trans {_name(q)} {_name(read)} -> {_name(q2)} {_name(write)}"
            f" {_MOVE_NAMES[move]}"
        )
    lines.append("input " + " ".join(_name(s) for s in inst.word))
    lines.append(f"steps {inst.budget}")
    return "\n".join(lines) + "\n"


# -- canonical machines -----------------------------------------------------


def _loop_machine(sigma, accept: bool) -> NTMachine:
    """One-state machine that loops on every symbol."""
    q = "qa" if accept else "qn"
    write = sigma[0] if sigma else None
    delta = set()
    if write is not None:
        for s in tuple(sigma) + (BLANK,):
            delta.add(((s, q), (write, q, 0)))
    return NTMachine(
        sigma=tuple(sigma),
        states=(q,),
        initial=q,
        accepting=frozenset({q}) if accept else frozenset(),
        delta=frozenset(delta),
    )


def canonical_sigma(verdict: bool, sigma, budget: int) -> ParamInstance:
    """Canonical instance over a prescribed alphabet at a given budget."""
    m = _loop_machine(sigma, verdict)
    if budget >= 1 and not m.delta:
        # An empty alphabet cannot sustain a positive-length run.
        return token_instance(verdict, budget + len(sigma))
    inst = NTMInstance(machine=m, word=(), budget=budget)
    return ParamInstance(inst, budget + len(sigma))


# -- the k + |sigma| diminisher ---------------------------------------------

_Q0 = ("init",)
_QBAR = ("reject",)


def _prune(machine: NTMachine) -> NTMachine:
    """Drop states unreachable from the initial state through delta."""
    out = {}
    for ((read, q), action) in machine.delta:
        out.setdefault(q, []).append(((read, q), action))
    seen = {machine.initial}
    stack = [machine.initial]
    while stack:
        q = stack.pop()
        for (_, (_, q2, _)) in out.get(q, ()):
            if q2 not in seen:
                seen.add(q2)
                stack.append(q2)
    states = tuple(q for q in machine.states if q in seen)
    delta = frozenset(
        t for t in machine.delta if t[0][1] in seen and t[1][1] in seen
    )
    return NTMachine(
        sigma=machine.sigma,
        states=states,
        initial=machine.initial,
        accepting=frozenset(q for q in machine.accepting if q in seen),
        delta=delta,
    )


def diminish_ntm_sigma(inst: ParamInstance) -> ParamInstance:
    """Merge the last two steps: guess the cell read in the final step and
    track its content through the run.  Alphabet unchanged, budget k-1."""
    raw: NTMInstance = inst.payload
    m, word, k = raw.machine, raw.word, raw.budget
    if k == 0:
        return token_instance(ntm_accepts(raw), inst.k - 1) if inst.k else inst
    if k == 1:
        return canonical_sigma(ntm_accepts(raw), m.sigma, 0)
    table = m.moves_from()
    reads = tuple(m.sigma) + (BLANK,)
    guesses = range(-(k - 1), k)

    def init_content(i: int):
        return word[i] if 0 <= i < len(word) else BLANK

    delta = set()
    states = {_Q0, _QBAR}

    def merged_targets(q2, content, i):
        # Returns final states reached by executing the guessed last step.
        finals = []
        for (w2, q3, m2) in table.get((content, q2), ()):
            finals.append((q3, w2, i, i + m2, k - 1))
        return finals

    if k == 2:
        for s in reads:
            for (w, q2, mv) in table.get((s, m.initial), ()):
                i = mv  # the guessed cell must be where the head lands
                content = w if i == 0 else init_content(i)
                finals = merged_targets(q2, content, i)
                if not finals:
                    delta.add(((s, _Q0), (w, _QBAR, mv)))
                    continue
                for fq in finals:
                    states.add(fq)
                    delta.add(((s, _Q0), (w, fq, mv)))
    else:
        frontier = []
        for s in reads:
            for (w, q2, mv) in table.get((s, m.initial), ()):
                for i in guesses:
                    content = w if i == 0 else init_content(i)
                    tgt = (q2, content, i, mv, 1)
                    delta.add(((s, _Q0), (w, tgt, mv)))
                    if tgt not in states:
                        states.add(tgt)
                        frontier.append(tgt)
        while frontier:
            state = frontier.pop()
            q, sigma_i, i, j, t = state
            if t >= k - 1:
                continue  # final states need no outgoing moves
            for s in reads:
                for (w, q2, mv) in table.get((s, q), ()):
                    if t <= k - 3:
                        tracked = w if j == i else sigma_i
                        tgt = (q2, tracked, i, j + mv, t + 1)
                        delta.add(((s, state), (w, tgt, mv)))
                        if tgt not in states:
                            states.add(tgt)
                            frontier.append(tgt)
                    else:  # t == k - 2: the merged double step
                        if j + mv != i:
                            continue  # wrong guess, this run dies
                        content = w if j == i else sigma_i
                        finals = merged_targets(q2, content, i)
                        if not finals:
                            delta.add(((s, state), (w, _QBAR, mv)))
                            continue
                        for fq in finals:
                            delta.add(((s, state), (w, fq, mv)))
                            if fq not in states:
                                states.add(fq)
                                frontier.append(fq)

    def is_accepting(q) -> bool:
        if q == _Q0:
            return m.initial in m.accepting
        if q == _QBAR:
            return False
        return q[0] in m.accepting

    ordered = [_Q0] + sorted((q for q in states if q not in (_Q0, _QBAR)),
                             key=repr) + [_QBAR]
    out_machine = _prune(
        NTMachine(
            sigma=m.sigma,
            states=tuple(ordered),
            initial=_Q0,
            accepting=frozenset(q for q in ordered if is_accepting(q)),
            delta=frozenset(delta),
        )
    )
    out = NTMInstance(machine=out_machine, word=word, budget=k - 1)
    return ParamInstance(out, inst.k - 1)


def sigma_state_bound(machine: NTMachine, k: int) -> int:
    """Declared ceiling on the constructed state count."""
    q = len(machine.states)
    s = len(machine.sigma)
    return q * (s + 1) * (2 * k + 1) ** 2 * (k - 1) + 2


# -- the k + |Q| diminisher -------------------------------------------------


def _window_map(symbol):
    """Contents of virtual cells -1, 0, +1 encoded in a merged symbol."""
    c_left, c_mid, c_right, tag = symbol
    return {-1: c_left, 0: c_mid, 1: c_right}, tag


def _merged(cells, tag):
    return (cells[-1], cells[0], cells[1], tag)


def diminish_ntm_states(inst: ParamInstance) -> ParamInstance:
    """Merge the first two steps into a combined tape cell holding the
    three-cell starting window.  State set unchanged, budget k-1."""
    raw: NTMInstance = inst.payload
    m, word, k = raw.machine, raw.word, raw.budget
    if k == 0:
        return token_instance(ntm_accepts(raw), inst.k - 1) if inst.k else inst
    if k == 1:
        verdict = ntm_accepts(raw)
        # Zero remaining steps: acceptance is fixed by the initial state,
        # which we cannot change without touching Q.
        if verdict != (m.initial in m.accepting):
            return token_instance(verdict, inst.k - 1)
        out = NTMInstance(
            machine=NTMachine(
                sigma=m.sigma,
                states=m.states,
                initial=m.initial,
                accepting=m.accepting,
                delta=frozenset(),
            ),
            word=(),
            budget=0,
        )
        return ParamInstance(out, inst.k - 1)
    table = m.moves_from()
    x0 = word[0] if len(word) >= 1 else BLANK
    x1 = word[1] if len(word) >= 2 else BLANK
    start = (BLANK, x0, x1, "S")

    merged_symbols = set()
    delta = set()

    def emit_merged_rules(symbol):
        """Transitions for one merged symbol under every state."""
        cells, tag = _window_map(symbol)
        if tag == "S":
            # Double step: virtual head at 0, execute two moves of M.
            for (w1, q1, m1) in table.get((cells[0], m.initial), ()):
                mid = dict(cells)
                mid[0] = w1
                for (w2, q2, m2) in table.get((mid[m1], q1), ()):
                    after = dict(mid)
                    after[m1] = w2
                    v2 = m1 + m2
                    if -1 <= v2 <= 1:
                        sym2 = _merged(after, v2)
                        delta.add(((symbol, m.initial), (sym2, q2, 0)))
                    else:
                        sym2 = _merged(after, 1 if v2 > 0 else -1)
                        delta.add(
                            ((symbol, m.initial), (sym2, q2, 1 if v2 > 0 else -1))
                        )
                    _register(sym2)
            return
        v = tag  # virtual head position inside the window
        for q in m.states:
            for (w, q2, mv) in table.get((cells[v], q), ()):
                after = dict(cells)
                after[v] = w
                v2 = v + mv
                if -1 <= v2 <= 1:
                    sym2 = _merged(after, v2)
                    delta.add(((symbol, q), (sym2, q2, 0)))
                else:
                    sym2 = _merged(after, 1 if v2 > 0 else -1)
                    delta.add(((symbol, q), (sym2, q2, 1 if v2 > 0 else -1)))
                _register(sym2)

    pending = []

    def _register(symbol):
        if symbol not in merged_symbols:
            merged_symbols.add(symbol)
            pending.append(symbol)

    _register(start)
    while pending:
        emit_merged_rules(pending.pop())

    # Plain-symbol transitions mimic M outside the window.
    for ((read, q), (write, q2, move)) in m.delta:
        delta.add(((read, q), (write, q2, move)))

    sigma_out = tuple(m.sigma) + tuple(sorted(merged_symbols, key=repr))
    out_machine = NTMachine(
        sigma=sigma_out,
        states=m.states,
        initial=m.initial,
        accepting=m.accepting,
        delta=frozenset(delta),
    )
    out_word = (start,) + tuple(word[2:])
    out = NTMInstance(machine=out_machine, word=out_word, budget=k - 1)
    return ParamInstance(out, inst.k - 1)


# -- contracts, generators, descriptors -------------------------------------


def ntm_sigma_diminisher() -> DiminisherContract:
    return DiminisherContract(
        transform=diminish_ntm_sigma,
        kind=STRICT_DECREASE,
        declared_size_poly=3,
        name="ntm-sigma-diminisher",
    )


def ntm_states_diminisher() -> DiminisherContract:
    return DiminisherContract(
        transform=diminish_ntm_states,
        kind=STRICT_DECREASE,
        declared_size_poly=3,
        name="ntm-states-diminisher",
    )


def random_machine(rng: random.Random, n_states: int, sigma) -> NTMachine:
    """Each (symbol, state) pair receives 0-2 uniformly random moves."""
    sigma = tuple(sigma)
    states = tuple(f"q{i}" for i in range(n_states))
    accepting = frozenset(q for q in states if rng.random() < 0.5)
    delta = set()
    for read in sigma + (BLANK,):
        for q in states:
            for _ in range(rng.randint(0, 2)):
                delta.add(
                    (
                        (read, q),
                        (rng.choice(sigma), rng.choice(states),
                         rng.choice((-1, 0, 1))),
                    )
                )
    return NTMachine(
        sigma=sigma,
        states=states,
        initial=states[0],
        accepting=accepting,
        delta=frozenset(delta),
    )


def _gen_tm(rng: random.Random, tag: str) -> ParamInstance:
    sigma = ("a", "b")
    if tag == "ntm_states" and rng.random() < 0.3:
        sigma = ("a",)
    machine = random_machine(rng, rng.randint(2, 3), sigma)
    word = tuple(rng.choice(sigma) for _ in range(rng.randint(0, 3)))
    budget = rng.randint(2, 4)
    inst = NTMInstance(machine=machine, word=word, budget=budget)
    return ParamInstance(inst, _tm_param(tag, inst))


def _tm_param(tag: str, inst: NTMInstance) -> int:
    if tag == "ntm_sigma":
        return inst.budget + len(inst.machine.sigma)
    if tag == "ntm_states":
        return inst.budget + len(inst.machine.states)
    if tag == "ntm_binary":
        return inst.budget
    raise GuardError(f"unknown TM tag {tag!r}")


def _tm_trivial(tag: str, verdict: bool, p: int) -> ParamInstance:
    if tag == "ntm_binary":
        m = _loop_machine(("a", "b"), verdict)
        return ParamInstance(NTMInstance(machine=m, word=(), budget=p), p)
    if p == 0:
        return token_instance(verdict, 0)
    m = _loop_machine(("a",), verdict)
    inst = NTMInstance(machine=m, word=(), budget=p - 1)
    return ParamInstance(inst, p)


def serialize_tm_instance(inst: ParamInstance) -> str:
    verdict = token_verdict(inst)
    if verdict is not None:
        return f"token {'yes' if verdict else 'no'}\nk {inst.k}\n"
    return serialize_ntm(inst.payload)


def parse_tm_instance(tag: str, text: str) -> ParamInstance:
    stripped = text.strip()
    if stripped.startswith("token"):
        verdict = None
        k_value = 0
        for line in stripped.splitlines():
            parts = line.split()
            if parts[0] == "token":
                verdict = parts[1] == "yes"
            elif parts[0] == "k":
                k_value = int(parts[1])
        return token_instance(verdict, k_value)
    raw = parse_ntm(text)
    return ParamInstance(raw, _tm_param(tag, raw))


def _binary_sigma_dim(inst: ParamInstance) -> ParamInstance:
    """The alphabet-preserving construction viewed at parameter k only."""
    raw: NTMInstance = inst.payload
    if raw.budget == 0:
        return inst
    out = diminish_ntm_sigma(
        ParamInstance(raw, raw.budget + len(raw.machine.sigma))
    )
    tv = token_verdict(out)
    if tv is not None:
        return token_instance(tv, inst.k - 1)
    return ParamInstance(out.payload, out.payload.budget)


def ntm_binary_diminisher() -> DiminisherContract:
    return DiminisherContract(
        transform=_binary_sigma_dim,
        kind=STRICT_DECREASE,
        declared_size_poly=3,
        name="ntm-binary-diminisher",
    )


TM_TAGS = ("ntm_sigma", "ntm_states", "ntm_binary")


def tm_descriptor(tag: str) -> ProblemDescriptor:
    if tag not in TM_TAGS:
        raise GuardError(f"no TM descriptor for tag {tag!r}")

    def oracle(inst: ParamInstance) -> bool:
        tv = token_verdict(inst)
        if tv is not None:
            return tv
        return ntm_accepts(inst.payload)

    return ProblemDescriptor(
        name=tag,
        oracle=oracle,
        trivial_yes=lambda p, t=tag: _tm_trivial(t, True, p),
        trivial_no=lambda p, t=tag: _tm_trivial(t, False, p),
        generate=lambda rng, t=tag: _gen_tm(rng, t),
        serialize=serialize_tm_instance,
    )


def tm_diminisher(tag: str) -> DiminisherContract:
    if tag == "ntm_sigma":
        return ntm_sigma_diminisher()
    if tag == "ntm_states":
        return ntm_states_diminisher()
    if tag == "ntm_binary":
        return ntm_binary_diminisher()
    raise GuardError(f"no TM diminisher for tag {tag!r}")
