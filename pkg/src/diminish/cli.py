"""Command-line surface: apply diminishers, verify them, run the loops.

Subcommands: diminish, verify, solve, param, loop, accelerate.  Every
command is deterministic given its input file, flags, and seed.  Reports
go to stdout either as plain text or as JSON lines (--format jsonl).

Exit codes: 0 success, 1 verification failure, 2 input error, 3 cap
refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Optional

from . import registry
from .core import (
    KernelContract,
    ParamInstance,
    diminish_kernelize_loop,
    strong_loop,
    accelerated_solve,
    verify_diminisher,
)
from .errors import CapExceeded, ContractViolation, GuardError, ParseError
from .graphs import WIDTH_FUNCTIONS, AnnotatedGraph
from .setcover import SetSystemInstance, param_klogm, param_klogn
from .tm import NTMInstance

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3

DEFAULT_MAX_N = 12
DEFAULT_MAX_K = 8


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diminish",
        description="Apply, verify, and iterate parameter diminishers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in ("diminish", "verify", "solve", "param", "loop",
                    "accelerate"):
        p = sub.add_parser(command)
        p.add_argument("--problem", required=True)
        p.add_argument("--input")
        p.add_argument("--output")
        p.add_argument("--rounds", type=int, default=1)
        p.add_argument("--trials", type=int, default=100)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
        p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
        p.add_argument("--which")
        p.add_argument("--format", choices=("text", "jsonl"), default="text")
    return parser


class _Emitter:
    """Writes either human-readable lines or one JSON object per line."""

    def __init__(self, fmt: str, stream=None):
        self.jsonl = fmt == "jsonl"
        self.stream = stream or sys.stdout

    def emit(self, record: dict, text: str) -> None:
        if self.jsonl:
            print(json.dumps(record, sort_keys=True), file=self.stream)
        else:
            print(text, file=self.stream)


def _payload_graph(payload) -> Optional[AnnotatedGraph]:
    if isinstance(payload, AnnotatedGraph):
        return payload
    if isinstance(payload, tuple) and payload and isinstance(
        payload[0], AnnotatedGraph
    ):
        return payload[0]
    return None


def _enforce_caps(inst: ParamInstance, max_n: int, max_k: int) -> None:
    g = _payload_graph(inst.payload)
    if g is not None and g.n > max_n:
        raise CapExceeded(f"graph has n={g.n}, cap is {max_n}")
    if isinstance(inst.payload, NTMInstance) and inst.payload.budget > max_k:
        raise CapExceeded(
            f"machine budget {inst.payload.budget} exceeds cap {max_k}"
        )
    if isinstance(inst.payload, SetSystemInstance):
        sys_in = inst.payload
        if max(sys_in.n, sys_in.m) > max_n:
            raise CapExceeded(
                f"set system has n={sys_in.n}, m={sys_in.m}, cap is {max_n}"
            )


def _load_instance(args) -> ParamInstance:
    if not args.input:
        raise ParseError("this command needs --input <file>")
    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc}") from exc
    inst = registry.parse_instance(args.problem, text)
    _enforce_caps(inst, args.max_n, args.max_k)
    return inst


def cmd_diminish(args, out: _Emitter) -> int:
    dim = registry.diminisher(args.problem)
    prob = registry.descriptor(args.problem)
    if args.rounds < 1:
        raise ParseError("--rounds must be at least 1")
    inst = _load_instance(args)
    trajectory = [inst.k]
    floored = False
    for rnd in range(1, args.rounds + 1):
        if inst.k == 0:
            floored = True
            break
        size_in = prob.size(inst)
        nxt = dim.apply(inst)
        record = {
            "event": "round",
            "round": rnd,
            "k_in": inst.k,
            "k_out": nxt.k,
            "size_in": size_in,
            "size_out": prob.size(nxt),
            "branches": dim.branch_count(inst),
        }
        out.emit(
            record,
            f"round {rnd}: k {inst.k} -> {nxt.k},"
            f" size {size_in} -> {record['size_out']}",
        )
        inst = nxt
        trajectory.append(inst.k)
    if floored:
        out.emit(
            {"event": "note", "message": "parameter floor reached"},
            "parameter floor reached; remaining rounds skipped",
        )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(registry.serialize_instance(args.problem, inst))
    path = " -> ".join(str(k) for k in trajectory)
    out.emit(
        {"event": "trajectory", "parameters": trajectory},
        f"parameter trajectory: {path}",
    )
    return EXIT_OK


def cmd_verify(args, out: _Emitter) -> int:
    dim = registry.diminisher(args.problem)
    prob = registry.descriptor(args.problem)
    if args.trials < 0:
        raise ParseError("--trials must be nonnegative")
    reports = verify_diminisher(dim, prob, trials=args.trials, seed=args.seed)
    failures = [r for r in reports if not r.equivalent]
    if out.jsonl:
        for i, rep in enumerate(reports):
            record = {"event": "trial", "index": i}
            record.update(rep.as_dict())
            out.emit(record, "")
    summary = {
        "event": "summary",
        "trials": len(reports),
        "passed": len(reports) - len(failures),
        "failed": len(failures),
    }
    if args.trials == 0:
        out.emit(summary, "0 trials requested; nothing to verify")
        return EXIT_OK
    out.emit(
        summary,
        f"trials: {summary['trials']},"
        f" passed: {summary['passed']}, failed: {summary['failed']}",
    )
    if not failures:
        return EXIT_OK
    counterexample = failures[0].counterexample or ""
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(counterexample)
        out.emit(
            {"event": "counterexample", "path": args.output},
            f"counterexample written to {args.output}",
        )
    else:
        out.emit(
            {"event": "counterexample", "instance": counterexample},
            "counterexample:\n" + counterexample,
        )
    return EXIT_VERIFY_FAIL


def cmd_solve(args, out: _Emitter) -> int:
    prob = registry.descriptor(args.problem)
    inst = _load_instance(args)
    verdict = prob.oracle(inst)
    answer = "YES" if verdict else "NO"
    out.emit({"event": "answer", "verdict": answer}, answer)
    return EXIT_OK


def cmd_param(args, out: _Emitter) -> int:
    which = args.which or "k"
    inst = _load_instance(args)
    if which == "k":
        out.emit({"event": "param", "which": "k", "value": inst.k},
                 f"k = {inst.k}")
        return EXIT_OK
    if which in WIDTH_FUNCTIONS:
        g = _payload_graph(inst.payload)
        if g is None:
            raise ParseError(f"--which {which} needs a graph instance")
        width = WIDTH_FUNCTIONS[which](g, cap=args.max_n)
        out.emit(
            {"event": "param", "which": which, "value": width.value},
            f"{which} = {width.value}",
        )
        return EXIT_OK
    if which in ("klogn", "klogm"):
        if not isinstance(inst.payload, SetSystemInstance):
            raise ParseError(f"--which {which} needs a set-system instance")
        value = (param_klogn if which == "klogn" else param_klogm)(inst)
        out.emit(
            {
                "event": "param",
                "which": which,
                "k": value.k,
                "base": value.base,
                "approx": value.approx(),
            },
            f"{which} = {value.k} * log2({value.base}) = {value.approx():.4f}",
        )
        return EXIT_OK
    raise ParseError(
        f"unknown --which {which!r}; choose k, klogn, klogm,"
        f" or one of {sorted(WIDTH_FUNCTIONS)}"
    )


def cmd_loop(args, out: _Emitter) -> int:
    if registry.resolve_tag(args.problem) != "unary_threshold":
        raise ParseError("loop runs on the unary_threshold problem only")
    prob, dim, kern, strong, semi = registry.solving_bundle()
    inst = _load_instance(args)
    mode = args.which or "strict"
    if mode not in ("strict", "strong"):
        raise ParseError("--which must be 'strict' or 'strong' for loop")

    latest = {"inst": inst}

    def watch_dim(transform):
        def inner(cur):
            nxt = transform(cur)
            latest["inst"] = nxt
            return nxt
        return inner

    class _SizedTrace(list):
        def append(self, item):
            k, rnd = item
            super().append((rnd, k, prob.size(latest["inst"])))

    trace = _SizedTrace()
    if mode == "strict":
        dim2 = replace(dim, transform=watch_dim(dim.transform))
        kern2 = KernelContract(
            kernelize=watch_dim(kern.kernelize),
            kind=kern.kind,
            constant=kern.constant,
            size_poly_exponent=kern.size_poly_exponent,
            name=kern.name,
        )
        verdict = diminish_kernelize_loop(
            dim2, kern2, prob.oracle, inst, trace=trace
        )
    else:
        strong2 = replace(strong, transform=watch_dim(strong.transform))
        semi2 = KernelContract(
            kernelize=watch_dim(semi.kernelize),
            kind=semi.kind,
            constant=semi.constant,
            size_poly_exponent=semi.size_poly_exponent,
            name=semi.name,
        )
        verdict = strong_loop(strong2, semi2, prob.oracle, inst, trace=trace)
    for rnd, k, size in trace:
        out.emit(
            {"event": "round", "round": rnd, "k": k, "size": size},
            f"round {rnd}: k={k}, size={size}",
        )
    answer = "YES" if verdict else "NO"
    out.emit(
        {"event": "answer", "verdict": answer, "rounds": len(trace)},
        f"{answer} after {len(trace)} rounds",
    )
    return EXIT_OK


def cmd_accelerate(args, out: _Emitter) -> int:
    tag = registry.resolve_tag(args.problem)
    if tag not in ("setcover_strong", "hittingset_strong"):
        raise ParseError("accelerate runs on set-system problems only")
    prob = registry.descriptor(tag)
    dim = registry.diminisher(tag)
    inst = _load_instance(args)

    def speedup(cur: ParamInstance) -> int:
        sys_in: SetSystemInstance = cur.payload
        return max(sys_in.n, 1).bit_length() - 1

    applications: list = []
    verdict = accelerated_solve(
        dim, prob.oracle, speedup, inst, prob.size, applications=applications
    )
    answer = "YES" if verdict else "NO"
    reps = applications[0] if applications else 0
    out.emit(
        {"event": "answer", "verdict": answer, "applications": reps},
        f"{answer} after {reps} diminisher applications",
    )
    return EXIT_OK


_COMMANDS = {
    "diminish": cmd_diminish,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "param": cmd_param,
    "loop": cmd_loop,
    "accelerate": cmd_accelerate,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    out = _Emitter(args.format)
    try:
        return _COMMANDS[args.command](args, out)
    except (ParseError, GuardError, KeyError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"cap refusal: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL


if __name__ == "__main__":
    sys.exit(main())
