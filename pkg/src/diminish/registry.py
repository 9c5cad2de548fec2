"""Central lookup from problem tags to descriptors, diminishers, parsers.

Also binds the companion kernels used by the solving loops and the
deliberately broken diminisher fixtures used by the mutation tests.
"""

from __future__ import annotations

from .core import (
    ParamInstance,
    ProblemDescriptor,
    DiminisherContract,
    token_instance,
    unary_threshold_descriptor,
)
from .errors import ParseError
from . import graph_diminishers as gd
from . import mutations
from . import setcover as sc
from . import tm
from .setcover import parse_set_system

ALL_TAGS = (
    gd.GRAPH_TAGS + tm.TM_TAGS + sc.SET_TAGS + ("unary_threshold",)
)

BROKEN_TAGS = ("broken_mc_path", "broken_tst", "broken_ntm_sigma")

# Friendlier CLI spellings.
ALIASES = {
    "setcover": "setcover_strong",
    "hittingset": "hittingset_strong",
}

_BROKEN_BASE = {
    "broken_mc_path": "mc_path",
    "broken_tst": "tst",
    "broken_ntm_sigma": "ntm_sigma",
}


def resolve_tag(name: str) -> str:
    tag = ALIASES.get(name, name)
    if tag not in ALL_TAGS + BROKEN_TAGS:
        raise KeyError(f"unknown problem tag {name!r}")
    return tag


def descriptor(tag: str) -> ProblemDescriptor:
    tag = resolve_tag(tag)
    if tag in _BROKEN_BASE:
        return descriptor(_BROKEN_BASE[tag])
    if tag in gd.GRAPH_TAGS:
        return gd.graph_descriptor(tag)
    if tag in tm.TM_TAGS:
        return tm.tm_descriptor(tag)
    if tag in sc.SET_TAGS:
        return sc.set_descriptor(tag)
    if tag == "unary_threshold":
        return unary_threshold_descriptor()[0]
    raise KeyError(tag)


def diminisher(tag: str) -> DiminisherContract:
    tag = resolve_tag(tag)
    if tag == "broken_mc_path":
        return mutations.broken_mc_path_diminisher()
    if tag == "broken_tst":
        return mutations.broken_tst_diminisher()
    if tag == "broken_ntm_sigma":
        return mutations.broken_ntm_sigma_diminisher()
    if tag in gd.GRAPH_TAGS:
        return gd.graph_diminisher(tag)
    if tag in tm.TM_TAGS:
        return tm.tm_diminisher(tag)
    if tag in sc.SET_TAGS:
        return sc.set_diminisher(tag)
    if tag == "unary_threshold":
        return unary_threshold_descriptor()[1]
    raise KeyError(tag)


def solving_bundle():
    """The full unary-threshold toolkit for the loop and strong-loop
    commands: (descriptor, diminisher, strict kernel, strong diminisher,
    semi-strict kernel)."""
    return unary_threshold_descriptor()


def _parse_unary_threshold(text: str) -> ParamInstance:
    bits = ""
    k = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split("#", 1)[0].split()
        if not parts:
            continue
        if parts[0] == "x":
            bits = parts[1] if len(parts) > 1 else ""
            if set(bits) - {"0", "1"}:
                raise ParseError("x line must be a bitstring", lineno)
        elif parts[0] == "k":
            k = int(parts[1])
        else:
            raise ParseError(f"unknown line tag {parts[0]!r}", lineno)
    if k is None:
        raise ParseError("missing 'k <value>' line")
    return ParamInstance(bits, k)


def parse_instance(tag: str, text: str) -> ParamInstance:
    tag = resolve_tag(tag)
    tag = _BROKEN_BASE.get(tag, tag)
    stripped = text.strip()
    if stripped.startswith("token"):
        verdict = None
        k = 0
        for line in stripped.splitlines():
            parts = line.split()
            if parts and parts[0] == "token":
                verdict = parts[1] == "yes"
            elif parts and parts[0] == "k":
                k = int(parts[1])
        if verdict is None:
            raise ParseError("token line needs yes/no")
        return token_instance(verdict, k)
    if tag in gd.GRAPH_TAGS:
        return gd.parse_instance(tag, text)
    if tag in tm.TM_TAGS:
        return tm.parse_tm_instance(tag, text)
    if tag in sc.SET_TAGS:
        raw, _problem = parse_set_system(text)
        return ParamInstance(raw, raw.k)
    if tag == "unary_threshold":
        return _parse_unary_threshold(text)
    raise KeyError(tag)


def serialize_instance(tag: str, inst: ParamInstance) -> str:
    tag = resolve_tag(tag)
    tag = _BROKEN_BASE.get(tag, tag)
    return descriptor(tag).serialize(inst)
