"""Character tables, p-blocks, Sylow and subnormalizer computations for
permutation groups, with checks of the picky and subnormalizer conjectures."""

import json

from . import _core
from ._core import (
    EngineError,
    Group,
    InvalidArgument,
    ParseError,
    ResourceError,
    check_names,
    group,
    group_from_generators,
    is_subnormal,
    mn_value,
    partition_degree,
    subnormalizer,
)

__all__ = [
    "EngineError",
    "Group",
    "InvalidArgument",
    "ParseError",
    "ResourceError",
    "blocks",
    "character_table",
    "check",
    "check_all",
    "check_names",
    "group",
    "group_from_generators",
    "is_subnormal",
    "mn_value",
    "partition_degree",
    "picky",
    "run_cli",
    "subnormalizer",
    "sylow",
    "table1",
]


def character_table(g):
    return json.loads(_core.character_table(g))


def blocks(g, p):
    return json.loads(_core.blocks(g, p))


def sylow(g, p):
    return json.loads(_core.sylow(g, p))


def picky(g, p, x):
    return json.loads(_core.picky(g, p, x))


def check(g, name, p, variant="plain", label="G"):
    return json.loads(_core.check(g, name, p, variant, label))


def check_all(g, p, label="G"):
    return json.loads(_core.check_all(g, p, label))


def table1():
    return json.loads(_core.table1())


def run_cli(*args):
    """Run the command line in-process; returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
