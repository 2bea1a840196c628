"""Turn a dataclass of experiment settings into a command line."""

from __future__ import annotations

import argparse
import dataclasses
from fractions import Fraction


def parse_config(cls, description: str, argv=None):
    parser = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        kind = f.type if isinstance(f.type, type) else eval(f.type, {"Fraction": Fraction, "int": int, "str": str})
        parser.add_argument(f"--{f.name.replace('_', '-')}", type=kind, default=f.default)
    return cls(**vars(parser.parse_args(argv)))
