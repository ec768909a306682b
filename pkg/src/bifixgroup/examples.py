"""Bundled worked examples with their expected report fields."""
from __future__ import annotations

import json
import operator
from dataclasses import dataclass
from importlib import resources

from . import automata as au
from .automata import Dfa
from .shifts import RecurrentSet, load_shift

OPS = {"==": operator.eq, "<": operator.lt, "<=": operator.le}


def data_path(name: str):
    return resources.files("bifixgroup") / "data" / name


def load_json(name: str) -> dict:
    return json.loads(data_path(name).read_text())


def load_code(name: str) -> Dfa:
    return au.from_json_spec(load_json(name))


def load_set(name: str) -> RecurrentSet:
    return load_shift(load_json(name))


@dataclass(frozen=True)
class Expectation:
    path: str          # dotted path into the report dict
    op: str
    value: object
    source: str        # where the expected value comes from

    def lookup(self, report: dict):
        cur = report
        for part in self.path.split("."):
            cur = cur[part]
        return cur

    def check(self, report: dict) -> tuple[bool, object]:
        try:
            got = self.lookup(report)
        except (KeyError, TypeError):
            return False, None
        return OPS[self.op](got, self.value), got


@dataclass(frozen=True)
class Example:
    name: str
    code: str
    shift: str
    expectations: tuple[Expectation, ...]
    equivalence: bool = False


def _e(path, value, source, op="=="):
    return Expectation(path, op, value, source)


REGISTRY: dict[str, Example] = {ex.name: ex for ex in [
    Example("fibonacci-degree2", "a2.json", "fibonacci.json", (
        _e("dZ", 2, "worked example: Z = A^2 over the Fibonacci set"),
        _e("dFX", 2, "worked example: Z = A^2 over the Fibonacci set"),
        _e("GFX.order", 2, "worked example: cyclic group of order 2"),
        _e("charged", True, "derived: degree and group agree"),
        _e("weakly_charged", True, "worked example: X weakly charged"),
        _e("evidence.X_star_states", 3, "worked example: 3-state automaton of X*"),
    ), equivalence=True),
    Example("even-shift-s3", "evenZ.json", "even.json", (
        _e("dZ", 3, "worked example: even shift"),
        _e("dFX", 3, "worked example: even shift"),
        _e("GFX.name", "S3", "worked example: G_E(X) is S3"),
        _e("GZ.name", "S3", "worked example: G(Z) is S3"),
        _e("charged", True, "worked example: Z is E-charged"),
        _e("evidence.monoid_X", 221, "worked example: M(X*) has 221 elements"),
    ), equivalence=True),
    Example("thue-morse-a5", "thue_morse_z.json", "thue_morse.json", (
        _e("dZ", 5, "worked example: group code a=(123), b=(345)"),
        _e("dFX", 5, "worked example: d_F(X) = d(Z) = 5"),
        _e("GZ.name", "A5", "worked example: G(Z) = A5"),
        _e("GFX.name", "A5", "worked example: G_F(X) = A5"),
        _e("charged", True, "worked example: Z is F-charged"),
        _e("weakly_charged", True, "worked example: X weakly F-charged"),
        _e("equivalence.degree", 5, "derived: equivalence of degree d(Z)"),
    ), equivalence=True),
    Example("phi-degree4", "s4_z.json", "phi.json", (
        _e("dZ", 4, "worked example: group code with G(Z) = S4"),
        _e("GZ.name", "S4", "worked example: G(Z) = S4"),
        _e("dFX", 4, "worked example: d_F(Z ∩ F) < d(Z)", "<"),
        _e("charged", False, "derived: the degree drops"),
        _e("evidence.consistency.items", {"1": False, "2": False, "3": False}, "derived: all items false"),
    )),
    Example("tribonacci-connected", "a2_ac.json", "tribonacci_ac.json", (
        _e("dZ", 2, "trivial: A^2 has degree 2"),
        _e("dFX", 2, "connected set: d_F(X) = d(Z)"),
        _e("GFX.order", 2, "connected set: G_F(X) isomorphic to G(Z)"),
        _e("evidence.consistency.agree", True, "derived: items agree"),
    )),
]}
