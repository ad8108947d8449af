"""Scenario files: a pair, its validation route, optional partners
and subfield, and the frozen numbers a run must reproduce.

A scenario is one JSON object:

    {
      "version": 1,
      "id": "S1",
      "description": "free text",
      "base": "Qp" | "Fpt",
      "p": 2,
      "q": ["-2", "0", "1"],            Q, constant coefficient first
      "gamma": "1" | ["1", "-1"],
      "minimality": {
        "mode": "krasner" | "bruteforce" | "assert",
        "candidates": [["-1", "1"], ...]
      },
      "partners": [["2", "-4", "1"], ...],
      "subfield": {"b_expr": ["0"], "qb": ["0", "1"]},
      "expect": {"j": 2, "vQ": "2", ...},
      "expect_fail": ["thm_1_3_sandwich"]
    }

Coefficients are strings in the syntax of the ground field (plain
rationals for Qp, polynomial expressions in t for Fpt).  Every key in
"expect" must be a known report quantity; a run reports one problem
line per mismatch.  Verdicts listed in "expect_fail" must fail: they
pin down honest negative results so that a later "fix" that silently
turns them green gets noticed.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .algext import AlgebraicElement
from .basefield import BaseFieldError, make_base
from .exactpoly import Poly
from .ordvals import value_from_json
from .pairs import MinimalPair, check_minimality
from .verifier import VERDICT_NAMES, analyze


class ScenarioError(ValueError):
    pass


_TOP_KEYS = {
    "version", "id", "description", "base", "p", "q", "gamma",
    "minimality", "partners", "subfield", "expect", "expect_fail",
}
_REQUIRED = ("id", "base", "p", "q", "gamma")
_MODES = ("krasner", "bruteforce", "assert")
_EXPECT_KEYS = {
    "j", "vQ", "alpha", "e", "E", "lambda", "residue_degree",
    "s_as_function_of_t", "t_def", "kind", "units",
    "implicit_constants", "couples", "j_rel",
}


def _parse_poly(base, strings, what):
    try:
        coeffs = [base.parse_element(s) for s in strings]
    except (BaseFieldError, ValueError) as err:
        raise ScenarioError("%s: bad coefficient (%s)" % (what, err))
    return Poly(base.domain, coeffs)


@dataclass
class Scenario:
    sid: str
    description: str
    base: object
    Q: Poly
    gamma: object
    mode: str
    candidates: tuple
    partners: tuple
    subfield: object  # (b_expr, Qb) or None
    expect: dict
    expect_fail: tuple

    def build_pair(self):
        elem = AlgebraicElement(self.base, self.Q)
        cert = check_minimality(
            elem, self.gamma, mode=self.mode, candidates=self.candidates
        )
        return MinimalPair(elem, self.gamma, cert)

    def run(self):
        pair = self.build_pair()
        report = analyze(
            pair,
            partner_polys=self.partners,
            subfield=self.subfield,
            partner_mode=self.mode,
            partner_candidates=self.candidates,
        )
        problems = []
        inv = report.invariants
        for key, want in sorted(self.expect.items()):
            if key == "implicit_constants":
                got = report.implicit_constants["kind"]
            elif key == "couples":
                got = None if report.equivalence is None else (
                    report.equivalence["couples"]
                )
            elif key == "j_rel":
                got = None if report.subfield is None else (
                    report.subfield.get("j_rel")
                )
            else:
                got = inv[key]
            if got != want:
                problems.append(
                    "%s: got %r, expected %r" % (key, got, want)
                )
        for v in report.verdicts:
            if v["name"] in self.expect_fail:
                if v["status"] != "fail":
                    problems.append(
                        "%s: expected a failure, got %s (%s)"
                        % (v["name"], v["status"], v["detail"])
                    )
            elif v["status"] == "fail":
                problems.append("%s: %s" % (v["name"], v["detail"]))
        return ScenarioResult(self.sid, report, problems)


@dataclass
class ScenarioResult:
    scenario_id: str
    report: object
    problems: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.problems


def load_scenario(data):
    if not isinstance(data, dict):
        raise ScenarioError("a scenario is a JSON object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise ScenarioError("unknown keys: %s" % ", ".join(sorted(unknown)))
    for key in _REQUIRED:
        if key not in data:
            raise ScenarioError("missing key %r" % key)
    if data.get("version", 1) != 1:
        raise ScenarioError("unsupported version %r" % data["version"])

    try:
        base = make_base(data["base"], data["p"])
    except BaseFieldError as err:
        raise ScenarioError(str(err))
    Q = _parse_poly(base, data["q"], "q")

    try:
        gamma = value_from_json(data["gamma"])
    except (ValueError, TypeError) as err:
        raise ScenarioError("gamma: %s" % err)

    minimality = data.get("minimality", {"mode": "krasner"})
    mode = minimality.get("mode", "krasner")
    if mode not in _MODES:
        raise ScenarioError("unknown minimality mode %r" % mode)
    candidates = tuple(
        _parse_poly(base, c, "candidate %d" % i)
        for i, c in enumerate(minimality.get("candidates", []))
    )
    if candidates and mode != "bruteforce":
        raise ScenarioError("candidates only make sense with bruteforce")

    partners = tuple(
        _parse_poly(base, c, "partner %d" % i)
        for i, c in enumerate(data.get("partners", []))
    )

    subfield = None
    if "subfield" in data:
        sub = data["subfield"]
        extra = set(sub) - {"b_expr", "qb"}
        if extra or set(sub) != {"b_expr", "qb"}:
            raise ScenarioError("subfield needs exactly b_expr and qb")
        subfield = (
            _parse_poly(base, sub["b_expr"], "b_expr"),
            _parse_poly(base, sub["qb"], "qb"),
        )

    expect = data.get("expect", {})
    bad = set(expect) - _EXPECT_KEYS
    if bad:
        raise ScenarioError(
            "unknown expect keys: %s" % ", ".join(sorted(bad))
        )

    expect_fail = tuple(data.get("expect_fail", []))
    for name in expect_fail:
        if name not in VERDICT_NAMES:
            raise ScenarioError("expect_fail names unknown verdict %r" % name)

    return Scenario(
        sid=str(data["id"]),
        description=data.get("description", ""),
        base=base,
        Q=Q,
        gamma=gamma,
        mode=mode,
        candidates=candidates,
        partners=partners,
        subfield=subfield,
        expect=expect,
        expect_fail=expect_fail,
    )


def load_scenario_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as err:
            raise ScenarioError("%s: %s" % (path, err))
    try:
        return load_scenario(data)
    except ScenarioError as err:
        raise ScenarioError("%s: %s" % (path, err))


def builtin_scenario_dir():
    return os.path.join(os.path.dirname(__file__), "scenarios")


def scenario_paths(directory=None):
    """Scenario files in the requested directory, the directory named
    by MINPAIR_SCENARIO_DIR, or the bundled set, in filename order."""
    directory = (
        directory
        or os.environ.get("MINPAIR_SCENARIO_DIR")
        or builtin_scenario_dir()
    )
    if not os.path.isdir(directory):
        raise ScenarioError("no scenario directory %s" % directory)
    names = sorted(
        n for n in os.listdir(directory) if n.endswith(".json")
    )
    return [os.path.join(directory, n) for n in names]
