"""Command line front end.

Three subcommands:

    minpair analyze s1              # a bundled scenario by id
    minpair analyze path/to.json    # or any scenario file
    minpair suite [--dir D] [--filter TEXT]
    minpair proptest [--seed N] [--count N]

analyze prints the full report as JSON; suite prints one line per
scenario and exits nonzero if any expectation is missed; proptest runs
the seeded randomized sweep.  Exit codes: 0 clean, 1 a check failed,
2 the input could not be loaded.
"""

from __future__ import annotations

import argparse
import os
import sys

from .proptest import run_property_sweep
from .scenario import (
    ScenarioError,
    load_scenario_file,
    scenario_paths,
)


def _resolve_scenario_path(token, directory=None):
    if os.path.isfile(token):
        return token
    for path in scenario_paths(directory):
        sid = os.path.splitext(os.path.basename(path))[0]
        if sid.lower() == token.lower():
            return path
    raise ScenarioError(
        "no scenario file %r and no bundled scenario with that id" % token
    )


def _cmd_analyze(args):
    try:
        path = _resolve_scenario_path(args.scenario, args.dir)
        scenario = load_scenario_file(path)
        result = scenario.run()
    except ScenarioError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    text = result.report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print("report written to %s" % args.out)
    else:
        print(text)
    if not result.ok:
        for problem in result.problems:
            print("MISMATCH %s: %s" % (result.scenario_id, problem),
                  file=sys.stderr)
        return 1
    return 0


def _cmd_suite(args):
    try:
        paths = scenario_paths(args.dir)
    except ScenarioError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    failures = 0
    ran = 0
    for path in paths:
        try:
            scenario = load_scenario_file(path)
        except ScenarioError as err:
            print("error: %s" % err, file=sys.stderr)
            return 2
        needle = (args.filter or "").lower()
        if needle and needle not in scenario.sid.lower() and (
                needle not in scenario.description.lower()):
            continue
        ran += 1
        result = scenario.run()
        if result.ok:
            print("ok   %-4s %s" % (scenario.sid, scenario.description))
        else:
            failures += 1
            print("FAIL %-4s %s" % (scenario.sid, scenario.description))
            for problem in result.problems:
                print("     %s" % problem)
    if ran == 0:
        print("error: no scenario matched %r" % args.filter,
              file=sys.stderr)
        return 2
    print("%d scenario(s), %d failure(s)" % (ran, failures))
    return 1 if failures else 0


def _cmd_proptest(args):
    result = run_property_sweep(count=args.count, seed=args.seed)
    print(result.summary())
    for failure in result.failures:
        print("FAIL %s" % failure)
    return 0 if result.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="minpair",
        description="exact invariants of residually transcendental "
        "valuations given by a minimal pair",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="run one scenario, print the "
                          "report JSON")
    p_an.add_argument("scenario", help="scenario file or bundled id")
    p_an.add_argument("--dir", default=None,
                      help="scenario directory for id lookup")
    p_an.add_argument("--out", default=None, help="write the report here")
    p_an.set_defaults(func=_cmd_analyze)

    p_su = sub.add_parser("suite", help="run every scenario in a directory")
    p_su.add_argument("--dir", default=None,
                      help="scenario directory (default: bundled set, or "
                      "MINPAIR_SCENARIO_DIR)")
    p_su.add_argument("--filter", default=None,
                      help="only scenarios whose id or description "
                      "contains this")
    p_su.set_defaults(func=_cmd_suite)

    p_pt = sub.add_parser("proptest", help="seeded randomized property "
                          "sweep")
    p_pt.add_argument("--seed", type=int, default=0)
    p_pt.add_argument("--count", type=int, default=200)
    p_pt.set_defaults(func=_cmd_proptest)
    return parser


def console_main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(console_main())
