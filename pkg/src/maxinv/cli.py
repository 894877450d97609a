"""Command-line front end: analyze groups, verify theorems, run campaigns.

Reports are single JSON documents with sorted keys and subgroups serialized
as sorted element-id arrays, so two runs diff cleanly.  Timing lives under
dedicated "timing" keys that goldens can strip.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional

from . import __version__
from .action import ActionGroup, parse_action_file, trivial_action
from .catalog import Fixture, fingerprint, standard_campaign
from .groups import GroupError, GroupTable, order_cap, parse_group_file
from .structure import all_subgroups, is_nilpotent, is_normal, is_solvable, prime_factors, sylow_subgroups
from .theorems import (
    Context,
    check_downstream,
    check_lemma_2_1,
    check_lemma_2_2,
    check_lemma_2_3,
    check_lemma_2_4_all,
    find_decomposition,
    hypothesis_normalizer_nilpotent,
    verify_cor_1_12,
    verify_thm_1_3,
    verify_thm_1_9,
)

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INVALID = 2
EXIT_OUT_OF_HYPOTHESIS = 3


# ---------------------------------------------------------------------------
# checker registry


def _run_thm_1_3(G, A, ctx):
    rep = verify_thm_1_3(G, A, ctx)
    return ("pass" if rep.equivalent else "fail"), rep.to_json()


def _run_thm_1_9(G, A, ctx):
    rep = verify_thm_1_9(G, A, ctx)
    if rep.status == "out-of-hypothesis":
        return "out-of-hypothesis", rep.to_json()
    return ("pass" if rep.equivalent else "fail"), rep.to_json()


def _run_cor_1_12(G, A, ctx):
    rep = verify_cor_1_12(G, A, ctx)
    payload = rep.to_json()
    if rep.status == "out-of-hypothesis":
        if not rep.extra.get("ti_equals_normal", True):
            return "fail", payload
        return "out-of-hypothesis", payload
    return ("pass" if rep.equivalent else "fail"), payload


def _verdict_runner(fn):
    def run(G, A, ctx):
        v = fn(G, A, ctx)
        if v.note == "not applicable":
            return "out-of-hypothesis", v.to_json()
        return ("pass" if v.holds else "fail"), v.to_json()

    return run


def _run_downstream(G, A, ctx):
    verdicts = check_downstream(G, A, ctx)
    payload = {k: v.to_json() for k, v in sorted(verdicts.items())}
    ok = all(v.holds for v in verdicts.values())
    return ("pass" if ok else "fail"), payload


CHECKERS = {
    "thm1.3": _run_thm_1_3,
    "thm1.9": _run_thm_1_9,
    "cor1.12": _run_cor_1_12,
    "lemma2.1": _verdict_runner(check_lemma_2_1),
    "lemma2.2": _verdict_runner(check_lemma_2_2),
    "lemma2.3": _verdict_runner(check_lemma_2_3),
    "lemma2.4": _verdict_runner(check_lemma_2_4_all),
    "downstream": _run_downstream,
}


# ---------------------------------------------------------------------------
# report assembly


def _glauberman_violations(ctx: Context) -> int:
    bad = 0
    for p in ctx.primes:
        if not ctx.inv_sylows(p):
            bad += 1
    return bad


def evaluate_fixture(fx: Fixture) -> List[Dict]:
    """All checkers on every action of one fixture."""
    entries = []
    fp = fingerprint(fx.group)
    for A in fx.actions:
        ctx = Context(fx.group, A)
        for checker in sorted(CHECKERS):
            t0 = time.perf_counter()
            status, payload = CHECKERS[checker](fx.group, A, ctx)
            entries.append(
                {
                    "fingerprint": fp,
                    "group": fx.name,
                    "action": A.name,
                    "checker": checker,
                    "status": status,
                    "result": payload,
                    "timing": {"seconds": round(time.perf_counter() - t0, 6)},
                }
            )
        entries.append(
            {
                "fingerprint": fp,
                "group": fx.name,
                "action": A.name,
                "checker": "zz-invariants",
                "status": "pass" if _glauberman_violations(ctx) == 0 else "fail",
                "result": {
                    "glauberman_violations": _glauberman_violations(ctx),
                    "nilpotent_sylow_vs_lcs_agree": _nilpotency_oracles_agree(fx.group),
                },
                "timing": {"seconds": 0.0},
            }
        )
    return entries


def _nilpotency_oracles_agree(G: GroupTable) -> bool:
    from .structure import is_nilpotent_lcs

    return is_nilpotent(G) == is_nilpotent_lcs(G)


def _summarize(entries: List[Dict]) -> Dict:
    failures = sum(1 for e in entries if e["status"] == "fail")
    vacuous = 0
    divergence = 0
    antecedents = {"thm1.1": 0, "thm1.2": 0, "thm1.6": 0, "thm1.7": 0, "thm1.8": 0, "lemma2.2": 0}
    for e in entries:
        res = e["result"]
        if isinstance(res, dict) and res.get("vacuous"):
            vacuous += 1
        if e["checker"] == "downstream":
            for name, v in res.items():
                if v.get("extra", {}).get("triggered"):
                    antecedents[name] += 1
        if e["checker"] == "lemma2.2" and not res.get("vacuous") and e["status"] != "out-of-hypothesis":
            antecedents["lemma2.2"] += 1
        if e["checker"] in ("thm1.3", "thm1.9"):
            stmts = res.get("statements", {})
            hyp = stmts.get("hypothesis", {})
            if hyp.get("extra", {}).get("readings_diverge"):
                divergence += 1
    pairs = {(e["fingerprint"], e["action"]) for e in entries}
    return {
        "fixtures": len(pairs),
        "checks": len(entries),
        "failures": failures,
        "vacuous": vacuous,
        "antecedent_counts": antecedents,
        "quantifier_reading_divergences": divergence,
        "glauberman_violations": sum(
            e["result"].get("glauberman_violations", 0)
            for e in entries
            if e["checker"] == "zz-invariants"
        ),
    }


def run_campaign(max_order: int, jobs: int = 1) -> Dict:
    """Every checker on every campaign fixture; deterministic merge."""
    t0 = time.perf_counter()
    fixtures = standard_campaign(max_order)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_fixture = list(pool.map(evaluate_fixture, fixtures))
    else:
        per_fixture = [evaluate_fixture(fx) for fx in fixtures]
    entries = [e for chunk in per_fixture for e in chunk]
    entries.sort(key=lambda e: (e["fingerprint"], e["group"], e["action"], e["checker"]))
    return {
        "version": __version__,
        "cap": order_cap(),
        "max_order": max_order,
        "entries": entries,
        "summary": _summarize(entries),
        "timing": {"total_seconds": round(time.perf_counter() - t0, 6)},
    }


def strip_timing(obj):
    """Remove every 'timing' key, recursively (for golden comparisons)."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "timing"}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def report_to_json(report: Dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# analyze


def analyze(G: GroupTable, A: Optional[ActionGroup] = None, group_name: str = "group") -> Dict:
    """Single-fixture structural report."""
    A = A or trivial_action(G)
    ctx = Context(G, A)
    lat = ctx.lattice
    sylow_info = {}
    for p in ctx.primes:
        syl = sylow_subgroups(G, p)
        sylow_info[str(p)] = {
            "count": len(syl),
            "normal": len(syl) == 1,
            "invariant_count": len(ctx.inv_sylows(p)),
        }
    maximal = [
        {
            "elements": m.elements(),
            "order": m.order,
            "nilpotent": ctx.sub_nilpotent(m),
            "normal": is_normal(G, m),
        }
        for m in ctx.maximal_invariant
    ]
    dec = find_decomposition(G, A, ctx)
    return {
        "version": __version__,
        "group": group_name,
        "fingerprint": fingerprint(G),
        "order": G.order,
        "primes": list(ctx.primes),
        "abelian": G.is_abelian,
        "nilpotent": ctx.nilpotent,
        "solvable": is_solvable(G),
        "action": {"name": A.name, "order": A.order},
        "subgroup_count": len(lat),
        "sylow": sylow_info,
        "maximal_invariant_subgroups": maximal,
        "hypothesis": hypothesis_normalizer_nilpotent(G, A, ctx).to_json(),
        "decomposition": dec.to_json() if dec else None,
    }


# ---------------------------------------------------------------------------
# commands


def _load_inputs(args) -> tuple:
    try:
        with open(args.group, encoding="utf-8") as fh:
            G = parse_group_file(fh.read(), name=os.path.basename(args.group))
        if getattr(args, "action", None):
            with open(args.action, encoding="utf-8") as fh:
                A = parse_action_file(fh.read(), G)
        else:
            A = trivial_action(G)
        return G, A
    except (OSError, GroupError) as exc:
        raise InputError(str(exc))


class InputError(Exception):
    pass


def cmd_analyze(args) -> int:
    G, A = _load_inputs(args)
    report = analyze(G, A, group_name=os.path.basename(args.group))
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return EXIT_PASS


def cmd_verify(args) -> int:
    if args.checker not in CHECKERS:
        sys.stderr.write(f"unknown checker: {args.checker}\n")
        return EXIT_INVALID
    G, A = _load_inputs(args)
    ctx = Context(G, A)
    status, payload = CHECKERS[args.checker](G, A, ctx)
    sys.stdout.write(json.dumps({"checker": args.checker, "status": status, "result": payload}, sort_keys=True, indent=2) + "\n")
    if status == "pass":
        return EXIT_PASS
    if status == "out-of-hypothesis":
        return EXIT_OUT_OF_HYPOTHESIS
    return EXIT_COUNTEREXAMPLE


def cmd_campaign(args) -> int:
    if args.max_order > order_cap():
        sys.stderr.write("max-order exceeds configured cap\n")
        return EXIT_INVALID
    report = run_campaign(args.max_order, jobs=args.jobs)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report_to_json(report))
    except OSError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_INVALID
    failures = report["summary"]["failures"]
    sys.stdout.write(
        f"campaign: {report['summary']['fixtures']} fixtures, "
        f"{report['summary']['checks']} checks, {failures} failures\n"
    )
    return EXIT_PASS if failures == 0 else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxinv",
        description="Finite-group verification of nilpotency classifications under coprime actions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structural report for one group")
    p.add_argument("--group", required=True)
    p.add_argument("--action")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run one named checker")
    p.add_argument("checker", choices=sorted(CHECKERS))
    p.add_argument("--group", required=True)
    p.add_argument("--action")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("campaign", help="run every checker on the standard campaign")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
