"""Acceptance criteria at full workload.

Each test prints exactly one ``ACCEPTANCE <n> PASS|FAIL <details>`` line and
then asserts. Sizes and runtime limits are pinned below; none of them are
scaled down. Run with ``pytest tests/test_acceptance.py -v -s`` for the
lines alone, or read them from the full ``pytest -v`` log.
"""

import functools
import time

import pytest

from pursuit import verify

# pinned workloads
TREES = 50
ORACLE_GRAPHS = 10_000
ESCAPE_SEEDS = 20
ESCAPE_ROUNDS = 10_000
HORIZON_FACTOR = 50
SUBDIVISION_GRAPHS = 1000
OUTER_DRAWINGS = 10_000
OUTER_ROUNDS = 1000
LEMMA_PAIRS = 1000

# pinned runtime limits, seconds
LIMIT_ORACLE = 5 * 60
LIMIT_SOLVE = 10 * 60
LIMIT_OUTER = 15 * 60


@functools.cache
def suite(name):
    kwargs = {
        "oracle": dict(trees=TREES, graphs=ORACLE_GRAPHS),
        "thm2": dict(seeds=ESCAPE_SEEDS, rounds=ESCAPE_ROUNDS),
        "thm3": dict(seeds=ESCAPE_SEEDS, rounds=ESCAPE_ROUNDS, pairs=LEMMA_PAIRS),
        "thm5": dict(horizon_factor=HORIZON_FACTOR),
        "subdivision": dict(graphs=SUBDIVISION_GRAPHS),
        "thm6": dict(size=OUTER_DRAWINGS, rounds=OUTER_ROUNDS),
        "prop1": dict(size=OUTER_DRAWINGS),
    }[name]
    start = time.perf_counter()
    verdicts = verify.SUITES[name](**kwargs)
    return {v.name: v for v in verdicts}, time.perf_counter() - start


def seconds_of(detail):
    # solve verdicts end in "<t>s"
    return float(detail.rsplit(" ", 1)[-1].rstrip("s"))


def report(capsys, number, checks):
    passed = all(ok for ok, _ in checks)
    line = f"ACCEPTANCE {number} {'PASS' if passed else 'FAIL'} " + " | ".join(
        ("" if ok else "[FAIL] ") + text for ok, text in checks
    )
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


def verdict_checks(verdicts, names):
    return [(verdicts[n].passed, f"{n}: {verdicts[n].detail}") for n in names]


def test_criterion_1_solver_oracle(capsys):
    v, elapsed = suite("oracle")
    checks = verdict_checks(v, ["oracle.trees", "oracle.cycles", "oracle.petersen", "oracle.dismantling"])
    checks.append((elapsed < LIMIT_ORACLE, f"runtime {elapsed:.0f}s < {LIMIT_ORACLE}s"))
    report(capsys, 1, checks)


def test_criterion_2_two_cop_lower_bounds(capsys):
    q, _ = suite("thm2")
    qp, _ = suite("thm3")
    checks = verdict_checks(q, ["thm2.counts", "thm2.solve"]) + verdict_checks(qp, ["thm3.counts", "thm3.solve"])
    for v in (q["thm2.solve"], qp["thm3.solve"]):
        t = seconds_of(v.detail)
        checks.append((t < LIMIT_SOLVE, f"{v.name} runtime {t:.0f}s < {LIMIT_SOLVE}s"))
    report(capsys, 2, checks)


def test_criterion_3_escape_strategy(capsys):
    q, _ = suite("thm2")
    qp, _ = suite("thm3")
    report(capsys, 3, verdict_checks(q, ["thm2.escape"]) + verdict_checks(qp, ["thm3.escape"]))


def test_criterion_4_three_cops(capsys):
    v, _ = suite("thm5")
    report(capsys, 4, [(x.passed, f"{x.name}: {x.detail}") for x in v.values()])


def test_criterion_5_subdivision_pipeline(capsys):
    v, _ = suite("subdivision")
    report(capsys, 5, verdict_checks(v, ["subdivision.petersen", "subdivision.monotone"]))


def test_criterion_6_outer_equivalence(capsys):
    v, elapsed = suite("thm6")
    checks = verdict_checks(v, ["thm6.chordal_iff_copwin", "thm6.at_most_two", "thm6.robber"])
    checks.append((elapsed < LIMIT_OUTER, f"runtime {elapsed:.0f}s < {LIMIT_OUTER}s"))
    report(capsys, 6, checks)


def test_criterion_7_structural_sweeps(capsys):
    v, _ = suite("prop1")
    qp, _ = suite("thm3")
    checks = verdict_checks(v, ["prop1.crossing", "cor1.attachments", "outer.witness"])
    checks += verdict_checks(qp, ["thm3.lemma2"])
    report(capsys, 7, checks)
