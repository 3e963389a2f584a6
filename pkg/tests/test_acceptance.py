"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""
import itertools
import json
import time

import pytest

from hyperring import classify as cl
from hyperring import load_fixture
from hyperring.catalog import builtin_catalog
from hyperring.cli import canonical, run_cli
from hyperring.construct import gamma_star
from hyperring.harness import (
    format_counterexamples, replay, report_json, run_theorem_suite, skipped_rings,
    vacuous_assertions,
)
from hyperring.hypercore import from_json, is_subset, label
from hyperring.ideals import (
    Hyperideal, brute_force_ideal_masks, d_set_mask, enumerate_hyperideals,
    generate_hyperideal, is_c_hyperideal, proper_ideal_masks, radical_mask,
)

Z4_MUL = [[[0], [0], [0], [0]],
          [[0], [0, 1, 2, 3], [0, 2], [0, 1, 2, 3]],
          [[0], [0, 2], [0], [0, 2]],
          [[0], [0, 1, 2, 3], [0, 2], [0, 1, 2, 3]]]


@pytest.fixture
def report(capsys):
    def emit(num, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    return emit


@pytest.fixture(scope="module")
def cat():
    return builtin_catalog()


def test_criterion_1_example_fidelity(tmp_path, capsys, report):
    start = time.perf_counter()
    ring = load_fixture("z4h")
    path = tmp_path / "z4h.json"
    path.write_text(canonical(ring.to_json()))
    code = run_cli(["classify", str(path), "--ideal", "0,2"])
    rep = json.loads(capsys.readouterr().out)
    elapsed = time.perf_counter() - start
    ok = (ring.to_json()["mul"] == Z4_MUL and code == 0
          and from_json(ring.to_json()).same_tables(ring)
          and rep["strongly_one_abs_primary"] is True and rep["prime"] is True
          and rep["is_c_hyperideal"] is False and elapsed < 1.0)
    report(1, ok, f"Z4H {{0,2}}: strongly={rep['strongly_one_abs_primary']} "
                  f"prime={rep['prime']} C={rep['is_c_hyperideal']} in {elapsed:.3f}s")
    assert ok


def test_criterion_2_theorem_suite(cat, report):
    start = time.perf_counter()
    verdicts = run_theorem_suite(cat, mode="c-only")
    elapsed = time.perf_counter() - start
    bad = [v for v in verdicts if v.outcome == "counterexample"]
    vac = vacuous_assertions(verdicts)
    doc = report_json(verdicts, "c-only", cat)

    all_mode = run_theorem_suite(cat, mode="all")
    all_bad = [v for v in all_mode if v.outcome == "counterexample"]
    replay_ok = all(replay(cat, v.theorem_id, v.ring, v.witness) == (True, False)
                    for v in all_bad)

    structural = (len(cat) >= 25 and elapsed < 300 and doc["vacuous"] == vac
                  and "T4.XM" in vac and replay_ok)
    ok = structural and not bad
    detail = (f"{len(cat)} rings, {elapsed:.1f}s, vacuous={vac}, "
              f"{len(bad)} c-only counterexample verdict(s), "
              f"{len(all_bad)} all-mode verdict(s) replayed={replay_ok}")
    report(2, ok, detail)
    assert structural, detail
    assert not bad, "c-only counterexamples:\n" + format_counterexamples(verdicts)


def test_criterion_3_implication_chains(cat, report):
    violations = []
    checked = 0
    for e in cat:
        for m in proper_ideal_masks(e.ring):
            r = cl.classify(Hyperideal(e.ring, m))
            checked += 1
            pairs = [
                ("prime", "one_abs_prime"), ("one_abs_prime", "two_absorbing"),
                ("primary", "one_abs_primary"), ("one_abs_primary", "two_absorbing_primary"),
                ("one_abs_prime", "one_abs_primary"),
                ("strongly_one_abs_primary", "one_abs_primary"),
                ("one_abs_primary", "weakly_one_abs_primary"),
            ]
            for a, b in pairs:
                if getattr(r, a) and not getattr(r, b):
                    violations.append((e.name, label(m), a, b))
    ok = not violations and checked > 0
    report(3, ok, f"{checked} proper hyperideals, {len(violations)} violations")
    assert ok, violations[:5]


def test_criterion_4_oracle_equivalence(cat, report):
    rings = [e for e in cat if e.ring.n <= 12]
    mismatches = []
    for e in rings:
        r = e.ring
        enumerated = [i.members for i in enumerate_hyperideals(r)]
        if sorted(enumerated) != sorted(brute_force_ideal_masks(r)):
            mismatches.append((e.name, "enumeration"))
        seeds = [{x} for x in range(r.n)] + [set(p) for p in itertools.combinations(range(r.n), 2)]
        for s in seeds:
            inter = r.full
            for m in enumerated:
                if all(m >> x & 1 for x in s):
                    inter &= m
            if generate_hyperideal(r, s).members != inter:
                mismatches.append((e.name, sorted(s)))
    ok = not mismatches and rings
    report(4, ok, f"{len(rings)} rings with n <= 12, {len(mismatches)} mismatches")
    assert ok, mismatches[:5]


def test_criterion_5_radical_law(cat, report):
    failures = []
    strict_or_non_c = 0
    total = 0
    for e in cat:
        r = e.ring
        for i in enumerate_hyperideals(r):
            total += 1
            d, rad = d_set_mask(r, i.members), radical_mask(r, i.members)
            c = bool(is_c_hyperideal(i))
            if not is_subset(d, rad):
                failures.append((e.name, i.label(), "inclusion"))
            if c and d != rad:
                failures.append((e.name, i.label(), "equality"))
            if not c or d != rad:
                strict_or_non_c += 1
    z4_non_c = any(not is_c_hyperideal(i) for i in enumerate_hyperideals(cat.get("Z4H").ring))
    ok = not failures and strict_or_non_c > 0 and z4_non_c
    report(5, ok, f"{total} hyperideals, {len(failures)} failures, "
                  f"{strict_or_non_c} strict-or-non-C instances")
    assert ok, failures[:5]


def _ring_ok(k, add, mul, zero):
    r = range(k)
    return (all(add[zero][a] == a for a in r)
            and all(any(add[a][b] == zero for b in r) for a in r)
            and all(add[a][b] == add[b][a] for a in r for b in r)
            and all(add[add[a][b]][c] == add[a][add[b][c]]
                    and mul[mul[a][b]][c] == mul[a][mul[b][c]]
                    and mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
                    and mul[add[b][c]][a] == add[mul[b][a]][mul[c][a]]
                    for a in r for b in r for c in r))


def test_criterion_6_gamma_soundness(cat, report):
    problems = []
    rings = [e for e in cat if e.ring.n <= 12]
    for e in rings:
        fq = gamma_star(e.ring)
        covered = 0
        for c in fq.classes:
            if covered & c:
                problems.append((e.name, "overlap"))
            covered |= c
        if covered != e.ring.full:
            problems.append((e.name, "cover"))
        k = len(fq.classes)
        if not _ring_ok(k, fq.class_add, fq.class_mul, fq.projection[e.ring.zero]):
            problems.append((e.name, "ring axioms"))
        if e.name.endswith("A{1}") and "x" not in e.name and "/" not in e.name:
            same = (k == e.ring.n and fq.projection == tuple(range(k))
                    and all(1 << fq.class_mul[a][b] == e.ring.mul[a][b]
                            and fq.class_add[a][b] == e.ring.add[a][b]
                            for a in range(k) for b in range(k)))
            if not same:
                problems.append((e.name, "A={1} isomorphism"))
    ok = not problems and rings
    report(6, ok, f"{len(rings)} rings, {len(problems)} problems")
    assert ok, problems


def test_criterion_7_existence(cat, report):
    verdicts = run_theorem_suite(cat, ["T5.EXIST", "T5.NOPROD"], mode="all")
    bad = [v for v in verdicts if v.outcome == "counterexample"]
    products = [v for v in verdicts if v.theorem_id == "T5.NOPROD"]
    ok = not bad and len(products) == sum(e.is_product for e in cat) and all(
        v.outcome == "pass" for v in products)
    skipped = skipped_rings(cat)
    report(7, ok, f"{len(verdicts)} verdicts, {len(bad)} counterexamples, "
                  f"{len(products)} product rings without strongly ideals, "
                  f"{len(skipped)} identity-free rings outside the hypothesis")
    assert ok, format_counterexamples(verdicts)


def test_criterion_8_determinism(cat, tmp_path, report):
    first = canonical(report_json(run_theorem_suite(cat, mode="c-only"), "c-only", cat))
    second = canonical(report_json(run_theorem_suite(builtin_catalog(), mode="c-only"),
                                   "c-only", builtin_catalog()))
    f, g = tmp_path / "f.json", tmp_path / "g.json"
    codes = (run_cli(["template", "zn", "--n", "4", "--A", "1", "-o", str(f)]),
             run_cli(["validate", str(f), "--emit", str(g)]))
    ok = first == second and codes == (0, 0) and f.read_bytes() == g.read_bytes()
    report(8, ok, f"report {len(first)} bytes identical={first == second}, "
                  f"template round trip identical={f.read_bytes() == g.read_bytes()}")
    assert ok
