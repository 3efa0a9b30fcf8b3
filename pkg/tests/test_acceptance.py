"""Acceptance criteria 1-10, run at the default truncation (ranks up to 4, etas 1, 2, -1)."""
import random
from collections import Counter
from fractions import Fraction

from greenring import green
from greenring.decompose import canonicalize, decompose
from greenring.labels import Label, allowed_signs, format_label
from greenring.modules import build, tensor
from greenring.suites import SUITES, SuiteConfig, run_suite

CFG = SuiteConfig()
_REPORTS: dict = {}


def report(name):
    if name not in _REPORTS:
        _REPORTS[name] = run_suite(name, CFG)
    return _REPORTS[name]


def summarize(*reports):
    failed = [f"{r.suite}:{c.key}" for r in reports for c in r.cases if not c.passed]
    total = sum(len(r.cases) for r in reports)
    return not failed, f"{total - len(failed)}/{total} cases" + (f"; first failure {failed[0]}" if failed else "")


def test_criterion_01_mabar_theorem(record_criterion):
    rep = report("theorem-dec")
    mabar = [c for c in rep.cases if c.key.startswith("mabar ")]
    items = {c.key.split()[1] for c in mabar}
    ok, detail = summarize(rep)
    ok = ok and len(items) >= 14 and len(mabar) >= 3000
    record_criterion(1, ok, f"{len(mabar)} mabar instances over {len(items)} items; {detail}")
    assert ok


def test_criterion_02_hh_theorem(record_criterion):
    rep = report("theorem-dec1")
    items = {c.key.split()[0] for c in rep.cases}
    ok, detail = summarize(rep)
    ok = ok and len(items) >= 14
    record_criterion(2, ok, f"{len(items)} items; {detail}")
    assert ok


def test_criterion_03_relations(record_criterion):
    rep = report("green-relations")
    ok, detail = summarize(rep)
    algs = {c.key.split()[0] for c in rep.cases}
    ok = ok and {"mabar", "DH4", "HH"} <= algs
    record_criterion(3, ok, detail)
    assert ok


def test_criterion_04_twists_and_commutativity(record_criterion):
    rep = report("commutativity")
    ok, detail = summarize(rep)
    witness = [c for c in rep.cases if "witness" in c.key]
    transport = [c for c in rep.cases if " ~ " in c.key]
    ok = ok and len(witness) == 1 and len(transport) > 0
    record_criterion(4, ok, f"{len(transport)} certified isomorphisms; {detail}")
    assert ok


def test_criterion_05_hopf_and_twists(record_criterion):
    ok, detail = summarize(report("hopf-axioms"), report("cocycles"), report("twist-iso"))
    record_criterion(5, ok, detail)
    assert ok


def test_criterion_06_idempotents(record_criterion):
    ok, detail = summarize(report("idempotents"))
    record_criterion(6, ok, detail)
    assert ok


def test_criterion_07_quivers(record_criterion):
    ok, detail = summarize(report("quivers"))
    record_criterion(7, ok, detail)
    assert ok


def test_criterion_08_projective_class(record_criterion):
    rep = report("proj-class")
    ok, detail = summarize(rep)
    dims = {c.key.split()[0]: c.actual for c in rep.cases if c.key.endswith("quotient dim")}
    ok = ok and dims == {"mabar": "6", "DH4": "4", "HH": "5"}
    record_criterion(8, ok, f"quotients {dims}; {detail}")
    assert ok


def test_criterion_09_radicals(record_criterion):
    ok, detail = summarize(report("radicals"))
    record_criterion(9, ok, detail)
    assert ok


def _random_label(rng, alg):
    fam = rng.choice(["S", "P", "M", "W", "N", "Nprime", "C"])
    signs = rng.choice(sorted(allowed_signs(alg, fam)))
    rank = 0 if fam in ("S", "P") else rng.randint(1, 3)
    eta = Fraction(rng.choice([1, 2, -1, 3, Fraction(1, 2)])) if fam == "C" else None
    return canonicalize(Label(fam, rank, signs, eta), alg)


def _instances(n=100, seed=2024):
    rng = random.Random(seed)
    return [(alg, _random_label(rng, alg), _random_label(rng, alg))
            for alg in (rng.choice(["mabar", "DH4", "HH"]) for _ in range(n))]


def test_criterion_10_determinism(record_criterion):
    first = {name: report(name).to_json(timing=False) for name in SUITES}
    green.clear_cache()
    second = {name: run_suite(name, CFG).to_json(timing=False) for name in SUITES}
    same_battery = first == second
    unstable = []
    for alg, a, b in _instances():
        m = tensor(build(a, alg), build(b, alg))
        runs = [decompose(m, seed).counts() for seed in range(5)]
        closed = Counter({k: int(v) for k, v in green.product_closed(alg, a, b).terms.items()})
        if any(r != runs[0] for r in runs) or runs[0] != closed:
            unstable.append(f"{alg} {format_label(a)}*{format_label(b)}")
    ok = same_battery and not unstable
    record_criterion(10, ok, f"battery identical={same_battery}; 100 instances x 5 seeds, "
                             f"{len(unstable)} disagreements")
    assert ok, unstable[:5]
