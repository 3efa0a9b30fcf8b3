"""Named verification suites and their reports."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import green
from .green import Case, DEFAULT_ETAS
from .hopf import (ALGEBRA_NAMES, build_algebra, central_idempotents, check_hopf_axioms,
                   check_skew_pairing, cocycle_twist, ext_quiver, hopf_isomorphism_check,
                   hopf_isomorphism_report, standard_idempotents, standard_pairing, pairing_to_cocycle,
                   search_generator_images, sigma1, sigma_alpha, tensor_algebra,
                   verify_cocycle_report, verify_idempotent_system)


@dataclass(frozen=True)
class SuiteConfig:
    max_rank: int = 4
    etas: tuple = DEFAULT_ETAS
    seed: int = 0

    def __post_init__(self):
        if self.max_rank < 1:
            raise ValueError("max_rank must be at least 1")
        if any(Fraction(e) == 0 for e in self.etas):
            raise ValueError("eta values must be nonzero")

    def to_json(self) -> dict:
        return {"max_rank": self.max_rank, "etas": [str(Fraction(e)) for e in self.etas],
                "seed": self.seed}


@dataclass
class VerificationReport:
    suite: str
    config: SuiteConfig
    cases: list = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self, timing: bool = True) -> dict:
        d = {"suite": self.suite, "config": self.config.to_json(),
             "summary": {"total": len(self.cases), "passed": self.passed, "failed": self.failed},
             "cases": [c.to_json() for c in self.cases]}
        if timing:
            d["duration_s"] = round(self.duration, 3)
        return d

    def text(self, verbose: bool = False) -> str:
        lines = [f"{self.suite}: {self.passed}/{len(self.cases)} passed ({self.duration:.1f}s)"]
        for c in self.cases:
            if verbose or not c.passed:
                mark = "ok  " if c.passed else "FAIL"
                lines.append(f"  {mark} {c.key}: expected {c.expected}, got {c.actual}"
                             + (f"  [{c.note}]" if c.note else ""))
        return "\n".join(lines)


def _bool_cases(prefix: str, rep: dict) -> list:
    return [Case(f"{prefix} {k}", "True", str(bool(v)), bool(v)) for k, v in rep.items()]


def suite_hopf_axioms(cfg: SuiteConfig) -> list:
    cases = []
    for name in ALGEBRA_NAMES:
        cases += _bool_cases(name, check_hopf_axioms(build_algebra(name)))
    return cases


def _h4_tensor():
    h4 = build_algebra("H4")
    return h4, tensor_algebra(h4, h4, "H4xH4")


def suite_cocycles(cfg: SuiteConfig) -> list:
    mabar = build_algebra("mabar")
    h4, t = _h4_tensor()
    cases = _bool_cases("sigma1 on mabar", verify_cocycle_report(mabar, sigma1(mabar)))
    pairing = standard_pairing(h4)
    cases += _bool_cases("skew pairing", check_skew_pairing(pairing))
    cases += _bool_cases("sigma2 on H4xH4", verify_cocycle_report(t, pairing_to_cocycle(pairing, t)))
    n = h4.dim
    for alpha in (0, 1, 5):
        s = sigma_alpha(h4, alpha)
        cases += _bool_cases(f"sigma_alpha={alpha} on H4", verify_cocycle_report(h4, s))
        tw = cocycle_twist(h4, s)
        opp = all(tw.mult[i][j] == h4.mult[j][i] for i in range(n) for j in range(n))
        cases.append(Case(f"H4^sigma_alpha={alpha} is H4^op", "True", str(opp), opp))
    return cases


def suite_twist_iso(cfg: SuiteConfig) -> list:
    h4, t = _h4_tensor()
    dh4 = build_algebra("DH4")
    tw2 = cocycle_twist(t, pairing_to_cocycle(standard_pairing(h4), t))
    phi = {"a1": dh4.generators["g"], "b1": dh4.generators["x"],
           "a2": dh4.generators["h"], "b2": dh4.generators["y"]}
    cases = _bool_cases("phi: (H4xH4)^sigma2 -> DH4", hopf_isomorphism_report(tw2, dh4, phi))
    mabar = build_algebra("mabar")
    tw1 = cocycle_twist(mabar, sigma1(mabar))
    for target in (t, build_algebra("HH")):
        images = search_generator_images(tw1, target)
        ok = images is not None and hopf_isomorphism_check(tw1, target, images)
        found = "none" if images is None else ", ".join(
            f"{g}->{target.basis_labels[next(iter(v))]}" for g, v in sorted(images.items()))
        cases.append(Case(f"mabar^sigma1 ~ {target.name}", "isomorphism", found, ok))
    return cases


EXPECTED_BLOCKS = {"mabar": 2, "DH4": 3, "HH": 1}


def suite_idempotents(cfg: SuiteConfig) -> list:
    cases = []
    for name in ("mabar", "DH4"):
        h = build_algebra(name)
        for key, system in standard_idempotents(h).items():
            prim = key == "e"
            cases += _bool_cases(f"{name} {','.join(system.names)}", verify_idempotent_system(system, prim))
    for name, k in EXPECTED_BLOCKS.items():
        got = len(central_idempotents(build_algebra(name)).elements)
        cases.append(Case(f"{name} blocks", str(k), str(got), k == got))
    return cases


# arrow matrices on the vertices e1..e4 (DH4: e1, e2 and one representative each of P+, P-)
EXPECTED_QUIVERS = {
    "mabar": [[0, 0, 0, 2], [0, 0, 2, 0], [0, 2, 0, 0], [2, 0, 0, 0]],
    "DH4": [[0, 2, 0, 0], [2, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    "HH": [[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]],
}


def suite_quivers(cfg: SuiteConfig) -> list:
    cases = []
    for name, exp in EXPECTED_QUIVERS.items():
        q = ext_quiver(build_algebra(name))
        cases.append(Case(f"{name} Ext quiver on {','.join(q.vertices)}", str(exp), str(q.arrows), q.arrows == exp))
    return cases


def suite_theorem_dec(cfg: SuiteConfig) -> list:
    out = []
    for alg in ("mabar", "DH4"):
        out += [_prefixed(alg, c) for c in green.verify_theorem(alg, cfg.max_rank, cfg.etas, cfg.seed)]
    return out


def suite_theorem_dec1(cfg: SuiteConfig) -> list:
    return green.verify_theorem("HH", cfg.max_rank, cfg.etas, cfg.seed)


def _prefixed(alg: str, c: Case) -> Case:
    return Case(f"{alg} {c.key}", c.expected, c.actual, c.passed, c.note)


def suite_green_relations(cfg: SuiteConfig) -> list:
    out = []
    for alg in ("mabar", "DH4", "HH"):
        out += [_prefixed(alg, c) for c in green.verify_green_relations(alg, cfg.max_rank, cfg.etas)]
        out += [_prefixed(alg, c) for c in green.associativity_probe(alg)]
    out += [_prefixed("DH4 vs mabar", c) for c in green.compare_stable_rings(min(cfg.max_rank, 3), cfg.etas)]
    return out


def suite_radicals(cfg: SuiteConfig) -> list:
    out = []
    for alg in ("mabar", "DH4", "HH"):
        out += [_prefixed(alg, c) for c in green.verify_radical_generators(alg, cfg.max_rank, cfg.etas)]
    out += [_prefixed("HH", c) for c in green.verify_alternating_idempotents(cfg.max_rank)]
    return out


EXPECTED_QUOTIENT = {"mabar": 6, "DH4": 4, "HH": 5}


def suite_proj_class(cfg: SuiteConfig) -> list:
    out = []
    for alg, q in EXPECTED_QUOTIENT.items():
        rep = green.projective_class_algebra(alg)
        out.append(Case(f"{alg} quotient dim", str(q), str(rep.quotient_dim), rep.quotient_dim == q))
        out.append(Case(f"{alg} monomial basis", "8" if alg != "DH4" else "6", str(rep.basis_dim),
                        rep.basis_dim == (6 if alg == "DH4" else 8), " ".join(rep.monomials)))
        out += [_prefixed(alg, c) for c in rep.idempotent_cases]
    return out


def suite_commutativity(cfg: SuiteConfig) -> list:
    out = []
    for alg in ("DH4", "HH"):
        out += [_prefixed(alg, c) for c in green.commutativity_probe(alg, green.generator_labels(alg, 3, cfg.etas))]
    w = green.noncommutativity_witness("mabar")
    out.append(Case("mabar witness S(+,-)*C(1,1) vs C(1,1)*S(+,-)", "different",
                    "equal" if w is None else f"{w[2]} vs {w[3]}", w is not None))
    for alg in ("mabar", "HH", "DH4"):
        out += [_prefixed(alg, c) for c in green.verify_twist_transport(alg, cfg.max_rank, cfg.etas)]
    return out


def suite_alias_table(cfg: SuiteConfig) -> list:
    """Stabilizer of each sample label under sign twists, from the exhaustive iso sweep."""
    from .decompose import alias_sweep
    from .labels import format_label
    out = []
    for alg in ("mabar", "DH4", "HH"):
        for fam, per in alias_sweep(alg).items():
            exp = {(1, 1), (-1, -1)} if (alg, fam) == ("HH", "C") else {(1, 1)}
            for lab, stab in sorted(per.items()):
                out.append(Case(f"{alg} {format_label(lab)}", str(sorted(exp)), str(sorted(stab)), set(stab) == exp))
    return out


SUITES = {
    "hopf-axioms": suite_hopf_axioms,
    "cocycles": suite_cocycles,
    "twist-iso": suite_twist_iso,
    "idempotents": suite_idempotents,
    "quivers": suite_quivers,
    "theorem-dec": suite_theorem_dec,
    "theorem-dec1": suite_theorem_dec1,
    "green-relations": suite_green_relations,
    "radicals": suite_radicals,
    "proj-class": suite_proj_class,
    "commutativity": suite_commutativity,
    "alias-table": suite_alias_table,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = cfg or SuiteConfig()
    t0 = time.perf_counter()
    cases = SUITES[name](cfg)
    cases.sort(key=lambda c: c.key)
    return VerificationReport(name, cfg, cases, time.perf_counter() - t0)
