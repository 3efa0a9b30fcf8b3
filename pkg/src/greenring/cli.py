"""Command-line entry point: ``greenring <command> ...`` or ``python3 -m greenring``."""
from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from fractions import Fraction

from . import linalg as la
from .hopf import (ALGEBRA_NAMES, build_algebra, central_idempotents, check_hopf_axioms,
                   ext_quiver, standard_idempotents, verify_idempotent_system)
from .labels import format_label, label_dim, parse_label


@dataclasses.dataclass(frozen=True)
class CommandConfig:
    command: str
    algebra: str = "mabar"
    labels: tuple = ()
    max_rank: int = 4
    etas: tuple = (Fraction(1), Fraction(2), Fraction(-1))
    seed: int = 0
    output_format: str = "text"
    output_path: str | None = None
    suite: str | None = None
    verbose: bool = False


def _etas(text: str) -> tuple:
    vals = tuple(Fraction(t) for t in text.split(",") if t.strip())
    if not vals or any(v == 0 for v in vals):
        raise argparse.ArgumentTypeError("etas must be a comma list of nonzero rationals")
    return vals


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _sparse_mult(h) -> list:
    return [{"i": i, "j": j, "product": {h.basis_labels[k]: str(c) for k, c in h.mult[i][j].items()}}
            for i in range(h.dim) for j in range(h.dim) if h.mult[i][j]]


def run_algebra(cfg: CommandConfig) -> tuple[int, str]:
    h = build_algebra(cfg.algebra)
    axioms = check_hopf_axioms(h)
    systems = {}
    if cfg.algebra in ("mabar", "DH4", "HH"):
        for key, s in standard_idempotents(h).items():
            systems[key] = {"names": list(s.names),
                            "elements": [str(e) for e in s.elements],
                            "checks": verify_idempotent_system(s, key == "e")}
    blocks = len(central_idempotents(h).elements)
    quiver = ext_quiver(h)
    if cfg.output_format == "dot":
        return (0 if all(axioms.values()) else 1), quiver.to_dot(cfg.algebra)
    data = {"name": h.name, "dim": h.dim, "basis": list(h.basis_labels),
            "generators": sorted(h.generators), "grouplikes": list(h.grouplikes),
            "axioms": axioms, "idempotents": systems, "blocks": blocks,
            "quiver": {"vertices": list(quiver.vertices), "arrows": quiver.arrows}}
    if cfg.output_format == "json":
        data["structure_constants"] = _sparse_mult(h)
        out = json.dumps(data, indent=2)
    else:
        lines = [f"{h.name}: dim {h.dim}, blocks {blocks}",
                 "axioms: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in axioms.items())]
        for key, s in systems.items():
            lines.append(f"idempotents {','.join(s['names'])}: "
                         + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in s["checks"].items()))
        lines.append(f"Ext quiver on {','.join(quiver.vertices)}: {quiver.arrows}")
        out = "\n".join(lines)
    return (0 if all(axioms.values()) else 1), out


def _one_label(cfg: CommandConfig):
    if len(cfg.labels) != 1:
        raise SystemExit("expected exactly one label")
    return parse_label(cfg.labels[0])


def run_module(cfg: CommandConfig) -> tuple[int, str]:
    from .decompose import fingerprint
    from .modules import build, validate_module
    lab = _one_label(cfg)
    m = build(lab, cfg.algebra)
    if cfg.output_format == "dot":
        return 0, m.to_dot(format_label(lab))
    checks = validate_module(m)
    ok = all(checks.values())
    if cfg.output_format == "json":
        d = m.to_json()
        d["label"] = lab.to_json()
        d["fingerprint"] = {k: (str(v) if isinstance(v, Fraction) else v)
                            for k, v in dataclasses.asdict(fingerprint(m)).items()}
        d["valid"] = ok
        return (0 if ok else 1), json.dumps(d, indent=2)
    fp = fingerprint(m)
    return (0 if ok else 1), (f"{format_label(lab)} over {cfg.algebra}: dim {m.dim}, "
                              f"valid={ok}\n{fp}")


def run_diagram(cfg: CommandConfig) -> tuple[int, str]:
    from .modules import build
    lab = _one_label(cfg)
    return 0, build(lab, cfg.algebra).to_dot(format_label(lab))


def run_tensor(cfg: CommandConfig) -> tuple[int, str]:
    from .decompose import decompose
    from .green import product_closed, GreenElement
    from .modules import build, tensor
    if len(cfg.labels) != 2:
        raise SystemExit("tensor needs two labels")
    a, b = (parse_label(t) for t in cfg.labels)
    text = f"{format_label(a)} * {format_label(b)}"
    d = decompose(tensor(build(a, cfg.algebra), build(b, cfg.algebra)), cfg.seed, input=text)
    brute = GreenElement(cfg.algebra, list(d.counts().items()))
    closed = product_closed(cfg.algebra, a, b)
    agree = brute == closed
    if cfg.output_format == "json":
        out = d.to_json()
        out["text"] = d.text()
        out["closed_form"] = closed.to_json()
        out["agree"] = agree
        return 0, json.dumps(out, indent=2)
    return 0, f"{d.text()}\nclosed form: {closed} ({'agrees' if agree else 'DISAGREES'})"


def run_green(cfg: CommandConfig) -> tuple[int, str]:
    """Multiplication table of generator labels under the closed form."""
    from .green import generator_labels, product_closed
    labels = ([parse_label(t) for t in cfg.labels] if cfg.labels
              else generator_labels(cfg.algebra, cfg.max_rank, cfg.etas))
    rows = [(format_label(a), format_label(b), product_closed(cfg.algebra, a, b)) for a in labels for b in labels]
    if cfg.output_format == "json":
        return 0, json.dumps({"algebra": cfg.algebra, "labels": [format_label(x) for x in labels],
                              "products": [{"left": x, "right": y, "product": p.to_json()["terms"]}
                                           for x, y, p in rows]}, indent=2)
    return 0, "\n".join(f"{x} * {y} = {p}" for x, y, p in rows)


def run_verify(cfg: CommandConfig) -> tuple[int, str]:
    from .suites import SuiteConfig, run_suite
    rep = run_suite(cfg.suite, SuiteConfig(cfg.max_rank, cfg.etas, cfg.seed))
    code = 0 if rep.ok else 1
    if cfg.output_format == "json":
        return code, json.dumps(rep.to_json(), indent=2)
    return code, rep.text(cfg.verbose)


RUNNERS = {"algebra": run_algebra, "module": run_module, "tensor": run_tensor,
           "green": run_green, "verify": run_verify, "diagram": run_diagram}


def build_parser() -> argparse.ArgumentParser:
    from .suites import SUITES
    p = argparse.ArgumentParser(prog="greenring", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("json", "text", "dot"), default="text")
    common.add_argument("--out", dest="output_path")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-rank", type=_positive, default=4)
    common.add_argument("--etas", type=_etas, default=(Fraction(1), Fraction(2), Fraction(-1)))
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("algebra", parents=[common], help="structure, axioms, idempotents, blocks, quiver")
    a.add_argument("--name", dest="algebra", choices=ALGEBRA_NAMES, required=True)

    for name, nargs, hlp in (("module", 1, "build one indecomposable"),
                             ("diagram", 1, "DOT diagram of one indecomposable"),
                             ("tensor", 2, "decompose a tensor product"),
                             ("green", "*", "closed-form multiplication table")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("--algebra", choices=("mabar", "DH4", "HH"), default="mabar")
        s.add_argument("labels", nargs=nargs)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("-v", "--verbose", action="store_true")
    return p


def config_from_args(ns: argparse.Namespace) -> CommandConfig:
    seed = int(os.environ["GREENRING_SEED"]) if os.environ.get("GREENRING_SEED") else ns.seed
    return CommandConfig(command=ns.command, algebra=getattr(ns, "algebra", "mabar"),
                         labels=tuple(getattr(ns, "labels", ()) or ()), max_rank=ns.max_rank,
                         etas=tuple(ns.etas), seed=seed, output_format=ns.output_format,
                         output_path=ns.output_path, suite=getattr(ns, "suite", None),
                         verbose=getattr(ns, "verbose", False))


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = config_from_args(ns)
    try:
        code, out = RUNNERS[cfg.command](cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
