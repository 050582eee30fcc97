"""Command-line interface: ``fflv <command> [options]``.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from . import oracle, polytope_c as pc
from .errors import Budget, BudgetExceeded, FFLVError, InvalidInput
from .perm_simple import (
    SegmentFamily, b_stat, enumerate_rp, is_rp, is_rs, pbw_poly, permutation_vertices_a, psi,
    psi_inv, schroder, simple_by_perm, simple_vertices_a, x_of_e,
)
from .polytope_a import hrep_a, lattice_points_a
from .vertices_a import enumerate_vertices_a
from .weights import (
    Perm, WeightA, WeightC, act_perm_a, act_signed_perm_c, eps_c_to_a, mu_of_point_a,
    mu_of_point_c, weyl_dim_a, weyl_dim_c,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    kind: str
    n: int | None
    weight: tuple[int, ...] | None
    budget: Budget
    fmt: str


# serialization

def rat(v) -> str:
    return str(Fraction(v))


def triangle_json(x) -> dict:
    return {f"{i},{j}": rat(v) for (i, j), v in x.items()}


def eps_json(mu) -> list[str]:
    return [rat(c) for c in mu.coords]


def signed_json(w) -> dict:
    return {"sigma": list(w.sigma.images), "signs": list(w.signs)}


def antichains_json(t) -> list[list[str]]:
    return [[f"{i},{j}" for i, j in a] for a in t.chains]


def parse_weight(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p.isdigit() for p in parts):
        raise InvalidInput(f"weight must be comma-separated nonnegative integers, got {text!r}")
    return tuple(int(p) for p in parts)


def parse_perm(text: str) -> Perm:
    parts = [p.strip() for p in text.split(",")]
    if any(not p.lstrip("-").isdigit() for p in parts):
        raise InvalidInput(f"permutation must be comma-separated integers, got {text!r}")
    return Perm(int(p) for p in parts)


def make_weight(cfg: RunConfig):
    if cfg.weight is None:
        raise InvalidInput(f"{cfg.command} needs --weight")
    return WeightA(cfg.weight) if cfg.kind == "A" else WeightC(cfg.weight)


def check_rank(cfg: RunConfig, n: int):
    if cfg.kind == "A":
        cfg.budget.check_rank_a(n)
    else:
        cfg.budget.check_rank_c(n)


# commands

def cmd_vertices(cfg: RunConfig) -> dict:
    lam = make_weight(cfg)
    check_rank(cfg, lam.n)
    if cfg.kind == "A":
        verts, h = enumerate_vertices_a(lam, cfg.budget), hrep_a(lam)
    else:
        verts, h = pc.enumerate_vertices_c(lam, cfg.budget), pc.hrep_c(lam)
    items = []
    for t, x in verts:
        tight = oracle.tight_rows(h, x)
        coord = sum(1 for k in tight if h.rows[k].kind == "coordinate")
        items.append({
            "point": triangle_json(x),
            "antichains": antichains_json(t),
            "tight_coordinate_rows": coord,
            "tight_path_rows": len(tight) - coord,
        })
    return {"command": "vertices", "type": cfg.kind, "weight": list(lam.coords),
            "count": len(items), "vertices": items}


def cmd_perm(cfg: RunConfig) -> dict:
    lam = make_weight(cfg)
    check_rank(cfg, lam.n)
    items = []
    if cfg.kind == "A":
        for E, x, w in permutation_vertices_a(lam, cfg.budget):
            items.append({"segments": E.labels(), "x": triangle_json(x), "w": list(w.images),
                          "mu": eps_json(mu_of_point_a(lam, x)), "b": rat(b_stat(lam, E))})
    else:
        for E, x, w in pc.weyl_vertices_c(lam, cfg.budget):
            items.append({"segments": E.labels(), "x": triangle_json(x), "w": signed_json(w),
                          "mu": eps_json(mu_of_point_c(lam, x))})
    return {"command": "perm", "type": cfg.kind, "weight": list(lam.coords),
            "count": len(items), "entries": items}


def cmd_simple(cfg: RunConfig) -> dict:
    lam = make_weight(cfg)
    check_rank(cfg, lam.n)
    if not lam.regular():
        raise InvalidInput("simple-vertex classification requires a regular weight: every a_i must be positive")
    if cfg.kind == "A":
        found, h = simple_vertices_a(lam, cfg.budget), hrep_a(lam)
        expected = schroder(lam.n - 1)
    else:
        found, h = pc.simple_vertices_c(lam, cfg.budget), pc.hrep_c(lam)
        expected = None
    items = [{"segments": E.labels(), "x": triangle_json(x),
              "oracle_simple": oracle.is_simple_oracle(h, x)} for E, x in found]
    report = {"command": "simple", "type": cfg.kind, "weight": list(lam.coords),
              "count": len(items), "vertices": items}
    if expected is not None:
        report["schroder"] = expected
        report["schroder_match"] = expected == len(items)
    return report


def cmd_psi(cfg: RunConfig, segments: str) -> dict:
    if cfg.n is None:
        raise InvalidInput("psi needs --n")
    if cfg.kind == "A":
        E = SegmentFamily.parse(cfg.n, segments)
        if not is_rp(E):
            raise InvalidInput(f"{E!r} is not closed under intersection")
        w = psi(E)
        return {"command": "psi", "type": "A", "segments": E.labels(), "w": list(w.images),
                "round_trip": psi_inv(w) == E}
    E = SegmentFamily.parse(2 * cfg.n, segments)
    wc = pc.w_c_of_e(E, cfg.n)
    wa = psi(E)
    return {"command": "psi", "type": "C", "segments": E.labels(), "w": signed_json(wc),
            "w_sl2n": list(wa.images), "round_trip": psi_inv(wa) == E}


def cmd_psi_inv(cfg: RunConfig, perm: str) -> dict:
    w = parse_perm(perm)
    if cfg.kind == "C" and not pc.is_symmetric_perm(w):
        raise InvalidInput("type C psi-inv needs a symmetric permutation of [1, 2n]")
    E = psi_inv(w)
    return {"command": "psi-inv", "type": cfg.kind, "w": list(w.images), "segments": E.labels(),
            "round_trip": psi(E) == w}


def cmd_char(cfg: RunConfig) -> dict:
    if cfg.kind != "A":
        raise InvalidInput("char is defined for type A only")
    lam = make_weight(cfg)
    check_rank(cfg, lam.n)
    poly = pbw_poly(lam, cfg.budget)
    return {"command": "char", "type": "A", "weight": list(lam.coords),
            "terms": [{"exponent": rat(e), "coefficient": c} for e, c in poly.items()],
            "count": sum(poly.values())}


def cmd_lattice_count(cfg: RunConfig) -> dict:
    lam = make_weight(cfg)
    check_rank(cfg, lam.n)
    if cfg.kind == "A":
        count, dim = len(lattice_points_a(lam, cfg.budget)), weyl_dim_a(lam)
    else:
        count, dim = len(pc.lattice_points_c(lam, cfg.budget)), weyl_dim_c(lam)
    return {"command": "lattice-count", "type": cfg.kind, "weight": list(lam.coords),
            "count": count, "weyl_dimension": dim, "match": count == dim}


def _summands(lam):
    cls = type(lam)
    k = len(lam.coords)
    h = hrep_a if cls is WeightA else pc.hrep_c
    return [h(cls([lam.coords[t] if t == s else 0 for t in range(k)])) for s in range(k)]


def _verify_weight(kind: str, lam, budget: Budget) -> list[dict]:
    checks = []

    def record(name, ok, detail=None):
        entry = {"check": name, "weight": list(lam.coords), "pass": bool(ok)}
        if not ok and detail is not None:
            entry["counterexample"] = detail
        checks.append(entry)

    if kind == "A":
        h = hrep_a(lam)
        mine = {tuple(x.values) for _, x in enumerate_vertices_a(lam, budget)}
    else:
        h = pc.hrep_c(lam)
        mine = {tuple(x.values) for _, x in pc.enumerate_vertices_c(lam, budget)}
    ref = set(oracle.oracle_vertices(h, _summands(lam), budget))
    diff = sorted(mine ^ ref)[:5]
    record("vertices_match_oracle", mine == ref, [[rat(c) for c in v] for v in diff])

    if kind == "A":
        count, dim = len(lattice_points_a(lam, budget)), weyl_dim_a(lam)
    else:
        count, dim = len(pc.lattice_points_c(lam, budget)), weyl_dim_c(lam)
    record("lattice_count_equals_dimension", count == dim, {"count": count, "dimension": dim})

    bad = []
    if kind == "A":
        for E, x, w in permutation_vertices_a(lam, budget):
            if mu_of_point_a(lam, x) != act_perm_a(w, lam) or tuple(x.values) not in ref:
                bad.append(E.labels())
    else:
        lb = pc.lambda_bar(lam)
        for E, x, w in pc.weyl_vertices_c(lam, budget):
            ok = (x.is_integral() and tuple(x.values) in ref
                  and eps_c_to_a(mu_of_point_c(lam, x)) == mu_of_point_a(lb, x_of_e(lb, E))
                  and eps_c_to_a(act_signed_perm_c(w, lam)) == act_perm_a(psi(E), lb))
            if not ok:
                bad.append(E.labels())
    record("permutation_vertices", not bad, bad[:5])

    if lam.regular():
        if kind == "A":
            simple = {tuple(x.values) for _, x in simple_vertices_a(lam, budget)}
        else:
            simple = {tuple(x.values) for _, x in pc.simple_vertices_c(lam, budget)}
        ref_simple = {v for v in ref if oracle.is_simple_oracle(h, v)}
        diff = sorted(simple ^ ref_simple)[:5]
        record("simple_vertices_match_oracle", simple == ref_simple, [[rat(c) for c in v] for v in diff])
    return checks


def cmd_verify(cfg: RunConfig, upto: int, samples: int | None, seed: int | None) -> dict:
    if cfg.n is None:
        raise InvalidInput("verify needs --n")
    n = cfg.n
    if cfg.kind == "A":
        if n < 2:
            raise InvalidInput("type A needs n >= 2")
        cfg.budget.check_rank_a(n)
        k, cls = n - 1, WeightA
    else:
        if n < 1:
            raise InvalidInput("type C needs n >= 1")
        cfg.budget.check_rank_c(n)
        k, cls = n, WeightC
    if upto < 0:
        raise InvalidInput("--weights-upto must be nonnegative")
    grid = [cls(a) for a in itertools.product(range(upto + 1), repeat=k)]
    if samples is not None and samples < len(grid):
        grid = random.Random(seed).sample(grid, samples)
    checks = []
    for lam in grid:
        checks.extend(_verify_weight(cfg.kind, lam, cfg.budget))
    if cfg.kind == "A":
        fams = enumerate_rp(n, cfg.budget)
        bad = [E.labels() for E in fams if psi_inv(psi(E)) != E or is_rs(E) != simple_by_perm(psi(E))]
        checks.append({"check": "bijection_and_simple_criterion", "weight": None, "pass": not bad}
                      | ({"counterexample": bad[:5]} if bad else {}))
    passed = sum(c["pass"] for c in checks)
    return {"command": "verify", "type": cfg.kind, "n": n, "weights": len(grid),
            "count": len(checks), "passed": passed, "all_pass": passed == len(checks), "checks": checks}


# output

def render_table(report: dict) -> str:
    lines = [f"{report['command']} (type {report.get('type', 'A')})"]
    for key in ("vertices", "entries", "checks", "terms"):
        for item in report.get(key, []):
            lines.append("  " + "  ".join(f"{k}={_flat(v)}" for k, v in item.items()))
    for k, v in report.items():
        if k not in ("command", "type", "vertices", "entries", "checks", "terms"):
            lines.append(f"{k}: {_flat(v)}")
    return "\n".join(lines)


def _flat(v) -> str:
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}:{_flat(x)}" for k, x in v.items()) + "}"
    if isinstance(v, list):
        return "[" + " ".join(_flat(x) for x in v) + "]"
    return str(v)


def dump_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fflv", description="Vertices of FFLV polytopes of types A and C.")
    p.add_argument("command", choices=["vertices", "perm", "simple", "psi", "psi-inv", "char",
                                       "verify", "lattice-count"])
    p.add_argument("--type", dest="kind", choices=["A", "C"], default="A")
    p.add_argument("--weight", help="comma-separated nonnegative integers a_1,...")
    p.add_argument("--n", type=int, help="rank (psi, verify)")
    p.add_argument("--perm", help="one-line permutation, e.g. 3,1,4,2")
    p.add_argument("--segments", help="segment family, e.g. 1-2,1-3")
    p.add_argument("--format", dest="fmt", choices=["json", "table"], default="json")
    p.add_argument("--max-rank", type=int, help="cap on the rank n")
    p.add_argument("--budget", type=int, help="cap on lattice enumeration nodes")
    p.add_argument("--weights-upto", type=int, default=2, help="verify all a_i in 0..K")
    p.add_argument("--sample", type=int, help="verify only this many weights, drawn with --seed")
    p.add_argument("--seed", type=int, help="seed for --sample")
    return p


def _config(args) -> RunConfig:
    budget = Budget.from_env()
    if args.max_rank is not None:
        if args.max_rank < 1:
            raise InvalidInput("--max-rank must be positive")
        budget = replace(budget, max_rank_a=args.max_rank, max_rank_c=args.max_rank)
    if args.budget is not None:
        if args.budget < 1:
            raise InvalidInput("--budget must be positive")
        budget = replace(budget, lattice_nodes=args.budget)
    weight = parse_weight(args.weight) if args.weight is not None else None
    return RunConfig(args.command, args.kind, args.n, weight, budget, args.fmt)


def run(args: argparse.Namespace) -> tuple[int, dict | None, str | None]:
    """Run parsed arguments; returns (exit code, report, error message)."""
    try:
        cfg = _config(args)
        if cfg.command == "vertices":
            report = cmd_vertices(cfg)
        elif cfg.command == "perm":
            report = cmd_perm(cfg)
        elif cfg.command == "simple":
            report = cmd_simple(cfg)
        elif cfg.command == "psi":
            if args.segments is None:
                raise InvalidInput("psi needs --segments")
            report = cmd_psi(cfg, args.segments)
        elif cfg.command == "psi-inv":
            if args.perm is None:
                raise InvalidInput("psi-inv needs --perm")
            report = cmd_psi_inv(cfg, args.perm)
        elif cfg.command == "char":
            report = cmd_char(cfg)
        elif cfg.command == "lattice-count":
            report = cmd_lattice_count(cfg)
        else:
            report = cmd_verify(cfg, args.weights_upto, args.sample, args.seed)
    except BudgetExceeded as e:
        return EXIT_BUDGET, None, f"budget exceeded: {e}"
    except (InvalidInput, FFLVError) as e:
        return EXIT_INPUT, None, f"invalid input: {e}"
    code = EXIT_FAIL if report.get("all_pass") is False else EXIT_OK
    return code, report, None


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, report, err = run(args)
    if err is not None:
        print(err, file=sys.stderr)
        return code
    out = dump_json(report) if args.fmt == "json" else render_table(report)
    sys.stdout.write(out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
