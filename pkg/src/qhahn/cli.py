"""Batch front door: classify, verify, cg-table, and sweep subcommands.

Configuration is a single JSON document; command-line flags override config
fields.  Reports are emitted as JSON (or CSV for tables) with deterministic
formatting: sorted keys, 17-significant-digit round-trip floats, no
timestamps, so consecutive runs are byte-identical.

Exit codes: 0 all checks passed, 1 verification failure, 2 usage/config error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import aw3, cg, coupling
from .algebra import AlgebraSpec, build_ladder_rep, classify, type_condition

SCHEMA = "qhahn-report/1"

SCHEMA_FIELDS = {
    "schema": "report schema identifier (this document)",
    "config": "echo of the resolved run configuration",
    "composition.relation_residuals": "relative defining-relation residuals of the composed generators on the interior product states",
    "composition.casimir_factored_agreement": "relative deviation between the direct and factored coupled Casimir on guarded sectors",
    "composition.types": "classification of the two factors and the composition",
    "sectors[].aw_paper": "relative residuals of the two quadratic closure relations with closed-form scalars",
    "sectors[].aw_fitted.residual": "relative least-squares residual when re-fitting the closure scalars",
    "sectors[].aw_fitted.max_deviation": "worst relative deviation of fitted scalars from closed-form values",
    "sectors[].aw_fitted.degenerate": "design matrix of the scalar fit was rank-deficient",
    "sectors[].casimir_centrality": "relative commutator norms of the closure Casimir with K1, K2, K3",
    "sectors[].casimir_scalar_deviation": "relative deviation of the closure Casimir from a multiple of the identity (diagnostic)",
    "sectors[].elements": "sector tridiagonal vs closed-form predictions (structural and as-published index placement)",
    "sectors[].lambda_audit": "sector spectrum vs corrected and as-published eigenvalue grids, relative to spectral spread (unitary sectors)",
    "sectors[].wz_audit": "scale-fitted residuals of the printed W^2/Z closed forms against matrix data (unitary sectors)",
    "worst": "worst value of each check over all sectors",
    "passed": "every gated check met its tolerance",
    "failures": "human-readable list of tolerance violations",
}

_BUILTIN_PAIRS = ("sl_sl", "euplus_euminus", "euminus_euplus", "generic")


class ConfigError(ValueError):
    """Invalid run configuration (exit code 2)."""


@dataclass
class RunConfig:
    q: float = 0.8
    a2: float = 1.0
    a1: float = 1.0
    mu_a: float = 1.0
    b2: float = 1.0
    b1: float = 1.0
    mu_b: float = 0.5
    dim: int = 12
    sectors: list[int] = field(default_factory=lambda: [0, 1, 2, 3, 4, 5])
    tol_relation: float = 1e-9
    tol_crossmethod: float = 1e-8
    tol_spectrum: float = 1e-8
    out_format: str = "json"
    out_path: str = ""

    def validate(self) -> None:
        if not self.sectors:
            raise ConfigError("sectors list must not be empty")
        if self.dim < max(self.sectors) + 2:
            raise ConfigError(
                f"dim={self.dim} too small for sectors {self.sectors}: need dim >= max(sectors)+2"
            )
        for name, tol in (
            ("relation", self.tol_relation),
            ("crossmethod", self.tol_crossmethod),
            ("spectrum", self.tol_spectrum),
        ):
            if not tol > 0:
                raise ConfigError(f"tolerance {name} must be positive, got {tol}")
        if self.a1 != self.b2:
            raise ConfigError(
                f"composition needs the shared parameter a1 == b2, got a1={self.a1}, b2={self.b2}"
            )
        if self.out_format not in ("json", "csv"):
            raise ConfigError(f"output format must be json or csv, got {self.out_format}")


def _config_from_document(doc: dict) -> RunConfig:
    cfg = RunConfig()
    if "q" in doc:
        cfg.q = float(doc["q"])
    if "algebraA" in doc:
        a = doc["algebraA"]
        cfg.a2 = float(a.get("a2", cfg.a2))
        cfg.a1 = float(a.get("a1", cfg.a1))
        cfg.mu_a = float(a.get("mu", cfg.mu_a))
    if "algebraB" in doc:
        b = doc["algebraB"]
        cfg.b2 = float(b.get("b2", cfg.b2))
        cfg.b1 = float(b.get("b1", cfg.b1))
        cfg.mu_b = float(b.get("mu", cfg.mu_b))
    if "dim" in doc:
        cfg.dim = int(doc["dim"])
    if "sectors" in doc:
        cfg.sectors = [int(n) for n in doc["sectors"]]
    tol = doc.get("tolerances", {})
    cfg.tol_relation = float(tol.get("relation", cfg.tol_relation))
    cfg.tol_crossmethod = float(tol.get("crossmethod", cfg.tol_crossmethod))
    cfg.tol_spectrum = float(tol.get("spectrum", cfg.tol_spectrum))
    out = doc.get("outputs", {})
    cfg.out_format = str(out.get("format", cfg.out_format))
    cfg.out_path = str(out.get("path", cfg.out_path))
    return cfg


def load_config(args) -> RunConfig:
    doc = {}
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
    cfg = _config_from_document(doc)
    for attr, flag in (
        ("q", "q"),
        ("a2", "a2"),
        ("a1", "a1"),
        ("mu_a", "mu_a"),
        ("b2", "b2"),
        ("b1", "b1"),
        ("mu_b", "mu_b"),
        ("dim", "dim"),
    ):
        val = getattr(args, flag, None)
        if val is not None:
            setattr(cfg, attr, val)
    if getattr(args, "sectors", None):
        cfg.sectors = [int(x) for x in args.sectors]
    if getattr(args, "format", None):
        cfg.out_format = args.format
    if getattr(args, "output", None):
        cfg.out_path = args.output
    cfg.validate()
    return cfg


# ---------------------------------------------------------------------------
# serialisation helpers
# ---------------------------------------------------------------------------


def _plain(obj):
    """Recursively convert numpy scalars/arrays so json can serialise them."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, float) and math.isinf(obj):
        return "inf" if obj > 0 else "-inf"
    return obj


def dump_report(report: dict, path: str) -> None:
    text = json.dumps(_plain(report), sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


# ---------------------------------------------------------------------------
# verification core (shared by verify and sweep)
# ---------------------------------------------------------------------------


def build_composition(cfg: RunConfig) -> coupling.CoupledRep:
    spec_a = AlgebraSpec(a2=cfg.a2, a1=cfg.a1, q=cfg.q)
    spec_b = AlgebraSpec(a2=cfg.b2, a1=cfg.b1, q=cfg.q)
    rep_a = build_ladder_rep(spec_a, cfg.mu_a, cfg.dim, mode="auto")
    rep_b = build_ladder_rep(spec_b, cfg.mu_b, cfg.dim, mode="auto")
    return coupling.couple(rep_a, rep_b)


def _casimir_agreement(c: coupling.CoupledRep, sectors: list[int] | None = None) -> float:
    """Direct vs factored Casimir over the union of guarded sectors.

    A single relative measure: some compositions have sectors on which the
    Casimir vanishes identically, where a per-sector ratio would compare
    roundoff against roundoff.
    """
    direct = c.QC
    factored = coupling.coupled_casimir_factored(c)
    idx = []
    for n in range(c.max_sector + 1):
        idx.extend(na * c.repB.dim + nb for na, nb in ((k, n - k) for k in range(n + 1)))
    sub = np.ix_(idx, idx)
    diff = float(np.linalg.norm(direct[sub] - factored[sub]))
    scale = max(np.linalg.norm(direct[sub]), np.linalg.norm(factored[sub]))
    if scale == 0.0:
        return 0.0
    return diff / float(scale)


def verify_composition(cfg: RunConfig) -> dict:
    """Run the full verification battery for one composition."""
    c = build_composition(cfg)
    relations = coupling.coupled_relation_residuals(c)
    agreement = _casimir_agreement(c, cfg.sectors)
    sectors_out = []
    worst = {
        "relation": max(relations.values()),
        "casimir_agreement": agreement,
        "aw_relation": 0.0,
        "aw_fit_deviation": 0.0,
        "centrality": 0.0,
        "lambda_corrected": 0.0,
    }
    failures = []
    for name, value in relations.items():
        if value > cfg.tol_relation:
            failures.append(f"relation residual {name} = {value:.3e} > {cfg.tol_relation}")
    if agreement > cfg.tol_relation:
        failures.append(f"casimir factored/direct deviation {agreement:.3e} > {cfg.tol_relation}")
    for n in cfg.sectors:
        s = coupling.sector(c, n)
        ops = aw3.build_aw_operators(s)
        st = aw3.structure_constants(c, n)
        r1, r2 = aw3.verify_aw_relations(ops, st)
        fit = aw3.fit_structure_constants(ops, st)
        _, cas = aw3.aw_casimir(ops, st)
        elements = coupling.sector_qc_elements(s)
        entry = {
            "N": n,
            "aw_paper": [r1, r2],
            "aw_fitted": {
                "residual": fit.residual,
                "max_deviation": max(fit.deviations.values()),
                "deviations": fit.deviations,
                "degenerate": fit.degenerate,
                "constants": fit.structure.as_dict(),
            },
            "aw_constants": st.as_dict(),
            "casimir_centrality": [
                cas.centrality_k1,
                cas.centrality_k2,
                cas.centrality_k3,
            ],
            "casimir_scalar_deviation": cas.scalar_deviation,
            "elements": {
                "diag_deviation": elements.diag_deviation,
                "super_deviation": elements.super_deviation,
                "sub_deviation": elements.sub_deviation,
                "super_deviation_printed": elements.super_deviation_printed,
                "sub_deviation_printed": elements.sub_deviation_printed,
            },
        }
        worst["aw_relation"] = max(worst["aw_relation"], r1, r2)
        worst["centrality"] = max(worst["centrality"], cas.max_centrality())
        if not fit.degenerate and fit.residual <= 1e-10:
            worst["aw_fit_deviation"] = max(
                worst["aw_fit_deviation"], max(fit.deviations.values())
            )
        if max(r1, r2) > cfg.tol_relation:
            failures.append(
                f"sector {n}: closure residuals ({r1:.3e}, {r2:.3e}) > {cfg.tol_relation}"
            )
        if cas.max_centrality() > cfg.tol_relation:
            failures.append(
                f"sector {n}: Casimir centrality {cas.max_centrality():.3e} > {cfg.tol_relation}"
            )
        if s.unitary and c.spec_c.a1 != 0.0 and c.spec_c.a2 != 0.0:
            lam = cg.lambda_audit(s)
            entry["lambda_audit"] = {
                "corrected_deviation": lam.corrected_deviation,
                "printed_deviation": lam.printed_deviation,
            }
            worst["lambda_corrected"] = max(
                worst["lambda_corrected"], lam.corrected_deviation
            )
            if lam.corrected_deviation > cfg.tol_spectrum:
                failures.append(
                    f"sector {n}: spectrum deviation {lam.corrected_deviation:.3e} > {cfg.tol_spectrum}"
                )
            if c.d != 0.0:
                params = cg.QHahnParams.from_sector(s)
                wz = cg.w_z_closed_form_audit(s, params)
                entry["wz_audit"] = {
                    "bracket_form": wz.bracket_form,
                    "amplitude_form_a": wz.amplitude_form_a,
                    "amplitude_form_b": wz.amplitude_form_b,
                    "z_form": wz.z_form,
                    "z_fit": wz.z_fit,
                }
        sectors_out.append(entry)
    report = {
        "schema": SCHEMA,
        "schema_fields": SCHEMA_FIELDS,
        "config": {
            "q": cfg.q,
            "algebraA": {"a2": cfg.a2, "a1": cfg.a1, "mu": cfg.mu_a},
            "algebraB": {"b2": cfg.b2, "b1": cfg.b1, "mu": cfg.mu_b},
            "dim": cfg.dim,
            "sectors": cfg.sectors,
            "tolerances": {
                "relation": cfg.tol_relation,
                "crossmethod": cfg.tol_crossmethod,
                "spectrum": cfg.tol_spectrum,
            },
        },
        "composition": {
            "types": {
                "A": classify(c.repA.spec).value,
                "B": classify(c.repB.spec).value,
                "C": classify(c.spec_c).value,
            },
            "spec_c": {"c2": c.spec_c.a2, "c1": c.spec_c.a1},
            "unitary": c.unitary,
            "relation_residuals": relations,
            "casimir_factored_agreement": agreement,
        },
        "sectors": sectors_out,
        "worst": worst,
        "failures": failures,
        "passed": not failures,
    }
    return report


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_classify(args) -> int:
    try:
        spec = AlgebraSpec(a2=args.a2, a1=args.a1, q=args.q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    t = classify(spec)
    print(f"{t.value}: {type_condition(t, spec.q)}")
    return 0


def cmd_verify(args) -> int:
    cfg = load_config(args)
    try:
        report = verify_composition(cfg)
    except Exception as exc:  # partial report still gets written
        report = {
            "schema": SCHEMA,
            "schema_fields": SCHEMA_FIELDS,
            "error": f"{type(exc).__name__}: {exc}",
            "passed": False,
            "failures": [f"aborted: {exc}"],
        }
        dump_report(report, cfg.out_path)
        return 1
    dump_report(report, cfg.out_path)
    return 0 if report["passed"] else 1


def cmd_cg_table(args) -> int:
    cfg = load_config(args)
    n_sector = args.sector if args.sector is not None else max(cfg.sectors)
    if n_sector > cfg.dim - 2:
        print(f"error: sector {n_sector} needs dim >= {n_sector + 2}", file=sys.stderr)
        return 2
    c = build_composition(cfg)
    if not c.unitary:
        print(
            "error: overlap tables need a unitary composition "
            "(some squared ladder amplitude is not positive)",
            file=sys.stderr,
        )
        return 1
    s = coupling.sector(c, n_sector)
    t_diag = cg.cg_by_diagonalization(s)
    t_recur = cg.cg_by_recurrence(s)
    closed_form_ok = c.d != 0.0 and c.spec_c.a1 != 0.0 and c.spec_c.a2 != 0.0
    audit = None
    t_qhahn = None
    if closed_form_ok:
        audit = cg.qhahn_closed_form_audit(s)
        lower_power = 2 if "rq^2" in audit.best else 1
        s_sign = 1 if "s_sign=+1" in audit.best else -1
        s_exp = 1 if "s_exp=+1" in audit.best else -1
        params = cg.QHahnParams.from_sector(s, s_sign=s_sign, s_exponent_sign=s_exp)
        t_qhahn = cg.cg_by_qhahn(s, params, lower_power=lower_power)
    meta = {
        "schema": SCHEMA,
        "q": cfg.q,
        "algebraA": {"a2": cfg.a2, "a1": cfg.a1, "mu": cfg.mu_a},
        "algebraB": {"b2": cfg.b2, "b1": cfg.b1, "mu": cfg.mu_b},
        "N": n_sector,
        "labeling": t_diag.labeling,
        "closed_form": (
            {
                "best_convention": audit.best,
                "best_agreement": audit.best_agreement,
                "matched": audit.matched,
                "agreements": audit.agreements,
            }
            if audit is not None
            else None
        ),
    }
    rows = []
    worst_dr = 0.0
    worst_dq = 0.0
    for n in range(n_sector + 1):
        for x in range(n_sector + 1):
            cd = float(t_diag.coeffs[n, x])
            cr = float(t_recur.coeffs[n, x])
            cq = float(t_qhahn.coeffs[n, x]) if t_qhahn is not None else math.nan
            ddr = abs(cd - cr)
            ddq = abs(cd - cq) if t_qhahn is not None else math.nan
            worst_dr = max(worst_dr, ddr)
            if t_qhahn is not None:
                worst_dq = max(worst_dq, ddq)
            rows.append((n, x, cd, cr, cq, ddr, ddq))
    meta["max_dev_diag_recur"] = worst_dr
    meta["max_dev_diag_qhahn"] = worst_dq if t_qhahn is not None else None
    meta["eigenvalues"] = [float(v) for v in t_diag.eigenvalues]
    exceeded = worst_dr > cfg.tol_crossmethod
    if audit is not None and not audit.matched:
        meta["closed_form_note"] = (
            "no closed-form convention met tolerance; table column uses best candidate"
        )
    if cfg.out_format == "csv":
        out = sys.stdout if not cfg.out_path else open(cfg.out_path, "w", encoding="utf-8", newline="")
        try:
            out.write(f"# {json.dumps(_plain(meta), sort_keys=True)}\n")
            writer = csv.writer(out)
            writer.writerow(["n", "x", "C_diag", "C_recur", "C_qhahn", "dev_diag_recur", "dev_diag_qhahn"])
            for n, x, cd, cr, cq, ddr, ddq in rows:
                writer.writerow([n, x, _fmt(cd), _fmt(cr), _fmt(cq), _fmt(ddr), _fmt(ddq)])
        finally:
            if cfg.out_path:
                out.close()
    else:
        doc = {
            "meta": meta,
            "rows": [
                {
                    "n": n,
                    "x": x,
                    "C_diag": cd,
                    "C_recur": cr,
                    "C_qhahn": cq,
                    "dev_diag_recur": ddr,
                    "dev_diag_qhahn": ddq,
                }
                for n, x, cd, cr, cq, ddr, ddq in rows
            ],
        }
        dump_report(doc, cfg.out_path)
    return 1 if exceeded else 0


def resolve_pair(name: str, q: float) -> tuple[float, float, float]:
    """Built-in composition families (a2, d, b1), sign-adjusted per q branch."""
    if name == "sl_sl":
        return (1.0, 1.0, 1.0)
    if name == "euplus_euminus":
        return (-1.0, 0.0, 1.0) if q > 1 else (1.0, 0.0, -1.0)
    if name == "euminus_euplus":
        return (0.0, 1.0, 0.0)
    if name == "generic":
        return (1.0, 0.7, 0.9)
    raise ConfigError(f"unknown pair {name!r}; built-ins: {', '.join(_BUILTIN_PAIRS)}")


def _sweep_cell(pair_name, a2, d, b1, q, mu_a, mu_b, dim, sectors, tolerances) -> dict:
    cfg = RunConfig(
        q=q,
        a2=a2,
        a1=d,
        mu_a=mu_a,
        b2=d,
        b1=b1,
        mu_b=mu_b,
        dim=dim,
        sectors=sectors,
        tol_relation=tolerances["relation"],
        tol_crossmethod=tolerances["crossmethod"],
        tol_spectrum=tolerances["spectrum"],
    )
    cell_id = {
        "pair": pair_name,
        "q": q,
        "mu_a": mu_a,
        "mu_b": mu_b,
    }
    try:
        report = verify_composition(cfg)
    except Exception as exc:
        return {
            "cell": cell_id,
            "passed": False,
            "error": f"{type(exc).__name__}: {exc}",
        }
    return {
        "cell": cell_id,
        "passed": report["passed"],
        "unitary": report["composition"]["unitary"],
        "type_c": report["composition"]["types"]["C"],
        "worst": report["worst"],
        "failures": report["failures"],
    }


def cmd_sweep(args) -> int:
    doc = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read config {args.config}: {exc}", file=sys.stderr)
            return 2
    try:
        q_values = [float(x) for x in doc.get("q_values", [0.5, 0.8, 1.25, 2.0])]
        mu_values = [float(x) for x in doc.get("mu_values", [0.3, 0.5, 1.0, 1.7])]
        pair_names = doc.get("pairs", list(_BUILTIN_PAIRS))
        dim = int(doc.get("dim", 22))
        sectors = [int(x) for x in doc.get("sectors", list(range(21)))]
        tol = {
            "relation": 1e-9,
            "crossmethod": 1e-8,
            "spectrum": 1e-8,
        }
        tol.update({k: float(v) for k, v in doc.get("tolerances", {}).items()})
        if dim < max(sectors) + 2:
            raise ConfigError(f"dim={dim} too small for sectors up to {max(sectors)}")
        cells = []
        for pair_name in pair_names:
            for q in q_values:
                if isinstance(pair_name, dict):
                    name = pair_name.get("name", "custom")
                    a2, d, b1 = (
                        float(pair_name["a2"]),
                        float(pair_name["d"]),
                        float(pair_name["b1"]),
                    )
                else:
                    name = pair_name
                    a2, d, b1 = resolve_pair(pair_name, q)
                for mu_a in mu_values:
                    for mu_b in mu_values:
                        cells.append((name, a2, d, b1, q, mu_a, mu_b, dim, sectors, tol))
    except (ConfigError, KeyError, TypeError, ValueError) as exc:
        print(f"error: bad sweep config: {exc}", file=sys.stderr)
        return 2
    workers = int(os.environ.get("QHAHN_THREADS", "0")) or (os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda c: _sweep_cell(*c), cells))
    n_passed = sum(1 for r in results if r["passed"])
    worst = {}
    for r in results:
        for key, val in r.get("worst", {}).items():
            if isinstance(val, (int, float)) and not math.isnan(val):
                worst[key] = max(worst.get(key, 0.0), val)
    report = {
        "schema": SCHEMA,
        "schema_fields": SCHEMA_FIELDS,
        "grid": {
            "q_values": q_values,
            "mu_values": mu_values,
            "pairs": [p if isinstance(p, str) else p.get("name", "custom") for p in pair_names],
            "dim": dim,
            "sectors": sectors,
            "tolerances": tol,
        },
        "cells": results,
        "summary": {
            "total": len(results),
            "passed": n_passed,
            "failed": len(results) - n_passed,
            "worst": worst,
        },
        "passed": n_passed == len(results),
    }
    dump_report(report, args.output or "")
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhahn",
        description="Verification lab for composed q-deformed ladder algebras: "
        "quadratic closure checks and overlap tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cls = sub.add_parser("classify", help="name the (a2, a1, q) family member")
    p_cls.add_argument("--a2", type=float, required=True)
    p_cls.add_argument("--a1", type=float, required=True)
    p_cls.add_argument("--q", type=float, required=True)
    p_cls.set_defaults(func=cmd_classify)

    def common(p):
        p.add_argument("--config", help="JSON run configuration")
        p.add_argument("--q", type=float)
        p.add_argument("--a2", type=float)
        p.add_argument("--a1", type=float)
        p.add_argument("--mu-a", dest="mu_a", type=float)
        p.add_argument("--b2", type=float)
        p.add_argument("--b1", type=float)
        p.add_argument("--mu-b", dest="mu_b", type=float)
        p.add_argument("--dim", type=int)
        p.add_argument("--sectors", type=int, nargs="+")
        p.add_argument("--format", choices=("json", "csv"))
        p.add_argument("--output", "-o", help="report path (default stdout)")

    p_ver = sub.add_parser("verify", help="run the verification battery for one composition")
    common(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_cg = sub.add_parser("cg-table", help="emit the overlap table for one sector")
    common(p_cg)
    p_cg.add_argument("--sector", type=int, help="total weight N (default: max of sectors)")
    p_cg.set_defaults(func=cmd_cg_table)

    p_sw = sub.add_parser("sweep", help="cartesian verification sweep over a parameter grid")
    p_sw.add_argument("--config", help="JSON sweep configuration")
    p_sw.add_argument("--output", "-o", help="report path (default stdout)")
    p_sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
