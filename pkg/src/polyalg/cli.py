"""Command-line interface with machine-readable JSON/CSV output.

Every command prints one output document on stdout:
    {"schema_version": "1", "command": ..., "inputs": ..., "results": ...,
     "reports": [...]}
Exit codes: 0 all reports pass, 1 some report failed, 2 usage/label error.
Spectrum and degeneracy tables can also be written as CSV and, optionally,
rendered to a figure file with --figure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import apps, compose as compose_mod, coherent, cubic, discrepancies, fock, quadratic
from .core import (
    LabelError,
    LadderRep,
    VerificationReport,
    boson_rep,
    casimir_constancy,
    casimir_on_rep,
    su2_rep,
    su11_rep,
    verify_closure,
)
from .cubic import CubicClass, CubicLabel
from .quadratic import QuadLabel, QuadraticClass

SCHEMA_VERSION = "1"
DENSE_LIMIT = 64


class CliError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse rational {text!r}") from exc


def _maybe_fraction(value):
    return _fraction(value) if value is not None else None


def _serialize_matrix(mat: np.ndarray):
    n, m = mat.shape
    if max(n, m) <= DENSE_LIMIT:
        return {"layout": "dense-row-major", "shape": [n, m], "data": mat.ravel().tolist()}
    rows, cols = np.nonzero(np.abs(mat) > 0)
    return {
        "layout": "coordinate",
        "shape": [n, m],
        "entries": [[int(r), int(c), float(mat[r, c])] for r, c in zip(rows, cols)],
    }


def _rep_payload(rep: LadderRep) -> dict:
    return {
        "dim": rep.dim,
        "labels": {k: str(v) for k, v in rep.labels.items()},
        "n0_diag": list(rep.n0_diag),
        "raise_amps": list(rep.raise_amps),
        "lower_amps": list(rep.lower_amps),
        "truncated": rep.truncated,
    }


def _rep_from_payload(payload: dict) -> LadderRep:
    return LadderRep(
        dim=int(payload["dim"]),
        labels={k: _try_fraction(v) for k, v in payload["labels"].items()},
        n0_diag=tuple(float(x) for x in payload["n0_diag"]),
        raise_amps=tuple(float(x) for x in payload["raise_amps"]),
        lower_amps=tuple(float(x) for x in payload["lower_amps"]),
        truncated=bool(payload["truncated"]),
    )


def _try_fraction(v):
    try:
        return Fraction(v)
    except (ValueError, TypeError):
        return v


def _emit(doc: dict, fmt: str, csv_rows=None, csv_header=None):
    if fmt == "csv" and csv_rows is not None:
        writer = csv.writer(sys.stdout)
        if csv_header:
            writer.writerow(csv_header)
        writer.writerows(csv_rows)
    else:
        json.dump(doc, sys.stdout, indent=2, default=str)
        sys.stdout.write("\n")


def _document(command: str, inputs: dict, results: dict, reports) -> dict:
    if isinstance(reports, VerificationReport):
        reports = [reports]
    skip = {"func", "group", "action"}
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": {k: v for k, v in inputs.items() if v is not None and k not in skip},
        "results": results,
        "reports": [r.as_dict() for r in reports],
    }


def _exit_code(doc: dict) -> int:
    return 0 if all(r["passed"] for r in doc["reports"]) else 1


def _parse_quad_label(args) -> tuple:
    cls = QuadraticClass.parse(args.klass)
    first = args.j if cls.compact else args.k
    if first is None:
        raise CliError(f"{cls.value} requires --{'j' if cls.compact else 'k'}")
    if args.l is None:
        raise CliError("--l is required")
    return cls, QuadLabel(_fraction(first), _fraction(args.l))


def _parse_cubic_label(args) -> tuple:
    cls = CubicClass.parse(args.klass)
    wanted = {
        CubicClass.CMINUS_11_11: ("k1", "k2", "k"),
        CubicClass.CPLUS_11_11: ("k1", "k2", "k"),
        CubicClass.CMINUS_2_2: ("j1", "j2", "k"),
        CubicClass.CPLUS_2_2: ("j1", "j2", "k"),
        CubicClass.CMINUS_2_11: ("j", "k1", "k"),
        CubicClass.CPLUS_2_11: ("j", "k1", "k"),
    }.get(cls, ("k1", "l", "k"))
    params = {}
    for name in wanted:
        value = getattr(args, name, None)
        if value is None:
            raise CliError(f"{cls.value} requires --{name}")
        params[name] = _fraction(value)
    return cls, CubicLabel(params)


def _is_cubic(text: str) -> bool:
    try:
        CubicClass.parse(text)
        return True
    except LabelError:
        return False


def _build_any(args):
    if _is_cubic(args.klass):
        cls, label = _parse_cubic_label(args)
        rep = cubic.build_cubic(cls, label, cutoff=args.cutoff)
        f = cubic.structure_polynomial_cubic(cls, label)
    else:
        cls, label = _parse_quad_label(args)
        rep = quadratic.build(cls, label, cutoff=args.cutoff)
        f = quadratic.structure_polynomial(cls, label)
    if args.mu != 1.0:
        amps = tuple(a * args.mu for a in rep.raise_amps)
        rep = LadderRep(rep.dim, rep.labels, rep.n0_diag, amps, amps, rep.truncated)
        f = f * Fraction(args.mu).limit_denominator(10**9) ** 2
    return cls, label, rep, f


# -- commands -----------------------------------------------------------------

def cmd_rep_build(args) -> int:
    cls, label, rep, f = _build_any(args)
    n0, npl, _ = rep.matrices()
    results = {
        "representation": _rep_payload(rep),
        "structure_polynomial": [str(c) for c in f.coeffs],
        "n0_matrix": _serialize_matrix(n0),
        "nplus_matrix": _serialize_matrix(npl),
    }
    doc = _document("rep build", vars(args), results, [])
    _emit(doc, args.format)
    return 0


def cmd_rep_verify(args) -> int:
    from .polynomial import Polynomial

    if args.from_file:
        with open(args.from_file) as fh:
            payload = json.load(fh)
        rep = _rep_from_payload(payload["results"]["representation"])
        f = Polynomial([Fraction(c) for c in payload["results"]["structure_polynomial"]])
        inputs = {"from_file": args.from_file, "tol": args.tol}
    else:
        cls, label, rep, f = _build_any(args)
        inputs = vars(args)
    report = verify_closure(rep, f, args.tol)
    const = casimir_constancy(rep, f)
    mean_c = abs(float(np.mean(casimir_on_rep(rep, f))))
    report.add("casimir constancy", const, args.tol * (1 + mean_c))
    doc = _document("rep verify", inputs, {"dim": rep.dim}, report)
    _emit(doc, args.format)
    return _exit_code(doc)


def cmd_oracle_compare(args) -> int:
    if _is_cubic(args.klass):
        cls, label = _parse_cubic_label(args)
        if cls.quad_based:
            report = fock.oracle_compare_qh(
                cls, label, tol=args.tol, cutoff=args.cutoff, five_mode=args.five_mode
            )
        else:
            report = fock.oracle_compare_cubic(cls, label, tol=args.tol, cutoff=args.cutoff)
    else:
        cls, label = _parse_quad_label(args)
        report = fock.oracle_compare_quadratic(cls, label, tol=args.tol, cutoff=args.cutoff)
    doc = _document("oracle compare", vars(args), {"class": cls.value}, report)
    _emit(doc, args.format)
    return _exit_code(doc)


def cmd_casimir(args) -> int:
    cls, label = _parse_quad_label(args)
    rep = quadratic.casimir_report(cls, label)
    records = [
        {
            "printed_expression": e["printed_expression"],
            "printed_value": str(e["printed_value"]),
            "computed_value": str(e["computed_value"]),
            "matches": e["matches"],
        }
        for e in rep["printed"]
    ]
    results = {
        "value": str(rep["value"]),
        "value_float": float(rep["value"]),
        "printed_forms": records,
        "discrepancy_ledger": [
            r.as_dict() for r in discrepancies.casimir_discrepancies([(cls, label)])
            if not r.matches
        ],
    }
    doc = _document("casimir", vars(args), results, [])
    _emit(doc, args.format)
    return 0


def cmd_cs_bg(args) -> int:
    cls, label = _parse_quad_label(args)
    rep = quadratic.build(cls, label, cutoff=args.cutoff)
    alpha = complex(args.alpha_re, args.alpha_im)
    state = coherent.bg_state(rep, alpha, tol=args.tol)
    resid = coherent.bg_eigen_residual(rep, state)
    report = VerificationReport()
    report.add("BG eigen-residual", resid, 10 * args.tol)
    results = {
        "truncation": state.truncation,
        "norm_constant": state.norm_constant,
        "tail_bound": state.tail_bound,
        "coefficients_re": [c.real for c in state.coefficients[: state.truncation]],
        "coefficients_im": [c.imag for c in state.coefficients[: state.truncation]],
    }
    doc = _document("cs bg", vars(args), results, report)
    _emit(doc, args.format)
    return _exit_code(doc)


def cmd_cs_perelomov(args) -> int:
    if _is_cubic(args.klass):
        cls, label = _parse_cubic_label(args)
        rep = cubic.build_cubic(cls, label, cutoff=args.cutoff)
    else:
        cls, label = _parse_quad_label(args)
        rep = quadratic.build(cls, label, cutoff=args.cutoff)
    gamma = complex(args.gamma_re, args.gamma_im)
    state = coherent.perelomov_state(rep, gamma)
    norm = float(np.linalg.norm(state.vector()))
    report = VerificationReport()
    report.add("unit norm", abs(norm - 1.0), 1e-14)
    results = {
        "coefficients_re": [c.real for c in state.coefficients],
        "coefficients_im": [c.imag for c in state.coefficients],
        "norm_constant": state.norm_constant,
    }
    doc = _document("cs perelomov", vars(args), results, report)
    _emit(doc, args.format)
    return _exit_code(doc)


def cmd_cs_identity(args) -> int:
    label = QuadLabel(_fraction(args.k), _fraction(args.l))
    rep = quadratic.build(QuadraticClass.QMINUS11, label)
    report = coherent.identity_check_finite(rep, args.points, tol=args.tol)
    doc = _document("cs identity-check", vars(args), {"dim": rep.dim}, report)
    _emit(doc, args.format)
    return _exit_code(doc)


def _parse_factor(text: str, cutoff: int) -> tuple:
    """boson | su2:j | su11:k | quad:<class>:<first>:<l> -> (rep, order)."""
    parts = text.split(":")
    if parts[0] == "boson":
        return boson_rep(cutoff), 0
    if parts[0] == "su2":
        return su2_rep(_fraction(parts[1])), 1
    if parts[0] == "su11":
        return su11_rep(_fraction(parts[1]), cutoff), 1
    if parts[0] == "quad":
        cls = QuadraticClass.parse(parts[1])
        label = QuadLabel(_fraction(parts[2]), _fraction(parts[3]))
        dim = quadratic.dimension(cls, label)
        rep = quadratic.build(
            cls, label, cutoff=cutoff if dim is quadratic.INFINITE else None
        )
        return rep, 2
    raise CliError(f"cannot parse composition factor {text!r}")


def cmd_compose(args) -> int:
    left, lorder = _parse_factor(args.left, args.cutoff)
    right, rorder = _parse_factor(args.right, args.cutoff)
    comp = compose_mod.compose(left, right, _fraction(args.pi), lorder, rorder)
    fit = compose_mod.fit_order(comp)
    report = VerificationReport()
    report.add("bracket fit residual", fit.residual, args.tol)
    report.add(
        "degree <= m+n+1", 0.0 if fit.degree <= lorder + rorder + 1 else 1.0, 0.5
    )
    results = {
        "subspace_dim": comp.product_rep.dim,
        "fitted_degree": fit.degree,
        "fitted_coefficients": fit.coeffs.tolist(),
        "representation": _rep_payload(comp.product_rep),
    }
    doc = _document("compose", vars(args), results, report)
    _emit(doc, args.format)
    return _exit_code(doc)


def cmd_map_conjugate(args) -> int:
    cls, label = _parse_quad_label(args)
    rep = quadratic.build(cls, label, cutoff=args.cutoff)
    f = quadratic.structure_polynomial(cls, label)
    res = coherent.canonical_conjugate(rep, f, tol=args.tol)
    results = {"alpha": res.constant, "matrix": _serialize_matrix(res.matrix)}
    doc = _document("map conjugate", vars(args), results, res.report)
    _emit(doc, args.format)
    return _exit_code(doc)


def cmd_map_deform(args) -> int:
    cls, label = _parse_quad_label(args)
    rep = quadratic.build(cls, label, cutoff=args.cutoff)
    f = quadratic.structure_polynomial(cls, label)
    eps = float(args.epsilon) if args.epsilon is not None else None
    res = coherent.deformation_map(rep, f, lam=args.lam, epsilon=eps, tol=args.tol)
    results = {"epsilon": res.constant, "matrix": _serialize_matrix(res.matrix)}
    doc = _document("map deform", vars(args), results, res.report)
    _emit(doc, args.format)
    return _exit_code(doc)


def cmd_app_degeneracy(args) -> int:
    ns = range(args.n + 1) if args.sweep else [args.n]
    rows = []
    report = VerificationReport()
    worst = 0.0
    for n in ns:
        d = apps.aniso_degeneracy(n)
        rows.append(
            [d.N, d.ordered_count, d.closed_form_ordered, d.unordered_count,
             d.closed_form_unordered, d.census_ordered]
        )
        worst = max(worst, 0.0 if d.all_match else 1.0)
    report.add("brute force == closed forms == census", worst, 0.5)
    results = {
        "rows": rows,
        "columns": ["N", "ordered", "closed_form_ordered", "unordered",
                    "closed_form_unordered", "census_ordered"],
    }
    if args.figure:
        from . import plotting

        ns_list = [r[0] for r in rows]
        plotting.render_degeneracy(ns_list, [r[1] for r in rows], [r[3] for r in rows], args.figure)
        results["figure"] = args.figure
    doc = _document("app degeneracy", vars(args), results, report)
    _emit(doc, args.format, csv_rows=rows, csv_header=results["columns"])
    return _exit_code(doc)


def cmd_app_dicke(args) -> int:
    spectrum, report = apps.dicke_spectrum(
        _fraction(args.j), _fraction(args.lmax), args.omega, args.kappa, tol=args.tol
    )
    rows = [[str(label), e] for label, e in spectrum.as_rows()]
    results = {
        "blocks": [str(b) for b in spectrum.block_labels],
        "eigenvalues": [list(map(float, e)) for e in spectrum.eigenvalues],
        "offsets": spectrum.offsets,
    }
    if args.figure:
        from . import plotting

        plotting.render_block_spectrum(
            spectrum.block_labels, spectrum.eigenvalues, args.figure,
            title=f"Tavis-Cummings blocks, j={args.j}",
        )
        results["figure"] = args.figure
    doc = _document("app dicke", vars(args), results, report)
    _emit(doc, args.format, csv_rows=rows, csv_header=["block_l", "eigenvalue"])
    return _exit_code(doc)


def cmd_app_trilinear(args) -> int:
    spectrum, report = apps.trilinear_spectrum(
        args.epsilon, args.omega_a, complex(args.kappa_re, args.kappa_im), tol=args.tol
    )
    rows = [[str(label), e] for label, e in spectrum.as_rows()]
    results = {
        "blocks": [str(b) for b in spectrum.block_labels],
        "eigenvalues": [list(map(float, e)) for e in spectrum.eigenvalues],
    }
    if args.figure:
        from . import plotting

        plotting.render_block_spectrum(
            spectrum.block_labels, spectrum.eigenvalues, args.figure,
            title=f"trilinear block, epsilon={args.epsilon}",
        )
        results["figure"] = args.figure
    doc = _document("app trilinear", vars(args), results, report)
    _emit(doc, args.format, csv_rows=rows, csv_header=["block_epsilon", "eigenvalue"])
    return _exit_code(doc)


def cmd_app_calogero(args) -> int:
    report = apps.calogero_cubic(_fraction(args.j), tol=args.tol)
    doc = _document("app calogero", vars(args), {}, report)
    _emit(doc, args.format)
    return _exit_code(doc)


def cmd_app_hahn(args) -> int:
    if args.source == "calogero":
        report = apps.hahn_invariants("calogero", j=_fraction(args.j), tol=args.tol)
    else:
        report = apps.hahn_invariants(
            "singular_oscillator",
            k1=_fraction(args.k1),
            k2=_fraction(args.k2),
            k=_fraction(args.k),
            tol=args.tol,
        )
    doc = _document("app hahn", vars(args), {}, report)
    _emit(doc, args.format)
    return _exit_code(doc)


def cmd_app_qes(args) -> int:
    pot = apps.qes_potential(_fraction(args.k), _fraction(args.k1), args.w)
    results = {
        "constant": pot.constant,
        "x2_coefficient": pot.x2_coefficient,
        "inv_x2_coefficient": pot.inv_x2_coefficient,
        "gauge_linear": pot.gauge_linear,
        "gauge_inverse": pot.gauge_inverse,
        "printed_pair_consistent": pot.consistent,
    }
    doc = _document("app qes", vars(args), results, [])
    _emit(doc, args.format)
    return 0


# -- argument plumbing --------------------------------------------------------

def _apply_config(argv):
    """Expand --config FILE into KEY=VALUE defaults (leading arguments win)."""
    if "--config" not in argv:
        return argv, {}
    idx = argv.index("--config")
    path = argv[idx + 1]
    rest = argv[:idx] + argv[idx + 2 :]
    defaults = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            defaults[key.strip()] = value.strip()
    return rest, defaults


def _add_common(p, tol_default=1e-10):
    p.add_argument("--tol", type=float, default=tol_default)
    p.add_argument("--format", choices=["json", "csv"], default="json")


def _add_labels(p):
    p.add_argument("--class", dest="klass", required=True)
    for name in ("j", "l", "k", "k1", "k2", "j1", "j2"):
        p.add_argument(f"--{name}")
    p.add_argument("--cutoff", type=int)
    p.add_argument("--mu", type=float, default=1.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyalg",
        description="deformed su(2)/su(1,1) ladder algebras: representations, "
        "oracles, coherent states, applications",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    rep = sub.add_parser("rep").add_subparsers(dest="action", required=True)
    p = rep.add_parser("build")
    _add_labels(p)
    _add_common(p)
    p.set_defaults(func=cmd_rep_build)
    p = rep.add_parser("verify")
    _add_labels(p)
    _add_common(p)
    p.add_argument("--from-file")
    # --class not required when reading from file
    for action in p._actions:
        if action.dest == "klass":
            action.required = False
    p.set_defaults(func=cmd_rep_verify)

    oracle = sub.add_parser("oracle").add_subparsers(dest="action", required=True)
    p = oracle.add_parser("compare")
    _add_labels(p)
    _add_common(p)
    p.add_argument("--five-mode", action="store_true")
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("casimir")
    _add_labels(p)
    _add_common(p)
    p.set_defaults(func=cmd_casimir)

    cs = sub.add_parser("cs").add_subparsers(dest="action", required=True)
    p = cs.add_parser("bg")
    _add_labels(p)
    _add_common(p, tol_default=1e-12)
    p.add_argument("--alpha-re", type=float, default=1.0)
    p.add_argument("--alpha-im", type=float, default=0.0)
    p.set_defaults(func=cmd_cs_bg)
    p = cs.add_parser("perelomov")
    _add_labels(p)
    _add_common(p)
    p.add_argument("--gamma-re", type=float, default=1.0)
    p.add_argument("--gamma-im", type=float, default=0.0)
    p.set_defaults(func=cmd_cs_perelomov)
    p = cs.add_parser("identity-check")
    p.add_argument("--k", required=True)
    p.add_argument("--l", required=True)
    p.add_argument("--points", type=int, default=400)
    _add_common(p, tol_default=1e-6)
    p.set_defaults(func=cmd_cs_identity)

    p = sub.add_parser("compose")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--cutoff", type=int, default=24)
    _add_common(p, tol_default=1e-9)
    p.set_defaults(func=cmd_compose)

    mp = sub.add_parser("map").add_subparsers(dest="action", required=True)
    p = mp.add_parser("conjugate")
    _add_labels(p)
    _add_common(p)
    p.set_defaults(func=cmd_map_conjugate)
    p = mp.add_parser("deform")
    _add_labels(p)
    _add_common(p)
    p.add_argument("--lam", type=int, choices=[1, -1], default=-1)
    p.add_argument("--epsilon")
    p.set_defaults(func=cmd_map_deform)

    app = sub.add_parser("app").add_subparsers(dest="action", required=True)
    p = app.add_parser("degeneracy")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--figure")
    _add_common(p)
    p.set_defaults(func=cmd_app_degeneracy)
    p = app.add_parser("dicke")
    p.add_argument("--j", required=True)
    p.add_argument("--lmax", required=True)
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--kappa", type=float, default=1.0)
    p.add_argument("--figure")
    _add_common(p, tol_default=1e-9)
    p.set_defaults(func=cmd_app_dicke)
    p = app.add_parser("trilinear")
    p.add_argument("--epsilon", type=int, required=True)
    p.add_argument("--omega-a", type=float, default=1.0)
    p.add_argument("--kappa-re", type=float, default=1.0)
    p.add_argument("--kappa-im", type=float, default=0.0)
    p.add_argument("--figure")
    _add_common(p)
    p.set_defaults(func=cmd_app_trilinear)
    p = app.add_parser("calogero")
    p.add_argument("--j", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_app_calogero)
    p = app.add_parser("hahn")
    p.add_argument("--source", choices=["calogero", "singular"], required=True)
    p.add_argument("--j")
    p.add_argument("--k1")
    p.add_argument("--k2")
    p.add_argument("--k")
    _add_common(p)
    p.set_defaults(func=cmd_app_hahn)
    p = app.add_parser("qes")
    p.add_argument("--k", required=True)
    p.add_argument("--k1", required=True)
    p.add_argument("--w", type=float, default=1.0)
    _add_common(p)
    p.set_defaults(func=cmd_app_qes)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv, defaults = _apply_config(argv)
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    for key, value in defaults.items():
        flag = f"--{key.replace('_', '-')}"
        if flag not in argv:
            argv.extend([flag, value])
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (CliError, LabelError, fock.EmptySubspaceError, fock.ShapeMismatchError,
            coherent.PoleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except coherent.ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
