"""Command line front end.

Every subcommand prints a deterministic JSON document on stdout (or a
human-readable rendering with --pretty) and exits 0 on success, 1 when a
verification report fails, 2 on malformed input.  Matrix, factor-set and
flux arguments accept a file path, '-' for stdin, or an inline JSON string.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .errors import GcaError, UnsupportedTransform
from .lmatrix import LSpec, diagonalize_l, family_rep, l_matrix, nth_power_check
from .matrices import DEFAULT_TOL, MonomialMatrix, max_abs_diff
from .phase import Phase
from .phasespace import (
    CanonicalParams,
    MagneticLattice,
    WignerTable,
    bloch_phase,
    canonical_intertwiner,
    canonical_pair,
    diagonal_slice_decomposition,
    magnetic_translation_rep,
    schwinger_coeffs,
    schwinger_reconstruct,
    wigner_forward,
    wigner_inverse,
)
from .repbuilder import (
    CATALOG_NAMES,
    GcaSpec,
    build_representation,
    catalog,
    clifford_generators,
    ordered_gca_generators,
    projective_rep,
    verify_relations,
)
from .serialize import (
    doc_to_factor_set,
    doc_to_flux,
    doc_to_matrix,
    emit_json,
    matrix_to_doc,
)
from .skewnormal import skew_normal_form, validate_tmatrix, verify_congruence

__all__ = ["run", "main"]


# ---------------------------------------------------------------------------
# argument helpers

def _read_json_arg(arg: str):
    if arg == "-":
        return json.loads(sys.stdin.read())
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return json.load(fh)
    stripped = arg.lstrip()
    if stripped[:1] in "[{":
        return json.loads(arg)
    raise ValueError(f"no such file and not inline JSON: {arg!r}")


def _int_matrix(doc) -> list[list[int]]:
    if not isinstance(doc, list) or not doc:
        raise ValueError("integer matrix must be a nonempty list of rows")
    rows = []
    for row in doc:
        if not isinstance(row, list):
            raise ValueError("integer matrix rows must be lists")
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValueError(f"matrix entries must be integers, got {x!r}")
        rows.append([int(x) for x in row])
    return rows


def _int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"{what} must be comma-separated integers: {text!r}") from exc


def _float_list(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"{what} must be comma-separated numbers: {text!r}") from exc


def _any_matrix(arg: str):
    """A matrix document, or a bare JSON array of (possibly complex-pair) rows."""
    doc = _read_json_arg(arg)
    if isinstance(doc, dict):
        return doc_to_matrix(doc)
    if isinstance(doc, list):
        arr = np.asarray(doc)
        if arr.ndim != 2:
            raise ValueError(f"bare matrix must be 2d, got shape {arr.shape}")
        return arr.astype(complex)
    raise ValueError("matrix argument must be an object or an array")


# ---------------------------------------------------------------------------
# pretty rendering

def _c_str(z: complex) -> str:
    re, im = z.real, z.imag
    if abs(im) < 5e-13 and abs(re) < 5e-13:
        return "0"
    if abs(im) < 5e-13:
        return f"{re:.6g}"
    if abs(re) < 5e-13:
        return f"{im:.6g}i"
    return f"{re:.6g}{im:+.6g}i"


def _grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
    )


def _pretty_matrix(m) -> str:
    if isinstance(m, MonomialMatrix):
        cells = [["." for _ in range(m.dim)] for _ in range(m.dim)]
        for c in range(m.dim):
            cells[m.target[c]][c] = str(m.phase[c])
        return _grid(cells)
    arr = np.asarray(m)
    return _grid([[_c_str(complex(z)) for z in row] for row in arr])


def _pretty_int_matrix(rows) -> str:
    return _grid([[str(x) for x in row] for row in rows])


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (text, exit_code)

def _cmd_snf(args):
    raw = _int_matrix(_read_json_arg(args.tmatrix))
    t = validate_tmatrix(raw, args.nhat)
    f = skew_normal_form(t)
    report = verify_congruence(t, f)
    doc = {
        "nhat": t.nhat,
        "n": t.n,
        "s": f.s,
        "t_inv": list(f.t_inv),
        "u": [list(row) for row in f.u],
        "tcal": [list(row) for row in f.tcal()],
        "verify": report.to_dict(),
    }
    if args.pretty:
        text = (
            f"n = {t.n}, nhat = {t.nhat}, blocks s = {f.s}, t_inv = {list(f.t_inv)}\n"
            f"u =\n{_pretty_int_matrix(f.u)}\n"
            f"u t u^T mod nhat =\n{_pretty_int_matrix(f.tcal())}\n{report}\n"
        )
    else:
        text = emit_json(doc)
    return text, 0 if report.overall else 1


def _rep_doc(rep, report):
    return {
        "nhat": rep.spec.nhat,
        "orders": list(rep.spec.orders),
        "dim": rep.dim,
        "mu": [{"num": p.num, "den": p.den} for p in rep.mu],
        "gens": [matrix_to_doc(g) for g in rep.gens],
        "verify": report.to_dict(),
    }


def _rep_text(rep, report, pretty: bool):
    if not pretty:
        return emit_json(_rep_doc(rep, report))
    lines = [f"dim = {rep.dim}, nhat = {rep.spec.nhat}, orders = {list(rep.spec.orders)}"]
    for j, g in enumerate(rep.gens):
        lines.append(f"e_{j + 1} (mu = {rep.mu[j]}):")
        lines.append(_pretty_matrix(g))
    lines.append(str(report))
    return "\n".join(lines) + "\n"


def _cmd_rep(args):
    raw = _int_matrix(_read_json_arg(args.tmatrix))
    t = validate_tmatrix(raw, args.nhat)
    orders = _int_list(args.orders, "--orders") if args.orders else (t.nhat,) * t.n
    rep = build_representation(GcaSpec(t, orders))
    report = verify_relations(rep.gens, rep.spec.t, rep.spec.orders)
    return _rep_text(rep, report, args.pretty), 0 if report.overall else 1


def _cmd_clifford(args):
    rep = clifford_generators(args.n)
    report = verify_relations(rep.gens, rep.spec.t, rep.spec.orders)
    return _rep_text(rep, report, args.pretty), 0 if report.overall else 1


def _cmd_ordered(args):
    rep = ordered_gca_generators(args.n, args.order)
    report = verify_relations(rep.gens, rep.spec.t, rep.spec.orders)
    return _rep_text(rep, report, args.pretty), 0 if report.overall else 1


def _cmd_projrep(args):
    fs = doc_to_factor_set(_read_json_arg(args.factorset))
    pr = projective_rep(fs)
    doc = {
        "orders": list(pr.orders),
        "dim": pr.dim,
        "commutators": [
            [{"num": p.num, "den": p.den} for p in row] for row in pr.commutators
        ],
        "elements": [
            {
                "g": list(g),
                "phi": {"num": pr.phi_coeffs[g].num, "den": pr.phi_coeffs[g].den},
                "matrix": matrix_to_doc(pr.dmap[g]),
            }
            for g in sorted(pr.dmap)
        ],
    }
    if args.pretty:
        lines = [f"orders = {list(pr.orders)}, dim = {pr.dim}"]
        for g in sorted(pr.dmap):
            lines.append(f"D{tuple(g)}  (word coefficient {pr.phi_coeffs[g]}):")
            lines.append(_pretty_matrix(pr.dmap[g]))
        text = "\n".join(lines) + "\n"
    else:
        text = emit_json(doc)
    return text, 0


def _cmd_lmat(args):
    lam = _float_list(args.lam, "--lam")
    rep = family_rep(len(lam), args.order)
    spec = LSpec(lam, rep)
    power = nth_power_check(spec, tol=args.tol)
    doc = {
        "order": power.order,
        "dim": rep.dim,
        "l": matrix_to_doc(l_matrix(spec)),
        "power_scalar": {"re": power.scalar.real, "im": power.scalar.imag},
        "power_deviation": power.deviation,
        "power_passed": power.passed,
    }
    if args.pretty:
        text = (
            f"L on the order-{power.order} family, dim {rep.dim}:\n"
            f"{_pretty_matrix(l_matrix(spec))}\n"
            f"L^{power.order} = {_c_str(power.scalar)} * 1, deviation "
            f"{power.deviation:.3e}, {'ok' if power.passed else 'FAIL'}\n"
        )
    else:
        text = emit_json(doc)
    return text, 0 if power.passed else 1


def _cmd_ldiag(args):
    lam = _float_list(args.lam, "--lam")
    spec = LSpec(lam, family_rep(len(lam), 2))
    res = diagonalize_l(spec, tol=args.tol)
    doc = {
        "axis": res.axis,
        "big_lambda": res.big_lambda,
        "used_fallback": res.used_fallback,
        "eig": [float(x) for x in res.eig],
        "u": matrix_to_doc(res.u),
    }
    if args.pretty:
        text = (
            f"Lambda = {res.big_lambda:.12g}, axis = e_{res.axis + 1}, "
            f"fallback = {res.used_fallback}\n"
            f"eigenvalues: {[round(float(x), 12) for x in res.eig]}\n"
            f"u =\n{_pretty_matrix(res.u)}\n"
        )
    else:
        text = emit_json(doc)
    return text, 0


def _cmd_decompose(args):
    m = _any_matrix(args.matrix)
    sc = schwinger_coeffs(m)
    alt = diagonal_slice_decomposition(m)
    cross = max_abs_diff(sc.coeffs, alt.coeffs)
    recon = max_abs_diff(schwinger_reconstruct(sc), m)
    scale = 1.0 + float(np.max(np.abs(np.asarray(sc.coeffs))))
    passed = cross <= args.tol * scale and recon <= args.tol * scale
    doc = {
        "order": sc.order,
        "coeffs": matrix_to_doc(sc.coeffs),
        "cross_check_deviation": float(cross),
        "reconstruction_deviation": float(recon),
        "passed": passed,
    }
    if args.pretty:
        text = (
            f"coefficients over A^k B^l (rows k, cols l), order {sc.order}:\n"
            f"{_pretty_matrix(sc.coeffs)}\n"
            f"slice cross-check deviation {cross:.3e}, reconstruction "
            f"deviation {recon:.3e}, {'ok' if passed else 'FAIL'}\n"
        )
    else:
        text = emit_json(doc)
    return text, 0 if passed else 1


def _cmd_wigner(args):
    m = _any_matrix(args.matrix)
    dense = m.to_dense() if isinstance(m, MonomialMatrix) else np.asarray(m, dtype=complex)
    if args.direction == "fwd":
        d = dense.shape[0]
        if dense.ndim != 2 or dense.shape != (d, d):
            raise ValueError(f"table must be square, got shape {dense.shape}")
        if d % 2 == 0:
            raise ValueError(f"table dimension must be odd, got {d}")
        table = WignerTable(nu=(d - 1) // 2, w=dense)
        h = wigner_forward(table)
        doc = {"nu": table.nu, "operator": matrix_to_doc(h)}
        pretty = f"operator for the table (nu = {table.nu}):\n{_pretty_matrix(h)}\n"
    else:
        table = wigner_inverse(dense, tol=args.tol)
        doc = {"nu": table.nu, "table": matrix_to_doc(table.w)}
        pretty = f"table for the operator (nu = {table.nu}):\n{_pretty_matrix(table.w)}\n"
    return (pretty if args.pretty else emit_json(doc)), 0


def _cmd_canonical(args):
    p = CanonicalParams(k=args.k, l=args.l, m=args.m, n=args.n, order=args.order)
    ap, bp = canonical_pair(p)
    res = canonical_intertwiner(p, tol=args.tol)
    doc = {
        "params": {"k": p.k, "l": p.l, "m": p.m, "n": p.n, "order": p.order},
        "a_prime": matrix_to_doc(ap),
        "b_prime": matrix_to_doc(bp),
        "s": matrix_to_doc(res.s),
        "zeta_a": {"re": res.zeta_a.real, "im": res.zeta_a.imag},
        "zeta_b": {"re": res.zeta_b.real, "im": res.zeta_b.imag},
        "verify": res.report.to_dict(),
    }
    if args.pretty:
        text = (
            f"A' =\n{_pretty_matrix(ap)}\nB' =\n{_pretty_matrix(bp)}\n"
            f"S =\n{_pretty_matrix(res.s)}\n"
            f"zeta_a = {_c_str(res.zeta_a)}, zeta_b = {_c_str(res.zeta_b)}\n"
            f"{res.report}\n"
        )
    else:
        text = emit_json(doc)
    return text, 0


def _cmd_magnetic(args):
    lat = doc_to_flux(_read_json_arg(args.flux))
    mag = magnetic_translation_rep(lat)
    doc = {
        "nhat": mag.nhat,
        "dim": mag.rep.dim,
        "gens": [matrix_to_doc(g) for g in mag.rep.gens],
    }
    lines = [f"nhat = {mag.nhat}, dim = {mag.rep.dim}"]
    if args.steps:
        steps = _int_list(args.steps, "--steps")
        if len(steps) != 3:
            raise ValueError("--steps takes exactly three integers")
        ph = bloch_phase(lat, steps)
        doc["bloch"] = {"num": ph.num, "den": ph.den}
        lines.append(f"loop phase for steps {list(steps)}: {ph}")
    if args.pretty:
        for j, g in enumerate(mag.rep.gens):
            lines.append(f"tau_{j + 1}:")
            lines.append(_pretty_matrix(g))
        text = "\n".join(lines) + "\n"
    else:
        text = emit_json(doc)
    return text, 0


def _cmd_catalog(args):
    if not args.name:
        return emit_json({"names": list(CATALOG_NAMES)}), 0
    gens = catalog(args.name)
    if args.pretty:
        lines = []
        for label, m in gens.items():
            lines.append(f"{label}:")
            lines.append(_pretty_matrix(m))
        return "\n".join(lines) + "\n", 0
    doc = {"name": args.name, "gens": {label: matrix_to_doc(m) for label, m in gens.items()}}
    return emit_json(doc), 0


def _cmd_verify(args):
    doc = _read_json_arg(args.document)
    if not isinstance(doc, dict):
        raise ValueError("verify takes an object document")
    nhat = doc.get("nhat")
    if isinstance(nhat, bool) or not isinstance(nhat, int):
        raise ValueError("document field 'nhat' must be an integer")
    t = validate_tmatrix(_int_matrix(doc.get("t")), nhat)
    orders_field = doc.get("orders")
    if orders_field is None:
        orders = (nhat,) * t.n
    else:
        if not isinstance(orders_field, list):
            raise ValueError("document field 'orders' must be a list")
        orders = tuple(int(x) for x in orders_field)
    gens_field = doc.get("gens")
    if not isinstance(gens_field, list):
        raise ValueError("document field 'gens' must be a list of matrix documents")
    gens = [doc_to_matrix(g) for g in gens_field]
    report = verify_relations(gens, t, orders, tol=args.tol)
    text = (str(report) + "\n") if args.pretty else emit_json(report.to_dict())
    return text, 0 if report.overall else 1


def _cmd_selftest(args):
    rng = np.random.default_rng(args.seed)
    lines = []
    ok_all = True

    def record(name: str, ok: bool, detail: str = ""):
        nonlocal ok_all
        ok_all = ok_all and ok
        lines.append(f"[{'ok' if ok else 'BAD'}] {name}" + (f"  {detail}" if detail else ""))

    rep = clifford_generators(5)
    record("anticommuting family n=5", verify_relations(rep.gens, rep.spec.t, rep.spec.orders).overall)
    rep = ordered_gca_generators(4, 3)
    record("order-3 family n=4", verify_relations(rep.gens, rep.spec.t, rep.spec.orders).overall)

    nhat = 6
    raw = [[0] * 5 for _ in range(5)]
    for j in range(5):
        for k in range(j + 1, 5):
            raw[j][k] = int(rng.integers(-nhat, nhat + 1))
            raw[k][j] = -raw[j][k]
    t = validate_tmatrix(raw, nhat)
    record("random skew normal form", verify_congruence(t, skew_normal_form(t)).overall)

    m = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    sc = schwinger_coeffs(m)
    dev = max_abs_diff(schwinger_reconstruct(sc), m)
    record("word expansion round trip", dev <= args.tol * 100, f"deviation {dev:.3e}")

    w = rng.normal(size=(5, 5))
    table = WignerTable(nu=2, w=w)
    back = wigner_inverse(wigner_forward(table), tol=args.tol * 100)
    dev = max_abs_diff(back.w, w)
    record("phase-space round trip", dev <= args.tol * 100, f"deviation {dev:.3e}")

    try:
        res = canonical_intertwiner(CanonicalParams(k=0, l=1, m=1, n=0, order=2))
        record("canonical pair swap at order 2", res.report.overall)
    except UnsupportedTransform:
        record("canonical pair swap at order 2", False, "unsupported")

    mag = magnetic_translation_rep(MagneticLattice(0, 0, (1, 3)))
    record("magnetic translations, flux 1/3", mag.nhat == 3 and mag.rep.dim == 3)

    lines.append(f"overall: {'pass' if ok_all else 'FAIL'}")
    return "\n".join(lines) + "\n", 0 if ok_all else 1


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcakit",
        description="construct and check generalized Clifford algebra representations",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol",
        type=float,
        default=None,
        help="numeric tolerance (default: GCAKIT_TOL env or 1e-10)",
    )
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--out", help="write the output to this file instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", parents=[common], help="skew normal form of an integer matrix")
    p.add_argument("tmatrix", help="antisymmetric integer matrix (file, '-', or inline JSON)")
    p.add_argument("--nhat", type=int, required=True, help="phase modulus")
    p.set_defaults(func=_cmd_snf)

    p = sub.add_parser("rep", parents=[common], help="build generators for commutation data")
    p.add_argument("tmatrix", help="antisymmetric integer matrix (file, '-', or inline JSON)")
    p.add_argument("--nhat", type=int, required=True, help="phase modulus")
    p.add_argument("--orders", help="comma-separated generator orders (default: all nhat)")
    p.set_defaults(func=_cmd_rep)

    p = sub.add_parser("clifford", parents=[common], help="standard anticommuting family")
    p.add_argument("n", type=int, help="number of generators")
    p.set_defaults(func=_cmd_clifford)

    p = sub.add_parser("ordered", parents=[common], help="standard order-N family")
    p.add_argument("n", type=int, help="number of generators")
    p.add_argument("order", type=int, help="common generator order N")
    p.set_defaults(func=_cmd_ordered)

    p = sub.add_parser("projrep", parents=[common], help="projective representation from a multiplier table")
    p.add_argument("factorset", help="factor set document (file, '-', or inline JSON)")
    p.set_defaults(func=_cmd_projrep)

    p = sub.add_parser("lmat", parents=[common], help="generator combination and its power law")
    p.add_argument("--lam", required=True, help="comma-separated coefficients")
    p.add_argument("--order", type=int, default=2, help="family order N (default 2)")
    p.set_defaults(func=_cmd_lmat)

    p = sub.add_parser("ldiag", parents=[common], help="diagonalize a combination of anticommuting generators")
    p.add_argument("--lam", required=True, help="comma-separated real coefficients")
    p.set_defaults(func=_cmd_ldiag)

    p = sub.add_parser("decompose", parents=[common], help="expand a matrix over clock/shift words")
    p.add_argument("matrix", help="square matrix (file, '-', or inline JSON)")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("wigner", parents=[common], help="phase-space transform in odd dimension")
    p.add_argument("direction", choices=("fwd", "inv"), help="table to operator, or back")
    p.add_argument("matrix", help="table or operator (file, '-', or inline JSON)")
    p.set_defaults(func=_cmd_wigner)

    p = sub.add_parser("canonical", parents=[common], help="quadratic change of the clock/shift pair")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--order", type=int, required=True, help="pair order N (even)")
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("magnetic", parents=[common], help="magnetic translations for rational flux")
    p.add_argument("flux", help="flux document (file, '-', or inline JSON)")
    p.add_argument("--steps", help="three comma-separated loop windings for the phase")
    p.set_defaults(func=_cmd_magnetic)

    p = sub.add_parser("catalog", parents=[common], help="named small generator sets")
    p.add_argument("name", nargs="?", help=f"one of {', '.join(CATALOG_NAMES)}")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("verify", parents=[common], help="check matrices against commutation data")
    p.add_argument("document", help="object with nhat, t, orders, gens (file, '-', or inline JSON)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("selftest", parents=[common], help="run a quick built-in battery")
    p.add_argument("--seed", type=int, default=0, help="seed for the random cases")
    p.set_defaults(func=_cmd_selftest)

    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.tol is None:
        env = os.environ.get("GCAKIT_TOL")
        try:
            args.tol = float(env) if env is not None else DEFAULT_TOL
        except ValueError:
            print(f"error: GCAKIT_TOL is not a number: {env!r}", file=stderr)
            return 2
    if args.tol <= 0:
        print(f"error: tolerance must be positive, got {args.tol}", file=stderr)
        return 2

    try:
        text, code = args.func(args)
    except UnsupportedTransform as exc:
        report = getattr(exc, "report", None)
        body = (
            f"unsupported transform: {exc}\n"
            if report is None
            else f"unsupported transform\n{report}\n"
        )
        stdout.write(body)
        return 1
    except (GcaError, ValueError, KeyError, TypeError, OSError, ZeroDivisionError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"error: {msg}", file=stderr)
        return 2

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
