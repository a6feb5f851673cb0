"""Command line interface producing deterministic text or JSON reports.

Exit codes: 0 on success (all requested verifications pass), 2 when a
verification block fails, 1 on any input error (bad expression, violated
precondition, unknown flag).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from typing import Optional

from .errors import VHodgeError
from .groebner import graded_slice
from .hodge import (
    counterexample_remark_ii,
    hodge_slice,
    verify_242,
    verify_remark_i,
    verify_theorem1,
)
from .milnor import MilnorData, build_milnor, lct, mlct, reduced_bs_roots, spectrum
from .oracles import as_diagonal_spec, bp_candidates, bp_spectrum, bp_v_member
from .polyring import (
    WeightSystem,
    infer_variables,
    monomials_up_to_degree,
    parse_expression,
)
from .vfilt import (
    candidate_grid,
    gr_dim_direct,
    gr_dim_formula,
    hodge_floor,
    jumping_numbers,
    multiplier_ideal,
    v_level,
    v_member,
    v_order,
)

VERSION = "0.1.0"


class UsageError(VHodgeError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we reserve 2
        raise UsageError(message)


def q(x) -> str:
    return str(Fraction(x))


def _fraction(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid rational for {flag}: {text!r}") from exc


# ---------------------------------------------------------------------------
# input assembly
# ---------------------------------------------------------------------------

def _prepare(args) -> tuple[MilnorData, list[str]]:
    if not getattr(args, "f", None):
        raise UsageError("missing required flag -f <expression>")
    if args.vars:
        variables = [v.strip() for v in args.vars.split(",") if v.strip()]
    else:
        variables = infer_variables(args.f)
    if not variables:
        raise UsageError("no variables in the expression; supply --vars")
    f = parse_expression(args.f, variables)
    weights: Optional[WeightSystem] = None
    if args.weights:
        parts = [_fraction(p, "--weights") for p in args.weights.split(",")]
        if len(parts) != len(variables):
            raise UsageError(
                f"{len(parts)} weights supplied for {len(variables)} variables"
            )
        weights = WeightSystem(tuple(parts))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        M = build_milnor(f, weights)
    return M, [str(w.message) for w in caught]


def _max_degree(M: MilnorData, raw: Optional[str], default: Fraction) -> Fraction:
    """Interpret --max-degree: plain degree when all weights are equal
    (divided by the common d), weighted degree otherwise."""
    if raw is None:
        return default
    value = _fraction(raw, "--max-degree")
    w0 = M.weights.weights[0]
    if all(w == w0 for w in M.weights.weights):
        return value * w0
    return value


def _input_block(M: MilnorData, notes: list[str]) -> dict:
    block = {
        "polynomial": str(M.f),
        "variables": list(M.ring.variables),
        "weights": [q(w) for w in M.weights.weights],
    }
    if notes:
        block["warnings"] = notes
    return block


def _invariants_block(M: MilnorData) -> dict:
    sp = spectrum(M)
    return {
        "mu": M.mu,
        "mlct": q(mlct(M)),
        "lct": q(lct(M)),
        "spectrum": [[q(a), m] for a, m in sp.entries],
        "reduced_bs_roots": [q(r) for r in reduced_bs_roots(M)],
        "hodge_floor": hodge_floor(M),
    }


def _report(M: MilnorData, notes: list[str]) -> dict:
    return {
        "version": VERSION,
        "input": _input_block(M, notes),
        "invariants": _invariants_block(M),
        "verifications": [],
    }


# ---------------------------------------------------------------------------
# verification blocks
# ---------------------------------------------------------------------------

def _equality_block(report) -> dict:
    details = {
        "p": report.p,
        "max_degree": q(report.max_degree),
        "modulo_divisor": report.modulo_divisor,
        "degrees_checked": len(report.comparisons),
        "failing_degrees": [q(d) for d in report.failing_degrees],
    }
    return {
        "name": report.name,
        "status": "pass" if report.passed else "fail",
        "details": details,
    }


def _dims_block(M: MilnorData, ceiling: Fraction) -> dict:
    rows = []
    ok = True
    for c in candidate_grid(M, ceiling):
        formula = gr_dim_formula(M, c)
        direct = gr_dim_direct(M, c)
        ok = ok and formula == direct
        rows.append({"alpha": q(c), "formula": formula, "direct": direct})
    return {
        "name": "dims",
        "status": "pass" if ok else "fail",
        "details": {"ceiling": q(ceiling), "candidates": rows},
    }


def _oracle_block(M: MilnorData, degree_cap: int, ceiling: Fraction) -> dict:
    spec = as_diagonal_spec(M.f)
    if spec is None:
        raise UsageError("oracle checks require a diagonal polynomial sum(x_i^a_i)")
    sp_match = spectrum(M) == bp_spectrum(spec)
    mismatches = 0
    checked = 0
    monos = monomials_up_to_degree(M.n, degree_cap)
    for c in bp_candidates(spec, ceiling):
        level = v_level(M, c)
        for m in monos:
            checked += 1
            lhs = level.ideal.contains(M.ring.monomial(m))
            rhs = bp_v_member(spec, m, c)
            if lhs != rhs:
                mismatches += 1
    ok = sp_match and mismatches == 0
    return {
        "name": "oracle",
        "status": "pass" if ok else "fail",
        "details": {
            "exponents": list(spec.exponents),
            "spectrum_match": sp_match,
            "membership_checked": checked,
            "membership_mismatches": mismatches,
        },
    }


def _remark_ii_block() -> dict:
    rep = counterexample_remark_ii()
    return {
        "name": "remark-ii",
        "status": "pass" if rep.passed else "fail",
        "details": {
            "second_derivative_numerator_matches": rep.derivative_matches,
            "x4_in_level3": rep.x4_in_level3,
            "mixed_term_in_level3": rep.mixed_in_level3,
            "witness_in_hodge_slice": rep.derivative_in_hodge_slice,
            "slices_differ_at_plain_degree4": rep.slices_differ_at_degree4,
            "mixed_term_in_level3_plus_divisor": rep.mixed_in_level3_plus_divisor,
        },
    }


def _properties_block(M: MilnorData) -> dict:
    """Monotonicity, derivative shift, and unit transitions on a short grid."""
    ceiling = mlct(M) + 1
    grid = candidate_grid(M, ceiling)
    monotone = True
    shift = True
    unit = True
    for i, c in enumerate(grid):
        level = v_level(M, c)
        if i + 1 < len(grid):
            upper = v_level(M, grid[i + 1])
            monotone = monotone and all(
                level.ideal.contains(g) for _, _, g in upper.generators
            )
        above = v_level(M, c + 1)
        shift = shift and all(
            above.ideal.contains(fi * g)
            for fi in M.partials
            for _, _, g in level.generators
        )
        unit = unit and (
            v_member(M, M.ring.one(), c) == (c <= mlct(M))
        )
    ok = monotone and shift and unit
    return {
        "name": "filtration-properties",
        "status": "pass" if ok else "fail",
        "details": {
            "ceiling": q(ceiling),
            "monotone": monotone,
            "derivative_shift": shift,
            "unit_transitions": unit,
        },
    }


def _is_fermat_cubic(M: MilnorData) -> bool:
    spec = as_diagonal_spec(M.f)
    return (
        spec is not None
        and spec.exponents == (3, 3, 3)
        and all(c == 1 for _, c in M.f.items())
    )


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_invariants(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    return 0, _report(M, notes)


def _cmd_spectrum(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    report = _report(M, notes)
    report["result"] = {"spectrum": report["invariants"]["spectrum"]}
    return 0, report


def _cmd_vfilt_member(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    g = parse_expression(args.g, M.ring.variables)
    alpha = _fraction(args.alpha, "--alpha")
    report = _report(M, notes)
    report["result"] = {
        "element": str(g),
        "alpha": q(alpha),
        "member": v_member(M, g, alpha),
    }
    return 0, report


def _cmd_vfilt_order(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    g = parse_expression(args.g, M.ring.variables)
    ceiling = (
        _fraction(args.ceiling, "--ceiling")
        if args.ceiling
        else Fraction(M.n + 1)
    )
    order = v_order(M, g, ceiling)
    report = _report(M, notes)
    report["result"] = {
        "element": str(g),
        "ceiling": q(ceiling),
        "order": q(order) if order is not None else None,
        "above_ceiling": order is None,
    }
    return 0, report


def _cmd_vfilt_level(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    alpha = _fraction(args.alpha, "--alpha")
    level = v_level(M, alpha)
    report = _report(M, notes)
    report["result"] = {
        "alpha": q(alpha),
        "generator_count": len(level.generators),
        "groebner_basis": [str(g) for g in level.ideal.groebner_basis],
    }
    return 0, report


def _cmd_vfilt_jumping(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    ceiling = (
        _fraction(args.ceiling, "--ceiling") if args.ceiling else Fraction(M.n)
    )
    jumps = jumping_numbers(M, ceiling)
    report = _report(M, notes)
    report["result"] = {
        "ceiling": q(ceiling),
        "jumps": [{"alpha": q(a), "gr_dim": d} for a, d in jumps.entries],
    }
    return 0, report


def _cmd_multiplier(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    alpha = _fraction(args.alpha, "--alpha")
    ideal = multiplier_ideal(M, alpha)
    report = _report(M, notes)
    report["result"] = {
        "alpha": q(alpha),
        "is_unit": ideal.is_unit,
        "groebner_basis": [str(g) for g in ideal.groebner_basis],
    }
    return 0, report


def _cmd_hodge_slice(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    raw = args.degree if args.degree is not None else args.max_degree
    if raw is None:
        raise UsageError("hodge slice needs --degree (or --max-degree)")
    e = _max_degree(M, raw, Fraction(0))
    hs = hodge_slice(M, args.p, e)
    report = _report(M, notes)
    report["result"] = {
        "p": args.p,
        "degree": q(e),
        "dim": hs.slice.dim,
        "ambient_dim": hs.slice.ambient_dim,
        "basis": [str(b) for b in hs.slice.basis_polynomials(M.ring)],
    }
    return 0, report


def _finish_verify(report: dict) -> tuple[int, dict]:
    failed = any(b["status"] != "pass" for b in report["verifications"])
    return (2 if failed else 0), report


def _cmd_verify_theorem1(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    p = args.p if args.p is not None else 2
    e_max = _max_degree(M, args.max_degree, Fraction(p + 2))
    report = _report(M, notes)
    report["verifications"].append(
        _equality_block(verify_theorem1(M, p, e_max))
    )
    return _finish_verify(report)


def _cmd_verify_eq242(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    ps = [args.p] if args.p is not None else [0, 1]
    report = _report(M, notes)
    for p in ps:
        e_max = _max_degree(M, args.max_degree, Fraction(p + 2))
        report["verifications"].append(_equality_block(verify_242(M, p, e_max)))
    return _finish_verify(report)


def _cmd_verify_remark_i(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    p_max = args.p if args.p is not None else 3
    e_max = _max_degree(M, args.max_degree, Fraction(p_max + 2))
    report = _report(M, notes)
    for rep in verify_remark_i(M, p_max, e_max):
        report["verifications"].append(_equality_block(rep))
    return _finish_verify(report)


def _cmd_verify_remark_ii(args) -> tuple[int, dict]:
    report = {
        "version": VERSION,
        "input": {
            "polynomial": "x^3 + y^3 + z^3",
            "variables": ["x", "y", "z"],
            "weights": ["1/3", "1/3", "1/3"],
        },
        "invariants": {},
        "verifications": [_remark_ii_block()],
    }
    return _finish_verify(report)


def _cmd_verify_dims(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    ceiling = (
        _fraction(args.ceiling, "--ceiling") if args.ceiling else Fraction(3)
    )
    report = _report(M, notes)
    report["verifications"].append(_dims_block(M, ceiling))
    return _finish_verify(report)


def _cmd_verify_oracle(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    degree_cap = int(args.max_degree) if args.max_degree else 6
    ceiling = (
        _fraction(args.ceiling, "--ceiling") if args.ceiling else Fraction(3)
    )
    report = _report(M, notes)
    report["verifications"].append(_oracle_block(M, degree_cap, ceiling))
    return _finish_verify(report)


def _cmd_verify_all(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    report = _report(M, notes)
    blocks = report["verifications"]
    blocks.append(_dims_block(M, Fraction(3)))
    blocks.append(_properties_block(M))
    for p in (0, 1, 2):
        blocks.append(_equality_block(verify_theorem1(M, p)))
    if M.weights.is_homogeneous:
        try:
            for p in (0, 1):
                blocks.append(_equality_block(verify_242(M, p)))
        except VHodgeError:
            pass  # missing pure powers: strict equality not asserted
    if all(w == Fraction(1, 2) for w in M.weights.weights):
        for rep in verify_remark_i(M):
            blocks.append(_equality_block(rep))
    if as_diagonal_spec(M.f) is not None:
        blocks.append(_oracle_block(M, 6, Fraction(3)))
    if _is_fermat_cubic(M):
        blocks.append(_remark_ii_block())
    return _finish_verify(report)


def _cmd_oracle_spectrum(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    spec = as_diagonal_spec(M.f)
    if spec is None:
        raise UsageError("oracle commands require a diagonal polynomial")
    report = _report(M, notes)
    report["result"] = {
        "exponents": list(spec.exponents),
        "spectrum": [[q(a), m] for a, m in bp_spectrum(spec).entries],
    }
    return 0, report


def _cmd_oracle_member(args) -> tuple[int, dict]:
    M, notes = _prepare(args)
    spec = as_diagonal_spec(M.f)
    if spec is None:
        raise UsageError("oracle commands require a diagonal polynomial")
    g = parse_expression(args.g, M.ring.variables)
    if len(g) != 1:
        raise UsageError("oracle member expects a single monomial for -g")
    (mono, _), = g.items()
    alpha = _fraction(args.alpha, "--alpha")
    report = _report(M, notes)
    report["result"] = {
        "element": str(g),
        "alpha": q(alpha),
        "member": bp_v_member(spec, mono, alpha),
    }
    return 0, report


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _render_text(report: dict) -> str:
    lines = [f"vhodge {report['version']}"]
    inp = report.get("input", {})
    if inp:
        lines.append(f"f = {inp['polynomial']}")
        lines.append("variables: " + ", ".join(inp["variables"]))
        lines.append("weights: " + ", ".join(inp["weights"]))
        for note in inp.get("warnings", []):
            lines.append(f"warning: {note}")
    inv = report.get("invariants", {})
    if inv:
        lines.append(f"mu = {inv['mu']}")
        lines.append(f"mlct = {inv['mlct']}")
        lines.append(f"lct = {inv['lct']}")
        lines.append(
            "spectrum: " + ", ".join(f"{a}:{m}" for a, m in inv["spectrum"])
        )
        lines.append("reduced BS roots: " + ", ".join(inv["reduced_bs_roots"]))
        lines.append(f"hodge floor = {inv['hodge_floor']}")
    result = report.get("result")
    if result is not None:
        lines.append("result:")
        for key, value in result.items():
            if isinstance(value, list):
                if value and not isinstance(value[0], (list, dict)):
                    lines.append(f"  {key}: " + ", ".join(str(v) for v in value))
                else:
                    lines.append(f"  {key}:")
                    for v in value:
                        lines.append(f"    {v}")
            else:
                lines.append(f"  {key}: {value}")
    for block in report.get("verifications", []):
        status = block["status"].upper()
        lines.append(f"{block['name']}: {status}")
        for key, value in block["details"].items():
            if isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append(f"  {key}:")
                for v in value:
                    lines.append(
                        "    " + ", ".join(f"{k}={x}" for k, x in v.items())
                    )
            else:
                lines.append(f"  {key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(_render_text(report))


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_common(p: _Parser, need_g: bool = False):
    p.add_argument("-f", help="polynomial expression")
    p.add_argument("--vars", help="comma separated variable names")
    p.add_argument("--weights", help="comma separated positive rationals")
    p.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    if need_g:
        p.add_argument("-g", required=True, help="query polynomial")


def build_parser() -> _Parser:
    parser = _Parser(prog="vhodge", description=__doc__)
    parser.add_argument("--version", action="version", version=VERSION)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("invariants", help="mu, mlct, lct, spectrum, floor")
    _add_common(p)
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser("spectrum", help="singularity spectrum")
    _add_common(p)
    p.set_defaults(handler=_cmd_spectrum)

    vf = sub.add_parser("vfilt", help="filtration queries")
    vf_sub = vf.add_subparsers(dest="subcommand", parser_class=_Parser)
    p = vf_sub.add_parser("member", help="ideal membership at a level")
    _add_common(p, need_g=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(handler=_cmd_vfilt_member)
    p = vf_sub.add_parser("order", help="largest level containing an element")
    _add_common(p, need_g=True)
    p.add_argument("--ceiling")
    p.set_defaults(handler=_cmd_vfilt_order)
    p = vf_sub.add_parser("level", help="generators and basis of one level")
    _add_common(p)
    p.add_argument("--alpha", required=True)
    p.set_defaults(handler=_cmd_vfilt_level)
    p = vf_sub.add_parser("jumping", help="jumping numbers up to a ceiling")
    _add_common(p)
    p.add_argument("--ceiling")
    p.set_defaults(handler=_cmd_vfilt_jumping)

    p = sub.add_parser("multiplier", help="multiplier ideal below 1")
    _add_common(p)
    p.add_argument("--alpha", required=True)
    p.set_defaults(handler=_cmd_multiplier)

    hg = sub.add_parser("hodge", help="Hodge ideal slices")
    hg_sub = hg.add_subparsers(dest="subcommand", parser_class=_Parser)
    p = hg_sub.add_parser("slice", help="one graded slice of a Hodge ideal")
    _add_common(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--degree", help="slice degree (plain if weights equal)")
    p.add_argument("--max-degree", dest="max_degree")
    p.set_defaults(handler=_cmd_hodge_slice)

    vr = sub.add_parser("verify", help="equality and consistency verifiers")
    vr_sub = vr.add_subparsers(dest="subcommand", parser_class=_Parser)

    p = vr_sub.add_parser("theorem1", help="Hodge = level modulo (f), degreewise")
    _add_common(p)
    p.add_argument("--p", type=int)
    p.add_argument("--max-degree", dest="max_degree")
    p.set_defaults(handler=_cmd_verify_theorem1)

    p = vr_sub.add_parser("eq242", help="strict equality for p=0,1 (homogeneous)")
    _add_common(p)
    p.add_argument("--p", type=int, choices=(0, 1))
    p.add_argument("--max-degree", dest="max_degree")
    p.set_defaults(handler=_cmd_verify_eq242)

    p = vr_sub.add_parser("remark-i", help="strict equality for quadrics, p<=3")
    _add_common(p)
    p.add_argument("--p", type=int)
    p.add_argument("--max-degree", dest="max_degree")
    p.set_defaults(handler=_cmd_verify_remark_i)

    p = vr_sub.add_parser("remark-ii", help="Fermat cubic p=2 counterexample")
    p.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    p.set_defaults(handler=_cmd_verify_remark_ii)

    p = vr_sub.add_parser("dims", help="graded dimensions by two routes")
    _add_common(p)
    p.add_argument("--ceiling")
    p.set_defaults(handler=_cmd_verify_dims)

    p = vr_sub.add_parser("oracle", help="diagonal oracle agreement")
    _add_common(p)
    p.add_argument("--max-degree", dest="max_degree")
    p.add_argument("--ceiling")
    p.set_defaults(handler=_cmd_verify_oracle)

    p = vr_sub.add_parser("all", help="every verifier applicable to the input")
    _add_common(p)
    p.set_defaults(handler=_cmd_verify_all)

    orc = sub.add_parser("oracle", help="diagonal combinatorial oracles")
    orc_sub = orc.add_subparsers(dest="subcommand", parser_class=_Parser)
    p = orc_sub.add_parser("spectrum", help="box-enumerated spectrum")
    _add_common(p)
    p.set_defaults(handler=_cmd_oracle_spectrum)
    p = orc_sub.add_parser("member", help="monomial membership by divisibility")
    _add_common(p, need_g=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(handler=_cmd_oracle_member)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = getattr(args, "handler", None)
        if handler is None:
            raise UsageError("missing subcommand (try --help)")
        code, report = handler(args)
        _emit(report, getattr(args, "format", "text"))
        return code
    except VHodgeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
