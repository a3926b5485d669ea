"""Command-line frontend: validate -> standardize -> extract -> analyze ->
simulate -> bounds.

Exit codes: 0 success, 1 domain failure (invalid code, failed verification,
exhausted search), 2 usage or parse error.  Every command is deterministic
for fixed flags and seed, and mirrors its report as JSON under --json.
"""

from __future__ import annotations

import json
import sys

import click

from . import bounds as bounds_mod
from . import lincode, statevec
from .extraction import extract_classical
from .formats import (
    FormatError,
    load_generator,
    load_stabilizer,
    write_generator_text,
    write_stabilizer_text,
)
from .stabilizer import (
    SearchExhaustedError,
    StabilizerCode,
    ensure_positive_r,
    quantum_distance,
    to_standard_form,
    validate as validate_code,
)


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_stab(path) -> StabilizerCode:
    try:
        return load_stabilizer(path)
    except FormatError as exc:
        _fail(str(exc), 2)


def _load_gen(path) -> lincode.GeneratorMatrix:
    try:
        return load_generator(path)
    except (FormatError, ValueError) as exc:
        _fail(str(exc), 2)


def _emit_json(payload: dict):
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _write_out(text: str, out):
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


@click.group()
def main():
    """Map stabilizer codes to classical binary linear codes and verify the
    claimed error-correcting properties."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="machine-readable report")
def validate(file, as_json):
    """Check commutativity and independence of a stabilizer file."""
    code = _load_stab(file)
    report = validate_code(code)
    payload = {
        "valid": report.ok,
        "n": report.n,
        "m": report.m,
        "k": code.k,
        "rank": report.rank,
        "independent": report.independent,
        "anticommuting_pairs": [[i + 1, j + 1] for i, j in report.anticommuting_pairs],
    }
    if as_json:
        _emit_json(payload)
    elif report.ok:
        click.echo(f"valid stabilizer code: n={report.n} m={report.m} k={code.k}")
    else:
        for i, j in report.anticommuting_pairs:
            click.echo(f"generators {i + 1} and {j + 1} anticommute")
        if not report.independent:
            click.echo(f"generators are dependent (rank {report.rank} < m={report.m})")
    sys.exit(0 if report.ok else 1)


def _standardized(file, ensure_r, depth):
    code = _load_stab(file)
    report = validate_code(code)
    if not report.ok:
        _fail(f"invalid stabilizer code in {file}: "
              f"{len(report.anticommuting_pairs)} anticommuting pair(s), "
              f"rank {report.rank} of {report.m}", 1)
    ops = []
    if ensure_r:
        try:
            result = ensure_positive_r(code, max_depth=depth)
        except SearchExhaustedError as exc:
            _fail(f"ensure-r search exhausted: {exc}", 1)
        code, ops = result.code, result.ops
    return code, to_standard_form(code), ops


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--ensure-r", is_flag=True, help="apply column ops until r >= 1")
@click.option("--depth", default=2, show_default=True, help="ensure-r search depth")
@click.option("-o", "out", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "as_json", is_flag=True)
def standardize(file, ensure_r, depth, out, as_json):
    """Reduce a stabilizer file to standard form."""
    _, sf, ops = _standardized(file, ensure_r, depth)
    std_code = sf.code()
    perm = [int(p) + 1 for p in sf.qubit_permutation]
    if as_json:
        _emit_json(
            {
                "s": sf.s,
                "k": sf.k,
                "r": sf.r,
                "qubit_permutation": perm,
                "generators": std_code.pauli_strings(),
                "ensure_r_ops": [[op.kind, list(op.indices)] for op in ops],
                "trace_length": len(sf.op_trace),
            }
        )
        return
    comments = [
        f"standard form: s={sf.s} k={sf.k} r={sf.r}",
        "qubit_permutation (original position of each standardized column): "
        + " ".join(str(p) for p in perm),
    ]
    if ops:
        comments.append(
            "ensure-r ops: " + "; ".join(f"{op.kind}{op.indices}" for op in ops)
        )
    _write_out(write_stabilizer_text(std_code, comments), out)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--ensure-r", is_flag=True, help="apply column ops until r >= 1")
@click.option("--depth", default=2, show_default=True, help="ensure-r search depth")
@click.option("-o", "out", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "as_json", is_flag=True)
def extract(file, ensure_r, depth, out, as_json):
    """Extract the classical binary linear code of a stabilizer file."""
    _, sf, _ = _standardized(file, ensure_r, depth)
    if sf.k == 0:
        _fail("no encoded qubits, no classical code (k = 0)", 1)
    result = extract_classical(sf, provenance=str(file))
    summary = (
        f"({result.n_classical},{result.k}) classical code; "
        f"theorem form ({result.source_n - 1},{result.k})"
    )
    if result.r_zero_warning:
        click.echo(
            "warning: r = 0, extraction yields an (n, k) code; "
            "rerun with --ensure-r for the (n-1, k) form",
            err=True,
        )
    if as_json:
        _emit_json(
            {
                "n_classical": result.n_classical,
                "k": result.k,
                "r": result.r,
                "parameters": list(result.parameters),
                "theorem_parameters": list(result.theorem_parameters),
                "rows": ["".join(str(int(b)) for b in row) for row in result.generator],
                "r_zero_warning": result.r_zero_warning,
            }
        )
        return
    gm = lincode.GeneratorMatrix(result.generator)
    _write_out(write_generator_text(gm, [f"extracted from {file}", summary]), out)
    if out is not None:
        click.echo(summary)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--quantum", "mode", flag_value="quantum", help="stabilizer-file input")
@click.option("--classical", "mode", flag_value="classical", help="generator-file input")
@click.option("--cap", default=None, type=int, help="weight cap for the quantum search")
@click.option("--json", "as_json", is_flag=True)
def distance(file, mode, cap, as_json):
    """Brute-force code distance and corrected-error count t."""
    if mode is None:
        raise click.UsageError("choose one of --quantum or --classical")
    if mode == "quantum":
        code = _load_stab(file)
        result = quantum_distance(code, weight_cap=cap)
        if as_json:
            _emit_json(
                {
                    "kind": "quantum",
                    "distance": result.value,
                    "t": result.t,
                    "cap": result.cap,
                    "exceeded": result.exceeded,
                }
            )
        elif result.exceeded:
            click.echo(f"distance > {result.cap} (cap exceeded)")
        else:
            click.echo(f"d={result.value} t={result.t}")
        return
    g = _load_gen(file)
    try:
        result = lincode.min_distance(g)
    except ValueError as exc:
        _fail(str(exc), 1)
    t = (result.distance - 1) // 2
    if as_json:
        _emit_json(
            {
                "kind": "classical",
                "distance": result.distance,
                "t": t,
                "weight_enumerator": {str(w): c for w, c in result.weight_enumerator.items()},
            }
        )
    else:
        click.echo(f"d={result.distance} t={t}")


@main.command()
@click.argument("codefile", type=click.Path(exists=True, dir_okay=False))
@click.option("--delta", required=True, type=float, help="bit-flip probability")
@click.option("--trials", default=100_000, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--exact", is_flag=True, help="exact enumeration instead of Monte Carlo")
@click.option("--json", "as_json", is_flag=True)
def simulate(codefile, delta, trials, seed, exact, as_json):
    """Binary-symmetric-channel success probability of a generator-file code."""
    g = _load_gen(codefile)
    try:
        if exact:
            report = lincode.bsc_success_exact(g, delta)
        else:
            report = lincode.bsc_monte_carlo(g, delta, trials, seed)
    except ValueError as exc:
        _fail(str(exc), 1)
    if as_json:
        payload = {
            "delta": report.delta,
            "success_probability": report.success_probability,
            "method": report.method,
        }
        if report.method == "monte-carlo":
            payload.update(
                trials=report.trials,
                seed=report.seed,
                standard_error=report.standard_error,
            )
        _emit_json(payload)
    elif report.method == "monte-carlo":
        click.echo(
            f"success_probability={report.success_probability:.6f} "
            f"(monte-carlo, trials={report.trials}, seed={report.seed}, "
            f"stderr={report.standard_error:.6f})"
        )
    else:
        click.echo(
            f"success_probability={report.success_probability:.12g} (exact-enumeration)"
        )


@main.command(name="verify-phi")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--cap", default=statevec.DEFAULT_STATE_CAP, show_default=True, type=int)
@click.option("--json", "as_json", is_flag=True)
def verify_phi_cmd(file, cap, as_json):
    """Exhaustively verify the classical-to-quantum isomorphism at desk scale."""
    code = _load_stab(file)
    report = validate_code(code)
    if not report.ok:
        pairs = ", ".join(f"({i + 1},{j + 1})" for i, j in report.anticommuting_pairs)
        detail = f"anticommuting pairs: {pairs}" if pairs else f"rank {report.rank} < m"
        _fail(f"invalid stabilizer code, cannot verify phi; {detail}", 1)
    if code.n > cap:
        _fail(
            f"n = {code.n} exceeds the statevector cap {cap}; "
            "raise --cap only if 2^n amplitudes are affordable",
            1,
        )
    sf = to_standard_form(code)
    phi_report = statevec.verify_phi(sf, cap=cap)
    payload = {
        "bijectivity_ok": phi_report.bijectivity_ok,
        "codeword_property_ok": phi_report.codeword_property_ok,
        "error_property_ok": phi_report.error_property_ok,
        "error_property_exact_ok": phi_report.error_property_exact_ok,
        "max_deviation": phi_report.max_deviation,
        "max_deviation_exact": phi_report.max_deviation_exact,
        "images_checked": phi_report.images_checked,
        "pairs_checked": phi_report.pairs_checked,
        "exhaustive": phi_report.exhaustive,
        "counterexamples": phi_report.counterexamples,
    }
    if as_json:
        _emit_json(payload)
    else:
        for name in ("bijectivity_ok", "codeword_property_ok", "error_property_ok"):
            click.echo(f"{name}: {'pass' if payload[name] else 'FAIL'}")
        click.echo(f"max_deviation: {phi_report.max_deviation:.3g}")
        for line in phi_report.counterexamples:
            click.echo(f"counterexample: {line}")
    sys.exit(0 if phi_report.all_ok else 1)


@main.command(name="bounds")
@click.option(
    "--channel",
    type=click.Choice(["adversarial", "depolarizing"]),
    required=True,
)
@click.option("--from", "delta_from", default=0.0, show_default=True, type=float)
@click.option("--to", "delta_to", default=0.25, show_default=True, type=float)
@click.option("--step", default=0.01, show_default=True, type=float)
@click.option("-o", "out", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "as_json", is_flag=True)
def bounds_cmd(channel, delta_from, delta_to, step, out, as_json):
    """Emit capacity-bound curve data as CSV (or JSON records)."""
    try:
        if as_json:
            rows = [
                {
                    "delta": d,
                    "curve": c.name,
                    "kind": c.kind,
                    "raw": c.raw(d),
                    "clamped": c.clamped(d),
                }
                for d in bounds_mod.grid(delta_from, delta_to, step)
                for c in bounds_mod.curves_for(channel)
                if c.applies(d)
            ]
            _emit_json({"channel": channel, "rows": rows})
            return
        csv = bounds_mod.emit_curves(channel, delta_from, delta_to, step)
    except ValueError as exc:
        _fail(str(exc), 2)
    _write_out(csv, out)


if __name__ == "__main__":
    main()
