"""Command-line interface binding the library into reproducible workflows.

All commands are deterministic: fixed orderings, floats printed with 17
significant digits.  Exit codes: 0 success (verify: identities hold),
1 verification failure, 2 malformed input or usage error.
"""

from __future__ import annotations

import functools
import json
import sys

import click
import numpy as np

from . import transform as tf
from .boxspline import build_boxspline_bank, reduce_bank, write_edge_csv
from .cascade import cascade_phi, sample_psi, write_grid_csv
from .filters import load_bank, save_bank
from .haar import build_haar_bank, direction_census, slope_angle_degrees
from .projection import DirectionMatrix, preimage_vertices
from .verify import verify_frequency, verify_tight_bank


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _diagnose(fn):
    """Malformed inputs exit 2 with a one-line diagnostic."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ValueError, ArithmeticError, OSError, KeyError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _load_matrix(path) -> DirectionMatrix:
    with open(path) as fh:
        return DirectionMatrix.from_text(fh.read())


@click.group()
def main():
    """Directional tight framelet filter banks: build, verify, transform."""


@main.command()
@click.option("--dim", type=int, required=True, help="Lattice dimension d >= 1.")
@click.option("--out", "out_path", type=click.Path(), required=True)
@_diagnose
def haar(dim, out_path):
    """Write the d-dimensional directional Haar tight framelet bank."""
    save_bank(build_haar_bank(dim), out_path)
    click.echo(f"wrote haar bank dim={dim} to {out_path}")


@main.command()
@click.option("--matrix", "matrix_path", type=click.Path(exists=True), required=True)
@click.option(
    "--mode",
    type=click.Choice(["projected", "combined"]),
    default="combined",
    show_default=True,
)
@click.option(
    "--reduce",
    "reduce_mode",
    type=click.Choice(["none", "pairs", "full"]),
    default="none",
    show_default=True,
    help="Merge even-shift-equivalent high-pass filters.",
)
@click.option("--out", "out_path", type=click.Path(), required=True)
@_diagnose
def boxspline(matrix_path, mode, reduce_mode, out_path):
    """Build the box-spline tight framelet bank of a direction matrix."""
    bank = build_boxspline_bank(_load_matrix(matrix_path), mode)
    if reduce_mode != "none":
        bank = reduce_bank(
            bank,
            "equal_weight_pairs" if reduce_mode == "pairs" else "full_class",
        )
    save_bank(bank, out_path)
    click.echo(
        f"wrote boxspline bank dim={bank.dim} "
        f"highpass={len(bank.highpass)} to {out_path}"
    )


@main.command()
@click.argument("bank_path", type=click.Path(exists=True))
@click.option(
    "--frequency",
    "grid",
    type=int,
    default=None,
    help="Also sample the modulation identities on a GRIDxGRID... mesh.",
)
@click.option("--report", "report_path", type=click.Path(), default=None)
@_diagnose
def verify(bank_path, grid, report_path):
    """Exactly verify the tight framelet filter bank identities."""
    bank = load_bank(bank_path)
    report = verify_tight_bank(bank)
    if report_path is not None:
        with open(report_path, "w") as fh:
            fh.write(json.dumps(report.to_obj(), sort_keys=True, indent=1) + "\n")
    if grid is not None:
        defect = verify_frequency(bank, grid)
        click.echo(f"frequency_defect: {_fmt(defect)}")
    if report.ok:
        click.echo(f"pass: {report.cells_checked} cells verified exactly")
        sys.exit(0)
    gamma, n, defect = report.witness
    click.echo(
        f"fail: gamma={list(gamma)} n={list(n)} "
        f"defect={defect.numerator}/{defect.denominator}"
    )
    sys.exit(1)


@main.command()
@click.argument("bank_path", type=click.Path(exists=True))
@click.option("--edges", "edges_path", type=click.Path(), default=None)
@_diagnose
def census(bank_path, edges_path):
    """Print the direction census of a bank's high-pass filters."""
    bank = load_bank(bank_path)
    tally = direction_census(bank)
    for direction, count in tally.sorted_items():
        line = f"direction {' '.join(str(x) for x in direction)}: {count}"
        if bank.dim == 2:
            line += f"  angle {_fmt(slope_angle_degrees(direction))}"
        click.echo(line)
    click.echo(f"high-pass filters: {tally.total}")
    click.echo(f"distinct directions: {tally.distinct}")
    if edges_path is not None:
        write_edge_csv(bank, edges_path)
        click.echo(f"wrote edge list to {edges_path}")


@main.group()
def transform():
    """Framelet analysis and synthesis on periodic tensors."""


@transform.command()
@click.option("--bank", "bank_path", type=click.Path(exists=True), required=True)
@click.option("--levels", type=int, required=True)
@click.option("--in", "in_path", type=click.Path(exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(), required=True)
@_diagnose
def analyze(bank_path, levels, in_path, out_path):
    """Decompose a tensor into a coefficient pyramid (JSON)."""
    bank = load_bank(bank_path)
    data = tf.read_tensor(in_path)
    pyramid = tf.analyze(bank, data, levels)
    with open(out_path, "w") as fh:
        fh.write(tf.pyramid_to_json(pyramid))
    click.echo(f"wrote pyramid levels={levels} to {out_path}")


@transform.command()
@click.option("--bank", "bank_path", type=click.Path(exists=True), required=True)
@click.option("--in", "in_path", type=click.Path(exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(), required=True)
@_diagnose
def synthesize(bank_path, in_path, out_path):
    """Reconstruct a tensor from a coefficient pyramid."""
    bank = load_bank(bank_path)
    with open(in_path) as fh:
        pyramid = tf.pyramid_from_json(fh.read())
    tf.write_tensor(tf.synthesize(bank, pyramid), out_path)
    click.echo(f"wrote tensor to {out_path}")


@transform.command()
@click.option("--bank", "bank_path", type=click.Path(exists=True), required=True)
@click.option("--levels", type=int, required=True)
@click.option("--in", "in_path", type=click.Path(exists=True), required=True)
@_diagnose
def roundtrip(bank_path, levels, in_path):
    """Print perfect-reconstruction and energy-preservation defects."""
    bank = load_bank(bank_path)
    data = tf.read_tensor(in_path)
    pyramid = tf.analyze(bank, data, levels)
    recon = tf.synthesize(bank, pyramid)
    scale = float(np.max(np.abs(data)))
    pr = float(np.max(np.abs(recon - data))) / (scale or 1.0)
    energy = float(np.sum(np.square(data)))
    parseval = abs(tf.pyramid_energy(pyramid) - energy) / (energy or 1.0)
    click.echo(f"pr_defect: {_fmt(pr)}")
    click.echo(f"parseval_defect: {_fmt(parseval)}")


@main.command()
@click.option("--bank", "bank_path", type=click.Path(exists=True), required=True)
@click.option("--iters", type=int, required=True, help="Refinement iterations J.")
@click.option("--out", "out_path", type=click.Path(), required=True)
@click.option(
    "--psi",
    "psi_index",
    type=int,
    default=None,
    help="Sample this high-pass framelet (0-based) instead of the refinable function.",
)
@_diagnose
def render(bank_path, iters, out_path, psi_index):
    """Sample the refinable function or a framelet on a dyadic grid (CSV)."""
    bank = load_bank(bank_path)
    if psi_index is None:
        grid = cascade_phi(bank.lowpass, iters)
    else:
        if not 0 <= psi_index < len(bank.highpass):
            raise ValueError(
                f"psi index {psi_index} out of range 0..{len(bank.highpass) - 1}"
            )
        phi = cascade_phi(bank.lowpass, iters + 1)
        grid = sample_psi(bank, phi, iters)[psi_index]
    write_grid_csv(grid, out_path)
    click.echo(f"wrote grid ({grid.values.size} points) to {out_path}")


@main.command()
@click.option("--matrix", "matrix_path", type=click.Path(exists=True), required=True)
@click.option("--point", required=True, help='Target point, e.g. "1 0".')
@_diagnose
def fibers(matrix_path, point):
    """List the cube vertices a direction matrix maps onto a point."""
    m = _load_matrix(matrix_path)
    target = tuple(int(tok) for tok in point.split())
    vertices = sorted(preimage_vertices(m, target))
    click.echo(f"count: {len(vertices)}")
    for v in vertices:
        click.echo(" ".join(str(x) for x in v))


if __name__ == "__main__":
    main()
