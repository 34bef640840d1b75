"""Command-line driver.

Commands:
  verify         run every self-verification check, exit nonzero on failure
  scan-standard  Mermin double-violation scan over (phi, p), CSV out
  scan-genuine   Svetlichny double-violation scan at a fixed bias v
  windows        print thresholds and closed-form p-windows
  bounds         print enumerated classical bounds and quantum witnesses

Exit codes: 0 success, 1 failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

import numpy as np

from .feasibility import (
    FeasibilityGrid,
    p_window_genuine,
    p_window_standard,
    phi_threshold_genuine,
    phi_threshold_standard,
    scan,
    v_threshold_genuine,
)
from .lhvbound import (
    hybrid_strategies,
    local_strategies,
    mermin_classical_max,
    quantum_witness_max,
    svetlichny_classical_max,
)
from .qstate import PHI_MAX
from .verify import check_names, run_checks

USAGE_ERROR = 2
CHECK_FAILURE = 1


def _fmt(x: float) -> str:
    """Decimal form capped at 12 significant digits; diffable and reimport-safe."""
    return f"{x:.12g}"


def _scan_grids(n_phi: int, n_p: int) -> tuple[np.ndarray, np.ndarray]:
    phi = np.arange(1, n_phi + 1) / n_phi * PHI_MAX  # (0, pi/4], zero excluded
    p = np.linspace(0.0, 1.0, n_p)
    return phi, p


def _write_atomic(path: str, text: str) -> None:
    """Write via a sibling temp file and rename, so failures leave no partial file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".seqbell-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


def grid_to_csv(grid: FeasibilityGrid) -> str:
    lines = []
    if grid.v is None:
        lines.append("phi,p,value1,value2,double_violation")
    else:
        lines.append("phi,p,v,value1,value2,double_violation")
        v_col = _fmt(grid.v)
    for i, phi in enumerate(grid.phi):
        phi_col = _fmt(phi)
        for j, p in enumerate(grid.p):
            fields = [phi_col, _fmt(p)]
            if grid.v is not None:
                fields.append(v_col)
            fields.append(_fmt(grid.value1[i, j]))
            fields.append(_fmt(grid.value2[i, j]))
            fields.append("1" if grid.flagged[i, j] else "0")
            lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def grid_to_svg(grid: FeasibilityGrid) -> str:
    """Standalone SVG: flagged region as filled rects, window boundaries overlaid."""
    width, height = 640, 480
    left, right, top, bottom = 70, 20, 24, 48
    plot_w = width - left - right
    plot_h = height - top - bottom
    phi_max = PHI_MAX

    def sx(phi: float) -> float:
        return left + phi / phi_max * plot_w

    def sy(p: float) -> float:
        return top + (1.0 - p) * plot_h

    phi_step = grid.phi[1] - grid.phi[0] if grid.phi.size > 1 else phi_max
    p_step = grid.p[1] - grid.p[0] if grid.p.size > 1 else 1.0

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    title = f"{grid.kind} double-violation region"
    if grid.v is not None:
        title += f" (v = {grid.v:g})"
    parts.append(f'<text x="{left}" y="16" font-family="sans-serif" '
                 f'font-size="13">{title}</text>')

    # One rect per contiguous flagged run in each phi column.
    for i, phi in enumerate(grid.phi):
        flags = grid.flagged[i]
        j = 0
        while j < flags.size:
            if not flags[j]:
                j += 1
                continue
            j_end = j
            while j_end + 1 < flags.size and flags[j_end + 1]:
                j_end += 1
            x0 = sx(phi - phi_step / 2)
            x1 = sx(phi + phi_step / 2)
            y0 = sy(grid.p[j_end] + p_step / 2)
            y1 = sy(grid.p[j] - p_step / 2)
            parts.append(
                f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{x1 - x0:.2f}" '
                f'height="{y1 - y0:.2f}" fill="#7fb3d5"/>'
            )
            j = j_end + 1

    # Closed-form window boundary curves.
    for pick in (lambda w: w.lo, lambda w: w.hi):
        points = []
        for phi in np.linspace(phi_max / 400, phi_max, 400):
            if grid.kind == "standard":
                window = p_window_standard(float(phi))
            else:
                window = p_window_genuine(float(phi), grid.v)
            if window.empty:
                continue
            points.append(f"{sx(float(phi)):.2f},{sy(pick(window)):.2f}")
        if points:
            parts.append(
                f'<polyline points="{" ".join(points)}" fill="none" '
                f'stroke="#b03a2e" stroke-width="1.5"/>'
            )

    # Axes with a few ticks.
    parts.append(
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="black"/>'
    )
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        phi = frac * phi_max
        x = sx(phi)
        parts.append(f'<line x1="{x:.2f}" y1="{top + plot_h}" '
                     f'x2="{x:.2f}" y2="{top + plot_h + 5}" stroke="black"/>')
        parts.append(f'<text x="{x:.2f}" y="{top + plot_h + 18}" font-family="sans-serif" '
                     f'font-size="11" text-anchor="middle">{phi:.3f}</text>')
        y = sy(frac)
        parts.append(f'<line x1="{left - 5}" y1="{y:.2f}" '
                     f'x2="{left}" y2="{y:.2f}" stroke="black"/>')
        parts.append(f'<text x="{left - 8}" y="{y + 4:.2f}" font-family="sans-serif" '
                     f'font-size="11" text-anchor="end">{frac:.2f}</text>')
    parts.append(f'<text x="{left + plot_w / 2:.0f}" y="{height - 8}" '
                 f'font-family="sans-serif" font-size="12" text-anchor="middle">phi (rad)</text>')
    parts.append(f'<text x="16" y="{top + plot_h / 2:.0f}" font-family="sans-serif" '
                 f'font-size="12" text-anchor="middle" '
                 f'transform="rotate(-90 16 {top + plot_h / 2:.0f})">p</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_verify(args) -> int:
    results = run_checks(inject_failure=args.inject_failure)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name}: {r.detail}")
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed: "
              + ", ".join(r.name for r in failed))
        return CHECK_FAILURE
    print(f"all checks passed ({len(results)})")
    return 0


def cmd_scan(args, kind: str) -> int:
    phi, p = _scan_grids(args.grid_phi, args.grid_p)
    v = args.v if kind == "genuine" else None
    grid = scan(kind, phi, p, v=v)
    _write_atomic(args.out, grid_to_csv(grid))
    flagged = int(np.count_nonzero(grid.flagged))
    print(f"wrote {grid.phi.size * grid.p.size} rows to {args.out} "
          f"({flagged} flagged cells)")
    if args.svg:
        _write_atomic(args.svg, grid_to_svg(grid))
        print(f"wrote {args.svg}")
    return 0


def cmd_windows(args) -> int:
    v_list = args.v if args.v else [0.8, 0.9]
    print(f"phi threshold, standard scenario: {phi_threshold_standard():.4f}")
    print(f"v threshold, genuine scenario:    {v_threshold_genuine():.4f}")
    for v in v_list:
        if v <= v_threshold_genuine():
            print(f"v = {v:.4f}: no window (v below {v_threshold_genuine():.4f})")
            continue
        window = p_window_genuine(PHI_MAX, v)
        print(f"v = {v:.4f}: phi threshold {phi_threshold_genuine(v):.4f}, "
              f"p window at phi = pi/4: ({window.lo:.4f}, {window.hi:.4f})")
    return 0


def cmd_bounds(args) -> int:
    mermin_max = mermin_classical_max()
    svet_max = svetlichny_classical_max()
    witness_m = quantum_witness_max("mermin")
    witness_s = quantum_witness_max("svetlichny")
    print(f"mermin_classical_max = {mermin_max:g} "
          f"(enumerated over {sum(1 for _ in local_strategies())} local strategies)")
    print(f"svetlichny_classical_max = {svet_max:g} "
          f"(enumerated over {sum(1 for _ in hybrid_strategies())} hybrid strategies)")
    print(f"mermin_quantum_witness = {witness_m:g}")
    print(f"svetlichny_quantum_witness ≈ {witness_s:.4f}")
    return 0


def _positive_grid(value: str) -> int:
    n = int(value)
    if n < 2:
        raise argparse.ArgumentTypeError("grid size must be at least 2")
    return n


def _bias(value: str) -> float:
    v = float(value)
    if not 0.0 < v < 1.0:
        raise argparse.ArgumentTypeError("v must lie strictly between 0 and 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqbell",
        description="Sequential tripartite Bell-test simulator and verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run all self-verification checks")
    p_verify.add_argument("--inject-failure", metavar="CHECK", default=None,
                          choices=check_names(),
                          help="perturb the named check so it must fail (fault injection)")

    for kind in ("standard", "genuine"):
        p_scan = sub.add_parser(f"scan-{kind}",
                                help=f"scan the {kind} double-violation region")
        p_scan.add_argument("--grid-phi", type=_positive_grid, default=500,
                            metavar="N", help="number of phi samples (default 500)")
        p_scan.add_argument("--grid-p", type=_positive_grid, default=500,
                            metavar="N", help="number of p samples (default 500)")
        p_scan.add_argument("--out", required=True, metavar="FILE",
                            help="output CSV path")
        p_scan.add_argument("--svg", default=None, metavar="FILE",
                            help="optional SVG rendering of the flagged region")
        if kind == "genuine":
            p_scan.add_argument("--v", type=_bias, required=True,
                                help="input bias v in (0, 1)")

    p_windows = sub.add_parser("windows", help="print thresholds and p-windows")
    p_windows.add_argument("--v", type=_bias, action="append", default=None,
                           help="bias value (repeatable; default 0.8 and 0.9)")

    sub.add_parser("bounds", help="print enumerated classical bounds and witnesses")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "scan-standard":
            return cmd_scan(args, "standard")
        if args.command == "scan-genuine":
            return cmd_scan(args, "genuine")
        if args.command == "windows":
            return cmd_windows(args)
        if args.command == "bounds":
            return cmd_bounds(args)
        parser.error(f"unknown command {args.command!r}")
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except RuntimeError as exc:  # internal consistency check tripped
        print(f"internal check failed: {exc}", file=sys.stderr)
        return CHECK_FAILURE
    return 0


if __name__ == "__main__":
    sys.exit(main())
