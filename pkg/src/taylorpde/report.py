"""Experiment tables and figures with byte-deterministic output.

Everything here is a pure function of the configuration: rows are emitted
in sorted (field, x, t, order) order, floats are formatted with repr-exact
precision ('.17g'), and files use '\n' endings, so re-running a command
reproduces identical bytes.  CSV metadata lives in leading '# key: value'
comment lines and survives a parse round trip.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import fixtures
from .errors import ConfigError
from .pade import pade_fit
from .solver import solve

_FLOAT_FMT = ".17g"


def _fmt_cell(value) -> str:
    if isinstance(value, bool):
        raise TypeError("boolean cells are not supported")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, _FLOAT_FMT)
    return str(value)


def _parse_cell(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


class Table(NamedTuple):
    """Columns, rows of (str | int | float) cells, and metadata pairs."""

    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    meta: tuple[tuple[str, str], ...] = ()


def to_csv(table: Table) -> str:
    lines = [f"# {key}: {value}" for key, value in table.meta]
    lines.append(",".join(table.columns))
    for row in table.rows:
        lines.append(",".join(_fmt_cell(cell) for cell in row))
    return "\n".join(lines) + "\n"


def from_csv(text: str) -> Table:
    meta = []
    columns: tuple[str, ...] | None = None
    rows = []
    for line in text.splitlines():
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition(": ")
            if not sep:
                raise ConfigError(f"malformed metadata line: {line!r}")
            meta.append((key, value))
        elif columns is None:
            columns = tuple(line.split(","))
        else:
            cells = tuple(_parse_cell(cell) for cell in line.split(","))
            if len(cells) != len(columns):
                raise ConfigError(
                    f"row has {len(cells)} cells but the header has {len(columns)}"
                )
            rows.append(cells)
    if columns is None:
        raise ConfigError("CSV text has no header row")
    return Table(columns, tuple(rows), tuple(meta))


@dataclass(frozen=True)
class ExperimentConfig:
    """Settings shared by the table and figure generators.

    `orders` lists truncation orders to compare.  For tables, `xs` and
    `ts` define the evaluation grid.  For figures, the first entry of
    `xs` fixes the slice, `t_max`/`samples` define the sweep, and `pade`
    optionally adds an [L/M] curve fitted to the longest solve.
    """

    fixture: str
    orders: tuple[int, ...]
    xs: tuple[float, ...] = ()
    ts: tuple[float, ...] = ()
    pade: tuple[int, int] | None = None
    t_max: float = 0.5
    samples: int = 201

    def validate(self) -> None:
        if self.fixture not in fixtures.names():
            raise ConfigError(
                f"unknown fixture '{self.fixture}'; expected one of "
                f"{', '.join(fixtures.names())}"
            )
        if not self.orders:
            raise ConfigError("at least one truncation order is required")
        if any(n < 1 for n in self.orders):
            raise ConfigError("truncation orders must be at least 1")
        if len(set(self.orders)) != len(self.orders):
            raise ConfigError("truncation orders must be distinct")
        if any(t < 0 for t in self.ts):
            raise ConfigError("t values must be nonnegative")
        if self.pade is not None:
            L, M = self.pade
            if L < 0 or M < 1:
                raise ConfigError("pade orders must satisfy L >= 0 and M >= 1")
        if self.t_max <= 0:
            raise ConfigError("t_max must be positive")
        if self.samples < 2:
            raise ConfigError("samples must be at least 2")


def error_table(config: ExperimentConfig) -> Table:
    """Absolute error of truncated series against the exact waves.

    One row per (field, x, t, order), in that sort order; each row also
    carries the convergence radius at its x and the ratio t/R so rows
    outside the disk of convergence are easy to filter.
    """
    config.validate()
    if not config.xs:
        raise ConfigError("error_table needs at least one x value")
    if not config.ts:
        raise ConfigError("error_table needs at least one t value")
    fx = fixtures.get(config.fixture)
    orders = sorted(config.orders)
    solutions = {n: solve(fx.system, fx.initial, n) for n in orders}
    rows = []
    for idx, name in enumerate(fx.system.fields):
        wave = fx.waves[idx]
        for x in config.xs:
            radius = wave.convergence_radius(x)
            for t in config.ts:
                for n in orders:
                    approx = solutions[n].series[idx].eval(x, t)
                    exact = wave(x, t)
                    rows.append(
                        (name, x, t, n, approx, exact, abs(approx - exact), radius, t / radius)
                    )
    meta = (
        ("fixture", fx.name),
        ("orders", " ".join(str(n) for n in orders)),
        ("error", "abs(series - exact wave)"),
    )
    columns = (
        "field",
        "x",
        "t",
        "order",
        "approx",
        "exact",
        "abs_error",
        "radius",
        "t_over_radius",
    )
    return Table(columns, tuple(rows), meta)


def divergence_figure(config: ExperimentConfig) -> Table:
    """Sample truncated series of the first field along t at fixed x.

    Shows finite-radius divergence directly: every truncation leaves the
    exact curve near the convergence radius, and higher order makes the
    departure more violent, not later.  With `pade` set, the rational
    curve fitted to the same coefficients tracks the exact solution past
    the radius.
    """
    config.validate()
    fx = fixtures.get(config.fixture)
    x = config.xs[0] if config.xs else 0.0
    orders = sorted(config.orders)
    needed = orders[-1]
    if config.pade is not None:
        needed = max(needed, config.pade[0] + config.pade[1])
    solution = solve(fx.system, fx.initial, needed)
    series = solution.series[0]
    wave = fx.waves[0]
    radius = wave.convergence_radius(x)

    prefixes = [series.truncate(n) for n in orders]
    columns = ["t", "exact"] + [f"T{n}" for n in orders]
    approximant = None
    if config.pade is not None:
        L, M = config.pade
        scalar = [p(x) for p in series.coeffs[: L + M + 1]]
        approximant = pade_fit(scalar, L, M)
        columns.append(f"pade[{L}/{M}]")

    rows = []
    for i in range(config.samples):
        t = config.t_max * i / (config.samples - 1)
        row = [t, wave(x, t)]
        row.extend(prefix.eval(x, t) for prefix in prefixes)
        if approximant is not None:
            row.append(approximant(t))
        rows.append(tuple(row))

    meta = [
        ("fixture", fx.name),
        ("field", fx.system.fields[0]),
        ("x", format(x, _FLOAT_FMT)),
        ("radius", format(radius, _FLOAT_FMT)),
        ("orders", " ".join(str(n) for n in orders)),
    ]
    if config.pade is not None:
        meta.append(("pade", f"{config.pade[0]}/{config.pade[1]}"))
    return Table(tuple(columns), tuple(rows), tuple(meta))


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
_DASHES = ("6 3", "2 2", "8 2 2 2", "4 4", "1 3", "10 3")


def render_figure_svg(table: Table) -> str:
    """Render a divergence table as a standalone SVG document.

    The exact curve is solid black, each approximation gets its own color
    and dash pattern, and the convergence radius from the table metadata
    appears as a vertical line.  Points leaving the plotted band split
    their polyline instead of being clamped, so divergence shows as a
    curve running off the frame.
    """
    meta = dict(table.meta)
    width, height = 720.0, 480.0
    left, right, top, bottom = 64.0, 16.0, 16.0, 48.0

    ts = [row[0] for row in table.rows]
    exact = [row[1] for row in table.rows]
    t_lo, t_hi = ts[0], ts[-1]
    y_lo, y_hi = min(exact), max(exact)
    pad = 0.6 * (y_hi - y_lo) if y_hi > y_lo else 1.0
    y_lo -= pad
    y_hi += pad

    def sx(t: float) -> float:
        return left + (t - t_lo) / (t_hi - t_lo) * (width - left - right)

    def sy(v: float) -> float:
        return top + (y_hi - v) / (y_hi - y_lo) * (height - top - bottom)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
    ]

    # Axes with a few labeled ticks.
    axis_y = height - bottom
    parts.append(
        f'<line x1="{left:.2f}" y1="{axis_y:.2f}" x2="{width - right:.2f}" '
        f'y2="{axis_y:.2f}" stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{left:.2f}" y1="{top:.2f}" x2="{left:.2f}" '
        f'y2="{axis_y:.2f}" stroke="black" stroke-width="1"/>'
    )
    for i in range(6):
        t = t_lo + (t_hi - t_lo) * i / 5
        px = sx(t)
        parts.append(
            f'<line x1="{px:.2f}" y1="{axis_y:.2f}" x2="{px:.2f}" '
            f'y2="{axis_y + 5:.2f}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{px:.2f}" y="{axis_y + 20:.2f}" font-size="12" '
            f'text-anchor="middle">{t:.2f}</text>'
        )
    for i in range(5):
        v = y_lo + (y_hi - y_lo) * i / 4
        py = sy(v)
        parts.append(
            f'<line x1="{left - 5:.2f}" y1="{py:.2f}" x2="{left:.2f}" '
            f'y2="{py:.2f}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{left - 8:.2f}" y="{py + 4:.2f}" font-size="12" '
            f'text-anchor="end">{v:.2f}</text>'
        )
    parts.append(
        f'<text x="{(left + width - right) / 2:.2f}" y="{height - 10:.2f}" '
        f'font-size="13" text-anchor="middle">t</text>'
    )

    radius_text = meta.get("radius")
    if radius_text is not None:
        radius = float(radius_text)
        if t_lo <= radius <= t_hi:
            px = sx(radius)
            parts.append(
                f'<line x1="{px:.2f}" y1="{top:.2f}" x2="{px:.2f}" '
                f'y2="{axis_y:.2f}" stroke="#888888" stroke-width="1" '
                f'stroke-dasharray="3 3"/>'
            )
            parts.append(
                f'<text x="{px + 4:.2f}" y="{top + 14:.2f}" font-size="12" '
                f'fill="#555555">R = {radius:.4f}</text>'
            )

    def polylines(values: list[float], stroke: str, dash: str | None) -> None:
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        run: list[str] = []
        segments = []
        for t, v in zip(ts, values):
            if y_lo <= v <= y_hi:
                run.append(f"{sx(t):.2f},{sy(v):.2f}")
            elif run:
                segments.append(run)
                run = []
        if run:
            segments.append(run)
        for seg in segments:
            if len(seg) < 2:
                continue
            parts.append(
                f'<polyline points="{" ".join(seg)}" fill="none" '
                f'stroke="{stroke}" stroke-width="1.5"{dash_attr}/>'
            )

    curves = list(table.columns[1:])
    for ci, name in enumerate(curves):
        values = [row[1 + ci] for row in table.rows]
        if ci == 0:
            polylines(values, "#000000", None)
        else:
            polylines(
                values,
                _PALETTE[(ci - 1) % len(_PALETTE)],
                _DASHES[(ci - 1) % len(_DASHES)],
            )

    # Legend, top left inside the frame.
    lx, ly = left + 12.0, top + 12.0
    box_h = 18.0 * len(curves) + 8.0
    parts.append(
        f'<rect x="{lx - 6:.2f}" y="{ly - 6:.2f}" width="150" '
        f'height="{box_h:.2f}" fill="white" stroke="#cccccc"/>'
    )
    for ci, name in enumerate(curves):
        yy = ly + 18.0 * ci + 6.0
        if ci == 0:
            stroke, dash_attr = "#000000", ""
        else:
            stroke = _PALETTE[(ci - 1) % len(_PALETTE)]
            dash_attr = f' stroke-dasharray="{_DASHES[(ci - 1) % len(_DASHES)]}"'
        parts.append(
            f'<line x1="{lx:.2f}" y1="{yy:.2f}" x2="{lx + 28:.2f}" y2="{yy:.2f}" '
            f'stroke="{stroke}" stroke-width="1.5"{dash_attr}/>'
        )
        parts.append(
            f'<text x="{lx + 34:.2f}" y="{yy + 4:.2f}" font-size="12">{name}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
