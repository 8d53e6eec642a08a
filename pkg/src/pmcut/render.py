"""Schematic SVG and DOT views of a reduction artifact.

The SVG shows the two gadget columns, one straight polyline per wire bundle,
and a marked block at each bundle crossing.  It is a schematic of the routing
topology, not a coordinate-faithful drawing.  The DOT output is the gadget
adjacency multigraph with connector edges labelled by variable.
"""

from __future__ import annotations

from .reduction import ReductionArtifact

_VAR_X = (20.0, 100.0)
_CLAUSE_X = (320.0, 400.0)
_SLOT_DY = 14.0
_PAD = 30.0


def _bundle_geometry(art: ReductionArtifact):
    d = art.drawing
    lines = []
    for b in d.bundles:
        y0 = _PAD + (2 * b.exit_slot + 0.5) * _SLOT_DY
        y1 = _PAD + (2 * b.entry_slot + 0.5) * _SLOT_DY
        lines.append(((b.var, b.clause), (_VAR_X[1], y0), (_CLAUSE_X[0], y1)))
    return lines


def _crossing_points(art: ReductionArtifact):
    geom = {key: (p0, p1) for key, p0, p1 in _bundle_geometry(art)}
    points = []
    for rec in art.crossings:
        (x0, ya0), (x1, ya1) = geom[rec.lower]
        (_, yb0), (_, yb1) = geom[rec.upper]
        d0, d1 = ya0 - yb0, ya1 - yb1
        t = d0 / (d0 - d1) if d0 != d1 else 0.5
        x = x0 + t * (x1 - x0)
        y = ya0 + t * (ya1 - ya0)
        points.append((rec.index, x, y))
    return points


def render_svg(art: ReductionArtifact) -> str:
    d = art.drawing
    n_slots = 2 * len(d.bundles)
    height = 2 * _PAD + n_slots * _SLOT_DY
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="420" height="{height:.0f}" '
        f'viewBox="0 0 420 {height:.0f}">',
        '<style>text{font:10px sans-serif}</style>',
    ]
    bundles = _bundle_geometry(art)
    for (i, j), (x0, y0), (x1, y1) in bundles:
        out.append(
            f'<polyline class="bundle" points="{x0:.1f},{y0:.1f} {x1:.1f},{y1:.1f}" '
            f'stroke="#888" fill="none"><title>x{i} in C{j}</title></polyline>'
        )
    slot_y = {}
    for b in d.bundles:
        slot_y.setdefault(b.var, []).append(_PAD + (2 * b.exit_slot + 0.5) * _SLOT_DY)
    for i, ys in sorted(slot_y.items()):
        y0, y1 = min(ys) - 0.6 * _SLOT_DY, max(ys) + 0.6 * _SLOT_DY
        out.append(
            f'<rect class="variable" x="{_VAR_X[0]:.1f}" y="{y0:.1f}" '
            f'width="{_VAR_X[1] - _VAR_X[0]:.1f}" height="{y1 - y0:.1f}" '
            f'fill="#cfe3ff" stroke="#245"/>'
        )
        out.append(f'<text x="{_VAR_X[0] + 6:.1f}" y="{(y0 + y1) / 2:.1f}">x{i}</text>')
    slot_y = {}
    for b in d.bundles:
        slot_y.setdefault(b.clause, []).append(_PAD + (2 * b.entry_slot + 0.5) * _SLOT_DY)
    for j, ys in sorted(slot_y.items()):
        y0, y1 = min(ys) - 0.6 * _SLOT_DY, max(ys) + 0.6 * _SLOT_DY
        out.append(
            f'<rect class="clause" x="{_CLAUSE_X[0]:.1f}" y="{y0:.1f}" '
            f'width="{_CLAUSE_X[1] - _CLAUSE_X[0]:.1f}" height="{y1 - y0:.1f}" '
            f'fill="#ffe3cf" stroke="#542"/>'
        )
        out.append(f'<text x="{_CLAUSE_X[0] + 6:.1f}" y="{(y0 + y1) / 2:.1f}">C{j}</text>')
    for idx, x, y in _crossing_points(art):
        out.append(
            f'<rect class="crossing" x="{x - 4:.1f}" y="{y - 4:.1f}" width="8" height="8" '
            f'fill="#fff" stroke="#a22"><title>crossing {idx}</title></rect>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_dot(art: ReductionArtifact) -> str:
    """Gadget adjacency multigraph; connector edges labelled by variable."""
    kind_of = art.vertex_info

    def node(vid: int) -> str:
        kind, idx, _ = kind_of[vid]
        return {"variable": f"x{idx}", "clause": f"C{idx}", "crossing": f"X{idx}"}[kind]

    lines = ["graph reduction {", "  node [shape=box];"]
    names = sorted({node(v) for v in range(art.graph.n)},
                   key=lambda s: (s[0], int(s[1:])))
    for name in names:
        lines.append(f'  "{name}";')
    for u, v, var in art.connectors:
        lines.append(f'  "{node(u)}" -- "{node(v)}" [label="x{var}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
