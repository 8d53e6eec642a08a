"""Rendering: schematic SVG of the routing and DOT of gadget adjacency."""

from pathlib import Path

from pmcut import canonical_n3_formula, reduce_formula, render_dot, render_svg

art = reduce_formula(canonical_n3_formula())

out = Path("render-out")
out.mkdir(exist_ok=True)

svg = render_svg(art)
(out / "canonical.svg").write_text(svg)
blocks = svg.count('class="crossing"')
print(f"wrote {out / 'canonical.svg'} ({blocks} crossing blocks)")

dot = render_dot(art)
(out / "canonical.dot").write_text(dot)
print(f"wrote {out / 'canonical.dot'} "
      f"({dot.count(' -- ')} gadget adjacencies)")
print("\nrender with e.g.:  dot -Tpdf render-out/canonical.dot -o canonical.pdf")
