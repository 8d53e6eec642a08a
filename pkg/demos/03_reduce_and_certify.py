"""Reduction: compile a formula and certify the output is Barnette."""

from pmcut import (
    build_h,
    canonical_n3_formula,
    faces_from_embedding,
    is_3_connected,
    is_bipartite,
    is_cubic,
    is_planar_embedding,
    layout,
    reduce_formula,
)

f = canonical_n3_formula()

# Step 1: gadgets wired by parallel connector pairs; cubic but not planar.
hb = build_h(f)
print(f"H: {hb.graph.n} vertices = 36*{f.n} + 112*{f.m}, cubic: {is_cubic(hb.graph)}")

# Step 2: route the twelve wire bundles; swaps in the wiring diagram are
# exactly the bundle crossings.
drawing = layout(hb)
print(f"bundles: {len(drawing.bundles)}, crossings q = {len(drawing.events)}")

# Step 3: splice a 16-vertex gadget into each crossing and certify.
art = reduce_formula(f)
g = art.graph
print(f"\nG: {g.n} vertices = 36*{f.n} + 112*{f.m} + 16*{art.q}")
faces = faces_from_embedding(g, art.embedding)
print("faces:", len(faces), "-> Euler characteristic",
      g.n - g.m + len(faces))
print("cubic:", is_cubic(g))
print("bipartite:", is_bipartite(g) is not None)
print("planar (certified rotation system):", is_planar_embedding(g, art.embedding))
print("3-connected:", is_3_connected(g))

# Provenance: every vertex knows its gadget and local name.
kind, idx, name = art.vertex_info[0]
print(f"\nvertex 0 sits in {kind} gadget {idx} as {name}")
print("connector edges:", len(art.connectors))
print("wire route of variable 1 into clause 1 (t-wire):",
      art.wire_routes[(1, 1, 't')])
