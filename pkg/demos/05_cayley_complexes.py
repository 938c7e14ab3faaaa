"""
Bounded Cayley complexes
========================

The Cayley graph of a presentation has one vertex per group element and
one labeled edge per generator move; discs glued along relator loops
make it a 2-complex.  We grow the ball of a given radius, with vertices
named by geodesic representative words.
"""

from ribbonsurf import cayley_ball, free_presentation, surface_group, zxz_presentation

# Free group of rank 2: the ball is a tree, 4 new branches per vertex.
for r in range(6):
    ball = cayley_ball(free_presentation(2), r)
    print(f"free rank 2, radius {r}: {ball.num_vertices} vertices, "
          f"{len(ball.edges)} edges")

# Z x Z: the square grid.  Vertices fill the taxicab diamond, and each
# unit square inside the ball shows up as a 4-cycle cell.
for r in range(4):
    ball = cayley_ball(zxz_presentation(), r)
    print(f"Z x Z, radius {r}: {ball.num_vertices} vertices, "
          f"{len(ball.edges)} edges, {len(ball.cells)} cells")

# Genus 2 surface group: vertex growth is fast and no relator cycle fits
# inside radius 1, so the ball is still a tree there.
ball = cayley_ball(surface_group(2), 1)
print(f"genus 2, radius 1: {ball.num_vertices} vertices, "
      f"{len(ball.edges)} edges, {len(ball.cells)} cells")

# The identity is the first vertex; its neighbors follow in generator order.
ball = cayley_ball(zxz_presentation(), 2)
print("\nfirst vertices of the Z x Z ball:")
for word in ball.vertices[:7]:
    print("  ", "".join(l + ("" if s > 0 else "'") for l, s in word) or "e")
