"""
Loops on a map
==============

Paths are sequences of darts; loops based at a vertex are compared up to
homotopy on the filled surface.  The comparison projects both paths
through a spanning tree and asks the group-level solver whether the
difference is trivial.
"""

from ribbonsurf import DiscretePath, homotopic, parse_word, petal

torus = petal(1)

def loop(text: str) -> DiscretePath:
    """Read a loop at the basepoint from a word over the edge labels."""
    letters = parse_word(text)
    if not letters:
        return DiscretePath((), start=0)
    return DiscretePath(tuple(torus.dart_index(l) for l in letters))

# On the torus the two petal loops are the two handles: independent.
print("a ~ b:", homotopic(torus, loop("a"), loop("b")))

# Backtracking is invisible to homotopy.
print("a bB ~ a:", homotopic(torus, loop("abB"), loop("a")))

# The face boundary bounds a disc, so it contracts to the constant loop.
print("abAB ~ const:", homotopic(torus, loop("abAB"), loop("")))

# The commutator relation holds, so ab ~ ba on the torus.
print("ab ~ ba:", homotopic(torus, loop("ab"), loop("ba")))

# Any loop is homotopic to itself even on maps whose presentation the
# solver does not handle; free cancellation settles it first.
print("aa ~ aa:", homotopic(torus, loop("aa"), loop("aa")))
