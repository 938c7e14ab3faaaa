"""
Fundamental groups and the word problem
=======================================

A spanning tree of the map collapses to a point; what remains of each
face boundary becomes a relator on the leftover edges.  For the filled
genus-g surface this recovers the standard one-relator presentation, and
in that presentation loops can be decided: genus 1 by abelianization,
genus 2 and up by Dehn's length-reducing algorithm.
"""

from ribbonsurf import (
    format_word,
    homotopic_words,
    is_trivial_word,
    parse_word,
    petal,
    pi1_presentation,
    surface_group,
)

# Presentation extraction agrees with the standard surface group.
for g in range(4):
    pres = pi1_presentation(petal(g))
    same = pres == surface_group(g)
    print(f"genus {g}: generators={list(pres.generators)} "
          f"relators={[format_word(r) for r in pres.relators]} "
          f"standard={same}")

# The defining relator is trivial; a single commutator is trivial on the
# torus but not on the genus-2 surface, whose relator is longer.
torus = surface_group(1)
genus2 = surface_group(2)
commutator = parse_word("abAB")
print("\n[a,b] in genus 1:", is_trivial_word(commutator, torus))
print("[a,b] in genus 2:", is_trivial_word(commutator, genus2))
print("relator in genus 2:",
      is_trivial_word(parse_word("abABcdCD"), genus2))

# Conjugates of the relator stay trivial: Dehn's algorithm shrinks them
# back to nothing no matter how they are dressed up.
relator = parse_word("abABcdCD")
conj = parse_word("dcB") + relator + parse_word("bCD")
print("conjugated relator:", is_trivial_word(conj, genus2))

# Abelianization catches most nontrivial words immediately.
print("word aab in genus 2:", is_trivial_word(parse_word("aab"), genus2))

# homotopic_words compares two words rather than one against the identity.
print("\na ~ its conjugate baB on torus:",
      homotopic_words(parse_word("a"), parse_word("baB"), torus))
print("a ~ b on torus:",
      homotopic_words(parse_word("a"), parse_word("b"), torus))
