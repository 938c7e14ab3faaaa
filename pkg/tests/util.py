"""Shared helpers for the test suite: corpus generation and scrambling."""

import random

from ribbonsurf import RibbonMap, from_rotation_lists, parse_dart_token, random_filling_map


def rotation_token_lists(ribbon_map: RibbonMap):
    return [list(rot) for rot in ribbon_map.rotation_tokens()]


def scramble(ribbon_map: RibbonMap, rng: random.Random, rename: bool = True) -> RibbonMap:
    """Same map, different presentation: permuted edge declaration order,
    renamed labels, rotated rotation lists, shuffled vertex order."""
    labels = list(ribbon_map.edge_labels)
    if rename:
        fresh = [f"r{idx}" for idx in range(len(labels))]
        rng.shuffle(fresh)
        mapping = dict(zip(labels, fresh))
    else:
        mapping = {lab: lab for lab in labels}
    new_labels = [mapping[lab] for lab in labels]
    rng.shuffle(new_labels)

    rotations = []
    for rot in rotation_token_lists(ribbon_map):
        refs = [parse_dart_token(tok) for tok in rot]
        renamed = [mapping[ref.label] + ("+" if ref.sign > 0 else "-")
                   for ref in refs]
        if renamed:
            cut = rng.randrange(len(renamed))
            renamed = renamed[cut:] + renamed[:cut]
        rotations.append(renamed)
    rng.shuffle(rotations)
    return from_rotation_lists(new_labels, rotations)


def corpus(count: int, max_edges: int = 12, seed: int = 0):
    """Deterministic list of (genus, map) pairs with m <= max_edges."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = rng.randrange(0, 4)
        room = max_edges - 2 * g
        if room < 0:
            continue
        k = rng.randrange(0, room + 1)
        out.append((g, random_filling_map(g, k, rng.randrange(10 ** 6))))
    return out
