"""
The writing quality scale: presets and reconstruction
=====================================================
"""

from lexigauge import (
    GroupKey,
    Language,
    StylePoint,
    build_scale,
    class_center,
    direction_vector,
    load_bundled_tables,
    load_wqs_presets,
    select_group,
    wqs,
)

# The scale is a linear functional on (d_rel, h_rel, j): weights dotted with
# the offset from an origin point. Four presets ship with the package.
presets = load_wqs_presets()
for label, coeffs in sorted(presets.items()):
    w = coeffs.weights
    print(f"{label:17s} weights=({w.d_rel:+.4f}, {w.h_rel:+.4f}, {w.j:+.4f})")

# Score one point on the verbatim english preset. Positive d_rel (richer
# vocabulary than the growth model expects) pulls the score up; positive
# h_rel and j pull it down.
point = StylePoint(-0.1684, 0.0049, -0.1156)
print(f"\nexample row scores {wqs(presets['verbatim-en'], point):+.4f} on verbatim-en")
print(f"and {wqs(presets['verbatim-es'], point):+.4f} on verbatim-es")

# The preset geometry can be rebuilt from the bundled tables: the origin is
# the non-laureate class center and the weights point toward the laureate
# center, stretched by a scale factor.
rows = load_bundled_tables()
def center(nobel):
    group = select_group(rows, GroupKey(Language.ENGLISH, nobel))
    return class_center([StylePoint(r.d_rel, r.h_rel, r.j) for r in group])

non, nob = center(False), center(True)
print(f"\nnon-laureate center: ({non.d_rel:+.5f}, {non.h_rel:+.5f}, {non.j:+.5f})")
print(f"laureate center:     ({nob.d_rel:+.5f}, {nob.h_rel:+.5f}, {nob.j:+.5f})")

direction = direction_vector(non, nob)
rebuilt = build_scale(non, direction, 8.083, label="rebuilt-en")
print(f"unit direction:      ({direction.d_rel:+.5f}, {direction.h_rel:+.5f}, {direction.j:+.5f})")
print(f"rebuilt weights:     ({rebuilt.weights.d_rel:+.4f}, {rebuilt.weights.h_rel:+.4f}, "
      f"{rebuilt.weights.j:+.4f})")
# the reconstructed-en preset bundles exactly this construction
print(f"bundled reconstruction scores the example row "
      f"{wqs(presets['reconstructed-en'], point):+.4f}")
