"""Weight sequences: normalization, classification, and quotient charts.

A pair of positive integer tuples (a; b) defines a one-parameter torus action
on affine (m+n)-space and thereby two GIT quotients X-, X+ linked by a wall
crossing.  This script walks through the bookkeeping layer: reduction to a
well-formed sequence, the flip/flop classification by the K-level
sum(a) - sum(b), the canonical-bundle trick that turns a flip into a flop one
dimension up, and the cyclic-quotient chart atlas.
"""

from orbiflip import (
    WeightSequence,
    atlas_report,
    canonical_extension,
    classify,
    normalize,
)

print("=== normalization ===")
for text in ["2,4;2,2", "2,3;2,2", "1,2;1,1,1"]:
    trace = normalize(WeightSequence.parse(text))
    print(f"({text})  ->  ({trace.output})   "
          f"[global gcd {trace.global_gcd}, omit-one gcds {trace.omit_one_gcds}]")

print()
print("=== classification ===")
for text in ["1,1;1,1", "2,1;1,1", "1,2;1,1,1", "1,2,3;", "1,2,3;1"]:
    seq = normalize(WeightSequence.parse(text)).output
    print(f"({text:>10})  {classify(seq).describe()}")

print()
print("=== canonical extension: flip to flop ===")
# The five 3-fold contraction/flip sequences built from coprime (2, 3) all
# extend to the same 4-fold flop sequence, up to reordering.
for text in ["1,2,3;5", "1,2,3;1", "1,5;2,3", "1,5;1,2", "1,5;1,3"]:
    seq = WeightSequence.parse(text)
    ext = canonical_extension(seq)
    print(f"K-total space of X-({text:>9})  =  X-({ext})   K-level {ext.klevel()}")

print()
print("=== chart atlas for (1,2;1,1,1) ===")
for entry in atlas_report(WeightSequence.parse("1,2;1,1,1")):
    tag = "smooth" if entry.chart.is_trivial() else "SINGULAR"
    print(f"  {entry.label():42} {tag:9} small={entry.small}")
print("The one singular point of X- is the half-point 1/2(1,1,1,1); X+ is")
print("smooth, and Y carries a surface of transverse A_1 points.")
