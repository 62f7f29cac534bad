#!/usr/bin/env python3
"""Patterns, tableaux, and characters computed two independent ways.

A triangular interlacing pattern is the same data as a semi-standard
tableau; summing a monomial over all patterns of a fixed shape gives a
character, and the same character comes out of a determinant of complete
homogeneous symmetric functions.  This script walks through both routes.
"""

from lppqs import (
    Partition,
    character_jt,
    character_tab,
    enumerate_patterns,
    gt_type,
    pattern_to_tableau,
)

lam = Partition([2, 1])

print("Shape:", lam)
print()
print("All height-2 patterns of that shape, with their tableaux and types:")
for z in enumerate_patterns("ordinary", 2, lam):
    t = pattern_to_tableau(z)
    print(f"  rows {list(map(list, z.rows))}  type {gt_type(z)}  tableau {t!r}")

print()
print("Generating series over those patterns (tableau route):")
tab = character_tab("schur", lam, 2)
print("  ", tab.canonical_text())
print("Determinant route gives the same polynomial:")
det = character_jt("schur", lam, 2)
print("  ", det.canonical_text())
assert det == tab

print()
print("The symplectic character of shape (1) with one variable pair:")
sp = character_jt("symplectic", Partition([1]), 1)
print("  ", sp.canonical_text())
print("Its two monomials match the two height-2 half patterns:")
for z in enumerate_patterns("symplectic", 2, Partition([1])):
    print("  rows", list(map(list, z.rows)))

print()
print("Odd orthogonal tableaux allow a top symbol that may stack in a")
print("column but never repeats in a row.  For shape (1,1) and two letters:")
oots = list(enumerate_patterns("odd_orthogonal", 4, Partition([1, 1])))
for t in oots:
    print("  ", repr(t))
count = character_jt("odd_orthogonal", Partition([1, 1]), 2).specialize([1, 1])
print(f"count = {len(oots)}, determinant evaluated at all ones = {count}")
assert len(oots) == count

print()
print("Characters are symmetric under permuting the variables (and for the")
print("barred families, under inverting any variable):")
so = character_jt("odd_orthogonal", Partition([2, 1]), 2)
assert so.invert_variable(0) == so
assert so.invert_variable(1) == so
print("  checked for the odd orthogonal character of shape (2,1).")
