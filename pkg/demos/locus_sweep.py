"""Sweep the probe line across the plane and watch the image line respond.

The image abscissa is an affine function of the probe abscissa and ignores
q entirely. Its unique fixed point is the radical axis of the two circles,
and probe lines through B or C pinch the whole image line down to the
single point A or D.
"""

from fractions import Fraction

from bicircle import (
    INFINITY,
    ProbePoint,
    ScenarioConfig,
    classify_case,
    derive,
    image_closed_form,
    locus_x,
)

cfg = ScenarioConfig(a=2, r1=3, r2=2)
scene = derive(cfg)

print("probe line x = p        image line x = p'")
for p in (-5, -2, Fraction(-1, 2), 0, Fraction(5, 8), 1, 2, Fraction(7, 3)):
    flags = ", ".join(f.value for f in classify_case(cfg, ProbePoint(p, 1)))
    print(f"  p = {str(p):>4}   ->   p' = {str(locus_x(cfg, p)):>6}   [{flags}]")

rx = scene.radical_axis_x
print("\nfixed point check: locus_x at the radical axis", rx, "->", locus_x(cfg, rx))

print("\ncollapse: every probe on x = 0 (through B) maps to A:")
for q in (1, -3, Fraction(1, 9)):
    print("  q =", q, "->", image_closed_form(cfg, ProbePoint(0, q)).point)

tangent = ScenarioConfig(a=2, r1=2, r2=2)
print("\ntangent circles have no finite image line:", locus_x(tangent, 5) is INFINITY)
