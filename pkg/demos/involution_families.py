"""Tour of the square-root families of I2 and -I2.

Run:  python demos/involution_families.py
"""

import invgeo as ig

I2 = ig.Mat2.identity()

print("=== the scalar and triangular families ===")
for family in [
    ig.RootFamily(ig.RootTag.IDENTITY),
    ig.RootFamily(ig.RootTag.NEG_IDENTITY),
    ig.RootFamily(ig.RootTag.UPPER_B_PLUS_MINUS, b=5.0),
    ig.RootFamily(ig.RootTag.UPPER_B_MINUS_PLUS, b=5.0),
    ig.RootFamily(ig.RootTag.LOWER_C_PLUS_MINUS, c=-2.0),
    ig.RootFamily(ig.RootTag.LOWER_C_MINUS_PLUS, c=-2.0),
]:
    m = ig.make_case_root(family)
    print(f"{family.tag.value:22s} {m.entries()}  residual {(m @ m).max_diff(I2):.1e}")

print()
print("=== the two-parameter general family [[a, b], [(1-a^2)/b, -a]] ===")
for a, b in [(0.0, 1.0), (3.0, 2.0), (0.5, -0.25)]:
    m = ig.make_general_root(a, b)
    fam = ig.classify_involution(m)
    print(f"a={a:5.2f} b={b:5.2f} -> {m.entries()}  classified {fam.to_json_dict()}")

print()
print("=== roots of -I2: [[a, b], [-(1+a^2)/b, -a]] ===")
for a, b in [(0.0, 1.0), (1.0, 2.0)]:
    m = ig.make_skew_root(a, b)
    print(f"a={a:4.1f} b={b:4.1f} -> {m.entries()}  squares to {(m @ m).entries()}")

print()
print("=== every root is a plane transformation that undoes itself ===")
swap = ig.Mat2(0, 1, 1, 0)
print("orbit of (1, 0) under the swap map:",
      [(p.x, p.y) for p in ig.orbit(swap, ig.Vec2(1, 0), 2)])
quarter_turn = ig.make_skew_root(0, 1)
print("orbit of (1, 0) under a root of -I2 (period 4):",
      [(p.x, p.y) for p in ig.orbit(quarter_turn, ig.Vec2(1, 0), 4)])

print()
print("=== factorizations into elementary transformations ===")
dec = ig.decompose_case(ig.RootFamily(ig.RootTag.UPPER_B_PLUS_MINUS, b=3.0))
print("[[1,3],[0,-1]] =", " * ".join(f.kind.value for f in dec.factors))

general = ig.make_general_root(0.0, 2.0)
dec = ig.decompose_general(general)
print(f"general(0, 2) = "
      + " * ".join(f"{f.kind.value}({f.param:.3f})" if f.param is not None else f.kind.value
                   for f in dec.factors)
      + f"  +  {dec.additive_part.kind.value}({dec.additive_part.param:.3f})")
print("recomposition residual:", dec.recompose().max_diff(general))

print()
print("=== a seeded sample of involutions (all residuals near machine eps) ===")
sampled = ig.sample_involutions(5, seed=0)
worst = max((m @ m).max_diff(I2) for m in sampled)
print(f"worst residual over 5 samples: {worst:.2e}")
