"""Weighted Pascal triangles and the three ways to count compositions.

Run: python3 demos/01_triangle.py
"""
from extbinom import (
    c_sequence,
    count_by_enumeration,
    ext_binom,
    ext_binom_by_partitions,
    from_table,
    parse,
    triangle,
)

# Part size 0 comes in 5 colours, size 2 in 2 colours, size 3 in one.
f = from_table({0: 5, 2: 2, 3: 1})
print(f"triangle for {f}:")
for k, row in enumerate(triangle(f, 3, 9).dense()):
    print(f"  k={k}: " + " ".join(str(v) for v in row))

# The same coefficient, three independent ways.
g = parse("table:1=1,2=1,3=1,9=3")
paths = {
    "enumeration": count_by_enumeration(15, 4, g),
    "rows": triangle(g, 4, 15).value(4, 15),
    "partitions": ext_binom_by_partitions(4, 15, g),
    "power": ext_binom(4, 15, g),
}
print(f"\nweighted compositions of 15 into 4 parts under {g}:")
for name, value in paths.items():
    print(f"  {name:12s} {value}")

# Large k is cheap on the power path.
h = parse("table:0=3,1=2,2=1")
print(f"\n<13,14> under {h} = {ext_binom(13, 14, h)}")

# Without a zero part, summing over every k gives a finite count c(n).
c = c_sequence(parse("table:1=1,2=3,4=2"), 20)
print("\nc(n) for f(1)=1, f(2)=3, f(4)=2:")
print("  " + ", ".join(str(c[n]) for n in (5, 10, 15, 20)) + "  (n = 5, 10, 15, 20)")
