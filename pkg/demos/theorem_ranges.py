"""Where the computed lower bound reaches v(G).

For SO+(m,n) and SU(m,n) the bound meets v(G) for m up to a quadratic in n;
past that the parabolic with Pi_Q = {} (or a short interval) takes over.

    python demos/theorem_ranges.py
"""

from liebounds.bounds import default_grid, theorem_range

for family in ("SOplus", "SU"):
    grid = [p for p in default_grid(family, 16) if p[1] <= 8]
    hits = theorem_range(family, grid)
    print(family)
    for n in range(2, 9):
        ms = [m for m, k in hits if k == n]
        if ms:
            print(f"  n={n}: m in {min(ms)}..{max(ms)}")
    print()

print("SL(n,H):", [n for (n,) in theorem_range("SL_H", [(n,) for n in range(3, 12)])])
print("SO*(2n):", [n for (n,) in theorem_range("SOstar", [(n,) for n in range(4, 20)])])
