"""
Ternary eigenvectors on cycles and trees
========================================

Walk through the small catalog: which cycles carry eigenvectors with
entries in {-1, 0, 1}, and what the certificates on trees look like.
"""

from trivalent import (
    classify,
    cycle_graph,
    decompose,
    describe,
    equal_links,
    format_valuation,
    full_spectrum,
    gen_p2_tree,
    gen_star_tree,
    path_graph,
)

# Cycles: print every eigenvalue found, split into certificates with and
# without equal links (edges whose ends carry the same value).
print("n   equal-link-free          with equal links")
for n in range(3, 13):
    res = full_spectrum(cycle_graph(n))
    free = sorted({(c.lam, c.valence[0]) for c in res if not equal_links(c)})
    linked = sorted({(c.lam, c.valence[0]) for c in res if equal_links(c)})
    print(f"{n:<3} {str(free):<24} {linked}")

# C6 at lambda = 1: two soft stars P3 closed into a ring by equal links.
for c in full_spectrum(cycle_graph(6)):
    if c.lam == 1:
        print("C6 lambda=1:", format_valuation(c.valuation))

# Trees: chains P2 joined by equal links give lambda = 2 ...
p2 = gen_p2_tree(4, wiring="random", seed=5)
print("\nP2 tree:", p2)
for line in describe(decompose(p2)):
    print("   ", line)

# ... and soft stars joined by equal links give lambda = 1.
stars = gen_star_tree([1, 1, 2])
print("star tree:", stars)
for line in describe(decompose(stars)):
    print("   ", line)

# The recognizer explains each certificate with a catalog clause.
rep = classify(path_graph(6), enumerate_all=True)
for f in rep.found:
    print(f"P6 {format_valuation(f.certificate.valuation)} lambda={f.lam}: {f.trace}")
