"""
Regular bipartite graphs
========================

Bivalent certificates live on regular bipartite graphs. Split the edges
into perfect matchings, look at the cyclomatic numbers that can occur and
meet a 3-regular bipartite graph without a Hamiltonian cycle.
"""

from trivalent import (
    achievable_c,
    gen_counterexample,
    gen_regular_bipartite,
    hamiltonian_cycle,
    is_hamiltonian,
    perfect_matching_partition,
    to_graph6,
)

# An even cycle with alternate matchings added: lambda = 2 * degree.
for k, l in ((4, 0), (3, 1), (4, 2), (6, 3)):
    cert = gen_regular_bipartite(k, l)
    g = cert.graph
    print(f"C{2 * k} + {l} matchings: degree {2 + l}, lambda {cert.lam}, "
          f"c = {g.m - g.n + 1}, Hamiltonian {is_hamiltonian(g)}")

part = perfect_matching_partition(gen_regular_bipartite(4, 2).graph)
for i, m in enumerate(part.matchings):
    print(f"matching {i}: {m}")

# Which cyclomatic numbers does a connected regular bipartite graph allow?
print("\nc : smallest (n, d)")
for c in range(1, 13):
    print(f"{c:>2}: {achievable_c(c)}")

g = gen_counterexample()
print("\ncounterexample", to_graph6(g), "degrees", sorted(set(g.degrees)))
print("Hamiltonian cycle:", hamiltonian_cycle(g))
pm = perfect_matching_partition(g)
print("two matchings always form a cycle cover:", all(pm.cycle_cover(i, j) for i in range(3) for j in range(i + 1, 3)))
