"""
Growing certificates by surgery
===============================

Equal links can be added or removed and zero-valued graphs can be hung on
soft vertices without changing the eigenvalue. This script composes a
larger certificate step by step and then takes it apart again.
"""

from trivalent import (
    Graph,
    cycle_graph,
    decompose,
    describe,
    gen_compose,
    gen_cycle,
    reassemble,
    verify,
)

c6, c3 = gen_cycle("c3k", 2), gen_cycle("c3k", 1)
tree = Graph.from_edges(3, [(0, 1), (1, 2)])

comp = gen_compose(c6, [
    ("union", c3),                       # C6 and C3 side by side
    ("link", 0, 6),                      # equal link between two +1 vertices
    ("soft", tree, [(1, 4)]),            # a path of zeros on a soft vertex
    ("soft", cycle_graph(4), [(0, 7)]),  # an all-zero C4 on another one
])
cert = comp.certificate
print(cert)
print("families:", sorted(k.value for k in comp.family.kinds))
print("steps:", "; ".join(comp.log))
print("re-verified lambda:", verify(cert.graph, cert.valuation))

dec = decompose(cert)
for line in describe(dec):
    print("   ", line)
print("equal links removed:", dec.links)
print("reassembles exactly:", reassemble(dec) == cert.graph)

# Random compositions that never close a new cycle: a link may only join
# two components, so the graph stays a cactus.
for seed in range(3):
    out = gen_compose(gen_cycle("c4k", 2), [("union", gen_cycle("c4k", 1)), ("random_link",),
                                           ("random_soft", 3)], seed=seed, keep_cyclomatic=True)
    print(seed, out.certificate, "|", ", ".join(out.log))
