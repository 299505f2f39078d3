"""
Bicyclic graphs and cacti
=========================

Build the bicyclic shapes that carry equal-link-free certificates, check
that the recognizer finds them again, then glue cycles at soft vertices
into a cactus.
"""

from trivalent import (
    Graph,
    bicyclic_prediction,
    bicyclic_shape,
    decompose,
    describe,
    format_valuation,
    gen_B1,
    gen_B3,
    gen_cactus,
    gen_diamond,
    recognize,
)

for cert in (gen_B1(4, 8), gen_B1(6, 6, lam=2), gen_B1(6, 6, lam=3), gen_B3([9, 6, 3]),
             gen_B3([4, 3, 3]), gen_diamond()):
    shape = bicyclic_shape(cert.graph)
    rep = recognize(cert.graph)
    print(f"{str(shape):<12} lambda={cert.lam}  predicted {sorted(bicyclic_prediction(shape))}"
          f"  recognized {rep.lambdas()}")

# Shapes outside the table still have certificates once soft extensions are
# allowed: B1(3,4) hangs an all-zero cycle on the shared vertex.
b34 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 0)])
rep = recognize(b34, enumerate_all=True)
print(f"\n{bicyclic_shape(b34)}: predicted {sorted(bicyclic_prediction(bicyclic_shape(b34)))}")
for f in rep.found:
    print(f"   {format_valuation(f.certificate.valuation)} lambda={f.lam}: {f.trace}")

# A cactus: C8 and C4 glued at a soft vertex, plus a C4 on another soft vertex.
cactus = gen_cactus([8, 4, 4], glue=[(0, 0, 1, 0), (0, 4, 2, 2)])
print("\ncactus:", cactus)
for line in describe(decompose(cactus)):
    print("   ", line)
