from toricfill import (cyclic_closure, classify_linear_boundary, rays_eq1,
                       gluing_decomposition)
from toricfill.src._helper.exceptions import EndEdgesNotParallel

# rays coincide, yet the ends cannot be plumbed
weights = (1, 1, 0, 0)
print('rays', rays_eq1(weights), classify_linear_boundary(weights).describe())
try:
    cyclic_closure(weights)
except EndEdgesNotParallel as e:
    print('closure fails:', e)

for weights in ((0, 0, 0, 0, 0), (1, 0, -1, 0, 0), (3, 0, -3, 0, 0, 0, 0, 0, 0)):
    closure = cyclic_closure(weights)
    print(closure.graph, 'N =', closure.N, 'lengths', closure.image.lengths)

dec = gluing_decomposition((-1, 2, -3, -4))
print([str(p) for p in dec.pieces], dec.glued_rays())
