import matplotlib.pyplot as pyplot

from toricfill import PlumbingGraph, edge_lengths, cyclic_closure, moment_cone, normal_chain
from toricfill.cli import render_svg

g = PlumbingGraph.linear(0, 0, 0, 0, 0)
image = edge_lengths(normal_chain(g))
cone = moment_cone(image.chain)
print('rays', cone.R1, cone.R2, 'half-turns', cone.angle.half_turns)
render_svg(image, 'moment_linear.svg')

closure = cyclic_closure(g)
render_svg(closure.image, 'moment_cyclic.svg')

# quick look at the same polygon without the SVG decorations
xs = [float(p[0]) for p in closure.image.vertices]
ys = [float(p[1]) for p in closure.image.vertices]
pyplot.fill(xs, ys, facecolor='0.9', edgecolor='k')
pyplot.gca().set_aspect('equal')
pyplot.title(closure.graph.unparse())
pyplot.show()
