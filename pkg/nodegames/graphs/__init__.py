"""Graph representation for interacting node systems. A graph is stored
in compressed sparse row form: an offsets array of length n + 1 and a
flat array of neighbours, sorted ascending within each vertex.

The sub-package also samples the binomial random graph G(n, p), finds
connected components and splits vertices into high and low degree sets.

"""
