"""cliquelab: a desk-scale workbench for cliques in G(n,p) random graphs.

Subpackages cover graph sampling and I/O (graphs), exact clique search
(cliques, kernels), disjoint multi-clique packing (multicliques), the
closed-form intersection-type calculus behind the second-moment bound
(analytic, scalars), sequential topological complexity of the associated
flag-complex spaces (tcs), and reproducible Monte Carlo experiments
(montecarlo).  The command-line surface lives in cli.
"""

__version__ = "0.1.0"
