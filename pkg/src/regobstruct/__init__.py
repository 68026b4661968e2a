"""regobstruct: homological obstruction computations for regular embeddings of graphs.

Independence complexes of graphs, embedded homology of hyper(di)graphs,
vectorial (directed) matroids over exact fields, and explicit verification
of the projection / Mayer-Vietoris / Kunneth obstruction diagrams.
"""

__version__ = "0.1.0"
