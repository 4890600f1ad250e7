"""Irregulators of graphs: exact search, FPT solvers and reduction generators."""
