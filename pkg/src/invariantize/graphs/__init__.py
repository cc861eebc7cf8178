"""Finite multigraphs as the edge-removal instance of the engine."""
