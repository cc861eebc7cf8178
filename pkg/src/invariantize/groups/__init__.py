"""Finite groups as validated Cayley tables, with subgroup machinery."""
