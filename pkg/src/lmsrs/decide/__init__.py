"""Decide: subterm collapse, cap queries and the LM-system verdict."""
