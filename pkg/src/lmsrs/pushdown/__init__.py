"""Pushdown: the collapse machine, its grammar and the language decision."""
