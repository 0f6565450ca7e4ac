"""Matcher: the Aho-Corasick automaton over left-hand sides."""
