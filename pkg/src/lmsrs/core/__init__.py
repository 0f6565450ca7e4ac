"""Core: words, alphabets, rewrite systems and leftmost-largest rewriting."""
