"""Oracle: brute-force ground truth for the decision procedures."""
