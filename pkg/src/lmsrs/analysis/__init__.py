"""Analysis: termination certificates and the LM-condition checks."""
