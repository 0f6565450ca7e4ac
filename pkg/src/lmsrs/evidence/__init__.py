"""Evidence: termination evidence providers."""
