"""Command-line interface: system files, reports and commands."""
