"""Integration tests package - the CLI, the HTTP API and end-to-end checks."""
