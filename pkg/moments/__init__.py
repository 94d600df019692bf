"""Generalized one-dimensional moment problems over Sheffer polynomial families."""
