"""Unit tests package - models, schemas, services and config."""
