"""Bundled static datasets (published tables, output schema docs)."""
