"""Corpora, theorem suites, counterexample search, reports and the CLI."""
