"""End-to-end tests for the qmetric command line."""
