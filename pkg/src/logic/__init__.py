"""Formulas, simulator, pipeline and benchmark logic."""
