"""Segmented sieves producing exact census tables over n <= x."""
