"""Reconstruction of interval graphs from their decks."""
