"""Relation spaces, Poisson limits and functional (shuffle) realizations."""
