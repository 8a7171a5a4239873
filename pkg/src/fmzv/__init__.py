"""Finite multiple zeta values in characteristic 0 and p, together with the
poly-Bernoulli (and poly-Bernoulli-Carlitz) numbers that compute them."""
__version__ = "0.1.0"
