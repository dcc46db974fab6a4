"""Naive reference implementations used to check everything else."""
