"""Seeded Monte Carlo ensembles over G(n, p) with random initial
strategies, threshold sweeps over the density correction omega and the
statistics of blocking stars and of the initial strategy skew.

Every trial derives its seed from the ensemble base seed, so an
ensemble is reproduced exactly by its recorded configuration.

"""
