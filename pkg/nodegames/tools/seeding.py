"""Seed derivation for reproducible Monte Carlo ensembles.

Every random draw in nodegames comes from a numpy ``Generator`` backed by
the PCG64 bit generator. A trial seed is derived from the ensemble base
seed with ``splitmix64(base_seed ^ trial)``; splitmix64 is a bijection on
64-bit words so distinct trial indices always get distinct seeds.

"""

import numpy as np

MASK_64 = (1 << 64) - 1


def splitmix64(value):
    """Applies the splitmix64 finaliser to a 64-bit word

    Parameters
    ----------
    value: int
        The word to mix. Only the low 64 bits are used

    Returns
    -------
    int
        The mixed 64-bit word

    """
    z = (value + 0x9E3779B97F4A7C15) & MASK_64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK_64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK_64
    return z ^ (z >> 31)


def trial_seed(base_seed, trial):
    """Derives the seed of one trial of an ensemble

    Parameters
    ----------
    base_seed: int
        The seed recorded for the whole ensemble
    trial: int
        The 0-based index of the trial

    Returns
    -------
    int
        A 64-bit seed for the trial

    """
    return splitmix64((base_seed ^ trial) & MASK_64)


def make_generator(seed):
    """Creates the seeded generator used throughout nodegames

    Parameters
    ----------
    seed: int or numpy.random.SeedSequence
        A 64-bit seed, or a seed sequence spawned from one

    Returns
    -------
    numpy.random.Generator
        A generator backed by PCG64

    """
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed & MASK_64)
    return np.random.Generator(np.random.PCG64(seed))


def trial_generators(seed):
    """Splits a trial seed into the two independent streams a trial uses

    Parameters
    ----------
    seed: int
        The trial seed, see trial_seed

    Returns
    -------
    numpy.random.Generator, numpy.random.Generator
        The generator for sampling the graph and the generator for
        sampling the initial strategies

    """
    graph_sequence, state_sequence = np.random.SeedSequence(seed & MASK_64).spawn(2)
    return make_generator(graph_sequence), make_generator(state_sequence)
