"""mplred: depth reduction of multiple logarithms, verified at symbol level.

The package reduces the weight-n multiple logarithm
I_{1,...,1}(x_1,...,x_n) to multiple polylogarithms of depth at most
floor(n/2), and ships a symbol calculus (with projectors and a cobracket)
that machine-checks every rewriting step modulo products.
"""

from .algebra import (
    LinearCombination,
    ShufflePermutation,
    Word,
    enumerate_shuffles,
    permutation_sign,
    shuffle_sign_sum,
    shuffle_words,
)

__version__ = "0.1.0"

__all__ = [
    "LinearCombination",
    "ShufflePermutation",
    "Word",
    "enumerate_shuffles",
    "permutation_sign",
    "shuffle_sign_sum",
    "shuffle_words",
    "__version__",
]
