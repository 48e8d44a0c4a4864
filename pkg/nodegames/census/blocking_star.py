"""The BlockingStar and StarConfiguration classes

A blocking star is a centre vertex of degree ell + k whose neighbours
are ell blocking leaves of degree one and k connectors of any degree

"""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class BlockingStar:
    """An (ell, k)-blocking star embedded in a graph

    Attributes
    ----------
    center: int
        The centre vertex, of degree ell + k
    blocking_leaves: tuple
        The ell neighbours of the centre that have degree one
    connectors: tuple
        The k remaining neighbours of the centre

    """
    center: int
    blocking_leaves: Tuple[int, ...]
    connectors: Tuple[int, ...]

    @property
    def ell(self):
        """The number of blocking leaves"""
        return len(self.blocking_leaves)

    @property
    def k(self):
        """The number of connectors"""
        return len(self.connectors)

    def vertices(self):
        """Lists the centre, the leaves and the connectors in that order"""
        return (self.center,) + self.blocking_leaves + self.connectors

    def to_dict(self):
        """A JSON friendly form with the keys center, leaves and connectors"""
        return {"center": self.center, "leaves": list(self.blocking_leaves),
                "connectors": list(self.connectors)}


@dataclass(frozen=True)
class StarConfiguration:
    """The (i, j)-configuration of a blocking star: every blocking leaf
    plays i and the centre plays j"""
    leaf_strategy: int
    center_strategy: int

    def as_tuple(self):
        """Retrieves the configuration as a pair

        Returns
        -------
        int, int
            The leaf strategy and the centre strategy

        """
        return self.leaf_strategy, self.center_strategy

    def describe(self):
        """Formats the configuration as (i,j), for example (1,0)"""
        return "({},{})".format(self.leaf_strategy, self.center_strategy)
