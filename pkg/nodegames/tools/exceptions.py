"""Exceptions raised by the nodegames package. Outcomes of a simulation
such as a missing cycle or a non unanimous trace are returned as values
and never raised

"""


class NodeGamesError(Exception):
    """Base class for every error raised by nodegames"""


class ParameterError(NodeGamesError, ValueError):
    """An argument is outside the range an operation accepts"""


class ParseError(NodeGamesError, ValueError):
    """A literal, edge list or JSON document could not be parsed"""


class UnsupportedError(NodeGamesError):
    """The requested operation has no meaning for the given game"""


class ConfigError(NodeGamesError):
    """An experiment configuration failed validation

    Attributes
    ----------
    problems: list
        A list of ``(line, message)`` tuples. ``line`` is the 1-based
        line of the configuration file the problem was found on, or
        None when the problem is not tied to a single line

    """
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(
                message if line is None else "line {}: {}".format(line, message)
                for line, message in self.problems))
