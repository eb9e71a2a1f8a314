""" Exact Bernoulli numbers """

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ramanujan_psi.errors import RamanujanPsiError

LOG = logging.getLogger(__name__)

# exact rationals are stored reduced with a positive denominator
BigRational = Fraction


class BernoulliError(RamanujanPsiError):
    """ Custom errors for Bernoulli tables """
    pass


class BernoulliTable:
    """ B_0 .. B_max_index as exact rationals, immutable after construction """

    __slots__ = ("_max_index", "_values")

    def __init__(self, max_index, values):
        """
        Initialize table from precomputed values
        :param max_index: largest index held
        :param values: sequence of Fractions indexed 0..max_index
        """
        if len(values) != max_index + 1:
            raise BernoulliError("Expected %d values, got %d" % (max_index + 1, len(values)))
        object.__setattr__(self, "_max_index", max_index)
        object.__setattr__(self, "_values", tuple(values))

    def __setattr__(self, key, value):
        raise AttributeError("BernoulliTable is immutable")

    def __repr__(self):
        return "BernoulliTable({})".format(self._max_index)

    def __len__(self):
        return len(self._values)

    def __getitem__(self, index):
        return self._values[index]

    @property
    def max_index(self):
        """ Largest index held """
        return self._max_index

    @property
    def values(self):
        """ All values as a tuple """
        return self._values

    def require(self, index):
        """
        Bail out unless the table reaches index
        :param index: highest index the caller needs
        :return:
        """
        if index > self._max_index:
            raise BernoulliError("Table holds B_0..B_%d, B_%d required"
                                 % (self._max_index, index))


def build_bernoulli_table(max_index):
    """
    Build B_0..B_max_index from sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1
    :param max_index: even integer >= 0
    :return: BernoulliTable
    """
    if isinstance(max_index, bool) or not isinstance(max_index, int):
        raise BernoulliError("max_index must be an integer: %r" % (max_index,))
    if max_index < 0 or max_index % 2:
        raise BernoulliError("max_index must be even and non-negative: %d" % max_index)

    values = [Fraction(1)]
    for n in range(1, max_index + 1):
        if n >= 3 and n % 2:
            values.append(Fraction(0))
            continue
        acc = sum(comb(n + 1, k) * values[k] for k in range(n))
        values.append(-acc / (n + 1))

    LOG.debug("Built Bernoulli table up to B_%d", max_index)
    return BernoulliTable(max_index, values)


def bernoulli_over_factorial(table, index):
    """
    Return B_index / index! exactly
    :type table: BernoulliTable
    :param table: Bernoulli table
    :param index: 0 <= index <= table.max_index
    :return: Fraction
    """
    if index < 0 or index > table.max_index:
        raise BernoulliError("Index %d outside 0..%d" % (index, table.max_index))
    return table[index] / factorial(index)


def paired_bernoulli_sum(table, order, alpha=1, beta=1):
    """
    Return sum_{j=0}^{order+1} (-1)^(j+1) (2j-1) a^(order+1-j) b^j
    B_2j/(2j)! B_(2order+2-2j)/(2order+2-2j)!

    With alpha = beta = 1 this is the exact rational of the odd zeta formula.
    Float weights are taken at their exact binary value, so the sum stays a
    Fraction and is rounded only by the caller.
    :param table: Bernoulli table reaching 2*order+2
    :param order: N >= 0
    :param alpha: weight of the first factor
    :param beta: weight of the second factor
    :return: Fraction
    """
    table.require(2 * order + 2)
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    total = Fraction(0)
    for j in range(order + 2):
        coeff = (-1) ** (j + 1) * (2 * j - 1) \
            * bernoulli_over_factorial(table, 2 * j) \
            * bernoulli_over_factorial(table, 2 * order + 2 - 2 * j)
        total += coeff * alpha ** (order + 1 - j) * beta ** j
    return total


@lru_cache(maxsize=None)
def shared_table(max_index):
    """
    Return a process-wide table; tables are immutable so sharing is safe
    :param max_index: even integer >= 0
    :return: BernoulliTable
    """
    return build_bernoulli_table(max_index)
