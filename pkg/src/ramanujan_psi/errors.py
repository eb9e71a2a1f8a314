""" Base error class """


class RamanujanPsiError(Exception):
    """ Root of all errors raised by ramanujan-psi """
    pass
